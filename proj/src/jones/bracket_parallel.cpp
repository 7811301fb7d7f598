#include <bit>
#include <stdexcept>

#include <omp.h>

#include "zhs/jones/bracket.hpp"

namespace zhs::jones {

IntLaurent bracket_parallel(const links::FramedLinkDiagram& link) {
  const auto in = detail::prepare(link);
  const int c = static_cast<int>(in.crossings.size());
  if (c > 40) throw std::invalid_argument("state sum limited to 40 crossings");
  const int max_loops = in.arc_count + in.free_loops + 1;
  const auto states = static_cast<std::int64_t>(std::uint64_t{1} << c);
  std::vector<std::vector<std::int64_t>> hist(c + 1, std::vector<std::int64_t>(max_loops + 1, 0));

#pragma omp parallel
  {
    std::vector<std::vector<std::int64_t>> local(c + 1, std::vector<std::int64_t>(max_loops + 1, 0));
    std::vector<int> scratch;
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < states; ++s) {
      const auto state = static_cast<std::uint64_t>(s);
      ++local[c - std::popcount(state)][detail::count_loops(in, state, scratch)];
    }
#pragma omp critical
    for (int a = 0; a <= c; ++a)
      for (int l = 0; l <= max_loops; ++l) hist[a][l] += local[a][l];
  }
  return detail::assemble(hist, c);
}

}  // namespace zhs::jones
