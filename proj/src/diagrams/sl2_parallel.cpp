#include <omp.h>

#include "zhs/diagrams/sl2.hpp"

namespace zhs::diagrams::detail {

namespace {

struct Partial {
  std::vector<int> labels;
  std::int64_t weight;
};

// Extends a partial assignment from edge `depth` on, calling `leaf` for each
// complete assignment with nonzero weight. Stops early at zero factors.
template <class Leaf>
void descend(const Contraction& c, int depth, int stop, std::vector<int>& labels, std::int64_t weight, Leaf&& leaf) {
  if (depth == stop) {
    leaf(labels, weight);
    return;
  }
  const auto [h1, h2] = c.edge_ends[depth];
  for (const auto& ch : c.lie->edge_choices) {
    labels[h1] = ch.a;
    labels[h2] = ch.b;
    std::int64_t w = weight * ch.weight;
    for (int f : c.ready_after[depth]) {
      w *= factor(c, f, labels);
      if (w == 0) break;
    }
    if (w != 0) descend(c, depth + 1, stop, labels, w, leaf);
  }
}

}  // namespace

Rational contract_parallel(const Contraction& c) {
  const LieData& lie = *c.lie;
  std::int64_t base = 1;
  std::vector<int> labels(c.edge_of.size(), 0);
  for (int f : c.constant) base *= factor(c, f, labels);

  mpz_class total = 0;
  if (base != 0) {
    // Enough prefixes to keep every thread busy under dynamic scheduling.
    const std::size_t want = 8 * static_cast<std::size_t>(omp_get_max_threads());
    int split = 0;
    std::size_t count = 1;
    while (split < c.edge_count && count < want) {
      count *= lie.edge_choices.size();
      ++split;
    }
    std::vector<Partial> prefixes;
    descend(c, 0, split, labels, base,
            [&](const std::vector<int>& l, std::int64_t w) { prefixes.push_back({l, w}); });

    const long n = static_cast<long>(prefixes.size());
#pragma omp parallel
    {
      mpz_class local = 0;
#pragma omp for schedule(dynamic)
      for (long i = 0; i < n; ++i) {
        std::vector<int> l = prefixes[i].labels;
        descend(c, split, c.edge_count, l, prefixes[i].weight,
                [&](const std::vector<int>&, std::int64_t w) { local += mpz_class(static_cast<long>(w)); });
      }
#pragma omp critical(zhs_sl2_total)
      total += local;
    }
  }
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), static_cast<unsigned long>(lie.scale), static_cast<unsigned long>(c.edge_count));
  Rational out(total, denominator);
  out.canonicalize();
  return out;
}

}  // namespace zhs::diagrams::detail
