#include "zhs/diagrams/sl2.hpp"

namespace zhs::diagrams::detail {

Rational contract_serial(const Contraction& c) {
  const LieData& lie = *c.lie;
  const int nchoice = static_cast<int>(lie.edge_choices.size());
  const int nfactors = c.trivalent + static_cast<int>(c.loops.size());
  std::vector<int> choice(c.edge_count, 0);
  std::vector<int> labels(c.edge_of.size(), 0);

  mpz_class total = 0;
  while (true) {
    std::int64_t weight = 1;
    for (int k = 0; k < c.edge_count; ++k) {
      const auto& ch = lie.edge_choices[choice[k]];
      labels[c.edge_ends[k].first] = ch.a;
      labels[c.edge_ends[k].second] = ch.b;
      weight *= ch.weight;
    }
    for (int f = 0; f < nfactors; ++f) weight *= factor(c, f, labels);
    total += mpz_class(static_cast<long>(weight));

    int k = 0;
    while (k < c.edge_count && ++choice[k] == nchoice) choice[k++] = 0;
    if (k == c.edge_count) break;
  }
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), static_cast<unsigned long>(lie.scale), static_cast<unsigned long>(c.edge_count));
  Rational out(total, denominator);
  out.canonicalize();
  return out;
}

}  // namespace zhs::diagrams::detail
