#include "zhs/ohtsuki/lambda.hpp"

#include <bit>
#include <exception>

#include <omp.h>

#include "zhs/links/combination.hpp"

namespace zhs::ohtsuki {

using algebra::power;
using algebra::sign_power;
using links::FramedLinkDiagram;

SurgeryPresentation::SurgeryPresentation(FramedLinkDiagram link) : link_(std::move(link)) {
  links::require_valid(link_);
  if (!links::is_algebraically_split(link_)) throw NotAlgebraicallySplit("link has a nonzero linking number");
  for (std::size_t p = 0; p < link_.size(); ++p) {
    if (link_.framings[p] != 1 && link_.framings[p] != -1) {
      throw BadFraming("component " + std::to_string(p) + " has framing " + std::to_string(link_.framings[p]) +
                       "; surgery presentations need framings +-1");
    }
  }
}

namespace {

void require_lengths(const std::vector<int>& framings, const MultiIndex& i, const MultiIndex& j) {
  if (i.size() != framings.size() || j.size() != framings.size()) {
    throw LengthMismatch("multi-index length differs from the component count");
  }
}

// sum over m (m_p = 0 where i_p = 0, sum i_p m_p = budget) of prod nu^{i_p}
Rational nu_sum(const std::vector<int>& f, const MultiIndex& i, const MultiIndex& j, std::size_t p, int budget,
                const NuTable& table) {
  if (p == f.size()) return budget == 0 ? Rational(1) : Rational(0);
  if (i[p] == 0) return nu_sum(f, i, j, p + 1, budget, table);
  Rational total = 0;
  for (int m = 0; i[p] * m <= budget; ++m) {
    const Rational rest = nu_sum(f, i, j, p + 1, budget - i[p] * m, table);
    if (rest == 0) continue;
    total += power(table.lookup(f[p], j[p], m), i[p]) * rest;
  }
  return total;
}

std::string cable_key(const FramedLinkDiagram& link, const MultiIndex& j, int l) {
  return links::canonical_key(link) + "#" + j.to_string() + "#" + std::to_string(l);
}

template <class Term, class Eval>
Rational parallel_sum(const std::vector<Term>& terms, bool parallel, Eval&& eval) {
  Rational total = 0;
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(terms.size());
#pragma omp parallel for schedule(dynamic) if (parallel && count > 1)
  for (std::int64_t t = 0; t < count; ++t) {
    Rational value;
    try {
      value = eval(terms[t]);
    } catch (...) {
#pragma omp critical(zhs_sum_error)
      if (!error) error = std::current_exception();
      continue;
    }
#pragma omp critical(zhs_sum_total)
    total += value;
  }
  if (error) std::rethrow_exception(error);
  return total;
}

struct PhiTerm {
  int l;
  MultiIndex j;
  Rational weight;
};

// sum_l sum_j phi_l(L^j) weight(j, l), dropping zero weights and (when pruning)
// cables with more than 3l components.
template <class Weight>
Rational phi_weighted_sum(const FramedLinkDiagram& link, int n, EvalContext& ctx, const LambdaOptions& options,
                          Weight&& weight) {
  const std::size_t mu = link.size();
  std::vector<PhiTerm> terms;
  for (int l = 1; l <= n; ++l) {
    for (const auto& j : box(MultiIndex::constant(mu, 0), MultiIndex::constant(mu, l))) {
      if (options.prune_by_component_count && j.norm() > 3 * l) continue;
      Rational w = weight(j, l);
      if (w != 0) terms.push_back({l, j, std::move(w)});
    }
  }
  return parallel_sum(terms, options.parallel,
                      [&](const PhiTerm& t) -> Rational { return t.weight * phi_of_cable(link, t.j, t.l, ctx); });
}

}  // namespace

Rational F_nl(const std::vector<int>& framings, const MultiIndex& i, const MultiIndex& j, int n, int l,
              const NuTable& table) {
  require_lengths(framings, i, j);
  if (l < 1 || l > n) throw std::invalid_argument("F_nl needs 1 <= l <= n");
  Rational sign = 1;
  for (std::size_t q = 0; q < framings.size(); ++q) sign *= power(Rational(-framings[q]), i[q]);
  return power(Rational(-2), -static_cast<long>(j.norm())) * sign * nu_sum(framings, i, j, 0, n - l, table);
}

Rational G_nl(const std::vector<int>& framings, const MultiIndex& j, int n, int l, const NuTable& table) {
  const std::size_t mu = framings.size();
  if (j.size() != mu) throw LengthMismatch("multi-index length differs from the component count");
  std::vector<int> lo(mu);
  for (std::size_t p = 0; p < mu; ++p) lo[p] = j[p] > 0 ? 1 : 0;
  Rational total = 0;
  for (const auto& i : box(MultiIndex(lo), MultiIndex::constant(mu, 1))) {
    total += sign_power(i.norm()) * F_nl(framings, i, j, n, l, table);
  }
  return total;
}

Rational phi_of_cable(const FramedLinkDiagram& link, const MultiIndex& j, int l, EvalContext& ctx) {
  return ctx.phi.get_or_compute(cable_key(link, j, l), [&] {
    const FramedLinkDiagram c = links::cable(link, j.entries());
    return jones::phi_i(c, static_cast<unsigned>(l), &ctx.skein);
  });
}

Rational lambda_n(const SurgeryPresentation& s, int n, const NuTable& table, EvalContext& ctx,
                  const LambdaOptions& options) {
  if (n < 1) throw std::invalid_argument("lambda_n needs n >= 1");
  const auto& link = s.link();
  const MultiIndex ones = MultiIndex::constant(link.size(), 1);
  return phi_weighted_sum(link, n, ctx, options,
                          [&](const MultiIndex& j, int l) { return F_nl(link.framings, ones, j, n, l, table); });
}

Rational finite_type_sum(const FramedLinkDiagram& link, int n, const NuTable& table, EvalContext& ctx,
                         const LambdaOptions& options) {
  const SurgeryPresentation whole(link);
  const std::string suffix = "#n=" + std::to_string(n) + "#nu=" + table.fingerprint() +
                             (options.prune_by_component_count ? "#pruned" : "#full");
  Rational total = 0;
  // Sublinks run one at a time; each lambda_n parallelizes over its own terms.
  for (const auto& [sign, sub] : links::sublink_terms(link, links::SignRule::ByKept)) {
    const Rational value = ctx.lambda.get_or_compute(links::canonical_key(sub) + suffix, [&] {
      return lambda_n(SurgeryPresentation(sub), n, table, ctx, options);
    });
    total += sign * value;
  }
  return total;
}

Rational finite_type_sum_via_G(const FramedLinkDiagram& link, int n, const NuTable& table, EvalContext& ctx,
                               const LambdaOptions& options) {
  const SurgeryPresentation s(link);
  return phi_weighted_sum(link, n, ctx, options,
                          [&](const MultiIndex& j, int l) { return G_nl(link.framings, j, n, l, table); });
}

Eq16Result check_eq16(const FramedLinkDiagram& link, int n, const NuTable& table, EvalContext& ctx,
                      const LambdaOptions& options) {
  if (static_cast<int>(link.size()) != 3 * n) throw std::invalid_argument("the identity needs exactly 3n components");
  Eq16Result r;
  r.alternating_sum = finite_type_sum(link, n, table, ctx, options);
  int f_L = 1;
  for (int f : link.framings) f_L *= f;
  r.predicted = sign_power(n) * f_L * phi_of_cable(link, MultiIndex::constant(link.size(), 1), n, ctx);
  return r;
}

}  // namespace zhs::ohtsuki
