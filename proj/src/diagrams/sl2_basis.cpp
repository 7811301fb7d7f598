#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zhs/diagrams/sl2.hpp"

namespace zhs::diagrams {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r{dim, std::vector<std::int64_t>(entries.size(), 0)};
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      const std::int64_t x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < dim; ++j) r.entries[i * dim + j] += x * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix r = *this;
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] -= o.entries[i];
  return r;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix r{dim, std::vector<std::int64_t>(dim * dim, 0)};
  for (int i = 0; i < dim; ++i) r.entries[i * dim + i] = 1;
  return r;
}

namespace {

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("trace form is degenerate on this basis");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational x = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= x * m[col][j];
        inv[r][j] -= x * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

LieData make_lie_data(std::vector<IntMatrix> basis) {
  LieData lie;
  lie.basis = std::move(basis);
  const int d = lie.dim();
  lie.metric.assign(d, std::vector<Rational>(d, 0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) lie.metric[a][b] = Rational((lie.basis[a] * lie.basis[b]).trace());
  lie.inverse_metric = invert(lie.metric);

  lie.structure.assign(d * d * d, 0);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const IntMatrix bracket = lie.basis[a] * lie.basis[b] - lie.basis[b] * lie.basis[a];
      for (int c = 0; c < d; ++c) lie.structure[(a * d + b) * d + c] = (bracket * lie.basis[c]).trace();
    }

  mpz_class scale = 1;
  for (const auto& row : lie.inverse_metric)
    for (const auto& x : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  lie.scale = scale.get_si();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Rational w = lie.inverse_metric[a][b] * lie.scale;
      if (w != 0) lie.edge_choices.push_back({a, b, w.get_num().get_si()});
    }
  return lie;
}

const LieData& sl2() {
  static const LieData lie = make_lie_data({
      IntMatrix{2, {0, 1, 0, 0}},   // e
      IntMatrix{2, {0, 0, 1, 0}},   // f
      IntMatrix{2, {1, 0, 0, -1}},  // h
  });
  return lie;
}

namespace detail {

Contraction prepare(const LieData& lie, const ChordDiagram& d) {
  require_valid(d);
  Contraction c;
  c.lie = &lie;
  c.trivalent = d.trivalent;
  for (const auto& loop : d.loops) {
    std::vector<int> halves;
    for (int leg : loop) halves.push_back(d.leg_half_edge(leg));
    c.loops.push_back(std::move(halves));
  }

  // Half-edges of every factor.
  std::vector<std::vector<int>> factor_halves;
  for (int v = 0; v < d.trivalent; ++v) factor_halves.push_back({3 * v, 3 * v + 1, 3 * v + 2});
  for (const auto& l : c.loops) factor_halves.push_back(l);

  // Assign edges factor by factor, smallest factors first, so that zero
  // factors (a loop with one leg, say) are seen as early as possible.
  std::vector<int> factor_order(factor_halves.size());
  std::iota(factor_order.begin(), factor_order.end(), 0);
  std::stable_sort(factor_order.begin(), factor_order.end(),
                   [&](int x, int y) { return factor_halves[x].size() < factor_halves[y].size(); });
  const int nh = static_cast<int>(d.mate.size());
  c.edge_of.assign(nh, -1);
  c.end_of.assign(nh, 0);
  auto add_edge = [&](int h) {
    if (c.edge_of[h] >= 0) return;
    const int m = d.mate[h];
    const int k = static_cast<int>(c.edge_ends.size());
    c.edge_ends.emplace_back(h, m);
    c.edge_of[h] = c.edge_of[m] = k;
    c.end_of[h] = 0;
    c.end_of[m] = 1;
  };
  for (int f : factor_order)
    for (int h : factor_halves[f]) add_edge(h);
  for (int h = 0; h < nh; ++h) add_edge(h);  // chords between legs are covered by loops already
  c.edge_count = static_cast<int>(c.edge_ends.size());

  c.ready_after.assign(c.edge_count, {});
  for (int f = 0; f < static_cast<int>(factor_halves.size()); ++f) {
    int last = -1;
    for (int h : factor_halves[f]) last = std::max(last, c.edge_of[h]);
    if (last < 0) {
      c.constant.push_back(f);
    } else {
      c.ready_after[last].push_back(f);
    }
  }
  return c;
}

std::int64_t factor(const Contraction& c, int index, const std::vector<int>& labels) {
  const LieData& lie = *c.lie;
  if (index < c.trivalent) return lie.f(labels[3 * index], labels[3 * index + 1], labels[3 * index + 2]);
  const auto& loop = c.loops[index - c.trivalent];
  if (loop.empty()) return lie.basis.front().dim;
  IntMatrix product = lie.basis[labels[loop.front()]];
  for (std::size_t k = 1; k < loop.size(); ++k) product = product * lie.basis[labels[loop[k]]];
  return product.trace();
}

}  // namespace detail

Rational contract(const LieData& lie, const ChordDiagram& d, WeightKernel kernel) {
  const detail::Contraction c = detail::prepare(lie, d);
  return kernel == WeightKernel::Serial ? detail::contract_serial(c) : detail::contract_parallel(c);
}

Rational sl2_weight(const ChordDiagram& d, WeightKernel kernel) { return contract(sl2(), d, kernel); }

Rational sl2_weight(const TrivalentGraph& g, WeightKernel kernel) { return contract(sl2(), as_diagram(g), kernel); }

Rational sl2_weight(const DiagramCombination& c, WeightKernel kernel) {
  Rational total = 0;
  for (const auto& [coef, d] : c.terms()) total += coef * sl2_weight(d, kernel);
  return total;
}

Rational sl2_weight(const GraphCombination& c, WeightKernel kernel) {
  Rational total = 0;
  for (const auto& [coef, g] : c.terms()) total += coef * sl2_weight(g, kernel);
  return total;
}

Rational Lambda_n(const TrivalentGraph& g, int n) {
  if (n < 1 || g.vertex_count() != 2 * n) throw InvalidGraph("Lambda_n needs a graph with 2n vertices");
  return algebra::sign_power(n) * sl2_weight(eta(g));
}

}  // namespace zhs::diagrams
