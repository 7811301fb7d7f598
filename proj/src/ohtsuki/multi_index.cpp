#include "zhs/ohtsuki/multi_index.hpp"

#include <numeric>

namespace zhs::ohtsuki {

MultiIndex::MultiIndex(std::vector<int> entries) : v_(std::move(entries)) {
  for (int e : v_)
    if (e < 0) throw std::invalid_argument("multi-index entries must be non-negative");
}

MultiIndex MultiIndex::constant(std::size_t mu, int x) { return MultiIndex(std::vector<int>(mu, x)); }

int MultiIndex::norm() const { return std::accumulate(v_.begin(), v_.end(), 0); }

namespace {

void require_same_length(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("multi-index lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

}  // namespace

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  require_same_length(a, b);
  std::vector<int> out(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) out[p] = a[p] + b[p];
  return MultiIndex(std::move(out));
}

MultiIndex operator*(const MultiIndex& a, const MultiIndex& b) {
  require_same_length(a, b);
  std::vector<int> out(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) out[p] = a[p] * b[p];
  return MultiIndex(std::move(out));
}

MultiIndex operator*(int x, const MultiIndex& k) {
  std::vector<int> out(k.size());
  for (std::size_t p = 0; p < k.size(); ++p) out[p] = x * k[p];
  return MultiIndex(std::move(out));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t p = 0; p < v_.size(); ++p) s += (p ? "," : "") + std::to_string(v_[p]);
  return s + ")";
}

std::vector<MultiIndex> box(const MultiIndex& lo, const MultiIndex& hi) {
  require_same_length(lo, hi);
  std::vector<MultiIndex> out;
  for (std::size_t p = 0; p < lo.size(); ++p)
    if (lo[p] > hi[p]) return out;
  std::vector<int> cur = lo.entries();
  while (true) {
    out.emplace_back(cur);
    std::size_t p = cur.size();
    while (p > 0) {
      --p;
      if (cur[p] < hi[p]) {
        ++cur[p];
        for (std::size_t r = p + 1; r < cur.size(); ++r) cur[r] = lo[r];
        break;
      }
      if (p == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

}  // namespace zhs::ohtsuki
