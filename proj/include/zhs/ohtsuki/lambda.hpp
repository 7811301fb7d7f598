#pragma once

#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "zhs/jones/jones.hpp"
#include "zhs/links/diagram.hpp"
#include "zhs/ohtsuki/multi_index.hpp"
#include "zhs/ohtsuki/nu_table.hpp"

namespace zhs::ohtsuki {

class NotAlgebraicallySplit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadFraming : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A link certified to be algebraically split with every framing +-1.
class SurgeryPresentation {
 public:
  /// Throws NotAlgebraicallySplit or BadFraming.
  explicit SurgeryPresentation(links::FramedLinkDiagram link);
  const links::FramedLinkDiagram& link() const { return link_; }
  const std::vector<int>& framings() const { return link_.framings; }
  std::size_t size() const { return link_.size(); }

 private:
  links::FramedLinkDiagram link_;
};

/// Insert-if-absent memo shared by worker threads.
template <class V>
class Memo {
 public:
  template <class F>
  V get_or_compute(const std::string& key, F&& compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    V value = compute();
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }
  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, V> table_;
};

/// Caches owned by one run: Jones values, phi values and lambda values.
struct EvalContext {
  jones::SkeinCache skein;
  Memo<Rational> phi;
  Memo<Rational> lambda;
};

struct LambdaOptions {
  /// Skip cable terms with more than 3l components, where phi_l vanishes for
  /// algebraically split links. Turn off to evaluate every phi_l explicitly.
  bool prune_by_component_count = true;
  /// Evaluate the (l, j) terms in parallel.
  bool parallel = true;
};

/// (-2)^{-|j|} prod (-f_q)^{i_q} sum_{|im| = n-l} prod (nu_{f_p,j_p,m_p})^{i_p},
/// with m_k = 0 wherever i_k = 0.
Rational F_nl(const std::vector<int>& framings, const MultiIndex& i, const MultiIndex& j, int n, int l,
              const NuTable& table);

/// sum over i in {0,1}^mu with i_p = 1 wherever j_p > 0 of (-1)^{|i|} F_nl(i, j):
/// the coefficient of phi_l(L^j) in the alternating sublink sum of lambda_n.
Rational G_nl(const std::vector<int>& framings, const MultiIndex& j, int n, int l, const NuTable& table);

/// phi_l of the zero-framed parallel L^j, memoized in ctx.
Rational phi_of_cable(const links::FramedLinkDiagram& link, const MultiIndex& j, int l, EvalContext& ctx);

/// Ohtsuki's lambda_n of the surgered homology sphere, n >= 1.
Rational lambda_n(const SurgeryPresentation& s, int n, const NuTable& table, EvalContext& ctx,
                  const LambdaOptions& options = {});

/// sum_{L' in L} (-1)^{#L'} lambda_n(S^3_{L'}) over all 2^mu sublinks.
Rational finite_type_sum(const links::FramedLinkDiagram& link, int n, const NuTable& table, EvalContext& ctx,
                         const LambdaOptions& options = {});

/// The same sum rearranged as sum_l sum_j phi_l(L^j) G_nl(L, j).
Rational finite_type_sum_via_G(const links::FramedLinkDiagram& link, int n, const NuTable& table, EvalContext& ctx,
                               const LambdaOptions& options = {});

struct Eq16Result {
  Rational alternating_sum;
  /// (-1)^n f_L phi_n(L)
  Rational predicted;
  bool holds() const { return alternating_sum == predicted; }
};

/// For a link with 3n components: the alternating lambda_n sum against
/// (-1)^n f_L phi_n(L). Throws std::invalid_argument unless #L = 3n.
Eq16Result check_eq16(const links::FramedLinkDiagram& link, int n, const NuTable& table, EvalContext& ctx,
                      const LambdaOptions& options = {});

}  // namespace zhs::ohtsuki
