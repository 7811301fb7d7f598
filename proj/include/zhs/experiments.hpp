#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zhs/algebra/half_laurent.hpp"
#include "zhs/diagrams/beta.hpp"
#include "zhs/diagrams/graph.hpp"
#include "zhs/jones/jones.hpp"
#include "zhs/links/catalog.hpp"
#include "zhs/ohtsuki/lambda.hpp"

namespace zhs::experiments {

using algebra::Rational;

struct Verdict {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Result of one experiment. Every rational is stored as "p/q" text and every
/// verdict compares exact values.
struct ExperimentReport {
  std::string experiment;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<Verdict> verdicts;
  double wall_seconds = 0;

  bool passed() const;
  /// Adds a verdict lhs == rhs.
  void expect_equal(const std::string& name, const Rational& lhs, const Rational& rhs);
  void expect_true(const std::string& name, bool ok, const std::string& detail = "");
  nlohmann::json to_json(bool with_time = true) const;
  /// experiment,verdict,pass,lhs,rhs rows (one per verdict; one row without
  /// a verdict when there are none).
  std::string to_csv(bool header = true) const;
};

/// {"e": "p/q"} keyed by the q-exponent written as a rational.
nlohmann::json exponent_map(const algebra::HalfLaurent& p);
nlohmann::json quantum_ratio_json(const jones::QuantumRatio& r);

/// Built-in links plus the links derived from the beta construction:
/// "beta-four-component" and "beta-theta-bb" (the all-Borromean term of
/// beta~(theta)).
links::Catalog default_catalog();

/// Shared state for one run.
struct Session {
  ohtsuki::NuTable nu;
  ohtsuki::EvalContext ctx;
  ohtsuki::LambdaOptions options;
};

ExperimentReport run_jones(const std::string& name, const links::FramedLinkDiagram& link, unsigned order,
                           Session& s);
ExperimentReport run_lambda(const std::string& name, const links::FramedLinkDiagram& link, int n, Session& s);
/// Verdicts: the direct and rearranged sums agree, and the sum vanishes when
/// the link has more than 3n components.
ExperimentReport run_finite_type(const std::string& name, const links::FramedLinkDiagram& link, int n, Session& s);
/// Optional framings replace the link's own; n = #L / 3.
ExperimentReport run_eq16(const std::string& name, links::FramedLinkDiagram link,
                          const std::optional<std::vector<int>>& framings, Session& s);
/// Weight of the graph, with both kernels, through eta, and on every AS and
/// IHX combination at the graph.
ExperimentReport run_weight(const std::string& name, const diagrams::TrivalentGraph& g);
ExperimentReport run_eta(const std::string& name, const diagrams::TrivalentGraph& g);
/// The beta~ combination; the links are appended to `out` when given.
ExperimentReport run_beta(const std::string& name, const diagrams::TrivalentGraph& g, links::Catalog* out,
                          diagrams::Chirality chirality = diagrams::kBetaChirality);
/// lambda_n over beta~(G) against (-1)^n gamma(eta(G)); theta and n = 1 by default.
ExperimentReport run_theta_check(Session& s, const diagrams::TrivalentGraph& g = diagrams::theta(),
                                 diagrams::Chirality chirality = diagrams::kBetaChirality);

}  // namespace zhs::experiments
