#include "zhs/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "zhs/diagrams/chord_diagram.hpp"
#include "zhs/diagrams/sl2.hpp"
#include "zhs/links/fixtures.hpp"

namespace zhs::experiments {

using algebra::to_string;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

ExperimentReport finished(ExperimentReport& r, Clock::time_point start) {
  r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return std::move(r);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

bool ExperimentReport::passed() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

void ExperimentReport::expect_equal(const std::string& name, const Rational& lhs, const Rational& rhs) {
  verdicts.push_back({name, to_string(lhs), to_string(rhs), lhs == rhs});
}

void ExperimentReport::expect_true(const std::string& name, bool ok, const std::string& detail) {
  verdicts.push_back({name, detail, "", ok});
}

json ExperimentReport::to_json(bool with_time) const {
  json v = json::array();
  for (const auto& x : verdicts)
    v.push_back({{"name", x.name}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"result", x.pass ? "PASS" : "FAIL"}});
  json out = {{"experiment", experiment},
              {"inputs", inputs},
              {"outputs", outputs},
              {"verdicts", v},
              {"result", passed() ? "PASS" : "FAIL"}};
  if (with_time) out["wall_seconds"] = wall_seconds;
  return out;
}

std::string ExperimentReport::to_csv(bool header) const {
  std::ostringstream out;
  if (header) out << "experiment,verdict,result,lhs,rhs\n";
  if (verdicts.empty()) out << csv_field(experiment) << ",,PASS,,\n";
  for (const auto& v : verdicts) {
    out << csv_field(experiment) << ',' << csv_field(v.name) << ',' << (v.pass ? "PASS" : "FAIL") << ','
        << csv_field(v.lhs) << ',' << csv_field(v.rhs) << '\n';
  }
  return out.str();
}

json exponent_map(const algebra::HalfLaurent& p) {
  json out = json::object();
  for (const auto& [doubled, c] : p.terms()) {
    const std::string key = doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
    out[key] = to_string(c);
  }
  return out;
}

json quantum_ratio_json(const jones::QuantumRatio& r) {
  return {{"numerator", exponent_map(r.numerator)}, {"quantum_two_power", r.power}};
}

links::Catalog default_catalog() {
  links::Catalog c = links::Catalog::builtin();
  c.add("beta-four-component", diagrams::beta_four_component_link());
  const links::LinkCombination b = diagrams::beta_tilde(diagrams::theta());
  c.add("beta-theta-bb", b.terms().front().second);
  return c;
}

ExperimentReport run_jones(const std::string& name, const links::FramedLinkDiagram& link, unsigned order,
                           Session& s) {
  ExperimentReport r;
  r.experiment = "jones";
  r.inputs = {{"link", name}, {"order", order}};
  const auto start = Clock::now();
  jones::SkeinCache* cache = &s.ctx.skein;
  if (!link.empty()) r.outputs["V"] = exponent_map(jones::jones_V(link, cache));
  r.outputs["components"] = link.size();
  r.outputs["crossings"] = link.crossing_count();
  r.outputs["X"] = quantum_ratio_json(jones::X(link, cache));
  r.outputs["Phi"] = quantum_ratio_json(jones::Phi(link, cache));
  const std::vector<Rational> Phis = jones::Phi_coefficients(link, order, cache);
  r.outputs["Phi_n"] = rational_list(Phis);
  // phi_i = (-2)^mu / (mu + i)! Phi_{mu + i}, for mu + i <= order.
  std::vector<Rational> phis;
  const unsigned mu = static_cast<unsigned>(link.size());
  for (unsigned i = 0; mu + i <= order; ++i) {
    Rational v = Phis[mu + i] * algebra::power(Rational(-2), static_cast<long>(mu));
    v /= Rational(algebra::factorial(mu + i));
    phis.push_back(v);
  }
  r.outputs["phi_i"] = rational_list(phis);
  return finished(r, start);
}

ExperimentReport run_lambda(const std::string& name, const links::FramedLinkDiagram& link, int n, Session& s) {
  ExperimentReport r;
  r.experiment = "lambda";
  r.inputs = {{"link", name}, {"n", n}, {"framings", link.framings}};
  const auto start = Clock::now();
  const ohtsuki::SurgeryPresentation p(link);
  r.outputs["lambda"] = to_string(ohtsuki::lambda_n(p, n, s.nu, s.ctx, s.options));
  return finished(r, start);
}

ExperimentReport run_finite_type(const std::string& name, const links::FramedLinkDiagram& link, int n, Session& s) {
  ExperimentReport r;
  r.experiment = "finite-type";
  r.inputs = {{"link", name}, {"n", n}, {"framings", link.framings}};
  const auto start = Clock::now();
  const Rational direct = ohtsuki::finite_type_sum(link, n, s.nu, s.ctx, s.options);
  const Rational via_g = ohtsuki::finite_type_sum_via_G(link, n, s.nu, s.ctx, s.options);
  r.outputs["alternating_sum"] = to_string(direct);
  r.outputs["alternating_sum_via_G"] = to_string(via_g);
  r.expect_equal("direct sum equals G-form sum", direct, via_g);
  if (static_cast<int>(link.size()) > 3 * n) r.expect_equal("vanishes above 3n components", direct, 0);
  return finished(r, start);
}

ExperimentReport run_eq16(const std::string& name, links::FramedLinkDiagram link,
                          const std::optional<std::vector<int>>& framings, Session& s) {
  ExperimentReport r;
  r.experiment = "eq16";
  if (framings) {
    if (framings->size() != link.size()) throw std::invalid_argument("one framing per component is required");
    link.framings = *framings;
  }
  r.inputs = {{"link", name}, {"framings", link.framings}};
  const auto start = Clock::now();
  if (link.size() % 3 != 0) throw std::invalid_argument("the identity needs 3n components");
  const int n = static_cast<int>(link.size() / 3);
  r.inputs["n"] = n;
  const ohtsuki::Eq16Result e = ohtsuki::check_eq16(link, n, s.nu, s.ctx, s.options);
  r.outputs["alternating_sum"] = to_string(e.alternating_sum);
  r.outputs["predicted"] = to_string(e.predicted);
  r.outputs["phi_n"] = to_string(jones::phi_i(link, static_cast<unsigned>(n), &s.ctx.skein));
  r.expect_equal("alternating lambda sum equals (-1)^n f_L phi_n", e.alternating_sum, e.predicted);
  return finished(r, start);
}

ExperimentReport run_weight(const std::string& name, const diagrams::TrivalentGraph& g) {
  using namespace diagrams;
  ExperimentReport r;
  r.experiment = "weight";
  r.inputs = {{"graph", name}, {"vertices", g.vertex_count()}};
  const auto start = Clock::now();
  const Rational parallel = sl2_weight(g, WeightKernel::Parallel);
  const Rational serial = sl2_weight(g, WeightKernel::Serial);
  const Rational through_eta = sl2_weight(eta(g));
  r.outputs["gamma"] = to_string(parallel);
  r.outputs["gamma_eta"] = to_string(through_eta);
  if (g.vertex_count() > 0) r.outputs["Lambda_n"] = to_string(Lambda_n(g, g.order()));
  r.expect_equal("serial and parallel kernels agree", serial, parallel);
  r.expect_equal("gamma(eta(G)) = gamma(G)", through_eta, parallel);
  for (int v = 0; v < g.vertex_count(); ++v)
    r.expect_equal("AS at vertex " + std::to_string(v), sl2_weight(as_relation(g, v)), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_self_loop(e)) continue;
    r.expect_equal("IHX at edge " + std::to_string(e), sl2_weight(ihx_relation(g, e)), 0);
  }
  return finished(r, start);
}

ExperimentReport run_eta(const std::string& name, const diagrams::TrivalentGraph& g) {
  using namespace diagrams;
  ExperimentReport r;
  r.experiment = "eta";
  r.inputs = {{"graph", name}, {"vertices", g.vertex_count()}};
  const auto start = Clock::now();
  const ChordDiagram d = eta(g);
  r.outputs["loops"] = d.loop_count();
  r.outputs["legs"] = d.leg_count();
  r.outputs["trivalent"] = d.trivalent;
  r.outputs["grade"] = d.grade();
  r.outputs["gamma"] = to_string(sl2_weight(d));
  r.expect_true("every loop carries two legs",
                std::all_of(d.loops.begin(), d.loops.end(), [](const auto& l) { return l.size() == 2; }));
  r.expect_equal("grade is 4n", d.grade(), 2 * g.vertex_count());
  return finished(r, start);
}

ExperimentReport run_beta(const std::string& name, const diagrams::TrivalentGraph& g, links::Catalog* out,
                          diagrams::Chirality chirality) {
  ExperimentReport r;
  r.experiment = "beta";
  r.inputs = {{"graph", name},
              {"vertices", g.vertex_count()},
              {"chirality", chirality == diagrams::Chirality::Standard ? "standard" : "mirror"}};
  const auto start = Clock::now();
  const links::LinkCombination b = diagrams::beta_tilde(g, chirality);
  json terms = json::array();
  bool all_split = true;
  int k = 0;
  for (const auto& [c, link] : b.terms()) {
    const std::string entry = "beta-" + name + "-" + std::to_string(k++);
    const bool split = links::is_algebraically_split(link);
    all_split = all_split && split;
    terms.push_back({{"name", entry},
                     {"coefficient", to_string(c)},
                     {"components", link.size()},
                     {"crossings", link.crossing_count()},
                     {"algebraically_split", split}});
    if (out) out->add(entry, link);
  }
  r.outputs["terms"] = terms;
  r.expect_equal("term count is 2^{2n}", static_cast<long>(b.size()), 1L << g.vertex_count());
  r.expect_true("every term is algebraically split", all_split);
  return finished(r, start);
}

ExperimentReport run_theta_check(Session& s, const diagrams::TrivalentGraph& g, diagrams::Chirality chirality) {
  using namespace diagrams;
  ExperimentReport r;
  r.experiment = "theta-check";
  const int n = g.order();
  r.inputs = {{"graph", to_json(g)},
              {"n", n},
              {"chirality", chirality == Chirality::Standard ? "standard" : "mirror"},
              {"prune_by_component_count", s.options.prune_by_component_count}};
  const auto start = Clock::now();
  const links::LinkCombination b = beta_tilde(g, chirality);
  Rational lhs = 0;
  json terms = json::array();
  for (const auto& [c, link] : b.terms()) {
    const Rational v = ohtsuki::lambda_n(ohtsuki::SurgeryPresentation(link), n, s.nu, s.ctx, s.options);
    terms.push_back({{"coefficient", to_string(c)}, {"crossings", link.crossing_count()}, {"lambda", to_string(v)}});
    lhs += c * v;
  }
  const Rational rhs = Lambda_n(g, n);
  r.outputs["terms"] = terms;
  r.outputs["lambda_of_beta_tilde"] = to_string(lhs);
  r.outputs["signed_weight_of_eta"] = to_string(rhs);
  r.expect_equal("lambda_n(beta~(G)) = (-1)^n gamma(eta(G))", lhs, rhs);
  r.expect_true("value is nonzero", lhs != 0, to_string(lhs));
  return finished(r, start);
}

}  // namespace zhs::experiments
