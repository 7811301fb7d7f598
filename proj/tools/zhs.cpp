#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zhs/experiments.hpp"

namespace {

using namespace zhs;

std::vector<int> parse_framings(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty() && item.front() == '+') item.erase(0, 1);
    std::size_t used = 0;
    const int f = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad framing '" + item + "'");
    out.push_back(f);
  }
  return out;
}

diagrams::TrivalentGraph resolve_graph(const std::string& spec) {
  if (spec == "theta") return diagrams::theta();
  return diagrams::load_graph(spec);
}

std::string graph_name(const std::string& spec) {
  if (spec == "theta") return spec;
  const std::filesystem::path p(spec);
  return p.stem().string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones-polynomial route to Ohtsuki's invariants of homology spheres"};
  app.require_subcommand(1);

  std::string catalog_file, nu_file, link_spec, graph_spec = "theta", out_file, framings_text;
  int n = 1, threads = 0;
  unsigned order = 4;
  bool csv = false, no_prune = false, mirror = false;

  app.add_option("--catalog", catalog_file, "JSON link catalog merged over the built-in one");
  app.add_option("--nu-table", nu_file, "JSON table of surgery constants nu_{f,i,m}");
  app.add_option("--threads", threads, "Thread cap (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--csv", csv, "Print a CSV summary instead of JSON");
  app.add_flag("--no-prune", no_prune, "Evaluate every cable, even where phi_l vanishes by component count");

  auto* jones = app.add_subcommand("jones", "V, X, Phi and the phi_i of a link");
  jones->add_option("--link", link_spec, "Catalog name or JSON file")->required();
  jones->add_option("--order", order, "Highest Phi_n to report");

  auto* lambda = app.add_subcommand("lambda", "lambda_n of the surgered homology sphere");
  lambda->add_option("--link", link_spec)->required();
  lambda->add_option("--n", n)->check(CLI::PositiveNumber);
  lambda->add_option("--framings", framings_text, "Comma-separated framings, e.g. +1,-1");

  auto* finite = app.add_subcommand("finite-type", "Alternating sublink sum of lambda_n");
  finite->add_option("--link", link_spec)->required();
  finite->add_option("--n", n)->check(CLI::PositiveNumber);
  finite->add_option("--framings", framings_text);

  auto* eq16 = app.add_subcommand("check-eq16", "Alternating lambda_n sum against (-1)^n f_L phi_n on 3n components");
  eq16->alias("eq16");
  eq16->add_option("--link", link_spec)->required();
  eq16->add_option("--framings", framings_text);

  auto* weight = app.add_subcommand("weight", "sl2 weight of a trivalent graph with AS/IHX checks");
  weight->add_option("--graph", graph_spec, "'theta' or a graph JSON file");

  auto* eta = app.add_subcommand("eta", "Wilson-loop insertion on every edge");
  eta->add_option("--graph", graph_spec);

  auto* beta = app.add_subcommand("beta", "Borromean-difference link combination of a graph");
  beta->add_option("--graph", graph_spec);
  beta->add_option("--out", out_file, "Write the links as a catalog");
  beta->add_flag("--mirror", mirror, "Use the mirror Borromean tangle");

  auto* theta = app.add_subcommand("theta-check", "lambda_n(beta~(G)) against (-1)^n gamma(eta(G))");
  theta->add_option("--graph", graph_spec);
  theta->add_flag("--mirror", mirror);

  auto* catalog = app.add_subcommand("catalog", "List the catalog, or write it with --out");
  catalog->add_option("--out", out_file);

  CLI11_PARSE(app, argc, argv);

  if (threads > 0) omp_set_num_threads(threads);
  const auto chirality = mirror ? diagrams::Chirality::Mirror : diagrams::Chirality::Standard;

  experiments::ExperimentReport report;
  try {
    links::Catalog cat = experiments::default_catalog();
    if (const char* env = std::getenv("OHTSUKI_CATALOG"); env && *env) cat.merge(links::Catalog::load(env));
    if (!catalog_file.empty()) cat.merge(links::Catalog::load(catalog_file));

    experiments::Session session;
    if (!nu_file.empty()) session.nu = ohtsuki::NuTable::load(nu_file);
    session.options.prune_by_component_count = !no_prune;

    auto link = [&]() {
      links::FramedLinkDiagram l = links::resolve_link(link_spec, cat);
      if (!framings_text.empty()) {
        const auto f = parse_framings(framings_text);
        if (f.size() != l.size()) throw std::invalid_argument("one framing per component is required");
        l.framings = f;
      }
      return l;
    };

    if (*jones) {
      report = experiments::run_jones(link_spec, link(), order, session);
    } else if (*lambda) {
      report = experiments::run_lambda(link_spec, link(), n, session);
    } else if (*finite) {
      report = experiments::run_finite_type(link_spec, link(), n, session);
    } else if (*eq16) {
      report = experiments::run_eq16(link_spec, link(), std::nullopt, session);
    } else if (*weight) {
      report = experiments::run_weight(graph_name(graph_spec), resolve_graph(graph_spec));
    } else if (*eta) {
      report = experiments::run_eta(graph_name(graph_spec), resolve_graph(graph_spec));
    } else if (*beta) {
      links::Catalog out;
      report = experiments::run_beta(graph_name(graph_spec), resolve_graph(graph_spec), &out, chirality);
      if (!out_file.empty()) out.save(out_file);
    } else if (*theta) {
      report = experiments::run_theta_check(session, resolve_graph(graph_spec), chirality);
    } else if (*catalog) {
      report.experiment = "catalog";
      report.outputs["names"] = cat.names();
      if (!out_file.empty()) cat.save(out_file);
    }
  } catch (const std::exception& e) {
    nlohmann::json err = {{"error", e.what()}, {"command", app.get_subcommands().front()->get_name()}};
    std::cerr << err.dump(2) << '\n';
    return 2;
  }

  if (csv) {
    std::cout << report.to_csv();
  } else {
    std::cout << report.to_json().dump(2) << '\n';
  }
  return report.passed() ? 0 : 1;
}
