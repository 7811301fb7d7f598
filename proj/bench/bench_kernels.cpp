// Serial reference against the parallel kernels: the bracket state sum on
// links from the catalog and the beta construction, and the sl2 contraction
// on eta of trivalent graphs.
#include <benchmark/benchmark.h>

#include <algorithm>

#include "zhs/diagrams/beta.hpp"
#include "zhs/diagrams/chord_diagram.hpp"
#include "zhs/diagrams/sl2.hpp"
#include "zhs/experiments.hpp"
#include "zhs/jones/bracket.hpp"

namespace {

using namespace zhs;

const std::vector<std::pair<std::string, links::FramedLinkDiagram>>& bracket_inputs() {
  static const auto inputs = [] {
    const links::Catalog c = experiments::default_catalog();
    std::vector<std::pair<std::string, links::FramedLinkDiagram>> v;
    for (const char* name : {"borromean", "borromean-cable-2-1-1", "beta-theta-bb", "beta-four-component"})
      v.emplace_back(name, c.at(name));
    // A 20-crossing term of beta~ on a 4-vertex graph; 2^20 states.
    for (const auto& g : diagrams::generate_graphs(4)) {
      const links::LinkCombination b = diagrams::beta_tilde(g);
      const auto& terms = b.terms();
      const auto it = std::find_if(terms.begin(), terms.end(),
                                   [](const auto& t) { return t.second.crossing_count() == 20; });
      if (it == terms.end()) continue;
      v.emplace_back("beta-4v-term", it->second);
      break;
    }
    return v;
  }();
  return inputs;
}

const std::vector<diagrams::ChordDiagram>& weight_inputs() {
  static const auto inputs = [] {
    std::vector<diagrams::ChordDiagram> v{diagrams::eta(diagrams::theta())};
    for (const auto& g : diagrams::generate_graphs(4)) v.push_back(diagrams::eta(g));
    return v;
  }();
  return inputs;
}

void bracket_bench(benchmark::State& state, jones::BracketKernel kernel) {
  const auto& [name, link] = bracket_inputs().at(state.range(0));
  state.SetLabel(name + " (" + std::to_string(link.crossing_count()) + " crossings)");
  for (auto _ : state) benchmark::DoNotOptimize(jones::bracket(link, kernel));
}

void weight_bench(benchmark::State& state, diagrams::WeightKernel kernel) {
  const auto& d = weight_inputs().at(state.range(0));
  state.SetLabel(std::to_string(d.trivalent) + " vertices, " + std::to_string(d.loop_count()) + " loops");
  for (auto _ : state) benchmark::DoNotOptimize(diagrams::contract(diagrams::sl2(), d, kernel));
}

void bracket_args(benchmark::internal::Benchmark* b) {
  for (std::size_t i = 0; i < bracket_inputs().size(); ++i) b->Arg(static_cast<long>(i));
}

void weight_args(benchmark::internal::Benchmark* b) {
  for (std::size_t i = 0; i < weight_inputs().size(); ++i) b->Arg(static_cast<long>(i));
}

}  // namespace

BENCHMARK_CAPTURE(bracket_bench, serial, jones::BracketKernel::SerialStateSum)->Apply(bracket_args)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bracket_bench, parallel, jones::BracketKernel::ParallelStateSum)->Apply(bracket_args)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bracket_bench, frontier, jones::BracketKernel::Frontier)->Apply(bracket_args)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(weight_bench, serial, diagrams::WeightKernel::Serial)->Apply(weight_args)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(weight_bench, parallel, diagrams::WeightKernel::Parallel)->Apply(weight_args)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
