#include <benchmark/benchmark.h>

#include "pairwalk/analyze.hpp"
#include "pairwalk/graph6.hpp"
#include "pairwalk/linegraph.hpp"
#include "pairwalk/transfer.hpp"

using namespace pairwalk;

static void BM_Decompose(benchmark::State& state) {
  Graph g = cycle_graph(static_cast<int>(state.range(0)));
  Eigen::MatrixXd m = hamiltonian(g, HamiltonianKind::Adjacency);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK(BM_Decompose)->Arg(16)->Arg(32)->Arg(64);

static void BM_Evolve(benchmark::State& state) {
  Graph g = hypercube_graph(5);
  SpectralDecomposition dec = decompose(hamiltonian(g, HamiltonianKind::Adjacency));
  State u = SPairState(0, 31, 2.0).to_state(32);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(evolve(dec, t, u));
  }
}
BENCHMARK(BM_Evolve);

static void BM_CheckPst(benchmark::State& state) {
  Graph g = cycle_graph(8);
  Eigen::MatrixXd m = hamiltonian(g, HamiltonianKind::Adjacency);
  SpectralDecomposition dec = decompose(m);
  auto mi = to_integer_matrix(m);
  State u = SPairState(0, 2, -1.0).to_state(8);
  State v = SPairState(4, 6, -1.0).to_state(8);
  for (auto _ : state) benchmark::DoNotOptimize(check_pst(dec, u, v, {}, mi));
}
BENCHMARK(BM_CheckPst);

static void BM_PstSearch(benchmark::State& state) {
  Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        pst_search(g, HamiltonianKind::Adjacency, {{1.0, -1.0, 2.0, -2.0, 0.5}, true}));
}
BENCHMARK(BM_PstSearch)->Arg(8)->Arg(12);

static void BM_LineDecision(benchmark::State& state) {
  Graph g = complete_bipartite_graph(2, 8);
  LineCorrespondence corr = line_correspondence(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(line_pst_decision(corr, g.edge_index(0, 2), g.edge_index(1, 2)));
}
BENCHMARK(BM_LineDecision);

static void BM_CensusRecord(benchmark::State& state) {
  Graph g = parse_graph6("EhEG");
  AnalysisConfig config;
  config.tol = Tolerances::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(census_record(g, config, "EhEG"));
}
BENCHMARK(BM_CensusRecord);

BENCHMARK_MAIN();
