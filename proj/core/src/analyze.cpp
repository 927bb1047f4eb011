#include "pairwalk/analyze.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

#include "pairwalk/graph6.hpp"

namespace pairwalk {

namespace {

std::vector<long long> state_key(const State& u) {
  double sign = 1.0;
  for (int i = 0; i < u.size(); ++i)
    if (std::abs(u[i]) > 1e-7) {
      sign = u[i] > 0 ? 1.0 : -1.0;
      break;
    }
  std::vector<long long> key(u.size());
  for (int i = 0; i < u.size(); ++i) key[i] = std::llround(sign * u[i] * 1e9);
  return key;
}

}  // namespace

ReportDocument analyze_graph(const Graph& x, const AnalysisConfig& config,
                             const std::string& name) {
  auto start = std::chrono::steady_clock::now();
  config.tol.validate();
  const int n = x.vertex_count();
  if (n > config.cap) throw CapExceeded("analyze: vertex count exceeds cap");
  if (!x.connected()) throw std::invalid_argument("analyze: connected input required");

  ReportDocument doc;
  doc.graph_name = name;
  doc.n = n;
  doc.m = x.edge_count();
  doc.weighted = !x.unweighted();
  doc.hamiltonian = to_string(config.hamiltonian);

  Eigen::MatrixXd m = hamiltonian(x, config.hamiltonian);
  SpectralDecomposition dec = decompose(m, -1.0, config.tol.group_tol_scale);
  auto m_int = to_integer_matrix(m);

  std::set<std::vector<long long>> seen;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      for (double s : config.s_list) {
        SPairState sp(a, b, s);
        State u = sp.to_state(n);
        if (!seen.insert(state_key(u)).second) continue;
        TransferReport rep = is_periodic(dec, u, config.tol, m_int, config.t_max);
        if (rep.verdict == Verdict::Fixed)
          doc.fixed.push_back({a, b, s, rep.eigenvalue});
        else if (rep.verdict == Verdict::Periodic && rep.time > 0)
          doc.periodic.push_back({a, b, s, rep});
      }
    }

  SPolicy policy{config.s_list, config.solved_s};
  doc.pst = pst_search(x, config.hamiltonian, policy, config.tol, config.cap, config.t_max);
  if (dec.cluster_ambiguity)
    doc.diagnostics.push_back("eigenvalue clusters closer than ten grouping tolerances");

  doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
  return doc;
}

Json census_record(const Graph& x, const AnalysisConfig& config, const std::string& graph6) {
  Json rec;
  rec["graph6"] = graph6;
  rec["n"] = x.vertex_count();
  rec["m"] = x.edge_count();
  rec["per_hamiltonian"] = Json::object();
  for (HamiltonianKind kind : {HamiltonianKind::Adjacency, HamiltonianKind::Laplacian,
                               HamiltonianKind::SignlessLaplacian}) {
    AnalysisConfig sub = config;
    sub.hamiltonian = kind;
    ReportDocument doc = analyze_graph(x, sub, graph6);
    Json h;
    h["fixed"] = doc.fixed.size();
    h["periodic"] = doc.periodic.size();
    h["pst"] = doc.pst.size();
    Json hits = Json::array();
    for (const auto& hit : doc.pst)
      hits.push_back({{"source", {hit.source.a, hit.source.b}},
                      {"target", {hit.target.a, hit.target.b}},
                      {"s", hit.source.s},
                      {"time", hit.report.time},
                      {"fidelity", hit.report.oracle_fidelity}});
    h["pst_hits"] = hits;
    rec["per_hamiltonian"][to_string(kind)] = h;
  }
  return rec;
}

CensusResult run_census(const std::vector<std::string>& graph6_lines,
                        const AnalysisConfig& config) {
  CensusResult out;
  out.lines.assign(graph6_lines.size(), "");
  std::vector<std::string> errors(graph6_lines.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= graph6_lines.size()) return;
      try {
        Graph g = parse_graph6(graph6_lines[i]);
        if (!g.connected()) {
          errors[i] = "line " + std::to_string(i + 1) + ": disconnected graph skipped";
          continue;
        }
        out.lines[i] = census_record(g, config, graph6_lines[i]).dump();
      } catch (const std::exception& e) {
        errors[i] = "line " + std::to_string(i + 1) + ": " + e.what();
      }
    }
  };

  int threads = std::max(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<std::string> lines;
  for (size_t i = 0; i < out.lines.size(); ++i) {
    if (!out.lines[i].empty()) lines.push_back(std::move(out.lines[i]));
    if (!errors[i].empty()) out.warnings.push_back(errors[i]);
  }
  out.lines = std::move(lines);
  return out;
}

}  // namespace pairwalk
