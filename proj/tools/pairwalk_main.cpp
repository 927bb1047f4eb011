#include <CLI11.hpp>
#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pairwalk/acceptance.hpp"
#include "pairwalk/analyze.hpp"
#include "pairwalk/graph6.hpp"
#include "pairwalk/linegraph.hpp"
#include "pairwalk/report.hpp"

namespace {

using namespace pairwalk;

struct GraphInput {
  std::string graph6;
  std::string edges_file;
  std::string family_spec;

  void add_options(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph6", graph6, "graph6 line (short form)");
    auto* e = cmd->add_option("--edges", edges_file, "edge-list file: 'u v [w]' per line");
    auto* f = cmd->add_option("--family", family_spec,
                              "family spec, e.g. cycle(8), complete_bipartite(2,4), p5w(2), C8");
    g->excludes(e)->excludes(f);
    e->excludes(f);
  }

  Graph load() const {
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!edges_file.empty()) {
      std::ifstream in(edges_file);
      if (!in) throw std::invalid_argument("cannot open edge list file: " + edges_file);
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_edge_list(buf.str());
    }
    if (!family_spec.empty()) return family(family_spec);
    throw std::invalid_argument("no graph input: use --graph6, --edges or --family");
  }
};

struct ToleranceFlags {
  double group = -1, support = -1, sc = -1, fid = -1;
  long long den_bound = -1;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--tol-group", group, "eigenvalue grouping tolerance scale");
    cmd->add_option("--tol-support", support, "eigenvalue support threshold");
    cmd->add_option("--tol-sc", sc, "strong cospectrality tolerance");
    cmd->add_option("--tol-fid", fid, "fidelity tolerance");
    cmd->add_option("--den-bound", den_bound, "rational reconstruction denominator bound");
  }

  Tolerances resolve() const {
    Tolerances t = Tolerances::from_env();
    if (group > 0) t.group_tol_scale = group;
    if (support > 0) t.support_tol = support;
    if (sc > 0) t.sc_tol = sc;
    if (fid > 0) t.fid_tol = fid;
    if (den_bound > 0) t.den_bound = den_bound;
    t.validate();
    return t;
  }
};

std::vector<double> parse_s_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    double v = std::stod(tok);
    if (v == 0) throw std::invalid_argument("--s: zero is not a valid pair coefficient");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--s: empty list");
  return out;
}

int cmd_analyze(const GraphInput& input, const ToleranceFlags& tflags, const std::string& ham,
                const std::string& s_list, bool solved, double t_max, bool json, int cap) {
  AnalysisConfig config;
  config.hamiltonian = hamiltonian_from_string(ham);
  config.tol = tflags.resolve();
  config.s_list = parse_s_list(s_list);
  config.solved_s = solved;
  config.t_max = t_max;
  config.cap = cap;
  Graph g = input.load();
  ReportDocument doc = analyze_graph(g, config, input.family_spec.empty() ? input.graph6
                                                                          : input.family_spec);
  if (json)
    std::cout << to_json(doc).dump(2) << "\n";
  else
    std::cout << render_text(doc);
  return 0;
}

int cmd_evolve(const GraphInput& input, const ToleranceFlags& tflags, const std::string& ham,
               const std::string& state_literal, double t, const std::string& target_literal,
               bool json) {
  Tolerances tol = tflags.resolve();
  Graph g = input.load();
  int n = g.vertex_count();
  State u = parse_state_literal(state_literal, n);
  SpectralDecomposition dec =
      decompose(hamiltonian(g, hamiltonian_from_string(ham)), -1.0, tol.group_tol_scale);
  Eigen::VectorXcd w = evolve(dec, t, u);

  if (json) {
    Json j;
    j["t"] = t;
    j["amplitudes"] = Json::array();
    for (int i = 0; i < n; ++i) j["amplitudes"].push_back({w[i].real(), w[i].imag()});
    if (!target_literal.empty())
      j["fidelity"] = fidelity(dec, t, u, parse_state_literal(target_literal, n));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << std::fixed << std::setprecision(12);
  for (int i = 0; i < n; ++i) {
    std::cout << std::setw(4) << i << "  " << std::setw(16) << w[i].real() << "  "
              << std::setw(16) << w[i].imag() << "i\n";
  }
  if (!target_literal.empty()) {
    State v = parse_state_literal(target_literal, n);
    std::cout << "fidelity to target: " << fidelity(dec, t, u, v) << "\n";
  }
  return 0;
}

int cmd_linegraph(const GraphInput& input, const ToleranceFlags& tflags,
                  const std::string& product_spec, bool json, int cap) {
  Tolerances tol = tflags.resolve();
  Json out;
  out["diagnostics"] = Json::array();

  if (!product_spec.empty()) {
    auto sep = product_spec.find(" x ");
    if (sep == std::string::npos)
      throw std::invalid_argument("--product expects '<family> x <family>'");
    Graph x1 = family(product_spec.substr(0, sep));
    Graph x2 = family(product_spec.substr(sep + 3));
    Graph product = cartesian_product(x1, x2);
    if (product.vertex_count() > cap) throw CapExceeded("product exceeds cap");
    out["mode"] = "cartesian_product";
    out["factors"] = {product_spec.substr(0, sep), product_spec.substr(sep + 3)};
    out["decisions"] = Json::array();
    for (int i = 0; i < product.edge_count(); ++i)
      for (int j = i + 1; j < product.edge_count(); ++j) {
        const Edge& e1 = product.edge(i);
        const Edge& e2 = product.edge(j);
        VpstDecision d = vpst_decision(x1, x2, {e1.u, e1.v}, {e2.u, e2.v}, tol);
        if (d.direct.verdict == Verdict::None && d.structure_case == 0 &&
            d.discrepancies.empty())
          continue;  // keep the report to the interesting pairs
        Json rec;
        rec["edges"] = {{e1.u, e1.v}, {e2.u, e2.v}};
        rec["structure_case"] = d.structure_case;
        rec["structural_sc"] = d.structural_sc;
        rec["structural_pst"] = d.structural_pst;
        rec["integrality_condition"] = d.integrality_condition;
        rec["direct"] = to_json(d.direct);
        rec["discrepancies"] = d.discrepancies;
        out["decisions"].push_back(rec);
        for (const auto& msg : d.discrepancies) out["diagnostics"].push_back(msg);
      }
  } else {
    Graph g = input.load();
    if (!g.unweighted()) throw std::invalid_argument("linegraph: weighted input not supported");
    if (g.vertex_count() > cap) throw CapExceeded("graph exceeds cap");
    LineCorrespondence corr = line_correspondence(g, tol);
    out["mode"] = "line_graph";
    out["host"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
    out["decisions"] = Json::array();
    for (int i = 0; i < g.edge_count(); ++i)
      for (int j = i + 1; j < g.edge_count(); ++j) {
        LinePstDecision d = line_pst_decision(corr, i, j, tol);
        if (d.direct.verdict != Verdict::PST && d.discrepancies.empty()) continue;
        Json rec;
        rec["edges"] = {{g.edge(i).u, g.edge(i).v}, {g.edge(j).u, g.edge(j).v}};
        rec["direct"] = to_json(d.direct);
        rec["structural_pst"] = d.structural_pst;
        rec["minus_two_in_support"] = d.minus_two_in_support;
        rec["discrepancies"] = d.discrepancies;
        out["decisions"].push_back(rec);
        for (const auto& msg : d.discrepancies) out["diagnostics"].push_back(msg);
      }
  }

  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "decisions: " << out["decisions"].size() << "\n";
    for (const auto& rec : out["decisions"]) {
      std::cout << "  edges " << rec["edges"].dump() << ": direct "
                << rec["direct"]["verdict"].get<std::string>();
      if (rec["direct"].contains("time"))
        std::cout << " at t=" << rec["direct"]["time"].get<double>();
      std::cout << "\n";
      for (const auto& msg : rec["discrepancies"])
        std::cout << "    discrepancy: " << msg.get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_census(const ToleranceFlags& tflags, const std::string& input_file,
               const std::string& s_list, bool solved, int threads, int cap) {
  AnalysisConfig config;
  config.tol = tflags.resolve();
  config.s_list = parse_s_list(s_list);
  config.solved_s = solved;
  config.threads = threads;
  config.cap = cap;

  std::vector<std::string> lines;
  std::string line;
  if (input_file.empty() || input_file == "-") {
    while (std::getline(std::cin, line))
      if (!line.empty()) lines.push_back(line);
  } else {
    std::ifstream in(input_file);
    if (!in) throw std::invalid_argument("cannot open census input: " + input_file);
    while (std::getline(in, line))
      if (!line.empty()) lines.push_back(line);
  }

  CensusResult result = run_census(lines, config);
  for (const auto& rec : result.lines) std::cout << rec << "\n";
  for (const auto& warn : result.warnings) std::cerr << "warning: " << warn << "\n";
  return result.warnings.empty() ? 0 : 4;
}

int cmd_verify_paper(const ToleranceFlags& tflags) {
  Tolerances tol = tflags.resolve();
  auto results = run_acceptance(tol);
  int failures = print_acceptance(results, std::cout);
  if (failures > 0) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous-time quantum walk transfer analysis for weighted graphs"};
  app.require_subcommand(1);

  GraphInput input;
  ToleranceFlags tflags;
  std::string ham = "a";
  std::string s_list = "1,-1";
  bool no_solved = false;
  bool json = false;
  double t_max = -1.0;
  int cap = 64;

  auto add_common = [&](CLI::App* cmd, bool with_graph) {
    if (with_graph) input.add_options(cmd);
    tflags.add_options(cmd);
    cmd->add_option("--hamiltonian", ham, "hamiltonian: a | l | q")
        ->check(CLI::IsMember({"a", "l", "q", "adjacency", "laplacian", "signless_laplacian"}));
    cmd->add_flag("--json", json, "JSON output");
  };

  auto* analyze = app.add_subcommand("analyze", "fixed, periodic and transfer classification");
  add_common(analyze, true);
  analyze->add_option("--s", s_list, "comma-separated pair coefficients");
  analyze->add_flag("--no-solved", no_solved, "skip solver-derived s candidates");
  analyze->add_option("--t-max", t_max, "numeric scan horizon");
  analyze->add_option("--cap", cap, "vertex-count cap");

  std::string state_literal, target_literal;
  double evolve_t = 0;
  auto* evl = app.add_subcommand("evolve", "apply the walk to a state");
  add_common(evl, true);
  evl->add_option("--state", state_literal, "state literal: 'a', 'a+s*b' or '[x0,...]'")
      ->required();
  evl->add_option("-t,--time", evolve_t, "evolution time")->required();
  evl->add_option("--target", target_literal, "optional target state literal");

  std::string product_spec;
  auto* lg = app.add_subcommand("linegraph", "line-graph transfer decisions");
  add_common(lg, true);
  lg->add_option("--product", product_spec, "treat input as '<family> x <family>'");
  lg->add_option("--cap", cap, "vertex-count cap");

  std::string census_input;
  int threads = 1;
  auto* census = app.add_subcommand("census", "JSON-lines catalog over a graph6 stream");
  add_common(census, false);
  census->add_option("--input", census_input, "graph6 file ('-' for stdin)");
  census->add_option("--s", s_list, "comma-separated pair coefficients");
  census->add_flag("--no-solved", no_solved, "skip solver-derived s candidates");
  census->add_option("--threads", threads, "worker threads");
  census->add_option("--cap", cap, "vertex-count cap");

  auto* verify = app.add_subcommand("verify-paper", "run the built-in verification suite");
  tflags.add_options(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed())
      return cmd_analyze(input, tflags, ham, s_list, !no_solved, t_max, json, cap);
    if (evl->parsed())
      return cmd_evolve(input, tflags, ham, state_literal, evolve_t, target_literal, json);
    if (lg->parsed()) return cmd_linegraph(input, tflags, product_spec, json, cap);
    if (census->parsed())
      return cmd_census(tflags, census_input, s_list, !no_solved, threads, cap);
    if (verify->parsed()) return cmd_verify_paper(tflags);
  } catch (const pairwalk::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
