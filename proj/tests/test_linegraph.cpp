#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pairwalk/analyze.hpp"
#include "pairwalk/graph6.hpp"
#include "pairwalk/linegraph.hpp"

using namespace pairwalk;

namespace {

constexpr double kPi = std::numbers::pi;

State vstate(int n, int a) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[a] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("line correspondence identities") {
  for (const auto& g : {cycle_graph(4), complete_bipartite_graph(2, 4), path_graph(3),
                        complete_graph(4), cycle_graph(5)}) {
    LineCorrespondence corr = line_correspondence(g);  // verifies both identities internally
    CHECK(corr.line.vertex_count() == g.edge_count());
  }
  CHECK(line_correspondence(path_graph(3)).line.edge_count() == 1);  // L(P3) = K2

  // exhaustive intertwining over the seven-vertex corpus
  for (const auto& line : corpus::connected_graphs_n_7()) {
    Graph g = parse_graph6(line);
    if (g.edge_count() == 0) continue;
    CHECK_NOTHROW(line_correspondence(g));
  }
}

TEST_CASE("kernel projector of the incidence matrix") {
  CHECK_FALSE(minus_two_projector(path_graph(4)).has_value());   // tree
  CHECK_FALSE(minus_two_projector(cycle_graph(5)).has_value());  // odd unicyclic

  auto f = minus_two_projector(cycle_graph(4));
  REQUIRE(f.has_value());
  CHECK(f->trace() == doctest::Approx(1.0));  // nullity m - n + 1 = 1
  // canonical edge order (0,1),(0,3),(1,2),(2,3): alternation around the
  // cycle lands as (1,-1,-1,1)
  Eigen::VectorXd alt(4);
  alt << 1, -1, -1, 1;
  alt /= 2.0;
  CHECK((*f - alt * alt.transpose()).cwiseAbs().maxCoeff() < 1e-12);

  auto fk4 = minus_two_projector(complete_graph(4));
  REQUIRE(fk4.has_value());
  CHECK(fk4->trace() == doctest::Approx(2.0));  // nullity m - n = 2
  Eigen::MatrixXd r = incidence_matrix(complete_graph(4)).cast<double>();
  CHECK((r * *fk4).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("pulling line-graph transfer back to the host") {
  Graph k24 = complete_bipartite_graph(2, 4);
  LineCorrespondence corr = line_correspondence(k24);
  int f1 = k24.edge_index(0, 2), f2 = k24.edge_index(1, 2);
  PlusStatePull pull = plus_state_pull(corr, f1, f2, kPi / 2, {1.0, 0.0});
  CHECK(pull.a == 0);
  CHECK(pull.alpha == 1);
  CHECK(pull.oracle_fidelity >= 1.0 - 1e-9);
  // host phase picks up e^{-2 i tau}: here -1
  CHECK(std::abs(pull.phase - std::complex<double>(-1.0, 0.0)) < 1e-12);

  // the 4-cycle is its own line graph; antipodal vertex transfer pulls to
  // opposite-edge plus states. Disjoint edges (0,1) and (2,3) are the
  // antipodal line vertices in canonical order (ids 0 and 3).
  Graph c4 = cycle_graph(4);
  LineCorrespondence cc = line_correspondence(c4);
  TransferReport vertex = check_pst(cc.dec_line, vstate(4, 0), vstate(4, 3));
  REQUIRE(vertex.verdict == Verdict::PST);
  PlusStatePull pc = plus_state_pull(cc, 0, 3, vertex.time, vertex.phase);
  CHECK(pc.oracle_fidelity >= 1.0 - 1e-9);

  CHECK_THROWS_AS(plus_state_pull(corr, f1, f2, 0.1, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("line transfer decision routes agree") {
  Graph k24 = complete_bipartite_graph(2, 4);
  LineCorrespondence corr = line_correspondence(k24);
  LinePstDecision d = line_pst_decision(corr, k24.edge_index(0, 2), k24.edge_index(1, 2));
  CHECK(d.direct.verdict == Verdict::PST);
  CHECK(d.direct.time == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(d.structural_pst);
  CHECK(d.minus_two_in_support);  // no cut edges in K_{2,4}
  CHECK(d.minus_two_sign_ok);
  CHECK(d.discrepancies.empty());
  CHECK(d.structural_time == doctest::Approx(kPi / 2).epsilon(1e-9));

  // non-transfer pair in the same graph
  LinePstDecision d2 = line_pst_decision(corr, k24.edge_index(0, 2), k24.edge_index(0, 3));
  CHECK(d2.direct.verdict != Verdict::PST);
  CHECK_FALSE(d2.structural_pst);

  // every decision on the small corpus agrees between routes
  for (const auto& line : corpus::connected_graphs_n_le_6()) {
    Graph g = parse_graph6(line);
    if (g.edge_count() < 2) continue;
    LineCorrespondence c = line_correspondence(g);
    for (int i = 0; i < g.edge_count(); ++i)
      for (int j = i + 1; j < g.edge_count(); ++j) {
        LinePstDecision dec = line_pst_decision(c, i, j);
        CHECK(dec.discrepancies.empty());
      }
  }
}

TEST_CASE("line transfers always pull back to the host walk") {
  // every vertex transfer found in a line graph over the <= 7 corpus yields
  // a signless-Laplacian plus-state transfer on the host at the same time
  int pulled = 0;
  auto sweep = [&](const std::vector<std::string>& lines) {
    for (const auto& g6 : lines) {
      Graph g = parse_graph6(g6);
      int m = g.edge_count();
      if (m < 2) continue;
      LineCorrespondence corr = line_correspondence(g);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          State fi = vstate(m, i), fj = vstate(m, j);
          if (!strongly_cospectral(corr.dec_line, fi, fj)) continue;
          auto al_int = to_integer_matrix(corr.line.adjacency(), 1e-9);
          TransferReport rep = check_pst(corr.dec_line, fi, fj, {}, al_int);
          if (rep.verdict != Verdict::PST) continue;
          PlusStatePull pull = plus_state_pull(corr, i, j, rep.time, rep.phase);
          CHECK(pull.oracle_fidelity >= 1.0 - 1e-7);
          ++pulled;
        }
    }
  };
  sweep(corpus::connected_graphs_n_le_6());
  sweep(corpus::connected_graphs_n_7());
  CHECK(pulled > 0);
}

TEST_CASE("edge-cut screens") {
  Graph q3 = hypercube_graph(3);
  CHECK(edge_cut_filter_applicable(q3));
  CHECK_FALSE(edge_cut_filter(q3, 0, 5));

  Graph c6 = cycle_graph(6);
  CHECK(edge_cut_filter_applicable(c6));
  CHECK(edge_cut_filter(c6, c6.edge_index(0, 1), c6.edge_index(3, 4)));

  CHECK_FALSE(edge_cut_filter_applicable(cycle_graph(5)));  // odd unicyclic
  CHECK_FALSE(edge_cut_filter_applicable(path_graph(4)));   // tree

  // non-bipartite screen: removal leaves a bipartite graph
  Graph k4 = complete_graph(4);
  CHECK(edge_cut_filter_applicable(k4));
  CHECK(edge_cut_filter(k4, k4.edge_index(0, 1), k4.edge_index(2, 3)));
}

TEST_CASE("product incidence null basis") {
  auto b1 = cartesian_null_basis(complete_graph(2), complete_graph(2));
  CHECK(b1.expected_columns == 1);
  CHECK(b1.n.cols() == 1);

  auto b2 = cartesian_null_basis(path_graph(3), complete_graph(2));
  CHECK(b2.expected_columns == 2);

  auto b3 = cartesian_null_basis(cartesian_product(complete_graph(2), complete_graph(2)),
                                 complete_graph(2));
  CHECK(b3.expected_columns == 5);  // 12 - 8 + 1 for the 3-cube

  std::mt19937 rng(23);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto random_connected = [&](int n) {
    while (true) {
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (coin(rng) < 0.5) edges.push_back({i, j, 1.0});
      try {
        Graph g(n, edges);
        if (g.connected()) return g;
      } catch (const std::invalid_argument&) {
      }
    }
  };
  for (int trial = 0; trial < 20; ++trial) {
    Graph a = random_connected(2 + static_cast<int>(rng() % 5));
    Graph b = random_connected(2 + static_cast<int>(rng() % 5));
    auto basis = cartesian_null_basis(a, b);  // verifies R N = 0 and the rank internally
    CHECK(basis.n.cols() == basis.expected_columns);
    CHECK(basis.edge_order.size() == static_cast<size_t>(basis.r.cols()));
  }
}

TEST_CASE("kernel sign relation forces one of the two structure cases") {
  // every product edge pair whose kernel projections agree up to sign is a
  // layer pair over an edge factor or a pendant corner pair
  std::vector<std::pair<Graph, Graph>> products;
  products.emplace_back(complete_graph(2), complete_graph(2));
  products.emplace_back(path_graph(3), complete_graph(2));
  products.emplace_back(complete_graph(3), complete_graph(2));
  products.emplace_back(path_graph(4), complete_graph(2));
  products.emplace_back(path_graph(3), path_graph(3));
  for (const auto& [x1, x2] : products) {
    Graph product = cartesian_product(x1, x2);
    auto basis = cartesian_null_basis(x1, x2);
    int m = product.edge_count();
    // locate canonical edges inside the block ordering
    std::vector<int> block_index(m, -1);
    for (size_t col = 0; col < basis.edge_order.size(); ++col) {
      int id = product.edge_index(basis.edge_order[col].first, basis.edge_order[col].second);
      REQUIRE(id >= 0);
      block_index[id] = static_cast<int>(col);
    }
    Eigen::MatrixXd nd = basis.n.cast<double>();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Eigen::VectorXd h1 = Eigen::VectorXd::Zero(basis.r.cols());
        Eigen::VectorXd h2 = Eigen::VectorXd::Zero(basis.r.cols());
        h1[block_index[i]] = 1.0;
        h2[block_index[j]] = 1.0;
        bool plus = ((h1 - h2).transpose() * nd).cwiseAbs().maxCoeff() < 1e-9;
        bool minus = ((h1 + h2).transpose() * nd).cwiseAbs().maxCoeff() < 1e-9;
        if (!plus && !minus) continue;
        const Edge& e1 = product.edge(i);
        const Edge& e2 = product.edge(j);
        VpstDecision d = vpst_decision(x1, x2, {e1.u, e1.v}, {e2.u, e2.v});
        CHECK(d.structure_case != 0);
        // layer pairs match with equal sign, corner pairs with opposite sign
        if (d.structure_case == 1) CHECK(plus);
        if (d.structure_case == 2) CHECK(minus);
      }
  }
}

TEST_CASE("product transfer decisions") {
  Graph k2 = complete_graph(2);

  // layer pair on the 4-cycle: direct transfer, printed condition fails
  VpstDecision d1 = vpst_decision(k2, k2, {0, 2}, {1, 3});
  CHECK(d1.structure_case == 1);
  CHECK(d1.structural_sc);
  CHECK(d1.direct.verdict == Verdict::PST);
  CHECK(d1.direct.time == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK_FALSE(d1.integrality_condition);
  CHECK_FALSE(d1.discrepancies.empty());
  CHECK(d1.sign_partition_matches);

  // three-leaf star: strong cospectrality holds, transfer does not
  VpstDecision d3 = vpst_decision(star_graph(3), k2, {0, 2}, {1, 3});
  CHECK(d3.structure_case == 1);
  CHECK(d3.structural_sc);
  CHECK(d3.direct.verdict == Verdict::StronglyCospectralOnly);
  CHECK_FALSE(d3.structural_pst);
  CHECK(d3.sign_partition_matches);

  // two-leaf star: the factor support has a gap-two pair; not strongly
  // cospectral on either route
  VpstDecision d2 = vpst_decision(star_graph(2), k2, {0, 2}, {1, 3});
  CHECK(d2.structure_case == 1);
  CHECK_FALSE(d2.structural_sc);
  CHECK(d2.direct.verdict == Verdict::None);

  // pendant corner pair: never strongly cospectral
  Graph p3 = path_graph(3);
  Graph prod = cartesian_product(p3, k2);
  // corner (0,0): edges (0,0)-(0,1) [vertical] and (0,0)-(1,0) [horizontal]
  VpstDecision dc = vpst_decision(p3, k2, {0, 1}, {0, 2});
  CHECK(dc.structure_case == 2);
  CHECK_FALSE(dc.structural_sc);
  CHECK(dc.direct.verdict == Verdict::None);

  CHECK_THROWS_AS(vpst_decision(p3, k2, {0, 3}, {1, 3}), std::invalid_argument);
}
