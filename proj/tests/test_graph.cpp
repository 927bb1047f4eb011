#include <doctest.h>

#include <random>

#include "pairwalk/graph.hpp"
#include "pairwalk/spectra.hpp"
#include "pairwalk/transfer.hpp"

using namespace pairwalk;

namespace {

Graph random_connected(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < 0.45) edges.push_back({i, j, 1.0});
    try {
      Graph g(n, edges);
      if (g.connected()) return g;
    } catch (const std::invalid_argument&) {
    }
  }
}

}  // namespace

TEST_CASE("graph invariants are enforced") {
  CHECK_THROWS_AS(Graph(3, {{0, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, 1.0}, {1, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 3, 1.0}}), std::invalid_argument);

  Graph g(3, {{2, 0, 1.0}, {0, 1, 1.0}});
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);  // canonical sort
  CHECK(g.edge_index(2, 0) == 1);
  CHECK(g.connected());
  CHECK(g.unweighted());
}

TEST_CASE("named families") {
  Graph k3 = complete_graph(3);
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);
  for (const auto& e : k3.edges()) CHECK(e.w == 1.0);

  Graph ds = double_star_graph();
  CHECK(ds.vertex_count() == 46);
  CHECK(ds.degree(0) == doctest::Approx(20));
  CHECK(ds.degree(1) == doctest::Approx(32));

  Graph q3 = hypercube_graph(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);

  Graph p5 = p5w_graph(4.0);
  CHECK(p5.weight(0, 1) == doctest::Approx(2.0));
  CHECK(p5.weight(1, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(p5w_graph(0.0), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("blow-up family has the scaled 8-cycle quotient") {
  Graph x = blowup_c8_graph(2);
  CHECK(x.vertex_count() == 12);
  Eigen::MatrixXd a = x.adjacency();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(12, 8);
  for (int k = 0; k < 4; ++k) {
    p(k, 2 * k) = 1.0;
    for (int t = 0; t < 2; ++t) p(4 + 2 * k + t, 2 * k + 1) = 1.0 / std::sqrt(2.0);
  }
  Eigen::MatrixXd b = p.transpose() * a * p;
  Eigen::MatrixXd want = std::sqrt(2.0) * cycle_graph(8).adjacency();
  CHECK((b - want).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("family spec parsing") {
  CHECK(family("cycle(8)").vertex_count() == 8);
  CHECK(family("complete_bipartite(2,4)").edge_count() == 8);
  CHECK(family("K5").edge_count() == 10);
  CHECK(family("K2,4").vertex_count() == 6);
  CHECK(family("Q3").edge_count() == 12);
  CHECK(family("P3").edge_count() == 2);
  CHECK(family("S4").vertex_count() == 5);
  CHECK(family("x_double_star").vertex_count() == 46);
  CHECK(family("p5w(2.5)").weight(3, 4) == doctest::Approx(std::sqrt(2.5)));
  CHECK_THROWS_AS(family("frobnicate(3)"), std::invalid_argument);
  CHECK_THROWS_AS(family("cycle(-1)"), std::invalid_argument);
}

TEST_CASE("cartesian products") {
  Graph c4 = cartesian_product(complete_graph(2), complete_graph(2));
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.neighbors(v).size() == 2);

  Graph pk = cartesian_product(path_graph(3), complete_graph(2));
  CHECK(pk.vertex_count() == 6);
  CHECK(pk.edge_count() == 7);

  Graph q3 = cartesian_product(c4, complete_graph(2));
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);

  // edge count property over random factor pairs
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    Graph a = random_connected(rng, 2 + static_cast<int>(rng() % 4));
    Graph b = random_connected(rng, 2 + static_cast<int>(rng() % 4));
    Graph p = cartesian_product(a, b);
    CHECK(p.edge_count() ==
          a.vertex_count() * b.edge_count() + b.vertex_count() * a.edge_count());
  }

  // weights multiply through identically
  Graph wp = cartesian_product(p5w_graph(4.0), complete_graph(2));
  CHECK(wp.weight(0, 2) == doctest::Approx(2.0));  // (0,0)-(1,0) inherits sqrt(4)
  CHECK(wp.weight(0, 1) == doctest::Approx(1.0));  // K2 edge
}

TEST_CASE("line graphs and incidence identities") {
  Graph lk3 = line_graph(complete_graph(3));
  CHECK(lk3.vertex_count() == 3);
  CHECK(lk3.edge_count() == 3);

  CHECK(line_graph(cartesian_product(path_graph(3), complete_graph(2))).vertex_count() == 7);

  Graph lq3 = line_graph(hypercube_graph(3));
  CHECK(lq3.vertex_count() == 12);
  for (int v = 0; v < 12; ++v) CHECK(lq3.neighbors(v).size() == 4);

  CHECK_THROWS_AS(line_graph(p5w_graph(2.0)), std::invalid_argument);
  CHECK_THROWS_AS(incidence_matrix(p5w_graph(2.0)), std::invalid_argument);

  Eigen::MatrixXi r = incidence_matrix(complete_graph(2));
  CHECK(r.rows() == 2);
  CHECK(r.cols() == 1);
  CHECK(r(0, 0) == 1);
  CHECK(r(1, 0) == 1);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_connected(rng, 4 + static_cast<int>(rng() % 5));
    Eigen::MatrixXi rr = incidence_matrix(g);
    Eigen::MatrixXi q = rr * rr.transpose();
    auto qh = hamiltonian(g, HamiltonianKind::SignlessLaplacian);
    CHECK((q.cast<double>() - qh).cwiseAbs().maxCoeff() == 0.0);
    Eigen::MatrixXi al = rr.transpose() * rr -
                         2 * Eigen::MatrixXi::Identity(g.edge_count(), g.edge_count());
    CHECK((al.cast<double>() - line_graph(g).adjacency()).cwiseAbs().maxCoeff() == 0.0);
  }

  CHECK(integer_rank(incidence_matrix(path_graph(3))) == 2);  // tree: nullity zero
}

TEST_CASE("structure queries") {
  StructureReport c5 = structure_queries(cycle_graph(5));
  CHECK(c5.unicyclic);
  CHECK(c5.odd_cycle);
  CHECK_FALSE(c5.bipartite);
  CHECK(c5.cut_edges.empty());

  StructureReport p5 = structure_queries(path_graph(5));
  CHECK(p5.tree);
  CHECK(p5.cut_edges.size() == 4);

  Graph p5g = path_graph(5);
  CHECK(is_edge_cut(p5g, p5g.edge_index(2, 3), p5g.edge_index(0, 1)));

  Graph q3 = hypercube_graph(3);
  // two disjoint, non-opposite edges never disconnect the 3-cube
  CHECK_FALSE(is_edge_cut(q3, q3.edge_index(0, 1), q3.edge_index(2, 6)));

  // K4 minus two edges at one vertex stays connected and keeps a triangle
  Graph k4 = complete_graph(4);
  CHECK_FALSE(
      removal_leaves_bipartite_or_disconnected(k4, k4.edge_index(0, 1), k4.edge_index(0, 2)));
  // removing a perfect matching bipartizes it
  CHECK(removal_leaves_bipartite_or_disconnected(k4, k4.edge_index(0, 1), k4.edge_index(2, 3)));

  CHECK(distance(q3, 0, 7) == 3);
  CHECK(covering_radius(path_graph(5), {0, 4}) == 2);
  CHECK(covering_radius(path_graph(5), {2}) == 2);
}

TEST_CASE("distance structure") {
  DistanceStructure c6 = distance_structure(cycle_graph(6));
  CHECK(c6.diameter == 3);
  CHECK(c6.antipodal_class2);
  CHECK(c6.antipodal_identity_ok);
  CHECK(c6.k == std::vector<long>{1, 2, 2, 1});

  DistanceStructure q3 = distance_structure(hypercube_graph(3));
  CHECK(q3.diameter == 3);
  CHECK(q3.antipodal_class2);
  CHECK(q3.k == std::vector<long>{1, 3, 3, 1});

  DistanceStructure k4 = distance_structure(complete_graph(4));
  CHECK(k4.diameter == 1);
  CHECK_FALSE(k4.antipodal_class2);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = random_connected(rng, 3 + static_cast<int>(rng() % 5));
    DistanceStructure d = distance_structure(g);
    Eigen::MatrixXi sum = Eigen::MatrixXi::Zero(g.vertex_count(), g.vertex_count());
    for (const auto& a : d.a) sum += a;
    CHECK((sum.array() == 1).all());
    CHECK(d.a[0] == Eigen::MatrixXi::Identity(g.vertex_count(), g.vertex_count()));
  }
}
