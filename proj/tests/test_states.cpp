#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pairwalk/states.hpp"

using namespace pairwalk;

TEST_CASE("s-pair state construction") {
  CHECK_THROWS_AS(SPairState(1, 1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(SPairState(0, 1, 0.0), std::invalid_argument);
  State u = SPairState(0, 2, -2.0).to_state(4);
  CHECK(u.norm() == doctest::Approx(1.0));
  CHECK(u[2] / u[0] == doctest::Approx(-2.0));
  CHECK_THROWS_AS(SPairState(0, 9, 1.0).to_state(4), std::invalid_argument);
  CHECK_THROWS_AS(make_state(Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST_CASE("eigenvalue supports") {
  // complete graph: the pair state is a single-eigenvalue state
  SpectralDecomposition k5 = decompose(complete_graph(5).adjacency());
  auto sup = support(SPairState(0, 1, -1.0).to_state(5), k5);
  REQUIRE(sup.values.size() == 1);
  CHECK(sup.values[0] == doctest::Approx(-1.0));

  // 5-cycle pair state: the all-ones eigenvalue drops out, golden pair stays
  SpectralDecomposition c5 = decompose(cycle_graph(5).adjacency());
  auto sup5 = support(SPairState(0, 1, -1.0).to_state(5), c5);
  REQUIRE(sup5.values.size() == 2);
  double r5 = std::sqrt(5.0);
  CHECK(sup5.values[0] == doctest::Approx((-1 - r5) / 2));
  CHECK(sup5.values[1] == doctest::Approx((-1 + r5) / 2));

  // 6-cycle: lambda_j in the support of e0 - e1 whenever j != 0
  SpectralDecomposition c6 = decompose(cycle_graph(6).adjacency());
  auto sup6 = support(SPairState(0, 1, -1.0).to_state(6), c6);
  CHECK(sup6.values.size() == 3);
  CHECK(sup6.values[0] == doctest::Approx(-2.0));
}

TEST_CASE("fixed states") {
  SpectralDecomposition c4 = decompose(cycle_graph(4).adjacency());
  auto lam = fixed_eigenvalue(SPairState(0, 2, -1.0).to_state(4), c4);
  REQUIRE(lam.has_value());
  CHECK(*lam == doctest::Approx(0.0));

  // twin leaves are fixed for all three standard Hamiltonians
  Graph star = star_graph(3);
  for (auto kind : {HamiltonianKind::Adjacency, HamiltonianKind::Laplacian,
                    HamiltonianKind::SignlessLaplacian}) {
    SpectralDecomposition dec = decompose(hamiltonian(star, kind));
    CHECK(fixed_eigenvalue(SPairState(1, 2, -1.0).to_state(4), dec).has_value());
  }

  SpectralDecomposition p3 = decompose(path_graph(3).adjacency());
  CHECK_FALSE(fixed_eigenvalue(SPairState(0, 2, 1.0).to_state(3), p3).has_value());
}

TEST_CASE("cycle pair-state support membership rule") {
  // lambda_j enters the support of e_0 - e_b exactly when n does not
  // divide b*j (and of e_0 + e_b when bj/n - 1/2 is not an integer),
  // j running to n/2
  for (int n = 5; n <= 10; ++n) {
    SpectralDecomposition dec = decompose(cycle_graph(n).adjacency());
    for (int b = 1; b <= n / 2; ++b) {
      auto sup_minus = support(SPairState(0, b, -1.0).to_state(n), dec, 1e-8);
      for (int j = 0; j <= n / 2; ++j) {
        double lam = 2 * std::cos(2 * std::numbers::pi * j / n);
        bool expect_in = (b * j) % n != 0;
        bool in = false;
        for (double v : sup_minus.values)
          if (std::abs(v - lam) < 1e-7) in = true;
        // distinct cosine values only; skip aliases of the same eigenvalue
        bool aliased = false;
        for (int j2 = 0; j2 <= n / 2; ++j2)
          if (j2 != j && std::abs(lam - 2 * std::cos(2 * std::numbers::pi * j2 / n)) < 1e-9)
            aliased = true;
        if (!aliased) CHECK(in == expect_in);
      }
    }
  }
}

TEST_CASE("support lower bound") {
  Graph c8 = cycle_graph(8);
  SpectralDecomposition dec = decompose(c8.adjacency());
  CHECK(support_lower_bound_ok(SPairState(0, 4, -1.0), dec, c8));

  Graph q3 = hypercube_graph(3);
  SpectralDecomposition dq = decompose(q3.adjacency());
  CHECK(support_lower_bound_ok(SPairState(0, 7, 1.0), dq, q3));
  auto sup = support(SPairState(0, 7, 1.0).to_state(8), dq);
  CHECK(sup.values.size() >= 2);

  // random graphs, several s values, all three Hamiltonians
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        if (coin(rng) < 0.25) edges.push_back({i, j, 1.0});
    Graph g(n, edges);
    for (auto kind : {HamiltonianKind::Adjacency, HamiltonianKind::Laplacian,
                      HamiltonianKind::SignlessLaplacian}) {
      SpectralDecomposition d = decompose(hamiltonian(g, kind));
      for (double s : {1.0, -1.0, 2.0, -2.0, 0.5})
        for (int b = 1; b < n; ++b) CHECK(support_lower_bound_ok(SPairState(0, b, s), d, g));
    }
  }
}

TEST_CASE("support weights resolve the state") {
  std::mt19937 rng(17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Graph g = cycle_graph(7);
  SpectralDecomposition dec = decompose(g.adjacency());
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd raw(7);
    for (int i = 0; i < 7; ++i) raw[i] = gauss(rng);
    State u = make_state(raw);
    auto sup = support(u, dec, 1e-10);
    double total = 0;
    for (double w : sup.weights) total += w * w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

    // shrinking the threshold never removes members
    auto tight = support(u, dec, 1e-6);
    auto loose = support(u, dec, 1e-12);
    for (int idx : tight.indices)
      CHECK(std::find(loose.indices.begin(), loose.indices.end(), idx) != loose.indices.end());
  }
}

TEST_CASE("state literals") {
  State v = parse_state_literal("2", 4);
  CHECK(v[2] == 1.0);

  State sp = parse_state_literal("0+2*3", 4);
  CHECK(sp[3] / sp[0] == doctest::Approx(2.0));

  State sn = parse_state_literal("1+-0.5*2", 4);
  CHECK(sn[2] / sn[1] == doctest::Approx(-0.5));

  State vec = parse_state_literal("[1, 0, 0, 1]", 4);
  CHECK(vec[0] == doctest::Approx(1 / std::sqrt(2.0)));

  CHECK_THROWS_AS(parse_state_literal("9", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_state_literal("[1,2]", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_state_literal("0+1", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_state_literal("", 4), std::invalid_argument);
}
