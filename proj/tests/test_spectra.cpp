#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pairwalk/spectra.hpp"

using namespace pairwalk;

TEST_CASE("hamiltonian construction") {
  Eigen::MatrixXd q = hamiltonian(complete_graph(2), HamiltonianKind::SignlessLaplacian);
  CHECK(q(0, 0) == 1.0);
  CHECK(q(0, 1) == 1.0);

  Eigen::MatrixXd l = hamiltonian(cycle_graph(4), HamiltonianKind::Laplacian);
  CHECK(l(0, 0) == 2.0);
  CHECK(l(0, 1) == -1.0);
  CHECK(l(0, 2) == 0.0);
  CHECK(l.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);

  Eigen::MatrixXd a = hamiltonian(p5w_graph(4.0), HamiltonianKind::Adjacency);
  CHECK(a(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("decomposition of the 4-cycle and complete graphs") {
  SpectralDecomposition dec = decompose(cycle_graph(4).adjacency());
  REQUIRE(dec.distinct_count() == 3);
  CHECK(dec.eigenvalues[0] == doctest::Approx(-2.0));
  CHECK(dec.eigenvalues[1] == doctest::Approx(0.0));
  CHECK(dec.eigenvalues[2] == doctest::Approx(2.0));
  CHECK(dec.projectors[1].trace() == doctest::Approx(2.0));  // multiplicity two

  for (int n : {3, 5, 7}) {
    SpectralDecomposition d = decompose(complete_graph(n).adjacency());
    Eigen::MatrixXd j = Eigen::MatrixXd::Ones(n, n) / n;
    CHECK((d.projectors.back() - j).cwiseAbs().maxCoeff() < 1e-12);
  }

  // cycle projector entries: (2/n) cos(2 pi j (a-b) / n) for 0 < j < n/2
  int n = 5;
  SpectralDecomposition d5 = decompose(cycle_graph(n).adjacency());
  double lam1 = 2 * std::cos(2 * std::numbers::pi / n);
  for (int i = 0; i < d5.distinct_count(); ++i) {
    if (std::abs(d5.eigenvalues[i] - lam1) > 1e-9) continue;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        CHECK(d5.projectors[i](a, b) ==
              doctest::Approx((2.0 / n) * std::cos(2 * std::numbers::pi * (a - b) / n))
                  .epsilon(1e-9));
  }
}

TEST_CASE("decomposition invariants on random symmetric matrices") {
  std::mt19937 rng(2024);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 11);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = gauss(rng);
    SpectralDecomposition dec = decompose(m);
    CHECK((dec.reconstruct() - m).cwiseAbs().maxCoeff() < 1e-9 * (1 + dec.spectral_radius()));
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (const auto& p : dec.projectors) {
      CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-9);
      sum += p;
    }
    CHECK((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9);
  }
  CHECK_THROWS_AS(decompose(Eigen::MatrixXd::Random(4, 4)), std::invalid_argument);
}

TEST_CASE("classification of integer and quadratic sets") {
  auto integer = classify({2.0, 0.0, -2.0});
  CHECK(integer.kind == NumberClass::Integer);
  CHECK(integer.g == Rational(2, 1));

  double r5 = std::sqrt(5.0);
  auto quad = classify({(-1 + r5) / 2, (-1 - r5) / 2});
  CHECK(quad.kind == NumberClass::Quadratic);
  CHECK(quad.delta == 5);
  CHECK(quad.c == -1);
  CHECK(quad.g == Rational(1, 1));

  std::vector<double> c7;
  for (int j = 1; j <= 3; ++j) c7.push_back(2 * std::cos(2 * std::numbers::pi * j / 7));
  CHECK(classify(c7).kind == NumberClass::Inconclusive);

  // half-integer d data: the 8-cycle pair support
  double r2 = std::sqrt(2.0);
  auto c8 = classify({r2, 0.0, -r2});
  CHECK(c8.kind == NumberClass::Quadratic);
  CHECK(c8.delta == 2);
  CHECK(c8.c == 0);
  CHECK(c8.g == Rational(1, 1));
}

TEST_CASE("classification shift invariance") {
  double r5 = std::sqrt(5.0);
  std::vector<double> base{(-1 + r5) / 2, (-1 - r5) / 2, (-1 + 3 * r5) / 2, (-1 - 3 * r5) / 2};
  auto cls = classify(base);
  REQUIRE(cls.kind == NumberClass::Quadratic);
  for (long long shift : {1, -2, 5}) {
    std::vector<double> shifted;
    for (double v : base) shifted.push_back(v + shift);
    auto cls2 = classify(shifted);
    REQUIRE(cls2.kind == NumberClass::Quadratic);
    CHECK(cls2.delta == cls.delta);
    CHECK(cls2.c == cls.c + 2 * shift);
    CHECK(cls2.g == cls.g);
  }
}

TEST_CASE("integer confirmation against the characteristic polynomial") {
  Graph c4 = cycle_graph(4);
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(4, 4);
  for (const auto& e : c4.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  auto ok = classify({2.0, 0.0, -2.0}, {}, a);
  CHECK(ok.kind == NumberClass::Integer);
  CHECK(ok.integer_confirmed);

  // 1 is not an eigenvalue of the 4-cycle: confirmation must reject the snap
  auto bad = classify({1.0, 0.0}, {}, a);
  CHECK(bad.kind == NumberClass::Inconclusive);
}

TEST_CASE("ratio condition") {
  double r5 = std::sqrt(5.0);
  CHECK_FALSE(ratio_condition({2.0, (-1 + r5) / 2, (-1 - r5) / 2}));
  CHECK(ratio_condition({(-1 + r5) / 2, (-1 - r5) / 2}));
  CHECK(ratio_condition({7.25}));
  CHECK(ratio_condition({0.0, std::sqrt(2.0), 2 * std::sqrt(2.0)}));
  CHECK(ratio_condition({2.0, 0.0, -2.0, 6.0}));
  std::vector<double> c7;
  for (int j = 1; j <= 3; ++j) c7.push_back(2 * std::cos(2 * std::numbers::pi * j / 7));
  CHECK_FALSE(ratio_condition(c7));

  // integer / quadratic classifications always satisfy the ratio condition
  for (auto values : std::vector<std::vector<double>>{
           {3.0, 1.0, -1.0}, {r5, -r5, 3 * r5}, {0.5 + r5 / 2, 0.5 - r5 / 2, 2.5 + r5 / 2}}) {
    auto cls = classify(values);
    if (cls.kind != NumberClass::Inconclusive) CHECK(ratio_condition(values));
  }
}

TEST_CASE("exact pair differences") {
  double r2 = std::sqrt(2.0);
  auto cls = classify({r2, 0.0, -r2});
  REQUIRE(cls.kind == NumberClass::Quadratic);
  // members ascend: -r2, 0, r2 with d = -2, 0, 2
  CHECK(pair_difference_over_sqrt_delta(cls, 2, 0) == Rational(2, 1));
  CHECK(pair_difference_over_sqrt_delta(cls, 1, 0) == Rational(1, 1));
}
