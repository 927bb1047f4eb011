#include <doctest.h>

#include <cmath>

#include "pairwalk/exact.hpp"
#include "pairwalk/graph.hpp"

using namespace pairwalk;

TEST_CASE("rational normalization and arithmetic") {
  Rational r(6, -4);
  CHECK(r.num == -3);
  CHECK(r.den == 2);
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(3, 2) / Rational(1, 2)) == Rational(3, 1));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("gcd of rationals") {
  CHECK(rational_gcd(Rational(3, 2), Rational(1, 1)) == Rational(1, 2));
  CHECK(rational_gcd(Rational(4, 1), Rational(6, 1)) == Rational(2, 1));
  CHECK(rational_gcd({Rational(1, 2), Rational(3, 2), Rational(5, 2)}) == Rational(1, 2));
  CHECK(rational_gcd(Rational(0, 1), Rational(-7, 3)) == Rational(7, 3));
}

TEST_CASE("continued-fraction reconstruction") {
  auto r = reconstruct_rational(22.0 / 7.0);
  REQUIRE(r.has_value());
  CHECK(r->num == 22);
  CHECK(r->den == 7);

  CHECK(reconstruct_rational(1.0 / 3.0)->den == 3);
  CHECK(reconstruct_rational(-5.0)->num == -5);

  // well-approximable irrationals must not be snapped
  CHECK_FALSE(reconstruct_rational((1.0 + std::sqrt(5.0)) / 2.0).has_value());
  CHECK_FALSE(reconstruct_rational(std::sqrt(2.0)).has_value());
  CHECK_FALSE(reconstruct_rational(3.14159265358979).has_value());

  // denominator bound respected
  CHECK_FALSE(reconstruct_rational(1.0 / 2097152.0, 1'000'000).has_value());
}

TEST_CASE("square-free part and exact square root") {
  CHECK(squarefree_part(8) == 2);
  CHECK(squarefree_part(12) == 3);
  CHECK(squarefree_part(49) == 1);
  CHECK(squarefree_part(5) == 5);
  CHECK(squarefree_part(1) == 1);
  CHECK(exact_isqrt(49) == 7);
  CHECK_FALSE(exact_isqrt(50).has_value());
}

TEST_CASE("integer determinant and eigenvalue membership") {
  Eigen::MatrixXi m(3, 3);
  m << 2, 1, 0, 1, 2, 1, 0, 1, 2;
  CHECK(integer_determinant(m) == 4);

  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(4, 4);
  auto c4 = cycle_graph(4);
  for (const auto& e : c4.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  CHECK(is_integer_eigenvalue(a, 2));
  CHECK(is_integer_eigenvalue(a, 0));
  CHECK(is_integer_eigenvalue(a, -2));
  CHECK_FALSE(is_integer_eigenvalue(a, 1));
}

TEST_CASE("integer null space of incidence matrices") {
  // even cycle: one kernel vector, alternating signs
  Eigen::MatrixXi r = incidence_matrix(cycle_graph(4));
  Eigen::MatrixXi k = integer_nullspace(r);
  REQUIRE(k.cols() == 1);
  CHECK((r * k).cwiseAbs().maxCoeff() == 0);

  // odd unicyclic: trivial kernel
  CHECK(integer_nullspace(incidence_matrix(cycle_graph(5))).cols() == 0);
  CHECK(integer_nullspace(incidence_matrix(path_graph(4))).cols() == 0);

  // K4: m - n = 2
  Eigen::MatrixXi rk4 = incidence_matrix(complete_graph(4));
  Eigen::MatrixXi k4 = integer_nullspace(rk4);
  CHECK(k4.cols() == 2);
  CHECK((rk4 * k4).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("greedy independent columns") {
  Eigen::MatrixXi r = incidence_matrix(cycle_graph(4));
  auto sel = greedy_independent_columns(r);
  CHECK(sel == std::vector<int>{0, 1, 2});
  CHECK(integer_rank(r) == 3);
  CHECK(integer_rank(incidence_matrix(cycle_graph(5))) == 5);
  CHECK(integer_rank(incidence_matrix(path_graph(5))) == 4);
}

TEST_CASE("integer matrix rounding") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 2.0 + 1e-12, -3.0, 0.0;
  auto i = to_integer_matrix(m);
  REQUIRE(i.has_value());
  CHECK((*i)(0, 1) == 2);
  m(0, 0) = 1.5;
  CHECK_FALSE(to_integer_matrix(m).has_value());
}
