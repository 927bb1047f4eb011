#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pairwalk {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction on 64-bit parts. Denominator kept positive.
/// Intermediate products go through __int128; desk-scale spectral data never
/// gets near the limits.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  std::string str() const;
};

/// gcd(p1/q1, p2/q2) = gcd(p1,p2) / lcm(q1,q2); the largest rational dividing
/// both arguments to an integer multiple.
Rational rational_gcd(const Rational& a, const Rational& b);
Rational rational_gcd(const std::vector<Rational>& values);

/// Continued-fraction rational reconstruction. Accepts a convergent p/q only
/// when the residual is both below `tol` and far smaller than the generic
/// approximation quality 1/q^2, so well-approximable irrationals (e.g. the
/// golden ratio) are rejected rather than snapped to a large-denominator
/// fraction.
std::optional<Rational> reconstruct_rational(double x, long long den_bound = 1'000'000,
                                             double tol = 1e-9);

/// Largest square-free divisor d of n with n/d a perfect square (n > 0).
long long squarefree_part(long long n);

std::optional<long long> exact_isqrt(long long n);

/// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
BigInt integer_determinant(const Eigen::MatrixXi& m);

/// True iff det(M - vI) == 0 exactly, i.e. v is an eigenvalue of the integer
/// matrix M.
bool is_integer_eigenvalue(const Eigen::MatrixXi& m, long long v);

/// Integer basis of the null space of an integer matrix. Columns of the
/// result span ker(A) exactly; each column has coprime entries. The result
/// has zero columns removed, so a trivial kernel yields a matrix with zero
/// columns.
Eigen::MatrixXi integer_nullspace(const Eigen::MatrixXi& a);

/// Greedy maximal linearly independent column set, scanned left to right
/// with exact arithmetic. Deterministic.
std::vector<int> greedy_independent_columns(const Eigen::MatrixXi& a);

/// Exact rank of an integer matrix.
int integer_rank(const Eigen::MatrixXi& a);

/// Round a real matrix to integers when every entry is within tol of one.
std::optional<Eigen::MatrixXi> to_integer_matrix(const Eigen::MatrixXd& m, double tol = 1e-9);

}  // namespace pairwalk
