#include "pairwalk/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pairwalk {

namespace {

long long safe_ll(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) { n = -n; d = -d; }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  return Rational(safe_ll(n), safe_ll(d));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.num;
  __int128 d = static_cast<__int128>(den) * o.den;
  return Rational(safe_ll(n), safe_ll(d));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::invalid_argument("Rational: divide by zero");
  __int128 n = static_cast<__int128>(num) * o.den;
  __int128 d = static_cast<__int128>(den) * o.num;
  return Rational(safe_ll(n), safe_ll(d));
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return Rational(b.num < 0 ? -b.num : b.num, b.den);
  if (b.is_zero()) return Rational(a.num < 0 ? -a.num : a.num, a.den);
  long long n = std::gcd(a.num < 0 ? -a.num : a.num, b.num < 0 ? -b.num : b.num);
  long long l = std::lcm(a.den, b.den);
  return Rational(n, l);
}

Rational rational_gcd(const std::vector<Rational>& values) {
  Rational g(0, 1);
  for (const auto& v : values) g = rational_gcd(g, v);
  return g;
}

std::optional<Rational> reconstruct_rational(double x, long long den_bound, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  const double scale = std::max(1.0, std::abs(x));
  // Convergents p_k/q_k of the continued fraction of x.
  double rem = x;
  long long p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
  long long p1 = static_cast<long long>(std::floor(rem)), q1 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    double err = std::abs(x - static_cast<double>(p1) / static_cast<double>(q1));
    if (err <= tol * scale) {
      // Reject when the residual is only generically good for this
      // denominator; true rationals in double data sit far below 1/q^2.
      if (err * static_cast<double>(q1) * static_cast<double>(q1) > 1e-4 * scale)
        return std::nullopt;
      return Rational(p1, q1);
    }
    double frac = rem - std::floor(rem);
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
    double a_d = std::floor(rem);
    if (a_d > 9.0e18) break;
    long long a = static_cast<long long>(a_d);
    __int128 p2 = static_cast<__int128>(a) * p1 + p0;
    __int128 q2 = static_cast<__int128>(a) * q1 + q0;
    if (q2 > den_bound || p2 > INT64_MAX || p2 < INT64_MIN) return std::nullopt;
    p0 = p1; q0 = q1;
    p1 = static_cast<long long>(p2);
    q1 = static_cast<long long>(q2);
  }
  double err = std::abs(x - static_cast<double>(p1) / static_cast<double>(q1));
  if (q1 != 0 && err <= tol * scale &&
      err * static_cast<double>(q1) * static_cast<double>(q1) <= 1e-4 * scale)
    return Rational(p1, q1);
  return std::nullopt;
}

long long squarefree_part(long long n) {
  if (n <= 0) throw std::invalid_argument("squarefree_part: argument must be positive");
  long long rest = n, out = 1;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    int e = 0;
    while (rest % p == 0) { rest /= p; ++e; }
    if (e % 2) out *= p;
  }
  return out * rest;
}

std::optional<long long> exact_isqrt(long long n) {
  if (n < 0) return std::nullopt;
  long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (long long c = std::max(0LL, r - 2); c <= r + 2; ++c)
    if (c * c == n) return c;
  return std::nullopt;
}

BigInt integer_determinant(const Eigen::MatrixXi& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("integer_determinant: square matrix required");
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

bool is_integer_eigenvalue(const Eigen::MatrixXi& m, long long v) {
  Eigen::MatrixXi shifted = m;
  for (int i = 0; i < m.rows(); ++i) shifted(i, i) -= static_cast<int>(v);
  return integer_determinant(shifted) == 0;
}

Eigen::MatrixXi integer_nullspace(const Eigen::MatrixXi& a) {
  using boost::multiprecision::cpp_rational;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  std::vector<std::vector<cpp_rational>> m(rows, std::vector<cpp_rational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = a(i, j);

  // Gauss-Jordan to reduced row echelon form.
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    cpp_rational inv = m[r][c];
    for (int j = 0; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      cpp_rational f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<BigInt>> basis;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<cpp_rational> vec(cols, 0);
    vec[free_c] = 1;
    for (size_t pi = 0; pi < pivot_col.size(); ++pi)
      vec[pivot_col[pi]] = -m[pi][free_c];
    BigInt lcm_den = 1;
    for (const auto& q : vec)
      lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(q));
    std::vector<BigInt> ivec(cols);
    BigInt g = 0;
    for (int j = 0; j < cols; ++j) {
      ivec[j] = boost::multiprecision::numerator(vec[j]) *
                (lcm_den / boost::multiprecision::denominator(vec[j]));
      g = boost::multiprecision::gcd(g, ivec[j]);
    }
    if (g > 1)
      for (auto& x : ivec) x /= g;
    basis.push_back(std::move(ivec));
  }

  Eigen::MatrixXi out(cols, static_cast<int>(basis.size()));
  for (int j = 0; j < out.cols(); ++j)
    for (int i = 0; i < cols; ++i) {
      if (basis[j][i] > INT32_MAX || basis[j][i] < INT32_MIN)
        throw std::overflow_error("integer_nullspace: entry exceeds 32-bit range");
      out(i, j) = static_cast<int>(basis[j][i]);
    }
  return out;
}

namespace {

/// Incremental exact elimination basis for membership tests.
class RationalSpan {
 public:
  /// Returns true (and absorbs the vector) when v was independent of the span.
  bool add(std::vector<boost::multiprecision::cpp_rational> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      auto f = v[pivot];
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        auto inv = v[j];
        for (auto& x : v) x /= inv;
        rows_.emplace_back(j, std::move(v));
        return true;
      }
    return false;
  }

 private:
  std::vector<std::pair<size_t, std::vector<boost::multiprecision::cpp_rational>>> rows_;
};

}  // namespace

std::vector<int> greedy_independent_columns(const Eigen::MatrixXi& a) {
  RationalSpan span;
  std::vector<int> selected;
  for (int c = 0; c < a.cols(); ++c) {
    std::vector<boost::multiprecision::cpp_rational> v(a.rows());
    for (int i = 0; i < a.rows(); ++i) v[i] = a(i, c);
    if (span.add(std::move(v))) selected.push_back(c);
  }
  return selected;
}

int integer_rank(const Eigen::MatrixXi& a) {
  return static_cast<int>(greedy_independent_columns(a).size());
}

std::optional<Eigen::MatrixXi> to_integer_matrix(const Eigen::MatrixXd& m, double tol) {
  Eigen::MatrixXi out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      double r = std::round(m(i, j));
      if (std::abs(m(i, j) - r) > tol || std::abs(r) > 1e9) return std::nullopt;
      out(i, j) = static_cast<int>(r);
    }
  return out;
}

}  // namespace pairwalk
