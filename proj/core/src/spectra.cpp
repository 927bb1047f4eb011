#include "pairwalk/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace pairwalk {

std::string to_string(HamiltonianKind k) {
  switch (k) {
    case HamiltonianKind::Adjacency: return "adjacency";
    case HamiltonianKind::Laplacian: return "laplacian";
    case HamiltonianKind::SignlessLaplacian: return "signless_laplacian";
  }
  return "?";
}

HamiltonianKind hamiltonian_from_string(const std::string& s) {
  if (s == "a" || s == "adjacency") return HamiltonianKind::Adjacency;
  if (s == "l" || s == "laplacian") return HamiltonianKind::Laplacian;
  if (s == "q" || s == "signless_laplacian") return HamiltonianKind::SignlessLaplacian;
  throw std::invalid_argument("unknown hamiltonian '" + s + "'");
}

Eigen::MatrixXd hamiltonian(const Graph& x, HamiltonianKind kind) {
  Eigen::MatrixXd a = x.adjacency();
  if (kind == HamiltonianKind::Adjacency) return a;
  Eigen::VectorXd deg = a.rowwise().sum();
  Eigen::MatrixXd d = deg.asDiagonal();
  return kind == HamiltonianKind::Laplacian ? Eigen::MatrixXd(d - a) : Eigen::MatrixXd(d + a);
}

double SpectralDecomposition::spectral_radius() const {
  double r = 0;
  for (int i = 0; i < eigenvalues.size(); ++i) r = std::max(r, std::abs(eigenvalues[i]));
  return r;
}

Eigen::MatrixXd SpectralDecomposition::reconstruct() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
  for (int i = 0; i < distinct_count(); ++i) m += eigenvalues[i] * projectors[i];
  return m;
}

SpectralDecomposition decompose(const Eigen::MatrixXd& m, double group_tol, double group_scale) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("decompose: square matrix required");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1 + m.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("decompose: matrix not symmetric within 1e-12");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("decompose: eigensolver failed to converge");
  const Eigen::VectorXd& w = solver.eigenvalues();
  const Eigen::MatrixXd& v = solver.eigenvectors();

  double rho = std::max(std::abs(w[0]), std::abs(w[n - 1]));
  if (group_tol < 0) group_tol = group_scale * (1.0 + rho);

  // single-linkage clustering of the sorted eigenvalues
  std::vector<std::pair<int, int>> groups;  // [first, last] index ranges
  groups.emplace_back(0, 0);
  for (int i = 1; i < n; ++i) {
    if (w[i] - w[i - 1] <= group_tol)
      groups.back().second = i;
    else
      groups.emplace_back(i, i);
  }

  SpectralDecomposition dec;
  dec.group_tolerance = group_tol;
  dec.eigenvalues.resize(static_cast<int>(groups.size()));
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    auto [lo, hi] = groups[gi];
    double mean = 0;
    Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(n, n);
    for (int i = lo; i <= hi; ++i) {
      mean += w[i];
      proj.noalias() += v.col(i) * v.col(i).transpose();
    }
    dec.eigenvalues[static_cast<int>(gi)] = mean / (hi - lo + 1);
    dec.projectors.push_back(std::move(proj));
  }
  for (size_t gi = 1; gi < groups.size(); ++gi) {
    double gap = dec.eigenvalues[static_cast<int>(gi)] - dec.eigenvalues[static_cast<int>(gi - 1)];
    if (gap < 10 * group_tol) dec.cluster_ambiguity = true;
  }

  // invariant checks
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (const auto& p : dec.projectors) {
    if ((p - p.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw std::runtime_error("decompose: projector not symmetric");
    sum += p;
  }
  if ((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9)
    throw std::runtime_error("decompose: projectors do not resolve the identity");
  for (size_t i = 0; i < dec.projectors.size(); ++i)
    for (size_t j = i; j < dec.projectors.size(); ++j) {
      Eigen::MatrixXd prod = dec.projectors[i] * dec.projectors[j];
      Eigen::MatrixXd expect =
          (i == j) ? dec.projectors[i] : Eigen::MatrixXd::Zero(n, n);
      if ((prod - expect).cwiseAbs().maxCoeff() > 1e-9)
        throw std::runtime_error("decompose: projector orthogonality failure");
    }
  if ((dec.reconstruct() - m).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + rho))
    throw std::runtime_error("decompose: reconstruction failure");
  return dec;
}

namespace {

bool near_integer(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

std::optional<SupportClassification> try_quadratic_fit(const std::vector<double>& values,
                                                       long long c,
                                                       const ClassifyOptions& opts) {
  const size_t k = values.size();
  std::vector<double> t(k);
  for (size_t i = 0; i < k; ++i) t[i] = 2.0 * values[i] - static_cast<double>(c);

  long long delta = 0;
  std::vector<long long> d(k, 0);
  for (size_t i = 0; i < k; ++i) {
    double sq = t[i] * t[i];
    if (std::abs(sq) <= opts.fit_tol) continue;  // d = 0 member
    auto rec = reconstruct_rational(sq, opts.den_bound, opts.fit_tol);
    if (!rec || !rec->is_integer() || rec->num <= 0) return std::nullopt;
    long long sf = squarefree_part(rec->num);
    if (delta == 0)
      delta = sf;
    else if (delta != sf)
      return std::nullopt;
    auto root = exact_isqrt(rec->num / sf);
    if (!root) return std::nullopt;
    d[i] = (t[i] < 0 ? -*root : *root);
  }
  if (delta <= 1) return std::nullopt;  // all-integer shapes are handled upstream

  double sqrt_delta = std::sqrt(static_cast<double>(delta));
  for (size_t i = 0; i < k; ++i) {
    double fitted = (static_cast<double>(c) + static_cast<double>(d[i]) * sqrt_delta) / 2.0;
    if (std::abs(values[i] - fitted) > opts.fit_tol * (1.0 + std::abs(values[i])))
      return std::nullopt;
  }

  SupportClassification out;
  out.kind = NumberClass::Quadratic;
  out.delta = delta;
  out.c = c;
  out.members = values;
  out.d = std::move(d);
  return out;
}

void fill_gcd(SupportClassification& c) {
  if (c.members.size() < 2) {
    c.g = Rational(0, 1);
    return;
  }
  std::vector<Rational> diffs;
  for (size_t i = 1; i < c.members.size(); ++i)
    diffs.push_back(pair_difference_over_sqrt_delta(c, i, 0));
  c.g = rational_gcd(diffs);
}

}  // namespace

SupportClassification classify(const std::vector<double>& values, const ClassifyOptions& opts,
                               const std::optional<Eigen::MatrixXi>& integer_hamiltonian) {
  if (values.empty()) throw std::invalid_argument("classify: empty value set");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());

  bool all_int = true;
  for (double v : sorted)
    if (!near_integer(v, opts.int_tol)) all_int = false;

  if (all_int) {
    bool confirmed = false;
    bool confirmation_failed = false;
    if (integer_hamiltonian) {
      confirmed = true;
      std::set<long long> distinct;
      for (double v : sorted) distinct.insert(std::llround(v));
      for (long long v : distinct)
        if (!is_integer_eigenvalue(*integer_hamiltonian, v)) {
          confirmed = false;
          confirmation_failed = true;
        }
    }
    if (!confirmation_failed) {
      SupportClassification out;
      out.kind = NumberClass::Integer;
      out.delta = 1;
      out.members = sorted;
      for (double v : sorted) out.d.push_back(std::llround(v));
      out.integer_confirmed = confirmed;
      fill_gcd(out);
      return out;
    }
  }

  if (sorted.size() >= 2) {
    // Candidate c values from sums of conjugate-candidate pairs (and doubled
    // members, covering self-conjugate d = 0 entries).
    std::set<long long> candidates;
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (near_integer(2 * sorted[i], opts.int_tol)) candidates.insert(std::llround(2 * sorted[i]));
      for (size_t j = i + 1; j < sorted.size(); ++j)
        if (near_integer(sorted[i] + sorted[j], opts.int_tol))
          candidates.insert(std::llround(sorted[i] + sorted[j]));
    }
    for (long long c : candidates)
      if (auto fit = try_quadratic_fit(sorted, c, opts)) {
        fill_gcd(*fit);
        return *fit;
      }
  }

  SupportClassification out;
  out.kind = NumberClass::Inconclusive;
  out.members = sorted;
  return out;
}

Rational pair_difference_over_sqrt_delta(const SupportClassification& c, size_t i, size_t j) {
  if (c.kind == NumberClass::Integer) return Rational(c.d.at(i) - c.d.at(j), 1);
  if (c.kind == NumberClass::Quadratic) return Rational(c.d.at(i) - c.d.at(j), 2);
  throw std::logic_error("pair_difference_over_sqrt_delta: inconclusive classification");
}

bool ratio_condition(const std::vector<double>& values, long long den_bound) {
  if (values.empty()) throw std::invalid_argument("ratio_condition: empty value set");
  if (values.size() <= 2) return true;
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  // base difference: the largest, for numerical headroom
  double base = sorted.back() - sorted.front();
  if (base == 0) return true;
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      double ratio = (sorted[j] - sorted[i]) / base;
      if (!reconstruct_rational(ratio, den_bound, 1e-9)) return false;
    }
  return true;
}

}  // namespace pairwalk
