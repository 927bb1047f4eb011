#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "pairwalk/exact.hpp"
#include "pairwalk/graph.hpp"

namespace pairwalk {

enum class HamiltonianKind { Adjacency, Laplacian, SignlessLaplacian };

std::string to_string(HamiltonianKind k);
HamiltonianKind hamiltonian_from_string(const std::string& s);

/// A for kind Adjacency, L = D - A, Q = D + A with D the weighted degree
/// diagonal. Any user-supplied symmetric matrix can go straight to
/// decompose() instead.
Eigen::MatrixXd hamiltonian(const Graph& x, HamiltonianKind kind);

/// Grouped spectral decomposition M = sum lambda E_lambda with distinct
/// ascending eigenvalues and orthogonal projectors.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  std::vector<Eigen::MatrixXd> projectors;
  double group_tolerance = 0;
  bool cluster_ambiguity = false;  // two clusters closer than 10x the grouping threshold

  int dim() const { return projectors.empty() ? 0 : static_cast<int>(projectors[0].rows()); }
  int distinct_count() const { return static_cast<int>(eigenvalues.size()); }
  double spectral_radius() const;
  Eigen::MatrixXd reconstruct() const;
};

/// Symmetric eigendecomposition with single-linkage eigenvalue clustering.
/// group_tol < 0 selects group_scale * (1 + spectral radius). Throws if the
/// projector invariants cannot be met at 1e-9.
SpectralDecomposition decompose(const Eigen::MatrixXd& m, double group_tol = -1.0,
                                double group_scale = 1e-8);

enum class NumberClass { Integer, Quadratic, Inconclusive };

/// Recognition of a finite set of reals as integers or elements
/// (c + d*sqrt(delta))/2 of a real quadratic ring.
struct SupportClassification {
  NumberClass kind = NumberClass::Inconclusive;
  long long delta = 1;  // square-free; > 1 for Quadratic
  long long c = 0;      // Quadratic: member = (c + d sqrt(delta)) / 2
  std::vector<double> members;
  std::vector<long long> d;  // per member: Integer -> the integer itself, Quadratic -> d
  Rational g{0, 1};          // gcd{(lambda - theta)/sqrt(delta)} over pairs; zero when < 2 members
  bool integer_confirmed = false;  // members re-validated against an integer Hamiltonian
};

struct ClassifyOptions {
  double int_tol = 1e-6;
  double fit_tol = 1e-6;
  long long den_bound = 1'000'000;
};

/// Classify support values. When `integer_hamiltonian` is given, integer
/// snapping is confirmed by evaluating det(M - vI) exactly; a failed
/// confirmation falls through to the quadratic fit.
SupportClassification classify(const std::vector<double>& values,
                               const ClassifyOptions& opts = {},
                               const std::optional<Eigen::MatrixXi>& integer_hamiltonian = {});

/// (lambda_i - lambda_j) / sqrt(delta) as an exact rational from classified
/// integer data. Valid for kind Integer or Quadratic.
Rational pair_difference_over_sqrt_delta(const SupportClassification& c, size_t i, size_t j);

/// All difference ratios rational (sets of size <= 2 pass trivially).
bool ratio_condition(const std::vector<double>& values, long long den_bound = 1'000'000);

}  // namespace pairwalk
