#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/spectra.hpp"

namespace pairwalk {

/// Unit-norm real state on the vertices of a graph.
using State = Eigen::VectorXd;

/// Normalize and validate a state vector.
State make_state(const Eigen::VectorXd& v);

/// Two-support state e_a + s e_b (normalized on demand).
struct SPairState {
  int a = 0;
  int b = 1;
  double s = 1.0;

  SPairState() = default;
  SPairState(int a_, int b_, double s_);
  State to_state(int n) const;
};

struct EigenvalueSupport {
  std::vector<int> indices;     // into SpectralDecomposition::eigenvalues
  std::vector<double> values;   // the support eigenvalues, ascending
  std::vector<double> weights;  // ||E_lambda u||
};

/// Eigenvalues lambda with ||E_lambda u|| > support_tol.
EigenvalueSupport support(const State& u, const SpectralDecomposition& dec,
                          double support_tol = 1e-8);

/// The eigenvalue when u is fixed (support of size one), otherwise nullopt.
std::optional<double> fixed_eigenvalue(const State& u, const SpectralDecomposition& dec,
                                       double support_tol = 1e-8);

/// Support size either 1 (fixed) or at least ceil(dist(a,b)/2).
bool support_lower_bound_ok(const SPairState& u, const SpectralDecomposition& dec, const Graph& x,
                            double support_tol = 1e-8);

/// State literal: "a" (vertex), "a+s*b" (s-pair, s a real literal), or
/// "[x0,x1,...]" (explicit vector, normalized).
State parse_state_literal(const std::string& text, int n);

}  // namespace pairwalk
