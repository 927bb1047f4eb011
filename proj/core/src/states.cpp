#include "pairwalk/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pairwalk {

State make_state(const Eigen::VectorXd& v) {
  double norm = v.norm();
  if (!(norm > 0) || !std::isfinite(norm))
    throw std::invalid_argument("state: zero or non-finite vector");
  return v / norm;
}

SPairState::SPairState(int a_, int b_, double s_) : a(a_), b(b_), s(s_) {
  if (a == b) throw std::invalid_argument("s-pair state: a != b required");
  if (s == 0 || !std::isfinite(s)) throw std::invalid_argument("s-pair state: s must be nonzero");
}

State SPairState::to_state(int n) const {
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("s-pair state: vertex out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[a] = 1.0;
  v[b] = s;
  return make_state(v);
}

EigenvalueSupport support(const State& u, const SpectralDecomposition& dec, double support_tol) {
  if (u.size() != dec.dim()) throw std::invalid_argument("support: dimension mismatch");
  EigenvalueSupport out;
  for (int i = 0; i < dec.distinct_count(); ++i) {
    double w = (dec.projectors[i] * u).norm();
    if (w > support_tol) {
      out.indices.push_back(i);
      out.values.push_back(dec.eigenvalues[i]);
      out.weights.push_back(w);
    }
  }
  if (out.indices.empty()) throw std::runtime_error("support: empty eigenvalue support");
  return out;
}

std::optional<double> fixed_eigenvalue(const State& u, const SpectralDecomposition& dec,
                                       double support_tol) {
  auto sup = support(u, dec, support_tol);
  if (sup.values.size() == 1) return sup.values[0];
  return std::nullopt;
}

bool support_lower_bound_ok(const SPairState& u, const SpectralDecomposition& dec, const Graph& x,
                            double support_tol) {
  auto sup = support(u.to_state(x.vertex_count()), dec, support_tol);
  if (sup.values.size() == 1) return true;
  int dist = distance(x, u.a, u.b);
  int bound = (dist + 1) / 2;
  return static_cast<int>(sup.values.size()) >= bound;
}

State parse_state_literal(const std::string& text, int n) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("state literal: empty");

  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("state literal: missing ']'");
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    std::istringstream in(s.substr(1, s.size() - 2));
    std::string tok;
    int idx = 0;
    while (std::getline(in, tok, ',')) {
      if (idx >= n) throw std::invalid_argument("state literal: too many entries");
      v[idx++] = std::stod(tok);
    }
    if (idx != n) throw std::invalid_argument("state literal: expected " + std::to_string(n) +
                                              " entries");
    return make_state(v);
  }

  // "a" or "a+s*b"; s may itself carry a sign, e.g. "0+-1.5*2"
  size_t plus = s.find('+', 1);
  try {
    if (plus == std::string::npos) {
      size_t used = 0;
      int a = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      if (a < 0 || a >= n) throw std::invalid_argument("vertex out of range");
      Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
      v[a] = 1.0;
      return v;
    }
    int a = std::stoi(s.substr(0, plus));
    std::string rest = s.substr(plus + 1);
    size_t star = rest.rfind('*');
    if (star == std::string::npos) throw std::invalid_argument("expected s*b after '+'");
    double sval = std::stod(rest.substr(0, star));
    int b = std::stoi(rest.substr(star + 1));
    return SPairState(a, b, sval).to_state(n);
  } catch (const std::exception& e) {
    throw std::invalid_argument("state literal '" + text + "': " + e.what());
  }
}

}  // namespace pairwalk
