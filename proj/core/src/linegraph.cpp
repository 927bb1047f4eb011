#include "pairwalk/linegraph.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pairwalk/exact.hpp"

namespace pairwalk {

namespace {

State plus_state(int n, int a, int b) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[a] = v[b] = 1.0;
  return make_state(v);
}

State vertex_state(int n, int a) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[a] = 1.0;
  return v;
}

bool set_matches(const std::vector<double>& got, const std::vector<double>& want,
                 double tol = 1e-6) {
  if (got.size() != want.size()) return false;
  std::vector<double> a = got, b = want;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace

LineCorrespondence line_correspondence(const Graph& x, const Tolerances& tol) {
  Eigen::MatrixXi r = incidence_matrix(x);
  Graph lg = line_graph(x);

  // Q = R R^T and A_L = R^T R - 2I must hold exactly over the integers.
  auto q_int = to_integer_matrix(hamiltonian(x, HamiltonianKind::SignlessLaplacian), 1e-9);
  if (!q_int || (r * r.transpose() - *q_int).cwiseAbs().maxCoeff() != 0)
    throw std::runtime_error("line_correspondence: Q != R R^T");
  auto al_int = to_integer_matrix(lg.adjacency(), 1e-9);
  Eigen::MatrixXi rtr = r.transpose() * r -
                        2 * Eigen::MatrixXi::Identity(x.edge_count(), x.edge_count());
  if (!al_int || (rtr - *al_int).cwiseAbs().maxCoeff() != 0)
    throw std::runtime_error("line_correspondence: A_L != R^T R - 2I");

  LineCorrespondence corr{x, lg, r,
                          decompose(hamiltonian(x, HamiltonianKind::SignlessLaplacian), -1.0,
                                    tol.group_tol_scale),
                          decompose(lg.adjacency(), -1.0, tol.group_tol_scale)};

  std::mt19937 rng(20240915);
  std::uniform_real_distribution<double> dist(0.1, 3.0);
  Eigen::MatrixXcd rc = r.cast<double>().cast<std::complex<double>>();
  for (int k = 0; k < 5; ++k) {
    double t = dist(rng);
    Eigen::MatrixXcd lhs = rc * transition_matrix(corr.dec_line, t);
    Eigen::MatrixXcd rhs =
        std::exp(std::complex<double>(0.0, 2.0 * t)) * transition_matrix(corr.dec_q, t) * rc;
    if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-9)
      throw std::runtime_error("line_correspondence: walk intertwining residual exceeds 1e-9");
  }
  return corr;
}

std::optional<Eigen::MatrixXd> minus_two_projector(const Graph& x) {
  Eigen::MatrixXd r = incidence_matrix(x).cast<double>();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullV);
  double thresh = 1e-10 * std::max(1.0, svd.singularValues()[0]);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > thresh) ++rank;
  int nullity = static_cast<int>(r.cols()) - rank;

  StructureReport st = structure_queries(x);
  int expected = x.edge_count() - x.vertex_count() + (st.bipartite ? 1 : 0);
  if (nullity != expected)
    throw std::runtime_error("minus_two_projector: nullity does not match the bipartite rank rule");
  if (nullity == 0) return std::nullopt;
  Eigen::MatrixXd kernel = svd.matrixV().rightCols(nullity);
  return kernel * kernel.transpose();
}

PlusStatePull plus_state_pull(const LineCorrespondence& corr, int edge_ab, int edge_cd, double tau,
                              std::complex<double> line_phase, const Tolerances& tol) {
  int m = corr.host.edge_count();
  State f1 = vertex_state(m, edge_ab);
  State f2 = vertex_state(m, edge_cd);
  if (fidelity(corr.dec_line, tau, f1, f2) < 1.0 - tol.fid_tol)
    throw std::invalid_argument("plus_state_pull: line-graph vertex transfer unverified at tau");

  const Edge& e1 = corr.host.edge(edge_ab);
  const Edge& e2 = corr.host.edge(edge_cd);
  PlusStatePull out{e1.u, e1.v, e2.u, e2.v, tau,
                    line_phase * std::exp(std::complex<double>(0.0, -2.0 * tau)), 0.0};
  int n = corr.host.vertex_count();
  out.oracle_fidelity =
      fidelity(corr.dec_q, tau, plus_state(n, e1.u, e1.v), plus_state(n, e2.u, e2.v));
  if (out.oracle_fidelity < 1.0 - tol.fid_tol)
    throw std::runtime_error("plus_state_pull: host plus-state fidelity fails at tau");
  return out;
}

LinePstDecision line_pst_decision(const LineCorrespondence& corr, int edge_ab, int edge_cd,
                                  const Tolerances& tol) {
  LinePstDecision out;
  const Graph& x = corr.host;
  int n = x.vertex_count(), m = x.edge_count();
  const Edge& e1 = x.edge(edge_ab);
  const Edge& e2 = x.edge(edge_cd);

  auto al_int = to_integer_matrix(corr.line.adjacency(), 1e-9);
  out.direct = check_pst(corr.dec_line, vertex_state(m, edge_ab), vertex_state(m, edge_cd), tol,
                         al_int);

  State u = plus_state(n, e1.u, e1.v);
  State mu = plus_state(n, e2.u, e2.v);
  auto q_int = to_integer_matrix(hamiltonian(x, HamiltonianKind::SignlessLaplacian), 1e-9);
  out.host_plus = check_pst(corr.dec_q, u, mu, tol, q_int);

  auto f_minus2 = minus_two_projector(x);
  bool structural_decided = false;
  if (f_minus2) {
    Eigen::VectorXd p1 = *f_minus2 * vertex_state(m, edge_ab);
    Eigen::VectorXd p2 = *f_minus2 * vertex_state(m, edge_cd);
    out.minus_two_in_support = p1.norm() > tol.support_tol || p2.norm() > tol.support_tol;
    out.minus_two_sign_ok =
        (p1 - p2).norm() < tol.sc_tol || (p1 + p2).norm() < tol.sc_tol;
  }

  if (!out.minus_two_in_support) {
    // Trivial kernel component: the host plus-state decision transfers
    // one-to-one, at the same time.
    out.structural_pst = out.host_plus.verdict == Verdict::PST;
    out.structural_time = out.host_plus.time;
    structural_decided = true;
  } else if (out.host_plus.verdict == Verdict::PST && out.minus_two_sign_ok) {
    // Shifted support including -2: rerun the recognition and parity test.
    auto sup_q = support(u, corr.dec_q, tol.support_tol);
    std::vector<double> shifted;
    for (double lam : sup_q.values) shifted.push_back(lam - 2.0);
    shifted.push_back(-2.0);
    std::sort(shifted.begin(), shifted.end());
    auto cls = classify(shifted, tol.classify_options(), al_int);
    if (cls.kind != NumberClass::Inconclusive && out.host_plus.sign_partition) {
      // Sign pattern on the shifted support: inherited for lambda - 2,
      // fixed by the kernel-projector comparison at -2.
      Eigen::VectorXd p1 = *f_minus2 * vertex_state(m, edge_ab);
      Eigen::VectorXd p2 = *f_minus2 * vertex_state(m, edge_cd);
      std::vector<double> plus, minus;
      if ((p1 - p2).norm() < tol.sc_tol)
        plus.push_back(-2.0);
      else
        minus.push_back(-2.0);
      for (double lam : out.host_plus.sign_partition->plus) plus.push_back(lam - 2.0);
      for (double lam : out.host_plus.sign_partition->minus) minus.push_back(lam - 2.0);

      auto in_plus = [&](double v) {
        for (double p : plus)
          if (std::abs(p - v) < 1e-9) return true;
        return false;
      };
      if (plus.empty()) std::swap(plus, minus);
      double lambda_star = *std::min_element(plus.begin(), plus.end());
      size_t star = 0;
      for (size_t i = 0; i < cls.members.size(); ++i)
        if (std::abs(cls.members[i] - lambda_star) < 1e-9) star = i;
      bool parity_ok = true;
      for (size_t i = 0; i < cls.members.size(); ++i) {
        Rational ratio = pair_difference_over_sqrt_delta(cls, star, i) / cls.g;
        if (!ratio.is_integer()) {
          parity_ok = false;
          break;
        }
        if (((ratio.num % 2) == 0) != in_plus(cls.members[i])) parity_ok = false;
      }
      out.structural_pst = parity_ok;
      if (parity_ok) {
        long long num = cls.g.den, den = cls.g.num;
        Rational reduced(num, den);
        out.structural_time = SymbolicTime{reduced.num, reduced.den, cls.delta}.value();
      }
      structural_decided = true;
    }
  }
  if (!structural_decided && out.minus_two_in_support) {
    // Host transfer absent or sign test failed: structurally no transfer.
    out.structural_pst = false;
  }

  bool direct_pst = out.direct.verdict == Verdict::PST;
  if (direct_pst != out.structural_pst) {
    std::ostringstream msg;
    msg << "line transfer decision mismatch: direct=" << to_string(out.direct.verdict)
        << " structural=" << (out.structural_pst ? "pst" : "none")
        << " (direct decision is authoritative)";
    out.discrepancies.push_back(msg.str());
  } else if (direct_pst && std::abs(out.direct.time - out.structural_time) >
                               1e-9 * std::max(1.0, out.direct.time)) {
    out.discrepancies.push_back("line transfer time mismatch between routes");
  }
  return out;
}

bool edge_cut_filter_applicable(const Graph& x) {
  StructureReport st = structure_queries(x);
  int n = x.vertex_count(), m = x.edge_count();
  return st.bipartite ? (m >= n) : (m > n);
}

bool edge_cut_filter(const Graph& x, int e1, int e2) {
  StructureReport st = structure_queries(x);
  if (st.bipartite) return is_edge_cut(x, e1, e2);
  return removal_leaves_bipartite_or_disconnected(x, e1, e2);
}

CartesianNullBasis cartesian_null_basis(const Graph& x1, const Graph& x2) {
  if (!x1.unweighted() || !x2.unweighted() || !x1.connected() || !x2.connected())
    throw std::invalid_argument("cartesian_null_basis: connected unweighted factors required");
  const int n1 = x1.vertex_count(), n2 = x2.vertex_count();
  const int m1 = x1.edge_count(), m2 = x2.edge_count();

  Eigen::MatrixXi r1 = incidence_matrix(x1);
  Eigen::MatrixXi r2 = incidence_matrix(x2);
  Eigen::MatrixXi nul1 = integer_nullspace(r1);
  Eigen::MatrixXi nul2 = integer_nullspace(r2);
  std::vector<int> sel1 = greedy_independent_columns(r1);
  std::vector<int> sel2 = greedy_independent_columns(r2);
  const int rank1 = static_cast<int>(sel1.size());
  const int rank2 = static_cast<int>(sel2.size());

  Eigen::MatrixXi rt1 = Eigen::MatrixXi::Zero(n1, rank1);   // selected columns of R1
  Eigen::MatrixXi sel_i1 = Eigen::MatrixXi::Zero(m1, rank1);  // matching 0/1 selector
  for (int k = 0; k < rank1; ++k) {
    rt1.col(k) = r1.col(sel1[k]);
    sel_i1(sel1[k], k) = 1;
  }
  Eigen::MatrixXi rt2 = Eigen::MatrixXi::Zero(n2, rank2);
  Eigen::MatrixXi sel_i2 = Eigen::MatrixXi::Zero(m2, rank2);
  for (int k = 0; k < rank2; ++k) {
    rt2.col(k) = r2.col(sel2[k]);
    sel_i2(sel2[k], k) = 1;
  }

  auto kron = [](const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
    Eigen::MatrixXi out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
  };

  CartesianNullBasis out;
  Eigen::MatrixXi id1 = Eigen::MatrixXi::Identity(n1, n1);
  Eigen::MatrixXi id2 = Eigen::MatrixXi::Identity(n2, n2);
  out.r = Eigen::MatrixXi(n1 * n2, n1 * m2 + m1 * n2);
  out.r << kron(id1, r2), kron(r1, id2);

  for (int i = 0; i < n1; ++i)
    for (const auto& e : x2.edges())
      out.edge_order.emplace_back(i * n2 + e.u, i * n2 + e.v);
  for (const auto& e : x1.edges())
    for (int j = 0; j < n2; ++j)
      out.edge_order.emplace_back(e.u * n2 + j, e.v * n2 + j);

  const int c1 = n1 * (m2 - rank2), c2 = n2 * (m1 - rank1), c3 = rank1 * rank2;
  out.expected_columns = c1 + c2 + c3;
  out.n = Eigen::MatrixXi::Zero(n1 * m2 + m1 * n2, out.expected_columns);
  if (c1 > 0) out.n.block(0, 0, n1 * m2, c1) = kron(id1, nul2);
  if (c2 > 0) out.n.block(n1 * m2, c1, m1 * n2, c2) = kron(nul1, id2);
  if (c3 > 0) {
    out.n.block(0, c1 + c2, n1 * m2, c3) = -kron(rt1, sel_i2);
    out.n.block(n1 * m2, c1 + c2, m1 * n2, c3) = kron(sel_i1, rt2);
  }

  if ((out.r * out.n).cwiseAbs().maxCoeff() != 0)
    throw std::runtime_error("cartesian_null_basis: R N != 0");
  if (integer_rank(out.n) != out.expected_columns)
    throw std::runtime_error("cartesian_null_basis: rank mismatch in the assembled basis");
  return out;
}

namespace {

struct DecodedEdge {
  bool x1_type = false;  // joins (a,j)-(b,j) for {a,b} in E(X1)
  int fa = 0, fb = 0;    // the factor edge endpoints
  int layer = 0;         // the fixed coordinate in the other factor
};

std::optional<DecodedEdge> decode_product_edge(const Graph& x1, const Graph& x2,
                                               std::pair<int, int> e) {
  int n2 = x2.vertex_count();
  int i1 = e.first / n2, j1 = e.first % n2;
  int i2 = e.second / n2, j2 = e.second % n2;
  if (i1 == i2 && x2.adjacent(j1, j2)) return DecodedEdge{false, std::min(j1, j2), std::max(j1, j2), i1};
  if (j1 == j2 && x1.adjacent(i1, i2)) return DecodedEdge{true, std::min(i1, i2), std::max(i1, i2), j1};
  return std::nullopt;
}

std::vector<double> line_vertex_support(const Graph& factor, int edge_id, const Tolerances& tol) {
  Graph lg = line_graph(factor);
  SpectralDecomposition dec = decompose(lg.adjacency(), -1.0, tol.group_tol_scale);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(factor.edge_count());
  f[edge_id] = 1.0;
  return support(f, dec, tol.support_tol).values;
}

}  // namespace

VpstDecision vpst_decision(const Graph& x1, const Graph& x2, std::pair<int, int> eps1,
                           std::pair<int, int> eps2, const Tolerances& tol) {
  VpstDecision out;
  Graph product = cartesian_product(x1, x2);
  int id1 = product.edge_index(eps1.first, eps1.second);
  int id2 = product.edge_index(eps2.first, eps2.second);
  if (id1 < 0 || id2 < 0 || id1 == id2)
    throw std::invalid_argument("vpst_decision: edges must be distinct edges of the product");

  Graph lg = line_graph(product);
  SpectralDecomposition dec_l = decompose(lg.adjacency(), -1.0, tol.group_tol_scale);
  auto al_int = to_integer_matrix(lg.adjacency(), 1e-9);
  int m = product.edge_count();
  State h1 = vertex_state(m, id1);
  State h2 = vertex_state(m, id2);
  out.direct = check_pst(dec_l, h1, h2, tol, al_int);
  bool direct_sc = out.direct.verdict == Verdict::PST ||
                   out.direct.verdict == Verdict::StronglyCospectralOnly;

  // Kernel projectors: structural basis versus numeric null space must agree.
  CartesianNullBasis basis = cartesian_null_basis(x1, x2);
  {
    Eigen::MatrixXd nd = basis.n.cast<double>();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(nd);
    Eigen::MatrixXd qfull = qr.householderQ();
    Eigen::MatrixXd q = qfull.leftCols(basis.expected_columns);
    Eigen::MatrixXd f_structural = q * q.transpose();

    Eigen::MatrixXd rd = basis.r.cast<double>();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rd, Eigen::ComputeFullV);
    double thresh = 1e-10 * std::max(1.0, svd.singularValues()[0]);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()[i] > thresh) ++rank;
    Eigen::MatrixXd kernel = svd.matrixV().rightCols(svd.matrixV().cols() - rank);
    Eigen::MatrixXd f_numeric = kernel * kernel.transpose();
    if ((f_structural - f_numeric).cwiseAbs().maxCoeff() > 1e-8)
      throw std::runtime_error("vpst_decision: structural and numeric kernel projectors disagree");
  }

  auto d1 = decode_product_edge(x1, x2, eps1);
  auto d2 = decode_product_edge(x1, x2, eps2);
  if (!d1 || !d2) throw std::invalid_argument("vpst_decision: inputs are not product edges");

  // Case classification of the edge pair.
  std::vector<double> factor_support;
  bool gap_two = false;
  if (d1->x1_type && d2->x1_type && x2.vertex_count() == 2 && x2.edge_count() == 1 &&
      d1->fa == d2->fa && d1->fb == d2->fb && d1->layer != d2->layer) {
    factor_support = line_vertex_support(x1, x1.edge_index(d1->fa, d1->fb), tol);
    out.structure_case = 1;
  } else if (!d1->x1_type && !d2->x1_type && x1.vertex_count() == 2 && x1.edge_count() == 1 &&
             d1->fa == d2->fa && d1->fb == d2->fb && d1->layer != d2->layer) {
    factor_support = line_vertex_support(x2, x2.edge_index(d1->fa, d1->fb), tol);
    out.structure_case = 1;
  } else {
    // pendant corner pair: an X2-type edge at (a, {alpha,beta}) and an
    // X1-type edge at ({a,b}, alpha) sharing the corner (a, alpha)
    for (int swap = 0; swap < 2; ++swap) {
      const auto& ea = swap ? *d2 : *d1;  // candidate X2-type
      const auto& eb = swap ? *d1 : *d2;  // candidate X1-type
      if (ea.x1_type || !eb.x1_type) continue;
      int a = ea.layer;  // X1 vertex carrying the X2 edge
      int alpha = eb.layer;  // X2 vertex carrying the X1 edge
      bool share_corner = (a == eb.fa || a == eb.fb) && (alpha == ea.fa || alpha == ea.fb);
      if (!share_corner) continue;
      bool a_pendant = x1.neighbors(a).size() == 1;
      bool alpha_pendant = x2.neighbors(alpha).size() == 1;
      auto l1 = line_vertex_support(x1, x1.edge_index(eb.fa, eb.fb), tol);
      auto l2 = line_vertex_support(x2, x2.edge_index(ea.fa, ea.fb), tol);
      bool no_minus2 = true;
      for (double v : l1)
        if (std::abs(v + 2.0) < 1e-6) no_minus2 = false;
      for (double v : l2)
        if (std::abs(v + 2.0) < 1e-6) no_minus2 = false;
      if (a_pendant && alpha_pendant && no_minus2) out.structure_case = 2;
    }
  }

  if (out.structure_case == 1) {
    bool minus2_free = true;
    for (double v : factor_support)
      if (std::abs(v + 2.0) < 1e-6) minus2_free = false;
    if (!minus2_free) out.structure_case = 0;  // layer pair without the kernel-free edge
    for (size_t i = 0; i < factor_support.size(); ++i)
      for (size_t j = i + 1; j < factor_support.size(); ++j)
        if (std::abs(std::abs(factor_support[j] - factor_support[i]) - 2.0) < 1e-6)
          gap_two = true;
    out.structural_sc = (out.structure_case == 1) && !gap_two;
  } else {
    out.structural_sc = false;  // pendant corner pairs are never strongly cospectral
  }

  // Integrality test on the support of h_eps1.
  auto psi = support(h1, dec_l, tol.support_tol);
  out.integrality_condition = true;
  for (double v : psi.values) {
    double r = std::round(v);
    if (std::abs(v - r) > tol.int_tol) out.integrality_condition = false;
    long long iv = std::llround(r);
    if (iv != -2 && iv % 4 != 0) out.integrality_condition = false;
  }
  out.structural_pst = out.structural_sc && out.integrality_condition;

  // Predicted sign split for the layer-pair case: the factor support lands in
  // the minus class, its shift by +2 and the kernel eigenvalue in the plus.
  if (out.structure_case == 1 && direct_sc && out.direct.sign_partition) {
    std::vector<double> want_minus = factor_support;
    std::vector<double> want_plus{-2.0};
    for (double v : factor_support) want_plus.push_back(v + 2.0);
    std::sort(want_plus.begin(), want_plus.end());
    want_plus.erase(std::unique(want_plus.begin(), want_plus.end(),
                                [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                    want_plus.end());
    const auto& sp = *out.direct.sign_partition;
    bool straight = set_matches(sp.minus, want_minus) && set_matches(sp.plus, want_plus);
    bool flipped = set_matches(sp.plus, want_minus) && set_matches(sp.minus, want_plus);
    out.sign_partition_matches = straight || flipped;
    if (!out.sign_partition_matches)
      out.discrepancies.push_back("sign partition differs from the layer-pair prediction");
  }

  if (out.structural_sc != direct_sc) {
    std::ostringstream msg;
    msg << "strong cospectrality mismatch: structural=" << (out.structural_sc ? "yes" : "no")
        << " direct=" << (direct_sc ? "yes" : "no") << " (direct is authoritative)";
    out.discrepancies.push_back(msg.str());
  }
  bool direct_pst = out.direct.verdict == Verdict::PST;
  if (out.structural_pst != direct_pst) {
    std::ostringstream msg;
    msg << "structural transfer condition " << (out.structural_pst ? "holds" : "fails")
        << " but direct decision says " << to_string(out.direct.verdict)
        << " (direct is authoritative)";
    out.discrepancies.push_back(msg.str());
  }
  return out;
}

}  // namespace pairwalk
