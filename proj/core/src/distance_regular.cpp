#include "pairwalk/distance_regular.hpp"

#include <cmath>
#include <stdexcept>

namespace pairwalk {

DRGData drg_detect(const Graph& x) {
  if (!x.connected() || !x.unweighted())
    throw std::invalid_argument("drg_detect: connected unweighted input required");
  int n = x.vertex_count();
  size_t deg0 = x.neighbors(0).size();
  for (int v = 1; v < n; ++v)
    if (x.neighbors(v).size() != deg0)
      throw std::invalid_argument("drg_detect: regular input required");

  DRGData out;
  out.dist = distance_structure(x);
  out.diameter = out.dist.diameter;
  const int d = out.diameter;

  // pairwise distances from the distance matrices
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, 0));
  for (int j = 0; j <= d; ++j)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (out.dist.a[j](u, v)) dist[u][v] = j;

  out.is_drg = true;
  out.intersection.assign(d + 1, {-1, -1, -1});
  for (int u = 0; u < n && out.is_drg; ++u)
    for (int v = 0; v < n && out.is_drg; ++v) {
      int j = dist[u][v];
      long closer = 0, same = 0, farther = 0;
      for (int w : x.neighbors(u)) {
        int dw = dist[w][v];
        if (dw == j - 1) ++closer;
        else if (dw == j) ++same;
        else if (dw == j + 1) ++farther;
        else out.is_drg = false;
      }
      std::array<long, 3> nums{closer, same, farther};
      if (out.intersection[j][0] < 0)
        out.intersection[j] = nums;
      else if (out.intersection[j] != nums)
        out.is_drg = false;
    }
  if (!out.is_drg) out.intersection.clear();

  out.is_antipodal_class2 = out.dist.antipodal_class2 && out.dist.antipodal_identity_ok;
  if (out.is_antipodal_class2) {
    out.antipodal_map = out.dist.antipodal_map;
    for (int v = 0; v < n; ++v)
      if (out.antipodal_map[v] == v || out.antipodal_map[out.antipodal_map[v]] != v)
        throw std::runtime_error("drg_detect: antipodal map is not a fixed-point-free involution");
  }
  return out;
}

std::optional<std::pair<double, std::complex<double>>> drg_vertex_pst(const Graph& x,
                                                                      const DRGData& data,
                                                                      const Tolerances& tol) {
  if (!data.is_drg || !data.is_antipodal_class2)
    throw std::invalid_argument("drg_vertex_pst: antipodal class-two DRG required");
  int n = x.vertex_count();
  Eigen::MatrixXd m = hamiltonian(x, HamiltonianKind::Adjacency);
  SpectralDecomposition dec = decompose(m, -1.0, tol.group_tol_scale);
  auto m_int = to_integer_matrix(m);

  Eigen::VectorXd ea = Eigen::VectorXd::Zero(n), eb = Eigen::VectorXd::Zero(n);
  ea[0] = 1.0;
  eb[data.antipodal_map[0]] = 1.0;
  TransferReport rep = check_pst(dec, ea, eb, tol, m_int);
  if (rep.verdict != Verdict::PST) return std::nullopt;

  Eigen::MatrixXcd u = transition_matrix(dec, rep.time);
  Eigen::MatrixXcd target = rep.phase * data.dist.a.back().cast<double>().cast<std::complex<double>>();
  if ((u - target).cwiseAbs().maxCoeff() > 1e-7)
    throw std::runtime_error(
        "drg_vertex_pst: vertex transfer found but U(tau) != eta A_d (non-DRG input?)");
  return std::make_pair(rep.time, rep.phase);
}

TransferReport drg_spair_pst(const Graph& x, const DRGData& data, int a, int b, double s,
                             const Tolerances& tol) {
  if (!data.is_drg || !data.is_antipodal_class2)
    throw std::invalid_argument("drg_spair_pst: antipodal class-two DRG required");
  if (x.neighbors(0).size() == 2)
    throw std::invalid_argument("drg_spair_pst: cycles have their own classification");
  auto vertex = drg_vertex_pst(x, data, tol);
  if (!vertex) throw std::invalid_argument("drg_spair_pst: no vertex transfer on this graph");
  auto [tau, eta] = *vertex;

  int n = x.vertex_count();
  Eigen::MatrixXd m = hamiltonian(x, HamiltonianKind::Adjacency);
  SpectralDecomposition dec = decompose(m, -1.0, tol.group_tol_scale);
  auto m_int = to_integer_matrix(m);
  State u = SPairState(a, b, s).to_state(n);

  int abar = data.antipodal_map[a];
  int bbar = data.antipodal_map[b];
  bool antipodal_pair = (bbar == a);

  if (!antipodal_pair) {
    State mu = SPairState(abar, bbar, s).to_state(n);
    TransferReport rep = check_pst(dec, u, mu, tol, m_int);
    double fid = fidelity(dec, tau, u, mu);
    if (rep.verdict != Verdict::PST || fid < 1.0 - tol.fid_tol)
      throw std::runtime_error("drg_spair_pst: expected transfer to the antipodal image failed");
    rep.oracle_fidelity = fid;
    return rep;
  }

  if (s != 1.0 && s != -1.0) {
    State mu = SPairState(b, a, s).to_state(n);
    TransferReport rep = check_pst(dec, u, mu, tol, m_int);
    double fid = fidelity(dec, tau, u, mu);
    if (rep.verdict != Verdict::PST || fid < 1.0 - tol.fid_tol)
      throw std::runtime_error("drg_spair_pst: expected antipodal swap transfer failed");
    rep.oracle_fidelity = fid;
    return rep;
  }

  // s = +/-1 on an antipodal pair: the swap target is the state itself, and
  // no transfer to any other state exists; report the periodicity data.
  TransferReport rep = is_periodic(dec, u, tol, m_int);
  rep.note = "antipodal pair with s = +/-1: swap target coincides with the state; no transfer";
  return rep;
}

}  // namespace pairwalk
