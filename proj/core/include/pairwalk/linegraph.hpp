#pragma once

#include <Eigen/Core>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/transfer.hpp"

namespace pairwalk {

/// Host graph, its line graph, the incidence matrix tying them together,
/// and the two spectral decompositions the correspondence machinery
/// relates. Edge k of the host is vertex k of the line graph.
struct LineCorrespondence {
  Graph host;
  Graph line;
  Eigen::MatrixXi incidence;    // R: n x m
  SpectralDecomposition dec_q;  // signless Laplacian of the host
  SpectralDecomposition dec_line;  // adjacency of the line graph
};

/// Build the correspondence and verify Q = R R^T, A_L = R^T R - 2I exactly
/// and the walk intertwining R U_{A_L}(t) = e^{2it} U_Q(t) R at five seeded
/// times within 1e-9. Throws on residual failure.
LineCorrespondence line_correspondence(const Graph& x, const Tolerances& tol = {});

/// Orthogonal projector onto ker(R), i.e. the (-2)-eigenspace of the line
/// graph adjacency. nullopt when the kernel is trivial (trees and odd
/// unicyclic hosts). Rank must match m-n+1 (bipartite) or m-n.
std::optional<Eigen::MatrixXd> minus_two_projector(const Graph& x);

struct PlusStatePull {
  int a, b, alpha, beta;  // host vertices
  double tau = 0;
  std::complex<double> phase{1, 0};  // line phase times e^{-2i tau}
  double oracle_fidelity = 0;
};

/// Pull a verified line-graph vertex transfer f_ab -> f_cd at tau back to a
/// signless-Laplacian plus-state transfer on the host; oracle-confirmed.
PlusStatePull plus_state_pull(const LineCorrespondence& corr, int edge_ab, int edge_cd, double tau,
                              std::complex<double> line_phase, const Tolerances& tol = {});

struct LinePstDecision {
  TransferReport direct;  // check_pst on the line graph adjacency; authoritative
  bool structural_pst = false;
  double structural_time = 0;
  TransferReport host_plus;        // Q-walk plus-state decision on the host
  bool minus_two_in_support = false;
  bool minus_two_sign_ok = false;  // F_{-2} f_ab = +/- F_{-2} f_cd, when -2 is present
  std::vector<std::string> discrepancies;
};

/// Decide vertex transfer between two line-graph vertices via the host
/// route (Q-walk plus states, the kernel projector and the parity test on
/// the shifted support) and cross-check against the direct spectral
/// decision. Disagreements are reported as diagnostics; the direct decision
/// is authoritative.
LinePstDecision line_pst_decision(const LineCorrespondence& corr, int edge_ab, int edge_cd,
                                  const Tolerances& tol = {});

/// Necessary-condition screen for strong cospectrality of line-graph
/// vertices. Applicable to bipartite hosts with m >= n and non-bipartite
/// hosts with m > n.
bool edge_cut_filter_applicable(const Graph& x);
/// Bipartite host: the edge pair must be an edge-cut. Non-bipartite: removal
/// must disconnect the graph or make it bipartite.
bool edge_cut_filter(const Graph& x, int e1, int e2);

/// Null-space basis of the product incidence matrix, assembled blockwise
/// from the factor kernels and a selector pairing, in the edge order
/// [X2-type edges (vertex1, edge2) | X1-type edges (edge1, vertex2)].
struct CartesianNullBasis {
  Eigen::MatrixXi r;  // product incidence in block order
  Eigen::MatrixXi n;  // R n = 0 exactly
  std::vector<std::pair<int, int>> edge_order;  // product-vertex pairs per column of r
  int expected_columns = 0;  // n1(m2-r2) + n2(m1-r1) + r1 r2
};

CartesianNullBasis cartesian_null_basis(const Graph& x1, const Graph& x2);

struct VpstDecision {
  int structure_case = 0;   // 1: layer pair over K2, 2: pendant corner pair, 0: neither
  bool structural_sc = false;
  bool structural_pst = false;
  bool integrality_condition = false;  // support integral and, away from -2, divisible by 4
  bool sign_partition_matches = true;  // predicted +/- split against the computed one
  TransferReport direct;               // authoritative
  std::vector<std::string> discrepancies;
};

/// Vertex-transfer decision in the line graph of a Cartesian product:
/// structural route (case classification, factor-support gap test,
/// integrality test) alongside the direct spectral decision on
/// A(L(X1 x X2)). Edges are given as product vertex pairs (index i*n2 + j).
VpstDecision vpst_decision(const Graph& x1, const Graph& x2, std::pair<int, int> eps1,
                           std::pair<int, int> eps2, const Tolerances& tol = {});

}  // namespace pairwalk
