#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "pairwalk/graph.hpp"
#include "pairwalk/transfer.hpp"

namespace pairwalk {

struct DRGData {
  bool is_drg = false;
  int diameter = 0;
  /// (c_j, a_j, b_j) per distance: neighbour counts one step closer, at the
  /// same distance, and one step farther. Valid when is_drg.
  std::vector<std::array<long, 3>> intersection;
  bool is_antipodal_class2 = false;
  std::vector<int> antipodal_map;  // involution without fixed points
  DistanceStructure dist;
};

/// Distance-regularity detection over the distance matrices. Throws on
/// non-regular (or weighted / disconnected) input.
DRGData drg_detect(const Graph& x);

/// Vertex transfer on an antipodal class-two DRG: decides transfer to the
/// antipode and verifies the full matrix identity U(tau) = eta A_d, which
/// subsumes per-vertex checks. Throws when the identity fails despite a
/// vertex transfer (non-DRG input slipping through).
std::optional<std::pair<double, std::complex<double>>> drg_vertex_pst(const Graph& x,
                                                                      const DRGData& data,
                                                                      const Tolerances& tol = {});

/// s-pair transfer on an antipodal class-two DRG with vertex transfer at tau
/// (cycles are rejected; they have their own classification):
/// non-antipodal {a,b} transfers to the antipodal image pair for every
/// s != 0; an antipodal pair swaps for s outside {-1, 0, 1} and admits no
/// transfer at s = +/-1. Every verdict is oracle-confirmed.
TransferReport drg_spair_pst(const Graph& x, const DRGData& data, int a, int b, double s,
                             const Tolerances& tol = {});

}  // namespace pairwalk
