#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pairwalk/distance_regular.hpp"

using namespace pairwalk;

namespace {

constexpr double kPi = std::numbers::pi;

bool unimodal(const std::vector<long>& k) {
  size_t peak = 0;
  for (size_t i = 1; i < k.size(); ++i)
    if (k[i] >= k[peak]) peak = i;
  for (size_t i = 1; i <= peak; ++i)
    if (k[i] < k[i - 1]) return false;
  for (size_t i = peak + 1; i < k.size(); ++i)
    if (k[i] > k[i - 1]) return false;
  return true;
}

}  // namespace

TEST_CASE("distance-regular detection") {
  DRGData q3 = drg_detect(hypercube_graph(3));
  CHECK(q3.is_drg);
  CHECK(q3.is_antipodal_class2);
  for (int v = 0; v < 8; ++v) CHECK(q3.antipodal_map[v] == (v ^ 7));
  CHECK(q3.intersection[1][0] == 1);  // c_1 = 1

  DRGData c6 = drg_detect(cycle_graph(6));
  CHECK(c6.is_drg);
  CHECK(c6.is_antipodal_class2);

  DRGData k4 = drg_detect(complete_graph(4));
  CHECK(k4.is_drg);
  CHECK_FALSE(k4.is_antipodal_class2);

  // K4 minus an edge is not regular
  Graph k4e(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}});
  CHECK_THROWS_AS(drg_detect(k4e), std::invalid_argument);

  // degree sequence across distances stays unimodal on detected DRGs
  for (const Graph& g : {hypercube_graph(3), hypercube_graph(4), cycle_graph(6), cycle_graph(8),
                         complete_graph(5)}) {
    DRGData d = drg_detect(g);
    REQUIRE(d.is_drg);
    CHECK(unimodal(d.dist.k));
    if (d.is_antipodal_class2) CHECK(d.dist.antipodal_identity_ok);
  }
}

TEST_CASE("vertex transfer on antipodal graphs") {
  // hypercube(2) is the 4-cycle: transfer at pi/2
  Graph q2 = hypercube_graph(2);
  DRGData d2 = drg_detect(q2);
  auto v2 = drg_vertex_pst(q2, d2);
  REQUIRE(v2.has_value());
  CHECK(v2->first == doctest::Approx(kPi / 2).epsilon(1e-12));

  Graph q3 = hypercube_graph(3);
  DRGData d3 = drg_detect(q3);
  auto v3 = drg_vertex_pst(q3, d3);
  REQUIRE(v3.has_value());
  CHECK(v3->first == doctest::Approx(kPi / 2).epsilon(1e-12));
  // the identity U(tau) = eta A_d is enforced inside the call

  Graph c6 = cycle_graph(6);
  DRGData d6 = drg_detect(c6);
  CHECK_FALSE(drg_vertex_pst(c6, d6).has_value());
}

TEST_CASE("s-pair transfer rules on the cube") {
  Graph q3 = hypercube_graph(3);
  DRGData data = drg_detect(q3);

  TransferReport non_anti = drg_spair_pst(q3, data, 0, 1, 2.0);
  CHECK(non_anti.verdict == Verdict::PST);
  CHECK(non_anti.time == doctest::Approx(kPi / 2).epsilon(1e-12));

  TransferReport swap = drg_spair_pst(q3, data, 0, 7, 3.0);
  CHECK(swap.verdict == Verdict::PST);

  TransferReport plus = drg_spair_pst(q3, data, 0, 7, 1.0);
  CHECK(plus.verdict == Verdict::Periodic);

  CHECK_THROWS_AS(drg_spair_pst(cycle_graph(6), drg_detect(cycle_graph(6)), 0, 3, 2.0),
                  std::invalid_argument);
  // hypercube(2) is a cycle as well: rejected by the same guard
  CHECK_THROWS_AS(drg_spair_pst(hypercube_graph(2), drg_detect(hypercube_graph(2)), 0, 3, 2.0),
                  std::invalid_argument);
}

TEST_CASE("cube rules agree with the direct decision") {
  for (int d : {3, 4}) {
    Graph q = hypercube_graph(d);
    DRGData data = drg_detect(q);
    Eigen::MatrixXd m = hamiltonian(q, HamiltonianKind::Adjacency);
    SpectralDecomposition dec = decompose(m);
    auto m_int = to_integer_matrix(m);
    int n = q.vertex_count();
    int mask = n - 1;
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, mask}, {1, 2}, {0, 3}};
    for (auto [a, b] : pairs)
      for (double s : {1.0, -1.0, 2.0, -2.0, 0.5, 3.0}) {
        TransferReport rule = drg_spair_pst(q, data, a, b, s);
        if (rule.verdict != Verdict::PST) continue;
        int target_a = (b == (a ^ mask)) ? b : (a ^ mask);
        int target_b = (b == (a ^ mask)) ? a : (b ^ mask);
        TransferReport direct = check_pst(dec, SPairState(a, b, s).to_state(n),
                                          SPairState(target_a, target_b, s).to_state(n), {},
                                          m_int);
        CHECK(direct.verdict == Verdict::PST);
        CHECK(direct.time == doctest::Approx(rule.time).epsilon(1e-9));
      }
  }
}
