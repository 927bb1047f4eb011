#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pairwalk/spectra.hpp"
#include "pairwalk/states.hpp"

namespace pairwalk {

/// One bundle of numeric tolerances, threaded explicitly through every
/// decision. No globals.
struct Tolerances {
  double group_tol_scale = 1e-8;  // eigenvalue grouping, relative to 1 + spectral radius
  double support_tol = 1e-8;
  double sc_tol = 1e-7;
  double fid_tol = 1e-7;
  double int_tol = 1e-6;
  long long den_bound = 1'000'000;

  static Tolerances defaults() { return {}; }
  static Tolerances strict();
  /// Profile from PAIRWALK_TOLERANCE_PROFILE ("default" | "strict").
  static Tolerances from_env();

  void validate() const;  // every tolerance in (0, 1e-2)
  ClassifyOptions classify_options() const;
};

Eigen::MatrixXcd transition_matrix(const SpectralDecomposition& dec, double t);
Eigen::VectorXcd evolve(const SpectralDecomposition& dec, double t, const State& u);
/// |<v, U(t) u>| for unit states.
double fidelity(const SpectralDecomposition& dec, double t, const State& u, const State& v);

struct SignPartition {
  std::vector<double> plus;   // E_lambda u = +E_lambda v
  std::vector<double> minus;  // E_lambda u = -E_lambda v
};

/// Sign partition over the union of the two supports, or nullopt when some
/// eigenvalue component matches neither sign.
std::optional<SignPartition> strongly_cospectral(const SpectralDecomposition& dec, const State& u,
                                                 const State& v, const Tolerances& tol = {});

struct CospectralSolutions {
  bool all_s = false;            // every nonzero s admitted
  std::vector<double> values;    // finite admitted s values (ascending)
  /// sigma[k][i]: sign (+1/-1, 0 = unconstrained) at eigenvalue i for values[k];
  /// sigma_all is the analogue for the all_s case.
  std::vector<std::vector<int>> sigma;
  std::vector<int> sigma_all;
  bool admits(double s, double tol = 1e-9) const;
  bool empty() const { return !all_s && values.empty(); }
};

/// Solve E_lambda(e_a + s e_b) = sigma_lambda E_lambda(e_alpha + s e_beta)
/// for s, eigenvalue by eigenvalue, and intersect.
CospectralSolutions solve_cospectral_s(const SpectralDecomposition& dec, int a, int b, int alpha,
                                       int beta, const Tolerances& tol = {});

enum class Verdict { Fixed, Periodic, PST, StronglyCospectralOnly, None };
enum class Certification { Exact, NumericOnly };

std::string to_string(Verdict v);

/// Closed-form time pi * num / (den * sqrt(delta)).
struct SymbolicTime {
  long long num = 1;
  long long den = 1;
  long long delta = 1;
  double value() const;
  std::string str() const;
};

struct TransferReport {
  Verdict verdict = Verdict::None;
  Certification certification = Certification::NumericOnly;
  double time = 0;                      // minimum period or transfer time
  std::complex<double> phase{1.0, 0.0};
  std::optional<SymbolicTime> symbolic_time;
  std::optional<SignPartition> sign_partition;
  SupportClassification classification;
  double oracle_fidelity = 0;           // at `time`
  double eigenvalue = 0;                // for Verdict::Fixed
  std::string note;
};

struct OracleResult {
  double t = 0;
  double fidelity = 0;
};

/// Brute-force fidelity maximization: grid over (0, t_max], golden-section
/// refinement of the best bracket to 1e-10 in t. Deterministic. grid_step < 0
/// selects pi / (4 * spectral radius).
OracleResult oracle_scan(const SpectralDecomposition& dec, const State& u, const State& v,
                         double t_max, double grid_step = -1.0);

/// Earliest refined local maximum with fidelity >= threshold, if any. With
/// `interior_only` the rising tail truncated at t_max does not count as a
/// maximum (used by minimality checks, where the peak just past the horizon
/// would otherwise bleed across it).
std::optional<OracleResult> oracle_first_reach(const SpectralDecomposition& dec, const State& u,
                                               const State& v, double threshold, double t_max,
                                               double grid_step = -1.0, bool interior_only = false);

/// Fixed / Periodic / None decision with minimum period and phase.
/// `integer_hamiltonian` (when the Hamiltonian is an integer matrix) enables
/// the exact integer-eigenvalue confirmation inside classification.
TransferReport is_periodic(const SpectralDecomposition& dec, const State& u,
                           const Tolerances& tol = {},
                           const std::optional<Eigen::MatrixXi>& integer_hamiltonian = {},
                           double t_max = -1.0);

/// Full perfect-state-transfer decision between distinct real states:
/// strong cospectrality, support classification, parity test, minimum time
/// pi/(g sqrt(delta)), with an oracle cross-check of every certified verdict.
/// Inconclusive classifications fall back to a numeric-only oracle scan.
TransferReport check_pst(const SpectralDecomposition& dec, const State& u, const State& v,
                         const Tolerances& tol = {},
                         const std::optional<Eigen::MatrixXi>& integer_hamiltonian = {},
                         double t_max = -1.0);

/// Raised when an input graph exceeds the configured search cap.
struct CapExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SPolicy {
  std::vector<double> values{1.0, -1.0};
  bool solved = true;  // also try the s values admitted by solve_cospectral_s
};

struct PstHit {
  SPairState source;
  SPairState target;
  TransferReport report;
};

/// Search all ordered s-pair sources and targets for perfect state transfer,
/// deduplicated up to state identity and transfer symmetry. Throws when the
/// graph exceeds `cap` vertices.
std::vector<PstHit> pst_search(const Graph& x, HamiltonianKind kind, const SPolicy& policy,
                               const Tolerances& tol = {}, int cap = 64, double t_max = -1.0);

struct FractionalRevival {
  std::complex<double> eta;
  std::complex<double> varpi;
  std::array<double, 2> induced_s;  // roots of x^2 + 2 Re(eta/varpi) x - 1, descending
};

/// Accepts iff U(t) e_a is supported on {a, b} within fid_tol with a nonzero
/// component on b.
std::optional<FractionalRevival> detect_fractional_revival(const SpectralDecomposition& dec, int a,
                                                           int b, double t,
                                                           const Tolerances& tol = {});

/// Combine vertex transfer a -> alpha with a vertex v periodic at the same
/// time: true iff some lambda in the plus set of (e_a, e_alpha) and lambda' in
/// the support of e_v satisfy (lambda - lambda') tau = 0 mod 2pi, in which
/// case e_a + s e_v -> e_alpha + s e_v is oracle-confirmed at tau.
/// Throws std::invalid_argument when the stated preconditions do not hold.
bool pst_plus_periodic(const SpectralDecomposition& dec, int a, int alpha, int v, double tau,
                       double s, const Tolerances& tol = {});

/// B = P^T M P when P^T P = I and M P = P B within residual_tol (also checks
/// the walk intertwining P U_B(t) = U_M(t) P at sampled times); nullopt
/// otherwise.
std::optional<Eigen::MatrixXd> verify_quotient(const Eigen::MatrixXd& m, const Eigen::MatrixXd& p,
                                               double residual_tol = 1e-9);

/// Normalized P w.
State lift_state(const Eigen::MatrixXd& p, const Eigen::VectorXd& w);

/// Chain transfers (a,b,r)->(alpha,beta,r) and (b,c,s)->(beta,gamma,s) at a
/// common time into the predicted pair e_a - rs e_c -> e_alpha - rs e_gamma.
/// The caller re-verifies the prediction. Throws on mismatched times or a
/// broken chain; nullopt when the composition collapses (a == c).
std::optional<std::pair<SPairState, SPairState>> transitivity_compose(
    const SPairState& u, const SPairState& mu, double tau_u, const SPairState& v,
    const SPairState& nu, double tau_v);

}  // namespace pairwalk
