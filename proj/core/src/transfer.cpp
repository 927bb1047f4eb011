#include "pairwalk/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace pairwalk {

namespace {

constexpr double kPi = std::numbers::pi;

void check_unit(const State& u) {
  if (std::abs(u.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("transfer: state is not unit norm");
}

bool same_state(const State& u, const State& v, double tol = 1e-9) {
  return (u - v).norm() < tol || (u + v).norm() < tol;
}

/// Fidelity as a trigonometric polynomial: coefficients <v, E_lambda u>.
struct FidelityCurve {
  Eigen::VectorXd coeff;
  Eigen::VectorXd lambda;

  FidelityCurve(const SpectralDecomposition& dec, const State& u, const State& v) {
    coeff.resize(dec.distinct_count());
    lambda = dec.eigenvalues;
    for (int i = 0; i < dec.distinct_count(); ++i) coeff[i] = v.dot(dec.projectors[i] * u);
  }

  double operator()(double t) const {
    std::complex<double> amp{0.0, 0.0};
    for (int i = 0; i < coeff.size(); ++i)
      amp += coeff[i] * std::exp(std::complex<double>(0.0, -t * lambda[i]));
    return std::abs(amp);
  }
};

double golden_refine(const FidelityCurve& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-10) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double default_grid_step(const SpectralDecomposition& dec) {
  double rho = std::max(dec.spectral_radius(), 1e-6);
  return kPi / (4.0 * rho);
}

/// 4pi over the smallest positive support gap; a scan horizon covering the
/// minimum period of states whose gcd equals that gap.
double default_t_max(const std::vector<double>& support_values) {
  double min_gap = 0;
  for (size_t i = 0; i < support_values.size(); ++i)
    for (size_t j = i + 1; j < support_values.size(); ++j) {
      double gap = std::abs(support_values[j] - support_values[i]);
      if (gap > 1e-9 && (min_gap == 0 || gap < min_gap)) min_gap = gap;
    }
  if (min_gap == 0) return 4.0 * kPi;
  return 4.0 * kPi / min_gap;
}

}  // namespace

Tolerances Tolerances::strict() {
  Tolerances t;
  t.group_tol_scale = 1e-9;
  t.support_tol = 1e-9;
  t.sc_tol = 1e-8;
  t.fid_tol = 1e-8;
  t.int_tol = 1e-7;
  return t;
}

Tolerances Tolerances::from_env() {
  const char* profile = std::getenv("PAIRWALK_TOLERANCE_PROFILE");
  if (profile == nullptr || std::string(profile) == "default") return defaults();
  if (std::string(profile) == "strict") return strict();
  throw std::invalid_argument("PAIRWALK_TOLERANCE_PROFILE must be 'default' or 'strict'");
}

void Tolerances::validate() const {
  for (double v : {group_tol_scale, support_tol, sc_tol, fid_tol, int_tol})
    if (!(v > 0) || v >= 1e-2)
      throw std::invalid_argument("tolerances must lie in (0, 1e-2)");
  if (den_bound < 1) throw std::invalid_argument("denominator bound must be positive");
}

ClassifyOptions Tolerances::classify_options() const {
  ClassifyOptions o;
  o.int_tol = int_tol;
  o.fit_tol = int_tol;
  o.den_bound = den_bound;
  return o;
}

Eigen::MatrixXcd transition_matrix(const SpectralDecomposition& dec, double t) {
  int n = dec.dim();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < dec.distinct_count(); ++i)
    u += std::exp(std::complex<double>(0.0, -t * dec.eigenvalues[i])) * dec.projectors[i];
  return u;
}

Eigen::VectorXcd evolve(const SpectralDecomposition& dec, double t, const State& u) {
  if (u.size() != dec.dim()) throw std::invalid_argument("evolve: dimension mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(u.size());
  for (int i = 0; i < dec.distinct_count(); ++i)
    out += std::exp(std::complex<double>(0.0, -t * dec.eigenvalues[i])) *
           (dec.projectors[i] * u).cast<std::complex<double>>();
  return out;
}

double fidelity(const SpectralDecomposition& dec, double t, const State& u, const State& v) {
  check_unit(u);
  check_unit(v);
  return FidelityCurve(dec, u, v)(t);
}

std::optional<SignPartition> strongly_cospectral(const SpectralDecomposition& dec, const State& u,
                                                 const State& v, const Tolerances& tol) {
  check_unit(u);
  check_unit(v);
  SignPartition part;
  for (int i = 0; i < dec.distinct_count(); ++i) {
    Eigen::VectorXd pu = dec.projectors[i] * u;
    Eigen::VectorXd pv = dec.projectors[i] * v;
    if (pu.norm() <= tol.support_tol && pv.norm() <= tol.support_tol) continue;
    if ((pu - pv).norm() < tol.sc_tol)
      part.plus.push_back(dec.eigenvalues[i]);
    else if ((pu + pv).norm() < tol.sc_tol)
      part.minus.push_back(dec.eigenvalues[i]);
    else
      return std::nullopt;
  }
  return part;
}

bool CospectralSolutions::admits(double s, double tol) const {
  if (s == 0) return false;
  if (all_s) return true;
  for (double v : values)
    if (std::abs(v - s) <= tol * (1.0 + std::abs(s))) return true;
  return false;
}

CospectralSolutions solve_cospectral_s(const SpectralDecomposition& dec, int a, int b, int alpha,
                                       int beta, const Tolerances& tol) {
  if (a == b || alpha == beta) throw std::invalid_argument("solve_cospectral_s: a != b required");
  const int d = dec.distinct_count();

  struct PerLambda {
    bool all = false;
    std::vector<std::pair<double, int>> vals;  // (s, sigma)
    int sigma_when_all = 0;
  };
  std::vector<PerLambda> per(d);

  for (int i = 0; i < d; ++i) {
    const Eigen::MatrixXd& e = dec.projectors[i];
    Eigen::VectorXd ea = e.col(a), eb = e.col(b), eal = e.col(alpha), ebe = e.col(beta);
    for (int sigma : {+1, -1}) {
      Eigen::VectorXd p = ea - sigma * eal;
      Eigen::VectorXd q = eb - sigma * ebe;
      double pn = p.norm(), qn = q.norm();
      if (pn <= tol.sc_tol && qn <= tol.sc_tol) {
        if (!per[i].all) {
          per[i].all = true;
          per[i].sigma_when_all = (ea.norm() > tol.support_tol) ? sigma : 0;
        }
        continue;
      }
      if (qn <= tol.sc_tol) continue;  // p + s q = 0 unsolvable
      double s = -p.dot(q) / q.squaredNorm();
      if ((p + s * q).norm() < tol.sc_tol && std::abs(s) > 1e-12)
        per[i].vals.emplace_back(s, sigma);
    }
  }

  CospectralSolutions out;
  bool running_all = true;
  std::vector<std::pair<double, std::vector<int>>> running;  // (s, sigma per lambda)

  for (int i = 0; i < d; ++i) {
    if (per[i].all) continue;
    if (per[i].vals.empty()) return out;  // empty: this eigenvalue admits no s
    if (running_all) {
      running_all = false;
      for (auto [s, sg] : per[i].vals) {
        std::vector<int> sig(d, 0);
        sig[i] = sg;
        running.emplace_back(s, sig);
      }
      continue;
    }
    std::vector<std::pair<double, std::vector<int>>> next;
    for (auto& [s, sig] : running)
      for (auto [s2, sg2] : per[i].vals)
        if (std::abs(s - s2) <= 1e-9 * (1.0 + std::abs(s))) {
          auto merged = sig;
          merged[i] = sg2;
          next.emplace_back(s, merged);
        }
    running = std::move(next);
    if (running.empty()) return out;
  }

  if (running_all) {
    out.all_s = true;
    out.sigma_all.resize(d, 0);
    for (int i = 0; i < d; ++i) out.sigma_all[i] = per[i].sigma_when_all;
    return out;
  }
  std::sort(running.begin(), running.end());
  for (auto& [s, sig] : running) {
    if (!out.values.empty() && std::abs(out.values.back() - s) <= 1e-9 * (1.0 + std::abs(s)))
      continue;
    for (int i = 0; i < d; ++i)
      if (per[i].all) sig[i] = per[i].sigma_when_all;
    out.values.push_back(s);
    out.sigma.push_back(sig);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Fixed: return "fixed";
    case Verdict::Periodic: return "periodic";
    case Verdict::PST: return "pst";
    case Verdict::StronglyCospectralOnly: return "strongly_cospectral_only";
    case Verdict::None: return "none";
  }
  return "?";
}

double SymbolicTime::value() const {
  return kPi * static_cast<double>(num) /
         (static_cast<double>(den) * std::sqrt(static_cast<double>(delta)));
}

std::string SymbolicTime::str() const {
  std::string out = "pi";
  if (num != 1) out = std::to_string(num) + "*pi";
  if (den != 1 && delta != 1)
    out += "/(" + std::to_string(den) + "*sqrt(" + std::to_string(delta) + "))";
  else if (den != 1)
    out += "/" + std::to_string(den);
  else if (delta != 1)
    out += "/sqrt(" + std::to_string(delta) + ")";
  return out;
}

OracleResult oracle_scan(const SpectralDecomposition& dec, const State& u, const State& v,
                         double t_max, double grid_step) {
  check_unit(u);
  check_unit(v);
  if (grid_step <= 0) grid_step = default_grid_step(dec);
  FidelityCurve f(dec, u, v);
  long steps = std::max(2L, static_cast<long>(std::ceil(t_max / grid_step)));
  double best_t = 0, best_f = -1;
  for (long i = 1; i <= steps; ++i) {
    double t = t_max * static_cast<double>(i) / static_cast<double>(steps);
    double val = f(t);
    if (val > best_f) {
      best_f = val;
      best_t = t;
    }
  }
  double step = t_max / static_cast<double>(steps);
  double t = golden_refine(f, std::max(0.0, best_t - step), std::min(t_max, best_t + step));
  return {t, f(t)};
}

std::optional<OracleResult> oracle_first_reach(const SpectralDecomposition& dec, const State& u,
                                               const State& v, double threshold, double t_max,
                                               double grid_step, bool interior_only) {
  check_unit(u);
  check_unit(v);
  if (grid_step <= 0) grid_step = default_grid_step(dec);
  FidelityCurve f(dec, u, v);
  long steps = std::max(4L, static_cast<long>(std::ceil(t_max / grid_step)));
  double step = t_max / static_cast<double>(steps);
  std::vector<double> fv(steps + 1);
  for (long i = 0; i <= steps; ++i) fv[i] = f(step * static_cast<double>(i));
  long last = interior_only ? steps - 1 : steps;
  for (long i = 1; i <= last; ++i) {
    double right = (i < steps) ? fv[i + 1] : -1.0;
    if (fv[i] < fv[i - 1] || fv[i] < right) continue;  // not a grid local maximum
    double lo = step * static_cast<double>(i - 1);
    double hi = std::min(t_max, step * static_cast<double>(i + 1));
    double tr = golden_refine(f, lo, hi);
    double fr = f(tr);
    if (fr >= threshold && tr > 0.5 * step && (!interior_only || tr < t_max - 0.25 * step))
      return OracleResult{tr, fr};
  }
  return std::nullopt;
}

namespace {

/// Shared core of is_periodic / check_pst once classification succeeded:
/// minimum time = factor * pi / (g sqrt(delta)) with factor 2 for periods.
std::optional<SymbolicTime> exact_minimum_time(const SupportClassification& cls, int factor) {
  if (cls.kind == NumberClass::Inconclusive || cls.g.is_zero()) return std::nullopt;
  // time = factor * pi / (g sqrt(delta)), g = p/q  ->  pi * (factor q) / (p sqrt(delta))
  long long num = factor * cls.g.den;
  long long den = cls.g.num;
  Rational reduced(num, den);
  return SymbolicTime{reduced.num, reduced.den, cls.delta};
}

}  // namespace

TransferReport is_periodic(const SpectralDecomposition& dec, const State& u, const Tolerances& tol,
                           const std::optional<Eigen::MatrixXi>& integer_hamiltonian,
                           double t_max) {
  check_unit(u);
  TransferReport rep;
  auto sup = support(u, dec, tol.support_tol);
  if (sup.values.size() == 1) {
    rep.verdict = Verdict::Fixed;
    rep.certification = Certification::Exact;
    rep.eigenvalue = sup.values[0];
    rep.oracle_fidelity = 1.0;
    return rep;
  }

  rep.classification = classify(sup.values, tol.classify_options(), integer_hamiltonian);
  if (rep.classification.kind != NumberClass::Inconclusive) {
    auto sym = exact_minimum_time(rep.classification, 2);
    rep.verdict = Verdict::Periodic;
    rep.certification = Certification::Exact;
    rep.symbolic_time = sym;
    rep.time = sym->value();
    rep.phase = std::exp(std::complex<double>(0.0, -rep.time * sup.values[0]));
    rep.oracle_fidelity = fidelity(dec, rep.time, u, u);
    if (rep.oracle_fidelity < 1.0 - tol.fid_tol)
      throw std::runtime_error(
          "is_periodic: oracle fidelity contradicts the certified period (tolerance "
          "misconfiguration)");
    return rep;
  }

  if (!ratio_condition(sup.values, tol.den_bound)) {
    rep.verdict = Verdict::None;
    return rep;
  }

  rep.verdict = Verdict::Periodic;
  rep.certification = Certification::NumericOnly;
  if (sup.values.size() == 2) {
    rep.time = 2.0 * kPi / std::abs(sup.values[1] - sup.values[0]);
    rep.oracle_fidelity = fidelity(dec, rep.time, u, u);
    rep.phase = std::exp(std::complex<double>(0.0, -rep.time * sup.values[0]));
    rep.note = "period from two-point support gap";
    return rep;
  }
  double horizon = t_max > 0 ? t_max : default_t_max(sup.values);
  for (int attempt = 0; attempt < (t_max > 0 ? 1 : 2); ++attempt) {
    if (auto hit = oracle_first_reach(dec, u, u, 1.0 - tol.fid_tol, horizon)) {
      rep.time = hit->t;
      rep.oracle_fidelity = hit->fidelity;
      rep.phase = std::exp(std::complex<double>(0.0, -rep.time * sup.values[0]));
      rep.note = "numeric-only period from oracle scan";
      return rep;
    }
    horizon *= 4;
  }
  rep.time = 0;
  rep.oracle_fidelity = 0;
  rep.note = "ratio condition holds but no return found within the scan horizon";
  return rep;
}

TransferReport check_pst(const SpectralDecomposition& dec, const State& u, const State& v,
                         const Tolerances& tol,
                         const std::optional<Eigen::MatrixXi>& integer_hamiltonian,
                         double t_max) {
  check_unit(u);
  check_unit(v);
  if (same_state(u, v)) throw std::invalid_argument("check_pst: states must be distinct");

  TransferReport rep;
  auto sup = support(u, dec, tol.support_tol);
  if (sup.values.size() == 1) {
    rep.verdict = Verdict::Fixed;
    rep.certification = Certification::Exact;
    rep.eigenvalue = sup.values[0];
    return rep;
  }

  auto part = strongly_cospectral(dec, u, v, tol);
  if (!part) {
    rep.verdict = Verdict::None;
    return rep;
  }
  if (part->plus.empty()) {
    // The partition is defined up to the sign of the target state; normalize
    // so the plus set is nonempty.
    std::swap(part->plus, part->minus);
    rep.note = "target sign convention flipped";
  }
  rep.sign_partition = part;

  rep.classification = classify(sup.values, tol.classify_options(), integer_hamiltonian);
  if (rep.classification.kind == NumberClass::Inconclusive) {
    // Conjugate closure not certifiable from float data: numeric-only route.
    rep.certification = Certification::NumericOnly;
    double horizon = t_max > 0 ? t_max : default_t_max(sup.values);
    if (auto hit = oracle_first_reach(dec, u, v, 1.0 - tol.fid_tol, horizon)) {
      rep.verdict = Verdict::PST;
      rep.time = hit->t;
      rep.oracle_fidelity = hit->fidelity;
      Eigen::VectorXcd w = evolve(dec, hit->t, u);
      std::complex<double> amp = v.cast<std::complex<double>>().cwiseProduct(w).sum();
      rep.phase = amp / std::abs(amp);
      rep.note = "numeric-only transfer; no minimality claim";
    } else {
      rep.verdict = Verdict::StronglyCospectralOnly;
      rep.note = "numeric-only: no transfer found within the scan horizon";
    }
    return rep;
  }

  // Parity test: theta in plus iff (lambda* - theta)/(g sqrt(delta)) is even.
  const auto& cls = rep.classification;
  double lambda_star = *std::min_element(part->plus.begin(), part->plus.end());
  size_t star_idx = 0;
  for (size_t i = 0; i < cls.members.size(); ++i)
    if (std::abs(cls.members[i] - lambda_star) < 1e-9) star_idx = i;

  auto is_plus = [&](double lam) {
    for (double p : part->plus)
      if (std::abs(p - lam) < 1e-9) return true;
    return false;
  };

  bool parity_ok = true;
  for (size_t i = 0; i < cls.members.size(); ++i) {
    Rational diff = pair_difference_over_sqrt_delta(cls, star_idx, i);
    Rational ratio = diff / cls.g;
    if (!ratio.is_integer()) {
      rep.verdict = Verdict::StronglyCospectralOnly;
      rep.certification = Certification::NumericOnly;
      rep.note = "parity check indeterminate: gcd division not integral";
      return rep;
    }
    bool even = (ratio.num % 2) == 0;
    if (even != is_plus(cls.members[i])) parity_ok = false;
  }

  if (!parity_ok) {
    rep.verdict = Verdict::StronglyCospectralOnly;
    rep.certification = Certification::Exact;
    return rep;
  }

  auto sym = exact_minimum_time(cls, 1);
  rep.verdict = Verdict::PST;
  rep.certification = Certification::Exact;
  rep.symbolic_time = sym;
  rep.time = sym->value();
  rep.phase = std::exp(std::complex<double>(0.0, -rep.time * lambda_star));
  rep.oracle_fidelity = fidelity(dec, rep.time, u, v);
  if (rep.oracle_fidelity < 1.0 - tol.fid_tol)
    throw std::runtime_error(
        "check_pst: oracle fidelity contradicts the certified transfer time (tolerance "
        "misconfiguration)");
  return rep;
}

namespace {

/// Canonical key for a state vector: sign-normalized, quantized entries.
std::vector<long long> state_key(const State& u) {
  double sign = 1.0;
  for (int i = 0; i < u.size(); ++i)
    if (std::abs(u[i]) > 1e-7) {
      sign = u[i] > 0 ? 1.0 : -1.0;
      break;
    }
  std::vector<long long> key(u.size());
  for (int i = 0; i < u.size(); ++i) key[i] = std::llround(sign * u[i] * 1e9);
  return key;
}

}  // namespace

std::vector<PstHit> pst_search(const Graph& x, HamiltonianKind kind, const SPolicy& policy,
                               const Tolerances& tol, int cap, double t_max) {
  const int n = x.vertex_count();
  if (n > cap) throw CapExceeded("pst_search: vertex count exceeds cap");
  for (double s : policy.values)
    if (s == 0) throw std::invalid_argument("pst_search: s = 0 not allowed");

  Eigen::MatrixXd m = hamiltonian(x, kind);
  SpectralDecomposition dec = decompose(m, -1.0, tol.group_tol_scale);
  auto integer_m = to_integer_matrix(m);

  std::map<std::pair<std::vector<long long>, std::vector<long long>>, PstHit> hits;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      // Only periodic states can be transfer sources; drop policy values whose
      // source state cannot be periodic before touching any target.
      std::vector<double> source_ok;
      for (double s : policy.values) {
        State us = SPairState(a, b, s).to_state(n);
        auto sup = support(us, dec, tol.support_tol);
        if (sup.values.size() == 1) continue;  // fixed state
        auto cls = classify(sup.values, tol.classify_options(), integer_m);
        if (cls.kind != NumberClass::Inconclusive || ratio_condition(sup.values, tol.den_bound))
          source_ok.push_back(s);
      }
      if (source_ok.empty() && !policy.solved) continue;

      for (int alpha = 0; alpha < n; ++alpha)
        for (int beta = 0; beta < n; ++beta) {
          if (alpha == beta) continue;
          if (alpha == a && beta == b) continue;
          auto sol = solve_cospectral_s(dec, a, b, alpha, beta, tol);
          if (sol.empty()) continue;

          std::vector<double> s_values;
          for (double s : source_ok)
            if (sol.admits(s)) s_values.push_back(s);
          if (policy.solved && !sol.all_s)
            for (double s : sol.values) s_values.push_back(s);

          std::sort(s_values.begin(), s_values.end());
          double last = std::nan("");
          for (double s : s_values) {
            if (!std::isnan(last) && std::abs(s - last) < 1e-12) continue;
            last = s;
            SPairState su(a, b, s), sv(alpha, beta, s);
            State us = su.to_state(n), vs = sv.to_state(n);
            if (same_state(us, vs)) continue;
            TransferReport rep = check_pst(dec, us, vs, tol, integer_m, t_max);
            if (rep.verdict != Verdict::PST) continue;
            auto ku = state_key(us), kv = state_key(vs);
            auto key = ku < kv ? std::make_pair(ku, kv) : std::make_pair(kv, ku);
            if (!hits.count(key)) hits[key] = PstHit{su, sv, std::move(rep)};
          }
        }
    }

  std::vector<PstHit> out;
  out.reserve(hits.size());
  for (auto& [k, h] : hits) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), [](const PstHit& l, const PstHit& r) {
    return std::tuple(l.source.a, l.source.b, l.source.s, l.target.a, l.target.b) <
           std::tuple(r.source.a, r.source.b, r.source.s, r.target.a, r.target.b);
  });
  return out;
}

std::optional<FractionalRevival> detect_fractional_revival(const SpectralDecomposition& dec, int a,
                                                           int b, double t,
                                                           const Tolerances& tol) {
  if (a == b) throw std::invalid_argument("detect_fractional_revival: a != b required");
  int n = dec.dim();
  Eigen::VectorXd ea = Eigen::VectorXd::Zero(n);
  ea[a] = 1.0;
  Eigen::VectorXcd w = evolve(dec, t, ea);
  for (int c = 0; c < n; ++c)
    if (c != a && c != b && std::abs(w[c]) > tol.fid_tol) return std::nullopt;
  FractionalRevival fr;
  fr.eta = w[a];
  fr.varpi = w[b];
  if (std::abs(fr.varpi) <= tol.fid_tol) return std::nullopt;
  double p = (fr.eta / fr.varpi).real();
  double root = std::sqrt(p * p + 1.0);
  fr.induced_s = {-p + root, -p - root};
  return fr;
}

bool pst_plus_periodic(const SpectralDecomposition& dec, int a, int alpha, int v, double tau,
                       double s, const Tolerances& tol) {
  int n = dec.dim();
  auto vertex_state = [n](int k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[k] = 1.0;
    return e;
  };
  State ea = vertex_state(a), eal = vertex_state(alpha), ev = vertex_state(v);
  if (fidelity(dec, tau, ea, eal) < 1.0 - tol.fid_tol)
    throw std::invalid_argument("pst_plus_periodic: vertex transfer a -> alpha unverified at tau");
  if (fidelity(dec, tau, ev, ev) < 1.0 - tol.fid_tol)
    throw std::invalid_argument("pst_plus_periodic: v is not periodic at tau");

  auto part = strongly_cospectral(dec, ea, eal, tol);
  if (!part) throw std::invalid_argument("pst_plus_periodic: vertex states not strongly cospectral");
  if (part->plus.empty()) std::swap(part->plus, part->minus);
  auto sup_v = support(ev, dec, tol.support_tol);

  bool congruent = false;
  for (double lam : part->plus)
    for (double lam2 : sup_v.values) {
      double angle = (lam - lam2) * tau;
      double rem = std::remainder(angle, 2.0 * kPi);
      if (std::abs(rem) <= 1e-8 * std::max(1.0, std::abs(angle))) congruent = true;
    }
  if (!congruent) return false;

  State u = SPairState(a, v, s).to_state(n);
  State mu = SPairState(alpha, v, s).to_state(n);
  if (fidelity(dec, tau, u, mu) < 1.0 - tol.fid_tol)
    throw std::runtime_error("pst_plus_periodic: congruence holds but oracle fidelity fails");
  return true;
}

std::optional<Eigen::MatrixXd> verify_quotient(const Eigen::MatrixXd& m, const Eigen::MatrixXd& p,
                                               double residual_tol) {
  if (p.rows() != m.rows()) throw std::invalid_argument("verify_quotient: dimension mismatch");
  int cols = static_cast<int>(p.cols());
  if ((p.transpose() * p - Eigen::MatrixXd::Identity(cols, cols)).cwiseAbs().maxCoeff() >
      residual_tol)
    return std::nullopt;
  Eigen::MatrixXd b = p.transpose() * m * p;
  if ((m * p - p * b).cwiseAbs().maxCoeff() > residual_tol) return std::nullopt;
  // walk intertwining at sampled times
  SpectralDecomposition dm = decompose(m);
  SpectralDecomposition db = decompose(b);
  for (double t : {0.7, 1.3, 2.9}) {
    Eigen::MatrixXcd lhs = p.cast<std::complex<double>>() * transition_matrix(db, t);
    Eigen::MatrixXcd rhs = transition_matrix(dm, t) * p.cast<std::complex<double>>();
    if ((lhs - rhs).cwiseAbs().maxCoeff() > residual_tol) return std::nullopt;
  }
  return b;
}

State lift_state(const Eigen::MatrixXd& p, const Eigen::VectorXd& w) {
  if (w.size() != p.cols()) throw std::invalid_argument("lift_state: dimension mismatch");
  return make_state(p * w);
}

std::optional<std::pair<SPairState, SPairState>> transitivity_compose(
    const SPairState& u, const SPairState& mu, double tau_u, const SPairState& v,
    const SPairState& nu, double tau_v) {
  if (std::abs(tau_u - tau_v) > 1e-9 * std::max(1.0, std::abs(tau_u)))
    throw std::invalid_argument("transitivity_compose: mismatched transfer times");
  if (u.b != v.a || mu.b != nu.a)
    throw std::invalid_argument("transitivity_compose: transfers do not chain (b indices)");
  if (u.a == v.b || mu.a == nu.b) return std::nullopt;  // composed state collapses
  double rs = u.s * v.s;
  return std::make_pair(SPairState(u.a, v.b, -rs), SPairState(mu.a, nu.b, -rs));
}

}  // namespace pairwalk
