#include "bewit/violations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bewit/errors.hpp"
#include "bewit/optimize.hpp"
#include "bewit/parallel.hpp"
#include "bewit/regions.hpp"

namespace bewit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSEps = 1e-9;

double dm1(const StateParams& p) { return static_cast<double>(p.d) - 1.0; }

// A restart outcome in the optimizers' search space.
struct Candidate {
  double x = 0.0;
  double y = 0.0;
  double value = -kInf;
  int iterations = 0;
  bool converged = false;
};

// Deterministic argmax: larger value wins, ties go to the smaller (x, y).
bool better(const Candidate& lhs, const Candidate& rhs) {
  if (lhs.value != rhs.value) return lhs.value > rhs.value;
  if (lhs.x != rhs.x) return lhs.x < rhs.x;
  return lhs.y < rhs.y;
}

Candidate pick_best(const std::vector<Candidate>& all) {
  Candidate best;
  bool first = true;
  for (const Candidate& c : all) {
    if (first || better(c, best)) best = c;
    first = false;
  }
  return best;
}

template <typename Objective>
std::vector<Candidate> run_restarts(const std::vector<std::pair<double, double>>& seeds,
                                    const OptimizeOptions& opts, Objective&& objective) {
  std::vector<Candidate> out(seeds.size());
  NelderMeadOptions nm;
  nm.diameter_tol = opts.diameter_tol;
  nm.max_iterations = opts.max_iterations;
  parallel_for(seeds.size(), opts.workers, [&](std::size_t i) {
    const auto [x0, y0] = seeds[i];
    const NelderMeadResult r = nelder_mead(
        [&](const std::vector<double>& v) { return objective(std::exp(v[0]), std::exp(v[1])); },
        {std::log(x0), std::log(y0)}, nm);
    Candidate c;
    c.x = std::exp(r.point[0]);
    c.y = std::exp(r.point[1]);
    c.value = -r.value;
    c.iterations = r.iterations;
    c.converged = r.converged;
    out[i] = c;
  });
  return out;
}

ViolationReport finish(std::size_t d, Kind kind, const Candidate& best,
                       const std::vector<Candidate>& all) {
  ViolationReport rep;
  rep.d = d;
  rep.kind = kind;
  rep.x = best.x;
  rep.y = best.y;
  rep.trace.restarts = static_cast<int>(all.size());
  rep.trace.iterations = best.iterations;
  rep.trace.converged = best.converged;
  const StateParams p = derive_params(d, best.x, best.y);
  Direction dir;
  if (kind == Kind::Bell) {
    dir = best_direction(reduced_bell(p));
  } else {
    const SteeringAtPoint st = best_steering_at(p);
    rep.s = st.s;
    dir = st.direction;
  }
  rep.a = dir.a;
  rep.b = dir.b;
  rep.value = dir.value;
  return rep;
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Bell:
      return "bell";
    case Kind::Steering:
      return "steer";
    case Kind::Witness:
      return "witness";
  }
  return "unknown";
}

double Mat2::lambda_min() const noexcept {
  const double tr = trace();
  const double disc = std::sqrt((p - q) * (p - q) + 4.0 * c * c);
  if (tr > 0.0) return 2.0 * det() / (tr + disc);
  return 0.5 * (tr - disc);
}

ReducedForm m_matrix(Kind kind, const StateParams& params, const ReducedExtra& extra) {
  if (params.d < 3) throw std::invalid_argument("m_matrix: d must be >= 3");
  const double d1 = dm1(params);
  const double x = params.x, y = params.y, zt = params.ztilde;
  ReducedForm rf;
  rf.kind = kind;
  rf.params = params;
  rf.extra = extra;
  rf.m.c = x * (2.0 * y + zt) / std::sqrt(d1);
  switch (kind) {
    case Kind::Bell:
      if (!std::holds_alternative<std::monostate>(extra))
        throw std::invalid_argument("m_matrix: Bell form takes no extra parameters");
      rf.m.p = x * x + d1 * y * y;
      rf.m.q = (2.0 * y * zt + zt * zt) / d1 + 2.0 * x * y + (d1 - 1.0) * y * y;
      break;
    case Kind::Steering: {
      if (!std::holds_alternative<double>(extra))
        throw std::invalid_argument("m_matrix: steering form needs s");
      const double s = std::get<double>(extra);
      if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("m_matrix: s must lie in (0, 1)");
      rf.m.p = x * x + s * x * y / d1;
      rf.m.q = (y + zt) * (y + zt) / d1 + x * y + (1.0 - s) / s * y * y;
      break;
    }
    case Kind::Witness: {
      if (!std::holds_alternative<WitnessCoefficients>(extra))
        throw std::invalid_argument("m_matrix: witness form needs (alpha, beta)");
      const WitnessCoefficients w = std::get<WitnessCoefficients>(extra);
      if (!std::isfinite(w.alpha) || !std::isfinite(w.beta))
        throw std::invalid_argument("m_matrix: alpha and beta must be finite");
      rf.m.p = x * x + w.alpha * x * y / d1;
      rf.m.q = (y + zt) * (y + zt) / d1 + x * y + w.beta * y * y;
      break;
    }
  }
  return rf;
}

double expectation_reduced(const ReducedForm& rf, double a, double b) {
  return -dm1(rf.params) / rf.params.bigR * rf.m.quadratic(a, b);
}

double expectation_reduced(const ReducedForm& rf, const MeasurementSetting& m) {
  if (m.d != rf.params.d) throw std::invalid_argument("expectation_reduced: dimension mismatch");
  return expectation_reduced(rf, m.a, m.b);
}

double expectation_direct(const SymMatrix& w, const SymMatrix& rho) {
  if (w.size() != rho.size()) throw std::invalid_argument("expectation_direct: size mismatch");
  return trace_product(w, rho);
}

Direction best_direction(const ReducedForm& rf) {
  const Mat2& m = rf.m;
  const double lam = m.lambda_min();
  // Two candidate eigenvectors; keep the one with the larger norm.
  double va = lam - m.q, vb = m.c;
  const double wa = m.c, wb = lam - m.p;
  if (std::hypot(wa, wb) > std::hypot(va, vb)) {
    va = wa;
    vb = wb;
  }
  double n = std::hypot(va, vb);
  if (n == 0.0) {
    // m is a multiple of the identity.
    va = 1.0;
    vb = 0.0;
    n = 1.0;
  }
  va /= n;
  vb /= n;
  if (va < 0.0 || (va == 0.0 && vb < 0.0)) {
    va = -va;
    vb = -vb;
  }
  Direction dir;
  dir.a = va;
  dir.b = vb;
  dir.lambda_min = lam;
  dir.value = -dm1(rf.params) / rf.params.bigR * lam;
  return dir;
}

Direction optimal_direction(const ReducedForm& rf) {
  if (!(rf.m.det() < 0.0)) throw NoViolation("optimal_direction: det M >= 0, no violation");
  return best_direction(rf);
}

double bell_gamma(std::size_t d, double lambda_tilde) {
  const RegionBounds b = bounds(d);
  const double s = std::sqrt(static_cast<double>(d) - 1.0);
  const double dp = b.d_plus / s, dm = b.d_minus / s;
  const double g2 = (1.0 + lambda_tilde * lambda_tilde) * (lambda_tilde - dp) * (lambda_tilde + dm);
  return std::sqrt(std::max(0.0, g2));
}

StateParams bell_parametrization(std::size_t d, double lambda_tilde, double theta) {
  if (d < 3) throw std::invalid_argument("bell_parametrization: d must be >= 3");
  const RegionBounds bd = bounds(d);
  const double dd = static_cast<double>(d);
  if (!(lambda_tilde > bd.d_plus / std::sqrt(dd - 1.0)))
    throw std::invalid_argument("bell_parametrization: lambda~ must exceed d+/sqrt(d-1)");
  if (!(theta > 0.0 && theta < std::numbers::pi))
    throw std::invalid_argument("bell_parametrization: theta must lie in (0, pi)");
  const double g = bell_gamma(d, lambda_tilde);
  const double l2 = lambda_tilde * lambda_tilde;
  const double w = l2 - 1.0 - g * std::cos(theta);
  const double y = 1.0 / std::sqrt(w * w / (dd - 2.0) + (dd - 1.0) * l2 + 1.0);
  const double x = y * lambda_tilde * std::sqrt(dd - 1.0);
  return make_params(d, x, y);
}

double steering_s_star(const StateParams& p, double eps) {
  const double d1 = dm1(p);
  const double yz = p.y + p.ztilde;
  const double l = yz * yz / d1 + p.x * p.y - p.y * p.y;
  if (!(l > 0.0)) return 1.0 - eps;
  const double s = std::sqrt(d1 * p.x * p.y / l);
  return std::clamp(s, eps, 1.0 - eps);
}

SteeringAtPoint best_steering_at(const StateParams& p) {
  const auto lam = [&](double s) { return reduced_steering(p, s).m.lambda_min(); };
  const ScalarMin m = scan_then_golden(lam, kSEps, 1.0 - kSEps, 40, steering_s_star(p, kSEps));
  return {m.x, best_direction(reduced_steering(p, m.x))};
}

ViolationReport maximize_bell(std::size_t d, const OptimizeOptions& opts) {
  if (d < 3) throw std::invalid_argument("maximize_bell: d must be >= 3");
  const RegionBounds bd = bounds(d);
  const double dd = static_cast<double>(d);
  std::vector<std::pair<double, double>> seeds;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double x = bd.x_n * (i + 1) / 6.0;
      seeds.emplace_back(x, x / bd.d_plus * (j + 1) / 6.0);
    }
  seeds.resize(std::min<std::size_t>(seeds.size(), static_cast<std::size_t>(std::max(1, opts.starts))));

  const auto objective = [&](double x, double y) {
    if (!(x < bd.x_n && x > bd.d_plus * y && y > 0.0)) return kInf;
    if (!domain_margins(d, x, y).inside()) return kInf;
    const StateParams p = derive_params(d, x, y);
    return (dd - 1.0) / p.bigR * reduced_bell(p).m.lambda_min();
  };
  const std::vector<Candidate> all = run_restarts(seeds, opts, objective);
  return finish(d, Kind::Bell, pick_best(all), all);
}

ViolationReport maximize_steering(std::size_t d, const OptimizeOptions& opts) {
  if (d < 3) throw std::invalid_argument("maximize_steering: d must be >= 3");
  const RegionBounds bd = bounds(d);
  const double dd = static_cast<double>(d);
  std::vector<std::pair<double, double>> seeds;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double x = bd.x_s * (i + 1) / 6.0;
      const double y = x * (j + 1) / 6.0;
      if (domain_margins(d, x, y).inside()) seeds.emplace_back(x, y);
    }
  seeds.resize(std::min<std::size_t>(seeds.size(), static_cast<std::size_t>(std::max(1, opts.starts))));

  const auto objective = [&](double x, double y) {
    if (!(x < bd.x_s && x > y && y > 0.0)) return kInf;
    if (!domain_margins(d, x, y).inside()) return kInf;
    const StateParams p = derive_params(d, x, y);
    return (dd - 1.0) / p.bigR * best_steering_at(p).direction.lambda_min;
  };
  const std::vector<Candidate> all = run_restarts(seeds, opts, objective);
  return finish(d, Kind::Steering, pick_best(all), all);
}

ViolationReport evaluate_bell(const StateParams& p, const MeasurementSetting& m) {
  ViolationReport rep;
  rep.d = p.d;
  rep.kind = Kind::Bell;
  rep.x = p.x;
  rep.y = p.y;
  rep.a = m.a;
  rep.b = m.b;
  rep.value = expectation_reduced(reduced_bell(p), m);
  return rep;
}

ViolationReport evaluate_steering(const StateParams& p, const SteeringSetting& st) {
  ViolationReport rep;
  rep.d = p.d;
  rep.kind = Kind::Steering;
  rep.x = p.x;
  rep.y = p.y;
  rep.a = st.setting.a;
  rep.b = st.setting.b;
  rep.s = st.s;
  rep.value = expectation_reduced(reduced_steering(p, st.s), st.setting);
  return rep;
}

AsymptoticLaws asymptotic_laws(std::size_t d) {
  if (d < 3) throw std::invalid_argument("asymptotic_laws: d must be >= 3");
  const double dd = static_cast<double>(d);
  AsymptoticLaws law;
  law.bell.x = (2.0 / 3.0) / std::sqrt(dd);
  law.bell.y = (4.0 / 27.0) * std::pow(dd, -2.5);
  law.bell.a = 1.0 - 2.0 / (9.0 * dd);
  law.bell.value = (8.0 / 729.0) * std::pow(dd, -4.0);
  law.steering.x = 1.0 / std::sqrt(dd);
  law.steering.y = 0.25 / std::sqrt(dd);
  law.steering.s = 0.5;
  law.steering.a = 1.0 - 1.0 / (2.0 * dd);
  law.steering.value = 1.0 / (32.0 * dd * dd);
  return law;
}

}  // namespace bewit
