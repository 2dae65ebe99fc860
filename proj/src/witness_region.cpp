#include "bewit/witness_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bewit/bound_state.hpp"
#include "bewit/optimize.hpp"
#include "bewit/parallel.hpp"

namespace bewit {

namespace {

void require_d(std::size_t d, const char* who) {
  if (d < 3) throw std::invalid_argument(std::string(who) + ": d must be >= 3");
}

// det M_E without validating membership in D.
double det_me(std::size_t d, double x, double y, double alpha, double beta) {
  const double d1 = static_cast<double>(d) - 1.0;
  const double zt = std::sqrt(std::max(0.0, (d1 - 1.0) * (1.0 - x * x - y * y)));
  const double c = x * (2.0 * y + zt) / std::sqrt(d1);
  const double p = x * x + alpha * x * y / d1;
  const double q = (y + zt) * (y + zt) / d1 + x * y + beta * y * y;
  return p * q - c * c;
}

// Top eigenvector of a small symmetric matrix.
std::pair<double, QVector> top_eigen(const SymMatrix& m) {
  EigenSystem es = sym_eigen(m);
  return {es.values.back(), std::move(es.vectors.back())};
}

// Contract W over one factor with v: first = true gives sum_{i,k} v_i v_k W[(i,j),(k,l)].
SymMatrix contract(const SymMatrix& w, std::size_t d, const QVector& v, bool first) {
  SymMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = r; s < d; ++s) {
      double acc = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
          const double coef = v[i] * v[k];
          acc += first ? coef * w(i * d + r, k * d + s) : coef * w(r * d + i, s * d + k);
        }
      out.set(r, s, acc);
    }
  return out;
}

}  // namespace

double gamma(std::size_t d, double t) {
  require_d(d, "gamma");
  const double d1 = static_cast<double>(d) - 1.0;
  const double k = (d1 - 1.0) / d1;
  const double num = 3.0 * t * t - 2.0 * t * k - 1.0 / d1;
  const double den = d1 * (t - k) * (t - k) + 1.0;
  return num / den;
}

double gamma_tilde(std::size_t d, double t) {
  require_d(d, "gamma_tilde");
  if (t == 1.0) return std::numeric_limits<double>::infinity();
  const double d1 = static_cast<double>(d) - 1.0;
  const double w = t + 1.0 / d1;
  return 1.0 / ((t - 1.0) * (t - 1.0)) + d1 / (w * w);
}

double t_one(std::size_t d) {
  require_d(d, "t_one");
  const double dd = static_cast<double>(d);
  return 1.0 + dd / ((dd - 1.0) * (dd - 2.0));
}

EnvelopePoint envelope(std::size_t d, double t) {
  require_d(d, "envelope");
  const double t1 = t_one(d);
  if (!(t >= 1.0 && t <= t1)) throw std::invalid_argument("envelope: t must lie in [1, t1]");
  const double dd = static_cast<double>(d);
  const double u = (dd - 1.0) * (t - 1.0);
  const double q = dd + 2.0 * u + u * u;
  EnvelopePoint e;
  e.t = t;
  e.u = u;
  e.alpha = (dd - 1.0) * (dd + 2.0 * u) * (dd - (dd - 2.0) * u) / ((dd + u - 1.0) * q * q);
  e.beta = u * (dd + u) * (dd * dd + 3.0 * dd * u + 3.0 * u * u) / ((dd - 1.0) * q * q);
  return e;
}

WitnessCoefficients envelope_fd(std::size_t d, double t, double h) {
  const double g1 = (gamma(d, t + h) - gamma(d, t - h)) / (2.0 * h);
  return {g1 / (2.0 * t), gamma(d, t) - g1 * t / 2.0};
}

JSlack j_slack(std::size_t d, double alpha, double beta) {
  const double t1 = t_one(d);
  const auto slack = [&](double t) { return alpha * t * t + beta - gamma(d, t); };
  constexpr int kGrid = 10000;
  int arg = 0;
  double best = slack(1.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double v = slack(1.0 + (t1 - 1.0) * i / kGrid);
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  const double lo = 1.0 + (t1 - 1.0) * std::max(0, arg - 1) / kGrid;
  const double hi = 1.0 + (t1 - 1.0) * std::min(kGrid, arg + 1) / kGrid;
  const ScalarMin m = golden_section_min(slack, lo, hi, 1e-13);
  if (m.value < best) return {m.value, m.x};
  return {best, 1.0 + (t1 - 1.0) * arg / kGrid};
}

bool in_J(std::size_t d, double alpha, double beta, double tol) {
  if (!(alpha >= 0.0 && alpha < 1.0) || !std::isfinite(beta)) return false;
  return j_slack(d, alpha, beta).slack >= -tol;
}

SeparabilityResult separability_check(const SymMatrix& w, std::size_t d,
                                      const SeparabilityOptions& opts) {
  if (w.size() != d * d) throw std::invalid_argument("separability_check: W must be d^2 x d^2");
  if (opts.restarts < 1) throw std::invalid_argument("separability_check: restarts must be >= 1");

  // Starting vectors are drawn serially so they do not depend on scheduling.
  std::mt19937_64 gen(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<QVector> starts(static_cast<std::size_t>(opts.restarts), QVector(d));
  for (QVector& v : starts) {
    for (double& c : v) c = normal(gen);
    const double n = norm(v);
    for (double& c : v) c /= n;
  }

  struct Run {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
  };
  std::vector<Run> runs(starts.size());
  parallel_for(starts.size(), opts.workers, [&](std::size_t r) {
    QVector psi = starts[r];
    double value = -std::numeric_limits<double>::infinity();
    Run run;
    for (run.iterations = 1; run.iterations <= opts.max_iterations; ++run.iterations) {
      const QVector phi = top_eigen(contract(w, d, psi, true)).second;
      auto [next, psi_next] = top_eigen(contract(w, d, phi, false));
      psi = std::move(psi_next);
      const bool done = std::abs(next - value) < opts.tol;
      value = next;
      if (done) {
        run.converged = true;
        break;
      }
    }
    run.iterations = std::min(run.iterations, opts.max_iterations);
    run.value = value;
    runs[r] = run;
  });

  SeparabilityResult res;
  res.max_value = -std::numeric_limits<double>::infinity();
  for (const Run& run : runs) {
    res.max_value = std::max(res.max_value, run.value);
    res.converged = res.converged && run.converged;
    res.iterations += run.iterations;
  }
  return res;
}

MeasurementSetting psi_detection_setting(std::size_t d) {
  const double dd = static_cast<double>(d);
  return MeasurementSetting::make(d, std::sqrt((dd - 1.0) / dd), -1.0 / std::sqrt(dd));
}

double psi_expectation(const WitnessSetting& w) {
  const MeasurementSetting& m = w.setting;
  const double dd = static_cast<double>(m.d);
  const double overlap = m.a + m.b * std::sqrt(dd - 1.0);
  return ((1.0 - w.alpha) * m.a * m.a - overlap * overlap) / dd;
}

EnvelopeDet min_det_over_envelope(std::size_t d, double x, double y) {
  require_d(d, "min_det_over_envelope");
  const double t1 = t_one(d);
  const auto f = [&](double t) {
    const EnvelopePoint e = envelope(d, std::clamp(t, 1.0, t1));
    return det_me(d, x, y, e.alpha, e.beta);
  };
  constexpr int kGrid = 2000;
  int arg = 0;
  double best = f(1.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double v = f(1.0 + (t1 - 1.0) * i / kGrid);
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  const double lo = 1.0 + (t1 - 1.0) * std::max(0, arg - 1) / kGrid;
  const double hi = 1.0 + (t1 - 1.0) * std::min(kGrid, arg + 1) / kGrid;
  const ScalarMin m = golden_section_min(f, lo, hi, 1e-13);
  if (m.value < best) return {m.x, m.value};
  return {1.0 + (t1 - 1.0) * arg / kGrid, best};
}

DeEnvelopeReport de_envelope_check(std::size_t d, int n) {
  require_d(d, "de_envelope_check");
  if (n < 1) throw std::invalid_argument("de_envelope_check: n must be >= 1");
  const double dd = static_cast<double>(d);
  const double u_end = dd / (dd - 2.0);
  const auto r0_of = [&](double u) { return (dd + 2.0 * u) / (dd + 2.0 * u + u * u); };

  DeEnvelopeReport rep;
  rep.samples = n;
  rep.r0_at_zero = r0_of(0.0);
  rep.r0_at_end = r0_of(u_end);
  rep.f_max = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n; ++k) {
    const double u = u_end * k / (n + 1);
    const double r0 = r0_of(u);
    const double y = 1.0 / std::sqrt((dd - 2.0) * r0 * r0 + r0 * r0 * r0 * r0 + 1.0);
    const double x = r0 * r0 * y;
    const StateParams p = derive_params(d, x, y);
    const EnvelopeDet e = min_det_over_envelope(d, x, y);
    rep.max_abs_min_det = std::max(rep.max_abs_min_det, std::abs(e.det));
    rep.max_abs_delta = std::max(rep.max_abs_delta, std::abs(p.delta));
    rep.max_tangent_gap = std::max(rep.max_tangent_gap, std::abs(e.t - (1.0 + u / (dd - 1.0))));

    const double q = dd + 2.0 * u + u * u;
    const double r1 = (dd + 2.0 * u - dd * u) / q;
    const double coef = (dd + 2.0 * u - dd * u) / (q * q);
    const auto g = [&](double r) {
      return 1.0 - (1.0 + u) * r + ((1.0 + u) * (1.0 + u) - 1.0 / r0) * r * r;
    };
    constexpr int kGrid = 4000;
    for (int i = 1; i < kGrid; ++i) {
      const double r = static_cast<double>(i) / kGrid;
      rep.f_max = std::max(rep.f_max, r * r * r - r * r - coef * g(r / r1));
    }
  }
  return rep;
}

}  // namespace bewit
