#include "bewit/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bewit/bound_state.hpp"
#include "bewit/format.hpp"
#include "bewit/lhv.hpp"
#include "bewit/operators.hpp"
#include "bewit/reference_tables.hpp"
#include "bewit/regions.hpp"
#include "bewit/simplex.hpp"
#include "bewit/violations.hpp"
#include "bewit/witness_region.hpp"

namespace bewit {

void RunConfig::validate() const {
  if (!(eig_tol > 0.0)) throw std::invalid_argument("eig_tol must be positive");
  if (!(sym_tol > 0.0)) throw std::invalid_argument("sym_tol must be positive");
  if (!(dead_zone > 0.0)) throw std::invalid_argument("dead_zone must be positive");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
}

std::string RunConfig::describe() const {
  return JsonObject()
      .add("eig_tol", eig_tol)
      .add("sym_tol", sym_tol)
      .add("dead_zone", dead_zone)
      .add_raw("seed", std::to_string(seed))
      .add("workers", workers)
      .add("format", format)
      .str();
}

int SelftestReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return !c.pass; }));
}

std::string SelftestReport::text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " ") << c.detail
        << '\n';
  out << "summary passed=" << checks.size() - static_cast<std::size_t>(failures())
      << " failed=" << failures() << '\n';
  return out.str();
}

namespace {

class Detail {
 public:
  Detail& kv(const std::string& k, double v) { return raw(k, num17(v)); }
  Detail& kv(const std::string& k, long v) { return raw(k, std::to_string(v)); }
  Detail& raw(const std::string& k, const std::string& v) {
    if (!s_.empty()) s_ += ' ';
    s_ += k + '=' + v;
    return *this;
  }
  std::string str() const { return s_; }

 private:
  std::string s_;
};

void check_theta(const RunConfig& cfg, SelftestReport& rep) {
  double worst = 0.0;
  for (std::size_t d = 2; d <= 16; ++d) {
    const ThetaDiagnostics t = theta_identities(theta_states(d));
    worst = std::max({worst, t.sum_residual, t.resolution_residual, t.gram_residual});
  }
  rep.checks.push_back({"theta.identities", worst <= cfg.sym_tol, Detail().kv("max_residual", worst).str()});
}

void check_states(const RunConfig& cfg, SelftestReport& rep) {
  double tr = 0.0, psd = 0.0, pt_res = 0.0, pt_eig = 0.0, spec = 0.0;
  for (std::size_t d = 3; d <= 6; ++d)
    for (const PlanePoint& pt : sample_domain(d, 20, cfg.seed + d)) {
      const StateBundle b = build_state(make_params(d, pt.x, pt.y));
      const PptCheck ppt = check_ppt(b);
      std::vector<double> ev = sym_eigenvalues(b.rho);
      const std::vector<double> want = expected_spectrum(b.params);
      double sd = 0.0;
      for (std::size_t i = 0; i < ev.size(); ++i) sd = std::max(sd, std::abs(ev[i] - want[i]));
      tr = std::max(tr, std::abs(b.rho.trace() - 1.0));
      psd = std::min(psd, ev.front());
      pt_res = std::max(pt_res, ppt.pt_residual);
      pt_eig = std::min(pt_eig, ppt.min_eig_pt);
      spec = std::max(spec, sd);
    }
  rep.checks.push_back({"state.trace", tr <= cfg.sym_tol, Detail().kv("max_dev", tr).str()});
  rep.checks.push_back({"state.psd", psd >= -cfg.sym_tol, Detail().kv("min_eig", psd).str()});
  rep.checks.push_back({"state.ppt", pt_res <= cfg.sym_tol && pt_eig >= -cfg.eig_tol,
                        Detail().kv("pt_residual", pt_res).kv("min_eig_pt", pt_eig).str()});
  rep.checks.push_back({"state.spectrum", spec <= cfg.eig_tol, Detail().kv("max_dev", spec).str()});
}

void check_operators(const RunConfig& cfg, SelftestReport& rep) {
  std::mt19937_64 gen(cfg.seed + 101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double eq_s = 0.0, eq_n = 0.0, z_res = -1.0, collected = 0.0;
  for (std::size_t d = 3; d <= 6; ++d)
    for (int k = 0; k < 5; ++k) {
      const double a = 0.05 + 0.9 * unit(gen);
      const double s = 0.05 + 0.9 * unit(gen);
      const MeasurementSetting m = MeasurementSetting::from_a(d, a, k % 2 ? 1.0 : -1.0);
      const SteeringSetting st = SteeringSetting::make(m, s);
      const WitnessCoefficients ws = steering_coefficients(s);
      const WitnessCoefficients wn = bell_coefficients(m);
      eq_s = std::max(eq_s, max_abs_diff(steering_operator(st), witness_operator({m, ws.alpha, ws.beta})));
      eq_n = std::max(eq_n, max_abs_diff(bell_operator(m), witness_operator({m, wn.alpha, wn.beta})));
      collected = std::max(collected, max_abs_diff(bell_operator(m), bell_operator_collected(m)));
      z_res = std::max(z_res, z_constraint_residual(z_operators(st)));
    }
  rep.checks.push_back({"operators.equivalence",
                        eq_s <= cfg.sym_tol && eq_n <= cfg.sym_tol && collected <= cfg.sym_tol,
                        Detail().kv("steer_vs_witness", eq_s).kv("bell_vs_witness", eq_n)
                            .kv("bell_collected", collected).str()});
  rep.checks.push_back({"operators.z_constraints", z_res <= cfg.sym_tol,
                        Detail().kv("max_eig", z_res).str()});
}

void check_oracle(const RunConfig& cfg, SelftestReport& rep) {
  std::mt19937_64 gen(cfg.seed + 202);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (std::size_t d = 3; d <= 6; ++d)
    for (const PlanePoint& pt : sample_domain(d, 6, cfg.seed + 300 + d)) {
      const StateBundle b = build_state(make_params(d, pt.x, pt.y));
      const double a = unit(gen);
      const MeasurementSetting m = MeasurementSetting::from_a(d, a, unit(gen) < 0.5 ? -1.0 : 1.0);
      const double s = 0.02 + 0.96 * unit(gen);
      const WitnessCoefficients w{unit(gen), 3.0 * unit(gen)};
      const double n_dir = expectation_direct(bell_operator(m), b.rho);
      const double s_dir = expectation_direct(steering_operator(SteeringSetting::make(m, s)), b.rho);
      const double e_dir = expectation_direct(witness_operator({m, w.alpha, w.beta}), b.rho);
      worst = std::max({worst, std::abs(n_dir - expectation_reduced(reduced_bell(b.params), m)),
                        std::abs(s_dir - expectation_reduced(reduced_steering(b.params, s), m)),
                        std::abs(e_dir - expectation_reduced(reduced_witness(b.params, w), m))});
    }
  rep.checks.push_back({"violations.oracle", worst <= cfg.eig_tol, Detail().kv("max_dev", worst).str()});
}

void check_lhv(SelftestReport& rep) {
  bool ok = true;
  double worst = -1.0;
  for (std::size_t d = 3; d <= 7; ++d) {
    const double b = lhv_bound(d);
    worst = std::max(worst, std::abs(b));
    ok = ok && b == 0.0 && hardy_check(d) && hardy_relaxed_satisfiable(d);
  }
  rep.checks.push_back({"lhv.bound_and_hardy", ok, Detail().kv("max_abs_bound", worst).str()});
}

void check_regions(const RunConfig& cfg, SelftestReport& rep) {
  long mis_n = 0, mis_s = 0, mis_e = 0, chain = 0, sym = 0, total = 0;
  for (std::size_t d = 3; d <= 6; ++d)
    for (const PlanePoint& pt : sample_domain(d, 1000, cfg.seed + 400 + d)) {
      ++total;
      const RegionLabel l = classify(d, pt.x, pt.y);
      const RegionLabel m = classify(d, pt.y, pt.x);
      const double dn = det_bell(d, pt.x, pt.y);
      if (std::abs(dn) > cfg.dead_zone && (dn < 0.0) != l.in_DNx) ++mis_n;
      const double ds = steer_min_det(d, pt.x, pt.y);
      if (std::abs(ds) > cfg.dead_zone && (ds < 0.0 && pt.x > pt.y) != l.in_DSx) ++mis_s;
      const double de = witness_min_det(d, pt.x, pt.y);
      if (std::abs(de) > cfg.dead_zone && (de < 0.0) != l.in_DE) ++mis_e;
      if ((l.in_DNx && !l.in_DSx) || (l.in_DNy && !l.in_DSy) || ((l.in_DSx || l.in_DSy) && !l.in_DE))
        ++chain;
      if (l.in_DNx != m.in_DNy || l.in_DSx != m.in_DSy) ++sym;
    }
  long curve_out = 0;
  for (std::size_t d = 3; d <= 6; ++d)
    for (const PlanePoint& pt : blue_curve(d, 50)) curve_out += !classify(d, pt.x, pt.y).in_DNx;
  rep.checks.push_back({"regions.det_consistency", mis_n == 0 && mis_s == 0 && mis_e == 0,
                        Detail().kv("points", total).kv("bell", mis_n).kv("steer", mis_s)
                            .kv("witness", mis_e).str()});
  rep.checks.push_back({"regions.containment", chain == 0 && sym == 0,
                        Detail().kv("chain_violations", chain).kv("swap_violations", sym).str()});
  rep.checks.push_back({"regions.blue_curve", curve_out == 0, Detail().kv("outside", curve_out).str()});

  std::ostringstream csv;
  const RegionCounts c = region_scan(3, 100, csv, cfg.workers);
  const bool nested = c.in_DNx <= c.in_DSx && c.in_DSx <= c.in_DE && c.in_DE <= c.in_D;
  const bool nonempty = c.in_DNx > 0 && c.in_DSx > 0 && c.in_DE > 0 && c.in_D > 0;
  rep.checks.push_back({"regions.scan_d3_grid100", nested && nonempty,
                        Detail().kv("D", c.in_D).kv("DNx", c.in_DNx).kv("DNy", c.in_DNy)
                            .kv("DSx", c.in_DSx).kv("DSy", c.in_DSy).kv("DE", c.in_DE)
                            .kv("bytes", static_cast<long>(csv.str().size())).str()});
}

void check_witness(const RunConfig& cfg, SelftestReport& rep) {
  double g1 = 0.0, a_end = 0.0, fd = 0.0;
  for (std::size_t d = 3; d <= 10; ++d) {
    g1 = std::max(g1, std::abs(gamma(d, 1.0) - 1.0));
    a_end = std::max(a_end, std::abs(envelope(d, t_one(d)).alpha));
    const double t1 = t_one(d);
    for (int k = 1; k < 100; ++k) {
      const double t = 1.0 + (t1 - 1.0) * k / 100.0;
      const EnvelopePoint e = envelope(d, t);
      const WitnessCoefficients f = envelope_fd(d, t);
      fd = std::max({fd, std::abs(e.alpha - f.alpha), std::abs(e.beta - f.beta)});
    }
  }
  rep.checks.push_back({"witness.envelope", g1 <= 1e-14 && a_end <= 1e-12 && fd <= 1e-6,
                        Detail().kv("gamma1_dev", g1).kv("alpha_t1", a_end).kv("fd_dev", fd).str()});

  SeparabilityOptions so;
  so.seed = cfg.seed + 500;
  so.workers = cfg.workers;
  double sep_lo = 0.0, sep_hi = 0.0, psi_min = 1.0, outside = 0.0;
  for (std::size_t d = 3; d <= 4; ++d) {
    const double t1 = t_one(d);
    const MeasurementSetting m = psi_detection_setting(d);
    for (int k = 1; k <= 4; ++k) {
      const EnvelopePoint e = envelope(d, 1.0 + (t1 - 1.0) * k / 4.0);
      const WitnessSetting w{m, e.alpha, e.beta};
      const double v = separability_check(witness_operator(w), d, so).max_value;
      sep_lo = std::min(sep_lo, v);
      sep_hi = std::max(sep_hi, v);
      psi_min = std::min(psi_min, psi_expectation(w));
    }
    const EnvelopePoint e = envelope(d, 1.0 + 0.5 * (t1 - 1.0));
    const WitnessSetting bad{m, e.alpha, e.beta - 1e-3};
    outside = std::max(outside, separability_check(witness_operator(bad), d, so).max_value);
  }
  rep.checks.push_back({"witness.separability", sep_lo >= -1e-9 && sep_hi <= 1e-9 && psi_min > 0.0,
                        Detail().kv("sep_min", sep_lo).kv("sep_max", sep_hi).kv("psi_min", psi_min).str()});
  rep.checks.push_back({"witness.outside_J_control", outside > 1e-9, Detail().kv("sep_max", outside).str()});

  double de = 0.0, f_max = -1.0;
  for (std::size_t d = 3; d <= 6; ++d) {
    const DeEnvelopeReport r = de_envelope_check(d, 20);
    de = std::max({de, r.max_abs_min_det, r.max_abs_delta});
    f_max = std::max(f_max, r.f_max);
  }
  rep.checks.push_back({"witness.de_envelope", de <= 1e-8 && f_max < 0.0,
                        Detail().kv("max_residual", de).kv("f_max", f_max).str()});
}

void check_tables(const RunConfig& cfg, SelftestReport& rep) {
  OptimizeOptions opts;
  opts.workers = cfg.workers;
  double bell_ratio = 1e300, steer_ratio = 1e300, steer_point = 0.0;
  for (const BellRow& r : kBellRows)
    bell_ratio = std::min(bell_ratio, maximize_bell(r.d, opts).value / r.value);
  for (const SteeringRow& r : kSteeringRows) {
    steer_ratio = std::min(steer_ratio, maximize_steering(r.d, opts).value / r.value);
    const StateParams p = make_params(r.d, r.x, r.y);
    const SteeringSetting st = SteeringSetting::make(MeasurementSetting::from_a(r.d, r.a), r.s);
    steer_point = std::max(steer_point, std::abs(evaluate_steering(p, st).value / r.value - 1.0));
  }
  rep.checks.push_back({"tables.bell_optimum", bell_ratio >= 0.99, Detail().kv("min_ratio", bell_ratio).str()});
  rep.checks.push_back({"tables.steer_optimum", steer_ratio >= 0.99, Detail().kv("min_ratio", steer_ratio).str()});
  rep.checks.push_back({"tables.steer_at_rows", steer_point <= 0.01, Detail().kv("max_rel_dev", steer_point).str()});
}

}  // namespace

SelftestReport run_selftest(const RunConfig& cfg) {
  cfg.validate();
  SelftestReport rep;
  check_theta(cfg, rep);
  check_states(cfg, rep);
  check_operators(cfg, rep);
  check_oracle(cfg, rep);
  check_lhv(rep);
  check_regions(cfg, rep);
  check_witness(cfg, rep);
  check_tables(cfg, rep);
  return rep;
}

}  // namespace bewit
