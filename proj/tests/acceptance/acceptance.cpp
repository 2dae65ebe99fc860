// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [criterion ...]   (default: all of 1..10)

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bewit/bound_state.hpp"
#include "bewit/format.hpp"
#include "bewit/lhv.hpp"
#include "bewit/operators.hpp"
#include "bewit/optimize.hpp"
#include "bewit/reference_tables.hpp"
#include "bewit/regions.hpp"
#include "bewit/violations.hpp"
#include "bewit/witness_region.hpp"

#ifndef BEWIT_CLI_PATH
#error "BEWIT_CLI_PATH must point at the bewit executable"
#endif

namespace {

using namespace bewit;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream info;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      info << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Best Bell value for a in [a_lo, a_hi] with b = -sqrt(1 - a^2).
double best_in_a_interval(const ReducedForm& rf, double a_lo, double a_hi) {
  const auto neg = [&](double a) { return -expectation_reduced(rf, a, -std::sqrt(1.0 - a * a)); };
  return -golden_section_min(neg, a_lo, std::min(a_hi, 1.0), 1e-14).value;
}

void criterion1(Outcome& o) {
  double worst_interval = 0.0, worst_ratio = 1e300, worst_time = 0.0;
  for (const BellRow& row : kBellRows) {
    const auto t0 = Clock::now();
    const StateParams p = make_params(row.d, row.x, row.y);
    const ReducedForm rf = reduced_bell(p);
    const double literal = evaluate_bell(p, MeasurementSetting::from_a(row.d, row.a)).value;
    const double interval = best_in_a_interval(rf, row.a - 5e-4, row.a + 5e-4);
    const ViolationReport opt = maximize_bell(row.d);
    const double dt = seconds_since(t0);
    const double dev = std::abs(interval / row.value - 1.0);
    worst_interval = std::max(worst_interval, dev);
    worst_ratio = std::min(worst_ratio, opt.value / row.value);
    worst_time = std::max(worst_time, dt);
    o.info << " d=" << row.d << ":at_row=" << g(interval) << "(literal_a=" << g(literal)
           << ")/opt=" << g(opt.value) << "/table=" << g(row.value);
    o.require(dev <= 0.01, "d=" + std::to_string(row.d) + " point value off by " + g(dev));
    o.require(opt.value >= 0.99 * row.value, "d=" + std::to_string(row.d) + " optimizer below 0.99x");
    o.require(dt < 60.0, "d=" + std::to_string(row.d) + " slower than 1 min");
  }
  o.info << " | max_rel_dev=" << g(worst_interval) << " min_opt_ratio=" << g(worst_ratio)
         << " max_seconds=" << g(worst_time);
}

void criterion2(Outcome& o) {
  double worst_point = 0.0, worst_ratio = 1e300;
  for (const SteeringRow& row : kSteeringRows) {
    const StateParams p = make_params(row.d, row.x, row.y);
    const SteeringSetting st = SteeringSetting::make(MeasurementSetting::from_a(row.d, row.a), row.s);
    const double at_row = evaluate_steering(p, st).value;
    const ViolationReport opt = maximize_steering(row.d);
    const double dev = std::abs(at_row / row.value - 1.0);
    worst_point = std::max(worst_point, dev);
    worst_ratio = std::min(worst_ratio, opt.value / row.value);
    o.info << " d=" << row.d << ":at_row=" << g(at_row) << "/opt=" << g(opt.value) << "/table=" << g(row.value);
    o.require(dev <= 0.01, "d=" + std::to_string(row.d) + " point value off by " + g(dev));
    o.require(opt.value >= 0.99 * row.value, "d=" + std::to_string(row.d) + " optimizer below 0.99x");
  }
  o.info << " | max_rel_dev=" << g(worst_point) << " min_opt_ratio=" << g(worst_ratio);
}

// Criteria 3 and 4 share the sampled states.
void criteria3and4(Outcome& o3, Outcome& o4) {
  double tr = 0.0, psd = 0.0, pt_res = 0.0, pt_eig = 0.0, spec = 0.0;
  for (std::size_t d = 3; d <= 8; ++d)
    for (const PlanePoint& pt : sample_domain(d, 200, 3000 + d)) {
      const StateBundle b = build_state(make_params(d, pt.x, pt.y));
      const PptCheck c = check_ppt(b);
      const std::vector<double> ev = sym_eigenvalues(b.rho);
      const std::vector<double> want = expected_spectrum(b.params);
      for (std::size_t i = 0; i < ev.size(); ++i) spec = std::max(spec, std::abs(ev[i] - want[i]));
      tr = std::max(tr, std::abs(b.rho.trace() - 1.0));
      psd = std::min(psd, ev.front());
      pt_res = std::max(pt_res, c.pt_residual);
      pt_eig = std::min(pt_eig, c.min_eig_pt);
    }
  o3.require(tr <= 1e-12, "trace");
  o3.require(psd >= -1e-12, "psd");
  o3.require(pt_res <= 1e-12, "pt residual");
  o3.require(pt_eig >= -1e-10, "pt eigenvalue");
  o3.info << " samples=1200 max|tr-1|=" << g(tr) << " min_eig=" << g(psd) << " max_pt_residual=" << g(pt_res)
          << " min_eig_pt=" << g(pt_eig);
  o4.require(spec <= 1e-10, "spectrum");
  o4.info << " samples=1200 max_dev=" << g(spec);
}

void criterion5(Outcome& o) {
  std::mt19937_64 gen(5005);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst[3] = {0.0, 0.0, 0.0};
  for (std::size_t d = 3; d <= 8; ++d)
    for (const PlanePoint& pt : sample_domain(d, 100, 5000 + d)) {
      const StateBundle b = build_state(make_params(d, pt.x, pt.y));
      const MeasurementSetting m = MeasurementSetting::from_a(d, unit(gen), unit(gen) < 0.5 ? -1.0 : 1.0);
      const double s = 0.01 + 0.98 * unit(gen);
      const WitnessCoefficients w{unit(gen), 4.0 * unit(gen)};
      worst[0] = std::max(worst[0], std::abs(expectation_direct(bell_operator(m), b.rho) -
                                             expectation_reduced(reduced_bell(b.params), m)));
      worst[1] = std::max(worst[1],
                          std::abs(expectation_direct(steering_operator(SteeringSetting::make(m, s)), b.rho) -
                                   expectation_reduced(reduced_steering(b.params, s), m)));
      worst[2] = std::max(worst[2], std::abs(expectation_direct(witness_operator({m, w.alpha, w.beta}), b.rho) -
                                             expectation_reduced(reduced_witness(b.params, w), m)));
    }
  o.require(worst[0] <= 1e-10 && worst[1] <= 1e-10 && worst[2] <= 1e-10, "oracle mismatch");
  o.info << " draws_per_kind_per_d=100 N=" << g(worst[0]) << " S=" << g(worst[1]) << " E=" << g(worst[2]);
}

void criterion6(Outcome& o) {
  for (std::size_t d = 3; d <= 7; ++d) {
    const double b = lhv_bound(d);
    o.require(b == 0.0, "bound d=" + std::to_string(d));
    o.require(hardy_check(d), "hardy d=" + std::to_string(d));
    o.require(hardy_relaxed_satisfiable(d), "negative control d=" + std::to_string(d));
    o.info << " d=" << d << ":bound=" << num17(b);
  }
}

void criterion7(Outcome& o) {
  constexpr double kDeadZone = 1e-14;
  long mis[3] = {0, 0, 0}, skipped = 0, chain = 0, curve_out = 0;
  for (std::size_t d = 3; d <= 6; ++d) {
    for (const PlanePoint& pt : sample_domain(d, 10000, 7000 + d)) {
      const RegionLabel l = classify(d, pt.x, pt.y);
      const double dn = det_bell(d, pt.x, pt.y);
      const double ds = steer_min_det(d, pt.x, pt.y);
      const double de = witness_min_det(d, pt.x, pt.y);
      if (std::abs(dn) > kDeadZone) mis[0] += (dn < 0.0) != l.in_DNx; else ++skipped;
      if (std::abs(ds) > kDeadZone) mis[1] += (ds < 0.0 && pt.x > pt.y) != l.in_DSx; else ++skipped;
      if (std::abs(de) > kDeadZone) mis[2] += (de < 0.0) != l.in_DE; else ++skipped;
      if ((l.in_DNx && !l.in_DSx) || (l.in_DSx && !l.in_DE)) ++chain;
    }
    for (const PlanePoint& pt : blue_curve(d, 100)) curve_out += !classify(d, pt.x, pt.y).in_DNx;
  }
  o.require(mis[0] == 0 && mis[1] == 0 && mis[2] == 0, "det-sign mismatches");
  o.require(chain == 0, "containment");
  o.require(curve_out == 0, "blue curve");
  o.info << " points=40000 mismatches(N,S,E)=" << mis[0] << "," << mis[1] << "," << mis[2]
         << " dead_zone_skips=" << skipped << " containment_violations=" << chain
         << " blue_curve_outside=" << curve_out << "/400";
}

void criterion8(Outcome& o) {
  double g1 = 0.0, a1 = 0.0, fd = 0.0;
  for (std::size_t d = 3; d <= 50; ++d) g1 = std::max(g1, std::abs(gamma(d, 1.0) - 1.0));
  for (std::size_t d = 3; d <= 10; ++d) {
    const double t1 = t_one(d);
    a1 = std::max(a1, std::abs(envelope(d, t1).alpha));
    for (int k = 1; k < 1000; ++k) {
      const double t = 1.0 + (t1 - 1.0) * k / 1000.0;
      const EnvelopePoint e = envelope(d, t);
      const WitnessCoefficients f = envelope_fd(d, t);
      fd = std::max({fd, std::abs(e.alpha - f.alpha), std::abs(e.beta - f.beta)});
    }
  }
  double sep_lo = 0.0, sep_hi = 0.0, psi_min = 1e300, outside_min = 1e300;
  for (std::size_t d = 3; d <= 6; ++d) {
    const double t1 = t_one(d);
    const MeasurementSetting m = psi_detection_setting(d);
    for (int k = 1; k <= 20; ++k) {
      const EnvelopePoint e = envelope(d, 1.0 + (t1 - 1.0) * k / 20.0);
      const WitnessSetting w{m, e.alpha, e.beta};
      const double v = separability_check(witness_operator(w), d).max_value;
      sep_lo = std::min(sep_lo, v);
      sep_hi = std::max(sep_hi, v);
      psi_min = std::min(psi_min, psi_expectation(w));
    }
    const EnvelopePoint e = envelope(d, 1.0 + 0.5 * (t1 - 1.0));
    outside_min = std::min(outside_min,
                           separability_check(witness_operator({m, e.alpha, e.beta - 1e-3}), d).max_value);
  }
  o.require(g1 <= 1e-14, "gamma(1)");
  o.require(a1 <= 1e-12, "alpha(t1)");
  o.require(fd <= 1e-6, "finite-difference envelope");
  o.require(sep_lo >= -1e-9 && sep_hi <= 1e-9, "envelope witness product-state maximum");
  o.require(psi_min > 0.0, "Psi detection");
  o.require(outside_min > 0.0, "negative control");
  o.info << " max|gamma(1)-1|=" << g(g1) << " max|alpha(t1)|=" << g(a1) << " max_fd_dev=" << g(fd)
         << " sep_range=[" << g(sep_lo) << "," << g(sep_hi) << "] min_psi_expectation=" << g(psi_min)
         << " outside_J_min_sep=" << g(outside_min);
}

void criterion9(Outcome& o) {
  constexpr std::size_t d = 1000;
  const auto t0 = Clock::now();
  const ViolationReport b = maximize_bell(d);
  const ViolationReport s = maximize_steering(d);
  const double dt = seconds_since(t0);
  const AsymptoticLaws law = asymptotic_laws(d);
  const double rb = b.value / law.bell.value, rs = s.value / law.steering.value;
  const double bx = b.x / law.bell.x, by = b.y / law.bell.y;
  const double sx = s.x / law.steering.x, sy = s.y / law.steering.y;
  o.require(std::abs(rb - 1.0) <= 0.20, "Bell value vs (8/729) d^-4");
  o.require(std::abs(rs - 1.0) <= 0.10, "steering value vs 1/(32 d^2)");
  o.require(std::abs(bx - 1.0) <= 0.15 && std::abs(by - 1.0) <= 0.15, "Bell (x,y)");
  o.require(std::abs(sx - 1.0) <= 0.15 && std::abs(sy - 1.0) <= 0.15, "steering (x,y)");
  o.require(dt < 30.0, "runtime");
  o.info << " d=1000 bell_ratio=" << g(rb) << " bell_xy_ratio=(" << g(bx) << "," << g(by) << ")"
         << " steer_ratio=" << g(rs) << " steer_xy_ratio=(" << g(sx) << "," << g(sy) << ") steer_s=" << g(*s.s)
         << " seconds=" << g(dt);
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

void criterion10(Outcome& o) {
  const std::string cli = BEWIT_CLI_PATH;
  int st1 = 0, st4 = 0;
  const std::string r1 = capture(cli + " --seed 7 --workers 1 selftest 2>/dev/null", st1);
  const std::string r4 = capture(cli + " --seed 7 --workers 4 selftest 2>/dev/null", st4);
  o.require(st1 == 0 && st4 == 0, "selftest exit status");
  o.require(!r1.empty() && r1 == r4, "reports differ");
  o.info << " bytes=" << r1.size() << " identical=" << (r1 == r4 ? "yes" : "no");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  if (wanted.empty())
    for (int i = 1; i <= 10; ++i) wanted.insert(i);

  const char* titles[] = {"",
                          "Table I reproduction",
                          "Table II reproduction",
                          "PPT property",
                          "spectrum property",
                          "oracle equivalence",
                          "LHV bound and Hardy argument",
                          "region consistency",
                          "witness region",
                          "asymptotics at d=1000",
                          "determinism across worker counts"};
  Outcome out[11];
  const std::function<void()> runs[11] = {
      [] {},
      [&] { criterion1(out[1]); },
      [&] { criterion2(out[2]); },
      [&] { criteria3and4(out[3], out[4]); },
      [] {},
      [&] { criterion5(out[5]); },
      [&] { criterion6(out[6]); },
      [&] { criterion7(out[7]); },
      [&] { criterion8(out[8]); },
      [&] { criterion9(out[9]); },
      [&] { criterion10(out[10]); },
  };

  int failures = 0;
  bool states_done = false;
  for (int c : wanted) {
    if (c < 1 || c > 10) continue;
    try {
      if (c == 3 || c == 4) {
        if (!states_done) runs[3]();
        states_done = true;
      } else {
        runs[c]();
      }
    } catch (const std::exception& e) {
      out[c].require(false, std::string("exception: ") + e.what());
    }
    failures += !out[c].pass;
    std::cout << (out[c].pass ? "PASS" : "FAIL") << " criterion " << c << ": " << titles[c] << " |"
              << out[c].info.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
