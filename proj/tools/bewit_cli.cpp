// bewit: command-line front end for the bound-entangled family rho_xy.
// Results go to stdout (JSON or CSV), provenance and diagnostics to stderr.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bewit/bound_state.hpp"
#include "bewit/errors.hpp"
#include "bewit/format.hpp"
#include "bewit/lhv.hpp"
#include "bewit/operators.hpp"
#include "bewit/reference_tables.hpp"
#include "bewit/regions.hpp"
#include "bewit/selftest.hpp"
#include "bewit/violations.hpp"
#include "bewit/witness_region.hpp"

namespace {

using namespace bewit;

// Signals a failed computation contract (exit code 1).
struct ContractFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One output record, rendered as a JSON object or a two-line CSV.
class Record {
 public:
  Record& num(const std::string& k, double v) {
    json_.add(k, v);
    csv_.emplace_back(k, std::isfinite(v) ? num17(v) : "");
    return *this;
  }
  Record& integer(const std::string& k, long v) {
    json_.add(k, v);
    csv_.emplace_back(k, std::to_string(v));
    return *this;
  }
  Record& flag(const std::string& k, bool v) {
    json_.add(k, v);
    csv_.emplace_back(k, v ? "1" : "0");
    return *this;
  }
  Record& text(const std::string& k, const std::string& v) {
    json_.add(k, v);
    csv_.emplace_back(k, v);
    return *this;
  }
  Record& null(const std::string& k) {
    json_.add_null(k);
    csv_.emplace_back(k, "");
    return *this;
  }
  Record& maybe(const std::string& k, std::optional<double> v) { return v ? num(k, *v) : null(k); }

  void print(const std::string& format) const {
    if (format == "csv") {
      std::string head, row;
      for (std::size_t i = 0; i < csv_.size(); ++i) {
        head += (i ? "," : "") + csv_[i].first;
        row += (i ? "," : "") + csv_[i].second;
      }
      std::cout << head << '\n' << row << '\n';
    } else {
      std::cout << json_.str() << '\n';
    }
  }

 private:
  JsonObject json_;
  std::vector<std::pair<std::string, std::string>> csv_;
};

void write_matrix_csv(const SymMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? "," : "") << num17(m(i, j));
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path);
}

void print_report(const ViolationReport& r, const std::string& format) {
  Record()
      .integer("d", static_cast<long>(r.d))
      .text("kind", to_string(r.kind))
      .num("x", r.x)
      .num("y", r.y)
      .num("a", r.a)
      .maybe("s", r.s)
      .num("value", r.value)
      .integer("restarts", r.trace.restarts)
      .flag("converged", r.trace.converged)
      .print(format);
}

struct PointArgs {
  std::size_t d = 3;
  std::optional<double> x, y, a, s;
  double b_sign = -1.0;
  std::string export_path;
};

void add_point_options(CLI::App* sub, PointArgs& p, bool with_s) {
  sub->add_option("--d", p.d, "local dimension (>= 3)")->required();
  sub->add_option("--x", p.x, "x coordinate; omit x and y to optimize");
  sub->add_option("--y", p.y, "y coordinate");
  sub->add_option("--a", p.a, "|a| of Alice's setting; omit for the optimal direction");
  sub->add_option("--b-sign", p.b_sign, "sign of b (default -1)")->check(CLI::IsMember({-1.0, 1.0}));
  if (with_s) sub->add_option("--s", p.s, "steering parameter in (0,1); omit to optimize");
  sub->add_option("--export-operator", p.export_path, "write the operator matrix as CSV (needs --a)");
}

void require_xy(const PointArgs& p) {
  if (p.x.has_value() != p.y.has_value()) throw CLI::ValidationError("--x and --y must be given together");
  if (!p.x && (p.a || p.s)) throw CLI::ValidationError("--a/--s need a point (--x, --y)");
}

void run_bell(const PointArgs& p, const RunConfig& cfg) {
  require_xy(p);
  if (!p.x) {
    OptimizeOptions opts;
    opts.workers = cfg.workers;
    print_report(maximize_bell(p.d, opts), cfg.format);
    return;
  }
  const StateParams sp = make_params(p.d, *p.x, *p.y);
  ViolationReport r;
  if (p.a) {
    const MeasurementSetting m = MeasurementSetting::from_a(p.d, *p.a, p.b_sign);
    r = evaluate_bell(sp, m);
    if (!p.export_path.empty()) write_matrix_csv(bell_operator(m), p.export_path);
  } else {
    const Direction dir = best_direction(reduced_bell(sp));
    r.d = p.d;
    r.kind = Kind::Bell;
    r.x = sp.x;
    r.y = sp.y;
    r.a = dir.a;
    r.b = dir.b;
    r.value = dir.value;
    if (!p.export_path.empty())
      write_matrix_csv(bell_operator(MeasurementSetting::make(p.d, dir.a, dir.b)), p.export_path);
  }
  r.trace.converged = true;
  print_report(r, cfg.format);
}

void run_steer(const PointArgs& p, const RunConfig& cfg) {
  require_xy(p);
  if (!p.x) {
    OptimizeOptions opts;
    opts.workers = cfg.workers;
    print_report(maximize_steering(p.d, opts), cfg.format);
    return;
  }
  const StateParams sp = make_params(p.d, *p.x, *p.y);
  double s;
  MeasurementSetting m;
  if (p.s) {
    s = *p.s;
    if (!(s > 0.0 && s < 1.0)) throw CLI::ValidationError("--s must lie in (0, 1)");
  } else {
    s = best_steering_at(sp).s;
  }
  if (p.a) {
    m = MeasurementSetting::from_a(p.d, *p.a, p.b_sign);
  } else {
    const Direction dir = best_direction(reduced_steering(sp, s));
    m = MeasurementSetting::make(p.d, dir.a, dir.b);
  }
  ViolationReport r = evaluate_steering(sp, SteeringSetting::make(m, s));
  r.trace.converged = true;
  if (!p.export_path.empty()) write_matrix_csv(steering_operator(SteeringSetting::make(m, s)), p.export_path);
  print_report(r, cfg.format);
}

struct WitnessArgs {
  std::size_t d = 3;
  std::optional<double> t, alpha, beta, a;
  double b_sign = -1.0;
  std::string export_path;
};

void run_witness(const WitnessArgs& w, const RunConfig& cfg) {
  double alpha, beta;
  if (w.t) {
    if (w.alpha || w.beta) throw CLI::ValidationError("give either --t or --alpha/--beta");
    const EnvelopePoint e = envelope(w.d, *w.t);
    alpha = e.alpha;
    beta = e.beta;
  } else {
    if (!w.alpha || !w.beta) throw CLI::ValidationError("give --t or both --alpha and --beta");
    alpha = *w.alpha;
    beta = *w.beta;
  }
  const MeasurementSetting m =
      w.a ? MeasurementSetting::from_a(w.d, *w.a, w.b_sign) : psi_detection_setting(w.d);
  const WitnessSetting ws{m, alpha, beta};
  const SymMatrix op = witness_operator(ws);
  SeparabilityOptions so;
  so.seed = cfg.seed;
  so.workers = cfg.workers;
  const SeparabilityResult sep = separability_check(op, w.d, so);
  if (!w.export_path.empty()) write_matrix_csv(op, w.export_path);
  Record()
      .num("alpha", alpha)
      .num("beta", beta)
      .flag("in_J", in_J(w.d, alpha, beta))
      .num("sep_max", sep.max_value)
      .flag("detects_Psi", psi_expectation(ws) > 0.0)
      .print(cfg.format);
}

void run_state(std::size_t d, double x, double y, const std::string& csv_out, const RunConfig& cfg) {
  const StateParams p = make_params(d, x, y);
  const DomainMargins dm = domain_margins(d, x, y);
  Record rec;
  rec.integer("d", static_cast<long>(d))
      .num("x", p.x)
      .num("y", p.y)
      .num("z", p.z)
      .num("ztilde", p.ztilde)
      .num("delta", p.delta)
      .num("R", p.bigR)
      .num("margin_unit_disk", dm.unit_disk)
      .num("margin_delta", dm.delta);
  if (d <= kMaxDenseDim) {
    const StateBundle b = build_state(p);
    rec.num("trace", b.rho.trace());
    if (!csv_out.empty()) write_matrix_csv(b.rho, csv_out);
  } else if (!csv_out.empty()) {
    throw CLI::ValidationError("dense export is limited to d <= " + std::to_string(kMaxDenseDim));
  }
  rec.print(cfg.format);
}

void run_ppt(std::size_t d, double x, double y, const RunConfig& cfg) {
  const StateBundle b = build_state(make_params(d, x, y));
  JacobiOptions jo;
  const PptCheck c = check_ppt(b, jo);
  const double min_eig = min_eigenvalue(b.rho, jo);
  const bool ok = c.min_eig_pt >= -cfg.eig_tol && c.pt_residual <= cfg.sym_tol &&
                  std::abs(b.rho.trace() - 1.0) <= cfg.sym_tol;
  Record()
      .integer("d", static_cast<long>(d))
      .num("x", x)
      .num("y", y)
      .num("trace", b.rho.trace())
      .num("min_eig", min_eig)
      .num("min_eig_pt", c.min_eig_pt)
      .num("pt_residual", c.pt_residual)
      .flag("ppt", ok)
      .print(cfg.format);
  if (!ok) throw ContractFailure("PPT contract violated");
}

void run_regions(std::size_t d, int grid, const std::string& out_path, std::optional<double> x,
                 std::optional<double> y, const RunConfig& cfg) {
  if (x.has_value() != y.has_value()) throw CLI::ValidationError("--x and --y must be given together");
  if (x) {
    const RegionLabel l = classify(d, *x, *y);
    Record()
        .integer("d", static_cast<long>(d))
        .num("x", *x)
        .num("y", *y)
        .flag("in_D", l.in_D)
        .flag("in_DNx", l.in_DNx)
        .flag("in_DNy", l.in_DNy)
        .flag("in_DSx", l.in_DSx)
        .flag("in_DSy", l.in_DSy)
        .flag("in_DE", l.in_DE)
        .num("margin_D", l.margin_D)
        .num("margin_DNx", l.margin_DNx)
        .num("margin_DNy", l.margin_DNy)
        .num("margin_DSx", l.margin_DSx)
        .num("margin_DSy", l.margin_DSy)
        .num("margin_DE", l.margin_DE)
        .print(cfg.format);
    return;
  }
  RegionCounts c;
  if (out_path.empty()) {
    c = region_scan(d, grid, std::cout, cfg.workers);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    c = region_scan(d, grid, out, cfg.workers);
  }
  std::cerr << "counts " << JsonObject()
                                .add("in_D", c.in_D)
                                .add("in_DNx", c.in_DNx)
                                .add("in_DNy", c.in_DNy)
                                .add("in_DSx", c.in_DSx)
                                .add("in_DSy", c.in_DSy)
                                .add("in_DE", c.in_DE)
                                .str()
            << '\n';
}

void run_tables(const std::string& which, std::size_t dmin, std::size_t dmax, const RunConfig& cfg) {
  if (dmin < 3 || dmax < dmin) throw CLI::ValidationError("need 3 <= dmin <= dmax");
  OptimizeOptions opts;
  opts.workers = cfg.workers;
  const bool bell = which == "bell";
  std::cout << (bell ? "d,x,y,a,value,table_value,rel_diff\n" : "d,x,y,s,a,value,table_value,rel_diff\n");
  for (std::size_t d = dmin; d <= dmax; ++d) {
    const ViolationReport r = bell ? maximize_bell(d, opts) : maximize_steering(d, opts);
    std::optional<double> ref;
    if (bell) {
      if (const BellRow* row = find_bell_row(d)) ref = row->value;
    } else if (const SteeringRow* row = find_steering_row(d)) {
      ref = row->value;
    }
    std::cout << d << ',' << num17(r.x) << ',' << num17(r.y) << ',';
    if (!bell) std::cout << num17(*r.s) << ',';
    std::cout << num17(r.a) << ',' << num17(r.value) << ',' << (ref ? num17(*ref) : "") << ','
              << (ref ? num17(r.value / *ref - 1.0) : "") << '\n';
  }
}

void run_asymptotics(std::size_t d, bool optimize, const RunConfig& cfg) {
  const AsymptoticLaws law = asymptotic_laws(d);
  Record rec;
  rec.integer("d", static_cast<long>(d))
      .num("bell_x", law.bell.x)
      .num("bell_y", law.bell.y)
      .num("bell_a", law.bell.a)
      .num("bell_value", law.bell.value)
      .num("steer_x", law.steering.x)
      .num("steer_y", law.steering.y)
      .num("steer_s", law.steering.s)
      .num("steer_a", law.steering.a)
      .num("steer_value", law.steering.value);
  if (optimize) {
    OptimizeOptions opts;
    opts.workers = cfg.workers;
    const ViolationReport b = maximize_bell(d, opts);
    const ViolationReport s = maximize_steering(d, opts);
    rec.num("opt_bell_x", b.x)
        .num("opt_bell_y", b.y)
        .num("opt_bell_value", b.value)
        .num("bell_ratio", b.value / law.bell.value)
        .num("opt_steer_x", s.x)
        .num("opt_steer_y", s.y)
        .num("opt_steer_s", *s.s)
        .num("opt_steer_value", s.value)
        .num("steer_ratio", s.value / law.steering.value);
  }
  rec.print(cfg.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for a family of PPT bound-entangled two-qudit states"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "random seed")->envname("BEWIT_SEED");
  app.add_option("--workers", cfg.workers, "worker threads")->envname("BEWIT_WORKERS")->check(CLI::PositiveNumber);
  app.add_option("--eig-tol", cfg.eig_tol, "eigenvalue-level tolerance")->envname("BEWIT_EIG_TOL");
  app.add_option("--sym-tol", cfg.sym_tol, "entrywise matrix tolerance")->envname("BEWIT_SYM_TOL");
  app.add_option("--dead-zone", cfg.dead_zone, "determinant dead zone")->envname("BEWIT_DEAD_ZONE");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  std::size_t d = 3;
  double x = 0.0, y = 0.0;
  std::string out_path;

  auto* state = app.add_subcommand("state", "derived parameters of rho_xy, optional matrix CSV");
  state->add_option("--d", d, "local dimension (>= 3)")->required();
  state->add_option("--x", x, "x coordinate")->required();
  state->add_option("--y", y, "y coordinate")->required();
  state->add_option("--out", out_path, "write rho as CSV");

  auto* ppt = app.add_subcommand("ppt", "trace, positivity and partial-transpose checks");
  ppt->add_option("--d", d, "local dimension (>= 3)")->required();
  ppt->add_option("--x", x, "x coordinate")->required();
  ppt->add_option("--y", y, "y coordinate")->required();

  PointArgs bell_args, steer_args;
  auto* bell = app.add_subcommand("bell", "Bell violation at a point or optimized");
  add_point_options(bell, bell_args, false);
  auto* steer = app.add_subcommand("steer", "steering violation at a point or optimized");
  add_point_options(steer, steer_args, true);

  WitnessArgs wit;
  auto* witness = app.add_subcommand("witness", "witness validity and detection");
  witness->add_option("--d", wit.d, "local dimension (>= 3)")->required();
  witness->add_option("--t", wit.t, "envelope parameter in [1, t1]");
  witness->add_option("--alpha", wit.alpha, "witness alpha (with --beta, instead of --t)");
  witness->add_option("--beta", wit.beta, "witness beta");
  witness->add_option("--a", wit.a, "|a| of the setting (default sqrt((d-1)/d), b < 0)");
  witness->add_option("--b-sign", wit.b_sign, "sign of b (default -1)")->check(CLI::IsMember({-1.0, 1.0}));
  witness->add_option("--export-operator", wit.export_path, "write the witness matrix as CSV");

  int grid = 200;
  std::optional<double> rx, ry;
  auto* regions = app.add_subcommand("regions", "region scan as CSV, or classify one point");
  regions->add_option("--d", d, "local dimension (>= 3)")->required();
  regions->add_option("--grid", grid, "cells per axis for the scan")->check(CLI::Range(2, 100000));
  regions->add_option("--out", out_path, "CSV path (default stdout)");
  regions->add_option("--x", rx, "classify this point instead of scanning");
  regions->add_option("--y", ry, "y of the point to classify");

  std::string which = "bell";
  std::size_t dmin = 3, dmax = 9;
  auto* tables = app.add_subcommand("tables", "optimized violations per dimension as CSV");
  tables->add_option("--which", which, "violation kind")->check(CLI::IsMember({"bell", "steer"}));
  tables->add_option("--dmin", dmin, "smallest dimension");
  tables->add_option("--dmax", dmax, "largest dimension");

  auto* lhv = app.add_subcommand("lhv", "classical bound by strategy enumeration");
  lhv->add_option("--d", d, "local dimension (>= 3)")->required()->check(CLI::Range(3, 12));

  bool optimize = false;
  auto* asym = app.add_subcommand("asymptotics", "large-d laws, optionally against the optimizer");
  asym->add_option("--d", d, "local dimension (>= 3)")->required();
  asym->add_flag("--optimize", optimize, "also run the optimizers at this d");

  app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return 2;
  }
  std::cerr << "config " << cfg.describe() << '\n';

  try {
    if (*state) run_state(d, x, y, out_path, cfg);
    else if (*ppt) run_ppt(d, x, y, cfg);
    else if (*bell) run_bell(bell_args, cfg);
    else if (*steer) run_steer(steer_args, cfg);
    else if (*witness) run_witness(wit, cfg);
    else if (*regions) run_regions(d, grid, out_path, rx, ry, cfg);
    else if (*tables) run_tables(which, dmin, dmax, cfg);
    else if (*lhv) {
      const double bound = lhv_bound(d);
      Record().num("bound", bound).print(cfg.format);
      if (bound != 0.0) throw ContractFailure("classical bound is not 0");
    } else if (*asym) run_asymptotics(d, optimize, cfg);
    else {
      const SelftestReport rep = run_selftest(cfg);
      std::cout << rep.text();
      if (rep.failures() > 0) throw ContractFailure(std::to_string(rep.failures()) + " selftest checks failed");
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const OutsideDomain& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
