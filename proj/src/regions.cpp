#include "bewit/regions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "bewit/bound_state.hpp"
#include "bewit/format.hpp"
#include "bewit/parallel.hpp"
#include "bewit/violations.hpp"
#include "bewit/witness_region.hpp"

namespace bewit {

namespace {

double zt_of(std::size_t d, double x, double y) {
  return std::sqrt(std::max(0.0, (static_cast<double>(d) - 2.0) * (1.0 - x * x - y * y)));
}

// Bell condition for D_N^x: rhs - lhs.
double bell_margin(std::size_t d, double x, double y, const RegionBounds& b) {
  const double d1 = static_cast<double>(d) - 1.0;
  const double zt = zt_of(d, x, y);
  const double num = y * zt + y * y - x * x / d1;
  const double lhs = num * num / (x * x + d1 * y * y);
  const double rhs = (x - b.d_plus * y) * (x + b.d_minus * y) / (d1 * d1);
  return rhs - lhs;
}

// Steering condition for D_S^x: (z~ + 2y) - ((d-1)x + y)(1 + sqrt(y/x))/2.
double steer_margin(std::size_t d, double x, double y) {
  const double d1 = static_cast<double>(d) - 1.0;
  return zt_of(d, x, y) + 2.0 * y - (d1 * x + y) / 2.0 * (1.0 + std::sqrt(y / x));
}

double witness_margin(std::size_t d, double x, double y) {
  const double dd = static_cast<double>(d);
  const double z = std::sqrt(std::max(0.0, 1.0 - x * x - y * y));
  const double r = std::sqrt(x / y);
  const double lo = (dd - 2.0) / (dd - 1.0), hi = (dd - 1.0) / (dd - 2.0);
  const double den = 2.0 * (dd - 1.0) * (dd - 2.0);
  double rhs;
  if (r < lo)
    rhs = ((dd - 1.0) * (dd - 1.0) * x + (dd - 2.0) * (dd - 2.0) * y) / den;
  else if (r <= hi)
    rhs = std::sqrt(x * y);
  else
    rhs = ((dd - 1.0) * (dd - 1.0) * y + (dd - 2.0) * (dd - 2.0) * x) / den;
  return z / std::sqrt(dd - 2.0) - rhs;
}

}  // namespace

RegionBounds bounds(std::size_t d) {
  if (d < 3) throw std::invalid_argument("bounds: d must be >= 3");
  const double dd = static_cast<double>(d);
  RegionBounds b;
  b.x_n = std::sqrt((dd - 2.0) / (dd * dd - dd - 1.0));
  b.x_s = 2.0 * std::sqrt((dd - 2.0) / (dd * dd + 2.0 * dd - 7.0));
  b.x_e = 2.0 * (dd - 1.0) / std::sqrt(dd * dd * dd - 2.0 * dd * dd + 4.0 * dd - 4.0);
  const double root = dd * std::sqrt((dd - 1.0) * (dd - 2.0));
  b.d_plus = root + (dd - 1.0) * (dd - 1.0);
  b.d_minus = root - (dd - 1.0) * (dd - 1.0);
  return b;
}

RegionLabel classify(std::size_t d, double x, double y) {
  const RegionBounds b = bounds(d);
  RegionLabel lab;
  const DomainMargins dm = domain_margins(d, x, y);
  lab.margin_D = std::min({dm.x, dm.y, dm.unit_disk, dm.delta});
  lab.in_D = dm.inside();
  if (!(x > 0.0 && y > 0.0 && dm.unit_disk >= 0.0)) return lab;

  lab.margin_DNx = bell_margin(d, x, y, b);
  lab.margin_DNy = bell_margin(d, y, x, b);
  lab.margin_DSx = steer_margin(d, x, y);
  lab.margin_DSy = steer_margin(d, y, x);
  lab.margin_DE = witness_margin(d, x, y);
  if (!lab.in_D) return lab;

  lab.in_DNx = x > b.d_plus * y && lab.margin_DNx > 0.0;
  lab.in_DNy = y > b.d_plus * x && lab.margin_DNy > 0.0;
  lab.in_DSx = x > y && lab.margin_DSx > 0.0;
  lab.in_DSy = y > x && lab.margin_DSy > 0.0;
  lab.in_DE = lab.margin_DE > 0.0;
  return lab;
}

double det_bell(std::size_t d, double x, double y) {
  return reduced_bell(derive_params(d, x, y)).m.det();
}

double steer_min_det(std::size_t d, double x, double y, double eps) {
  const StateParams p = derive_params(d, x, y);
  return reduced_steering(p, steering_s_star(p, eps)).m.det();
}

double witness_min_det(std::size_t d, double x, double y) {
  return std::min(min_det_over_envelope(d, x, y).det, min_det_over_envelope(d, y, x).det);
}

std::vector<PlanePoint> sample_domain(std::size_t d, int n, std::uint64_t seed) {
  bounds(d);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PlanePoint> out;
  out.reserve(static_cast<std::size_t>(std::max(0, n)));
  while (static_cast<int>(out.size()) < n) {
    const double x = unit(gen), y = unit(gen);
    if (domain_margins(d, x, y).inside()) out.push_back({x, y});
  }
  return out;
}

double blue_curve_end(std::size_t d) {
  const RegionBounds b = bounds(d);
  const double dd = static_cast<double>(d);
  const double k = b.d_plus * b.d_plus / (dd - 1.0) - 1.0;
  return std::sqrt((dd - 2.0) / (k * k + (dd - 2.0) * (b.d_plus * b.d_plus + 1.0)));
}

std::vector<PlanePoint> blue_curve(std::size_t d, int n) {
  if (n < 1) throw std::invalid_argument("blue_curve: n must be >= 1");
  const double d1 = static_cast<double>(d) - 1.0;
  const double y_end = blue_curve_end(d);
  std::vector<PlanePoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double y = y_end * k / (n + 1);
    // x^2/(d-1) - y z~(x) - y^2 increases with x.
    const auto g = [&](double x) { return x * x / d1 - y * zt_of(d, x, y) - y * y; };
    double lo = 0.0, hi = std::sqrt(1.0 - y * y);
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (g(mid) < 0.0 ? lo : hi) = mid;
    }
    out.push_back({0.5 * (lo + hi), y});
  }
  return out;
}

RegionCounts region_scan(std::size_t d, int grid_n, std::ostream& out, int workers) {
  if (grid_n < 2) throw std::invalid_argument("region_scan: grid must be >= 2");
  bounds(d);
  const auto n = static_cast<std::size_t>(grid_n);
  std::vector<std::string> rows(n);
  std::vector<RegionCounts> counts(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const double x = (static_cast<double>(i) + 0.5) / grid_n;
    std::string& buf = rows[i];
    RegionCounts& c = counts[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double y = (static_cast<double>(j) + 0.5) / grid_n;
      const RegionLabel l = classify(d, x, y);
      if (!l.in_D) continue;
      ++c.in_D;
      c.in_DNx += l.in_DNx;
      c.in_DNy += l.in_DNy;
      c.in_DSx += l.in_DSx;
      c.in_DSy += l.in_DSy;
      c.in_DE += l.in_DE;
      buf += num17(x) + ',' + num17(y) + ",1," + (l.in_DNx ? '1' : '0') + ',' +
             (l.in_DNy ? '1' : '0') + ',' + (l.in_DSx ? '1' : '0') + ',' + (l.in_DSy ? '1' : '0') +
             ',' + (l.in_DE ? '1' : '0') + '\n';
    }
  });
  out << "x,y,in_D,in_DNx,in_DNy,in_DSx,in_DSy,in_DE\n";
  RegionCounts total;
  for (std::size_t i = 0; i < n; ++i) {
    out << rows[i];
    total.in_D += counts[i].in_D;
    total.in_DNx += counts[i].in_DNx;
    total.in_DNy += counts[i].in_DNy;
    total.in_DSx += counts[i].in_DSx;
    total.in_DSy += counts[i].in_DSy;
    total.in_DE += counts[i].in_DE;
  }
  out.flush();
  if (!out) throw std::runtime_error("region_scan: failed writing output");
  return total;
}

}  // namespace bewit
