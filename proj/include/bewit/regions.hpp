#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

namespace bewit {

struct RegionBounds {
  double x_n = 0.0;      // sqrt((d-2)/(d^2-d-1))
  double x_s = 0.0;      // 2 sqrt((d-2)/(d^2+2d-7))
  double x_e = 0.0;      // 2(d-1)/sqrt(d^3-2d^2+4d-4)
  double d_plus = 0.0;   // d sqrt((d-1)(d-2)) + (d-1)^2
  double d_minus = 0.0;  // d sqrt((d-1)(d-2)) - (d-1)^2
};

/// Throws std::invalid_argument for d < 3.
RegionBounds bounds(std::size_t d);

/// Membership flags with the signed slack of each defining inequality
/// (positive = satisfied). The flags are strict; margins let callers see how
/// close a point sits to a boundary.
struct RegionLabel {
  bool in_D = false;
  bool in_DNx = false;
  bool in_DNy = false;
  bool in_DSx = false;
  bool in_DSy = false;
  bool in_DE = false;

  double margin_D = 0.0;    // min(x, y, 1 - x^2 - y^2, delta)
  double margin_DNx = 0.0;  // rhs - lhs of the Bell condition
  double margin_DNy = 0.0;
  double margin_DSx = 0.0;  // z~ + 2y - ((d-1)x + y)(1 + sqrt(y/x))/2
  double margin_DSy = 0.0;
  double margin_DE = 0.0;   // z/sqrt(d-2) - piecewise right side
};

/// Points outside D get every flag false. D_N^x additionally requires
/// x > d+ y; D_S^x requires x > y. The y-variants swap x and y.
RegionLabel classify(std::size_t d, double x, double y);

/// det M_N at (x, y).
double det_bell(std::size_t d, double x, double y);
/// min over s in [eps, 1-eps] of det M_S, attained at the clipped s*.
double steer_min_det(std::size_t d, double x, double y, double eps = 1e-9);
/// min(min_t det M_E at (x, y), min_t det M_E at (y, x)).
double witness_min_det(std::size_t d, double x, double y);

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

/// n points drawn uniformly from D by rejection on (0,1)^2 with a seeded
/// std::mt19937_64.
std::vector<PlanePoint> sample_domain(std::size_t d, int n, std::uint64_t seed);

/// Samples of y z~ + y^2 = x^2/(d-1), 0 < y < x/d+, at y_k = y_end k/(n+1)
/// (k = 1..n), with x found by bisection. y_end is where the curve meets
/// x = d+ y.
std::vector<PlanePoint> blue_curve(std::size_t d, int n);

/// Point y_end above.
double blue_curve_end(std::size_t d);

struct RegionCounts {
  long in_D = 0;
  long in_DNx = 0;
  long in_DNy = 0;
  long in_DSx = 0;
  long in_DSy = 0;
  long in_DE = 0;
};

/// Cell centres ((i+0.5)/n, (j+0.5)/n), x outer. Writes the header
/// x,y,in_D,in_DNx,in_DNy,in_DSx,in_DSy,in_DE and one row per point of D.
/// Throws std::runtime_error when the stream fails.
RegionCounts region_scan(std::size_t d, int grid_n, std::ostream& out, int workers = 1);

}  // namespace bewit
