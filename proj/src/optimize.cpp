#include "bewit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bewit {

namespace {

double distance(const std::vector<double>& u, const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += (u[i] - v[i]) * (u[i] - v[i]);
  return std::sqrt(s);
}

double diameter(const std::vector<std::vector<double>>& simplex) {
  double m = 0.0;
  for (std::size_t i = 0; i < simplex.size(); ++i)
    for (std::size_t j = i + 1; j < simplex.size(); ++j) m = std::max(m, distance(simplex[i], simplex[j]));
  return m;
}

// p + t (q - p)
std::vector<double> along(const std::vector<double>& p, const std::vector<double>& q, double t) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + t * (q[i] - p[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& opts) {
  const std::size_t n = start.size();
  if (n == 0) throw std::invalid_argument("nelder_mead: empty start point");

  std::vector<std::vector<double>> simplex{start};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v = start;
    v[i] += opts.initial_step;
    simplex.push_back(std::move(v));
  }
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  NelderMeadResult res;
  for (res.iterations = 0; res.iterations < opts.max_iterations; ++res.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<std::vector<double>> s2;
      std::vector<double> v2;
      for (std::size_t k : order) {
        s2.push_back(simplex[k]);
        v2.push_back(values[k]);
      }
      simplex = std::move(s2);
      values = std::move(v2);
    }
    if (diameter(simplex) < opts.diameter_tol) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);

    const std::vector<double>& worst = simplex[n];
    const std::vector<double> reflected = along(centroid, worst, -1.0);
    const double fr = f(reflected);
    if (fr < values[0]) {
      const std::vector<double> expanded = along(centroid, worst, -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        simplex[n] = expanded;
        values[n] = fe;
      } else {
        simplex[n] = reflected;
        values[n] = fr;
      }
      continue;
    }
    if (fr < values[n - 1]) {
      simplex[n] = reflected;
      values[n] = fr;
      continue;
    }
    const bool outside = fr < values[n];
    const std::vector<double> contracted =
        outside ? along(centroid, reflected, 0.5) : along(centroid, worst, 0.5);
    const double fc = f(contracted);
    if (fc < (outside ? fr : values[n])) {
      simplex[n] = contracted;
      values[n] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      simplex[k] = along(simplex[0], simplex[k], 0.5);
      values[k] = f(simplex[k]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  res.point = simplex[best];
  res.value = values[best];
  return res;
}

ScalarMin golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                             double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (c >= d) break;
  }
  ScalarMin best = fc <= fd ? ScalarMin{c, fc} : ScalarMin{d, fd};
  for (double edge : {a, b}) {
    const double fe = f(edge);
    if (fe < best.value) best = {edge, fe};
  }
  return best;
}

ScalarMin scan_then_golden(const std::function<double(double)>& f, double lo, double hi,
                           int samples, double hint, double tol) {
  if (samples < 2) throw std::invalid_argument("scan_then_golden: need at least 2 samples");
  std::vector<double> xs;
  for (int i = 0; i < samples; ++i)
    xs.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1));
  if (std::isfinite(hint) && hint > lo && hint < hi) xs.push_back(hint);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::size_t arg = 0;
  double fbest = f(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double v = f(xs[i]);
    if (v < fbest) {
      fbest = v;
      arg = i;
    }
  }
  const double left = xs[arg == 0 ? 0 : arg - 1];
  const double right = xs[arg + 1 == xs.size() ? arg : arg + 1];
  ScalarMin refined = golden_section_min(f, left, right, tol);
  if (fbest < refined.value) refined = {xs[arg], fbest};
  return refined;
}

}  // namespace bewit
