#pragma once

#include <functional>
#include <vector>

namespace bewit {

struct NelderMeadOptions {
  double initial_step = 0.1;
  /// Converged once the largest vertex-to-vertex distance drops below this.
  double diameter_tol = 1e-10;
  int max_iterations = 5000;
};

struct NelderMeadResult {
  std::vector<double> point;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free minimization with the standard reflection/expansion/
/// contraction/shrink coefficients (1, 2, 1/2, 1/2). Return +inf or any large
/// value from `f` to act as a barrier.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& opts = {});

struct ScalarMin {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
ScalarMin golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                             double tol = 1e-12);

/// Uniform scan of `samples` points on [lo, hi] plus the optional `hint`,
/// followed by golden-section refinement in the bracket around the best scan
/// point. Robust for functions that are unimodal on the bracket scale.
ScalarMin scan_then_golden(const std::function<double(double)>& f, double lo, double hi,
                           int samples, double hint, double tol = 1e-12);

}  // namespace bewit
