#pragma once

#include <cstddef>
#include <vector>

#include "bewit/matcore.hpp"

namespace bewit {

/// Largest local dimension materialized as a dense d^2 x d^2 matrix.
inline constexpr std::size_t kMaxDenseDim = 24;

/// Coordinates (d, x, y) of one family member plus derived quantities.
///   z = sqrt(1 - x^2 - y^2),  ztilde = z sqrt(d-2),
///   delta = z^2/(d-2) - x y,  R = d x y + (d-1)(d-2) delta + d - 1.
struct StateParams {
  std::size_t d = 0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double ztilde = 0.0;
  double delta = 0.0;
  double bigR = 0.0;
};

/// Signed slack of every membership constraint (positive = satisfied).
struct DomainMargins {
  double x = 0.0;
  double y = 0.0;
  double unit_disk = 0.0;  // 1 - x^2 - y^2
  double delta = 0.0;
  bool inside() const noexcept { return x > 0.0 && y > 0.0 && unit_disk > 0.0 && delta > 0.0; }
};

DomainMargins domain_margins(std::size_t d, double x, double y) noexcept;

/// Derives every field without validating membership. Requires d >= 3 and
/// x^2 + y^2 <= 1 for z to be real (z is clamped at 0 otherwise).
StateParams derive_params(std::size_t d, double x, double y) noexcept;

/// Validated construction. Throws OutsideDomain naming the violated
/// constraint ("d >= 3", "x > 0", "y > 0", "x^2 + y^2 < 1", "delta > 0").
StateParams make_params(std::size_t d, double x, double y);

/// rho_xy with the unnormalized vectors that define it (they are its
/// eigenvectors).
struct StateBundle {
  StateParams params;
  QVector psi;                  // sum_i |i,i>
  std::vector<QVector> psi_ij;  // |i,j> - |j,i>, ordered i = 2..d-1, j = 1..i-1
  std::vector<QVector> psi_k;   // x|0,k> + y|k,0> + z|phi_k>, k = 1..d-1
  std::vector<QVector> phi_k;   // k = 1..d-1
  SymMatrix rho;
};

/// Throws OutsideDomain on invalid parameters and std::invalid_argument
/// above kMaxDenseDim.
StateBundle build_state(const StateParams& params);

struct PptCheck {
  double min_eig_pt = 0.0;   // smallest eigenvalue of rho^{T_1}
  double pt_residual = 0.0;  // max |rho^{T_1} - rho|
};

PptCheck check_ppt(const StateBundle& bundle, const JacobiOptions& opts = {});

/// S rho S with S the factor swap.
SymMatrix swap_qudits(const StateBundle& bundle);

/// Expected full spectrum (ascending, zeros included):
/// {d x y/R} + {2 delta/R} x (d-1)(d-2)/2 + {1/R} x (d-1) + zeros.
std::vector<double> expected_spectrum(const StateParams& p);

/// <P0 (x) P0> = x y / R and <(I-P0) (x) P0> = (d-1) y^2 / R.
struct MarginalMoments {
  double p00 = 0.0;
  double pbar0_p0 = 0.0;
};
MarginalMoments marginal_moments(const StateBundle& bundle);

}  // namespace bewit
