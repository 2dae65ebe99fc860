#pragma once

#include <cstddef>
#include <vector>

#include "bewit/matcore.hpp"

namespace bewit {

/// d real unit vectors in span{|1>..|d-1>} with pairwise overlap -1/(d-1),
/// materialized as length-d vectors whose |0> slot is zero.
struct ThetaFamily {
  std::size_t d = 0;
  std::vector<QVector> vectors;
};

/// Recursive construction starting from {+|1>, -|1>}:
///   theta_p(n) = (sqrt(n(n-2)) theta_p(n-1) - |n-1>) / (n-1),  p <= n-2
///   theta_{n-1}(n) = |n-1>
/// Throws std::invalid_argument for d < 2.
ThetaFamily theta_states(std::size_t d);

struct ThetaDiagnostics {
  /// max |sum_p theta_p|
  double sum_residual = 0.0;
  /// max |sum_p theta_p theta_p^T - d/(d-1) (I - |0><0|)|
  double resolution_residual = 0.0;
  /// max |<theta_p|theta_q> - (d delta_pq - 1)/(d-1)|
  double gram_residual = 0.0;
};

ThetaDiagnostics theta_identities(const ThetaFamily& f);

/// Gram matrix <theta_p|theta_q>.
SymMatrix theta_gram(const ThetaFamily& f);

/// sum_p |theta_p><theta_p|
SymMatrix theta_resolution(const ThetaFamily& f);

}  // namespace bewit
