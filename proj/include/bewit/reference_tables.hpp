#pragma once

#include <cstddef>

namespace bewit {

/// Published Bell optimum for one dimension; a is |a| with b < 0.
struct BellRow {
  std::size_t d;
  double x;
  double y;
  double a;
  double value;
};

/// Published steering optimum for one dimension; a is |a| with b < 0.
struct SteeringRow {
  std::size_t d;
  double x;
  double y;
  double s;
  double a;
  double value;
};

inline constexpr BellRow kBellRows[] = {
    {3, 0.309, 0.01733, 0.913, 2.65264e-4}, {4, 0.290, 0.00695, 0.938, 7.08492e-5},
    {5, 0.269, 0.00361, 0.952, 2.61468e-5}, {6, 0.251, 0.00218, 0.961, 1.17680e-5},
    {7, 0.235, 0.00141, 0.967, 6.05098e-6}, {8, 0.222, 0.00098, 0.971, 3.42082e-6},
    {9, 0.211, 0.00072, 0.974, 2.07676e-6},
};

inline constexpr SteeringRow kSteeringRows[] = {
    {3, 0.473, 0.182, 0.5413, 0.851, 3.2655e-3}, {4, 0.434, 0.154, 0.5370, 0.887, 2.0082e-3},
    {5, 0.400, 0.136, 0.5370, 0.908, 1.3277e-3}, {6, 0.372, 0.123, 0.5373, 0.923, 9.3813e-4},
    {7, 0.349, 0.114, 0.5377, 0.933, 6.9687e-4}, {8, 0.330, 0.106, 0.5380, 0.941, 5.3768e-4},
    {9, 0.313, 0.099, 0.5382, 0.947, 4.2729e-4},
};

/// Row for d, or nullptr.
inline const BellRow* find_bell_row(std::size_t d) {
  for (const BellRow& r : kBellRows)
    if (r.d == d) return &r;
  return nullptr;
}

inline const SteeringRow* find_steering_row(std::size_t d) {
  for (const SteeringRow& r : kSteeringRows)
    if (r.d == d) return &r;
  return nullptr;
}

}  // namespace bewit
