#pragma once

#include <cstddef>

namespace bewit {

/// Deterministic local strategy: Alice's outcome bit for each A_p (0 means
/// the A_p outcome), Bob's outcome for B (0..d-1) and his bit for B'.
struct LocalStrategy {
  unsigned alice_bits = 0;  // bit p is Alice's outcome for setting p
  std::size_t bob_b = 0;
  unsigned bob_bprime = 0;
};

/// Value of P(A0 B'0) - sum_{p>=1} P(Abar_p B'0) - sum_p P(A_p B_p) for one
/// deterministic strategy.
int bell_functional(std::size_t d, const LocalStrategy& s);

/// Exact maximum of the functional over all 2^d * 2d deterministic
/// strategies. Throws std::invalid_argument unless 3 <= d <= 12.
double lhv_bound(std::size_t d);

/// True iff no deterministic strategy satisfies P(A_p B_p) = 0 for all p,
/// P(Abar_p B'0) = 0 for p != 0 and P(A0 B'0) > 0. Same range as lhv_bound.
bool hardy_check(std::size_t d);

/// Negative control: the zero conditions on P(Abar_p B'0) are kept for p = 0
/// only. Returns whether some deterministic strategy then satisfies the list.
bool hardy_relaxed_satisfiable(std::size_t d);

}  // namespace bewit
