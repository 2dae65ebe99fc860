#include "bewit/lhv.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace bewit {

namespace {

void require_range(std::size_t d, const char* who) {
  if (d < 3 || d > 12) throw std::invalid_argument(std::string(who) + ": d must lie in [3, 12]");
}

bool alice_a(const LocalStrategy& s, std::size_t p) { return ((s.alice_bits >> p) & 1u) == 0; }

void for_each_strategy(std::size_t d, const std::function<void(const LocalStrategy&)>& f) {
  for (unsigned bits = 0; bits < (1u << d); ++bits)
    for (std::size_t b = 0; b < d; ++b)
      for (unsigned bp = 0; bp < 2; ++bp) f(LocalStrategy{bits, b, bp});
}

// Hardy list with the P(Abar_p B'0) = 0 conditions imposed for p in [first, last).
bool satisfies(std::size_t d, const LocalStrategy& s, std::size_t first, std::size_t last) {
  const bool b0 = s.bob_bprime == 0;
  if (!(alice_a(s, 0) && b0)) return false;
  for (std::size_t p = 0; p < d; ++p)
    if (alice_a(s, p) && s.bob_b == p) return false;
  for (std::size_t p = first; p < last; ++p)
    if (!alice_a(s, p) && b0) return false;
  return true;
}

}  // namespace

int bell_functional(std::size_t d, const LocalStrategy& s) {
  const bool b0 = s.bob_bprime == 0;
  int v = (alice_a(s, 0) && b0) ? 1 : 0;
  for (std::size_t p = 1; p < d; ++p) v -= (!alice_a(s, p) && b0) ? 1 : 0;
  for (std::size_t p = 0; p < d; ++p) v -= (alice_a(s, p) && s.bob_b == p) ? 1 : 0;
  return v;
}

double lhv_bound(std::size_t d) {
  require_range(d, "lhv_bound");
  int best = std::numeric_limits<int>::min();
  for_each_strategy(d, [&](const LocalStrategy& s) { best = std::max(best, bell_functional(d, s)); });
  return static_cast<double>(best);
}

bool hardy_check(std::size_t d) {
  require_range(d, "hardy_check");
  bool found = false;
  for_each_strategy(d, [&](const LocalStrategy& s) { found = found || satisfies(d, s, 1, d); });
  return !found;
}

bool hardy_relaxed_satisfiable(std::size_t d) {
  require_range(d, "hardy_relaxed_satisfiable");
  bool found = false;
  for_each_strategy(d, [&](const LocalStrategy& s) { found = found || satisfies(d, s, 0, 1); });
  return found;
}

}  // namespace bewit
