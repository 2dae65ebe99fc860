#pragma once
// Reference values computed once by an independent dense numpy implementation
// (direct construction of the state and operators, LAPACK eigensolver) and
// frozen here.

namespace oracle {

// make_params(3, 0.3, 1/60)
inline constexpr double kZ2_d3 = 0.909722222222222222;
inline constexpr double kDelta_d3 = 0.904722222222222222;
inline constexpr double kR_d3 = 3.82444444444444444;

// Largest eigenvalues of rho(3, 0.3, 1/60), ascending; the middle one is doubly degenerate.
inline constexpr double kTopEig_d3[] = {0.003922138291690802, 0.261475886112725, 0.261475886112725,
                                        0.4731260894828591};

// Tr(rho W_N) with a = |a|, b = -sqrt(1 - a^2).
inline constexpr double kBell_d3_row = 0.000264659551732719;   // d=3, (0.309, 0.01733), a=0.913
inline constexpr double kBell_d4_row = 7.058589400128236e-05;  // d=4, (0.290, 0.00695), a=0.938
inline constexpr double kBell_d3_a24 = -0.012606568058371504;  // d=3, (0.3, 1/60), a=sqrt(24)/5
inline constexpr double kBell_d3_a1 = -0.057441253263707595;   // d=3, (0.3, 0.1), a=1

}  // namespace oracle
