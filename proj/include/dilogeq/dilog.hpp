#pragma once

namespace dilogeq {

// L(1) = pi^2 / 6.
inline constexpr double L1 = 1.6449340668482264365;

// Li_2(x) = sum_{k>=1} x^k / k^2 on [0,1]. Relative error <= 1e-13.
double li2(double x);

// Rogers dilogarithm L(x) = Li_2(x) + (1/2) log(x) log(1-x) on (0,1),
// extended by L(0) = 0 and L(1) = pi^2/6. Monotone increasing on [0,1].
double rogers_l(double x);

}  // namespace dilogeq
