#pragma once

namespace polyft::special {

/// Bessel function of the first kind, order one. Ascending series for |x| <= 12, Hankel
/// asymptotic expansion beyond; absolute error below 1e-10.
double bessel_j1(double x);

/// 2 J1(x) / x, equal to 1 at x = 0.
double jinc(double x);

/// k-th positive zero of J1 (k >= 1), located by bisection on bessel_j1.
double bessel_j1_zero(int k);

}  // namespace polyft::special
