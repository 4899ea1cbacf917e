#include "polyft/bessel.hpp"

#include <cmath>
#include <numbers>

#include "polyft/error.hpp"

namespace polyft::special {

namespace {

constexpr double kSeriesLimit = 12.0;

double j1_series(double x) {
  const double h = 0.5 * x;
  const double h2 = h * h;
  double term = h;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -h2 / (static_cast<double>(k) * static_cast<double>(k + 1));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

// J1(x) ~ sqrt(2 / (pi x)) (P cos chi - Q sin chi), chi = x - 3 pi / 4, summed until the
// terms stop decreasing.
double j1_hankel(double x) {
  constexpr double mu = 4.0;  // 4 nu^2
  double p = 0.0, q = 0.0;
  double a = 1.0;
  double prev = INFINITY;
  for (int k = 0; k < 80; ++k) {
    const double mag = std::abs(a);
    if (mag > prev) break;
    switch (k % 4) {
      case 0: p += a; break;
      case 1: q += a; break;
      case 2: p -= a; break;
      default: q -= a; break;
    }
    if (mag < 1e-17) break;
    prev = mag;
    const double odd = 2.0 * (k + 1) - 1.0;
    a *= (mu - odd * odd) / (8.0 * (k + 1) * x);
  }
  const double chi = x - 0.75 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j1(double x) {
  const double ax = std::abs(x);
  const double v = ax <= kSeriesLimit ? j1_series(ax) : j1_hankel(ax);
  return x < 0.0 ? -v : v;
}

double jinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 8.0;
  return 2.0 * bessel_j1(x) / x;
}

double bessel_j1_zero(int k) {
  if (k < 1) throw InputError("Bessel zero index must be >= 1");
  // McMahon: j_{1,k} ~ (k + 1/4) pi - 3 / (8 (k + 1/4) pi).
  const double beta = (k + 0.25) * std::numbers::pi;
  const double guess = beta - 3.0 / (8.0 * beta);
  double lo = guess - 0.3, hi = guess + 0.3;
  double flo = bessel_j1(lo);
  if (flo * bessel_j1(hi) > 0.0) throw ToleranceError("failed to bracket Bessel zero");
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = bessel_j1(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace polyft::special
