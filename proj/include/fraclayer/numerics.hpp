#pragma once

// Special functions, the C-infinity step used by every smooth blend, and
// integer-partition enumeration for the higher-order chain rule.

#include "fraclayer/taylor.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fraclayer {

/// Raised for arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Euler Gamma function on the positive axis (Lanczos, g = 7, 9 terms).
double gamma(double x);

/// Gamma(i + 2s) / Gamma(1 + 2s) as the finite product (1+2s)(2+2s)...(i-1+2s);
/// i = 0 gives 1/(2s).
double gamma_ratio(int i, double s);

/// Rising factorial a (a+1) ... (a+n-1); 1 for n = 0.
double rising_factorial(double a, int n);

/// sigma(t) = e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}) on (0,1), clamped to 0 and 1
/// outside. Flat to all orders at both ends, sigma(t) + sigma(1-t) = 1.
///
/// Templated on the scalar so the same formula yields derivatives when called
/// with a Taylor jet. Written as the logistic of h = 1/t - 1/(1-t), with the
/// exponential taken on the decaying side so nothing overflows.
template <typename S>
S smooth_step(const S& t) {
  using std::exp;
  const double t0 = scalar_value(t);
  if (t0 <= 0.0) return S(0.0);
  if (t0 >= 1.0) return S(1.0);
  const S h = 1.0 / t - 1.0 / (1.0 - t);
  const double h0 = scalar_value(h);
  // e^{-600} times any polynomial in 1/t of the orders used here underflows.
  if (h0 > 600.0) return S(0.0);
  if (h0 < -600.0) return S(1.0);
  if (h0 > 0.0) {
    const S e = exp(-h);
    return e / (1.0 + e);
  }
  const S e = exp(h);
  return 1.0 / (1.0 + e);
}

/// All integer partitions of i in multiplicity encoding: tuples (m_1..m_i) of
/// nonnegative integers with sum_j j*m_j = i. Ordered by increasing largest
/// part, so (i,0,...,0) comes first and (0,...,0,1) last. 1 <= i <= 12.
std::vector<std::vector<int>> partitions_weighted(int i);

}  // namespace fraclayer
