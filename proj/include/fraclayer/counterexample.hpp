#pragma once

// f(x) = x^alpha (sin(x^{-gamma}) / ln x + 1) on (0, 1), gamma = 2|beta - alpha|/beta.
// f(x)/x^alpha -> 1 as x -> 0+, yet along the points where the phase x^{-gamma}
// is pi(n+1) and pi(n+1/2) the beta-Hoelder quotient of f is unbounded.

#include <vector>

namespace fraclayer {

struct OscParams {
  double alpha = 1.0;
  double beta = 0.5;

  double gamma() const;
  void validate() const;
};

/// Direct evaluation; requires x in (0, 1) with x^{-gamma} <= 1e12.
double osc_f(const OscParams& params, double x);

/// sin(pi r), with r reduced modulo 2 before multiplying by pi.
double sin_pi(double r);

struct OscPoints {
  double p = 0.0;
  double q = 0.0;
  /// Phases x^{-gamma}, exactly pi (n+1) and pi (n+1/2).
  double phase_p = 0.0;
  double phase_q = 0.0;
  /// The same phases divided by pi, exact in double precision.
  double phase_p_over_pi = 0.0;
  double phase_q_over_pi = 0.0;
};

/// p_n = (2/(pi(2+2n)))^{1/gamma}, q_n = (2/(pi(1+2n)))^{1/gamma}, n >= 1.
OscPoints osc_points(const OscParams& params, long long n);

/// f at a point whose phase is known exactly as a multiple of pi.
double osc_f_at_phase(const OscParams& params, double x, double phase_over_pi);

struct HolderTerms {
  double f_p = 0.0;
  double f_q = 0.0;
  /// q - p and f(q) - f(p), both formed without cancellation.
  double dx = 0.0;
  double df = 0.0;
  double quotient = 0.0;
};

HolderTerms holder_terms(const OscParams& params, long long n);
/// |f(q_n) - f(p_n)| / |q_n - p_n|^beta.
double holder_quotient(const OscParams& params, long long n);

/// Least-squares slope of log quotient against log n.
double holder_slope(const OscParams& params, const std::vector<long long>& ns);

}  // namespace fraclayer
