#include "fraclayer/numerics.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

namespace fraclayer {

double gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw DomainError("gamma: argument must be positive and finite, got " + std::to_string(x));
  if (x < 0.5) return gamma(x + 1.0) / x;

  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

  const double z = x - 1.0;
  double a = p[0];
  for (int i = 1; i < 9; ++i) a += p[i] / (z + i);
  const double t = z + g + 0.5;
  // t^(z+1/2) split in two halves to stay finite up to the overflow of Gamma itself.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * a;
}

double gamma_ratio(int i, double s) {
  if (i < 0) throw DomainError("gamma_ratio: i must be nonnegative");
  if (!(s > 0.0 && s < 1.0)) throw DomainError("gamma_ratio: s must lie in (0,1)");
  if (i == 0) return 1.0 / (2.0 * s);
  double r = 1.0;
  for (int k = 1; k < i; ++k) r *= k + 2.0 * s;
  return r;
}

double rising_factorial(double a, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + k;
  return r;
}

std::vector<std::vector<int>> partitions_weighted(int i) {
  if (i < 1 || i > 12) throw DomainError("partitions_weighted: i must lie in [1, 12]");
  std::vector<std::vector<int>> out;
  std::vector<int> mult(i, 0);
  // Parts are emitted in nonincreasing order; the first part grows outermost.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(mult);
      return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
      ++mult[p - 1];
      rec(remaining - p, p);
      --mult[p - 1];
    }
  };
  rec(i, i);
  return out;
}

}  // namespace fraclayer
