#pragma once

// Truncated Taylor-series arithmetic ("jets").
//
// A Taylor<T, N> holds the normalized coefficients c_k = f^(k)(x0) / k!,
// k = 0..N, of a function expanded about a fixed point. Arithmetic and the
// elementary functions below propagate all N+1 coefficients exactly (up to
// rounding), so evaluating a formula templated on the scalar type with a
// Taylor variable yields every derivative up to order N in one pass.

#include <Eigen/Core>

#include <cmath>

namespace fraclayer {

template <typename T, int N>
class Taylor {
 public:
  static_assert(N >= 0, "order must be nonnegative");
  using Coefficients = Eigen::Array<T, N + 1, 1>;
  static constexpr int order = N;

  Taylor() : c_(Coefficients::Zero()) {}
  Taylor(T constant) : c_(Coefficients::Zero()) { c_[0] = constant; }  // NOLINT: implicit by design of scalar templates
  explicit Taylor(const Coefficients& c) : c_(c) {}

  /// The independent variable expanded about x0.
  static Taylor variable(T x0) {
    Taylor t(x0);
    if constexpr (N >= 1) t.c_[1] = T(1);
    return t;
  }

  T value() const { return c_[0]; }
  T coefficient(int k) const { return c_[k]; }
  const Coefficients& coefficients() const { return c_; }
  Coefficients& coefficients() { return c_; }

  /// k-th derivative at the expansion point.
  T derivative(int k) const {
    T f = T(1);
    for (int j = 2; j <= k; ++j) f *= T(j);
    return c_[k] * f;
  }

  Taylor operator-() const { return Taylor(Coefficients(-c_)); }

  Taylor& operator+=(const Taylor& o) { c_ += o.c_; return *this; }
  Taylor& operator-=(const Taylor& o) { c_ -= o.c_; return *this; }
  Taylor& operator+=(T a) { c_[0] += a; return *this; }
  Taylor& operator-=(T a) { c_[0] -= a; return *this; }
  Taylor& operator*=(T a) { c_ *= a; return *this; }
  Taylor& operator/=(T a) { c_ /= a; return *this; }

  Taylor& operator*=(const Taylor& o) { *this = *this * o; return *this; }
  Taylor& operator/=(const Taylor& o) { *this = *this / o; return *this; }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator+(Taylor a, T b) { return a += b; }
  friend Taylor operator+(T b, Taylor a) { return a += b; }
  friend Taylor operator-(Taylor a, T b) { return a -= b; }
  friend Taylor operator-(T b, const Taylor& a) { Taylor r = -a; r.c_[0] += b; return r; }
  friend Taylor operator*(Taylor a, T b) { return a *= b; }
  friend Taylor operator*(T b, Taylor a) { return a *= b; }
  friend Taylor operator/(Taylor a, T b) { return a /= b; }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k <= N; ++k) {
      T s = T(0);
      for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor q;
    for (int k = 0; k <= N; ++k) {
      T s = a.c_[k];
      for (int j = 1; j <= k; ++j) s -= b.c_[j] * q.c_[k - j];
      q.c_[k] = s / b.c_[0];
    }
    return q;
  }

  friend Taylor operator/(T a, const Taylor& b) { return Taylor(a) / b; }

  friend Taylor exp(const Taylor& a) {
    Taylor e;
    e.c_[0] = std::exp(a.c_[0]);
    for (int k = 1; k <= N; ++k) {
      T s = T(0);
      for (int j = 1; j <= k; ++j) s += T(j) * a.c_[j] * e.c_[k - j];
      e.c_[k] = s / T(k);
    }
    return e;
  }

  friend Taylor log(const Taylor& a) {
    Taylor l;
    l.c_[0] = std::log(a.c_[0]);
    for (int k = 1; k <= N; ++k) {
      T s = T(0);
      for (int j = 1; j < k; ++j) s += T(j) * l.c_[j] * a.c_[k - j];
      l.c_[k] = (a.c_[k] - s / T(k)) / a.c_[0];
    }
    return l;
  }

  // Requires a.value() > 0.
  friend Taylor pow(const Taylor& a, T p) {
    Taylor w;
    w.c_[0] = std::pow(a.c_[0], p);
    for (int k = 1; k <= N; ++k) {
      T s = T(0);
      for (int j = 1; j <= k; ++j) s += (p * T(j) - T(k - j)) * a.c_[j] * w.c_[k - j];
      w.c_[k] = s / (T(k) * a.c_[0]);
    }
    return w;
  }

  friend Taylor atan(const Taylor& a) {
    // atan(a)' = a' / (1 + a^2), integrated coefficientwise.
    const Taylor q = T(1) + a * a;
    Taylor da;
    for (int k = 0; k < N; ++k) da.c_[k] = T(k + 1) * a.c_[k + 1];
    const Taylor g = da / q;
    Taylor r;
    r.c_[0] = std::atan(a.c_[0]);
    for (int k = 1; k <= N; ++k) r.c_[k] = g.c_[k - 1] / T(k);
    return r;
  }

 private:
  Coefficients c_;
};

/// Value part of a scalar or jet.
inline double scalar_value(double x) { return x; }
template <typename T, int N>
T scalar_value(const Taylor<T, N>& x) {
  return x.value();
}

}  // namespace fraclayer
