#include "fraclayer/extrapolation.hpp"
#include "fraclayer/fraclap.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fraclayer;
using fraclayer::testing::rng;
using fraclayer::testing::uniform;

namespace {

constexpr double pi = std::numbers::pi;

// Trapezoid in log t on [1e-6, 1e7] plus the inner Taylor term and the far
// constant part. Slow; for cross-checking only.
template <typename Profile>
double brute_force(const Profile& p, double x, long n = 10'000'000) {
  const double s = p.s(), t0 = 1e-6, t1 = 1e7;
  const double a = std::log(t0), b = std::log(t1), h = (b - a) / (n - 1);
  const double f0 = p.phi(x);
  double sum = 0.0;
  for (long k = 0; k < n; ++k) {
    const double t = std::exp(a + h * k);
    const double g = (p.phi(x + t) + p.phi(x - t) - 2.0 * f0) * std::pow(t, -2.0 * s);
    sum += (k == 0 || k == n - 1) ? 0.5 * g : g;
  }
  const double inner = p.derivatives(x, 2)[2] * std::pow(t0, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);
  const double outer = -2.0 * f0 * std::pow(t1, -2.0 * s) / (2.0 * s);
  return h * sum + inner + outer;
}

LayerParams asymmetric() {
  LayerParams p;
  p.s = 0.4;
  p.alpha = 0.5;
  p.beta = 0.8;
  p.c1 = 1.0;
  p.c2 = 2.0;
  p.kappa = 4.0;
  return p;
}

}  // namespace

TEST_SUITE("fraclap") {
  TEST_CASE("closed form for the arctan profile") {
    CHECK(fraclap_arctan_exact(0.0) == 0.0);
    // L_{1/2} u = -sin(pi u); at x = 1, u = 1/2.
    CHECK(fraclap_arctan_exact(1.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(fraclap_arctan_exact(-1.0) == doctest::Approx(1.0).epsilon(1e-15));
    QuadratureConfig cfg;
    CHECK(std::abs(fraclap(arctan_layer(), 1.0, cfg).value + 1.0) <= 1e-10);
  }

  TEST_CASE("arctan oracle over [-10, 10]") {
    QuadratureConfig cfg;
    cfg.tol_abs = 1e-10;
    const ArctanLayer u = arctan_layer();
    double worst = 0.0;
    for (int k = 0; k <= 40; ++k) {
      const double x = -10.0 + 0.5 * k;
      const FracEval e = fraclap(u, x, cfg);
      worst = std::max(worst, std::abs(e.value - fraclap_arctan_exact(x)));
      const auto& b = e.breakdown;
      CHECK(e.value == doctest::Approx(b.inner + b.mid + b.outer_constant + b.outer_power).epsilon(1e-15));
      CHECK(e.error_estimate >= 0.0);
    }
    CHECK(worst <= 100 * cfg.tol_abs);
  }

  TEST_CASE("tightening the tolerance does not hurt the arctan oracle") {
    const ArctanLayer u = arctan_layer();
    QuadratureConfig loose;
    loose.tol_abs = 1e-6;
    loose.tol_rel = 1e-6;
    QuadratureConfig tight = loose;
    for (int step = 0; step < 4; ++step) {
      tight.tol_abs *= 0.5;
      tight.tol_rel *= 0.5;
      double err_loose = 0.0, err_tight = 0.0;
      for (int k = 0; k <= 40; ++k) {
        const double x = -10.0 + 0.5 * k;
        err_loose = std::max(err_loose, std::abs(fraclap(u, x, loose).value - fraclap_arctan_exact(x)));
        err_tight = std::max(err_tight, std::abs(fraclap(u, x, tight).value - fraclap_arctan_exact(x)));
      }
      CHECK(err_tight <= err_loose * (1 + 1e-9) + 1e-15);
      loose = tight;
    }
  }

  TEST_CASE("antisymmetry for a symmetric layer") {
    const Layer L{LayerParams{}};
    QuadratureConfig cfg;
    auto g = rng(20);
    for (int k = 0; k < 50; ++k) {
      const double x = uniform(g, 0.0, 50.0);
      CHECK(std::abs(fraclap(L, x, cfg).value + fraclap(L, -x, cfg).value) <= 10 * cfg.tol_abs);
    }
  }

  TEST_CASE("order zero is fraclap") {
    const Layer L{asymmetric()};
    QuadratureConfig cfg;
    for (double x : {-30.0, -1.0, 0.3, 7.0}) CHECK(fraclap_deriv(L, 0, x, cfg).value == fraclap(L, x, cfg).value);
    CHECK_THROWS_AS(fraclap_deriv(L, 5, 1.0, cfg), DomainError);
  }

  TEST_CASE("decay of the unit layer") {
    const Layer L{LayerParams{}};
    QuadratureConfig cfg;
    CHECK(testing::rel(100.0 * fraclap(L, 100.0, cfg).value, -2.0) <= 3e-2);
    std::vector<Sample> v;
    for (double x = 100.0; x <= 1e5 * 1.01; x *= 2)
      v.push_back({x, x * fraclap(L, x, far_field_config(cfg, 0.5, 0, x)).value});
    CHECK(testing::rel(extrapolate_limit(v).extrapolated, -2.0) <= 5e-3);
  }

  TEST_CASE("derivative decay of the unit layer") {
    const Layer L{LayerParams{}};
    QuadratureConfig cfg;
    for (int i : {1, 2}) {
      std::vector<Sample> v;
      for (double x = 1e3 / 16; x <= 1e3 * 1.01; x *= 2)
        v.push_back({x, std::pow(x, i + 1.0) * fraclap_deriv(L, i, x, far_field_config(cfg, 0.5, i, x)).value});
      const double target = i == 1 ? 2.0 : -4.0;
      CHECK(testing::rel(extrapolate_limit(v).extrapolated, target) <= (i == 1 ? 3e-2 : 5e-2));
    }
  }

  TEST_CASE("x-derivative of the operator commutes with differentiation") {
    const Layer L{asymmetric()};
    QuadratureConfig cfg;
    cfg.tol_abs = 1e-13;
    cfg.tol_rel = 1e-13;
    auto g = rng(21);
    for (int k = 0; k < 20; ++k) {
      const double mag = uniform(g, 2.5 * L.reach(), 200.0);
      const double x = (k % 2) ? mag : -mag;
      const double h = 1e-3 * mag;
      const double fd = (fraclap(L, x + h, cfg).value - fraclap(L, x - h, cfg).value) / (2 * h);
      const double fd2 = (fraclap(L, x + h / 2, cfg).value - fraclap(L, x - h / 2, cfg).value) / h;
      const double rich = (4 * fd2 - fd) / 3;
      CHECK(testing::rel(rich, fraclap_deriv(L, 1, x, cfg).value) <= 1e-4);
    }
  }

  TEST_CASE("brute-force oracle") {
    QuadratureConfig cfg;
    const Layer unit{LayerParams{}};
    CHECK(std::abs(fraclap(unit, 100.0, cfg).value - brute_force(unit, 100.0)) <= 1e-8);
    const Layer L{asymmetric()};
    for (double x : {-9.0, 2.5}) CHECK(std::abs(fraclap(L, x, cfg).value - brute_force(L, x, 2'000'000)) <= 1e-8);
  }
}
