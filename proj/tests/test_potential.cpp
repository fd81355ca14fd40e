#include "fraclayer/fraclap.hpp"
#include "fraclayer/potential.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace fraclayer;
using fraclayer::testing::rng;
using fraclayer::testing::uniform;

namespace {

const PotentialModel& unit_model() {
  static const PotentialModel m = build_potential(Layer{LayerParams{}}, {}, {});
  return m;
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

TEST_SUITE("potential") {
  TEST_CASE("double well of the unit layer") {
    const PotentialModel& m = unit_model();
    CHECK(m.v_left() == 0.0);
    CHECK(m.r_grid.front() == -1.0);
    CHECK(m.r_grid.back() == 1.0);
    CHECK(std::abs(m.v_right()) <= 1e-4 * m.v_max());
    CHECK(m.value(0.0) > 0.0);
    CHECK_FALSE(m.truncation_warning);
    for (std::size_t k = 1; k + 1 < m.r_grid.size(); ++k) {
      CHECK(m.r_grid[k] > m.r_grid[k - 1]);
      CHECK(m.v_values[k] > 0.0);
    }
  }

  TEST_CASE("h") {
    const Layer L{LayerParams{}};
    QuadratureConfig cfg;
    CHECK(std::abs(h_of_r(L, 0.0, cfg)) <= 1e-12);
    CHECK(h_of_r(L, 0.5, cfg) == doctest::Approx(fraclap(L, 2.0, cfg).value).epsilon(1e-12));
    // h(r) (1 - r)^{-2s/beta} -> -C2^{-2s/beta}/s = -2
    const double r = 1.0 - 1e-4;
    CHECK(testing::rel(h_of_r(L, r, cfg) / (1.0 - r), -2.0) <= 1e-2);
    CHECK_THROWS_AS(h_of_r(L, 1.0, cfg), DomainError);
  }

  TEST_CASE("stored slopes are h at the nodes") {
    const PotentialModel& m = unit_model();
    const Layer L{LayerParams{}};
    QuadratureConfig cfg;
    for (std::size_t k = 1; k + 1 < m.r_grid.size(); k += 97)
      CHECK(std::abs(m.vprime_values[k] - fraclap(L, m.x_grid[k - 1], cfg).value) <= 1e-10);
  }

  TEST_CASE("grid derivative of V matches h away from the wells") {
    // Five-point differentiation in x on the smooth asinh grid, then dV/dr =
    // (dV/dx)/phi'. Only outside the bridge: there phi' nearly vanishes and
    // the integrand is steeper than the node spacing.
    const PotentialModel& m = unit_model();
    const Layer L{LayerParams{}};
    QuadratureConfig cfg;
    const auto& x = m.x_grid;
    const std::vector<double> v(m.v_values.begin() + 1, m.v_values.end() - 1);
    int checked = 0;
    for (std::size_t k = 2; k + 2 < x.size(); ++k) {
      const double r = L.phi(x[k]);
      if (std::abs(r) > 0.9 || std::abs(x[k]) <= L.reach()) continue;
      double d = 0.0;
      for (std::size_t a = k - 2; a <= k + 2; ++a) {
        double w = 0.0;
        for (std::size_t b = k - 2; b <= k + 2; ++b) {
          if (b == a) continue;
          double t = 1.0 / (x[a] - x[b]);
          for (std::size_t c = k - 2; c <= k + 2; ++c)
            if (c != a && c != b) t *= (x[k] - x[c]) / (x[a] - x[c]);
          w += t;
        }
        d += w * v[a];
      }
      CHECK(testing::rel(d / L.phi_deriv(x[k], 1), h_of_r(L, r, cfg)) <= 1e-4);
      ++checked;
    }
    CHECK(checked > 20);
  }

  TEST_CASE("increments of V across the bridge") {
    const PotentialModel& m = unit_model();
    const Layer L{LayerParams{}};
    QuadratureConfig cfg;
    const ScalarFunction f = [&](double t) { return fraclap(L, t, cfg).value * L.phi_deriv(t, 1); };
    for (std::size_t k = 0; k + 1 < m.x_grid.size(); k += 3) {
      const double a = m.x_grid[k], b = m.x_grid[k + 1];
      if (std::abs(a) > L.reach()) continue;
      const double inc = m.v_values[k + 2] - m.v_values[k + 1];
      CHECK(std::abs(inc - adaptive_panel_integrate(f, a, b, cfg).value) <= 1e-11);
    }
  }

  TEST_CASE("symmetric layers give an even potential") {
    const PotentialModel& m = unit_model();
    const std::size_t n = m.v_values.size();
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(m.v_values[k] - m.v_values[n - 1 - k]) <= 1e-8);
    auto g = rng(30);
    for (int k = 0; k < 50; ++k) {
      const double r = uniform(g, -0.99, 0.99);
      CHECK(std::abs(m.value(r) - m.value(-r)) <= 1e-8);
    }
  }

  TEST_CASE("asymmetric layer still balances") {
    const Layer L{asymmetric()};
    const PotentialModel m = build_potential(L, {}, {});
    CHECK(std::abs(m.v_right()) <= 1e-4 * m.v_max());
    for (std::size_t k = 1; k + 1 < m.v_values.size(); ++k) CHECK(m.v_values[k] > 0.0);
  }

  TEST_CASE("tail integrals agree with the grid") {
    const Layer L{LayerParams{}};
    const PotentialModel& m = unit_model();
    QuadratureConfig cfg;
    const std::size_t k = 40;
    CHECK(m.x_grid[k - 1] < -L.params().kappa);
    CHECK(potential_left_integral(L, m.x_grid[k - 1], cfg) == doctest::Approx(m.v_values[k]).epsilon(1e-7));
    CHECK_THROWS_AS(potential_left_integral(L, 0.0, cfg), DomainError);
    CHECK_THROWS_AS(potential_right_integral(L, 0.0, cfg), DomainError);
  }

  TEST_CASE("derivative recovery") {
    const Layer L{LayerParams{}};
    QuadratureConfig cfg;
    CHECK(recover_Vderiv(L, 10.0, 0, cfg) == fraclap(L, 10.0, far_field_config(cfg, 0.5, 0, 10.0)).value);
    CHECK(recover_Vderiv(L, -10.0, 1, cfg) ==
          doctest::Approx(fraclap_deriv(L, 1, -10.0, cfg).value / L.phi_deriv(-10.0, 1)).epsilon(1e-12));
    CHECK(testing::rel(recover_Vderiv(L, -1e3, 1, cfg), 2.0) <= 3e-2);
    CHECK_THROWS_AS(recover_Vderiv(L, 2.0, 1, cfg), DomainError);
    CHECK_THROWS_AS(recover_Vderiv(L, 20.0, 5, cfg), DomainError);
  }

  TEST_CASE("recovered derivatives are consistent with each other") {
    const Layer L{asymmetric()};
    QuadratureConfig cfg;
    cfg.tol_abs = 1e-13;
    cfg.tol_rel = 1e-13;
    auto g = rng(31);
    for (int k = 0; k < 10; ++k) {
      const double mag = uniform(g, 2.5 * L.params().kappa, 60.0);
      const double x = (k % 2) ? mag : -mag;
      const double h = 1e-3 * mag;
      const auto lo = recover_Vderivs(L, x - h, 3, cfg), hi = recover_Vderivs(L, x + h, 3, cfg);
      const auto mid = recover_Vderivs(L, x, 3, cfg);
      const double dr = L.phi(x + h) - L.phi(x - h);
      for (int i : {1, 2, 3}) CHECK(testing::rel((hi[i - 1] - lo[i - 1]) / dr, mid[i]) <= 1e-2);
    }
  }
}
