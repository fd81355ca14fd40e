#include "fraclayer/extension.hpp"
#include "fraclayer/layer.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fraclayer;
using fraclayer::testing::rng;
using fraclayer::testing::uniform;

namespace {

constexpr double pi = std::numbers::pi;

BoundaryData constant(double c) {
  return {[c](double) { return c; }, [](double) { return 0.0; }, [](double) { return 0.0; }, {}};
}

}  // namespace

TEST_SUITE("extension") {
  TEST_CASE("constants at s = 1/2") {
    const ExtensionConstants c = extension_constants(0.5);
    CHECK(c.p_s == doctest::Approx(1.0 / pi).epsilon(1e-14));
    CHECK(c.q_s == doctest::Approx(1.0 / pi).epsilon(1e-14));
    CHECK(c.ds_over_qs == doctest::Approx(pi).epsilon(1e-14));
    CHECK(c.d_s == 0.0);
    CHECK(std::isinf(c.p_s_closed_form));
    CHECK_THROWS_AS(extension_constants(1.0), DomainError);
  }

  TEST_CASE("kernel normalization") {
    QuadratureConfig cfg;
    for (double s : {0.25, 0.5, 0.75}) CHECK(std::abs(kernel_h_integral(s, cfg) - 1.0) <= 1e-10);
  }

  TEST_CASE("constant boundary data") {
    QuadratureConfig cfg;
    const BoundaryData one = constant(1.0);
    for (double y : {0.01, 0.3, 4.0}) {
      CHECK(extend(one, 0.3, 0.7, y, cfg) == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(std::abs(w_eval(one, 0.3, 0.7, y, cfg, WMethod::finite_difference)) <= 1e-8);
      CHECK(std::abs(w_eval(one, 0.3, 0.7, y, cfg, WMethod::representation)) <= 1e-14);
    }
  }

  TEST_CASE("arctan extension basics") {
    QuadratureConfig cfg;
    const ArctanLayer u = arctan_layer();
    const BoundaryData v = boundary_data(u);
    for (double y : {0.1, 1.0, 10.0}) CHECK(std::abs(extend(v, 0.5, 0.0, y, cfg)) <= 1e-12);
    for (double x : {-3.0, -0.5, 0.2, 4.0}) CHECK(std::abs(extend(v, 0.5, x, 1e-4, cfg) - u.u(x)) <= 1e-3);
    // At s = 1/2 the extension of (2/pi) arctan is (2/pi) arg(x + i(1 + y)) shifted.
    for (double y : {0.5, 2.0})
      CHECK(extend(v, 0.5, 1.3, y, cfg) == doctest::Approx(2.0 / pi * std::atan(1.3 / (1.0 + y))).epsilon(1e-10));
  }

  TEST_CASE("maximum principle") {
    QuadratureConfig cfg;
    const Layer L{LayerParams{}};
    const BoundaryData v = boundary_data(L, cfg);
    auto g = rng(40);
    for (int k = 0; k < 100; ++k) {
      const double x = uniform(g, -20, 20), y = std::exp(uniform(g, std::log(1e-3), std::log(50.0)));
      const double e = extend(v, 0.5, x, y, cfg);
      CHECK(e > -1.0);
      CHECK(e < 1.0);
    }
  }

  TEST_CASE("gradient kernels match finite differences") {
    QuadratureConfig cfg;
    const BoundaryData v = boundary_data(arctan_layer());
    auto g = rng(41);
    for (int k = 0; k < 10; ++k) {
      const double x = uniform(g, -3, 3), y = uniform(g, 0.2, 2.0), h = 1e-4;
      const double fx = (extend(v, 0.5, x + h, y, cfg) - extend(v, 0.5, x - h, y, cfg)) / (2 * h);
      const double fy = (extend(v, 0.5, x, y + h, cfg) - extend(v, 0.5, x, y - h, cfg)) / (2 * h);
      CHECK(std::abs(extend_dx(v, 0.5, x, y, cfg) - fx) <= 1e-6);
      CHECK(std::abs(extend_dy(v, 0.5, x, y, cfg) - fy) <= 1e-6);
    }
  }

  TEST_CASE("w by two methods") {
    QuadratureConfig cfg;
    const BoundaryData v = boundary_data(arctan_layer());
    for (double x = -3.0; x <= 3.0; x += 0.5)
      for (double y : {0.1, 0.25, 0.5, 1.0}) {
        const ExtensionSample e = extension_sample(v, 0.5, x, y, cfg);
        CHECK(std::abs(e.w_fd - e.w_repr) <= 1e-6);
      }
  }

  TEST_CASE("w for a layer with s != 1/2") {
    QuadratureConfig cfg;
    LayerParams p;
    p.s = 0.4;
    p.alpha = p.beta = 0.8;
    const Layer L{p};
    const BoundaryData v = boundary_data(L, cfg);
    for (double x : {-2.0, 0.5, 3.0}) {
      const ExtensionSample e = extension_sample(v, 0.4, x, 0.5, cfg);
      CHECK(std::abs(e.w_fd - e.w_repr) <= 1e-6);
    }
  }

  TEST_CASE("trace of w") {
    QuadratureConfig cfg;
    const ArctanLayer u = arctan_layer();
    const BoundaryData v = boundary_data(u);
    const double c = 2 * 0.5 * extension_constants(0.5).p_s;
    for (double x = -5.0; x <= 5.0; x += 0.25)
      CHECK(std::abs(w_eval(v, 0.5, x, 1e-3, cfg, WMethod::representation) - c * u.fraclap_exact(x)) <= 1e-3);
  }

  TEST_CASE("hamiltonian inequality for the arctan profile") {
    QuadratureConfig cfg;
    const ArctanLayer u = arctan_layer();
    const BoundaryData v = boundary_data(u);
    const auto G = [&u](double r) { return u.potential(r); };
    const HamiltonianResult tiny = hamiltonian_check(v, G, 0.5, 0.7, 1e-6, cfg);
    CHECK(std::abs(tiny.lhs) <= 1e-5);
    CHECK(tiny.holds);
    CHECK(hamiltonian_check(v, G, 0.5, 0.0, 0.5, cfg).rhs == doctest::Approx(2.0 / pi).epsilon(1e-14));
    const auto Vu = [](double r) { return (std::cos(pi * r) + 1.0) / (pi * pi); };
    CHECK(hamiltonian_check(v, Vu, 0.5, 0.0, 0.5, cfg).rhs == doctest::Approx(2.0 / (pi * pi)).epsilon(1e-14));

    auto g = rng(42);
    for (int k = 0; k < 20; ++k) {
      const double x = uniform(g, -3, 3), y = 2.0 - uniform(g, 0, 2);
      const HamiltonianResult h = hamiltonian_check(v, G, 0.5, x, y, cfg);
      CHECK(h.holds);
    }
  }
}
