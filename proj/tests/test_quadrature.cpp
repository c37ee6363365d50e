#include <cmath>

#include "doctest.h"
#include "evtail/quadrature.hpp"

using namespace evtail;

TEST_CASE("polynomials and smooth integrands are integrated to high accuracy") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 30.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("adaptive refinement resolves a sharp interior peak") {
    // A Gaussian bump of width ~0.03 inside [0,1]; a single panel cannot
    // see it, so this exercises the subdivision logic.
    const double val =
        integrate([](double x) { return std::exp(-1000.0 * (x - 0.5) * (x - 0.5)); },
                  0.0, 1.0);
    CHECK(val == doctest::Approx(std::sqrt(M_PI / 1000.0)).epsilon(1e-9));
}

TEST_CASE("an exhausted subdivision budget raises a diagnosable failure") {
    QuadratureConfig q;
    q.rel_tol = 1e-15;
    q.abs_tol = 0.0;
    q.max_subdivisions = 3;
    CHECK_THROWS_AS(
        integrate([](double x) { return std::sin(200.0 * x) / (1e-3 + x * x); }, 0.0, 1.0,
                  q),
        QuadratureFailure);
}

TEST_CASE("tolerances in the config are honored") {
    QuadratureConfig loose;
    loose.rel_tol = 1e-3;
    const double rough =
        integrate([](double x) { return 1.0 / std::sqrt(x + 1e-8); }, 0.0, 1.0, loose);
    CHECK(rough == doctest::Approx(2.0).epsilon(5e-3));
}
