#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kcut/quadrature.hpp"

using kcut::specfun::integrate;
using kcut::specfun::QuadratureError;
using kcut::specfun::QuadratureSpec;

TEST_CASE("polynomials and smooth integrands") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
}

TEST_CASE("sharply peaked integrand is refined adaptively") {
    double v = integrate([](double x) { return std::exp(-1000.0 * (x - 0.3) * (x - 0.3)); },
                         0.0, 1.0);
    CHECK(v == doctest::Approx(std::sqrt(M_PI / 1000.0)).epsilon(1e-10));
}

TEST_CASE("orientation and degenerate interval") {
    double fwd = integrate([](double x) { return x; }, 0.0, 2.0);
    double rev = integrate([](double x) { return x; }, 2.0, 0.0);
    CHECK(fwd == doctest::Approx(2.0));
    CHECK(rev == doctest::Approx(-2.0));
    CHECK(integrate([](double) { return 1.0; }, 1.5, 1.5) == 0.0);
}

TEST_CASE("specification is validated") {
    QuadratureSpec bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), std::domain_error);
    bad = QuadratureSpec{};
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), std::domain_error);
    bad = QuadratureSpec{};
    bad.max_subdivisions = 0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), std::domain_error);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0,
                              std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("non-finite integrand values are reported") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0),
                    QuadratureError);
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0),
                    QuadratureError);
}

TEST_CASE("subdivision budget is enforced") {
    QuadratureSpec tight;
    tight.abs_tol = 1e-15;
    tight.rel_tol = 1e-14;
    tight.max_subdivisions = 2;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(50.0 * x) * std::exp(x); }, 0.0,
                              40.0, tight),
                    QuadratureError);
}

TEST_CASE("tolerances are honored on an oscillatory integrand") {
    QuadratureSpec spec;
    spec.max_subdivisions = 4000;
    double v = integrate([](double x) { return std::sin(50.0 * x); }, 0.0, 40.0, spec);
    double target = (1.0 - std::cos(2000.0)) / 50.0;
    CHECK(v == doctest::Approx(target).epsilon(1e-9));
}
