#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfrac/quadrature.hpp"

using namespace lfrac;

static const double PI = 3.14159265358979323846;

TEST_CASE("finite interval basics") {
    QuadSpec s;
    auto r = integrate_finite([](double x) { return cplx(x * x); }, 0, 1, s);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    auto osc = integrate_finite(
        [](double x) { return cplx(std::cos(50.0 * x)); }, 0, PI, s);
    CHECK(osc.converged);
    CHECK(osc.value.real() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite tails") {
    QuadSpec s;
    auto r = integrate_semi_infinite(
        [](double x) { return cplx(std::exp(-x)); }, s);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-10));

    // x^{-1/2} e^{-x}: integrable singularity at 0, value sqrt(pi)
    auto g = integrate_semi_infinite(
        [](double x) { return cplx(std::exp(-x) / std::sqrt(x)); }, s, 0.5);
    CHECK(g.converged);
    CHECK(g.value.real() == doctest::Approx(std::sqrt(PI)).epsilon(1e-10));

    // x^{-1/2} e^{-1/x - x}: sqrt(pi) e^{-2}
    auto h = integrate_semi_infinite(
        [](double x) {
            return cplx(std::exp(-1.0 / x - x) / std::sqrt(x));
        },
        s, 0.5);
    CHECK(h.converged);
    CHECK(h.value.real() ==
          doctest::Approx(std::sqrt(PI) * std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("real line gaussian") {
    QuadSpec s;
    auto r = integrate_real_line(
        [](double t) { return cplx(std::exp(-t * t)); }, s, 0.3);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(std::sqrt(PI)).epsilon(1e-10));
}

TEST_CASE("integrand_error on non-finite values") {
    QuadSpec s;
    CHECK_THROWS_AS(integrate_finite(
                        [](double x) { return cplx(1.0 / (x - x)); }, 0, 1, s),
                    integrand_error);
}

TEST_CASE("vertical line: inverse Mellin of Gamma recovers e^{-x}") {
    // (1/2 pi i) int Gamma(s) x^{-s} ds = e^{-x} on Re s = c > 0
    QuadSpec s;
    for (double x : {0.5, 1.0, 2.0}) {
        auto r = integrate_vertical_line(
            [x](cplx sv) { return gamma_complex(sv) * std::pow(x, -sv); }, 1.0,
            s);
        CHECK(r.converged);
        CHECK(r.value.real() == doctest::Approx(std::exp(-x)).epsilon(1e-9));
        CHECK(r.value.imag() == doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("vertical line: pole proximity raises contour_error") {
    QuadSpec s;
    cplx pole[] = {cplx(0.5, 0.0)};
    CHECK_THROWS_AS(
        integrate_vertical_line([](cplx sv) { return 1.0 / (sv - 0.5); },
                                0.5 + 1e-9, s, pole),
        contour_error);
}

TEST_CASE("oscillatory pair") {
    QuadSpec s;
    // theta = 1, alpha = 1/2, x = y = 1:
    // equals pi * (1/(2 sqrt(pi))) e^{-1/4} = (sqrt(pi)/2) e^{-1/4}
    auto r = oscillatory_pair(1.0, 0.5, cplx(1.0), 1.0, s);
    CHECK(r.converged);
    CHECK(r.value.real() ==
          doctest::Approx(0.5 * std::sqrt(PI) * std::exp(-0.25))
              .epsilon(1e-9));
    CHECK(r.value.imag() == doctest::Approx(0.0).epsilon(1e-9));

    CHECK_THROWS_AS(oscillatory_pair(1.0, 1.5, cplx(1.0), 1.0, s),
                    std::domain_error);
}

TEST_CASE("complex gamma") {
    // Gamma(1+i) reference value
    cplx g = gamma_complex(cplx(1.0, 1.0));
    CHECK(g.real() == doctest::Approx(0.49801566811835604).epsilon(1e-12));
    CHECK(g.imag() == doctest::Approx(-0.15494982830181069).epsilon(1e-12));

    CHECK(gamma_complex(cplx(0.5)).real() ==
          doctest::Approx(std::sqrt(PI)).epsilon(1e-13));
    CHECK(gamma_complex(cplx(5.0)).real() ==
          doctest::Approx(24.0).epsilon(1e-13));

    // recurrence on a strip, including the reflection region
    for (double re : {-1.3, -0.2, 0.4, 2.5}) {
        for (double im : {-3.0, 0.7, 10.0}) {
            cplx z(re, im);
            cplx lhs = gamma_complex(z + 1.0);
            cplx rhs = z * gamma_complex(z);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
        }
    }

    CHECK_THROWS_AS(gamma_complex(cplx(-2.0, 0.0)), std::domain_error);
    CHECK(std::abs(rgamma_complex(cplx(-3.0, 0.0))) == 0.0);
    CHECK(std::abs(std::exp(log_gamma(cplx(3.5, 2.0))) -
                   gamma_complex(cplx(3.5, 2.0))) < 1e-12);
}
