#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfrac/lfunc.hpp"

using namespace lfrac;

static const double PI = 3.14159265358979323846;
static const QuadSpec QS{};

// closed form for alpha = 1/2: 1 - (sqrt(pi) z / 2) e^{z^2/4} erfc(z/2)
static double l_half_one(double z) {
    return 1.0 - 0.5 * std::sqrt(PI) * z * std::exp(z * z / 4.0) *
                     std::erfc(z / 2.0);
}

TEST_CASE("parameter admissibility") {
    CHECK(!check_params({0.5, cplx(1.0)}));
    auto v = check_params({-1.0, cplx(1.0)});
    REQUIRE(v.has_value());
    CHECK(v->n + (-1.0) * v->m + 1.0 == 0.0);
    CHECK(!check_params({-0.5, cplx(0.25)}));
    CHECK_THROWS_AS(check_params({0.5, cplx(200.0)}), param_error);
    CHECK_THROWS_AS((void)check_params({60.0, cplx(1.0)}), param_error);
}

TEST_CASE("ascending series, 0 < alpha < 1") {
    CHECK(eval_series_small_alpha({0.5, cplx(1.0)}, 0.0).value.real() ==
          doctest::Approx(1.0));
    auto r = eval_series_small_alpha({0.5, cplx(1.0)}, 2.0);
    CHECK(r.value.real() == doctest::Approx(l_half_one(2.0)).epsilon(1e-12));
    CHECK(r.method == Method::SeriesSmallAlpha);

    auto s = eval_series_small_alpha({0.5, cplx(2.0)}, 1.0);
    cplx o = eval_laplace_repr(0.5, 2.0, 1.0, 1.0, QS);
    CHECK(std::abs(s.value - o) <= 1e-10 * std::abs(o));
}

TEST_CASE("descending series, alpha > 1") {
    // index-swap identity: L_{2,1}(1) = 1 - L_{1/2,1}(1)
    auto r = eval_series_large_alpha({2.0, cplx(1.0)}, 1.0);
    CHECK(r.value.real() ==
          doctest::Approx(1.0 - l_half_one(1.0)).epsilon(1e-11));

    auto img = symmetry_reduce({2.0, cplx(1.0)}, 4.0);
    cplx via = img.prefactor *
               eval(img.params, img.z, QS).value;
    CHECK(std::abs(eval_series_large_alpha({2.0, cplx(1.0)}, 4.0).value - via) <
          1e-9 * std::abs(via));

    // decay ~ Gamma(1/3) z^{-1/3} / 3 for large z
    CHECK(std::abs(eval({3.0, cplx(1.0)}, 1e12, QS).value) < 1e-3);
    CHECK_THROWS_AS(eval({3.0, cplx(1.0)}, 0.0, QS), std::domain_error);
}

TEST_CASE("negative alpha") {
    auto r = eval_series_negative_alpha({-0.5, cplx(0.25)}, 1.0);
    cplx o = eval_laplace_repr(-0.5, 0.25, 1.0, 1.0, QS);
    CHECK(std::abs(r.value - o) <= 1e-8 * std::abs(o));

    // alpha=-1, beta=1/2, z=1 equals int x^{-1/2} e^{-1/x-x} dx = sqrt(pi) e^{-2}
    auto b = eval_series_negative_alpha({-1.0, cplx(0.5)}, 1.0);
    CHECK(b.value.real() ==
          doctest::Approx(std::sqrt(PI) * std::exp(-2.0)).epsilon(1e-10));

    CHECK_THROWS_AS(eval_series_negative_alpha({-1.0, cplx(1.0)}, 1.0),
                    param_error);
    // beta + alpha*1 + 0 = 3e-9: near-collision of the two pole lattices
    CHECK_THROWS_AS(
        eval_series_negative_alpha({-0.5, cplx(0.5 + 3e-9)}, 1.0),
        ill_conditioned_error);
}

TEST_CASE("Barnes contour") {
    auto a = eval_barnes({0.5, cplx(1.0)}, 1.0, QS);
    auto s = eval_series_small_alpha({0.5, cplx(1.0)}, 1.0);
    CHECK(std::abs(a.value - s.value) <= 1e-9 * std::abs(s.value));

    CHECK(eval_barnes({1.0, cplx(2.0)}, 1.0, QS).value.real() ==
          doctest::Approx(0.25).epsilon(1e-10));

    cplx zc = std::polar(1.0, PI * 0.7);
    auto ac = eval_barnes({0.5, cplx(1.0)}, zc, QS);
    auto sc = eval_series_small_alpha({0.5, cplx(1.0)}, zc);
    CHECK(std::abs(ac.value - sc.value) <= 1e-8 * std::abs(sc.value));

    CHECK_THROWS_AS(eval_barnes({0.5, cplx(1.0)}, std::polar(1.0, PI * 0.8), QS),
                    std::domain_error);
}

TEST_CASE("half-line integral representation") {
    CHECK(eval_laplace_repr(1.0, 1.0, 1.0, 1.0, QS).real() ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(eval_laplace_repr(0.5, 1.0, 1.0, 1.0, QS).real() ==
          doctest::Approx(l_half_one(1.0)).epsilon(1e-10));
    CHECK(eval_laplace_repr(-1.0, 0.5, 1.0, 1.0, QS).real() ==
          doctest::Approx(std::sqrt(PI) * std::exp(-2.0)).epsilon(1e-10));
    CHECK_THROWS_AS(eval_laplace_repr(0.5, -1.0, 1.0, 1.0, QS),
                    std::domain_error);
}

TEST_CASE("symmetry reduction data") {
    auto img = symmetry_reduce({2.0, cplx(2.0)}, 4.0);
    CHECK(img.params.alpha == doctest::Approx(0.5));
    CHECK(img.params.beta.real() == doctest::Approx(1.0));
    CHECK(img.z.real() == doctest::Approx(0.5));
    CHECK(img.prefactor.real() == doctest::Approx(0.125));

    auto twice = symmetry_reduce(img.params, img.z);
    CHECK(twice.params.alpha == doctest::Approx(2.0));
    CHECK(twice.z.real() == doctest::Approx(4.0));
    CHECK((img.prefactor * twice.prefactor).real() == doctest::Approx(1.0));
}

TEST_CASE("dispatch") {
    CHECK(eval({1.0, cplx(2.0)}, 1.0, QS).value.real() ==
          doctest::Approx(0.25));
    CHECK(eval({0.5, cplx(1.0)}, 0.0, QS).value.real() == doctest::Approx(1.0));
    auto r = eval({0.5, cplx(1.0)}, 2.0, QS);
    CHECK(r.value.real() == doctest::Approx(l_half_one(2.0)).epsilon(1e-11));

    // large |z| at 0<alpha<1 leaves the series regime and goes via Barnes
    auto big = eval({0.5, cplx(1.0)}, 50.0, QS);
    CHECK(big.method == Method::Barnes);
    CHECK(big.value.real() == doctest::Approx(l_half_one(50.0)).epsilon(1e-8));

    // small |z| at alpha>1 also goes via Barnes
    auto tiny = eval({2.0, cplx(1.0)}, 1e-4, QS);
    CHECK(tiny.method == Method::Barnes);
    cplx tref = eval_laplace_repr(2.0, 1.0, 1e-4, 1.0, QS);
    CHECK(tiny.value.real() == doctest::Approx(tref.real()).epsilon(1e-8));
}

TEST_CASE("cross-method grid") {
    for (double a : {0.2, 0.4, 0.6, 0.8}) {
        for (double b : {0.5, 1.0, 2.0}) {
            for (double az : {0.1, 1.0, 5.0}) {
                for (double ph : {0.0, PI / 4, -PI / 4}) {
                    cplx z = std::polar(az, ph);
                    cplx v = eval({a, cplx(b)}, z, QS).value;
                    cplx bar = eval_barnes({a, cplx(b)}, z, QS).value;
                    CHECK(std::abs(v - bar) <= 1e-8 * (1.0 + std::abs(v)));
                    cplx lap = eval_laplace_repr(a, b, z, 1.0, QS);
                    CHECK(std::abs(v - lap) <= 1e-8 * (1.0 + std::abs(v)));
                }
            }
        }
    }
}

TEST_CASE("index symmetry identities") {
    // (a) full reduction identity
    for (double a : {0.4, 2.5}) {
        for (double b : {0.5, 1.5}) {
            for (double z : {0.5, 2.0, 7.0}) {
                cplx lhs = eval({a, cplx(b)}, z, QS).value;
                auto img = symmetry_reduce({a, cplx(b)}, z);
                cplx rhs = img.prefactor * eval(img.params, img.z, QS).value;
                CHECK(std::abs(lhs - rhs) <= 1e-8 * std::abs(lhs));
            }
        }
    }
    // (b) beta = alpha contraction
    for (double a : {0.3, 0.7}) {
        for (double z : {0.5, 3.0}) {
            cplx lhs = eval({a, cplx(a)}, z, QS).value;
            cplx rhs = -(eval({a, cplx(1.0)}, z, QS).value - 1.0) / (a * z);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
        }
    }
    // (c) complementary pair sums to 1
    for (double a : {0.5, 2.0, 3.0}) {
        for (double z : {0.5, 1.0, 4.0}) {
            cplx s = eval({a, cplx(1.0)}, z, QS).value +
                     eval({1.0 / a, cplx(1.0)}, std::pow(z, -1.0 / a), QS).value;
            CHECK(std::abs(s - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("inner-product identity and its parameter swap") {
    double a1 = 0.5, b1 = 1.0, y1 = 1.0;
    double a2 = 0.8, b2 = 1.5, y2 = 2.0;
    QuadSpec s = QS;
    cplx direct =
        integrate_semi_infinite(
            [&](double x) {
                return cplx(std::pow(x, b1 + b2 - 2.0) *
                            std::exp(-y1 * std::pow(x, a1) -
                                     y2 * std::pow(x, a2)));
            },
            s, b1 + b2 - 1.0)
            .value;
    auto closed = [&](double aa, double ya, double ab, double yb) {
        double idx = (b1 + b2 - 1.0) / ab;
        return std::pow(yb, -idx) / ab *
               eval({aa / ab, cplx(idx)}, ya * std::pow(yb, -aa / ab), QS)
                   .value;
    };
    cplx c12 = closed(a1, y1, a2, y2);
    cplx c21 = closed(a2, y2, a1, y1);
    CHECK(std::abs(direct - c12) <= 1e-7 * std::abs(direct));
    CHECK(std::abs(c12 - c21) <= 1e-7 * std::abs(c12));
}

TEST_CASE("Wright series") {
    // alpha=1, beta=1: modified Bessel I0(2 sqrt(x))
    for (double x : {0.25, 1.0, 4.0}) {
        double i0 = std::cyl_bessel_i(0.0, 2.0 * std::sqrt(x));
        CHECK(wright_eval(1.0, 1.0, x).real() ==
              doctest::Approx(i0).epsilon(1e-12));
    }
    CHECK(wright_eval(0.3, 1.0, 0.0).real() == doctest::Approx(1.0));
    CHECK(wright_eval(1.0, 2.0, 0.0).real() == doctest::Approx(1.0));
    CHECK_THROWS_AS(wright_eval(-1.5, 1.0, 1.0), std::domain_error);
}
