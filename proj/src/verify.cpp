// Implementation of the verification suites.  Grids and tolerances here are
// the pinned acceptance values; loosening them defeats the point.
#include "lfrac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "lfrac/halfline.hpp"
#include "lfrac/holo.hpp"
#include "lfrac/lfunc.hpp"
#include "lfrac/stable.hpp"

namespace lfrac {

namespace {

const double PI = 3.14159265358979323846;

cplx cpow(cplx b, cplx e) { return std::exp(e * std::log(b)); }

// worst-case error accumulator; the three flavours match the three tolerance
// conventions used by the checks (relative, normalized by 1+|ref|, absolute)
struct Worst {
    double v = 0.0;
    void rel(cplx got, cplx want) {
        v = std::max(v, std::abs(got - want) / std::abs(want));
    }
    void norm(cplx got, cplx want) {
        v = std::max(v, std::abs(got - want) / (1.0 + std::abs(want)));
    }
    void abs(cplx got, cplx want) { v = std::max(v, std::abs(got - want)); }
    void raw(double e) { v = std::max(v, e); }
};

VerifyCase done(const char* name, const Worst& w, double tol) {
    return {name, w.v, tol, w.v <= tol && std::isfinite(w.v)};
}

// shared test function and its transform image
HoloFunction phi_image(const QuadSpec& spec) {
    return memoized(laplace_image(make_phi(1.0, 1.0, 0), spec));
}

// nested operator applications run at the relaxed operator-grade spec;
// the tolerances checked here (1e-5, 1e-6) sit far above its noise floor
OperatorContext op_ctx(const QuadSpec& spec) {
    OperatorContext ctx;
    ctx.spec = spec;
    ctx.spec.rel_tol = std::max(spec.rel_tol, 1e-8);
    ctx.spec.abs_tol = std::max(spec.abs_tol, 1e-10);
    return ctx;
}

// b^{-1} F(z/b) with derivative slots; image of x -> f(bx)
HoloFunction dilate_image(HoloFunction F, double b) {
    HoloFunction G;
    G.cls = F.cls;
    G.left_margin = b * F.left_margin;
    G.eval = [F = std::move(F), b](cplx z, int k) -> cplx {
        return std::pow(b, -1.0 - k) * F.eval(z / b, k);
    };
    return G;
}

// ---------------------------------------------------------------- lfunc ----

VerifyCase c_closed_form_anchor(const QuadSpec& spec) {
    Worst w;
    for (cplx b : {cplx(0.5), cplx(1.0), cplx(2.0), cplx(1.0, 1.0)}) {
        for (cplx z : {cplx(0.5), cplx(1.0), cplx(2.0), cplx(1.0, 1.0)}) {
            cplx got = eval({1.0, b}, z, spec).value;
            cplx want = gamma_complex(b) * cpow(1.0 + z, -b);
            w.rel(got, want);
        }
    }
    return done("closed-form-anchor", w, 1e-10);
}

VerifyCase c_cross_method(const QuadSpec& spec) {
    Worst w;
    for (double a : {0.2, 0.4, 0.6, 0.8}) {
        for (double b : {0.5, 1.0, 2.0}) {
            for (double az : {0.1, 1.0, 5.0}) {
                for (double ph : {0.0, PI / 4, -PI / 4}) {
                    cplx z = std::polar(az, ph);
                    cplx v = eval({a, cplx(b)}, z, spec).value;
                    w.norm(eval_barnes({a, cplx(b)}, z, spec).value, v);
                    w.norm(eval_laplace_repr(a, b, z, 1.0, spec), v);
                }
            }
        }
    }
    return done("cross-method-agreement", w, 1e-8);
}

VerifyCase c_index_symmetry(const QuadSpec& spec) {
    Worst w;
    for (double a : {0.4, 2.5}) {
        for (double b : {0.5, 1.5}) {
            for (double z : {0.5, 2.0, 7.0}) {
                cplx lhs = eval({a, cplx(b)}, z, spec).value;
                auto img = symmetry_reduce({a, cplx(b)}, z);
                cplx rhs =
                    img.prefactor * eval(img.params, img.z, spec).value;
                w.rel(rhs, lhs);
            }
        }
    }
    return done("index-symmetry-reduction", w, 1e-8);
}

VerifyCase c_index_contraction(const QuadSpec& spec) {
    Worst w;
    for (double a : {0.3, 0.7}) {
        for (double z : {0.5, 3.0}) {
            cplx lhs = eval({a, cplx(a)}, z, spec).value;
            cplx rhs = -(eval({a, cplx(1.0)}, z, spec).value - 1.0) / (a * z);
            w.rel(rhs, lhs);
        }
    }
    return done("index-contraction", w, 1e-9);
}

VerifyCase c_complementary_sum(const QuadSpec& spec) {
    Worst w;
    for (double a : {0.5, 2.0, 3.0}) {
        for (double z : {0.5, 1.0, 4.0}) {
            cplx s = eval({a, cplx(1.0)}, z, spec).value +
                     eval({1.0 / a, cplx(1.0)}, std::pow(z, -1.0 / a), spec)
                         .value;
            w.abs(s, cplx(1.0));
        }
    }
    return done("complementary-sum", w, 1e-9);
}

VerifyCase c_erfc_anchor(const QuadSpec& spec) {
    Worst w;
    for (double z : {0.5, 1.0, 2.0}) {
        cplx got = eval({0.5, cplx(1.0)}, z, spec).value;
        double want = 1.0 - 0.5 * std::sqrt(PI) * z *
                                std::exp(z * z / 4.0) * std::erfc(z / 2.0);
        w.abs(got, cplx(want));
    }
    return done("erfc-anchor", w, 1e-9);
}

VerifyCase c_product_identity(const QuadSpec& spec) {
    double a1 = 0.5, b1 = 1.0, y1 = 1.0;
    double a2 = 0.8, b2 = 1.5, y2 = 2.0;
    cplx direct =
        integrate_semi_infinite(
            [&](double x) {
                return cplx(std::pow(x, b1 + b2 - 2.0) *
                            std::exp(-y1 * std::pow(x, a1) -
                                     y2 * std::pow(x, a2)));
            },
            spec, b1 + b2 - 1.0)
            .value;
    auto closed = [&](double aa, double ya, double ab, double yb) {
        double idx = (b1 + b2 - 1.0) / ab;
        return std::pow(yb, -idx) / ab *
               eval({aa / ab, cplx(idx)}, ya * std::pow(yb, -aa / ab), spec)
                   .value;
    };
    cplx c12 = closed(a1, y1, a2, y2);
    cplx c21 = closed(a2, y2, a1, y1);
    Worst w;
    w.rel(c12, direct);
    w.rel(c21, c12);
    return done("product-identity", w, 1e-7);
}

// --------------------------------------------------------------- stable ----

double levy_density(double t, double y) {
    return t / (2.0 * std::sqrt(PI)) * std::pow(y, -1.5) *
           std::exp(-t * t / (4.0 * y));
}

VerifyCase c_levy_closed_form(const QuadSpec& spec) {
    Worst w;
    for (double t : {0.5, 1.0, 2.0}) {
        for (double y : {0.5, 1.0, 2.0}) {
            w.rel(subordinator_density(0.5, t, y, spec),
                  levy_density(t, y));
        }
    }
    return done("levy-closed-form", w, 1e-8);
}

VerifyCase c_subordinator_norm(const QuadSpec& spec) {
    QuadSpec inner = spec;
    inner.rel_tol = 1e-9;
    inner.abs_tol = 1e-12;
    QuadSpec outer = spec;
    outer.rel_tol = 1e-8;
    outer.abs_tol = 1e-10;
    Worst w;
    for (double a : {0.3, 0.5, 0.8}) {
        double n = normalization_check(
            [&](double y) {
                return y < 1e-10 ? 0.0
                                 : subordinator_density(a, 1.0, y, inner);
            },
            false, outer);
        w.abs(cplx(n), cplx(1.0));
    }
    return done("subordinator-normalization", w, 1e-6);
}

VerifyCase c_subordinator_laplace(const QuadSpec& spec) {
    QuadSpec outer = spec;
    outer.rel_tol = 1e-8;
    outer.abs_tol = 1e-10;
    Worst w;
    for (double a : {0.3, 0.5, 0.8}) {
        for (double z : {0.5, 1.0, 2.0}) {
            auto lt = integrate_semi_infinite(
                [&](double y) {
                    return cplx(subordinator_density(a, 1.0, y, spec) *
                                std::exp(-z * y));
                },
                outer);
            w.rel(lt.value.real(), std::exp(-std::pow(z, a)));
        }
    }
    return done("subordinator-laplace-symbol", w, 1e-6);
}

VerifyCase c_subordinator_scaling(const QuadSpec& spec) {
    Worst w;
    for (double a : {0.3, 0.5, 0.8}) {
        for (double t : {0.5, 2.0}) {
            for (double y : {0.4, 1.0, 3.0}) {
                double lhs = subordinator_density(a, t, y, spec);
                double s = std::pow(t, -1.0 / a);
                double rhs = s * subordinator_density(a, 1.0, y * s, spec);
                w.rel(lhs, rhs);
            }
        }
    }
    return done("subordinator-scaling", w, 1e-8);
}

VerifyCase c_cosine_positivity(const QuadSpec& spec) {
    std::vector<double> grid;
    for (double x = 0.0; x <= 20.0 + 1e-12; x += 0.1) grid.push_back(x);
    Worst w;
    for (double a : {0.3, 0.7, 1.3, 2.0}) {
        auto r = positivity_scan(
            [&](double x) { return cauchy_density_integral(a, x, spec); },
            grid);
        w.raw(std::max(0.0, -r.min_value));
        if (r.violations > 0) w.raw(1.0);
    }
    return done("cosine-positivity", w, 1e-10);
}

VerifyCase c_cosine_closed_forms(const QuadSpec& spec) {
    Worst w;
    for (double x : {0.0, 0.5, 1.0, 3.0, -2.0}) {
        w.abs(cplx(cauchy_density_integral(1.0, x, spec)),
              cplx(1.0 / (1.0 + x * x)));
        w.abs(cplx(cauchy_density_integral(2.0, x, spec)),
              cplx(0.5 * std::sqrt(PI) * std::exp(-x * x / 4.0)));
    }
    return done("cosine-closed-forms", w, 1e-8);
}

// ------------------------------------------------------------- fraccalc ----

VerifyCase c_fractional_semigroup(const QuadSpec& spec) {
    auto f = make_psi(2, 1.0);
    Worst w;
    for (auto [r, p] : std::vector<std::pair<double, double>>{
             {0.5, 0.5}, {0.3, 1.2}, {-1.0, 2.0}}) {
        for (double x : {0.5, 1.0, 2.0}) {
            HalfLineFunction jp;
            jp.eval = [&, p](double y) -> cplx {
                if (y <= 0.0) return 0.0;
                return riemann_liouville(f, p, y, spec);
            };
            jp.sigma0 = 1.0 + p;
            cplx lhs = riemann_liouville(jp, r, x, spec);
            cplx rhs = riemann_liouville(f, r + p, x, spec);
            w.norm(lhs, rhs);
        }
    }
    return done("fractional-semigroup", w, 1e-6);
}

VerifyCase c_laplace_symbol(const QuadSpec& spec) {
    auto f = make_psi(1, 1.0);
    Worst w;
    for (double r : {0.5, 1.0}) {
        for (double z : {0.5, 1.0, 2.0}) {
            HalfLineFunction jr;
            jr.eval = [&, r](double y) -> cplx {
                if (y <= 0.0) return 0.0;
                return riemann_liouville(f, r, y, spec);
            };
            jr.sigma0 = 2.0 + r;
            cplx lhs = laplace(jr, z, spec);
            cplx rhs = std::pow(z, -r) * laplace(f, z, spec);
            w.norm(lhs, rhs);
        }
    }
    return done("laplace-symbol-of-integration", w, 1e-7);
}

VerifyCase c_derivative_semigroup(const QuadSpec& spec) {
    OperatorContext ctx = op_ctx(spec);
    HoloFunction F = phi_image(spec);
    HoloFunction half;
    half.cls = HoloClass::RapidDecay;
    half.eval = [F, ctx](cplx z, int k) -> cplx {
        if (k != 0) throw std::domain_error("no derivative slots");
        return frac_diff(F, 0.5, z, ctx);
    };
    HoloFunction mid = memoized(std::move(half));
    Worst w;
    for (cplx z : {cplx(1.0), cplx(1.0, 0.5)}) {
        cplx lhs = frac_diff(mid, 0.5, z, ctx);
        cplx rhs = -F.eval(z, 1);
        w.norm(lhs, rhs);
    }
    return done("derivative-semigroup", w, 1e-6);
}

// ------------------------------------------------------------ operators ----

VerifyCase c_conjugation_identity(const QuadSpec& spec) {
    OperatorContext ctx = op_ctx(spec);
    HoloFunction F = phi_image(spec);
    Worst w;
    for (double alpha : {0.5, 2.0}) {
        HoloFunction inner = memoized(a_image(1.0 / alpha, F, ctx));
        for (double h : {0.5, 1.0}) {
            HoloFunction G;
            G.cls = HoloClass::RapidDecay;
            G.eval = [inner, h, ctx](cplx z, int k) -> cplx {
                if (k != 0) throw std::domain_error("no derivative slots");
                return frac_diff(inner, h, z, ctx);
            };
            HoloFunction Gm = memoized(std::move(G));
            for (cplx z : {cplx(0.7), cplx(1.0), cplx(1.0, 0.5)}) {
                cplx lhs = apply_A(alpha, Gm, z, ctx);
                cplx rhs = frac_diff(F, alpha * h, z, ctx);
                w.norm(lhs, rhs);
            }
        }
    }
    return done("conjugation-identity", w, 1e-6);
}

VerifyCase c_weighted_conjugation(const QuadSpec& spec) {
    OperatorContext ctx = op_ctx(spec);
    HoloFunction F = phi_image(spec);
    HoloFunction H = memoized(a_image(2.0, F, ctx));
    HoloFunction G;
    G.cls = HoloClass::RapidDecay;
    G.eval = [H](cplx z, int k) -> cplx {
        if (k != 0) throw std::domain_error("no derivative slots");
        return z * H.eval(z, 0);
    };
    HoloFunction Gm = memoized(std::move(G));
    HoloFunction zF;
    zF.cls = F.cls;
    zF.left_margin = F.left_margin;
    zF.eval = [F](cplx z, int k) -> cplx {
        cplx v = z * F.eval(z, k);
        if (k > 0) v += double(k) * F.eval(z, k - 1);
        return v;
    };
    Worst w;
    for (cplx z : {cplx(1.0), cplx(1.0, 0.5)}) {
        cplx lhs = apply_A(0.5, Gm, z, ctx);
        cplx rhs = 2.0 * frac_diff(zF, 0.5, z, ctx);
        w.norm(lhs, rhs);
    }
    return done("weighted-conjugation", w, 1e-6);
}

VerifyCase c_dilation_exchange(const QuadSpec& spec) {
    // substituting x^alpha then dilating by a equals dilating by a^{1/alpha}
    // then substituting, checked on transform images
    OperatorContext ctx = op_ctx(spec);
    HoloFunction F = phi_image(spec);
    double alpha = 0.5, a = 2.0;
    double b = std::pow(a, 1.0 / alpha);
    HoloFunction DF = dilate_image(F, a);
    Worst w;
    for (cplx z : {cplx(1.0), cplx(1.0, 0.5)}) {
        cplx lhs = apply_A(alpha, DF, z, ctx);
        cplx rhs = apply_A(alpha, F, z / b, ctx) / b;
        w.norm(lhs, rhs);
    }
    return done("substitution-dilation-exchange", w, 1e-6);
}

VerifyCase c_boundary_norm(const QuadSpec& spec) {
    // normalized weighted-substitution element at (alpha, a) = (1/2, 2):
    // scalar |alpha|^{1/2} a^{1/2} = 1, weight order (alpha-1)/2 = -1/4.
    // boundary L2 norms of image and original agree.
    OperatorContext ctx = op_ctx(spec);
    HoloFunction F = phi_image(spec);
    HoloFunction G = r_image(cplx(-0.25), 0.5, 2.0, F, ctx);
    QuadSpec ns = spec;
    ns.rel_tol = 1e-6;
    ns.abs_tol = 1e-9;
    // real pre-images: |.(it)| is even in t
    auto normsq = [&](const HoloFunction& H) {
        return integrate_semi_infinite(
                   [&](double t) {
                       return cplx(std::norm(H.eval(cplx(0.0, t), 0)));
                   },
                   ns)
                   .value.real() /
               PI;
    };
    double ng = normsq(G);
    double nf = normsq(F);
    Worst w;
    w.raw(std::abs(std::sqrt(ng / nf) - 1.0));
    return done("boundary-norm", w, 1e-4);
}

VerifyCase c_oracle_substitution(const QuadSpec& spec) {
    OperatorContext ctx = op_ctx(spec);
    auto phi = make_phi(1.0, 1.0, 0);
    HoloFunction F = phi_image(spec);
    HalfLineFunction g;
    g.eval = [phi](double x) -> cplx { return phi.eval(std::sqrt(x)); };
    g.eval_c = [phi](cplx s) -> cplx { return phi.eval_c(std::sqrt(s)); };
    g.sector = 1.55;
    g.sigma0 = 1.0;
    Worst w;
    for (cplx v : {cplx(0.7), cplx(1.0), cplx(1.0, 0.5)}) {
        w.norm(apply_A(0.5, F, v, ctx), laplace(g, v, spec));
    }
    return done("transform-oracle-substitution", w, 1e-5);
}

VerifyCase c_oracle_weight(const QuadSpec& spec) {
    OperatorContext ctx = op_ctx(spec);
    auto phi = make_phi(1.0, 1.0, 0);
    HoloFunction F = phi_image(spec);
    HalfLineFunction g;
    g.eval = [phi](double x) -> cplx {
        if (x <= 0.0) return 0.0;
        return std::pow(x, -0.25) * phi.eval(2.0 * std::sqrt(x));
    };
    g.eval_c = [phi](cplx s) -> cplx {
        return std::pow(s, cplx(-0.25)) * phi.eval_c(2.0 * std::sqrt(s));
    };
    g.sector = 1.55;
    g.sigma0 = 0.75;
    Worst w;
    for (cplx z : {cplx(0.7), cplx(1.0), cplx(1.0, 0.5)}) {
        w.norm(apply_R(cplx(-0.25), 0.5, 2.0, F, z, ctx),
               laplace(g, z, spec));
    }
    return done("transform-oracle-weight", w, 1e-5);
}

VerifyCase c_oracle_phase(const QuadSpec& spec) {
    OperatorContext ctx = op_ctx(spec);
    auto phi = make_phi(1.0, 1.0, 0);
    HoloFunction F = phi_image(spec);
    HalfLineFunction g;
    g.eval = [phi](double x) -> cplx {
        return std::exp(cplx(0.0, 1.0) * std::sqrt(x)) * phi.eval(x);
    };
    g.eval_c = [phi](cplx s) -> cplx {
        return std::exp(cplx(0.0, 1.0) * std::sqrt(s)) * phi.eval_c(s);
    };
    g.sector = 1.55;
    g.sigma0 = 1.0;
    Worst w;
    for (cplx z : {cplx(1.0), cplx(1.0, 0.5)}) {
        w.norm(apply_T(0.5, 1.0, F, z, ctx), laplace(g, z, spec));
    }
    return done("transform-oracle-phase", w, 1e-5);
}

// ---------------------------------------------------------------- group ----

VerifyCase c_group_fixed(const QuadSpec&) {
    Worst w;
    GroupElementG e1{cplx(1.0), cplx(1.0), 2.0, 3.0};
    GroupElementG e2{cplx(1.0), cplx(2.0), 0.5, 4.0};
    GroupElementG p = compose_g(e1, e2);
    w.abs(p.lambda, cplx(9.0));
    w.abs(p.h, cplx(5.0));
    w.raw(std::abs(p.alpha - 1.0));
    w.raw(std::abs(p.a - 4.0 * std::sqrt(3.0)) / (4.0 * std::sqrt(3.0)));
    GroupElementG r = compose_g(e2, inverse_g(e2));
    w.abs(r.lambda, cplx(1.0));
    w.abs(r.h, cplx(0.0));
    w.raw(std::abs(r.alpha - 1.0));
    w.raw(std::abs(r.a - 1.0));
    GroupElementG ii = inverse_g(inverse_g(e1));
    w.abs(ii.h, e1.h);
    w.raw(std::abs(ii.a - e1.a));
    return done("group-fixed-compositions", w, 1e-12);
}

double group_dist(const GroupElementG& x, const GroupElementG& y) {
    double d = std::abs(x.lambda - y.lambda) / (1.0 + std::abs(y.lambda));
    d = std::max(d, std::abs(x.h - y.h) / (1.0 + std::abs(y.h)));
    d = std::max(d, std::abs(x.alpha - y.alpha) / (1.0 + std::abs(y.alpha)));
    d = std::max(d, std::abs(x.a - y.a) / (1.0 + std::abs(y.a)));
    return d;
}

GroupElementG random_g(std::mt19937& rng) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    GroupElementG e;
    e.lambda = std::polar(0.5 + std::abs(U(rng)), PI * U(rng));
    e.h = cplx(U(rng), U(rng));
    double u = U(rng);
    e.alpha = (u < 0.0 ? -1.0 : 1.0) * (0.3 + 2.7 * std::abs(u));
    e.a = 0.2 + 2.4 * (U(rng) + 1.0);
    return e;
}

VerifyCase c_group_random(const QuadSpec&) {
    std::mt19937 rng(58191204u);
    Worst w;
    for (int i = 0; i < 100; ++i) {
        GroupElementG a = random_g(rng), b = random_g(rng),
                      c = random_g(rng);
        w.raw(group_dist(compose_g(compose_g(a, b), c),
                         compose_g(a, compose_g(b, c))));
        w.raw(group_dist(compose_g(a, inverse_g(a)), identity_g()));
        w.raw(group_dist(compose_g(inverse_g(a), a), identity_g()));
    }
    return done("group-random-laws", w, 1e-12);
}

SemigroupElementQ random_q(std::mt19937& rng) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    SemigroupElementQ e;
    e.theta = cplx(1.5 * U(rng));
    e.alpha = 0.1 + 0.8 * U(rng);
    double margin = PI / 2.0 * (1.0 - e.alpha);
    e.a = std::polar(0.3 + 2.0 * U(rng),
                     0.9 * margin * (2.0 * U(rng) - 1.0));
    e.validate();
    return e;
}

VerifyCase c_semigroup_closure(const QuadSpec&) {
    std::mt19937 rng(77003161u);
    Worst w;
    for (int i = 0; i < 100; ++i) {
        SemigroupElementQ a = random_q(rng), b = random_q(rng);
        SemigroupElementQ p = compose_q(a, b);
        p.validate();
        w.raw(std::max(0.0, -p.domain_margin()));
    }
    return done("semigroup-closure", w, 1e-12);
}

VerifyCase c_semigroup_assoc(const QuadSpec&) {
    std::mt19937 rng(91405577u);
    Worst w;
    for (int i = 0; i < 100; ++i) {
        SemigroupElementQ a = random_q(rng), b = random_q(rng),
                          c = random_q(rng);
        SemigroupElementQ lhs = compose_q(compose_q(a, b), c);
        SemigroupElementQ rhs = compose_q(a, compose_q(b, c));
        w.norm(lhs.theta, rhs.theta);
        w.raw(std::abs(lhs.alpha - rhs.alpha));
        w.norm(lhs.a, rhs.a);
        w.norm(lhs.prefactor, rhs.prefactor);
    }
    return done("semigroup-associativity", w, 1e-12);
}

// ------------------------------------------------------------- zolotarev ----

VerifyCase c_zolotarev_closed_form(const QuadSpec& spec) {
    Worst w;
    for (double x : {0.5, 1.0, 2.0}) {
        for (double y : {0.5, 1.0, 2.0}) {
            w.rel(zolotarev_kernel(0.5, x, y, spec), levy_density(y, x));
        }
    }
    return done("zolotarev-closed-form", w, 1e-8);
}

VerifyCase c_zolotarev_norm(const QuadSpec& spec) {
    Worst w;
    for (double y : {0.5, 1.0, 2.0}) {
        auto r = integrate_semi_infinite(
            [&](double x) -> cplx {
                return zolotarev_kernel(0.7, x, y, spec);
            },
            spec, 1.0);
        w.abs(r.value, cplx(1.0));
    }
    return done("zolotarev-normalization", w, 1e-5);
}

VerifyCase c_zolotarev_semigroup(const QuadSpec& spec) {
    auto phi = make_phi(1.0, 1.0, 0);
    // tolerance target is 1e-5; the nested inner applications can run at
    // the relaxed operator spec without eating into that budget
    QuadSpec in = spec;
    in.rel_tol = std::max(spec.rel_tol, 1e-8);
    in.abs_tol = std::max(spec.abs_tol, 1e-10);
    HalfLineFunction mid;
    mid.eval = [&](double y) -> cplx { return apply_B(0.5, phi, y, in); };
    mid.sigma0 = 1.0;
    Worst w;
    for (double x : {0.5, 1.0, 2.0}) {
        cplx lhs = apply_B(0.5, mid, x, in);
        cplx rhs = apply_B(0.25, phi, x, spec);
        w.norm(lhs, rhs);
    }
    return done("zolotarev-semigroup", w, 1e-5);
}

VerifyCase c_zolotarev_commutation(const QuadSpec& spec) {
    auto phi = make_phi(1.0, 1.0, 0);
    QuadSpec in = spec;
    in.rel_tol = std::max(spec.rel_tol, 1e-8);
    in.abs_tol = std::max(spec.abs_tol, 1e-10);
    HalfLineFunction j1phi;
    j1phi.eval = [&](double y) -> cplx {
        return riemann_liouville(phi, 1.0, y, in);
    };
    j1phi.sigma0 = 2.0;
    HalfLineFunction bphi;
    bphi.eval = [&](double y) -> cplx { return apply_B(0.5, phi, y, in); };
    bphi.sigma0 = 1.0;
    Worst w;
    for (double x : {0.5, 1.0, 2.0}) {
        cplx lhs = apply_B(0.5, j1phi, x, in);
        cplx rhs = riemann_liouville(bphi, 0.5, x, in);
        w.norm(lhs, rhs);
    }
    return done("zolotarev-commutation", w, 1e-5);
}

VerifyCase c_oracle_zolotarev(const QuadSpec& spec) {
    auto phi = make_phi(1.0, 1.0, 0);
    HoloFunction F = laplace_image(phi, spec);
    HoloFunction G;
    G.cls = HoloClass::RapidDecay;
    G.eval = [F](cplx z, int k) -> cplx {
        if (k != 0) throw std::domain_error("no derivative slots");
        return F.eval(std::exp(0.5 * std::log(z)), 0);
    };
    HoloFunction Gm = memoized(std::move(G));
    Worst w;
    for (double x : {0.5, 1.0, 2.0}) {
        cplx got = apply_B(0.5, phi, x, spec);
        cplx want = inverse_laplace(Gm, x, 1.0, spec);
        w.norm(got, want);
    }
    return done("transform-oracle-zolotarev", w, 1e-5);
}

VerifyCase c_oracle_shift(const QuadSpec& spec) {
    auto phi = make_phi(1.0, 1.0, 0);
    SemigroupElementQ q{cplx(-1.5), 0.5, cplx(1.0)};
    cplx got = apply_Q(q, phi, 1.0, spec);
    HoloFunction F = laplace_image(phi, spec);
    HoloFunction G;
    G.cls = HoloClass::RapidDecay;
    G.eval = [F](cplx wv, int k) -> cplx {
        if (k != 0) throw std::domain_error("no derivative slots");
        return cpow(wv, cplx(-1.5)) *
               F.eval(std::exp(0.5 * std::log(wv)), 0);
    };
    cplx want = inverse_laplace(memoized(std::move(G)), 1.0, 1.0, spec);
    Worst w;
    w.norm(got, want);
    return done("transform-oracle-shift", w, 1e-5);
}

VerifyCase c_semigroup_apply(const QuadSpec& spec) {
    auto phi = make_phi(1.0, 1.0, 0);
    SemigroupElementQ q0{cplx(0.0), 0.5, cplx(1.0)};
    Worst w;
    w.norm(apply_Q(q0, phi, 1.0, spec), apply_B(0.5, phi, 1.0, spec));
    SemigroupElementQ qq = compose_q(q0, q0);
    cplx composed = apply_Q(qq, phi, 1.0, spec);
    HalfLineFunction inner;
    inner.eval = [&](double y) -> cplx {
        return apply_Q(q0, phi, y, spec);
    };
    inner.sigma0 = 1.0;
    cplx sequential = apply_Q(q0, inner, 1.0, spec);
    w.norm(composed, sequential);
    return done("semigroup-apply-composition", w, 1e-5);
}

const VerifyEntry kCases[] = {
    {"closed-form-anchor", "lfunc-symmetries", c_closed_form_anchor},
    {"cross-method-agreement", "lfunc-symmetries", c_cross_method},
    {"index-symmetry-reduction", "lfunc-symmetries", c_index_symmetry},
    {"index-contraction", "lfunc-symmetries", c_index_contraction},
    {"complementary-sum", "lfunc-symmetries", c_complementary_sum},
    {"erfc-anchor", "lfunc-symmetries", c_erfc_anchor},
    {"product-identity", "lfunc-symmetries", c_product_identity},
    {"levy-closed-form", "stable-normalization", c_levy_closed_form},
    {"subordinator-normalization", "stable-normalization",
     c_subordinator_norm},
    {"subordinator-laplace-symbol", "stable-normalization",
     c_subordinator_laplace},
    {"subordinator-scaling", "stable-normalization", c_subordinator_scaling},
    {"cosine-positivity", "stable-normalization", c_cosine_positivity},
    {"cosine-closed-forms", "stable-normalization", c_cosine_closed_forms},
    {"fractional-semigroup", "fraccalc-semigroup", c_fractional_semigroup},
    {"laplace-symbol-of-integration", "fraccalc-semigroup",
     c_laplace_symbol},
    {"derivative-semigroup", "fraccalc-semigroup", c_derivative_semigroup},
    {"conjugation-identity", "operator-conjugation", c_conjugation_identity},
    {"weighted-conjugation", "operator-conjugation", c_weighted_conjugation},
    {"substitution-dilation-exchange", "operator-conjugation",
     c_dilation_exchange},
    {"transform-oracle-substitution", "operator-conjugation",
     c_oracle_substitution},
    {"transform-oracle-weight", "operator-conjugation", c_oracle_weight},
    {"transform-oracle-phase", "operator-conjugation", c_oracle_phase},
    {"boundary-norm", "operator-conjugation", c_boundary_norm},
    {"group-fixed-compositions", "group-laws", c_group_fixed},
    {"group-random-laws", "group-laws", c_group_random},
    {"semigroup-closure", "group-laws", c_semigroup_closure},
    {"semigroup-associativity", "group-laws", c_semigroup_assoc},
    {"zolotarev-closed-form", "zolotarev", c_zolotarev_closed_form},
    {"zolotarev-normalization", "zolotarev", c_zolotarev_norm},
    {"zolotarev-semigroup", "zolotarev", c_zolotarev_semigroup},
    {"zolotarev-commutation", "zolotarev", c_zolotarev_commutation},
    {"transform-oracle-zolotarev", "zolotarev", c_oracle_zolotarev},
    {"transform-oracle-shift", "zolotarev", c_oracle_shift},
    {"semigroup-apply-composition", "zolotarev", c_semigroup_apply},
};

}  // namespace

std::span<const VerifyEntry> verify_cases() { return kCases; }

std::vector<std::string> verify_suites() {
    std::vector<std::string> out;
    for (const auto& e : kCases) {
        if (out.empty() || out.back() != e.suite) out.push_back(e.suite);
    }
    return out;
}

VerifyReport run_suite(std::string_view suite, const QuadSpec& spec) {
    VerifyReport rep;
    rep.suite = std::string(suite);
    bool all = suite == "all";
    bool known = all;
    for (const auto& e : kCases) {
        if (!all && suite != e.suite) continue;
        known = true;
        rep.cases.push_back(e.fn(spec));
    }
    if (!known)
        throw std::invalid_argument("unknown verification suite: " +
                                    std::string(suite));
    rep.overall = std::all_of(rep.cases.begin(), rep.cases.end(),
                              [](const VerifyCase& c) { return c.pass; });
    return rep;
}

VerifyCase run_case(std::string_view name, const QuadSpec& spec) {
    for (const auto& e : kCases) {
        if (name == e.name) return e.fn(spec);
    }
    throw std::invalid_argument("unknown verification case: " +
                                std::string(name));
}

}  // namespace lfrac
