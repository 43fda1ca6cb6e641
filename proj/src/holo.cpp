#include "lfrac/holo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <tuple>

namespace lfrac {
namespace {

constexpr double kPi = 3.14159265358979323846;

bool near_integer(cplx h, long& n) {
    if (std::abs(h.imag()) > 1e-13) return false;
    double r = std::round(h.real());
    if (std::abs(h.real() - r) > 1e-12) return false;
    n = static_cast<long>(r);
    return true;
}

cplx cpow(cplx base, cplx e) { return std::exp(e * std::log(base)); }

// Contour line for boundary integrals: shifted slightly left when the
// function is known analytic there (cheap, keeps kernel phases tame),
// otherwise into the half plane by a fixed fraction of Re v.
double contour_abscissa(const HoloFunction& F, double re_v) {
    if (F.left_margin > 0.0) return -std::min(0.2, 0.5 * F.left_margin);
    return std::min(0.35, 0.5 * std::max(re_v, 0.0));
}

// Direct quadrature of int_0^inf x^{beta-1} exp(-u x^alpha - v x) dx for
// 0 < alpha < 1 when the special-function route is out of sector.  For
// oscillatory v (phase near +-pi/2) the contour runs along [0, X], an arc
// of radius X, and a ray bent by psi into the decaying half plane; X and
// psi are chosen so the linear term dominates the subexponential one on
// the ray and magnitudes stay O(1).
cplx kernel_direct(double alpha, cplx beta, cplx u, cplx v,
                   const QuadSpec& spec) {
    double sig = std::min(beta.real(), 1.0);
    double av = std::arg(v);
    auto point = [&](cplx x) -> cplx {
        return std::exp((beta - 1.0) * std::log(x) - u * std::exp(alpha * std::log(x)) -
                        v * x);
    };
    if (std::abs(av) <= 1.0) {
        QuadResult r = integrate_semi_infinite(
            [&](double y) -> cplx {
                double x = std::pow(y, 1.0 / sig);
                return point(cplx(x)) * (1.0 / sig) *
                       std::pow(y, 1.0 / sig - 1.0);
            },
            spec, 1.0);
        if (!r.converged)
            throw integrand_error("laplace_kernel: quadrature did not converge");
        return r.value;
    }
    double au = std::abs(u);
    double X = std::max(1.0, std::pow(3.0 * au / std::abs(v), 1.0 / (1.0 - alpha)));
    double psi = std::min({0.4, std::abs(av),
                           1.0 / (alpha * au * std::pow(X, alpha) + 1.0)});
    if (std::abs(av) - psi >= 0.5 * kPi - 0.02)
        throw integrand_error("laplace_kernel: phase out of evaluable range");
    double xi = av > 0.0 ? 1.0 : -1.0;
    QuadResult head = integrate_finite(
        [&](double y) -> cplx {
            double x = std::pow(y, 1.0 / sig);
            return point(cplx(x)) * (1.0 / sig) * std::pow(y, 1.0 / sig - 1.0);
        },
        0.0, std::pow(X, sig), spec);
    QuadResult arc = integrate_finite(
        [&](double th) -> cplx {
            cplx x = std::polar(X, -xi * th);
            return point(x) * cplx(0.0, -xi) * x;
        },
        0.0, psi, spec);
    cplx dir = std::polar(1.0, -xi * psi);
    QuadResult ray = integrate_semi_infinite(
        [&](double s) -> cplx { return point((X + s) * dir) * dir; }, spec,
        1.0);
    if (!head.converged || !ray.converged)
        throw integrand_error("laplace_kernel: quadrature did not converge");
    return head.value + arc.value + ray.value;
}

// Closed form for alpha = 1/2 and half-integer beta = m/2 via the scaled
// complementary error function with q = u/(2 sqrt v):
//   K(1/2) = sqrt(pi/v) erfcx(q),  K(1) = (1 - sqrt(pi) q erfcx(q))/v,
//   v K(b+1) = b K(b) - (u/2) K(b+1/2).
// Exact for every phase, which covers the band near |arg u - arg v / 2| =
// 3 pi / 4 where neither the series route nor a bent ray works.
cplx kernel_half(cplx u, cplx v, long m) {
    cplx sqv = std::exp(0.5 * std::log(v));
    cplx q = u / (2.0 * sqv);
    const double spi = std::sqrt(kPi);
    cplx e = erfcx_complex(q);
    cplx k_half = spi / sqv * e;
    cplx k_one;
    if (q.real() > 0.0 && std::abs(q) > 30.0) {
        // 1 - sqrt(pi) q erfcx(q) loses ~ 2 q^2 eps to cancellation; sum
        // the asymptotic combination directly instead
        cplx s = 0.0, term = 1.0;
        cplx iq2 = 1.0 / (2.0 * q * q);
        for (int j = 1; j <= 8; ++j) {
            term *= -static_cast<double>(2 * j - 1) * iq2;
            s -= term;
        }
        k_one = s / v;
    } else {
        k_one = (1.0 - spi * q * e) / v;
    }
    if (m == 1) return k_half;
    if (m == 2) return k_one;
    cplx km = k_half, km1 = k_one;  // K(j/2), K((j+1)/2)
    for (long j = 1; j + 2 <= m; ++j) {
        cplx next = (0.5 * j * km - 0.5 * u * km1) / v;
        km = km1;
        km1 = next;
    }
    return km1;
}

bool half_integer(cplx beta, long& m) {
    if (std::abs(beta.imag()) > 1e-13) return false;
    double tb = 2.0 * beta.real();
    double r = std::round(tb);
    if (std::abs(tb - r) > 1e-12 || r < 1.0) return false;
    m = static_cast<long>(r);
    return true;
}

}  // namespace

cplx laplace_kernel(double alpha, cplx beta, cplx u, cplx v,
                    const QuadSpec& spec) {
    if (alpha == 0.0)
        throw std::domain_error("laplace_kernel: alpha must be nonzero");
    if (beta.real() <= 0.0)
        throw std::domain_error("laplace_kernel: Re beta > 0 required");
    if (std::abs(u) == 0.0) {
        if (std::abs(v) == 0.0)
            throw std::domain_error("laplace_kernel: u = v = 0");
        return gamma_complex(beta) * cpow(v, -beta);
    }
    if (alpha == 1.0) return gamma_complex(beta) * cpow(u + v, -beta);
    if (alpha > 1.0)
        return laplace_kernel(1.0 / alpha, beta / alpha, v, u, spec) / alpha;
    if (std::abs(v) == 0.0) {
        if (!(u.real() > 0.0))
            throw std::domain_error("laplace_kernel: divergent at v = 0");
        return gamma_complex(beta / alpha) * cpow(u, -beta / alpha) / alpha;
    }
    // argument of the special function, with the phase tracked exactly
    // rather than wrapped by complex division
    double ang = std::arg(u) - alpha * std::arg(v);
    cplx logw(std::log(std::abs(u)) - alpha * std::log(std::abs(v)), ang);
    if (alpha > 0.0) {
        long m = 0;
        if (alpha == 0.5 && half_integer(beta, m)) return kernel_half(u, v, m);
        double sector = 0.5 * (1.0 + alpha) * kPi;
        bool in_series = std::exp(logw.real()) <= series_radius(alpha);
        bool in_sector = std::abs(ang) <= 0.995 * sector - 0.01;
        if (in_series || in_sector) {
            try {
                EvalResult r = eval_log({alpha, beta}, logw, spec);
                return cpow(v, -beta) * r.value;
            } catch (const std::exception&) {
                // fall through to the direct contour
            }
        }
        return kernel_direct(alpha, beta, u, v, spec);
    }
    // alpha < 0: the series pair converges for every argument
    EvalResult r = eval_log({alpha, beta}, logw, spec);
    return cpow(v, -beta) * r.value;
}

void GroupElementG::validate() const {
    if (alpha == 0.0) throw std::domain_error("group element: alpha != 0");
    if (!(a > 0.0)) throw std::domain_error("group element: a > 0");
    if (std::abs(lambda) == 0.0)
        throw std::domain_error("group element: lambda != 0");
}

GroupElementG identity_g() { return GroupElementG{}; }

GroupElementG compose_g(const GroupElementG& e1, const GroupElementG& e2) {
    e1.validate();
    e2.validate();
    GroupElementG r;
    r.h = e1.h + e2.h * e1.alpha;
    r.alpha = e1.alpha * e2.alpha;
    r.a = e2.a * std::pow(e1.a, e2.alpha);
    r.lambda = e1.lambda * e2.lambda * cpow(cplx(e1.a), e2.h);
    return r;
}

GroupElementG inverse_g(const GroupElementG& e) {
    e.validate();
    GroupElementG r;
    r.h = -e.h / e.alpha;
    r.alpha = 1.0 / e.alpha;
    r.a = std::pow(e.a, -1.0 / e.alpha);
    r.lambda = cpow(cplx(e.a), e.h / e.alpha) / e.lambda;
    return r;
}

void SemigroupElementQ::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::domain_error("semigroup element: alpha in (0,1]");
    if (domain_margin() < -1e-12)
        throw std::domain_error("semigroup element: |arg a| + alpha*pi/2 < pi/2");
}

double SemigroupElementQ::domain_margin() const {
    return 0.5 * kPi - std::abs(std::arg(a)) - 0.5 * alpha * kPi;
}

SemigroupElementQ compose_q(const SemigroupElementQ& e1,
                            const SemigroupElementQ& e2) {
    e1.validate();
    e2.validate();
    SemigroupElementQ r;
    r.theta = e1.theta + e2.theta * e1.alpha;
    r.alpha = e1.alpha * e2.alpha;
    r.a = e2.a * cpow(e1.a, cplx(e2.alpha));
    r.prefactor = e1.prefactor * e2.prefactor * cpow(e1.a, e2.theta);
    r.validate();
    return r;
}

cplx indefinite_int(const HoloFunction& F, cplx z,
                    const OperatorContext& ctx) {
    // antiderivative normalized to vanish at infinity, taken along the
    // horizontal ray z + s where the image decays without oscillating
    QuadResult r = integrate_semi_infinite(
        [&](double s) -> cplx { return F.eval(z + s, 0); }, ctx.spec,
        std::max(1.0, std::abs(z)));
    if (!r.converged)
        throw integrand_error("indefinite_int: contour did not converge");
    return -r.value;
}

cplx frac_diff(const HoloFunction& F, cplx h, cplx z,
               const OperatorContext& ctx) {
    long n = 0;
    if (near_integer(h, n)) {
        if (n == 0) return F.eval(z, 0);
        if (n > 0) return (n % 2 ? -1.0 : 1.0) * F.eval(z, static_cast<int>(n));
        HoloFunction cur = F;
        for (long i = 0; i < -n; ++i) {
            HoloFunction prev = cur;
            OperatorContext c2 = ctx;
            cur.eval = [prev, c2](cplx zz, int k) -> cplx {
                if (k != 0)
                    throw std::domain_error(
                        "frac_diff: derivative of an integrated chain");
                return indefinite_int(prev, zz, c2);
            };
            cur.left_margin = 0.0;
        }
        return cur.eval(z, 0);
    }
    // contour strictly left of z but inside the analyticity strip
    double lo = -0.95 * F.left_margin;
    double c = contour_abscissa(F, z.real());
    if (c > z.real() - 0.1) c = std::max(lo, z.real() - 0.2);
    if (!(c < z.real()))
        throw std::domain_error("frac_diff: no contour left of z");
    QuadResult q = integrate_real_line(
        [&](double t) -> cplx {
            cplx u(c, t);
            return F.eval(u, 0) * std::exp(-(h + 1.0) * std::log(z - u));
        },
        ctx.spec, 0.0);
    if (!q.converged)
        throw integrand_error("frac_diff: contour integral did not converge");
    return gamma_complex(h + 1.0) * q.value / (2.0 * kPi);
}

namespace {

// image of f(ax) under the substitution rule, with derivative slots
HoloFunction dil_image(double a, const HoloFunction& F) {
    HoloFunction G;
    G.cls = F.cls;
    G.left_margin = a * F.left_margin;
    G.eval = [a, F](cplx z, int k) -> cplx {
        return std::pow(a, -1.0 - k) * F.eval(z / a, k);
    };
    return G;
}

// Whether the one-level kernel route stays inside the evaluable phase
// range for every contour point when the target is z.  Beyond it the
// weight/substitution operator is factored through the substitution
// operator whose kernel has a closed form on the whole range.
bool r_kernel_ok(cplx h, double alpha, cplx z) {
    if (alpha == 1.0) return true;
    double ae = alpha > 1.0 ? 1.0 / alpha : alpha;
    double sector = 0.5 * (1.0 + ae) * kPi;
    double angmax = alpha > 1.0
                        ? std::abs(std::arg(z)) + ae * 0.5 * kPi
                        : 0.5 * kPi + alpha * std::abs(std::arg(z));
    if (angmax <= 0.995 * sector - 0.02) return true;
    long m = 0;
    cplx bswap = alpha > 1.0 ? (h + 1.0) / alpha : h + 1.0;
    return ae == 0.5 && half_integer(bswap, m);
}

// middle stage of the factorization: the weight becomes a fractional
// derivative of order h/alpha applied before the substitution
HoloFunction r_mid_stage(cplx h, double alpha, double a,
                         const HoloFunction& F, const OperatorContext& ctx) {
    HoloFunction dil = dil_image(a, F);
    HoloFunction mid;
    mid.cls = F.cls;
    mid.left_margin = dil.left_margin;
    cplx hp = h / alpha;
    OperatorContext c2 = ctx;
    mid.eval = [dil, hp, c2](cplx zz, int k) -> cplx {
        double sgn = k % 2 ? -1.0 : 1.0;
        return sgn * frac_diff(dil, hp + cplx(k), zz, c2);
    };
    return mid;
}


// (1/2 pi) int kernel(u) F(u) |du| along Re u = c, u = c + it.
cplx boundary_apply(const HoloFunction& F, double c,
                    const std::function<cplx(cplx)>& kernel,
                    const QuadSpec& spec) {
    QuadResult q = integrate_real_line(
        [&](double t) -> cplx {
            cplx u(c, t);
            return kernel(u) * F.eval(u, 0);
        },
        spec, 0.0);
    if (!q.converged)
        throw integrand_error("operator boundary integral did not converge");
    return q.value / (2.0 * kPi);
}

// Jump of the alpha > 1 kernel K_alpha(w, v) across its branch cut on the
// negative real w-axis: K(s e^{i pi}, v) - K(s e^{-i pi}, v), via the
// index swap with the argument log tracked explicitly.
cplx kernel_cut_jump(double alpha, cplx beta, double s, cplx v,
                     const QuadSpec& spec) {
    cplx bo = beta / alpha;
    cplx lv = std::log(v);
    cplx out = 0.0;
    for (double sgn : {1.0, -1.0}) {
        cplx lu(std::log(s), sgn * kPi);
        out += sgn * std::exp(-bo * lu) *
               eval_log({1.0 / alpha, bo}, lv - lu / alpha, spec).value;
    }
    return out / alpha;
}

// For alpha > 1 the kernel's defining integral only converges for
// Re u <= 0; a contour at c > 0 crosses the kernel cut on (0, c] and the
// principal-branch line integral is off by the collapsed loop around that
// segment.  Returns the loop term to subtract, in the same normalization
// as boundary_apply.  `a` scales the kernel argument (-u a).
cplx cut_loop_term(double alpha, cplx beta, double a, cplx v,
                   const HoloFunction& F, double c, const QuadSpec& spec) {
    if (!(alpha > 1.0) || !(c > 0.0)) return 0.0;
    QuadResult q = integrate_finite(
        [&](double s) -> cplx {
            cplx j = kernel_cut_jump(alpha, beta, s * a, v, spec);
            // the jump vanishes to all orders at the branch point; skip the
            // operand (whose own quadrature degenerates as s -> 0) once the
            // jump is below the noise floor of this integral
            if (std::abs(j) < spec.abs_tol) return cplx(0.0);
            return j * F.eval(cplx(s), 0);
        },
        0.0, c, spec);
    if (!q.converged)
        throw integrand_error("kernel cut loop did not converge");
    return q.value / (2.0 * kPi * cplx(0.0, 1.0));
}

}  // namespace

cplx apply_A(double alpha, const HoloFunction& F, cplx v,
             const OperatorContext& ctx, int deriv) {
    if (!(alpha > 0.0)) throw std::domain_error("apply_A: alpha > 0");
    if (!(v.real() >= 0.0) || std::abs(v) == 0.0)
        throw std::domain_error("apply_A: Re v >= 0, v != 0");
    double sign = deriv % 2 ? -1.0 : 1.0;
    double c = contour_abscissa(F, v.real());
    cplx line = boundary_apply(
        F, c,
        [&](cplx u) {
            return laplace_kernel(alpha, cplx(1.0 + deriv), -u, v, ctx.spec);
        },
        ctx.spec);
    line -= cut_loop_term(alpha, cplx(1.0 + deriv), 1.0, v, F, c, ctx.spec);
    return sign * line;
}

cplx apply_R(cplx h, double alpha, double a, const HoloFunction& F, cplx z,
             const OperatorContext& ctx, int deriv) {
    if (alpha == 0.0) throw std::domain_error("apply_R: alpha != 0");
    if (!(a > 0.0)) throw std::domain_error("apply_R: a > 0");
    if (alpha == 1.0) {
        // pure weight and dilation: a fractional derivative of the
        // dilated image, exact for every order
        double sgn = deriv % 2 ? -1.0 : 1.0;
        return sgn * frac_diff(dil_image(a, F), h + cplx(deriv), z, ctx);
    }
    bool deep = h.real() <= -1.0;
    if (deep && F.cls != HoloClass::RapidDecay) {
        if (deriv != 0)
            throw std::domain_error("apply_R: no derivative after shift");
        // x^h = x^{-n} x^{h+n}; x^{-n} acts as (-1)^n iterated integration
        int n = static_cast<int>(std::floor(-h.real()));
        HoloFunction shifted = r_image(h + cplx(n), alpha, a, F, ctx);
        double sgn = n % 2 ? -1.0 : 1.0;
        return sgn * frac_diff(shifted, cplx(-n), z, ctx);
    }
    if (deep || !r_kernel_ok(h, alpha, z))
        return apply_A(alpha, r_mid_stage(h, alpha, a, F, ctx), z, ctx,
                       deriv);
    double sign = deriv % 2 ? -1.0 : 1.0;
    double c = contour_abscissa(F, z.real());
    cplx line = boundary_apply(
        F, c,
        [&](cplx u) {
            return laplace_kernel(alpha, h + 1.0 + cplx(deriv), -u * a, z,
                                  ctx.spec);
        },
        ctx.spec);
    line -= cut_loop_term(alpha, h + 1.0 + cplx(deriv), a, z, F, c, ctx.spec);
    return sign * line;
}

cplx apply_T(double beta, double s, const HoloFunction& F, cplx z,
             const OperatorContext& ctx, int deriv) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::domain_error("apply_T: beta in (0,1)");
    double sign = deriv % 2 ? -1.0 : 1.0;
    double c = contour_abscissa(F, z.real());
    if (c >= z.real()) c = 0.5 * z.real();
    return sign * boundary_apply(
                      F, c,
                      [&](cplx u) {
                          return laplace_kernel(beta, cplx(1.0 + deriv),
                                                cplx(0.0, -s), z - u,
                                                ctx.spec);
                      },
                      ctx.spec);
}

HoloFunction a_image(double alpha, HoloFunction F, OperatorContext ctx) {
    HoloFunction G;
    G.cls = F.cls;
    G.eval = [alpha, F, ctx](cplx z, int k) -> cplx {
        return apply_A(alpha, F, z, ctx, k);
    };
    return G;
}

HoloFunction r_image(cplx h, double alpha, double a, HoloFunction F,
                     OperatorContext ctx) {
    HoloFunction G;
    G.cls = F.cls;
    if (alpha == 1.0) G.left_margin = a * F.left_margin;
    if (alpha != 1.0 &&
        (h.real() > -1.0 || F.cls == HoloClass::RapidDecay)) {
        // one shared middle stage so boundary evaluations at many targets
        // reuse its cache
        HoloFunction mid = memoized(r_mid_stage(h, alpha, a, F, ctx));
        bool deep = h.real() <= -1.0;
        G.eval = [h, alpha, a, F, mid, ctx, deep](cplx z, int k) -> cplx {
            if (!deep && r_kernel_ok(h, alpha, z))
                return apply_R(h, alpha, a, F, z, ctx, k);
            return apply_A(alpha, mid, z, ctx, k);
        };
        return G;
    }
    G.eval = [h, alpha, a, F, ctx](cplx z, int k) -> cplx {
        return apply_R(h, alpha, a, F, z, ctx, k);
    };
    return G;
}

HoloFunction t_image(double beta, double s, HoloFunction F,
                     OperatorContext ctx) {
    HoloFunction G;
    G.cls = F.cls;
    G.left_margin = F.left_margin;  // unimodular weight keeps the rate
    G.eval = [beta, s, F, ctx](cplx z, int k) -> cplx {
        return apply_T(beta, s, F, z, ctx, k);
    };
    return G;
}

HoloFunction memoized(HoloFunction F) {
    using Key = std::tuple<std::uint64_t, std::uint64_t, int>;
    auto cache = std::make_shared<std::map<Key, cplx>>();
    HoloFunction G = F;
    G.eval = [F, cache](cplx z, int k) -> cplx {
        std::uint64_t re, im;
        double zr = z.real(), zi = z.imag();
        std::memcpy(&re, &zr, 8);
        std::memcpy(&im, &zi, 8);
        Key key{re, im, k};
        auto it = cache->find(key);
        if (it != cache->end()) return it->second;
        cplx v = F.eval(z, k);
        (*cache)[key] = v;
        return v;
    };
    return G;
}

double zolotarev_kernel(double alpha, double x, double y,
                        const QuadSpec& spec) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("zolotarev_kernel: alpha in (0,1)");
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("zolotarev_kernel: x, y > 0");
    cplx logz(-alpha * std::log(x) + std::log(y), kPi * alpha);
    EvalResult r = eval_log({alpha, cplx(1.0)}, logz, spec);
    return -r.value.imag() / (kPi * x);
}

cplx apply_B(double alpha, const HalfLineFunction& f, double x,
             const QuadSpec& spec) {
    QuadResult r = integrate_semi_infinite(
        [&](double y) -> cplx {
            return zolotarev_kernel(alpha, x, y, spec) * f.eval(y);
        },
        spec, 1.0);
    if (!r.converged)
        throw integrand_error("apply_B: quadrature did not converge");
    return r.value;
}

cplx apply_Q(const SemigroupElementQ& e, const HalfLineFunction& f, double x,
             const QuadSpec& spec) {
    e.validate();
    if (std::abs(e.theta.imag()) > 1e-12)
        throw std::domain_error("apply_Q: complex theta not supported");
    double th = e.theta.real();
    if (th <= -1.0 + 1e-12) {
        int n = static_cast<int>(std::ceil(-th));
        SemigroupElementQ shifted = e;
        shifted.theta = e.theta + cplx(n);
        shifted.prefactor = cplx(1.0);
        HalfLineFunction g;
        g.eval = [shifted, &f, &spec](double xx) -> cplx {
            return apply_Q(shifted, f, xx, spec);
        };
        g.sigma0 = 1.0;
        return e.prefactor * riemann_liouville(g, n, x, spec);
    }
    QuadResult r = integrate_semi_infinite(
        [&](double y) -> cplx {
            QuadResult k =
                oscillatory_pair(th + 1.0, e.alpha, e.a * y, x, spec);
            return k.value / kPi * f.eval(y);
        },
        spec, 1.0);
    if (!r.converged)
        throw integrand_error("apply_Q: quadrature did not converge");
    return e.prefactor * r.value;
}

}  // namespace lfrac
