#include "lfrac/halfline.hpp"

#include <algorithm>
#include <cmath>

namespace lfrac {
namespace {

// n-th central difference quotient, O(h^2)
cplx central_diff(const std::function<cplx(double)>& g, double x, double h,
                  int n) {
    switch (n) {
        case 1:
            return (g(x + h) - g(x - h)) / (2.0 * h);
        case 2:
            return (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
        case 3:
            return (g(x + 2 * h) - 2.0 * g(x + h) + 2.0 * g(x - h) -
                    g(x - 2 * h)) /
                   (2.0 * h * h * h);
        case 4:
            return (g(x + 2 * h) - 4.0 * g(x + h) + 6.0 * g(x) -
                    4.0 * g(x - h) + g(x - 2 * h)) /
                   (h * h * h * h);
        default:
            throw std::domain_error("derivative order beyond 4 not supported");
    }
}

// two Richardson levels on the O(h^2) quotient
cplx richardson_deriv(const std::function<cplx(double)>& g, double x, double h,
                      int n) {
    cplx d1 = central_diff(g, x, h, n);
    cplx d2 = central_diff(g, x, h / 2.0, n);
    cplx d4 = central_diff(g, x, h / 4.0, n);
    cplx r1 = (4.0 * d2 - d1) / 3.0;
    cplx r2 = (4.0 * d4 - d2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

// Laplace integral of f at z. When an analytic extension is available and z
// sits near the imaginary axis, integrate along the ray arg x = -arg z
// (pulled just inside the sector of analyticity): there exp(-zx) decays
// without oscillating, so boundary values far up the line come out clean
// instead of drowning in cancellation noise. The linear rescaling keeps the
// decay length of order one so the adaptive rule sees the whole feature.
QuadResult laplace_quad(const HalfLineFunction& f, cplx z, int k,
                        const QuadSpec& spec) {
    double sig = std::min(f.sigma0 + k, 1.0);
    double az = std::arg(z);
    if (f.eval_c && f.sector > 0.0 && std::abs(az) > 0.2 &&
        std::abs(az) < 2.2) {
        double th = (az > 0.0 ? 1.0 : -1.0) *
                    std::min(0.98 * f.sector, std::abs(az));
        cplx eth = std::polar(1.0, -th);
        double lam = std::max(1.0, (z * eth).real());
        QuadResult r = integrate_semi_infinite(
            [&](double u) -> cplx {
                cplx s = eth * (u / lam);
                cplx v = f.eval_c(s) * std::exp(-z * s);
                return k > 0 ? std::pow(-s, k) * v : v;
            },
            spec, sig);
        r.value *= eth / lam;
        r.err_est /= lam;
        return r;
    }
    QuadResult r = integrate_semi_infinite(
        [&](double x) -> cplx {
            cplx v = f.eval(x) * std::exp(-z * x);
            return k > 0 ? std::pow(-x, k) * v : v;
        },
        spec, sig);
    return r;
}

}  // namespace

HalfLineFunction make_phi(double c, double d, int k) {
    if (!(c > 0.0) || !(d > 0.0) || k < 0)
        throw std::invalid_argument("make_phi: c, d > 0 and k >= 0");
    HalfLineFunction f;
    f.eval = [c, d, k](double x) -> cplx {
        if (x <= 0.0) return 0.0;
        return std::pow(x, k) * std::exp(-c / x - d * x);
    };
    f.decay = DecayClass::SchwartzPlus;
    f.sigma0 = 1.0;
    f.eval_c = [c, d, k](cplx s) -> cplx {
        return std::pow(s, k) * std::exp(-c / s - d * s);
    };
    f.sector = 1.55;
    f.exp_rate = d;
    return f;
}

HalfLineFunction make_psi(int k, double d) {
    if (!(d > 0.0) || k < 0)
        throw std::invalid_argument("make_psi: d > 0 and k >= 0");
    HalfLineFunction f;
    f.eval = [k, d](double x) -> cplx {
        if (x < 0.0) return 0.0;
        return std::pow(x, k) * std::exp(-d * x);
    };
    f.decay = DecayClass::SubExponential;
    f.sigma0 = k + 1.0;
    f.eval_c = [k, d](cplx s) -> cplx {
        return std::pow(s, k) * std::exp(-d * s);
    };
    f.sector = 1.55;
    f.exp_rate = d;
    return f;
}

cplx laplace(const HalfLineFunction& f, cplx z, const QuadSpec& spec) {
    bool boundary_ok = f.decay == DecayClass::SchwartzPlus;
    if (!(z.real() > 0.0) && !(boundary_ok && z.real() >= 0.0))
        throw std::domain_error("laplace: Re z > 0 required for this class");
    QuadResult r = laplace_quad(f, z, 0, spec);
    if (!r.converged)
        throw integrand_error("laplace: quadrature did not converge");
    return r.value;
}

cplx weighted_laplace(const HalfLineFunction& f, cplx z, double mu,
                      const QuadSpec& spec) {
    if (!(mu > 0.0)) throw std::domain_error("weighted_laplace: mu > 0");
    HalfLineFunction g = f;
    g.eval = [&f, mu](double x) -> cplx {
        if (x <= 0.0) return 0.0;
        return f.eval(x) * std::pow(x, mu - 1.0);
    };
    if (f.eval_c) {
        auto base = f.eval_c;
        g.eval_c = [base, mu](cplx s) -> cplx {
            return base(s) * std::pow(s, mu - 1.0);
        };
    }
    g.sigma0 = f.sigma0 + mu - 1.0;
    return laplace(g, z, spec) / gamma_complex(cplx(mu));
}

HoloFunction laplace_image(const HalfLineFunction& f, const QuadSpec& spec) {
    HoloFunction F;
    F.cls = f.decay == DecayClass::SchwartzPlus ? HoloClass::RapidDecay
                                                : HoloClass::PolyDecay;
    F.left_margin = f.exp_rate;
    F.eval = [f, spec](cplx z, int k) -> cplx {
        // no convergence throw here: far up the boundary line the integral
        // sits at the noise floor, which is fine for the consumers
        // (tails of contour integrals)
        return laplace_quad(f, z, k, spec).value;
    };
    return F;
}

cplx inverse_laplace(const HoloFunction& F, double x, double a,
                     const QuadSpec& spec) {
    if (!(x > 0.0)) throw std::domain_error("inverse_laplace: x > 0");
    if (F.cls == HoloClass::RapidDecay) {
        QuadResult r = integrate_vertical_line(
            [&](cplx p) { return std::exp(p * x) * F.eval(p, 0); }, a, spec);
        return r.value;
    }
    // polynomial decay: two integrations by parts make the tail absolutely
    // convergent: (1/2 pi i) int e^{px} F = x^{-2} * same of F''
    QuadResult r = integrate_vertical_line(
        [&](cplx p) { return std::exp(p * x) * F.eval(p, 2); }, a, spec);
    return r.value / (x * x);
}

cplx mellin(const HalfLineFunction& f, cplx lambda, const QuadSpec& spec) {
    double sig = f.decay == DecayClass::SchwartzPlus
                     ? 1.0
                     : lambda.real() + f.sigma0 - 1.0;
    if (!(sig > 0.0))
        throw std::domain_error("mellin: integrand not integrable at 0");
    QuadResult r = integrate_semi_infinite(
        [&](double x) -> cplx {
            return std::exp((lambda - 1.0) * std::log(x)) * f.eval(x);
        },
        spec, std::min(sig, 1.0));
    if (!r.converged)
        throw integrand_error("mellin: quadrature did not converge");
    return r.value;
}

cplx riemann_liouville(const HalfLineFunction& f, double r, double x,
                       const QuadSpec& spec) {
    if (!(x > 0.0)) throw std::domain_error("riemann_liouville: x > 0");
    if (r > 0.0 && r < 1.0) {
        // remove the (x-y)^{r-1} endpoint singularity exactly
        QuadResult q = integrate_finite(
            [&](double u) { return f.eval(x - std::pow(u, 1.0 / r)); }, 0.0,
            std::pow(x, r), spec);
        return q.value / gamma_complex(cplx(r + 1.0)).real();
    }
    if (r >= 1.0) {
        QuadResult q = integrate_finite(
            [&](double y) {
                return f.eval(y) * std::pow(x - y, r - 1.0);
            },
            0.0, x, spec);
        return q.value / gamma_complex(cplx(r)).real();
    }
    // r <= 0: differentiate J_{r+n} with the smallest n making r + n > 0
    int n = static_cast<int>(std::floor(-r)) + 1;
    if (r + n <= 0.0) ++n;
    double h = 0.02 * x;
    return richardson_deriv(
        [&](double t) { return riemann_liouville(f, r + n, t, spec); }, x, h,
        n);
}

}  // namespace lfrac
