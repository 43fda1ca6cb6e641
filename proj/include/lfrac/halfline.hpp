// Function spaces on the half line: concrete test-function families,
// Laplace / Mellin transforms and their inversion, and Riemann-Liouville
// fractional integration.
#pragma once

#include "lfrac/quadrature.hpp"

namespace lfrac {

enum class DecayClass { SchwartzPlus, SubExponential, Generic };

struct HalfLineFunction {
    std::function<cplx(double)> eval;
    DecayClass decay = DecayClass::Generic;
    double sigma0 = 1.0;  // behaviour f ~ x^{sigma0 - 1} near 0

    // optional analytic extension into the sector |arg x| < sector; when
    // present, Laplace integrals at high-|arg| z run on a rotated ray
    // instead of fighting the oscillation on the real axis
    std::function<cplx(cplx)> eval_c;
    double sector = 0.0;

    // exponential decay rate d when f ~ e^{-dx}; lets the Laplace image
    // be continued a little to the left of the imaginary axis
    double exp_rate = 0.0;
};

enum class HoloClass { RapidDecay, PolyDecay, Generic };

/// Holomorphic function on a right half plane given together with its
/// derivatives: eval(z, k) is the k-th derivative at z.  Operator code
/// composes these without numerical differentiation.
struct HoloFunction {
    std::function<cplx(cplx, int)> eval;
    HoloClass cls = HoloClass::Generic;

    // how far left of the imaginary axis the function stays analytic with
    // usable decay (0 = right half plane only); contour code may shift
    // boundary integrals to Re z = -left_margin/2 when this is positive
    double left_margin = 0.0;

    cplx operator()(cplx z) const { return eval(z, 0); }
};

/// x^k exp(-c/x - d x): vanishes with all derivatives at 0, rapid decay.
HalfLineFunction make_phi(double c, double d, int k);

/// x^k exp(-d x): closed-form Laplace image Gamma(k+1) (d+z)^{-k-1}.
HalfLineFunction make_psi(int k, double d);

/// int_0^inf f(x) e^{-zx} dx.  Re z > 0 (>= 0 for SchwartzPlus f).
cplx laplace(const HalfLineFunction& f, cplx z, const QuadSpec& spec);

/// (1/Gamma(mu)) int_0^inf f(x) e^{-zx} x^{mu-1} dx; mu = 1 is `laplace`.
cplx weighted_laplace(const HalfLineFunction& f, cplx z, double mu,
                      const QuadSpec& spec);

/// The Laplace image of f as a HoloFunction:
/// eval(z, k) = int_0^inf (-x)^k f(x) e^{-zx} dx.
HoloFunction laplace_image(const HalfLineFunction& f, const QuadSpec& spec);

/// Bromwich integral (1/2*pi*i) int e^{px} F(p) dp on Re p = a.  Two
/// integrations by parts (using the derivative slots of F) make the tail
/// absolutely convergent before quadrature.
cplx inverse_laplace(const HoloFunction& F, double x, double a,
                     const QuadSpec& spec);

/// Mellin transform int_0^inf x^{lambda-1} f(x) dx.
cplx mellin(const HalfLineFunction& f, cplx lambda, const QuadSpec& spec);

/// Riemann-Liouville J_r f(x).  r > 0 by the integral
/// (1/Gamma(r)) int_0^x (x-y)^{r-1} f(y) dy (endpoint singularity removed by
/// substitution for r < 1); r <= 0 by differentiating J_{r+n} n times.
cplx riemann_liouville(const HalfLineFunction& f, double r, double x,
                       const QuadSpec& spec);

}  // namespace lfrac
