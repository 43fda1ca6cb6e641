// Operator algebra on holomorphic functions over the right half plane:
// fractional differentiation and indefinite integration, the kernel
// operators tying the half-plane picture to the half line, and exact
// symbolic composition for the dilation group and its one-sided semigroup.
#pragma once

#include "lfrac/halfline.hpp"
#include "lfrac/lfunc.hpp"
#include "lfrac/quadrature.hpp"

namespace lfrac {

/// lambda * x^h f(a x^alpha) as a parameter tuple; closed under
/// composition with exact arithmetic on the parameters.
struct GroupElementG {
    cplx lambda{1.0, 0.0};
    cplx h{0.0, 0.0};
    double alpha = 1.0;
    double a = 1.0;

    void validate() const;  // alpha != 0, a > 0, lambda != 0
};

GroupElementG identity_g();

/// compose_g(e1, e2): apply e2 first, then e1.
/// Parameters: (g,beta,b)*(h,alpha,a) = b^h * (g + h*beta, alpha*beta, a*b^alpha).
GroupElementG compose_g(const GroupElementG& e1, const GroupElementG& e2);

/// Exact inverse: compose_g(e, inverse_g(e)) = identity.
GroupElementG inverse_g(const GroupElementG& e);

/// Transform-side element w^theta F(a w^alpha); valid parameter domain
/// requires |arg a| + alpha*pi/2 < pi/2 so the right half plane maps
/// into itself under z -> a z^alpha.
struct SemigroupElementQ {
    cplx theta{0.0, 0.0};
    double alpha = 0.5;  // in (0,1)
    cplx a{1.0, 0.0};
    cplx prefactor{1.0, 0.0};  // scalar accumulated by composition

    void validate() const;
    double domain_margin() const;  // pi/2 - |arg a| - alpha*pi/2
};

/// compose_q(e1, e2): apply e2 first, then e1.  Closure of the parameter
/// domain is a theorem; validate() on the result enforces it.
SemigroupElementQ compose_q(const SemigroupElementQ& e1,
                            const SemigroupElementQ& e2);

/// Hilbert-scale index and quadrature policy for operator applications.
/// mu = 1 (Hardy boundary form) is the only value used by the boundary
/// integrals; other mu are for kernel inspection only.
struct OperatorContext {
    double mu = 1.0;
    QuadSpec spec = operator_spec();
};

/// int_0^inf x^{beta-1} exp(-u x^alpha - v x) dx for alpha > 0, Re beta > 0.
/// Evaluated through the special function when the phase of u v^{-alpha}
/// lies inside its sector, otherwise by direct contour quadrature of the
/// defining integral (the marginal boundary-phase case).
cplx laplace_kernel(double alpha, cplx beta, cplx u, cplx v,
                    const QuadSpec& spec);

/// Fractional differentiation of order h:
/// (Gamma(h+1)/2 pi) int F(it) (z - it)^{-h-1} dt, contour shifted into
/// the half plane where F is analytic.  Transform side: multiplication of
/// the pre-image by x^h.  h a negative integer -m routes through the
/// m-fold indefinite integral.
cplx frac_diff(const HoloFunction& F, cplx h, cplx z,
               const OperatorContext& ctx);

/// Indefinite integration int_{-i inf}^{z} F(u) du (path up the imaginary
/// axis, then straight to z).
cplx indefinite_int(const HoloFunction& F, cplx z, const OperatorContext& ctx);

/// A_alpha: boundary-kernel operator with kernel K_alpha(u,v) =
/// laplace_kernel(alpha, 1, u, v); transform side F = Lf maps to
/// L(x -> f(x^alpha)).  `deriv` selects d^k/dv^k of the result.
cplx apply_A(double alpha, const HoloFunction& F, cplx v,
             const OperatorContext& ctx, int deriv = 0);

/// R~(h, alpha, a): kernel z^{-1-h} L_{alpha,h+1}(u~ a / z^alpha) boundary
/// operator; transform side x^h f(a x^alpha).  Re h <= -1 is reduced by
/// the integer shift through indefinite integration.
cplx apply_R(cplx h, double alpha, double a, const HoloFunction& F, cplx z,
             const OperatorContext& ctx, int deriv = 0);

/// T~_beta(is): convolution along the boundary with M(w) =
/// laplace_kernel(beta, 1, -is, w); transform side multiplication of the
/// pre-image by e^{i s x^beta}.  beta in (0,1).
cplx apply_T(double beta, double s, const HoloFunction& F, cplx z,
             const OperatorContext& ctx, int deriv = 0);

/// Wrap pointwise operator applications as HoloFunction objects (with
/// derivative slots backed by kernel derivatives) for further composition.
HoloFunction a_image(double alpha, HoloFunction F, OperatorContext ctx);
HoloFunction r_image(cplx h, double alpha, double a, HoloFunction F,
                     OperatorContext ctx);
HoloFunction t_image(double beta, double s, HoloFunction F,
                     OperatorContext ctx);

/// Memoizing wrapper: caches eval(z, k) results by exact argument.  The
/// nested contour integrals of composed operators revisit identical
/// points; caching is transparent to the values.
HoloFunction memoized(HoloFunction F);

/// Column-stochastic kernel of the substitution operator B_alpha
/// (F(z) -> F(z^alpha) on the transform side): the one-sided alpha-stable
/// density in x at time y.  alpha in (0,1), x, y > 0.
double zolotarev_kernel(double alpha, double x, double y,
                        const QuadSpec& spec);

/// B_alpha f(x) = int_0^inf zolotarev_kernel(alpha, x, y) f(y) dy.
cplx apply_B(double alpha, const HalfLineFunction& f, double x,
             const QuadSpec& spec);

/// Q~(theta, alpha, a): half-line realization of w^theta F(a w^alpha);
/// kernel computed by the damped-ray pair integral.  Re theta <= -1 is
/// reduced by fractional integration of the shifted element.  Only real
/// theta and the validated complex a are supported numerically.
cplx apply_Q(const SemigroupElementQ& e, const HalfLineFunction& f, double x,
             const QuadSpec& spec);

}  // namespace lfrac
