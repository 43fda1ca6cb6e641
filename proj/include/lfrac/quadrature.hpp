// Adaptive quadrature engine and complex gamma function.
//
// Everything downstream (special-function evaluation, operator kernels,
// density integrals) funnels through the routines in this header; all
// truncation policy for semi-infinite tails and vertical contours lives here.
#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>

namespace lfrac {

using cplx = std::complex<double>;

/// Tolerances and truncation policy for one quadrature call.
struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
    double truncation_growth = 2.0;  // geometric ratio for tail panels

    void validate() const;
};

/// Default spec for operator-application paths (relaxed, see module docs).
inline QuadSpec operator_spec() {
    QuadSpec s;
    s.rel_tol = 1e-8;
    s.abs_tol = 1e-10;
    return s;
}

struct QuadResult {
    cplx value{};
    double err_est = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Thrown when an integrand produces NaN/Inf or violates a precondition.
struct integrand_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a vertical contour passes too close to a pole.
struct contour_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Integrand = std::function<cplx(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) integration over a finite interval.
QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadSpec& spec);

/// Integral over (0, inf).  A power singularity f ~ x^{sigma-1} at 0 is
/// removed by the substitution x = u^{1/sigma}; callers declare sigma
/// (sigma = 1 means no singularity).  The tail is extended by geometric
/// panels of ratio spec.truncation_growth until the panel contribution
/// drops below the tolerance floor.
QuadResult integrate_semi_infinite(const Integrand& f, const QuadSpec& spec,
                                   double sigma = 1.0);

/// Integral over the whole real line, split at `center`.
QuadResult integrate_real_line(const Integrand& f, const QuadSpec& spec,
                               double center = 0.0);

/// (1/2*pi*i) * integral of g over the vertical line Re s = c.
/// `poles` (optional) are checked against the contour: a pole within
/// 1e-6 of the line raises contour_error.
QuadResult integrate_vertical_line(const std::function<cplx(cplx)>& g, double c,
                                   const QuadSpec& spec,
                                   std::span<const cplx> poles = {});

/// (1/2i) * integral over the imaginary axis of p^{theta-1} exp(-p^alpha*x + p*y),
/// computed as the sum of two damped half-line integrals obtained by the
/// rotations p = +-it (valid for alpha < 1).  The coefficient x of p^alpha may
/// be complex as long as both rotated exponents keep a decaying real part.
QuadResult oscillatory_pair(double theta, double alpha, cplx x, double y,
                            const QuadSpec& spec);

/// Gamma(z) for complex z (Lanczos approximation, reflection for Re z < 1/2).
/// Accurate to >= 12 significant digits on |Re z|, |Im z| <= 20.
cplx gamma_complex(cplx z);

/// log Gamma(z); the imaginary part is not branch-corrected, only
/// exp(log_gamma(z)) is meaningful for general z.
cplx log_gamma(cplx z);

/// 1/Gamma(z), entire (zero at the poles of Gamma).
cplx rgamma_complex(cplx z);

/// exp(z^2) erfc(z), the scaled complementary error function, for complex z.
/// Rational approximation of the Faddeeva function for moderate |z|, Laplace
/// continued fraction for large |z|, reflection for Re z < 0 (where the
/// exp(z^2) term may overflow if Re(z^2) is large).
cplx erfcx_complex(cplx z);

}  // namespace lfrac
