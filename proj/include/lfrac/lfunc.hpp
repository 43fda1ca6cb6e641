// Evaluation of the two-index function L_{alpha,beta}(z) and the Wright
// function, with regime dispatch between power series and a Mellin-Barnes
// contour, plus the index symmetry that swaps alpha with 1/alpha.
#pragma once

#include <optional>

#include "lfrac/quadrature.hpp"

namespace lfrac {

struct LParams {
    double alpha;  // nonzero
    cplx beta;
};

enum class Method {
    SeriesSmallAlpha,
    SeriesLargeAlpha,
    SeriesNegAlpha,
    Barnes,
    LaplaceIntegral,
    SymmetryReduced,
    ClosedForm
};

struct EvalResult {
    cplx value{};
    double err_est = 0.0;
    Method method = Method::SeriesSmallAlpha;
};

struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A gamma-pole collision closer than 1e-8 in a negative-alpha series.
struct ill_conditioned_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A series whose terms overflow before the stopping rule fires.
struct series_divergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamViolation {
    int n;
    int m;
};

/// Exact admissibility scan of beta + alpha*m + n over 0 <= n,m <= 200
/// (tolerance 1e-12).  Returns the first violating pair, or nullopt.
/// Throws param_error when |beta| > 100 or |alpha| > 50.
std::optional<ParamViolation> check_params(const LParams& p);

/// Power series sum (-1)^n Gamma(alpha*n+beta) z^n / n!  for 0 < alpha < 1
/// (entire in z).  Also usable as the first half of the negative-alpha sum.
EvalResult eval_series_small_alpha(const LParams& p, cplx z);

/// Series in z^{-1/alpha} for alpha > 1:
///   (1/alpha) sum (-1)^n Gamma((n+beta)/alpha) z^{-(n+beta)/alpha} / n!
/// `winding` selects the sheet: z^nu = exp(nu(Log z + 2*pi*i*winding)).
EvalResult eval_series_large_alpha(const LParams& p, cplx z, int winding = 0);

/// Both residue series for alpha < 0 (simple poles only; a collision
/// within 1e-8 raises ill_conditioned_error).
EvalResult eval_series_negative_alpha(const LParams& p, cplx z,
                                      int winding = 0);

/// Mellin-Barnes contour (1/2*pi*i) int Gamma(s) Gamma(beta - alpha*s) z^{-s} ds
/// on Re s = c.  Requires Re beta > 0 and |arg z| < (1+alpha)*pi/2.
EvalResult eval_barnes(const LParams& p, cplx z, const QuadSpec& spec);

/// The defining half-line integral
///   int_0^inf x^{h-1} exp(-u x^alpha - v x) dx  =  v^{-h} L_{alpha,h}(u/v^alpha)
/// computed by quadrature.  Method-independent oracle; any real alpha != 0,
/// Re h > 0, Re u > 0, Re v > 0.
cplx eval_laplace_repr(double alpha, cplx h, cplx u, cplx v,
                       const QuadSpec& spec);

struct SymmetryImage {
    LParams params;
    cplx z;
    cplx prefactor;
};

/// Index symmetry: L_{alpha,beta}(z) = prefactor * L_{1/alpha, beta/alpha}(z')
/// with z' = z^{-1/alpha}, prefactor = (1/alpha) z^{-beta/alpha}.
SymmetryImage symmetry_reduce(const LParams& p, cplx z);

/// Regime dispatch.  Series where its worst term stays below the
/// cancellation budget, Barnes contour otherwise; alpha = 1 in closed form.
EvalResult eval(const LParams& p, cplx z, const QuadSpec& spec,
                int winding = 0);

/// Same, with the argument given as log z (sheet included); used by kernel
/// code that tracks arg z across branch cuts explicitly.
EvalResult eval_log(const LParams& p, cplx logz, const QuadSpec& spec);

/// Wright series sum z^n / (n! Gamma(alpha*n + beta)), alpha > -1.
cplx wright_eval(double alpha, cplx beta, cplx z);

/// Largest |z| for which the 0<alpha<1 series keeps its worst term below
/// the cancellation budget.
double series_radius(double alpha);

}  // namespace lfrac
