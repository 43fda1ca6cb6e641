// Stable densities on the line, one-sided subordinator densities, and the
// cosine integrals phi_alpha, all routed through the L-function evaluator
// or damped-ray quadrature.
#pragma once

#include <span>

#include "lfrac/lfunc.hpp"

namespace lfrac {

struct StableParams {
    double alpha;  // in (0,2), != 1
    double gamma;  // |gamma| < min(alpha, 2 - alpha)

    void validate() const;
};

/// Density of the (alpha, gamma) stable law at x:
///   p(x) = (1/(pi x)) Im L_{alpha,1}(x^{-alpha} e^{i(gamma-alpha)pi/2}),  x > 0.
/// x < 0 is accepted only in the symmetric case gamma = 0 (evenness).
double stable_pdf(const StableParams& p, double x,
                  const QuadSpec& spec = QuadSpec{});

/// One-sided alpha-stable density g_alpha(y; t) (subordinator at time t),
/// from the imaginary-axis integral split into two damped rays.
double subordinator_density(double alpha, double t, double y,
                            const QuadSpec& spec = QuadSpec{});

/// phi_alpha(x) = int_0^inf exp(-t^alpha) cos(tx) dt, 0 < alpha <= 2,
/// evaluated on a rotated ray (no oscillatory cancellation).
double cauchy_density_integral(double alpha, double x,
                               const QuadSpec& spec = QuadSpec{});

struct ScanReport {
    double min_value = 0.0;
    double floor = 0.0;
    int violations = 0;  // grid points below -floor
};

ScanReport positivity_scan(const std::function<double(double)>& f,
                           std::span<const double> grid, double floor = 1e-10);

/// Integral of `density` over (0,inf), or over the whole line when
/// `whole_line` is set.
double normalization_check(const std::function<double(double)>& density,
                           bool whole_line, const QuadSpec& spec);

}  // namespace lfrac
