#include "lfrac/stable.hpp"

#include <algorithm>
#include <cmath>

namespace lfrac {
namespace {
constexpr double kPi = 3.14159265358979323846;
}

void StableParams::validate() const {
    if (!(alpha > 0.0 && alpha < 2.0) || alpha == 1.0)
        throw std::domain_error("StableParams: alpha in (0,2), alpha != 1");
    if (!(std::abs(gamma) < std::min(alpha, 2.0 - alpha)))
        throw std::domain_error(
            "StableParams: |gamma| < min(alpha, 2 - alpha) required");
}

double stable_pdf(const StableParams& p, double x, const QuadSpec& spec) {
    p.validate();
    if (x < 0.0) {
        if (p.gamma == 0.0) return stable_pdf(p, -x, spec);
        throw std::domain_error("stable_pdf: x < 0 only for gamma = 0");
    }
    if (!(x > 0.0)) throw std::domain_error("stable_pdf: x > 0 required");
    cplx logz(-p.alpha * std::log(x), (p.gamma - p.alpha) * kPi / 2.0);
    EvalResult r = eval_log({p.alpha, cplx(1.0)}, logz, spec);
    return r.value.imag() / (kPi * x);
}

double subordinator_density(double alpha, double t, double y,
                            const QuadSpec& spec) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("subordinator_density: alpha in (0,1)");
    if (!(t > 0.0) || !(y > 0.0))
        throw std::domain_error("subordinator_density: t, y > 0 required");
    QuadResult g = oscillatory_pair(1.0, alpha, cplx(t), y, spec);
    return g.value.real() / kPi;
}

double cauchy_density_integral(double alpha, double x, const QuadSpec& spec) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::domain_error("cauchy_density_integral: alpha in (0,2]");
    double ax = std::abs(x);
    // rotate t = s e^{i phi}: both exponent pieces become damped
    double phi = 0.45 * kPi / std::max(1.0, alpha);
    cplx ephi = std::polar(1.0, phi);
    cplx rot = std::polar(1.0, alpha * phi);
    // damping length 1/(ax sin phi); rescale so it is O(1)
    double lam = std::max(1.0, ax * std::sin(phi));
    QuadResult r = integrate_semi_infinite(
        [&](double u) {
            double s = u / lam;
            return std::exp(-std::pow(s, alpha) * rot +
                            cplx(0.0, ax * s) * ephi);
        },
        spec);
    return (ephi * r.value).real() / lam;
}

ScanReport positivity_scan(const std::function<double(double)>& f,
                           std::span<const double> grid, double floor) {
    ScanReport rep;
    rep.floor = floor;
    rep.min_value = std::numeric_limits<double>::infinity();
    for (double x : grid) {
        double v = f(x);
        rep.min_value = std::min(rep.min_value, v);
        if (v < -floor) ++rep.violations;
    }
    return rep;
}

double normalization_check(const std::function<double(double)>& density,
                           bool whole_line, const QuadSpec& spec) {
    Integrand f = [&](double x) { return cplx(density(x)); };
    QuadResult r = whole_line ? integrate_real_line(f, spec)
                              : integrate_semi_infinite(f, spec);
    if (!r.converged)
        throw integrand_error("normalization_check: quadrature did not converge");
    return r.value.real();
}

}  // namespace lfrac
