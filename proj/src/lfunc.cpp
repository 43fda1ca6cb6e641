#include "lfrac/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lfrac {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxTerms = 10000;
constexpr double kOverflowLog = 700.0;
// worst-term log budget for alternating series; terms are built from
// log-gamma differences, so the absolute noise scales with the worst term
// and e^10 keeps the sum good to ~1e-10
constexpr double kCancelBudget = 10.0;

struct SeriesSum {
    cplx value;
    double err;
};

// Sum of (-1)^n exp(logterm(n)) with the shared stopping rule: three
// consecutive terms below abs_tol * max(1,|S|), hard cap kMaxTerms.
template <class LogTerm>
SeriesSum alternating_sum(LogTerm logterm, double abs_tol) {
    cplx s = 0.0;
    double maxmag = 0.0;
    double last = 0.0;
    int quiet = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        cplx lt = logterm(n);
        if (lt.real() > kOverflowLog)
            throw series_divergence("series term overflow before convergence");
        cplx t = std::exp(lt);
        if (n % 2) t = -t;
        s += t;
        last = std::abs(t);
        maxmag = std::max(maxmag, std::abs(s));
        if (last < abs_tol * std::max(1.0, std::abs(s)))
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3) break;
    }
    return {s, 2e-14 * maxmag + last};
}

constexpr double kSeriesAbsTol = 1e-15;

cplx safe_log_gamma(cplx z) { return log_gamma(z); }

// series (entire) in z for parameter a in (0,1) or a < 0 (first sum)
SeriesSum sum_ascending(double a, cplx b, cplx z) {
    if (z == cplx(0.0)) return {gamma_complex(b), 0.0};
    cplx logz = std::log(z);
    return alternating_sum(
        [&](int n) {
            return safe_log_gamma(a * n + b) + double(n) * logz -
                   std::lgamma(double(n) + 1.0);
        },
        kSeriesAbsTol);
}

// series in z^{-1/a}: sum (-1)^n Gamma((n+b)/a) z^{-(n+b)/a} / n!
SeriesSum sum_descending(double a, cplx b, cplx logz) {
    return alternating_sum(
        [&](int n) {
            cplx s = (double(n) + b) / a;
            return safe_log_gamma(s) - s * logz -
                   std::lgamma(double(n) + 1.0);
        },
        kSeriesAbsTol);
}

cplx principal_log(cplx z, int winding) {
    if (z == cplx(0.0))
        throw std::domain_error("log of zero argument");
    return std::log(z) + cplx(0.0, 2.0 * kPi * winding);
}

void require_admissible(const LParams& p) {
    if (auto v = check_params(p))
        throw param_error("inadmissible parameters: pole collision at n=" +
                          std::to_string(v->n) + ", m=" + std::to_string(v->m));
}

void near_pole_guard(const LParams& p) {
    // alpha < 0 path: a collision of the two pole lattices closer than 1e-8
    // would need the (unimplemented) double-pole residue formula
    if (std::abs(p.beta.imag()) > 1e-8) return;
    for (int m = 0; m <= 200; ++m) {
        double target = -p.alpha * m - p.beta.real();
        double n = std::round(target);
        if (n >= 0 && n <= 200 && std::abs(target - n) < 1e-8)
            throw ill_conditioned_error(
                "parameters within 1e-8 of a double pole");
    }
}

}  // namespace

double series_radius(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("series_radius: alpha in (0,1) required");
    return std::pow(alpha, -alpha) *
           std::pow(kCancelBudget / (1.0 - alpha), 1.0 - alpha);
}

std::optional<ParamViolation> check_params(const LParams& p) {
    if (p.alpha == 0.0) throw param_error("alpha = 0 is excluded");
    if (std::abs(p.beta) > 100.0 || std::abs(p.alpha) > 50.0)
        throw param_error("parameter magnitude guard: |beta|<=100, |alpha|<=50");
    if (std::abs(p.beta.imag()) > 1e-12) return std::nullopt;
    for (int m = 0; m <= 200; ++m) {
        double r = p.beta.real() + p.alpha * m;
        // beta + alpha*m + n = 0 needs n = -r, a nonnegative integer
        double n = std::round(-r);
        if (n >= 0.0 && n <= 200.0 && std::abs(r + n) <= 1e-12)
            return ParamViolation{static_cast<int>(n), m};
    }
    return std::nullopt;
}

EvalResult eval_series_small_alpha(const LParams& p, cplx z) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        throw std::domain_error("eval_series_small_alpha: 0 < alpha < 1");
    require_admissible(p);
    SeriesSum s = sum_ascending(p.alpha, p.beta, z);
    return {s.value, s.err, Method::SeriesSmallAlpha};
}

EvalResult eval_series_large_alpha(const LParams& p, cplx z, int winding) {
    if (!(p.alpha > 1.0))
        throw std::domain_error("eval_series_large_alpha: alpha > 1");
    require_admissible(p);
    cplx logz = principal_log(z, winding);
    SeriesSum s = sum_descending(p.alpha, p.beta, logz);
    return {s.value / p.alpha, s.err / p.alpha, Method::SeriesLargeAlpha};
}

EvalResult eval_series_negative_alpha(const LParams& p, cplx z, int winding) {
    if (!(p.alpha < 0.0))
        throw std::domain_error("eval_series_negative_alpha: alpha < 0");
    require_admissible(p);
    near_pole_guard(p);
    SeriesSum up = sum_ascending(p.alpha, p.beta, z);
    cplx value = up.value;
    double err = up.err;
    if (z != cplx(0.0)) {
        cplx logz = principal_log(z, winding);
        SeriesSum down = sum_descending(p.alpha, p.beta, logz);
        value += down.value / (-p.alpha);
        err += down.err / (-p.alpha);
    }
    return {value, err, Method::SeriesNegAlpha};
}

EvalResult eval_barnes(const LParams& p, cplx z, const QuadSpec& spec) {
    require_admissible(p);
    if (!(p.beta.real() > 0.0))
        throw param_error("eval_barnes: requires Re beta > 0");
    double argz = std::arg(z);
    if (!(std::abs(argz) < (1.0 + p.alpha) * kPi / 2.0))
        throw std::domain_error("eval_barnes: arg z outside convergence sector");
    double c = p.alpha > 0.0
                   ? 0.5 * std::min(1.0, p.beta.real() / p.alpha)
                   : 0.5;
    if (!(c > 0.0)) throw param_error("eval_barnes: no admissible contour");
    cplx logz = std::log(z);
    std::vector<cplx> poles = {cplx(0.0)};
    if (p.alpha > 0.0) poles.push_back(p.beta / p.alpha);
    QuadResult r = integrate_vertical_line(
        [&](cplx s) {
            return std::exp(log_gamma(s) + log_gamma(p.beta - p.alpha * s) -
                            s * logz);
        },
        c, spec, poles);
    return {r.value, r.err_est, Method::Barnes};
}

cplx eval_laplace_repr(double alpha, cplx h, cplx u, cplx v,
                       const QuadSpec& spec) {
    if (alpha == 0.0 || !(h.real() > 0.0) || !(u.real() > 0.0) ||
        !(v.real() > 0.0))
        throw std::domain_error(
            "eval_laplace_repr: needs alpha != 0, Re h, Re u, Re v > 0");
    double sigma = alpha > 0.0 ? std::min(h.real(), 1.0) : 1.0;
    QuadResult r = integrate_semi_infinite(
        [&](double x) -> cplx {
            return std::exp((h - 1.0) * std::log(x) -
                             u * std::pow(cplx(x), alpha) - v * x);
        },
        spec, sigma);
    return r.value;
}

SymmetryImage symmetry_reduce(const LParams& p, cplx z) {
    if (!(p.alpha > 0.0))
        throw std::domain_error("symmetry_reduce: alpha > 0 required");
    cplx logz = principal_log(z, 0);
    SymmetryImage out;
    out.params = {1.0 / p.alpha, p.beta / p.alpha};
    out.z = std::exp(-logz / p.alpha);
    out.prefactor = std::exp(-p.beta / p.alpha * logz) / p.alpha;
    return out;
}

EvalResult eval_log(const LParams& p, cplx logz, const QuadSpec& spec) {
    require_admissible(p);
    const double a = p.alpha;
    if (a == 1.0) {
        cplx z = std::exp(logz);
        cplx v = gamma_complex(p.beta) *
                 std::exp(-p.beta * std::log(1.0 + z));
        return {v, std::abs(v) * 1e-14, Method::ClosedForm};
    }
    if (a < 0.0) {
        near_pole_guard(p);
        SeriesSum up = sum_ascending(a, p.beta, std::exp(logz));
        SeriesSum down = sum_descending(a, p.beta, logz);
        return {up.value + down.value / (-a), up.err + down.err / (-a),
                Method::SeriesNegAlpha};
    }
    double absz = std::exp(logz.real());
    if (a < 1.0) {
        if (absz <= series_radius(a)) {
            SeriesSum s = sum_ascending(a, p.beta, std::exp(logz));
            return {s.value, s.err, Method::SeriesSmallAlpha};
        }
    } else {
        // the descending series is the symmetry image of the ascending one;
        // its worst term obeys the same budget in z^{-1/alpha}
        double rs = std::pow(series_radius(1.0 / a), -a);
        if (absz >= rs) {
            SeriesSum s = sum_descending(a, p.beta, logz);
            return {s.value / a, s.err / a, Method::SeriesLargeAlpha};
        }
    }
    if (std::abs(logz.imag()) <= kPi &&
        std::abs(logz.imag()) < 0.995 * (1.0 + a) * kPi / 2.0 &&
        p.beta.real() > 0.0) {
        return eval_barnes(p, std::exp(logz), spec);
    }
    throw std::domain_error(
        "eval: |z| outside the series regime and arg z outside the contour "
        "sector");
}

EvalResult eval(const LParams& p, cplx z, const QuadSpec& spec, int winding) {
    if (z == cplx(0.0)) {
        if (p.alpha > 1.0)
            throw std::domain_error("eval: z = 0 invalid for alpha > 1");
        require_admissible(p);
        if (p.alpha < 0.0) near_pole_guard(p);
        return {gamma_complex(p.beta), 0.0,
                p.alpha == 1.0 ? Method::ClosedForm
                               : Method::SeriesSmallAlpha};
    }
    return eval_log(p, principal_log(z, winding), spec);
}

cplx wright_eval(double alpha, cplx beta, cplx z) {
    if (!(alpha > -1.0))
        throw std::domain_error("wright_eval: alpha > -1 required");
    cplx s = 0.0;
    int quiet = 0;
    cplx zpow = 1.0;
    double factln = 0.0;
    for (int n = 0; n < kMaxTerms; ++n) {
        cplx t = zpow * std::exp(-factln) * rgamma_complex(alpha * n + beta);
        s += t;
        if (std::abs(t) < kSeriesAbsTol * std::max(1.0, std::abs(s)))
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3) break;
        zpow *= z;
        factln += std::log(double(n) + 1.0);
        if (std::abs(zpow) == HUGE_VAL)
            throw series_divergence("wright series overflow");
    }
    return s;
}

}  // namespace lfrac
