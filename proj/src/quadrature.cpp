#include "lfrac/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace lfrac {
namespace {

constexpr double kPi = 3.14159265358979323846;

// G7,K15 nodes/weights on [-1,1] (Kronrod extension of 7-point Gauss).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    cplx value;
    double err;
};

PanelResult gk15(const Integrand& f, double a, double b, long& evals) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    cplx fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(mid - h * kXgk[j]);
        fv[14 - j] = f(mid + h * kXgk[j]);
    }
    fv[7] = f(mid);
    evals += 15;
    cplx resk = kWgk[7] * fv[7];
    cplx resg = kWg[3] * fv[7];
    for (int j = 0; j < 7; ++j) {
        resk += kWgk[j] * (fv[j] + fv[14 - j]);
        if (j % 2 == 1) resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
    }
    resk *= h;
    resg *= h;
    if (!std::isfinite(resk.real()) || !std::isfinite(resk.imag()))
        throw integrand_error("non-finite integrand value");
    return {resk, std::abs(resk - resg)};
}

struct Segment {
    double a, b;
    cplx value;
    double err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace

void QuadSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1)
        throw std::invalid_argument("QuadSpec: tolerances must be positive");
}

QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadSpec& spec) {
    spec.validate();
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Segment> heap;
    long evals = 0;
    PanelResult first = gk15(f, a, b, evals);
    heap.push({a, b, first.value, first.err});
    cplx total = first.value;
    double toterr = first.err;
    int splits = 0;
    double checkpoint_err = first.err;
    while (toterr > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) &&
           splits < spec.max_subdivisions) {
        // stall detection: once the estimate stops improving (noise floor
        // or unreachable tolerance), further subdivision is wasted work
        if (splits > 0 && splits % 64 == 0) {
            if (toterr > 0.9 * checkpoint_err) break;
            checkpoint_err = toterr;
        }
        Segment s = heap.top();
        heap.pop();
        double m = 0.5 * (s.a + s.b);
        if (m == s.a || m == s.b) {  // cannot subdivide further
            heap.push(s);
            break;
        }
        PanelResult l = gk15(f, s.a, m, evals);
        PanelResult r = gk15(f, m, s.b, evals);
        total += l.value + r.value - s.value;
        toterr += l.err + r.err - s.err;
        heap.push({s.a, m, l.value, l.err});
        heap.push({m, s.b, r.value, r.err});
        ++splits;
    }
    out.value = total;
    out.err_est = toterr;
    out.evaluations = evals;
    out.converged =
        toterr <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    return out;
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadSpec& spec,
                                   double sigma) {
    spec.validate();
    if (!(sigma > 0.0))
        throw std::invalid_argument("integrate_semi_infinite: sigma must be > 0");

    QuadResult out;
    long evals = 0;
    cplx total = 0.0;
    double toterr = 0.0;

    // [0,1]: remove the declared power singularity with x = u^{1/sigma}.
    {
        Integrand g;
        if (sigma == 1.0) {
            g = f;
        } else {
            const double p = 1.0 / sigma;
            g = [&f, p](double u) -> cplx {
                if (u <= 0.0) return 0.0;
                return f(std::pow(u, p)) * p * std::pow(u, p - 1.0);
            };
        }
        QuadResult r0 = integrate_finite(g, 0.0, 1.0, spec);
        total += r0.value;
        toterr += r0.err_est;
        evals += r0.evaluations;
    }

    // Geometric tail panels.
    const double growth = spec.truncation_growth > 1.0 ? spec.truncation_growth : 2.0;
    double lo = 1.0;
    int quiet = 0;
    bool tail_ok = false;
    QuadSpec tail_spec = spec;
    for (int k = 0; k < 400; ++k) {
        double hi = lo * growth;
        // panel errors below the global tolerance are irrelevant; do not
        // let a tiny oscillatory panel exhaust the subdivision budget
        tail_spec.abs_tol = std::max(
            spec.abs_tol, 0.1 * spec.rel_tol * std::abs(total));
        QuadResult rp = integrate_finite(f, lo, hi, tail_spec);
        total += rp.value;
        toterr += rp.err_est;
        evals += rp.evaluations;
        double floor =
            std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) / 10.0;
        if (std::abs(rp.value) + rp.err_est < floor)
            ++quiet;
        else
            quiet = 0;
        lo = hi;
        if (quiet >= 2) {
            tail_ok = true;
            break;
        }
    }
    out.value = total;
    out.err_est = toterr;
    out.evaluations = evals;
    out.converged =
        tail_ok &&
        toterr <= 10.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    return out;
}

QuadResult integrate_real_line(const Integrand& f, const QuadSpec& spec,
                               double center) {
    QuadResult pos = integrate_semi_infinite(
        [&](double t) { return f(center + t); }, spec);
    QuadResult neg = integrate_semi_infinite(
        [&](double t) { return f(center - t); }, spec);
    QuadResult out;
    out.value = pos.value + neg.value;
    out.err_est = pos.err_est + neg.err_est;
    out.evaluations = pos.evaluations + neg.evaluations;
    out.converged = pos.converged && neg.converged;
    return out;
}

QuadResult integrate_vertical_line(const std::function<cplx(cplx)>& g, double c,
                                   const QuadSpec& spec,
                                   std::span<const cplx> poles) {
    for (cplx p : poles) {
        if (std::abs(p.real() - c) < 1e-6)
            throw contour_error("vertical contour within 1e-6 of a pole");
    }
    // (1/2*pi*i) int g(c+it) i dt = (1/2*pi) int g(c+it) dt
    QuadResult r = integrate_real_line(
        [&](double t) { return g(cplx(c, t)); }, spec);
    r.value /= (2.0 * kPi);
    r.err_est /= (2.0 * kPi);
    return r;
}

QuadResult oscillatory_pair(double theta, double alpha, cplx x, double y,
                            const QuadSpec& spec) {
    if (!(alpha < 1.0))
        throw std::domain_error(
            "oscillatory_pair: requires alpha < 1 (unsupported regime)");
    if (!(y > 0.0))
        throw std::domain_error("oscillatory_pair: requires y > 0");
    const cplx rot_p = x * std::polar(1.0, kPi * alpha / 2.0);
    const cplx rot_m = x * std::polar(1.0, -kPi * alpha / 2.0);
    if (alpha > 0.0 && (rot_p.real() <= 0.0 || rot_m.real() <= 0.0))
        throw std::domain_error(
            "oscillatory_pair: rotated integrand does not decay");
    // Each half-line integral is taken on a rotated ray t = s e^{+-i psi}
    // so that both the s^alpha piece and the linear piece are damped and
    // nothing oscillates.  psi keeps the s^alpha coefficient in the right
    // half plane with margin.
    auto half = [&](const cplx& rot, double sign) {
        double room = kPi / 2.0 - sign * std::arg(rot);  // > 0 by the check above
        double psi = std::min(0.75 * room / alpha, 0.45 * kPi);
        cplx epsi = std::polar(1.0, sign * psi);
        cplx c_pow = rot * std::polar(1.0, sign * alpha * psi);
        cplx c_lin = cplx(0.0, sign * y) * epsi;  // Re = -y sin(psi) < 0
        cplx jac = std::polar(1.0, sign * psi * theta);
        // rescale so the linear damping length is O(1); otherwise the
        // feature can hide below the innermost panel nodes for large y
        double lam = std::max(1.0, -c_lin.real());
        QuadResult r = integrate_semi_infinite(
            [&](double u) -> cplx {
                double s = u / lam;
                return std::pow(cplx(s, 0.0), theta - 1.0) *
                       std::exp(-std::pow(s, alpha) * c_pow + c_lin * s);
            },
            spec, theta < 1.0 ? theta : 1.0);
        r.value *= jac / lam;
        return r;
    };
    QuadResult ip = half(rot_p, +1.0);
    QuadResult im = half(rot_m, -1.0);
    const cplx ph = std::polar(1.0, kPi * (theta - 1.0) / 2.0);
    QuadResult out;
    out.value = 0.5 * (ph * ip.value + std::conj(ph) * im.value);
    out.err_est = 0.5 * (ip.err_est + im.err_est);
    out.evaluations = ip.evaluations + im.evaluations;
    out.converged = ip.converged && im.converged;
    return out;
}

// ---------------------------------------------------------------------------
// Complex gamma (Lanczos, g = 7, 9 coefficients).

namespace {
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

cplx lanczos_core(cplx z) {
    // valid for Re z > 0; argument is z, series evaluated at z-1
    z -= 1.0;
    cplx a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}
}  // namespace

cplx gamma_complex(cplx z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("gamma_complex: pole at non-positive integer");
    if (z.real() < 0.5) {
        // reflection formula
        return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
    }
    return lanczos_core(z);
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
    }
    cplx zm = z - 1.0;
    cplx a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (zm + static_cast<double>(i));
    cplx t = zm + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(a);
}

cplx rgamma_complex(cplx z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) {
        return std::sin(kPi * z) * gamma_complex(1.0 - z) / kPi;
    }
    return 1.0 / gamma_complex(z);
}

namespace {

// Weideman's rational approximation of the Faddeeva function, evaluated as
// erfcx(z) = w(iz) for Re z >= 0.  Coefficients are the Fourier coefficients
// of exp(-t^2)(L^2+t^2) under the map t = L tan(theta/2), computed once.
constexpr int kFadN = 64;

const std::array<double, kFadN>& faddeeva_coeffs() {
    static const std::array<double, kFadN> coeffs = [] {
        const int M = kFadN, M2 = 2 * kFadN;
        const double L = std::sqrt(kFadN / std::sqrt(2.0));
        std::array<double, 2 * kFadN> f{};
        f[0] = 0.0;
        for (int j = 1; j < M2; ++j) {
            double theta = (j - M) * kPi / M;
            double t = L * std::tan(0.5 * theta);
            f[j] = std::exp(-t * t) * (L * L + t * t);
        }
        std::array<double, kFadN> a{};
        for (int m = 1; m <= M; ++m) {
            double re = 0.0;
            for (int j = 0; j < M2; ++j) {
                double g = f[(j + M) % M2];  // fftshift
                re += g * std::cos(-2.0 * kPi * m * j / M2);
            }
            a[m - 1] = re / M2;
        }
        return a;
    }();
    return coeffs;
}

}  // namespace

cplx erfcx_complex(cplx z) {
    if (z.real() < 0.0) return 2.0 * std::exp(z * z) - erfcx_complex(-z);
    if (std::abs(z) >= 6.0) {
        // Laplace continued fraction, backward recurrence
        cplx t = z;
        for (int k = 48; k >= 1; --k) t = z + (0.5 * k) / t;
        return 1.0 / (std::sqrt(kPi) * t);
    }
    const auto& a = faddeeva_coeffs();
    const double L = std::sqrt(kFadN / std::sqrt(2.0));
    cplx Z = (L - z) / (L + z);
    cplx p = 0.0;
    for (int n = kFadN - 1; n >= 0; --n) p = p * Z + a[n];
    cplx d = 1.0 / (L + z);
    return 2.0 * p * d * d + d / std::sqrt(kPi);
}

}  // namespace lfrac
