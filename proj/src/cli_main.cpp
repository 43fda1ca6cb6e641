// Command-line front end: evaluate the special functions on grids, apply
// operators to the built-in test-function families, run verification
// suites, and emit CSV/JSON tables.
//
// Exit codes: 0 success, 2 domain or parameter error, 3 I/O error.
#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "lfrac/halfline.hpp"
#include "lfrac/holo.hpp"
#include "lfrac/lfunc.hpp"
#include "lfrac/stable.hpp"
#include "lfrac/verify.hpp"

using namespace lfrac;

namespace {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------- tables ----

using Cell = std::variant<std::string, double, bool>;

struct Table {
    std::vector<std::string> cols;
    std::vector<std::vector<Cell>> rows;
};

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string csv_field(const Cell& c) {
    std::string s;
    if (std::holds_alternative<double>(c))
        s = fmt_num(std::get<double>(c));
    else if (std::holds_alternative<bool>(c))
        s = std::get<bool>(c) ? "true" : "false";
    else
        s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string json_value(const Cell& c) {
    if (std::holds_alternative<double>(c)) {
        double v = std::get<double>(c);
        if (!std::isfinite(v)) return "null";
        return fmt_num(v);
    }
    if (std::holds_alternative<bool>(c))
        return std::get<bool>(c) ? "true" : "false";
    return "\"" + json_escape(std::get<std::string>(c)) + "\"";
}

void write_csv(std::ostream& os, const Table& t) {
    for (size_t j = 0; j < t.cols.size(); ++j)
        os << (j ? "," : "") << csv_field(t.cols[j]);
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t j = 0; j < row.size(); ++j)
            os << (j ? "," : "") << csv_field(row[j]);
        os << "\n";
    }
}

void write_json_rows(std::ostream& os, const Table& t, int indent) {
    std::string pad(indent, ' ');
    os << pad << "[";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        os << (i ? ",\n" : "\n") << pad << "  {";
        for (size_t j = 0; j < t.cols.size(); ++j) {
            os << (j ? ", " : "") << "\"" << json_escape(t.cols[j])
               << "\": " << json_value(t.rows[i][j]);
        }
        os << "}";
    }
    os << "\n" << pad << "]";
}

void emit(const Table& t, const std::string& output,
          const std::string& format,
          const std::optional<std::pair<std::string, bool>>& report = {}) {
    std::ostringstream body;
    if (format == "json") {
        if (report) {
            body << "{\n  \"suite\": \"" << json_escape(report->first)
                 << "\",\n  \"cases\":\n";
            write_json_rows(body, t, 2);
            body << ",\n  \"overall\": " << (report->second ? "true" : "false")
                 << "\n}\n";
        } else {
            write_json_rows(body, t, 0);
            body << "\n";
        }
    } else if (format == "csv") {
        write_csv(body, t);
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    if (output.empty() || output == "-") {
        std::cout << body.str();
        return;
    }
    std::ofstream os(output, std::ios::binary);
    if (!os) throw io_error("cannot open output file: " + output);
    os << body.str();
    if (!os.good()) throw io_error("write failed: " + output);
}

// ------------------------------------------------------------ parsing ----

cplx parse_cplx(const std::string& s) {
    size_t comma = s.find(',');
    try {
        size_t used = 0;
        double re = std::stod(s.substr(0, comma), &used);
        if (used != (comma == std::string::npos ? s.size() : comma))
            throw std::invalid_argument(s);
        double im = 0.0;
        if (comma != std::string::npos) {
            std::string tail = s.substr(comma + 1);
            im = std::stod(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(s);
        }
        return {re, im};
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number: " + s);
    }
}

std::vector<double> parse_nums(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(parse_cplx(tok).real());
    return out;
}

// phi:c,d,k -> x^k exp(-c/x - d x);  psi:k,d -> x^k exp(-d x)
HalfLineFunction parse_half(const std::string& lit) {
    size_t colon = lit.find(':');
    std::string fam = lit.substr(0, colon);
    std::vector<double> p =
        colon == std::string::npos ? std::vector<double>{}
                                   : parse_nums(lit.substr(colon + 1));
    if (fam == "phi") {
        if (p.size() != 3)
            throw std::invalid_argument("phi literal needs phi:c,d,k");
        return make_phi(p[0], p[1], static_cast<int>(p[2]));
    }
    if (fam == "psi") {
        if (p.size() != 2)
            throw std::invalid_argument("psi literal needs psi:k,d");
        return make_psi(static_cast<int>(p[0]), p[1]);
    }
    throw std::invalid_argument("unknown test-function literal: " + lit);
}

// lp:<half-line literal> -> its transform image
struct NamedImage {
    HalfLineFunction f;
    HoloFunction F;
};

NamedImage parse_image(const std::string& lit, const QuadSpec& spec) {
    if (lit.rfind("lp:", 0) != 0)
        throw std::invalid_argument(
            "transform-side functions use lp:<literal>: " + lit);
    NamedImage n;
    n.f = parse_half(lit.substr(3));
    n.F = memoized(laplace_image(n.f, spec));
    return n;
}

QuadSpec env_spec() {
    QuadSpec s;
    if (const char* r = std::getenv("LFRAC_REL_TOL")) s.rel_tol = std::stod(r);
    if (const char* a = std::getenv("LFRAC_ABS_TOL")) s.abs_tol = std::stod(a);
    s.validate();
    return s;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::SeriesSmallAlpha: return "series-ascending";
        case Method::SeriesLargeAlpha: return "series-descending";
        case Method::SeriesNegAlpha: return "series-residue";
        case Method::Barnes: return "barnes";
        case Method::LaplaceIntegral: return "laplace-integral";
        case Method::SymmetryReduced: return "symmetry-reduced";
        case Method::ClosedForm: return "closed-form";
    }
    return "unknown";
}

// ---------------------------------------------------------- commands ----

struct Opts {
    std::string target;
    std::string alpha = "0.5";
    std::string beta = "1";
    std::string h = "0.5";
    double gamma = 0.0, t = 1.0, a = 1.0, s = 0.0, r = 0.5, theta = 0.0;
    std::vector<std::string> zs;
    std::vector<double> xs;
    bool oracle = false;
    std::string output = "-";
    std::string format = "csv";
};

void add_io_flags(CLI::App* sc, Opts& o, bool require_output) {
    auto* out = sc->add_option("--output", o.output,
                               "output path ('-' for stdout)");
    if (require_output) out->required();
    sc->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_eval_flags(CLI::App* sc, Opts& o) {
    sc->add_option("target", o.target,
                   "lfunc | wright | stable-pdf | subordinator | cauchy-phi")
        ->required();
    sc->add_option("--alpha", o.alpha, "first index")->required();
    sc->add_option("--beta", o.beta, "second index (lfunc, wright)");
    sc->add_option("--gamma", o.gamma, "skew (stable-pdf)");
    sc->add_option("--t", o.t, "time parameter (subordinator)");
    sc->add_option("--z", o.zs, "evaluation point, repeatable (re or re,im)");
    sc->add_option("--x", o.xs, "real evaluation point, repeatable");
}

Table run_eval(const Opts& o) {
    QuadSpec spec = env_spec();
    double alpha = parse_cplx(o.alpha).real();
    Table t;
    t.cols = {"input", "value_re", "value_im", "err_est", "method"};
    auto rowz = [&](const std::string& in, cplx v, double err,
                    const char* m) {
        t.rows.push_back({in, v.real(), v.imag(), err, std::string(m)});
    };
    if (o.target == "lfunc" || o.target == "wright") {
        cplx beta = parse_cplx(o.beta);
        if (o.zs.empty())
            throw std::invalid_argument("eval " + o.target +
                                        " needs at least one --z");
        if (o.target == "lfunc") {
            if (auto bad = check_params({alpha, beta})) {
                std::ostringstream msg;
                msg << "parameter admissibility fails at n=" << bad->n
                    << ", m=" << bad->m
                    << ": beta + alpha*m + n is a nonpositive integer";
                throw param_error(msg.str());
            }
            for (const auto& zs : o.zs) {
                EvalResult r = eval({alpha, beta}, parse_cplx(zs), spec);
                rowz(zs, r.value, r.err_est, method_name(r.method));
            }
        } else {
            for (const auto& zs : o.zs)
                rowz(zs, wright_eval(alpha, beta, parse_cplx(zs)), 0.0,
                     "series");
        }
        return t;
    }
    if (o.xs.empty())
        throw std::invalid_argument("eval " + o.target +
                                    " needs at least one --x");
    for (double x : o.xs) {
        std::string in = fmt_num(x);
        if (o.target == "stable-pdf") {
            StableParams p{alpha, o.gamma};
            p.validate();
            rowz(in, stable_pdf(p, x, spec), 0.0, "inversion-integral");
        } else if (o.target == "subordinator") {
            rowz(in, subordinator_density(alpha, o.t, x, spec), 0.0,
                 "damped-ray-pair");
        } else if (o.target == "cauchy-phi") {
            rowz(in, cauchy_density_integral(alpha, x, spec), 0.0,
                 "rotated-ray");
        } else {
            throw std::invalid_argument("unknown eval target: " + o.target);
        }
    }
    return t;
}

Table run_apply(const Opts& o, const std::string& f_lit,
                const std::string& F_lit) {
    QuadSpec spec = env_spec();
    OperatorContext ctx;
    ctx.spec = spec;
    double alpha = parse_cplx(o.alpha).real();
    cplx h = parse_cplx(o.h);

    bool holo_side = o.target == "frac-diff" || o.target == "A" ||
                     o.target == "R" || o.target == "T";
    if (holo_side && F_lit.empty())
        throw std::invalid_argument("apply " + o.target +
                                    " needs --F lp:<literal>");
    if (!holo_side && f_lit.empty())
        throw std::invalid_argument("apply " + o.target +
                                    " needs --f <literal>");

    Table t;
    t.cols = {"input", "value_re", "value_im"};
    if (o.oracle) {
        t.cols.push_back("oracle_re");
        t.cols.push_back("oracle_im");
        t.cols.push_back("abs_diff");
    }
    auto row = [&](const std::string& in, cplx v, std::optional<cplx> orc) {
        std::vector<Cell> r{in, v.real(), v.imag()};
        if (o.oracle) {
            r.push_back(orc->real());
            r.push_back(orc->imag());
            r.push_back(std::abs(v - *orc));
        }
        t.rows.push_back(std::move(r));
    };

    if (holo_side) {
        if (o.zs.empty())
            throw std::invalid_argument("apply " + o.target +
                                        " needs at least one --z");
        NamedImage n = parse_image(F_lit, spec);
        double beta_t = parse_cplx(o.beta).real();
        for (const auto& zlit : o.zs) {
            cplx z = parse_cplx(zlit);
            cplx v;
            std::optional<cplx> orc;
            if (o.target == "frac-diff") {
                v = frac_diff(n.F, h, z, ctx);
                if (o.oracle) {
                    if (h.imag() != 0.0)
                        throw std::invalid_argument(
                            "oracle needs real --h");
                    orc = gamma_complex(h + 1.0) *
                          weighted_laplace(n.f, z, h.real() + 1.0, spec);
                }
            } else if (o.target == "A") {
                v = apply_A(alpha, n.F, z, ctx);
                if (o.oracle) {
                    HalfLineFunction g;
                    auto base = n.f;
                    double al = alpha;
                    g.eval = [base, al](double x) -> cplx {
                        return base.eval(std::pow(x, al));
                    };
                    g.eval_c = [base, al](cplx s) -> cplx {
                        return base.eval_c(std::exp(al * std::log(s)));
                    };
                    g.sector = std::min(1.55, base.sector / al);
                    g.sigma0 = 1.0 + al * (base.sigma0 - 1.0);
                    orc = laplace(g, z, spec);
                }
            } else if (o.target == "R") {
                v = apply_R(h, alpha, o.a, n.F, z, ctx);
                if (o.oracle) {
                    if (h.imag() != 0.0)
                        throw std::invalid_argument(
                            "oracle needs real --h");
                    HalfLineFunction g;
                    auto base = n.f;
                    double al = alpha, aa = o.a, hh = h.real();
                    g.eval = [base, al, aa, hh](double x) -> cplx {
                        if (x <= 0.0) return 0.0;
                        return std::pow(x, hh) *
                               base.eval(aa * std::pow(x, al));
                    };
                    g.eval_c = [base, al, aa, hh](cplx s) -> cplx {
                        return std::exp(cplx(hh) * std::log(s)) *
                               base.eval_c(aa * std::exp(al * std::log(s)));
                    };
                    g.sector = std::min(1.55, base.sector / al);
                    g.sigma0 = 1.0 + hh + al * (base.sigma0 - 1.0);
                    orc = laplace(g, z, spec);
                }
            } else {  // T
                v = apply_T(beta_t, o.s, n.F, z, ctx);
                if (o.oracle) {
                    HalfLineFunction g;
                    auto base = n.f;
                    double bt = beta_t, ss = o.s;
                    g.eval = [base, bt, ss](double x) -> cplx {
                        return std::exp(cplx(0.0, ss) * std::pow(x, bt)) *
                               base.eval(x);
                    };
                    g.eval_c = [base, bt, ss](cplx u) -> cplx {
                        return std::exp(cplx(0.0, ss) *
                                        std::exp(bt * std::log(u))) *
                               base.eval_c(u);
                    };
                    g.sector = base.sector;
                    g.sigma0 = base.sigma0;
                    orc = laplace(g, z, spec);
                }
            }
            row(zlit, v, orc);
        }
        return t;
    }

    // half-line side: riemann-liouville, B, Q
    if (o.xs.empty())
        throw std::invalid_argument("apply " + o.target +
                                    " needs at least one --x");
    HalfLineFunction f = parse_half(f_lit);
    HoloFunction F;
    if (o.oracle) F = memoized(laplace_image(f, spec));
    for (double x : o.xs) {
        cplx v;
        std::optional<cplx> orc;
        if (o.target == "riemann-liouville") {
            v = riemann_liouville(f, o.r, x, spec);
            if (o.oracle) {
                HoloFunction G;
                G.cls = HoloClass::RapidDecay;
                double rr = o.r;
                G.eval = [F, rr](cplx z, int k) -> cplx {
                    if (k != 0) throw std::domain_error("no slots");
                    return std::exp(cplx(-rr) * std::log(z)) * F.eval(z, 0);
                };
                orc = inverse_laplace(memoized(std::move(G)), x, 1.0, spec);
            }
        } else if (o.target == "B") {
            v = apply_B(alpha, f, x, spec);
            if (o.oracle) {
                HoloFunction G;
                G.cls = HoloClass::RapidDecay;
                double al = alpha;
                G.eval = [F, al](cplx z, int k) -> cplx {
                    if (k != 0) throw std::domain_error("no slots");
                    return F.eval(std::exp(al * std::log(z)), 0);
                };
                orc = inverse_laplace(memoized(std::move(G)), x, 1.0, spec);
            }
        } else if (o.target == "Q") {
            SemigroupElementQ e{cplx(o.theta), alpha, cplx(o.a)};
            e.validate();
            v = apply_Q(e, f, x, spec);
            if (o.oracle) {
                HoloFunction G;
                G.cls = HoloClass::RapidDecay;
                double al = alpha, aa = o.a, th = o.theta;
                G.eval = [F, al, aa, th](cplx w, int k) -> cplx {
                    if (k != 0) throw std::domain_error("no slots");
                    return std::exp(cplx(th) * std::log(w)) *
                           F.eval(aa * std::exp(al * std::log(w)), 0);
                };
                orc = inverse_laplace(memoized(std::move(G)), x, 1.0, spec);
            }
        } else {
            throw std::invalid_argument("unknown apply target: " + o.target);
        }
        row(fmt_num(x), v, orc);
    }
    return t;
}

int run_verify(const std::string& suite, const Opts& o) {
    VerifyReport rep = run_suite(suite, env_spec());
    Table t;
    t.cols = {"name", "max_abs_err", "tolerance", "pass"};
    for (const auto& c : rep.cases)
        t.rows.push_back({c.name, c.max_abs_err, c.tolerance, c.pass});
    emit(t, o.output, o.format,
         o.format == "json"
             ? std::optional<std::pair<std::string, bool>>({rep.suite,
                                                            rep.overall})
             : std::nullopt);
    return rep.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "two-index special function, stable densities, and the operator "
        "algebra of their transforms"};
    app.require_subcommand(1);

    Opts eo, ao, teo, tao;
    std::string ef, eF, af, aF, tef, teF, taf, taF;
    std::string suite;
    Opts vo;

    auto* ev = app.add_subcommand("eval", "evaluate a function on a grid");
    add_eval_flags(ev, eo);
    add_io_flags(ev, eo, false);

    auto wire_apply = [](CLI::App* sc, Opts& o, std::string& f,
                         std::string& F) {
        sc->set_help_flag("--help", "print help");
        sc->add_option("target", o.target,
                       "frac-diff | riemann-liouville | A | R | B | Q | T")
            ->required();
        sc->add_option("--h", o.h, "order (frac-diff, R)");
        sc->add_option("--r", o.r, "integration order (riemann-liouville)");
        sc->add_option("--alpha", o.alpha, "index (A, R, B, Q)");
        sc->add_option("--beta", o.beta, "phase index (T)");
        sc->add_option("--s", o.s, "phase parameter (T)");
        sc->add_option("--a", o.a, "dilation (R, Q)");
        sc->add_option("--theta", o.theta, "weight order (Q)");
        sc->add_option("--f", f, "half-line function (phi:c,d,k | psi:k,d)");
        sc->add_option("--F", F, "transform image (lp:<literal>)");
        sc->add_option("--z", o.zs, "evaluation point, repeatable");
        sc->add_option("--x", o.xs, "real evaluation point, repeatable");
        sc->add_flag("--oracle", o.oracle,
                     "also compute the transform-side oracle");
    };
    auto* ap = app.add_subcommand("apply",
                                  "apply an operator to a test function");
    wire_apply(ap, ao, af, aF);
    add_io_flags(ap, ao, false);

    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite,
                   "lfunc-symmetries | stable-normalization | "
                   "fraccalc-semigroup | operator-conjugation | group-laws | "
                   "zolotarev | all")
        ->required();
    add_io_flags(vf, vo, false);

    auto* tb = app.add_subcommand("table",
                                  "run eval/apply and write the table to a "
                                  "file");
    tb->require_subcommand(1);
    auto* tbe = tb->add_subcommand("eval", "evaluate onto a file");
    add_eval_flags(tbe, teo);
    add_io_flags(tbe, teo, true);
    auto* tba = tb->add_subcommand("apply", "apply onto a file");
    wire_apply(tba, tao, taf, taF);
    add_io_flags(tba, tao, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ev->parsed()) {
            emit(run_eval(eo), eo.output, eo.format);
        } else if (ap->parsed()) {
            emit(run_apply(ao, af, aF), ao.output, ao.format);
        } else if (vf->parsed()) {
            return run_verify(suite, vo);
        } else if (tbe->parsed()) {
            emit(run_eval(teo), teo.output, teo.format);
        } else if (tba->parsed()) {
            emit(run_apply(tao, taf, taF), tao.output, tao.format);
        }
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
