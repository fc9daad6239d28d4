#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"

namespace quadfield::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string kind;
    std::string format;
    int digits = 9;
    double tol = default_tol;
};

const std::vector<std::string> kind_names{"circular", "hyperbolic", "planar", "polar"};

double env_tol()
{
    const char* v = std::getenv("QUADFIELD_TOL");
    if (!v) return default_tol;
    const std::string text(v);
    double tol = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), tol);
    if (ec != std::errc() || ptr != text.data() + text.size() || !(tol > 0) || !std::isfinite(tol))
        throw UsageError("QUADFIELD_TOL must be a positive number, got '" + text + "'");
    return tol;
}

void add_common(CLI::App* sub, Common& c, bool need_kind, const std::string& default_format)
{
    c.format = default_format;
    c.tol = env_tol();
    auto* k = sub->add_option("--kind", c.kind, "circular, hyperbolic, planar or polar")
                  ->check(CLI::IsMember(kind_names));
    if (need_kind) k->required();
    sub->add_option("--format", c.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--digits", c.digits, "significant digits for csv and text output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    sub->add_option("--tol", c.tol, "singularity tolerance (default from QUADFIELD_TOL)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::string read_payload(const std::string& text)
{
    if (text.empty() || text.front() != '@') return text;
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot open " + text.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(read_payload(text));
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

Quad quad_arg(const std::string& text, Kind k, const char* flag)
{
    if (text.empty()) throw UsageError(std::string(flag) + " is required for this operation");
    return io::parse_quad(text, k);
}

void print_quad(std::ostream& out, const Quad& q, const Common& c)
{
    if (c.format == "json") out << io::to_json(q).dump() << '\n';
    else out << io::format_quad_csv(q, c.digits) << '\n';
}

void print_scalar(std::ostream& out, const char* name, double v, const Common& c)
{
    if (c.format == "json") out << json{{name, v}}.dump() << '\n';
    else out << io::format_number(v, c.digits) << '\n';
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
    Common c;
    std::string op, a, b;
    double n = 2;
};

const std::vector<std::string> eval_ops{"add", "sub", "mul", "div", "inv", "pow",
                                        "exp", "log", "sin", "cos", "sinh", "cosh",
                                        "canonical", "modulus", "norm4", "amplitude",
                                        "singularity"};

void run_eval(const EvalArgs& e, std::ostream& out)
{
    const Kind k = parse_kind(e.c.kind);
    const Quad u = quad_arg(e.a, k, "--a");
    const double tol = e.c.tol;
    const std::string& op = e.op;

    if (op == "add" || op == "sub" || op == "mul" || op == "div") {
        const Quad v = quad_arg(e.b, k, "--b");
        Quad r = op == "add" ? u + v : op == "sub" ? u - v : op == "mul" ? u * v : divide(u, v, tol);
        print_quad(out, r, e.c);
    } else if (op == "inv") {
        print_quad(out, inverse(u, tol), e.c);
    } else if (op == "pow") {
        const bool integral = e.n == std::trunc(e.n) && std::abs(e.n) < 1e15;
        print_quad(out, integral ? pow_int(u, static_cast<long long>(e.n), tol) : pow_real(u, e.n, tol), e.c);
    } else if (op == "exp") {
        print_quad(out, exp(u), e.c);
    } else if (op == "log") {
        print_quad(out, log(u, tol), e.c);
    } else if (op == "sin") {
        print_quad(out, sin(u), e.c);
    } else if (op == "cos") {
        print_quad(out, cos(u), e.c);
    } else if (op == "sinh") {
        print_quad(out, sinh(u), e.c);
    } else if (op == "cosh") {
        print_quad(out, cosh(u), e.c);
    } else if (op == "canonical") {
        const Canonical cn = to_canonical(u);
        const auto names = canonical_names(k);
        if (e.c.format == "json") {
            json j{{"kind", std::string(kind_name(k))}};
            for (int i = 0; i < 4; ++i) j[std::string(names[i])] = cn[i];
            out << j.dump() << '\n';
        } else {
            for (int i = 0; i < 4; ++i) out << (i ? "," : "") << io::format_number(cn[i], e.c.digits);
            out << '\n';
        }
    } else if (op == "modulus") {
        print_scalar(out, "modulus", modulus(u), e.c);
    } else if (op == "norm4") {
        print_scalar(out, "norm4", norm4(u), e.c);
    } else if (op == "amplitude") {
        const Amplitude a = amplitude(u);
        if (e.c.format == "json")
            out << json{{"nu", a.nu}, {"defined", a.defined}, {"value", a.value}}.dump() << '\n';
        else
            out << io::format_number(a.nu, e.c.digits) << ',' << (a.defined ? "true" : "false") << ','
                << io::format_number(a.value, e.c.digits) << '\n';
    } else if (op == "singularity") {
        const SingularityReport r = singularity(u, tol);
        if (e.c.format == "json") {
            out << json{{"singular", r.singular}, {"nodal_sets", r.nodal_sets}, {"margin", r.margin}}.dump()
                << '\n';
        } else {
            out << (r.singular ? "singular" : "regular");
            for (const auto& s : r.nodal_sets) out << ' ' << s;
            out << '\n';
        }
    }
}

// ---- expform --------------------------------------------------------------

struct ExpArgs {
    Common c;
    std::string a, inverse;
    bool trig = false;
};

void print_form(std::ostream& out, const json& j, const std::array<std::string_view, 4>& names,
                const Common& c)
{
    if (c.format == "json") {
        out << j.dump() << '\n';
        return;
    }
    for (int i = 0; i < 4; ++i) {
        const double v = j.at(std::string(names[i])).get<double>();
        if (c.format == "csv") out << (i ? "," : "") << io::format_number(v, c.digits);
        else out << names[i] << " = " << io::format_number(v, c.digits) << '\n';
    }
    if (c.format == "csv") out << '\n';
}

void run_expform(const ExpArgs& e, std::ostream& out)
{
    if (!e.inverse.empty()) {
        const json j = parse_json(e.inverse);
        const Quad q = e.trig ? from_trig_form(io::trig_form_from_json(j))
                              : from_exp_form(io::exp_form_from_json(j));
        if (!e.c.kind.empty() && parse_kind(e.c.kind) != q.kind())
            throw KindMismatch("--kind does not match the form's kind");
        print_quad(out, q, e.c);
        return;
    }
    if (e.c.kind.empty()) throw UsageError("--kind is required unless --inverse is given");
    const Kind k = parse_kind(e.c.kind);
    const Quad u = quad_arg(e.a, k, "--a");
    if (e.trig) print_form(out, io::to_json(trig_form(u, e.c.tol)), trig_form_names(k), e.c);
    else print_form(out, io::to_json(exp_form(u, e.c.tol)), exp_form_names(k), e.c);
}

// ---- factor ---------------------------------------------------------------

struct FactorArgs {
    Common c;
    std::string coeffs;
    int enumerate = 0;
};

void run_factor(const FactorArgs& f, std::ostream& out)
{
    const Kind k = parse_kind(f.c.kind);
    const Poly p = io::poly_from_json(parse_json(f.coeffs), k);
    if (p.degree() < 1) throw InvalidValue("polynomial must have degree at least 1");
    const std::vector<Factorization> all =
        f.enumerate > 0 ? enumerate_factorizations(p, f.enumerate) : std::vector<Factorization>{factor(p)};

    if (f.c.format == "json") {
        json list = json::array();
        for (const auto& fac : all) {
            json j = io::to_json(fac);
            j["factors"] = io::render_factors(fac, f.c.digits);
            list.push_back(std::move(j));
        }
        out << json{{"kind", std::string(kind_name(k))},
                    {"degree", p.degree()},
                    {"count", all.size()},
                    {"factorizations", list}}
                   .dump()
            << '\n';
        return;
    }
    out << all.size() << " factorization" << (all.size() == 1 ? "" : "s") << '\n';
    for (std::size_t i = 0; i < all.size(); ++i) {
        out << i + 1 << ": ";
        for (const auto& s : io::render_factors(all[i], f.c.digits)) out << s;
        out << '\n';
    }
}

// ---- integrate ------------------------------------------------------------

struct IntegrateArgs {
    Common c;
    std::string loop, integrand = "pole", pole;
    int m = 2;
};

void run_integrate(const IntegrateArgs& a, std::ostream& out)
{
    const json spec = parse_json(a.loop);
    const Loop loop = io::loop_from_json(spec);
    const Kind k = loop.kind;
    if (!a.c.kind.empty() && parse_kind(a.c.kind) != k)
        throw KindMismatch("--kind does not match the loop's kind");
    const Quad u0 = a.pole.empty() ? Quad::zero(k) : io::parse_quad(a.pole, k);
    const double tol = a.c.tol;

    QuadFn f;
    std::vector<Pole> poles;
    if (a.integrand == "pole") {
        f = [u0, tol](const Quad& u) { return inverse(u - u0, tol); };
        poles.push_back({u0, Quad::one(k)});
    } else if (a.integrand == "pole_m") {
        if (a.m < 1) throw UsageError("--m must be at least 1");
        const int m = a.m;
        f = [u0, m, tol](const Quad& u) { return pow_int(u - u0, -m, tol); };
        if (m == 1) poles.push_back({u0, Quad::one(k)});
    } else if (a.integrand == "square") {
        f = [u0](const Quad& u) { return (u - u0) * (u - u0); };
    } else {
        f = [u0, tol](const Quad& u) { return divide(exp(u), u - u0, tol); };
        poles.push_back({u0, exp(u0)});
    }

    const Quad result = integrate_loop(f, loop);
    const Quad prediction = poles.empty() ? Quad::zero(k) : residue_prediction(poles, loop);
    const double dist = projection_distance(u0, loop);
    const bool near = dist < 1e-6;

    if (a.c.format == "json") {
        json j{{"integrand", a.integrand},
               {"result", io::to_json(result)},
               {"prediction", io::to_json(prediction)},
               {"abs_error", max_abs_diff(result, prediction)},
               {"projection_distance", std::isfinite(dist) ? json(dist) : json(nullptr)}};
        if (near) j["warning"] = "OnBoundary: pole projection lies within 1e-6 of the loop";
        out << j.dump() << '\n';
        return;
    }
    if (a.c.format == "csv") {
        out << "which,x,y,z,t\n";
        out << "result," << io::format_quad_csv(result, a.c.digits) << '\n';
        out << "prediction," << io::format_quad_csv(prediction, a.c.digits) << '\n';
    } else {
        out << "result     " << io::format_quad_csv(result, a.c.digits) << '\n';
        out << "prediction " << io::format_quad_csv(prediction, a.c.digits) << '\n';
        out << "error      " << io::format_number(max_abs_diff(result, prediction), a.c.digits) << '\n';
    }
    if (near) out << "warning: OnBoundary: pole projection lies within 1e-6 of the loop\n";
}

// ---- cosexp ---------------------------------------------------------------

struct CosexpArgs {
    Common c;
    std::string family = "g";
    double from = 0, to = 1, step = 0.1;
};

void run_cosexp(const CosexpArgs& a, std::ostream& out)
{
    if (!(a.step > 0)) throw UsageError("--step must be positive");
    if (a.to < a.from) throw UsageError("--to must not be smaller than --from");
    const CosexpFamily fam = a.family == "f" ? CosexpFamily::PlanarF : CosexpFamily::PolarG;
    const std::string p = a.family;
    const long long n = static_cast<long long>(std::floor((a.to - a.from) / a.step + 1e-9));
    if (n > 10000000) throw UsageError("too many rows");

    json rows = json::array();
    if (a.c.format != "json") out << "x," << p << "40," << p << "41," << p << "42," << p << "43\n";
    for (long long i = 0; i <= n; ++i) {
        const double x = a.from + static_cast<double>(i) * a.step;
        const auto v = cosexp_all(fam, x);
        if (a.c.format == "json") {
            rows.push_back({{"x", x}, {p + "40", v[0]}, {p + "41", v[1]}, {p + "42", v[2]}, {p + "43", v[3]}});
            continue;
        }
        out << io::format_number(x, a.c.digits);
        for (double c : v) out << ',' << io::format_number(c, a.c.digits);
        out << '\n';
    }
    if (a.c.format == "json") out << rows.dump() << '\n';
}

// ---- matrix ---------------------------------------------------------------

struct MatrixArgs {
    Common c;
    std::string a;
};

void print_matrix(std::ostream& out, const char* title, const Matrix4& m, int digits)
{
    out << title << '\n';
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) out << (c ? "," : "") << io::format_number(m(r, c), digits);
        out << '\n';
    }
}

void run_matrix(const MatrixArgs& a, std::ostream& out)
{
    const Kind k = parse_kind(a.c.kind);
    const Quad u = quad_arg(a.a, k, "--a");
    const Matrix4 m = represent(u);
    const Matrix4 b = block_diagonalize(u);
    if (a.c.format == "json") {
        out << json{{"kind", std::string(kind_name(k))},
                    {"matrix", io::to_json(m)},
                    {"basis_change", io::to_json(basis_change(k))},
                    {"block", io::to_json(b)},
                    {"determinant", determinant(m)},
                    {"norm4", norm4(u)}}
                   .dump()
            << '\n';
        return;
    }
    print_matrix(out, "matrix", m, a.c.digits);
    print_matrix(out, "block", b, a.c.digits);
    out << "determinant\n" << io::format_number(determinant(m), a.c.digits) << '\n';
}

void print_error(std::ostream& out, std::string_view code, const std::string& msg)
{
    out << json{{"error", std::string(code)}, {"message", msg}}.dump() << '\n';
}

int run_checked(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Arithmetic and analysis in four-dimensional commutative hypercomplex algebras",
                 "quadfield"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate an operation on quads");
    add_common(eval, ev.c, true, "csv");
    eval->add_option("--op", ev.op, "operation")->required()->check(CLI::IsMember(eval_ops));
    eval->add_option("--a", ev.a, "first operand as x,y,z,t");
    eval->add_option("--b", ev.b, "second operand as x,y,z,t");
    eval->add_option("--n", ev.n, "exponent for pow")->capture_default_str();

    ExpArgs ex;
    auto* expform = app.add_subcommand("expform", "exponential or trigonometric form of a quad");
    add_common(expform, ex.c, false, "json");
    expform->add_option("--a", ex.a, "quad as x,y,z,t");
    expform->add_flag("--trig", ex.trig, "use the trigonometric form");
    expform->add_option("--inverse", ex.inverse, "form JSON (or @file) to convert back to a quad");

    FactorArgs fa;
    auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial with quad coefficients");
    add_common(factor_cmd, fa.c, true, "json");
    factor_cmd->add_option("--coeffs", fa.coeffs, "JSON coefficient list (or @file), leading first")
        ->required();
    factor_cmd->add_option("--enumerate", fa.enumerate, "list up to N distinct factorizations")
        ->check(CLI::NonNegativeNumber);

    IntegrateArgs in;
    auto* integrate = app.add_subcommand("integrate", "integrate a built-in function around a loop");
    add_common(integrate, in.c, false, "json");
    integrate->add_option("--loop", in.loop, "loop JSON (or @file)")->required();
    integrate->add_option("--integrand", in.integrand, "pole, pole_m, square or exp")
        ->check(CLI::IsMember({"pole", "pole_m", "square", "exp"}))
        ->capture_default_str();
    integrate->add_option("--pole", in.pole, "pole position u0 as x,y,z,t (default 0)");
    integrate->add_option("--m", in.m, "order of pole_m")->capture_default_str();

    CosexpArgs co;
    auto* cosexp_cmd = app.add_subcommand("cosexp", "tabulate the cosexponential functions");
    add_common(cosexp_cmd, co.c, false, "csv");
    cosexp_cmd->add_option("--family", co.family, "f (planar) or g (polar)")
        ->check(CLI::IsMember({"f", "g"}))
        ->capture_default_str();
    cosexp_cmd->add_option("--from", co.from)->capture_default_str();
    cosexp_cmd->add_option("--to", co.to)->capture_default_str();
    cosexp_cmd->add_option("--step", co.step)->capture_default_str();

    MatrixArgs ma;
    auto* matrix = app.add_subcommand("matrix", "matrix representation and block form");
    add_common(matrix, ma.c, true, "text");
    matrix->add_option("--a", ma.a, "quad as x,y,z,t")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*eval) run_eval(ev, out);
        else if (*expform) run_expform(ex, out);
        else if (*factor_cmd) run_factor(fa, out);
        else if (*integrate) run_integrate(in, out);
        else if (*cosexp_cmd) run_cosexp(co, out);
        else if (*matrix) run_matrix(ma, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const InvalidValue& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const KindMismatch& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        print_error(out, e.code(), e.what());
        return 2;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return run_checked(args, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace quadfield::cli
