#include "json_io.hpp"

#include <charconv>
#include <cstdio>

namespace quadfield::io {

json to_json(const Quad& u)
{
    return json{{"kind", std::string(kind_name(u.kind()))},
                {"x", u.x()},
                {"y", u.y()},
                {"z", u.z()},
                {"t", u.t()}};
}

namespace {

double number(const json& j, const char* what)
{
    if (!j.is_number()) throw InvalidValue(std::string("expected a number for ") + what);
    return j.get<double>();
}

Kind kind_of(const json& j, std::optional<Kind> fallback)
{
    if (j.is_object() && j.contains("kind")) return parse_kind(j.at("kind").get<std::string>());
    if (fallback) return *fallback;
    throw InvalidValue("quad JSON needs a kind");
}

}  // namespace

Quad quad_from_json(const json& j, std::optional<Kind> kind)
{
    if (j.is_number()) return Quad::real(kind_of(j, kind), j.get<double>());
    if (j.is_array()) {
        if (j.size() != 4) throw InvalidValue("quad arrays need exactly 4 components");
        return Quad(kind_of(j, kind), number(j[0], "x"), number(j[1], "y"), number(j[2], "z"),
                    number(j[3], "t"));
    }
    if (j.is_object()) {
        const Kind k = kind_of(j, kind);
        if (kind && *kind != k) throw KindMismatch("quad kind does not match the requested kind");
        for (const char* f : {"x", "y", "z", "t"})
            if (!j.contains(f)) throw InvalidValue(std::string("quad JSON missing field ") + f);
        return Quad(k, number(j["x"], "x"), number(j["y"], "y"), number(j["z"], "z"),
                    number(j["t"], "t"));
    }
    throw InvalidValue("cannot read a quad from " + j.dump());
}

Quad parse_quad(const std::string& text, Kind kind)
{
    std::array<double, 4> c{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t end = text.find(',', pos);
        if ((end == std::string::npos) != (i == 3))
            throw InvalidValue("expected four comma-separated numbers, got '" + text + "'");
        std::string part = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        while (!part.empty() && part.front() == ' ') part.erase(part.begin());
        while (!part.empty() && part.back() == ' ') part.pop_back();
        if (!part.empty() && part.front() == '+') part.erase(part.begin());
        const char* b = part.data();
        const char* e = b + part.size();
        auto [ptr, ec] = std::from_chars(b, e, c[i]);
        if (ec != std::errc() || ptr != e || part.empty())
            throw InvalidValue("bad number '" + part + "' in quad '" + text + "'");
        pos = end == std::string::npos ? end : end + 1;
    }
    return Quad(kind, c);
}

json to_json(const ExpForm& f)
{
    const auto names = exp_form_names(f.kind);
    json j{{"kind", std::string(kind_name(f.kind))}};
    j[std::string(names[0])] = f.amplitude;
    for (int i = 0; i < 3; ++i) j[std::string(names[i + 1])] = f.angle[i];
    return j;
}

ExpForm exp_form_from_json(const json& j)
{
    ExpForm f;
    f.kind = parse_kind(j.at("kind").get<std::string>());
    const auto names = exp_form_names(f.kind);
    f.amplitude = number(j.at(std::string(names[0])), "amplitude");
    for (int i = 0; i < 3; ++i) f.angle[i] = number(j.at(std::string(names[i + 1])), "angle");
    return f;
}

json to_json(const TrigForm& f)
{
    const auto names = trig_form_names(f.kind);
    json j{{"kind", std::string(kind_name(f.kind))}};
    j[std::string(names[0])] = f.d;
    for (int i = 0; i < 3; ++i) j[std::string(names[i + 1])] = f.angle[i];
    return j;
}

TrigForm trig_form_from_json(const json& j)
{
    TrigForm f;
    f.kind = parse_kind(j.at("kind").get<std::string>());
    const auto names = trig_form_names(f.kind);
    f.d = number(j.at(std::string(names[0])), "d");
    for (int i = 0; i < 3; ++i) f.angle[i] = number(j.at(std::string(names[i + 1])), "angle");
    return f;
}

json to_json(const Root& r)
{
    if (r.is_real()) return to_json(r.quad());
    json ch = json::array();
    for (int c = 0; c < spectrum_size(r.spectrum.kind); ++c)
        ch.push_back({r.spectrum.ch[c].real(), r.spectrum.ch[c].imag()});
    return json{{"kind", std::string(kind_name(r.spectrum.kind))},
                {"representable", false},
                {"channels", ch}};
}

std::string format_number(double v, int digits)
{
    if (v == 0) v = 0;  // drop the sign of negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string format_quad_csv(const Quad& u, int digits)
{
    return format_number(u.x(), digits) + "," + format_number(u.y(), digits) + "," +
           format_number(u.z(), digits) + "," + format_number(u.t(), digits);
}

namespace {

std::string tuple_text(const Quad& q, int digits) { return "(" + format_quad_csv(q, digits) + ")"; }

}  // namespace

std::vector<std::string> render_factors(const Factorization& f, int digits)
{
    std::vector<std::string> out;
    auto factors = real_factors(f);
    if (!factors) {
        out.push_back("roots not representable as real linear or quadratic factors");
        return out;
    }
    for (const auto& rf : *factors) {
        if (rf.quadratic)
            out.push_back("(u^2 + " + tuple_text(rf.b, digits) + " u + " + tuple_text(rf.c, digits) + ")");
        else
            out.push_back("(u - " + tuple_text(rf.c, digits) + ")");
    }
    return out;
}

json to_json(const Factorization& f)
{
    json roots = json::array();
    for (const Root& r : f.roots) roots.push_back(to_json(r));
    return json{{"roots", roots}, {"residual", f.residual}, {"all_real", f.all_real}};
}

json to_json(const Matrix4& m)
{
    json rows = json::array();
    for (int r = 0; r < 4; ++r) rows.push_back({m(r, 0), m(r, 1), m(r, 2), m(r, 3)});
    return rows;
}

Loop loop_from_json(const json& j)
{
    const Kind k = parse_kind(j.at("kind").get<std::string>());
    if (j.contains("circle")) {
        const json& c = j.at("circle");
        CircleSpec s;
        const std::string plane = c.value("plane", std::string("plus"));
        if (plane == "plus") s.plane = Plane::Plus;
        else if (plane == "minus") s.plane = Plane::Minus;
        else throw InvalidValue("circle plane must be 'plus' or 'minus'");
        s.center = c.contains("center") ? quad_from_json(c.at("center"), k) : Quad::zero(k);
        s.radius = c.value("radius", 1.0);
        s.samples = c.value("samples", 4096);
        s.psi = c.value("psi", s.psi);
        s.fixed_angle = c.value("fixed_angle", 0.0);
        return circle_loop(s);
    }
    if (j.contains("points")) {
        std::vector<Quad> pts;
        for (const json& p : j.at("points")) pts.push_back(quad_from_json(p, k));
        return polyline_loop(std::move(pts));
    }
    throw InvalidValue("loop JSON needs either 'circle' or 'points'");
}

Poly poly_from_json(const json& coeffs, Kind kind)
{
    if (!coeffs.is_array() || coeffs.empty())
        throw InvalidValue("coefficients must be a non-empty JSON array, leading first");
    Poly p{kind, {}};
    for (const json& c : coeffs) p.coeffs.push_back(quad_from_json(c, kind));
    return p;
}

}  // namespace quadfield::io
