#include "quadfield/quad.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace quadfield {

std::string_view kind_name(Kind k)
{
    switch (k) {
    case Kind::Circular: return "circular";
    case Kind::Hyperbolic: return "hyperbolic";
    case Kind::Planar: return "planar";
    case Kind::Polar: return "polar";
    }
    return "?";
}

Kind parse_kind(std::string_view name)
{
    for (Kind k : all_kinds)
        if (kind_name(k) == name) return k;
    throw InvalidValue("unknown algebra kind '" + std::string(name) + "'");
}

Quad::Quad(Kind k, double x, double y, double z, double t) : kind_(k), c_{x, y, z, t}
{
    for (double v : c_)
        if (!std::isfinite(v)) throw InvalidValue("quad components must be finite");
}

Quad Quad::unit(Kind k, int i)
{
    std::array<double, 4> c{0, 0, 0, 0};
    c.at(i) = 1.0;
    return Quad(k, c);
}

static void require_same(const Quad& u, const Quad& v)
{
    if (u.kind() != v.kind())
        throw KindMismatch("operands have different kinds: " + std::string(kind_name(u.kind())) +
                           " and " + std::string(kind_name(v.kind())));
}

Quad add(const Quad& u, const Quad& v)
{
    require_same(u, v);
    return Quad(u.kind(), u.x() + v.x(), u.y() + v.y(), u.z() + v.z(), u.t() + v.t());
}

Quad sub(const Quad& u, const Quad& v)
{
    require_same(u, v);
    return Quad(u.kind(), u.x() - v.x(), u.y() - v.y(), u.z() - v.z(), u.t() - v.t());
}

Quad neg(const Quad& u) { return Quad(u.kind(), -u.x(), -u.y(), -u.z(), -u.t()); }

Quad scale(const Quad& u, double s)
{
    return Quad(u.kind(), s * u.x(), s * u.y(), s * u.z(), s * u.t());
}

// Each product is written out term by term.  Terms are grouped so that
// swapping the operands yields bit-identical results.
Quad mul(const Quad& u, const Quad& v)
{
    require_same(u, v);
    const double x = u.x(), y = u.y(), z = u.z(), t = u.t();
    const double X = v.x(), Y = v.y(), Z = v.z(), T = v.t();
    switch (u.kind()) {
    case Kind::Circular:
        return Quad(u.kind(),
                    x * X - y * Y - z * Z + t * T,
                    (x * Y + y * X) + (z * T + t * Z),
                    (x * Z + z * X) + (y * T + t * Y),
                    (x * T + t * X) - (y * Z + z * Y));
    case Kind::Hyperbolic:
        return Quad(u.kind(),
                    x * X + y * Y + z * Z + t * T,
                    (x * Y + y * X) + (z * T + t * Z),
                    (x * Z + z * X) + (y * T + t * Y),
                    (x * T + t * X) + (y * Z + z * Y));
    case Kind::Planar:
        return Quad(u.kind(),
                    x * X - (y * T + t * Y) - z * Z,
                    (x * Y + y * X) - (z * T + t * Z),
                    (x * Z + z * X) + y * Y - t * T,
                    (x * T + t * X) + (y * Z + z * Y));
    case Kind::Polar:
        return Quad(u.kind(),
                    x * X + (y * T + t * Y) + z * Z,
                    (x * Y + y * X) + (z * T + t * Z),
                    (x * Z + z * X) + y * Y + t * T,
                    (x * T + t * X) + (y * Z + z * Y));
    }
    return Quad();
}

double modulus(const Quad& u)
{
    return std::sqrt(u.x() * u.x() + u.y() * u.y() + u.z() * u.z() + u.t() * u.t());
}

double max_abs_diff(const Quad& u, const Quad& v)
{
    double m = 0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

struct Circ {
    double rp2, rm2;  // ρ₊², ρ₋²
};

Circ circular_radii(const Quad& u)
{
    const double x = u.x(), y = u.y(), z = u.z(), t = u.t();
    if (u.kind() == Kind::Circular)
        return {(x + t) * (x + t) + (y + z) * (y + z), (x - t) * (x - t) + (y - z) * (y - z)};
    const double a = (y - t) * inv_sqrt2, b = (y + t) * inv_sqrt2;
    return {(x + a) * (x + a) + (z + b) * (z + b), (x - a) * (x - a) + (z - b) * (z - b)};
}

}  // namespace

double norm4(const Quad& u)
{
    const double x = u.x(), y = u.y(), z = u.z(), t = u.t();
    switch (u.kind()) {
    case Kind::Circular:
    case Kind::Planar: {
        auto r = circular_radii(u);
        return r.rp2 * r.rm2;
    }
    case Kind::Hyperbolic:
        return (x + y + z + t) * (x - y + z - t) * (x + y - z - t) * (x - y - z + t);
    case Kind::Polar:
        return (x + y + z + t) * (x - y + z - t) * ((x - z) * (x - z) + (y - t) * (y - t));
    }
    return 0;
}

Amplitude amplitude(const Quad& u)
{
    Amplitude a;
    a.nu = norm4(u);
    if (a.nu < 0) {
        a.defined = false;
        a.value = 0;
    } else {
        a.value = std::sqrt(std::sqrt(a.nu));
    }
    return a;
}

SingularityReport singularity(const Quad& u, double tol)
{
    if (!(tol > 0)) throw InvalidValue("singularity tolerance must be positive");
    const double x = u.x(), y = u.y(), z = u.z(), t = u.t();
    const double scale = std::max(modulus(u), tol);
    std::vector<std::pair<const char*, double>> cond;
    switch (u.kind()) {
    case Kind::Circular:
    case Kind::Planar: {
        auto r = circular_radii(u);
        cond = {{"rho+=0", std::sqrt(r.rp2)}, {"rho-=0", std::sqrt(r.rm2)}};
        break;
    }
    case Kind::Hyperbolic:
        cond = {{"s=0", std::abs(x + y + z + t)},
                {"s'=0", std::abs(x - y + z - t)},
                {"s''=0", std::abs(x + y - z - t)},
                {"s'''=0", std::abs(x - y - z + t)}};
        break;
    case Kind::Polar:
        cond = {{"v+=0", std::abs(x + y + z + t)},
                {"v-=0", std::abs(x - y + z - t)},
                {"mu+=0", std::hypot(x - z, y - t)}};
        break;
    }
    SingularityReport rep;
    rep.margin = std::numeric_limits<double>::infinity();
    for (auto& [name, res] : cond) {
        double r = res / scale;
        rep.margin = std::min(rep.margin, r);
        if (r <= tol) rep.nodal_sets.emplace_back(name);
    }
    rep.singular = !rep.nodal_sets.empty();
    return rep;
}

Quad inverse(const Quad& u, double tol)
{
    auto rep = singularity(u, tol);
    if (rep.singular) {
        std::string sets;
        for (auto& s : rep.nodal_sets) sets += (sets.empty() ? "" : ",") + s;
        throw SingularValue("quad " + to_string(u) + " lies on nodal set {" + sets +
                            "} and has no inverse");
    }
    const double x = u.x(), y = u.y(), z = u.z(), t = u.t();
    const double x2 = x * x, y2 = y * y, z2 = z * z, t2 = t * t;
    const Kind k = u.kind();
    switch (k) {
    case Kind::Circular: {
        const double r4 = norm4(u);
        return Quad(k,
                    (x * (x2 + y2 + z2 - t2) - 2 * y * z * t) / r4,
                    (y * (-x2 - y2 + z2 - t2) + 2 * x * z * t) / r4,
                    (z * (-x2 + y2 - z2 - t2) + 2 * x * y * t) / r4,
                    (t * (-x2 + y2 + z2 + t2) - 2 * x * y * z) / r4);
    }
    case Kind::Hyperbolic: {
        const double nu = norm4(u);
        return Quad(k,
                    (x * (x2 - y2 - z2 - t2) + 2 * y * z * t) / nu,
                    (y * (-x2 + y2 - z2 - t2) + 2 * x * z * t) / nu,
                    (z * (-x2 - y2 + z2 - t2) + 2 * x * y * t) / nu,
                    (t * (-x2 - y2 - z2 + t2) + 2 * x * y * z) / nu);
    }
    case Kind::Planar: {
        const double r4 = norm4(u);
        return Quad(k,
                    (x * (x2 + z2) - z * (y2 - t2) + 2 * x * y * t) / r4,
                    -(y * (x2 - z2) + t * (y2 + t2) + 2 * x * z * t) / r4,
                    (-z * (x2 + z2) + x * (y2 - t2) + 2 * z * y * t) / r4,
                    -(t * (x2 - z2) + y * (y2 + t2) - 2 * x * y * z) / r4);
    }
    case Kind::Polar: {
        const double nu = norm4(u);
        return Quad(k,
                    (x * (x2 - z2) + z * (y2 + t2) - 2 * x * y * t) / nu,
                    (-y * (x2 + z2) + t * (y2 - t2) + 2 * x * z * t) / nu,
                    (-z * (x2 - z2) + x * (y2 + t2) - 2 * y * z * t) / nu,
                    (-t * (x2 + z2) - y * (y2 - t2) + 2 * x * y * z) / nu);
    }
    }
    return Quad();
}

Quad divide(const Quad& u, const Quad& v, double tol) { return mul(u, inverse(v, tol)); }

Quad pow_int(const Quad& u, long long m, double tol)
{
    Quad base = m < 0 ? inverse(u, tol) : u;
    unsigned long long n = m < 0 ? 0ULL - static_cast<unsigned long long>(m)
                                 : static_cast<unsigned long long>(m);
    Quad acc = Quad::one(u.kind());
    while (n) {
        if (n & 1ULL) acc = mul(acc, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return acc;
}

std::string to_string(const Quad& u)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s(%.17g, %.17g, %.17g, %.17g)", std::string(kind_name(u.kind())).c_str(),
                  u.x(), u.y(), u.z(), u.t());
    return buf;
}

}  // namespace quadfield
