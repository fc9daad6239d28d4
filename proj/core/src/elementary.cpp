#include "quadfield/elementary.hpp"

#include <numbers>

#include "quadfield/canonical.hpp"

namespace quadfield {

namespace {
constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

void check_index(int k)
{
    if (k < 0 || k > 3) throw InvalidValue("cosexponential index must be 0..3");
}

void check_axis(int axis)
{
    if (axis < 1 || axis > 3) throw InvalidValue("axis must be 1 (alpha), 2 (beta) or 3 (gamma)");
}
}  // namespace

std::array<double, 4> cosexp_all(CosexpFamily fam, double x)
{
    if (fam == CosexpFamily::PlanarF) {
        const double a = x * inv_sqrt2;
        const double c = std::cos(a), s = std::sin(a), ch = std::cosh(a), sh = std::sinh(a);
        return {c * ch, (s * ch + sh * c) * inv_sqrt2, s * sh, (s * ch - sh * c) * inv_sqrt2};
    }
    const double c = std::cos(x), s = std::sin(x), ch = std::cosh(x), sh = std::sinh(x);
    return {(ch + c) / 2, (sh + s) / 2, (ch - c) / 2, (sh - s) / 2};
}

double cosexp(CosexpFamily fam, int k, double x)
{
    check_index(k);
    return cosexp_all(fam, x)[k];
}

double cosexp_series(CosexpFamily fam, int k, double x, int terms)
{
    check_index(k);
    if (terms < 1) throw InvalidValue("series needs at least one term");
    // first term x^k / k!
    double term = 1;
    for (int j = 1; j <= k; ++j) term *= x / j;
    const double sign = fam == CosexpFamily::PlanarF ? -1.0 : 1.0;
    double sum = 0;
    for (int m = 0; m < terms; ++m) {
        sum += term;
        const int n = 4 * m + k;
        term *= sign * x * x * x * x / ((n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0));
    }
    return sum;
}

Quad exp_axis(Kind k, int axis, double s)
{
    check_axis(axis);
    std::array<double, 4> c{0, 0, 0, 0};
    auto circ = [&](double a, double b) {
        c[0] = a;
        c[axis] = b;
    };
    switch (k) {
    case Kind::Circular:
        if (axis == 3) circ(std::cosh(s), std::sinh(s));
        else circ(std::cos(s), std::sin(s));
        break;
    case Kind::Hyperbolic: circ(std::cosh(s), std::sinh(s)); break;
    case Kind::Planar: {
        if (axis == 2) {
            circ(std::cos(s), std::sin(s));
            break;
        }
        const auto f = cosexp_all(CosexpFamily::PlanarF, s);
        if (axis == 1) c = f;
        else c = {f[0], f[3], -f[2], f[1]};
        break;
    }
    case Kind::Polar: {
        if (axis == 2) {
            circ(std::cosh(s), std::sinh(s));
            break;
        }
        const auto g = cosexp_all(CosexpFamily::PolarG, s);
        if (axis == 1) c = g;
        else c = {g[0], g[3], g[2], g[1]};
        break;
    }
    }
    return Quad(k, c);
}

Quad exp(const Quad& u)
{
    const Kind k = u.kind();
    Quad r = Quad::real(k, std::exp(u.x()));
    for (int axis = 1; axis <= 3; ++axis) r = mul(r, exp_axis(k, axis, u[axis]));
    return r;
}

Quad log(const Quad& u, double tol)
{
    const ExpForm f = exp_form(u, tol);
    return add(Quad::real(u.kind(), std::log(f.amplitude)), exp_form_exponent(f));
}

Quad pow_real(const Quad& u, double n, double tol) { return exp(scale(log(u, tol), n)); }

AxisTrig trig_axis(Kind k, int axis, double s)
{
    check_axis(axis);
    auto q = [k](double a, double b, double c, double d) { return Quad(k, a, b, c, d); };
    auto unit = [&](double v) {
        std::array<double, 4> c{0, 0, 0, 0};
        c[axis] = v;
        return Quad(k, c);
    };
    const double cs = std::cos(s), sn = std::sin(s), ch = std::cosh(s), sh = std::sinh(s);
    // units squaring to -1 swap the circular and hyperbolic functions
    auto square_minus_one = [&]() {
        return AxisTrig{Quad::real(k, ch), unit(sh), Quad::real(k, cs), unit(sn)};
    };
    auto square_plus_one = [&]() {
        return AxisTrig{Quad::real(k, cs), unit(sn), Quad::real(k, ch), unit(sh)};
    };
    switch (k) {
    case Kind::Circular: return axis == 3 ? square_plus_one() : square_minus_one();
    case Kind::Hyperbolic: return square_plus_one();
    case Kind::Planar: {
        if (axis == 2) return square_minus_one();
        const auto f = cosexp_all(CosexpFamily::PlanarF, s);
        if (axis == 1)
            return {q(f[0], 0, -f[2], 0), q(0, f[1], 0, -f[3]), q(f[0], 0, f[2], 0),
                    q(0, f[1], 0, f[3])};
        return {q(f[0], 0, f[2], 0), q(0, -f[3], 0, f[1]), q(f[0], 0, -f[2], 0),
                q(0, f[3], 0, f[1])};
    }
    case Kind::Polar: {
        if (axis == 2) return square_plus_one();
        const auto g = cosexp_all(CosexpFamily::PolarG, s);
        if (axis == 1)
            return {q(g[0], 0, -g[2], 0), q(0, g[1], 0, -g[3]), q(g[0], 0, g[2], 0),
                    q(0, g[1], 0, g[3])};
        return {q(g[0], 0, -g[2], 0), q(0, -g[3], 0, g[1]), q(g[0], 0, g[2], 0),
                q(0, g[3], 0, g[1])};
    }
    }
    return {};
}

namespace {

struct Pair {
    Quad a, b;
};

// fold the addition theorems over x, alpha y, beta z, gamma t in that order
Pair circular_pair(const Quad& u)
{
    const Kind k = u.kind();
    Pair p{Quad::real(k, std::cos(u.x())), Quad::real(k, std::sin(u.x()))};
    for (int axis = 1; axis <= 3; ++axis) {
        const AxisTrig t = trig_axis(k, axis, u[axis]);
        p = {sub(mul(p.a, t.cos), mul(p.b, t.sin)), add(mul(p.b, t.cos), mul(p.a, t.sin))};
    }
    return p;
}

Pair hyperbolic_pair(const Quad& u)
{
    const Kind k = u.kind();
    Pair p{Quad::real(k, std::cosh(u.x())), Quad::real(k, std::sinh(u.x()))};
    for (int axis = 1; axis <= 3; ++axis) {
        const AxisTrig t = trig_axis(k, axis, u[axis]);
        p = {add(mul(p.a, t.cosh), mul(p.b, t.sinh)), add(mul(p.b, t.cosh), mul(p.a, t.sinh))};
    }
    return p;
}

}  // namespace

Quad cos(const Quad& u) { return circular_pair(u).a; }
Quad sin(const Quad& u) { return circular_pair(u).b; }
Quad cosh(const Quad& u) { return hyperbolic_pair(u).a; }
Quad sinh(const Quad& u) { return hyperbolic_pair(u).b; }

}  // namespace quadfield
