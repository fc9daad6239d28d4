#include "quadfield/canonical.hpp"

#include <numbers>

#include "quadfield/elementary.hpp"

namespace quadfield {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;
constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double pi = std::numbers::pi;

std::string domain_message(const Quad& u, const char* what)
{
    return std::string(kind_name(u.kind())) + " quad " + to_string(u) + " outside the " + what +
           " domain: ";
}

}  // namespace

double wrap_angle(double a)
{
    double w = std::fmod(a, 2 * pi);
    if (w < 0) w += 2 * pi;
    if (w >= 2 * pi) w = 0;
    return w;
}

std::array<std::string_view, 4> canonical_names(Kind k)
{
    switch (k) {
    case Kind::Circular:
    case Kind::Planar: return {"xi", "upsilon", "tau", "zeta"};
    case Kind::Hyperbolic: return {"s", "s1", "s2", "s3"};
    case Kind::Polar: return {"v_plus", "v_minus", "v1", "v1_tilde"};
    }
    return {};
}

Canonical to_canonical(const Quad& u)
{
    const double x = u.x(), y = u.y(), z = u.z(), t = u.t();
    Canonical c{u.kind(), {}};
    switch (u.kind()) {
    case Kind::Circular:
        c.c = {(x + t) * inv_sqrt2, (y + z) * inv_sqrt2, (x - t) * inv_sqrt2, (y - z) * inv_sqrt2};
        break;
    case Kind::Planar:
        c.c = {x * inv_sqrt2 + (y - t) / 2, z * inv_sqrt2 + (y + t) / 2,
               x * inv_sqrt2 - (y - t) / 2, -z * inv_sqrt2 + (y + t) / 2};
        break;
    case Kind::Hyperbolic:
        c.c = {x + y + z + t, x - y + z - t, x + y - z - t, x - y - z + t};
        break;
    case Kind::Polar:
        c.c = {x + y + z + t, x - y + z - t, x - z, y - t};
        break;
    }
    return c;
}

Quad from_canonical(const Canonical& c)
{
    const double a = c[0], b = c[1], p = c[2], q = c[3];
    switch (c.kind) {
    case Kind::Circular:
        return Quad(c.kind, (a + p) * inv_sqrt2, (b + q) * inv_sqrt2, (b - q) * inv_sqrt2,
                    (a - p) * inv_sqrt2);
    case Kind::Planar: {
        const double ymt = a - p, ypt = b + q;
        return Quad(c.kind, (a + p) * inv_sqrt2, (ymt + ypt) / 2, (b - q) * inv_sqrt2,
                    (ypt - ymt) / 2);
    }
    case Kind::Hyperbolic:
        return Quad(c.kind, (a + b + p + q) / 4, (a - b + p - q) / 4, (a + b - p - q) / 4,
                    (a - b - p + q) / 4);
    case Kind::Polar: {
        const double xpz = (a + b) / 2, ypt = (a - b) / 2;
        return Quad(c.kind, (xpz + p) / 2, (ypt + q) / 2, (xpz - p) / 2, (ypt - q) / 2);
    }
    }
    return Quad();
}

Canonical canonical_mul(const Canonical& a, const Canonical& b)
{
    if (a.kind != b.kind) throw KindMismatch("canonical_mul: operands have different kinds");
    Canonical r{a.kind, {}};
    switch (a.kind) {
    case Kind::Circular:
    case Kind::Planar:
        r.c = {sqrt2 * (a[0] * b[0] - a[1] * b[1]), sqrt2 * (a[0] * b[1] + a[1] * b[0]),
               sqrt2 * (a[2] * b[2] - a[3] * b[3]), sqrt2 * (a[2] * b[3] + a[3] * b[2])};
        break;
    case Kind::Hyperbolic:
        r.c = {a[0] * b[0], a[1] * b[1], a[2] * b[2], a[3] * b[3]};
        break;
    case Kind::Polar:
        r.c = {a[0] * b[0], a[1] * b[1], a[2] * b[2] - a[3] * b[3], a[2] * b[3] + a[3] * b[2]};
        break;
    }
    return r;
}

std::array<Quad, 4> canonical_basis(Kind k)
{
    const double h = 0.5, q = 0.25, r = 0.5 * inv_sqrt2;
    switch (k) {
    case Kind::Circular:
        return {Quad(k, h, 0, 0, h), Quad(k, 0, h, h, 0), Quad(k, h, 0, 0, -h),
                Quad(k, 0, h, -h, 0)};
    case Kind::Planar:
        return {Quad(k, h, r, 0, -r), Quad(k, 0, r, h, r), Quad(k, h, -r, 0, r),
                Quad(k, 0, r, -h, r)};
    case Kind::Hyperbolic:
        return {Quad(k, q, q, q, q), Quad(k, q, -q, q, -q), Quad(k, q, q, -q, -q),
                Quad(k, q, -q, -q, q)};
    case Kind::Polar:
        return {Quad(k, q, q, q, q), Quad(k, q, -q, q, -q), Quad(k, h, 0, -h, 0),
                Quad(k, 0, h, 0, -h)};
    }
    return {};
}

double canonical_basis_scale(Kind k)
{
    return (k == Kind::Circular || k == Kind::Planar) ? sqrt2 : 1.0;
}

int spectrum_size(Kind k)
{
    switch (k) {
    case Kind::Circular:
    case Kind::Planar: return 2;
    case Kind::Hyperbolic: return 4;
    case Kind::Polar: return 3;
    }
    return 0;
}

bool channel_is_real(Kind k, int i)
{
    switch (k) {
    case Kind::Circular:
    case Kind::Planar: return false;
    case Kind::Hyperbolic: return true;
    case Kind::Polar: return i < 2;
    }
    return false;
}

Spectrum to_spectrum(const Quad& u)
{
    const Canonical c = to_canonical(u);
    Spectrum s{u.kind(), {}};
    switch (u.kind()) {
    case Kind::Circular:
    case Kind::Planar:
        s.ch[0] = {sqrt2 * c[0], sqrt2 * c[1]};
        s.ch[1] = {sqrt2 * c[2], sqrt2 * c[3]};
        break;
    case Kind::Hyperbolic:
        for (int i = 0; i < 4; ++i) s.ch[i] = c[i];
        break;
    case Kind::Polar:
        s.ch[0] = c[0];
        s.ch[1] = c[1];
        s.ch[2] = {c[2], c[3]};
        break;
    }
    return s;
}

Quad from_spectrum(const Spectrum& s)
{
    Canonical c{s.kind, {}};
    switch (s.kind) {
    case Kind::Circular:
    case Kind::Planar:
        c.c = {s.ch[0].real() * inv_sqrt2, s.ch[0].imag() * inv_sqrt2, s.ch[1].real() * inv_sqrt2,
               s.ch[1].imag() * inv_sqrt2};
        break;
    case Kind::Hyperbolic:
        for (int i = 0; i < 4; ++i) c.c[i] = s.ch[i].real();
        break;
    case Kind::Polar:
        c.c = {s.ch[0].real(), s.ch[1].real(), s.ch[2].real(), s.ch[2].imag()};
        break;
    }
    return from_canonical(c);
}

std::array<double, 4> to_frame(const Quad& u)
{
    const Canonical c = to_canonical(u);
    switch (u.kind()) {
    case Kind::Circular:
    case Kind::Planar: return c.c;
    case Kind::Hyperbolic: return {c[0] / 2, c[1] / 2, c[2] / 2, c[3] / 2};
    case Kind::Polar: return {c[2] * inv_sqrt2, c[3] * inv_sqrt2, c[0] / 2, c[1] / 2};
    }
    return {};
}

Quad from_frame(Kind k, const std::array<double, 4>& p)
{
    switch (k) {
    case Kind::Circular:
    case Kind::Planar: return from_canonical({k, p});
    case Kind::Hyperbolic: return from_canonical({k, {2 * p[0], 2 * p[1], 2 * p[2], 2 * p[3]}});
    case Kind::Polar:
        return from_canonical({k, {2 * p[2], 2 * p[3], sqrt2 * p[0], sqrt2 * p[1]}});
    }
    return Quad();
}

std::array<std::string_view, 4> exp_form_names(Kind k)
{
    switch (k) {
    case Kind::Circular:
    case Kind::Planar: return {"rho", "phi", "chi", "psi"};
    case Kind::Hyperbolic: return {"mu", "y1", "z1", "t1"};
    case Kind::Polar: return {"rho", "theta_plus", "theta_minus", "phi"};
    }
    return {};
}

std::array<std::string_view, 4> trig_form_names(Kind k)
{
    switch (k) {
    case Kind::Circular:
    case Kind::Planar:
    case Kind::Hyperbolic: return {"d", "phi", "chi", "psi"};
    case Kind::Polar: return {"d", "theta_plus", "theta_minus", "phi"};
    }
    return {};
}

namespace {

// throws DomainError unless u is inside the exponential-form domain of its kind
void require_exp_domain(const Quad& u, double tol)
{
    const auto rep = singularity(u, tol);
    if (rep.singular) {
        std::string sets;
        for (auto& s : rep.nodal_sets) sets += (sets.empty() ? "" : ",") + s;
        throw DomainError(domain_message(u, "exponential-form") + "nodal condition {" + sets +
                          "}");
    }
    const Canonical c = to_canonical(u);
    if (u.kind() == Kind::Hyperbolic) {
        static const char* names[] = {"s>0", "s'>0", "s''>0", "s'''>0"};
        for (int i = 0; i < 4; ++i)
            if (!(c[i] > 0))
                throw DomainError(domain_message(u, "exponential-form") + "requires " + names[i]);
    } else if (u.kind() == Kind::Polar) {
        if (!(c[0] > 0)) throw DomainError(domain_message(u, "exponential-form") + "requires v+>0");
        if (!(c[1] > 0)) throw DomainError(domain_message(u, "exponential-form") + "requires v->0");
    }
}

}  // namespace

ExpForm exp_form(const Quad& u, double tol)
{
    require_exp_domain(u, tol);
    ExpForm f{u.kind(), 0, {}};
    switch (u.kind()) {
    case Kind::Circular:
    case Kind::Planar: {
        const Spectrum s = to_spectrum(u);
        const double rp = std::abs(s.ch[0]), rm = std::abs(s.ch[1]);
        f.amplitude = std::sqrt(rp * rm);
        f.angle = {wrap_angle(std::arg(s.ch[0])), wrap_angle(std::arg(s.ch[1])),
                   std::atan2(rp, rm)};
        break;
    }
    case Kind::Hyperbolic: {
        const Canonical c = to_canonical(u);
        const double l0 = std::log(c[0]), l1 = std::log(c[1]), l2 = std::log(c[2]),
                     l3 = std::log(c[3]);
        f.amplitude = std::exp((l0 + l1 + l2 + l3) / 4);
        f.angle = {(l0 + l2 - l1 - l3) / 4, (l0 + l1 - l2 - l3) / 4, (l0 + l3 - l1 - l2) / 4};
        break;
    }
    case Kind::Polar: {
        const Canonical c = to_canonical(u);
        const double mu = std::hypot(c[2], c[3]);
        f.amplitude = std::sqrt(std::sqrt(c[0] * c[1]) * mu);
        f.angle = {std::atan2(sqrt2 * mu, c[0]), std::atan2(sqrt2 * mu, c[1]),
                   wrap_angle(std::atan2(c[3], c[2]))};
        break;
    }
    }
    return f;
}

Quad exp_form_exponent(const ExpForm& f)
{
    const Kind k = f.kind;
    const auto& a = f.angle;
    switch (k) {
    case Kind::Circular: {
        const double phi = a[0], chi = a[1], lt = std::log(std::tan(a[2]));
        return Quad(k, 0, (phi + chi) / 2, (phi - chi) / 2, lt / 2);
    }
    case Kind::Planar: {
        const double phi = a[0], chi = a[1], lt = std::log(std::tan(a[2]));
        const double r = 0.5 * inv_sqrt2;
        return Quad(k, 0, r * (lt + phi + chi), (phi - chi) / 2, r * (-lt + phi + chi));
    }
    case Kind::Hyperbolic: return Quad(k, 0, a[0], a[1], a[2]);
    case Kind::Polar: {
        const double lp = std::log(sqrt2 / std::tan(a[0])) / 4;
        const double lm = std::log(sqrt2 / std::tan(a[1])) / 4;
        const double phi = a[2];
        return Quad(k, 0, lp - lm + phi / 2, lp + lm, lp - lm - phi / 2);
    }
    }
    return Quad();
}

static void check_exp_form_ranges(const ExpForm& f)
{
    auto in_open = [](double v, double lo, double hi) { return v > lo && v < hi; };
    if (!(f.amplitude > 0) || !std::isfinite(f.amplitude))
        throw DomainError("exponential form requires a positive amplitude");
    for (double a : f.angle)
        if (!std::isfinite(a)) throw DomainError("exponential form angles must be finite");
    switch (f.kind) {
    case Kind::Circular:
    case Kind::Planar:
        if (!in_open(f.angle[2], 0, pi / 2)) throw DomainError("psi must lie in (0, pi/2)");
        break;
    case Kind::Polar:
        if (!in_open(f.angle[0], 0, pi / 2) || !in_open(f.angle[1], 0, pi / 2))
            throw DomainError("theta+ and theta- must lie in (0, pi/2)");
        break;
    case Kind::Hyperbolic: break;
    }
}

Quad from_exp_form(const ExpForm& f)
{
    check_exp_form_ranges(f);
    return scale(exp(exp_form_exponent(f)), f.amplitude);
}

TrigForm trig_form(const Quad& u, double tol)
{
    require_exp_domain(u, tol);
    TrigForm f{u.kind(), modulus(u), {}};
    switch (u.kind()) {
    case Kind::Circular:
    case Kind::Planar: {
        const ExpForm e = exp_form(u, tol);
        f.angle = e.angle;
        break;
    }
    case Kind::Hyperbolic: {
        const Canonical c = to_canonical(u);
        f.angle = {wrap_angle(std::atan2(c[1], c[0])), wrap_angle(std::atan2(c[3], c[2])),
                   std::atan2(std::hypot(c[2], c[3]), std::hypot(c[0], c[1]))};
        break;
    }
    case Kind::Polar: {
        const ExpForm e = exp_form(u, tol);
        f.angle = e.angle;
        break;
    }
    }
    return f;
}

Quad from_trig_form(const TrigForm& f)
{
    const Kind k = f.kind;
    const auto& a = f.angle;
    if (!(f.d > 0)) throw DomainError("trigonometric form requires d > 0");
    switch (k) {
    case Kind::Circular: {
        const double w = a[2] - pi / 4;
        Quad front(k, std::cos(w), 0, 0, std::sin(w));
        Quad rot = exp(Quad(k, 0, (a[0] + a[1]) / 2, (a[0] - a[1]) / 2, 0));
        return scale(mul(front, rot), f.d);
    }
    case Kind::Planar: {
        const double w = a[2] - pi / 4, s = std::sin(w) * inv_sqrt2;
        const double r = 0.5 * inv_sqrt2;
        Quad front(k, std::cos(w), s, 0, -s);
        Quad rot = exp(Quad(k, 0, r * (a[0] + a[1]), (a[0] - a[1]) / 2, r * (a[0] + a[1])));
        return scale(mul(front, rot), f.d);
    }
    case Kind::Hyperbolic: {
        const double phi = a[0], chi = a[1], psi = a[2];
        const double mu = f.d * std::sqrt(std::sin(2 * psi)) *
                          std::pow(std::sin(2 * phi) * std::sin(2 * chi), 0.25);
        Quad q(k, 0, std::log(1 / (std::tan(phi) * std::tan(chi))) / 4,
               std::log(std::sin(2 * phi) /
                        (std::tan(psi) * std::tan(psi) * std::sin(2 * chi))) / 4,
               std::log(std::tan(chi) / std::tan(phi)) / 4);
        return scale(exp(q), mu);
    }
    case Kind::Polar: {
        const double cp = 1 / std::tan(a[0]), cm = 1 / std::tan(a[1]);
        const auto b = canonical_basis(k);  // e+, e-, e1, ~e1
        Quad mix = add(add(b[2], scale(b[0], sqrt2 * cp)), scale(b[1], sqrt2 * cm));
        Quad rot = exp(scale(b[3], a[2]));
        const double pre = f.d * sqrt2 / std::sqrt(1 + cp * cp + cm * cm);
        return scale(mul(mix, rot), pre);
    }
    }
    return Quad();
}

PolarThetaLambda polar_theta_lambda(const Quad& u)
{
    if (u.kind() != Kind::Polar) throw KindMismatch("theta/lambda chart is defined for polar quads");
    const Canonical c = to_canonical(u);
    const double mu = std::hypot(c[2], c[3]);
    PolarThetaLambda v;
    v.d = modulus(u);
    v.theta = std::atan2(std::hypot(c[0], c[1]) / 2, mu * inv_sqrt2);
    v.lambda = wrap_angle(std::atan2(c[1], c[0]));
    v.phi = wrap_angle(std::atan2(c[3], c[2]));
    return v;
}

Quad from_polar_theta_lambda(const PolarThetaLambda& v)
{
    const Kind k = Kind::Polar;
    const auto b = canonical_basis(k);
    Quad mix = add(add(scale(b[2], std::cos(v.theta)),
                       scale(b[0], sqrt2 * std::sin(v.theta) * std::cos(v.lambda))),
                   scale(b[1], sqrt2 * std::sin(v.theta) * std::sin(v.lambda)));
    Quad rot = exp(scale(b[3], v.phi));
    return scale(mul(mix, rot), v.d * sqrt2);
}

}  // namespace quadfield
