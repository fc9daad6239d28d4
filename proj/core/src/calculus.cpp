#include "quadfield/calculus.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>

#include "quadfield/canonical.hpp"

namespace quadfield {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

void check_series(const SeriesSpec& s)
{
    for (const Quad& a : s.coeffs)
        if (a.kind() != s.kind) throw KindMismatch("series coefficient of the wrong kind");
}

}  // namespace

Quad eval_series(const SeriesSpec& s, const Quad& u)
{
    check_series(s);
    if (u.kind() != s.kind) throw KindMismatch("series and argument have different kinds");
    if (s.coeffs.empty()) return Quad::zero(s.kind);
    Quad r = s.coeffs.back();
    for (auto it = s.coeffs.rbegin() + 1; it != s.coeffs.rend(); ++it) r = add(mul(r, u), *it);
    return r;
}

Quad eval_series_canonical(const SeriesSpec& s, const Quad& u)
{
    check_series(s);
    if (u.kind() != s.kind) throw KindMismatch("series and argument have different kinds");
    const int n = spectrum_size(s.kind);
    const Spectrum z = to_spectrum(u);
    Spectrum r{s.kind, {}};
    for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) {
        const Spectrum a = to_spectrum(*it);
        for (int c = 0; c < n; ++c) r.ch[c] = r.ch[c] * z.ch[c] + a.ch[c];
    }
    return from_spectrum(r);
}

ConvergenceBounds convergence_bounds(const SeriesSpec& s)
{
    check_series(s);
    const auto& a = s.coeffs;
    if (a.size() < 2) throw DegenerateSeries("convergence estimate needs at least two coefficients");
    if (modulus(a.back()) == 0)
        throw DegenerateSeries("trailing series coefficient vanishes");

    const bool two_planes = s.kind == Kind::Circular || s.kind == Kind::Planar;
    const double global_factor = two_planes ? std::numbers::sqrt2 : 2.0;
    const double channel_factor = two_planes ? std::numbers::sqrt2 : 1.0;

    const std::size_t L = a.size() - 1;
    const std::size_t window = std::min(L, std::max<std::size_t>(3, L / 4));

    auto tail_min = [&](auto norm, double factor) {
        double best = inf;
        for (std::size_t l = L - window; l < L; ++l) {
            const double num = norm(a[l]), den = norm(a[l + 1]);
            if (den == 0) continue;  // vanishing term: no constraint
            best = std::min(best, num / (factor * den));
        }
        return best;
    };

    ConvergenceBounds b;
    b.global = tail_min([](const Quad& q) { return modulus(q); }, global_factor);
    const int n = spectrum_size(s.kind);
    for (int c = 0; c < n; ++c)
        b.canonical.push_back(
            tail_min([c](const Quad& q) { return std::abs(to_spectrum(q).ch[c]); }, channel_factor));
    return b;
}

// ---- analyticity ----------------------------------------------------------

namespace {

Quad shifted(const Quad& u, int i, double d)
{
    auto c = u.components();
    c[i] += d;
    return Quad(u.kind(), c);
}

Quad shifted(const Quad& u, int i, double di, int j, double dj)
{
    auto c = u.components();
    c[i] += di;
    c[j] += dj;
    return Quad(u.kind(), c);
}

}  // namespace

double check_analytic(const QuadFn& f, const Quad& u0, double h)
{
    if (!(h > 0)) throw InvalidValue("finite-difference step must be positive");
    std::array<Quad, 4> d;
    for (int i = 0; i < 4; ++i)
        d[i] = scale(sub(f(shifted(u0, i, h)), f(shifted(u0, i, -h))), 0.5 / h);
    double worst = 0;
    for (int k = 1; k < 4; ++k) {
        const Quad expect = mul(Quad::unit(u0.kind(), k), d[0]);
        worst = std::max(worst, max_abs_diff(d[k], expect));
    }
    return worst;
}

const std::vector<SecondOrderRelation>& second_order_relations(Kind k)
{
    // index: 0=x 1=y 2=z 3=t
    static const std::vector<SecondOrderRelation> circular{
        {0, 0, 1, 1, -1}, {0, 0, 2, 2, -1}, {1, 1, 3, 3, -1}, {2, 2, 3, 3, -1}, {0, 0, 3, 3, 1},
        {1, 1, 2, 2, 1},  {0, 1, 2, 3, 1},  {0, 2, 1, 3, 1},  {0, 3, 1, 2, -1}};
    static const std::vector<SecondOrderRelation> hyperbolic{
        {0, 0, 1, 1, 1}, {0, 0, 2, 2, 1}, {1, 1, 3, 3, 1}, {2, 2, 3, 3, 1}, {0, 0, 3, 3, 1},
        {1, 1, 2, 2, 1}, {0, 1, 2, 3, 1}, {0, 2, 1, 3, 1}, {0, 3, 1, 2, 1}};
    static const std::vector<SecondOrderRelation> planar{
        {0, 0, 2, 2, -1}, {1, 1, 3, 3, -1}, {0, 0, 1, 3, -1}, {1, 1, 0, 2, 1},
        {2, 2, 1, 3, 1},  {3, 3, 0, 2, -1}, {0, 1, 2, 3, -1}, {0, 3, 1, 2, 1}};
    static const std::vector<SecondOrderRelation> polar{
        {0, 0, 2, 2, 1}, {1, 1, 3, 3, 1}, {0, 0, 1, 3, 1}, {1, 1, 0, 2, 1},
        {2, 2, 1, 3, 1}, {3, 3, 0, 2, 1}, {0, 1, 2, 3, 1}, {0, 3, 1, 2, 1}};
    switch (k) {
    case Kind::Circular: return circular;
    case Kind::Hyperbolic: return hyperbolic;
    case Kind::Planar: return planar;
    case Kind::Polar: return polar;
    }
    return circular;
}

double check_second_order(const QuadFn& f, const Quad& u0, double h)
{
    if (!(h > 0)) throw InvalidValue("finite-difference step must be positive");
    const Quad f0 = f(u0);
    std::array<std::array<std::optional<Quad>, 4>, 4> d2;
    auto second = [&](int i, int j) -> const Quad& {
        if (i > j) std::swap(i, j);
        auto& slot = d2[i][j];
        if (!slot) {
            if (i == j) {
                Quad s = add(f(shifted(u0, i, h)), f(shifted(u0, i, -h)));
                slot = scale(sub(s, scale(f0, 2)), 1 / (h * h));
            } else {
                Quad s = sub(add(f(shifted(u0, i, h, j, h)), f(shifted(u0, i, -h, j, -h))),
                             add(f(shifted(u0, i, h, j, -h)), f(shifted(u0, i, -h, j, h))));
                slot = scale(s, 1 / (4 * h * h));
            }
        }
        return *slot;
    };
    double worst = 0;
    for (const auto& r : second_order_relations(u0.kind())) {
        const Quad lhs = second(r.i, r.j);
        const Quad rhs = scale(second(r.k, r.l), r.sign);
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    return worst;
}

// ---- loops ----------------------------------------------------------------

Loop circle_loop(const CircleSpec& spec)
{
    const Kind k = spec.center.kind();
    if (spec.samples < 8) throw InvalidValue("a loop needs at least 8 samples");
    if (!(spec.radius > 0)) throw InvalidValue("circle radius must be positive");
    const bool polar = k == Kind::Polar;
    if (polar && spec.plane == Plane::Minus)
        throw InvalidValue("polar quads carry only the plus (xi, upsilon) plane");

    const auto c0 = to_frame(spec.center);
    const double r = spec.radius;
    const double rs = polar ? r : r * std::sin(spec.psi);
    const double rc = polar ? 0 : r * std::cos(spec.psi);
    const double ck = std::cos(spec.fixed_angle), sk = std::sin(spec.fixed_angle);
    const int n = spec.samples;
    const double dtheta = 2 * pi / n;

    Loop loop{k, {}, {}};
    loop.points.reserve(n + 1);
    loop.weights.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double th = dtheta * i, c = std::cos(th), s = std::sin(th);
        std::array<double, 4> p = c0, dp{0, 0, 0, 0};
        if (spec.plane == Plane::Plus) {
            p[0] += rs * c;
            p[1] += rs * s;
            p[2] += rc * ck;
            p[3] += rc * sk;
            dp[0] = -rs * s * dtheta;
            dp[1] = rs * c * dtheta;
        } else {
            p[0] += rs * ck;
            p[1] += rs * sk;
            p[2] += rc * c;
            p[3] += rc * s;
            dp[2] = -rc * s * dtheta;
            dp[3] = rc * c * dtheta;
        }
        loop.points.push_back(from_frame(k, p));
        loop.weights.push_back(from_frame(k, dp));
    }
    loop.points.push_back(loop.points.front());
    return loop;
}

Loop polyline_loop(std::vector<Quad> points)
{
    if (points.empty()) throw InvalidValue("empty loop");
    const Kind k = points.front().kind();
    for (const Quad& p : points)
        if (p.kind() != k) throw KindMismatch("loop points of different kinds");
    if (!(points.front() == points.back())) points.push_back(points.front());
    if (points.size() < 9) throw InvalidValue("a loop needs at least 8 samples");
    return Loop{k, std::move(points), {}};
}

Quad integrate_loop(const QuadFn& f, const Loop& loop)
{
    const Kind k = loop.kind;
    auto eval = [&](std::size_t i) {
        try {
            return f(loop.points[i]);
        } catch (const Error& e) {
            throw SingularOnPath("integrand failed at loop sample " + std::to_string(i) + ": " +
                                 e.what());
        }
    };
    Quad acc = Quad::zero(k);
    if (!loop.weights.empty()) {
        for (std::size_t i = 0; i < loop.weights.size(); ++i) acc = add(acc, mul(eval(i), loop.weights[i]));
        return acc;
    }
    Quad prev = eval(0);
    for (std::size_t i = 0; i + 1 < loop.points.size(); ++i) {
        Quad next = eval(i + 1);
        const Quad du = sub(loop.points[i + 1], loop.points[i]);
        acc = add(acc, mul(scale(add(prev, next), 0.5), du));
        prev = next;
    }
    return acc;
}

// ---- winding --------------------------------------------------------------

namespace {

double segment_distance(Point2 p, Point2 a, Point2 b)
{
    const double vx = b.first - a.first, vy = b.second - a.second;
    const double wx = p.first - a.first, wy = p.second - a.second;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0 ? (wx * vx + wy * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(wx - t * vx, wy - t * vy);
}

double polygon_distance(Point2 p, const std::vector<Point2>& poly)
{
    double d = inf;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
        d = std::min(d, segment_distance(p, poly[i], poly[i + 1]));
    if (poly.size() == 1) d = std::hypot(p.first - poly[0].first, p.second - poly[0].second);
    return d;
}

std::vector<Point2> closed(const std::vector<Point2>& poly)
{
    std::vector<Point2> c = poly;
    if (!c.empty() && c.front() != c.back()) c.push_back(c.front());
    return c;
}

void check_boundary(const Point2& p, const std::vector<Point2>& poly)
{
    if (poly.empty()) throw InvalidValue("empty polygon");
    if (polygon_distance(p, poly) <= boundary_tol)
        throw OnBoundary("point lies on the projected loop");
}

}  // namespace

int winding(const WindingQuery& q)
{
    const auto poly = closed(q.polygon);
    check_boundary(q.point, poly);
    const double px = q.point.first, py = q.point.second;
    bool inside = false;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        const auto [x1, y1] = poly[i];
        const auto [x2, y2] = poly[i + 1];
        if ((y1 > py) != (y2 > py)) {
            const double xc = x1 + (py - y1) * (x2 - x1) / (y2 - y1);
            if (xc > px) inside = !inside;
        }
    }
    return inside ? 1 : 0;
}

int winding_number(const WindingQuery& q)
{
    const auto poly = closed(q.polygon);
    check_boundary(q.point, poly);
    const double px = q.point.first, py = q.point.second;
    int wn = 0;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        const auto [x1, y1] = poly[i];
        const auto [x2, y2] = poly[i + 1];
        const double cross = (x2 - x1) * (py - y1) - (px - x1) * (y2 - y1);
        if (y1 <= py) {
            if (y2 > py && cross > 0) ++wn;
        } else if (y2 <= py && cross < 0) {
            --wn;
        }
    }
    return wn;
}

Point2 project(const Quad& u, Plane plane)
{
    const auto p = to_frame(u);
    return plane == Plane::Plus ? Point2{p[0], p[1]} : Point2{p[2], p[3]};
}

std::vector<Point2> project(const Loop& loop, Plane plane)
{
    std::vector<Point2> out;
    out.reserve(loop.points.size());
    for (const Quad& q : loop.points) out.push_back(project(q, plane));
    return out;
}

std::vector<Plane> residue_planes(Kind k)
{
    switch (k) {
    case Kind::Circular:
    case Kind::Planar: return {Plane::Plus, Plane::Minus};
    case Kind::Polar: return {Plane::Plus};
    case Kind::Hyperbolic: return {};
    }
    return {};
}

Quad residue_unit(Kind k, Plane plane)
{
    const auto planes = residue_planes(k);
    if (std::find(planes.begin(), planes.end(), plane) == planes.end()) return Quad::zero(k);
    const auto b = canonical_basis(k);
    return scale(plane == Plane::Plus ? b[k == Kind::Polar ? 3 : 1] : b[3], 2 * pi);
}

Quad residue_prediction(const std::vector<Pole>& poles, const Loop& loop)
{
    const Kind k = loop.kind;
    Quad acc = Quad::zero(k);
    for (Plane plane : residue_planes(k)) {
        const auto poly = project(loop, plane);
        const Quad unit = residue_unit(k, plane);
        for (const Pole& p : poles) {
            if (p.at.kind() != k || p.coeff.kind() != k)
                throw KindMismatch("pole and loop have different kinds");
            const int w = winding_number({project(p.at, plane), poly});
            if (w != 0) acc = add(acc, scale(mul(unit, p.coeff), w));
        }
    }
    return acc;
}

double projection_distance(const Quad& pole, const Loop& loop)
{
    double d = inf;
    for (Plane plane : residue_planes(loop.kind))
        d = std::min(d, polygon_distance(project(pole, plane), closed(project(loop, plane))));
    return d;
}

}  // namespace quadfield
