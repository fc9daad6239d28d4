#include <doctest.h>

#include "support.hpp"

using namespace qt;

namespace {

double angle_gap(double a, double b)
{
    const double d = std::remainder(a - b, 2 * pi);
    return std::abs(d);
}

bool close4(const std::array<double, 4>& a, const std::array<double, 4>& b, double tol)
{
    for (int i = 0; i < 4; ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("canonical coordinates, worked values")
{
    CHECK(close4(to_canonical(Quad(Kind::Circular, 1, 0, 0, 1)).c, {sqrt2, 0, 0, 0}, 1e-15));
    CHECK(close4(to_canonical(Quad(Kind::Hyperbolic, 1, 1, 1, 1)).c, {4, 0, 0, 0}, 0));
    CHECK(close4(to_canonical(Quad(Kind::Polar, 1, 2, 3, 4)).c, {10, -2, -2, -2}, 0));

    CHECK(max_abs_diff(from_canonical({Kind::Circular, {sqrt2, 0, 0, 0}}), Quad(Kind::Circular, 1, 0, 0, 1)) <= 1e-15);
    CHECK(max_abs_diff(from_canonical({Kind::Hyperbolic, {4, 0, 0, 0}}), Quad(Kind::Hyperbolic, 1, 1, 1, 1)) <= 1e-15);
    for (Kind k : all_kinds) CHECK(from_canonical({k, {0, 0, 0, 0}}) == Quad::zero(k));
}

TEST_CASE("canonical products, worked values")
{
    const Canonical h = canonical_mul({Kind::Hyperbolic, {1, 2, 3, 4}}, {Kind::Hyperbolic, {2, 2, 2, 2}});
    CHECK(close4(h.c, {2, 4, 6, 8}, 0));
    const Canonical c = canonical_mul({Kind::Circular, {1, 0, 0, 0}}, {Kind::Circular, {1, 0, 0, 0}});
    CHECK(close4(c.c, {sqrt2, 0, 0, 0}, 1e-15));
    const Canonical p = canonical_mul({Kind::Polar, {0, 0, 1, 0}}, {Kind::Polar, {0, 0, 0, 1}});
    CHECK(close4(p.c, {0, 0, 0, 1}, 0));
}

TEST_CASE("canonical round trip and homomorphism")
{
    Gen g(21);
    for (Kind k : all_kinds)
        for (int n = 0; n < 500; ++n) {
            const Quad u = g.quad(k), v = g.quad(k);
            CHECK(max_abs_diff(from_canonical(to_canonical(u)), u) <= 1e-14);
            CHECK(close4(to_canonical(u * v).c, canonical_mul(to_canonical(u), to_canonical(v)).c, 1e-12));
            CHECK(max_abs_diff(from_spectrum(to_spectrum(u)), u) <= 1e-14);
            CHECK(max_abs_diff(from_frame(k, to_frame(u)), u) <= 1e-14);
            // the frame is orthonormal
            const auto f = to_frame(u);
            CHECK(std::hypot(std::hypot(f[0], f[1]), std::hypot(f[2], f[3])) == doctest::Approx(modulus(u)).epsilon(1e-13));
        }
}

TEST_CASE("spectral channels multiply independently")
{
    Gen g(22);
    for (Kind k : all_kinds)
        for (int n = 0; n < 200; ++n) {
            const Quad u = g.quad(k), v = g.quad(k);
            const Spectrum su = to_spectrum(u), sv = to_spectrum(v), suv = to_spectrum(u * v);
            for (int c = 0; c < spectrum_size(k); ++c) CHECK(std::abs(suv.ch[c] - su.ch[c] * sv.ch[c]) <= 1e-12);
        }
}

TEST_CASE("basis expansions and idempotents")
{
    Gen g(23);
    for (Kind k : all_kinds) {
        const auto b = canonical_basis(k);
        const Quad u = g.quad(k);
        const auto c = to_canonical(u).c;
        Quad sum = Quad::zero(k);
        for (int i = 0; i < 4; ++i) sum = sum + b[i] * c[i];
        CHECK(max_abs_diff(sum * canonical_basis_scale(k), u) <= 1e-14);

        auto near = [](const Quad& a, const Quad& w) { return max_abs_diff(a, w) <= 1e-15; };
        if (k == Kind::Hyperbolic) {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    CHECK(near(table_mul(b[i], b[j]), i == j ? b[i] : Quad::zero(k)));
        } else if (k == Kind::Polar) {
            CHECK(near(table_mul(b[0], b[0]), b[0]));
            CHECK(near(table_mul(b[1], b[1]), b[1]));
            CHECK(near(table_mul(b[2], b[2]), b[2]));
            CHECK(near(table_mul(b[3], b[3]), -b[2]));
            CHECK(near(table_mul(b[2], b[3]), b[3]));
            CHECK(near(table_mul(b[0], b[1]), Quad::zero(k)));
            CHECK(near(table_mul(b[0], b[2]), Quad::zero(k)));
            CHECK(near(table_mul(b[1], b[3]), Quad::zero(k)));
        } else {
            CHECK(near(table_mul(b[0], b[0]), b[0]));
            CHECK(near(table_mul(b[1], b[1]), -b[0]));
            CHECK(near(table_mul(b[0], b[1]), b[1]));
            CHECK(near(table_mul(b[2], b[2]), b[2]));
            CHECK(near(table_mul(b[3], b[3]), -b[2]));
            CHECK(near(table_mul(b[0], b[2]), Quad::zero(k)));
            CHECK(near(table_mul(b[1], b[3]), Quad::zero(k)));
        }
    }
}

TEST_CASE("exponential form, worked values")
{
    const ExpForm one = exp_form(Quad::one(Kind::Circular));
    CHECK(one.amplitude == doctest::Approx(1));
    CHECK(one.angle[0] == doctest::Approx(0));
    CHECK(one.angle[1] == doctest::Approx(0));
    CHECK(one.angle[2] == doctest::Approx(pi / 4));

    const ExpForm g = exp_form(Quad::gamma(Kind::Circular));
    CHECK(g.amplitude == doctest::Approx(1));
    CHECK(g.angle[0] == doctest::Approx(0));
    CHECK(g.angle[1] == doctest::Approx(pi));
    CHECK(g.angle[2] == doctest::Approx(pi / 4));

    const ExpForm h = exp_form(Quad::real(Kind::Hyperbolic, 2));
    CHECK(h.amplitude == doctest::Approx(2));
    for (double a : h.angle) CHECK(a == doctest::Approx(0));

    const ExpForm p = exp_form(Quad::one(Kind::Polar));
    CHECK(p.amplitude == doctest::Approx(1));
    CHECK(p.angle[0] == doctest::Approx(std::atan(sqrt2)));
    CHECK(p.angle[1] == doctest::Approx(std::atan(sqrt2)));
    CHECK(p.angle[2] == doctest::Approx(0));

    CHECK(max_abs_diff(from_exp_form({Kind::Circular, 1, {0, pi, pi / 4}}), Quad::gamma(Kind::Circular)) <= 1e-15);
    CHECK(max_abs_diff(from_exp_form({Kind::Hyperbolic, 2, {0, 0, 0}}), Quad::real(Kind::Hyperbolic, 2)) <= 1e-15);
    const Quad polar = from_exp_form({Kind::Polar, 1, {std::atan(sqrt2), std::atan(sqrt2), pi / 2}});
    CHECK(max_abs_diff(polar, Quad(Kind::Polar, 0.5, 0.5, 0.5, -0.5)) <= 1e-15);
    const auto pc = to_canonical(polar).c;
    CHECK(close4(pc, {1, 1, 0, 1}, 1e-15));
}

TEST_CASE("exponential form domain")
{
    CHECK_THROWS_AS(exp_form(Quad(Kind::Circular, 1, 0, 0, 1)), DomainError);
    CHECK_THROWS_AS(exp_form(Quad::real(Kind::Hyperbolic, -1)), DomainError);
    CHECK_THROWS_AS(exp_form(Quad(Kind::Polar, -1, 0.1, 0, 0)), DomainError);
    CHECK_THROWS_AS(from_exp_form({Kind::Circular, -1, {0, 0, pi / 4}}), DomainError);
}

TEST_CASE("exponential and trigonometric forms round trip")
{
    Gen g(24);
    for (Kind k : all_kinds)
        for (int n = 0; n < 500; ++n) {
            const Quad u = g.loggable(k);
            CHECK(rel_diff(from_exp_form(exp_form(u)), u) <= 1e-10);
            CHECK(rel_diff(from_trig_form(trig_form(u)), u) <= 1e-10);
            CHECK(trig_form(u).d == doctest::Approx(modulus(u)).epsilon(1e-13));
        }
}

TEST_CASE("exponential form through the exponential")
{
    Gen g(25);
    for (Kind k : all_kinds)
        for (int n = 0; n < 100; ++n) {
            const Quad u = g.loggable(k);
            const ExpForm f = exp_form(u);
            CHECK(rel_diff(series_exp(exp_form_exponent(f)) * f.amplitude, u) <= 1e-10);
        }
}

TEST_CASE("angles add under multiplication")
{
    Gen g(26);
    for (int n = 0; n < 300; ++n) {
        for (Kind k : {Kind::Circular, Kind::Planar}) {
            const Quad u = g.regular(k, 0.1), v = g.regular(k, 0.1);
            const ExpForm a = exp_form(u), b = exp_form(v), c = exp_form(u * v);
            CHECK(c.amplitude == doctest::Approx(a.amplitude * b.amplitude).epsilon(1e-10));
            CHECK(angle_gap(c.angle[0], a.angle[0] + b.angle[0]) <= 1e-9);
            CHECK(angle_gap(c.angle[1], a.angle[1] + b.angle[1]) <= 1e-9);
            CHECK(std::tan(c.angle[2]) == doctest::Approx(std::tan(a.angle[2]) * std::tan(b.angle[2])).epsilon(1e-9));
            // product modulus in terms of the planar angle
            const double d1 = modulus(u), d2 = modulus(v);
            const double c1 = std::cos(a.angle[2]), c2 = std::cos(b.angle[2]);
            const double s1 = std::sin(a.angle[2]), s2 = std::sin(b.angle[2]);
            CHECK(modulus(u * v) == doctest::Approx(sqrt2 * d1 * d2 * std::sqrt(c1 * c1 * c2 * c2 + s1 * s1 * s2 * s2)).epsilon(1e-12));
        }
        {
            const Quad u = g.loggable(Kind::Hyperbolic), v = g.loggable(Kind::Hyperbolic);
            const ExpForm a = exp_form(u), b = exp_form(v), c = exp_form(u * v);
            CHECK(c.amplitude == doctest::Approx(a.amplitude * b.amplitude).epsilon(1e-10));
            for (int i = 0; i < 3; ++i) CHECK(c.angle[i] == doctest::Approx(a.angle[i] + b.angle[i]).epsilon(1e-9));
        }
        {
            const Quad u = g.loggable(Kind::Polar), v = g.loggable(Kind::Polar);
            const ExpForm a = exp_form(u), b = exp_form(v), c = exp_form(u * v);
            CHECK(c.amplitude == doctest::Approx(a.amplitude * b.amplitude).epsilon(1e-10));
            CHECK(angle_gap(c.angle[2], a.angle[2] + b.angle[2]) <= 1e-9);
            for (int i = 0; i < 2; ++i)
                CHECK(std::tan(c.angle[i]) == doctest::Approx(std::tan(a.angle[i]) * std::tan(b.angle[i]) / sqrt2).epsilon(1e-9));
        }
    }
}

TEST_CASE("trigonometric form, worked values")
{
    const TrigForm t = trig_form(Quad::one(Kind::Circular));
    CHECK(t.d == doctest::Approx(1));
    CHECK(t.angle[0] == doctest::Approx(0));
    CHECK(t.angle[1] == doctest::Approx(0));
    CHECK(t.angle[2] == doctest::Approx(pi / 4));

    const PolarThetaLambda p = polar_theta_lambda(Quad::one(Kind::Polar));
    CHECK(p.d == doctest::Approx(1));
    CHECK(std::cos(p.theta) == doctest::Approx(1 / sqrt2));
    CHECK(p.lambda == doctest::Approx(pi / 4));
    CHECK(p.phi == doctest::Approx(0));
}

TEST_CASE("polar theta-lambda chart round trip")
{
    Gen g(27);
    for (int n = 0; n < 300; ++n) {
        const Quad u = g.quad(Kind::Polar);
        CHECK(max_abs_diff(from_polar_theta_lambda(polar_theta_lambda(u)), u) <= 1e-12);
    }
}

TEST_CASE("wrap_angle")
{
    CHECK(wrap_angle(0) == 0);
    CHECK(wrap_angle(-pi / 2) == doctest::Approx(3 * pi / 2));
    CHECK(wrap_angle(5 * pi) == doctest::Approx(pi));
    CHECK(wrap_angle(2 * pi) < 2 * pi);
}
