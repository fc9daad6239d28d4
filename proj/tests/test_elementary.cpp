#include <doctest.h>

#include "identities.hpp"

using namespace qt;

namespace {

const CosexpFamily families[] = {CosexpFamily::PlanarF, CosexpFamily::PolarG};

// log(exp(u)) = u exactly when the spectral arguments of u already lie in [0, 2pi)
bool principal(const Quad& u)
{
    const Spectrum s = to_spectrum(u);
    auto ok = [](double a) { return a >= 0 && a < 2 * pi; };
    switch (u.kind()) {
    case Kind::Circular:
    case Kind::Planar: return ok(s.ch[0].imag()) && ok(s.ch[1].imag());
    case Kind::Polar: return ok(s.ch[2].imag());
    case Kind::Hyperbolic: return true;
    }
    return false;
}

}  // namespace

TEST_CASE("cosexponential values")
{
    for (CosexpFamily f : families)
        for (int k = 0; k < 4; ++k) CHECK(cosexp(f, k, 0) == (k == 0 ? 1 : 0));
    CHECK(cosexp(CosexpFamily::PolarG, 0, 1) == doctest::Approx((std::cosh(1) + std::cos(1)) / 2).epsilon(1e-15));
    CHECK(cosexp(CosexpFamily::PolarG, 0, 1) == doctest::Approx(1.0416914).epsilon(1e-7));
    CHECK(std::abs(cosexp(CosexpFamily::PlanarF, 0, pi * sqrt2 / 2)) <= 1e-15);
    double partial = 0;
    for (int n = 0; n < 10; ++n) partial += inv_factorial(4 * n + 2);
    CHECK(cosexp_series(CosexpFamily::PolarG, 2, 1, 10) == doctest::Approx(partial).epsilon(1e-15));
    CHECK(cosexp_series(CosexpFamily::PolarG, 2, 1, 10) == doctest::Approx(0.5013889).epsilon(1e-6));
    const double x = 1e-3;
    CHECK(cosexp(CosexpFamily::PlanarF, 3, x) == doctest::Approx(x * x * x / 6).epsilon(1e-6));
}

TEST_CASE("cosexponential closed forms against long-double series")
{
    for (CosexpFamily f : families)
        for (int i = -300; i <= 300; ++i) {
            const double x = i * 0.01;
            for (int k = 0; k < 4; ++k) {
                const double want = cosexp_oracle(f == CosexpFamily::PolarG, k, x);
                CHECK(std::abs(cosexp(f, k, x) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
                CHECK(std::abs(cosexp_series(f, k, x, 40) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
            }
        }
}

TEST_CASE("cosexponential identities")
{
    Gen g(31);
    for (int n = 0; n < 2000; ++n) {
        const double x = g.uniform(-3, 3), y = g.uniform(-3, 3);
        CHECK(f_addition(x, y) <= 1e-10);
        CHECK(g_addition(x, y) <= 1e-10);
        CHECK(f_pairs(x) <= 1e-10);
        CHECK(g_pairs(x) <= 1e-10);
        CHECK(f_quartic(x) <= 1e-10);
        CHECK(g_quartic(x) <= 1e-10);
        CHECK(g_sums(x) <= 1e-10);
        CHECK(f_squares(x) <= 1e-10);
        CHECK(g_squares(x) <= 1e-10);
        CHECK(derivative_chain(CosexpFamily::PlanarF, x) <= 1e-7);
        CHECK(derivative_chain(CosexpFamily::PolarG, x) <= 1e-7);
    }
}

TEST_CASE("quartic identities are unit determinants")
{
    for (double x : {-2.5, -1.0, 0.3, 1.7, 3.0}) {
        const auto f = cosexp_all(CosexpFamily::PlanarF, x);
        const auto g = cosexp_all(CosexpFamily::PolarG, x);
        CHECK(left_matrix(Quad(Kind::Planar, f)).determinant() == doctest::Approx(1).epsilon(1e-12));
        CHECK(left_matrix(Quad(Kind::Polar, g)).determinant() == doctest::Approx(1).epsilon(1e-12));
    }
}

TEST_CASE("exponential, worked values")
{
    for (Kind k : all_kinds) CHECK(exp(Quad::zero(k)) == Quad::one(k));
    CHECK(max_abs_diff(exp(Quad::alpha(Kind::Circular) * (pi / 2)), Quad::alpha(Kind::Circular)) <= 1e-15);
    CHECK(max_abs_diff(exp(Quad::beta(Kind::Polar)), Quad(Kind::Polar, std::cosh(1), 0, std::sinh(1), 0)) <= 1e-15);
    CHECK(max_abs_diff(exp(Quad(Kind::Polar, 0, 0, 1, 0)), Quad(Kind::Polar, 1.5430806, 0, 1.1752012, 0)) <= 1e-7);
    const auto f = cosexp_all(CosexpFamily::PlanarF, 1);
    CHECK(max_abs_diff(exp(Quad::alpha(Kind::Planar)), Quad(Kind::Planar, f)) <= 1e-15);
}

TEST_CASE("exponential against its series")
{
    Gen g(32);
    for (Kind k : all_kinds)
        for (int n = 0; n < 300; ++n) {
            const Quad u = g.ball(k, 2);
            CHECK(rel_diff(exp(u), series_exp(u)) <= 1e-12);
        }
}

TEST_CASE("exponential of a sum")
{
    Gen g(33);
    for (Kind k : all_kinds)
        for (int n = 0; n < 500; ++n) {
            const Quad u = g.ball(k, 1), v = g.ball(k, 1);
            CHECK(rel_diff(exp(u + v), exp(u) * exp(v)) <= 1e-12);
        }
}

TEST_CASE("logarithm")
{
    for (Kind k : all_kinds) CHECK(modulus(log(Quad::one(k))) <= 1e-15);
    CHECK(max_abs_diff(log(Quad::real(Kind::Hyperbolic, 2)), Quad::real(Kind::Hyperbolic, std::log(2))) <= 1e-15);
    // s = e, the other channels 1: the logarithm is the idempotent e itself
    const Quad u = from_canonical({Kind::Hyperbolic, {std::exp(1), 1, 1, 1}});
    CHECK(max_abs_diff(log(u), canonical_basis(Kind::Hyperbolic)[0]) <= 1e-15);
    CHECK(max_abs_diff(exp(log(u)), u) <= 1e-15);
    CHECK_THROWS_AS(log(Quad::zero(Kind::Circular)), DomainError);
    CHECK_THROWS_AS(log(Quad::real(Kind::Polar, -1)), DomainError);
}

TEST_CASE("exp and log are mutually inverse on their domains")
{
    Gen g(34);
    int principal_hits = 0;
    for (Kind k : all_kinds)
        for (int n = 0; n < 500; ++n) {
            const Quad u = g.loggable(k);
            CHECK(rel_diff(exp(log(u)), u) <= 1e-10);
            const Quad w = g.ball(k, 1);
            if (principal(w)) {
                ++principal_hits;
                CHECK(max_abs_diff(log(exp(w)), w) <= 1e-9);
            } else {
                CHECK(rel_diff(exp(log(exp(w))), exp(w)) <= 1e-10);
            }
        }
    CHECK(principal_hits > 200);
}

TEST_CASE("real powers")
{
    Gen g(35);
    for (Kind k : all_kinds) {
        const Quad u = g.loggable(k);
        CHECK(rel_diff(pow_real(u, 1), u) <= 1e-12);
        CHECK(rel_diff(pow_real(u, 0.5) * pow_real(u, 0.5), u) <= 1e-10);
    }
    CHECK(max_abs_diff(pow_real(Quad::real(Kind::Hyperbolic, 2), 0.5), Quad::real(Kind::Hyperbolic, sqrt2)) <= 1e-15);
    const Quad c(Kind::Circular, 2, 1, 0, 0);
    CHECK(max_abs_diff(pow_real(c, 2), pow_int(c, 2)) <= 1e-9);
}

TEST_CASE("de Moivre along each unit")
{
    Gen g(36);
    for (Kind k : all_kinds)
        for (int axis = 1; axis <= 3; ++axis)
            for (int m : {2, 3, 5})
                for (int n = 0; n < 20; ++n) {
                    const double s = g.uniform(-1.5, 1.5);
                    CHECK(rel_diff(pow_int(exp_axis(k, axis, s), m), exp_axis(k, axis, m * s)) <= 1e-12);
                    CHECK(rel_diff(exp_axis(k, axis, s), series_exp(Quad::unit(k, axis) * s)) <= 1e-13);
                }
}

TEST_CASE("trigonometric and hyperbolic functions")
{
    for (Kind k : all_kinds) {
        CHECK(cos(Quad::zero(k)) == Quad::one(k));
        CHECK(modulus(sin(Quad::zero(k))) == 0);
    }
    const double y = 0.7;
    CHECK(max_abs_diff(cos(Quad::alpha(Kind::Circular) * y), Quad::real(Kind::Circular, std::cosh(y))) <= 1e-15);
    const Quad want = Quad::gamma(Kind::Polar) * cosexp(CosexpFamily::PolarG, 1, y) -
                      Quad::alpha(Kind::Polar) * cosexp(CosexpFamily::PolarG, 3, y);
    CHECK(max_abs_diff(sin(Quad::gamma(Kind::Polar) * y), want) <= 1e-15);

    Gen g(37);
    for (Kind k : all_kinds)
        for (int n = 0; n < 300; ++n) {
            const Quad u = g.ball(k, 2);
            CHECK(rel_diff(cos(u), series_cos(u)) <= 1e-12);
            CHECK(rel_diff(sin(u), series_sin(u)) <= 1e-12);
            CHECK(rel_diff(cosh(u), series_cosh(u)) <= 1e-12);
            CHECK(rel_diff(sinh(u), series_sinh(u)) <= 1e-12);
            const Quad c = cos(u), s = sin(u);
            CHECK(rel_diff(c * c + s * s, Quad::one(k)) <= 1e-9);
            const Quad ch = cosh(u), sh = sinh(u);
            CHECK(rel_diff(ch * ch - sh * sh, Quad::one(k)) <= 1e-9);
        }
}

TEST_CASE("axis functions against series")
{
    for (Kind k : all_kinds)
        for (int axis = 1; axis <= 3; ++axis) {
            const double s = 0.9;
            const Quad e = Quad::unit(k, axis) * s;
            const AxisTrig t = trig_axis(k, axis, s);
            CHECK(rel_diff(t.cos, series_cos(e)) <= 1e-14);
            CHECK(rel_diff(t.sin, series_sin(e)) <= 1e-14);
            CHECK(rel_diff(t.cosh, series_cosh(e)) <= 1e-14);
            CHECK(rel_diff(t.sinh, series_sinh(e)) <= 1e-14);
        }
}
