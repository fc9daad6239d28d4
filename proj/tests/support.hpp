#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "quadfield/quadfield.hpp"

namespace qt {

using namespace quadfield;

// ---- generators -------------------------------------------------------------

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Quad quad(Kind k, double lo = -2, double hi = 2)
    {
        return Quad(k, uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi));
    }

    // rejection sampling away from the nodal sets
    Quad regular(Kind k, double margin = 0.05, double lo = -2, double hi = 2)
    {
        for (;;) {
            Quad u = quad(k, lo, hi);
            if (singularity(u).margin > margin) return u;
        }
    }

    // inside the domain of exp_form / log: hyperbolic s's > 0, polar v+ > 0 and v- > 0
    Quad loggable(Kind k, double margin = 0.1)
    {
        for (;;) {
            Quad u = regular(k, margin);
            const auto c = to_canonical(u).c;
            if (k == Kind::Hyperbolic && std::min({c[0], c[1], c[2], c[3]}) < margin) continue;
            if (k == Kind::Polar && std::min(c[0], c[1]) < margin) continue;
            return u;
        }
    }

    Quad ball(Kind k, double radius)
    {
        Quad u = quad(k, -1, 1);
        const double m = modulus(u);
        return m > 0 ? u * (radius * uniform(0, 1) / m) : u;
    }

private:
    std::mt19937_64 rng_;
};

// ---- multiplication tables written out unit by unit ------------------------
// table(k)[i][j] = e_i e_j with e = (1, alpha, beta, gamma)

inline std::array<std::array<std::array<double, 4>, 4>, 4> table(Kind k)
{
    using R = std::array<double, 4>;
    const R one{1, 0, 0, 0}, a{0, 1, 0, 0}, b{0, 0, 1, 0}, g{0, 0, 0, 1};
    auto n = [](R r) { return R{-r[0], -r[1], -r[2], -r[3]}; };
    // rows: 1, alpha, beta, gamma products in the order a*a, a*b, a*g, b*b, b*g, g*g
    R aa, ab, ag, bb, bg, gg;
    switch (k) {
    case Kind::Circular: aa = n(one), ab = n(g), ag = b, bb = n(one), bg = a, gg = one; break;
    case Kind::Hyperbolic: aa = one, ab = g, ag = b, bb = one, bg = a, gg = one; break;
    case Kind::Planar: aa = b, ab = g, ag = n(one), bb = n(one), bg = n(a), gg = n(b); break;
    case Kind::Polar: aa = b, ab = g, ag = one, bb = one, bg = a, gg = b; break;
    }
    return {{{one, a, b, g}, {a, aa, ab, ag}, {b, ab, bb, bg}, {g, ag, bg, gg}}};
}

inline Quad table_mul(const Quad& u, const Quad& v)
{
    const auto t = table(u.kind());
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int c = 0; c < 4; ++c) r[c] += u[i] * v[j] * t[i][j][c];
    return Quad(u.kind(), r);
}

// matrix of v -> u v in the basis (1, alpha, beta, gamma)
inline Eigen::Matrix4d left_matrix(const Quad& u)
{
    Eigen::Matrix4d m;
    for (int j = 0; j < 4; ++j) {
        const Quad col = table_mul(u, Quad::unit(u.kind(), j));
        for (int i = 0; i < 4; ++i) m(i, j) = col[i];
    }
    return m;
}

inline Quad solve_inverse(const Quad& u)
{
    const Eigen::Vector4d w = left_matrix(u).fullPivLu().solve(Eigen::Vector4d(1, 0, 0, 0));
    return Quad(u.kind(), w[0], w[1], w[2], w[3]);
}

// ---- power series -----------------------------------------------------------

// sum over n of c(n) u^n, with c(n) given for n = 0..terms-1
template <class Coef>
Quad series(const Quad& u, int terms, Coef c)
{
    Quad acc = Quad::zero(u.kind());
    Quad p = Quad::one(u.kind());
    for (int n = 0; n < terms; ++n) {
        acc = acc + p * c(n);
        p = table_mul(p, u);
    }
    return acc;
}

inline double inv_factorial(int n)
{
    double f = 1;
    for (int i = 2; i <= n; ++i) f /= i;
    return f;
}

inline Quad series_exp(const Quad& u, int terms = 80)
{
    return series(u, terms, [](int n) { return inv_factorial(n); });
}
inline Quad series_cosh(const Quad& u, int terms = 80)
{
    return series(u, terms, [](int n) { return n % 2 == 0 ? inv_factorial(n) : 0.0; });
}
inline Quad series_sinh(const Quad& u, int terms = 80)
{
    return series(u, terms, [](int n) { return n % 2 == 1 ? inv_factorial(n) : 0.0; });
}
inline Quad series_cos(const Quad& u, int terms = 80)
{
    return series(u, terms, [](int n) { return n % 4 == 0 ? inv_factorial(n) : n % 4 == 2 ? -inv_factorial(n) : 0.0; });
}
inline Quad series_sin(const Quad& u, int terms = 80)
{
    return series(u, terms, [](int n) { return n % 4 == 1 ? inv_factorial(n) : n % 4 == 3 ? -inv_factorial(n) : 0.0; });
}

// cosexponential series in long double: sum over m of s^m x^(4m+k)/(4m+k)!, s = -1 (f) or +1 (g)
inline double cosexp_oracle(bool polar, int k, double x, int terms = 40)
{
    long double acc = 0, term = 1;
    for (int i = 1; i <= k; ++i) term *= static_cast<long double>(x) / i;
    for (int m = 0; m < terms; ++m) {
        acc += term;
        const int n = 4 * m + k;
        long double next = term;
        for (int i = n + 1; i <= n + 4; ++i) next *= static_cast<long double>(x) / i;
        term = polar ? next : -next;
    }
    return static_cast<double>(acc);
}

inline double rel_diff(const Quad& a, const Quad& b)
{
    return max_abs_diff(a, b) / std::max(1.0, std::max(modulus(a), modulus(b)));
}

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt2 = std::numbers::sqrt2;

}  // namespace qt
