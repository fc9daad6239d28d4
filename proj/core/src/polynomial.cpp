#include "quadfield/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace quadfield {

using cplx = std::complex<double>;

Quad eval_poly(const Poly& p, const Quad& u)
{
    if (u.kind() != p.kind) throw KindMismatch("polynomial and argument have different kinds");
    if (p.coeffs.empty()) return Quad::zero(p.kind);
    Quad r = p.coeffs.front();
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) r = add(mul(r, u), p.coeffs[i]);
    return r;
}

Poly make_monic(const Poly& p, double tol)
{
    if (p.coeffs.empty()) throw InvalidValue("empty polynomial");
    for (const Quad& c : p.coeffs)
        if (c.kind() != p.kind) throw KindMismatch("polynomial coefficient of the wrong kind");
    if (p.coeffs.front() == Quad::one(p.kind)) return p;
    const Quad inv = inverse(p.coeffs.front(), tol);
    Poly r{p.kind, {}};
    for (const Quad& c : p.coeffs) r.coeffs.push_back(mul(c, inv));
    r.coeffs.front() = Quad::one(p.kind);
    return r;
}

bool Root::is_real(double tol) const
{
    for (int c = 0; c < spectrum_size(spectrum.kind); ++c)
        if (channel_is_real(spectrum.kind, c) &&
            std::abs(spectrum.ch[c].imag()) > tol * (1 + std::abs(spectrum.ch[c].real())))
            return false;
    return true;
}

Quad Root::quad() const { return from_spectrum(spectrum); }

namespace {

cplx horner(const std::vector<cplx>& c, cplx z)
{
    cplx r = c.front();
    for (std::size_t i = 1; i < c.size(); ++i) r = r * z + c[i];
    return r;
}

double horner_abs(const std::vector<cplx>& c, double az)
{
    double r = std::abs(c.front());
    for (std::size_t i = 1; i < c.size(); ++i) r = r * az + std::abs(c[i]);
    return r;
}

}  // namespace

std::vector<cplx> durand_kerner(const std::vector<cplx>& c, const RootFinderOptions& opt)
{
    if (c.empty() || c.front() != cplx(1, 0)) throw InvalidValue("root finder expects a monic polynomial");
    const int m = static_cast<int>(c.size()) - 1;
    if (m == 0) return {};
    if (m == 1) return {-c[1]};

    double radius = 0;
    for (int i = 1; i <= m; ++i) radius = std::max(radius, std::pow(std::abs(c[i]), 1.0 / i));
    if (radius == 0) return std::vector<cplx>(m, cplx(0, 0));

    std::vector<cplx> z(m);
    for (int k = 0; k < m; ++k)
        z[k] = std::polar(radius, 2 * std::numbers::pi * k / m + 0.4);

    auto small_residual = [&](cplx zi) {
        return std::abs(horner(c, zi)) <= opt.tol * horner_abs(c, std::abs(zi));
    };

    bool converged = false;
    for (int it = 0; it < opt.max_iterations && !converged; ++it) {
        double worst_step = 0;
        bool all_small = true;
        for (int i = 0; i < m; ++i) {
            cplx den(1, 0);
            for (int j = 0; j < m; ++j)
                if (j != i) den *= z[i] - z[j];
            if (den == cplx(0, 0)) den = cplx(opt.tol, opt.tol);
            const cplx step = horner(c, z[i]) / den;
            z[i] -= step;
            worst_step = std::max(worst_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        for (int i = 0; i < m; ++i) all_small = all_small && small_residual(z[i]);
        converged = worst_step <= opt.tol || all_small;
    }
    if (!converged)
        throw NoConvergence("root iteration did not converge within " +
                            std::to_string(opt.max_iterations) + " iterations");

    // a few guarded Newton steps sharpen simple roots
    std::vector<cplx> d(c.size() - 1);
    for (int i = 0; i < m; ++i) d[i] = c[i] * static_cast<double>(m - i);
    for (auto& zi : z) {
        for (int pass = 0; pass < 3; ++pass) {
            const cplx fz = horner(c, zi), dz = horner(d, zi);
            if (dz == cplx(0, 0)) break;
            const cplx cand = zi - fz / dz;
            if (std::abs(horner(c, cand)) < std::abs(fz)) zi = cand;
            else break;
        }
    }
    return z;
}

namespace {

struct ChannelRoots {
    Kind kind;
    std::vector<std::vector<cplx>> roots;  // per channel, sorted
};

bool root_less(const cplx& a, const cplx& b)
{
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// real roots ascending, then conjugate pairs with the lower member first;
// pair boundaries then line up across real channels
std::vector<cplx> real_channel_order(std::vector<cplx> r)
{
    std::vector<cplx> out, lower, upper;
    for (const cplx& z : r) {
        if (z.imag() == 0) out.push_back(z);
        else (z.imag() < 0 ? lower : upper).push_back(z);
    }
    std::sort(out.begin(), out.end(), root_less);
    std::sort(lower.begin(), lower.end(), root_less);
    for (const cplx& z : lower) {
        out.push_back(z);
        if (upper.empty()) continue;
        auto best = std::min_element(upper.begin(), upper.end(), [&](const cplx& a, const cplx& b) {
            return std::abs(a - std::conj(z)) < std::abs(b - std::conj(z));
        });
        out.push_back(*best);
        upper.erase(best);
    }
    std::sort(upper.begin(), upper.end(), root_less);
    out.insert(out.end(), upper.begin(), upper.end());
    return out;
}

ChannelRoots channel_roots(const Poly& input, const RootFinderOptions& opt)
{
    if (input.degree() < 1) throw InvalidValue("factorization needs degree >= 1");
    const Poly p = make_monic(input);
    const Kind k = p.kind;
    const int n = spectrum_size(k);
    std::vector<Spectrum> spec;
    for (const Quad& q : p.coeffs) spec.push_back(to_spectrum(q));

    ChannelRoots out{k, {}};
    for (int c = 0; c < n; ++c) {
        std::vector<cplx> coeffs;
        for (const Spectrum& s : spec) coeffs.push_back(s.ch[c]);
        coeffs.front() = 1;
        std::vector<cplx> r;
        try {
            r = durand_kerner(coeffs, opt);
        } catch (const NoConvergence& e) {
            throw NoConvergence(std::string(e.what()) + " (canonical component " +
                                std::to_string(c) + ")");
        }
        if (channel_is_real(k, c)) {
            for (auto& z : r)
                if (std::abs(z.imag()) <= 1e-8 * (1 + std::abs(z.real()))) z = z.real();
            r = real_channel_order(std::move(r));
        } else {
            std::sort(r.begin(), r.end(), root_less);
        }
        out.roots.push_back(std::move(r));
    }
    return out;
}

Factorization assemble(const Poly& p, const ChannelRoots& cr, const std::vector<std::vector<int>>& order)
{
    const int m = static_cast<int>(cr.roots.front().size());
    const int n = static_cast<int>(cr.roots.size());
    Factorization f{cr.kind, {}, 0, true};
    for (int i = 0; i < m; ++i) {
        Root r{Spectrum{cr.kind, {}}};
        for (int c = 0; c < n; ++c) r.spectrum.ch[c] = cr.roots[c][order[c][i]];
        f.all_real = f.all_real && r.is_real();
        f.roots.push_back(r);
    }
    // residual: channel polynomials evaluated at the channel roots, plus the
    // quad polynomial at representable roots
    const Poly mp = make_monic(p);
    std::vector<Spectrum> spec;
    for (const Quad& q : mp.coeffs) spec.push_back(to_spectrum(q));
    for (const Root& r : f.roots) {
        for (int c = 0; c < n; ++c) {
            cplx v(1, 0);
            for (std::size_t l = 1; l < spec.size(); ++l) v = v * r.spectrum.ch[c] + spec[l].ch[c];
            f.residual = std::max(f.residual, std::abs(v));
        }
        if (r.is_real()) f.residual = std::max(f.residual, modulus(eval_poly(mp, r.quad())));
    }
    return f;
}

bool same_roots(const Factorization& a, const Factorization& b, double tol)
{
    if (a.roots.size() != b.roots.size()) return false;
    for (std::size_t i = 0; i < a.roots.size(); ++i)
        for (int c = 0; c < 4; ++c)
            if (std::abs(a.roots[i].spectrum.ch[c] - b.roots[i].spectrum.ch[c]) >
                tol * (1 + std::abs(a.roots[i].spectrum.ch[c])))
                return false;
    return true;
}

Factorization sorted_roots(Factorization f)
{
    std::sort(f.roots.begin(), f.roots.end(), [](const Root& a, const Root& b) {
        for (int c = 0; c < 4; ++c) {
            if (a.spectrum.ch[c] != b.spectrum.ch[c]) return root_less(a.spectrum.ch[c], b.spectrum.ch[c]);
        }
        return false;
    });
    return f;
}

}  // namespace

Factorization factor(const Poly& p, const RootFinderOptions& opt)
{
    const ChannelRoots cr = channel_roots(p, opt);
    const int m = static_cast<int>(cr.roots.front().size());
    std::vector<int> id(m);
    for (int i = 0; i < m; ++i) id[i] = i;
    return assemble(p, cr, std::vector<std::vector<int>>(cr.roots.size(), id));
}

std::vector<Factorization> enumerate_factorizations(const Poly& p, int cap, const RootFinderOptions& opt)
{
    const ChannelRoots cr = channel_roots(p, opt);
    const int m = static_cast<int>(cr.roots.front().size());
    const int n = static_cast<int>(cr.roots.size());
    std::vector<int> id(m);
    for (int i = 0; i < m; ++i) id[i] = i;
    std::vector<std::vector<int>> order(n, id);

    std::vector<Factorization> found;
    std::vector<Factorization> keys;
    const double dedup_tol = 1e-9;

    // odometer over permutations of channels 1..n-1; channel 0 stays fixed
    std::function<bool(int)> walk = [&](int c) -> bool {
        if (static_cast<int>(found.size()) >= cap) return false;
        if (c == n) {
            Factorization f = assemble(p, cr, order);
            if (!f.all_real && !real_factors(f)) return true;
            Factorization key = sorted_roots(f);
            for (const auto& k : keys)
                if (same_roots(k, key, dedup_tol)) return true;
            keys.push_back(std::move(key));
            found.push_back(std::move(f));
            return static_cast<int>(found.size()) < cap;
        }
        std::vector<int> perm = id;
        do {
            order[c] = perm;
            if (!walk(c + 1)) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        order[c] = id;
        return true;
    };
    if (cap > 0) walk(1);
    return found;
}

namespace {

std::vector<cplx> expand(const std::vector<cplx>& roots)
{
    std::vector<cplx> c{cplx(1, 0)};
    for (const cplx& r : roots) {
        std::vector<cplx> next(c.size() + 1, cplx(0, 0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= c[i] * r;
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace

Poly reconstruct(const Factorization& f)
{
    const int n = spectrum_size(f.kind);
    const std::size_t m = f.roots.size();
    std::vector<std::vector<cplx>> per(n);
    for (int c = 0; c < n; ++c) {
        std::vector<cplx> r;
        for (const Root& root : f.roots) r.push_back(root.spectrum.ch[c]);
        per[c] = expand(r);
    }
    Poly p{f.kind, {}};
    for (std::size_t l = 0; l <= m; ++l) {
        Spectrum s{f.kind, {}};
        for (int c = 0; c < n; ++c) s.ch[c] = per[c][l];
        p.coeffs.push_back(from_spectrum(s));
    }
    p.coeffs.front() = Quad::one(f.kind);
    return p;
}

Poly reconstruct(const std::vector<Quad>& roots)
{
    if (roots.empty()) throw InvalidValue("no roots given");
    const Kind k = roots.front().kind();
    std::vector<Quad> c{Quad::one(k)};
    for (const Quad& r : roots) {
        std::vector<Quad> next(c.size() + 1, Quad::zero(k));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] = add(next[i], c[i]);
            next[i + 1] = sub(next[i + 1], mul(c[i], r));
        }
        c = std::move(next);
    }
    return Poly{k, std::move(c)};
}

std::optional<std::vector<RenderedFactor>> real_factors(const Factorization& f)
{
    const Kind k = f.kind;
    const int n = spectrum_size(k);
    const double tol = 1e-8;
    std::vector<RenderedFactor> out;
    std::vector<int> pending;
    for (int i = 0; i < static_cast<int>(f.roots.size()); ++i) {
        if (f.roots[i].is_real()) out.push_back({false, Quad::zero(k), f.roots[i].quad()});
        else pending.push_back(i);
    }
    auto compatible = [&](const Root& a, const Root& b) {
        for (int c = 0; c < n; ++c) {
            if (!channel_is_real(k, c)) continue;
            const cplx x = a.spectrum.ch[c], y = b.spectrum.ch[c];
            const bool both_real = x.imag() == 0 && y.imag() == 0;
            if (!both_real && std::abs(x - std::conj(y)) > tol * (1 + std::abs(x))) return false;
        }
        return true;
    };
    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> used(f.roots.size(), false);
    std::function<bool(std::size_t)> match = [&](std::size_t idx) -> bool {
        while (idx < pending.size() && used[pending[idx]]) ++idx;
        if (idx == pending.size()) return true;
        const int a = pending[idx];
        used[a] = true;
        for (std::size_t j = idx + 1; j < pending.size(); ++j) {
            const int b = pending[j];
            if (used[b] || !compatible(f.roots[a], f.roots[b])) continue;
            used[b] = true;
            pairs.emplace_back(a, b);
            if (match(idx + 1)) return true;
            pairs.pop_back();
            used[b] = false;
        }
        used[a] = false;
        return false;
    };
    if (!match(0)) return std::nullopt;
    for (auto [a, b] : pairs) {
        Spectrum sb{k, {}}, sc{k, {}};
        for (int c = 0; c < n; ++c) {
            const cplx x = f.roots[a].spectrum.ch[c], y = f.roots[b].spectrum.ch[c];
            sb.ch[c] = -(x + y);
            sc.ch[c] = x * y;
        }
        out.push_back({true, from_spectrum(sb), from_spectrum(sc)});
    }
    return out;
}

}  // namespace quadfield
