#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "quadfield/canonical.hpp"
#include "quadfield/quad.hpp"

namespace quadfield {

// coeffs[0] is the leading coefficient, coeffs.back() the constant term
struct Poly {
    Kind kind = Kind::Circular;
    std::vector<Quad> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

Quad eval_poly(const Poly& p, const Quad& u);
// divides by the leading coefficient; SingularValue when it is not invertible
Poly make_monic(const Poly& p, double tol = default_tol);

// A root in spectral form.  It is a genuine quad only when every real
// channel carries a real value.
struct Root {
    Spectrum spectrum;

    bool is_real(double tol = 1e-9) const;
    Quad quad() const;  // real channels take their real parts
};

struct Factorization {
    Kind kind = Kind::Circular;
    std::vector<Root> roots;
    double residual = 0;  // max modulus of p at the representable roots
    bool all_real = true;
};

struct RootFinderOptions {
    int max_iterations = 500;
    double tol = 1e-12;
};

// roots of a monic complex polynomial, coefficients leading first
std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& monic,
                                                const RootFinderOptions& opt = {});

Factorization factor(const Poly& p, const RootFinderOptions& opt = {});
std::vector<Factorization> enumerate_factorizations(const Poly& p, int cap = 100,
                                                    const RootFinderOptions& opt = {});

// expands prod (u - u_p) channel by channel
Poly reconstruct(const Factorization& f);
Poly reconstruct(const std::vector<Quad>& roots);

// For rendering: linear factors (u - r) for representable roots and
// quadratic factors u^2 + b u + c for conjugate-paired ones.
struct RenderedFactor {
    bool quadratic = false;
    Quad b, c;  // linear: u - c with b unused; quadratic: u^2 + b u + c
};
// nullopt when the non-real roots cannot be paired into real quadratics
std::optional<std::vector<RenderedFactor>> real_factors(const Factorization& f);

}  // namespace quadfield
