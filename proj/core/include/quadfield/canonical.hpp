#pragma once

#include <array>
#include <complex>
#include <string_view>

#include "quadfield/quad.hpp"

namespace quadfield {

// Canonical coordinates, stored in kind-specific order:
//   circular, planar: (xi, upsilon, tau, zeta)
//   hyperbolic:       (s, s', s'', s''')
//   polar:            (v+, v-, v1, ~v1)
struct Canonical {
    Kind kind = Kind::Circular;
    std::array<double, 4> c{0, 0, 0, 0};

    double operator[](int i) const { return c[i]; }
};

std::array<std::string_view, 4> canonical_names(Kind k);

Canonical to_canonical(const Quad& u);
Quad from_canonical(const Canonical& c);
Canonical canonical_mul(const Canonical& a, const Canonical& b);

// Idempotent-type bases, in the same order as the canonical coordinates:
//   circular, planar: e1, ~e1, e2, ~e2   with u = sqrt2 (e1 xi + ~e1 upsilon + e2 tau + ~e2 zeta)
//   hyperbolic:       e, e', e'', e'''   with u = s e + s' e' + s'' e'' + s''' e'''
//   polar:            e+, e-, e1, ~e1    with u = v+ e+ + v- e- + v1 e1 + ~v1 ~e1
std::array<Quad, 4> canonical_basis(Kind k);
// the scalar in front of the basis expansion (sqrt2 for circular/planar, else 1)
double canonical_basis_scale(Kind k);

// Ring homomorphism onto a product of copies of C and R.
//   circular, planar: two complex channels Z1 = sqrt2 (xi + i upsilon), Z2 = sqrt2 (tau + i zeta)
//   hyperbolic:       four real channels s, s', s'', s'''
//   polar:            real v+, real v-, complex v1 + i ~v1
// Real channels hold complex values only when they come from polynomial roots.
struct Spectrum {
    Kind kind = Kind::Circular;
    std::array<std::complex<double>, 4> ch{};
};

int spectrum_size(Kind k);
bool channel_is_real(Kind k, int i);
Spectrum to_spectrum(const Quad& u);
// imaginary parts of real channels are dropped
Quad from_spectrum(const Spectrum& s);

// Orthonormal frame used for loop parametrisations and residue projections.
// Coordinates (p1, p2, p3, p4); the "plus" plane is (p1, p2), the "minus"
// plane is (p3, p4).
//   circular, planar: (xi, upsilon, tau, zeta)
//   hyperbolic:       (s, s', s'', s''') / 2
//   polar:            ((x-z)/sqrt2, (y-t)/sqrt2, v+/2, v-/2)
std::array<double, 4> to_frame(const Quad& u);
Quad from_frame(Kind k, const std::array<double, 4>& p);

// Amplitude and angles of the exponential form.
//   circular, planar: amplitude rho, angle = (phi, chi, psi)
//   hyperbolic:       amplitude mu,  angle = (y1, z1, t1)
//   polar:            amplitude rho, angle = (theta+, theta-, phi)
struct ExpForm {
    Kind kind = Kind::Circular;
    double amplitude = 0;
    std::array<double, 3> angle{0, 0, 0};
};

std::array<std::string_view, 4> exp_form_names(Kind k);

ExpForm exp_form(const Quad& u, double tol = default_tol);
Quad from_exp_form(const ExpForm& f);
// the quad q with u = amplitude * exp(q), i.e. log u - ln(amplitude)
Quad exp_form_exponent(const ExpForm& f);

// Trigonometric form: modulus d plus angles.
//   circular, planar, hyperbolic: angle = (phi, chi, psi)
//   polar:                        angle = (theta+, theta-, phi)
struct TrigForm {
    Kind kind = Kind::Circular;
    double d = 0;
    std::array<double, 3> angle{0, 0, 0};
};

std::array<std::string_view, 4> trig_form_names(Kind k);

TrigForm trig_form(const Quad& u, double tol = default_tol);
Quad from_trig_form(const TrigForm& f);

// Alternative polar chart: mu+ = sqrt2 d cos(theta), v+ = 2d sin(theta) cos(lambda),
// v- = 2d sin(theta) sin(lambda), plus the azimuth phi.  Defined for any d > 0.
struct PolarThetaLambda {
    double d = 0, theta = 0, lambda = 0, phi = 0;
};
PolarThetaLambda polar_theta_lambda(const Quad& u);
Quad from_polar_theta_lambda(const PolarThetaLambda& v);

// angle in [0, 2pi)
double wrap_angle(double a);

}  // namespace quadfield
