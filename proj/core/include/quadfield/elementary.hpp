#pragma once

#include <array>

#include "quadfield/quad.hpp"

namespace quadfield {

// f4k: planar family, series sum (-1)^m x^(4m+k)/(4m+k)!
// g4k: polar family,  series sum x^(4m+k)/(4m+k)!
enum class CosexpFamily { PlanarF, PolarG };

double cosexp(CosexpFamily fam, int k, double x);
std::array<double, 4> cosexp_all(CosexpFamily fam, double x);
// truncated series with `terms` nonzero terms; test oracle only
double cosexp_series(CosexpFamily fam, int k, double x, int terms);

// exp(e * s) for the basis unit e of component `axis` (1=alpha, 2=beta, 3=gamma)
Quad exp_axis(Kind k, int axis, double s);

Quad exp(const Quad& u);
Quad log(const Quad& u, double tol = default_tol);
Quad pow_real(const Quad& u, double n, double tol = default_tol);

Quad cos(const Quad& u);
Quad sin(const Quad& u);
Quad cosh(const Quad& u);
Quad sinh(const Quad& u);

// cos, sin, cosh, sinh of e * s for a single basis unit e (axis 1..3)
struct AxisTrig {
    Quad cos, sin, cosh, sinh;
};
AxisTrig trig_axis(Kind k, int axis, double s);

}  // namespace quadfield
