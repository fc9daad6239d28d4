#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "quadfield/quad.hpp"

namespace quadfield {

using QuadFn = std::function<Quad(const Quad&)>;

// ---- power series ---------------------------------------------------------

struct SeriesSpec {
    Kind kind = Kind::Circular;
    std::vector<Quad> coeffs;  // a_0 ... a_L
};

Quad eval_series(const SeriesSpec& s, const Quad& u);
// same value, summed independently in every spectral channel
Quad eval_series_canonical(const SeriesSpec& s, const Quad& u);

struct ConvergenceBounds {
    double global = 0;
    // circular/planar: c1, c2; hyperbolic: c, c', c'', c'''; polar: c+, c-, c1
    std::vector<double> canonical;
};

ConvergenceBounds convergence_bounds(const SeriesSpec& s);

// ---- analyticity ----------------------------------------------------------

inline constexpr double default_h_first = 1e-5;
inline constexpr double default_h_second = 1e-4;

// Max violation of the 12 first-order relations d f / d x_k = e_k * d f / d x
// (k = y, z, t) estimated with central differences.
double check_analytic(const QuadFn& f, const Quad& u0, double h = default_h_first);

// One second-order relation  d2/dx_i dx_j = sign * d2/dx_k dx_l
// (indices 0..3 for x, y, z, t), applied to each component P, Q, R, S.
struct SecondOrderRelation {
    int i, j, k, l;
    int sign;
};
const std::vector<SecondOrderRelation>& second_order_relations(Kind k);

double check_second_order(const QuadFn& f, const Quad& u0, double h = default_h_second);

// ---- loops and residues ---------------------------------------------------

enum class Plane { Plus, Minus };

// Closed path.  points.front() == points.back().  When `weights` is
// non-empty it holds du/dtheta * dtheta at points[0..n-1] of an exactly
// parametrised periodic loop and the integral is a plain periodic sum.
struct Loop {
    Kind kind = Kind::Circular;
    std::vector<Quad> points;
    std::vector<Quad> weights;
};

struct CircleSpec {
    Plane plane = Plane::Plus;
    Quad center;
    double radius = 1;
    int samples = 4096;
    double psi = 0.78539816339744830962;  // pi/4
    double fixed_angle = 0;                // the angle held constant
};

// Circle through the frame of the centre's kind: in the plus plane the first
// two frame coordinates rotate and the last two are offset by r cos(psi).
// For polar quads only the plus plane exists and psi is not used.
Loop circle_loop(const CircleSpec& spec);
Loop polyline_loop(std::vector<Quad> points);

Quad integrate_loop(const QuadFn& f, const Loop& loop);

using Point2 = std::pair<double, double>;

struct WindingQuery {
    Point2 point;
    std::vector<Point2> polygon;
};

inline constexpr double boundary_tol = 1e-9;

// 1 inside, 0 outside (even-odd rule)
int winding(const WindingQuery& q);
// signed winding number (counter-clockwise positive)
int winding_number(const WindingQuery& q);

// projections onto the distinguished planes (plus: frame p1,p2; minus: p3,p4)
Point2 project(const Quad& u, Plane plane);
std::vector<Point2> project(const Loop& loop, Plane plane);
// planes along which a kind carries residues
std::vector<Plane> residue_planes(Kind k);
// residue unit of a plane: 2 pi ~e1 / 2 pi ~e2 type constants
Quad residue_unit(Kind k, Plane plane);

struct Pole {
    Quad at;
    Quad coeff;
};
Quad residue_prediction(const std::vector<Pole>& poles, const Loop& loop);

// smallest distance between a pole's projection and the loop's projection,
// over the residue planes of the kind (infinity for hyperbolic)
double projection_distance(const Quad& pole, const Loop& loop);

}  // namespace quadfield
