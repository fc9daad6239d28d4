#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quadfield {

enum class Kind { Circular, Hyperbolic, Planar, Polar };

inline constexpr std::array<Kind, 4> all_kinds{Kind::Circular, Kind::Hyperbolic, Kind::Planar,
                                                Kind::Polar};

std::string_view kind_name(Kind k);
// accepts the lowercase names used in JSON and on the command line
Kind parse_kind(std::string_view name);

// error hierarchy; every library failure derives from Error
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual std::string_view code() const noexcept { return "Error"; }
};

#define QUADFIELD_ERROR(Name)                                                  \
    struct Name : Error {                                                      \
        using Error::Error;                                                    \
        std::string_view code() const noexcept override { return #Name; }      \
    }

QUADFIELD_ERROR(KindMismatch);
QUADFIELD_ERROR(SingularValue);
QUADFIELD_ERROR(DomainError);
QUADFIELD_ERROR(NoConvergence);
QUADFIELD_ERROR(DegenerateSeries);
QUADFIELD_ERROR(SingularOnPath);
QUADFIELD_ERROR(OnBoundary);
QUADFIELD_ERROR(InvalidValue);

#undef QUADFIELD_ERROR

inline constexpr double default_tol = 1e-12;

class Quad {
public:
    Quad() = default;
    Quad(Kind k, double x, double y, double z, double t);
    Quad(Kind k, const std::array<double, 4>& c) : Quad(k, c[0], c[1], c[2], c[3]) {}

    static Quad real(Kind k, double x) { return Quad(k, x, 0, 0, 0); }
    static Quad one(Kind k) { return real(k, 1.0); }
    static Quad zero(Kind k) { return real(k, 0.0); }
    static Quad alpha(Kind k) { return Quad(k, 0, 1, 0, 0); }
    static Quad beta(Kind k) { return Quad(k, 0, 0, 1, 0); }
    static Quad gamma(Kind k) { return Quad(k, 0, 0, 0, 1); }
    // unit of the i-th component: 1, alpha, beta, gamma
    static Quad unit(Kind k, int i);

    Kind kind() const { return kind_; }
    double x() const { return c_[0]; }
    double y() const { return c_[1]; }
    double z() const { return c_[2]; }
    double t() const { return c_[3]; }
    double operator[](int i) const { return c_[i]; }
    const std::array<double, 4>& components() const { return c_; }

    bool operator==(const Quad& o) const { return kind_ == o.kind_ && c_ == o.c_; }

private:
    Kind kind_ = Kind::Circular;
    std::array<double, 4> c_{0, 0, 0, 0};
};

Quad add(const Quad& u, const Quad& v);
Quad sub(const Quad& u, const Quad& v);
Quad neg(const Quad& u);
Quad scale(const Quad& u, double s);
Quad mul(const Quad& u, const Quad& v);

inline Quad operator+(const Quad& u, const Quad& v) { return add(u, v); }
inline Quad operator-(const Quad& u, const Quad& v) { return sub(u, v); }
inline Quad operator-(const Quad& u) { return neg(u); }
inline Quad operator*(const Quad& u, const Quad& v) { return mul(u, v); }
inline Quad operator*(double s, const Quad& u) { return scale(u, s); }
inline Quad operator*(const Quad& u, double s) { return scale(u, s); }
inline Quad operator/(const Quad& u, double s) { return scale(u, 1.0 / s); }

// Euclidean length of the component vector
double modulus(const Quad& u);
// max-norm distance, handy in tests
double max_abs_diff(const Quad& u, const Quad& v);

// ν for hyperbolic and polar (signed), ρ⁴ for circular and planar
double norm4(const Quad& u);

struct Amplitude {
    double nu = 0;       // ρ⁴ or signed ν
    bool defined = true; // false when ν < 0 (hyperbolic, polar)
    double value = 0;    // ρ, μ or polar ρ; 0 when undefined
};
Amplitude amplitude(const Quad& u);

struct SingularityReport {
    bool singular = false;
    std::vector<std::string> nodal_sets;
    double margin = 0;
};

// Nodal conditions per kind:
//   circular/planar: "rho+=0", "rho-=0"
//   hyperbolic: "s=0", "s'=0", "s''=0", "s'''=0"
//   polar: "v+=0", "v-=0", "mu+=0"
SingularityReport singularity(const Quad& u, double tol = default_tol);

Quad inverse(const Quad& u, double tol = default_tol);
Quad divide(const Quad& u, const Quad& v, double tol = default_tol);

Quad pow_int(const Quad& u, long long m, double tol = default_tol);

std::string to_string(const Quad& u);

}  // namespace quadfield
