#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadfield/quadfield.hpp"

namespace quadfield::io {

using nlohmann::json;

json to_json(const Quad& u);
// Accepts {"kind":..,"x":..,"y":..,"z":..,"t":..}, a 4-element array or a
// bare number (real quad).  Arrays and numbers need `kind`.
Quad quad_from_json(const json& j, std::optional<Kind> kind = std::nullopt);

// "x,y,z,t"
Quad parse_quad(const std::string& text, Kind kind);

json to_json(const ExpForm& f);
ExpForm exp_form_from_json(const json& j);
json to_json(const TrigForm& f);
TrigForm trig_form_from_json(const json& j);

json to_json(const Root& r);
json to_json(const Factorization& f);
std::vector<std::string> render_factors(const Factorization& f, int digits);

json to_json(const Matrix4& m);

// {"kind":..,"circle":{"plane":"plus","center":[..],"radius":..,"samples":..,"psi":..,"fixed_angle":..}}
// or {"kind":..,"points":[[x,y,z,t],...]}
Loop loop_from_json(const json& j);

Poly poly_from_json(const json& coeffs, Kind kind);

// %.<digits>g with negative zero printed as 0
std::string format_number(double v, int digits);
std::string format_quad_csv(const Quad& u, int digits);

}  // namespace quadfield::io
