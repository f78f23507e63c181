#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

#include "affex/affine.hpp"
#include "affex/mechanics.hpp"
#include "affex/oracle.hpp"

namespace affex {

// Canonical JSON surfaces. Output is deterministic: object keys in fixed
// order, terms sorted by grade then lexicographic blade order, coefficients
// as exact "p/q" strings (denominator omitted when 1). Input accepts "p/q"
// strings and JSON integers; floating-point numbers are rejected.

using Json = nlohmann::ordered_json;

struct PrintOptions {
    /// When set, every scalar is emitted as {"exact": "p/q", "approx": ...}
    /// with the given number of fractional digits alongside the exact value.
    std::optional<int> approx_digits;
};

Json rational_to_json(const Rational& value, const PrintOptions& opts = {});
Rational rational_from_json(const Json& j);

/// { "n": int, "terms": [ { "blade": [ints], "coeff": "p/q" }, ... ] }
Json form_to_json(const GeometricForm& x, const PrintOptions& opts = {});
GeometricForm form_from_json(const Json& j);

/// { "forces": [ { "at": [coords], "vec": [coords] }, ... ] }
ForceSystem force_system_from_json(const Json& j, const Frame& frame);

/// { "points": [ { "at": [coords], "weight": "p/q" }, ... ] }
std::vector<WeightedPoint> weighted_points_from_json(const Json& j,
                                                     const Frame& frame);

/// { "k": int, "terms": [ { "coeff": "p/q", "points": [[coords], ...] } ] }
oracle::FreeForm free_form_from_json(const Json& j, int dimension);

/// [ [coords], [coords], ... ] — each entry becomes a unit-mass point.
std::vector<GeometricForm> polygon_from_json(const Json& j, const Frame& frame);

/// [ [[coords],[coords],[coords]], ... ] — oriented triangles.
std::vector<Triangle> surface_from_json(const Json& j, const Frame& frame);

}  // namespace affex
