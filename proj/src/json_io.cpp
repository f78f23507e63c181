#include "affex/json_io.hpp"

#include <string>

#include "affex/error.hpp"

namespace affex {

namespace {

const Json& expect_member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing \"") + key + "\" member");
    return j.at(key);
}

const Json& expect_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

std::vector<Rational> coords_from_json(const Json& j, const Frame& frame,
                                       const char* what) {
    expect_array(j, what);
    if (static_cast<int>(j.size()) != frame.dimension())
        throw ParseError(std::string(what) + " needs exactly " +
                         std::to_string(frame.dimension()) + " coordinates");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& c : j) out.push_back(rational_from_json(c));
    return out;
}

}  // namespace

Json rational_to_json(const Rational& value, const PrintOptions& opts) {
    if (!opts.approx_digits) return to_string(value);
    Json out;
    out["exact"] = to_string(value);
    out["approx"] = to_decimal_string(value, *opts.approx_digits);
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational must be a \"p/q\" string or an integer");
}

Json form_to_json(const GeometricForm& x, const PrintOptions& opts) {
    Json out;
    out["n"] = x.dimension();
    Json terms = Json::array();
    for (const auto& [blade, coeff] : x.terms()) {
        Json term;
        term["blade"] = blade_indices(blade);
        term["coeff"] = to_string(coeff);
        if (opts.approx_digits)
            term["approx"] = to_decimal_string(coeff, *opts.approx_digits);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

GeometricForm form_from_json(const Json& j) {
    const Json& n_json = expect_member(j, "n");
    if (!n_json.is_number_integer()) throw ParseError("\"n\" must be an integer");
    const int n = n_json.get<int>();
    if (n < 1 || n > kMaxDimension) throw ParseError("\"n\" out of range");
    const Frame frame(n);

    GeometricForm::Terms terms;
    for (const auto& term : expect_array(expect_member(j, "terms"), "\"terms\"")) {
        const Json& blade_json = expect_array(expect_member(term, "blade"), "\"blade\"");
        std::vector<int> indices;
        for (const auto& i : blade_json) {
            if (!i.is_number_integer())
                throw ParseError("blade indices must be integers");
            indices.push_back(i.get<int>());
        }
        Blade blade;
        try {
            blade = blade_from_indices(indices, n);
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
        const Rational coeff = rational_from_json(expect_member(term, "coeff"));
        if (!terms.emplace(blade, coeff).second)
            throw ParseError("duplicate blade in form");
    }
    return {frame, std::move(terms)};
}

ForceSystem force_system_from_json(const Json& j, const Frame& frame) {
    std::vector<AppliedForce> forces;
    for (const auto& f : expect_array(expect_member(j, "forces"), "\"forces\"")) {
        const auto at = coords_from_json(expect_member(f, "at"), frame, "\"at\"");
        const auto vec = coords_from_json(expect_member(f, "vec"), frame, "\"vec\"");
        forces.emplace_back(make_point(frame, at), make_vector(frame, vec));
    }
    return {frame, std::move(forces)};
}

std::vector<WeightedPoint> weighted_points_from_json(const Json& j,
                                                     const Frame& frame) {
    std::vector<WeightedPoint> out;
    for (const auto& p : expect_array(expect_member(j, "points"), "\"points\"")) {
        const auto at = coords_from_json(expect_member(p, "at"), frame, "\"at\"");
        out.push_back(
            {make_point(frame, at), rational_from_json(expect_member(p, "weight"))});
    }
    return out;
}

oracle::FreeForm free_form_from_json(const Json& j, int dimension) {
    const Json& k_json = expect_member(j, "k");
    if (!k_json.is_number_integer()) throw ParseError("\"k\" must be an integer");
    const int k = k_json.get<int>();

    std::vector<oracle::FreeTerm> terms;
    for (const auto& term : expect_array(expect_member(j, "terms"), "\"terms\"")) {
        oracle::FreeTerm out;
        out.coeff = rational_from_json(expect_member(term, "coeff"));
        for (const auto& p :
             expect_array(expect_member(term, "points"), "\"points\"")) {
            expect_array(p, "point");
            if (static_cast<int>(p.size()) != dimension)
                throw ParseError("point needs exactly " +
                                 std::to_string(dimension) + " coordinates");
            oracle::PointCoords coords;
            for (const auto& c : p) coords.push_back(rational_from_json(c));
            out.points.push_back(std::move(coords));
        }
        terms.push_back(std::move(out));
    }
    try {
        return {dimension, k, std::move(terms)};
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::vector<GeometricForm> polygon_from_json(const Json& j, const Frame& frame) {
    expect_array(j, "polygon");
    std::vector<GeometricForm> out;
    for (const auto& p : j)
        out.push_back(make_point(frame, coords_from_json(p, frame, "vertex")));
    return out;
}

std::vector<Triangle> surface_from_json(const Json& j, const Frame& frame) {
    expect_array(j, "surface");
    std::vector<Triangle> out;
    for (const auto& t : j) {
        expect_array(t, "triangle");
        if (t.size() != 3) throw ParseError("triangle needs exactly 3 vertices");
        out.push_back({make_point(frame, coords_from_json(t[0], frame, "vertex")),
                       make_point(frame, coords_from_json(t[1], frame, "vertex")),
                       make_point(frame, coords_from_json(t[2], frame, "vertex"))});
    }
    return out;
}

}  // namespace affex
