#pragma once

// Shared generators and independent cross-check helpers for the test
// suites. Everything is seeded explicitly so runs are reproducible.

#include <random>
#include <utility>
#include <vector>

#include "affex/affine.hpp"
#include "affex/boundary.hpp"
#include "affex/form.hpp"
#include "affex/mechanics.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long rand_long(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline affex::Rational rand_rational(Rng& rng, long bound = 1000) {
    return affex::rational(rand_long(rng, -bound, bound), rand_long(rng, 1, bound));
}

inline affex::Rational rand_nonzero_rational(Rng& rng, long bound = 1000) {
    for (;;) {
        affex::Rational q = rand_rational(rng, bound);
        if (q != 0) return q;
    }
}

/// Uniform-ish rational in [0, 1).
inline affex::Rational rand_fraction(Rng& rng, long den_bound = 64) {
    const long den = rand_long(rng, 1, den_bound);
    return affex::rational(rand_long(rng, 0, den - 1), den);
}

inline std::vector<affex::Rational> rand_coords(Rng& rng, int n, long bound = 1000) {
    std::vector<affex::Rational> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(rand_rational(rng, bound));
    return out;
}

inline affex::GeometricForm rand_point(const affex::Frame& frame, Rng& rng,
                                       long bound = 1000) {
    return affex::make_point(frame, rand_coords(rng, frame.dimension(), bound));
}

inline affex::GeometricForm rand_vector(const affex::Frame& frame, Rng& rng,
                                        long bound = 1000) {
    return affex::make_vector(frame, rand_coords(rng, frame.dimension(), bound));
}

/// Random form with terms of a single grade; nonzero unless allow_zero.
inline affex::GeometricForm rand_homogeneous(const affex::Frame& frame, int k,
                                             Rng& rng, long bound = 1000,
                                             bool allow_zero = false) {
    const std::vector<affex::Blade> blades =
        affex::blades_of_grade(frame.dimension(), k);
    for (;;) {
        affex::GeometricForm::Terms terms;
        const int count = static_cast<int>(
            rand_long(rng, allow_zero ? 0 : 1,
                      static_cast<long>(std::min<std::size_t>(blades.size(), 4))));
        for (int i = 0; i < count; ++i) {
            const auto& blade =
                blades[static_cast<std::size_t>(rand_long(rng, 0, blades.size() - 1))];
            terms[blade] = rand_rational(rng, bound);
        }
        affex::GeometricForm out(frame, std::move(terms));
        if (allow_zero || !out.is_zero()) return out;
    }
}

/// Random form mixing grades.
inline affex::GeometricForm rand_form(const affex::Frame& frame, Rng& rng,
                                      long bound = 1000) {
    affex::GeometricForm::Terms terms;
    const affex::Blade limit = affex::Blade{1} << (frame.dimension() + 1);
    const int count = static_cast<int>(rand_long(rng, 1, 6));
    for (int i = 0; i < count; ++i)
        terms[static_cast<affex::Blade>(rand_long(rng, 0, limit - 1))] =
            rand_rational(rng, bound);
    return {frame, std::move(terms)};
}

/// n+1 unit-mass points in general position.
inline std::vector<affex::GeometricForm> rand_point_simplex(
    const affex::Frame& frame, Rng& rng, long bound = 50) {
    for (;;) {
        std::vector<affex::GeometricForm> points;
        for (int i = 0; i <= frame.dimension(); ++i)
            points.push_back(rand_point(frame, rng, bound));
        if (affex::top_coefficient(affex::wedge(points)) != 0) return points;
    }
}

/// Simplex basis out of arbitrary independent grade-1 forms.
inline affex::SimplexBasis rand_grade1_basis(const affex::Frame& frame, Rng& rng,
                                             long bound = 50) {
    for (;;) {
        std::vector<affex::GeometricForm> vertices;
        for (int i = 0; i <= frame.dimension(); ++i)
            vertices.push_back(rand_homogeneous(frame, 1, rng, bound));
        if (affex::top_coefficient(affex::wedge(vertices)) != 0)
            return affex::SimplexBasis(std::move(vertices));
    }
}

inline affex::ForceSystem rand_force_system(const affex::Frame& frame, Rng& rng,
                                            int max_forces = 4, long bound = 50) {
    std::vector<affex::AppliedForce> forces;
    const int count = static_cast<int>(rand_long(rng, 0, max_forces));
    for (int i = 0; i < count; ++i)
        forces.emplace_back(rand_point(frame, rng, bound),
                            rand_vector(frame, rng, bound));
    return {frame, std::move(forces)};
}

/// Forces confined to the (v1, v2) coordinate plane.
inline affex::ForceSystem rand_planar_system(const affex::Frame& frame, Rng& rng,
                                             int max_forces = 4, long bound = 50) {
    std::vector<affex::AppliedForce> forces;
    const int count = static_cast<int>(rand_long(rng, 1, max_forces));
    for (int i = 0; i < count; ++i) {
        std::vector<affex::Rational> at = rand_coords(rng, frame.dimension(), bound);
        std::vector<affex::Rational> vec = rand_coords(rng, frame.dimension(), bound);
        for (int j = 2; j < frame.dimension(); ++j) {
            at[j] = 0;
            vec[j] = 0;
        }
        forces.emplace_back(affex::make_point(frame, at),
                            affex::make_vector(frame, vec));
    }
    return {frame, std::move(forces)};
}

inline std::vector<affex::Rational> rats(std::initializer_list<long> values) {
    std::vector<affex::Rational> out;
    out.reserve(values.size());
    for (long v : values) out.emplace_back(v);
    return out;
}

inline affex::GeometricForm pt(const affex::Frame& frame,
                               std::initializer_list<long> coords) {
    return affex::make_point(frame, rats(coords));
}

inline affex::GeometricForm vc(const affex::Frame& frame,
                               std::initializer_list<long> coords) {
    return affex::make_vector(frame, rats(coords));
}

/// Independent signed-area reference: the shoelace sum over (x, y) pairs.
inline affex::Rational shoelace(
    const std::vector<std::pair<affex::Rational, affex::Rational>>& vertices) {
    affex::Rational twice(0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& [x0, y0] = vertices[i];
        const auto& [x1, y1] = vertices[(i + 1) % vertices.size()];
        twice += x0 * y1 - x1 * y0;
    }
    return twice / 2;
}

using PlaneVertices = std::vector<std::pair<affex::Rational, affex::Rational>>;

/// Random vertex list; generically self-intersecting.
inline PlaneVertices rand_plane_polygon(Rng& rng, long bound = 50) {
    const int k = static_cast<int>(rand_long(rng, 3, 8));
    PlaneVertices out;
    for (int i = 0; i < k; ++i)
        out.emplace_back(rand_rational(rng, bound), rand_rational(rng, bound));
    return out;
}

/// Simple polygon by construction: an x-monotone upper chain above y = 1 and
/// a lower chain below y = -1, joined by the two extreme vertical edges.
inline PlaneVertices rand_simple_polygon(Rng& rng) {
    const int k = static_cast<int>(rand_long(rng, 2, 6));
    std::vector<affex::Rational> xs, upper, lower;
    for (int i = 0; i < k; ++i) {
        xs.push_back(affex::Rational(i) + rand_fraction(rng));
        upper.push_back(affex::Rational(1) + rand_fraction(rng));
        lower.push_back(affex::Rational(-2) + rand_fraction(rng));
    }
    PlaneVertices out;
    for (int i = 0; i < k; ++i) out.emplace_back(xs[i], upper[i]);
    for (int i = k - 1; i >= 0; --i) out.emplace_back(xs[i], lower[i]);
    return out;
}

/// Lifts (x, y) pairs into the plane v3 = height of a 3-frame.
inline std::vector<affex::GeometricForm> lift_polygon(const affex::Frame& frame,
                                                      const PlaneVertices& flat,
                                                      const affex::Rational& height) {
    std::vector<affex::GeometricForm> out;
    for (const auto& [x, y] : flat) {
        const std::vector<affex::Rational> coords{x, y, height};
        out.push_back(affex::make_point(frame, coords));
    }
    return out;
}

/// Outward-consistent boundary triangles of the tetrahedron (a, b, c, d):
/// the cycle bcd - acd + abd - abc written as positively-signed triples.
inline std::vector<affex::Triangle> tetra_boundary(
    const std::array<affex::GeometricForm, 4>& v) {
    return {affex::Triangle{v[1], v[2], v[3]}, affex::Triangle{v[0], v[3], v[2]},
            affex::Triangle{v[0], v[1], v[3]}, affex::Triangle{v[0], v[2], v[1]}};
}

/// Coherently oriented faces of an octahedron: vertex 0 on top, 1..4 around
/// the equator, 5 at the bottom.
inline std::vector<affex::Triangle> octahedron_boundary(
    const std::array<affex::GeometricForm, 6>& v) {
    const std::array<std::array<int, 3>, 8> faces{{{0, 1, 2},
                                                   {0, 2, 3},
                                                   {0, 3, 4},
                                                   {0, 4, 1},
                                                   {5, 2, 1},
                                                   {5, 3, 2},
                                                   {5, 4, 3},
                                                   {5, 1, 4}}};
    std::vector<affex::Triangle> out;
    for (const auto& f : faces)
        out.push_back(affex::Triangle{v[f[0]], v[f[1]], v[f[2]]});
    return out;
}

}  // namespace gen
