#pragma once

#include <array>
#include <optional>
#include <vector>

#include "affex/boundary.hpp"

namespace affex {

/// Unit-mass point together with a multiplicity.
struct WeightedPoint {
    GeometricForm point;
    Rational weight;
};

/// n+1 degree-1 forms whose wedge does not vanish. Induces a basis of every
/// grade: the vertices, their pairwise products, and so on.
class SimplexBasis {
public:
    /// Throws DegenerateBasis when the top product vanishes, FrameMismatch
    /// when the vertices disagree on the frame, ArityError on a wrong count.
    explicit SimplexBasis(std::vector<GeometricForm> vertices);

    const std::vector<GeometricForm>& vertices() const { return vertices_; }
    const Frame& frame() const { return vertices_.front().frame(); }

    /// Coefficient of the full blade in the wedge of all vertices; nonzero.
    const Rational& top_product() const { return top_product_; }

private:
    std::vector<GeometricForm> vertices_;
    Rational top_product_;
};

/// Affine volume of n+1 unit-mass points, normalized so the frame simplex
/// (O, O+v1, ..., O+vn) has volume 1. Alternating, translation invariant,
/// and affine in each argument.
Rational vol(std::span<const GeometricForm> points);

/// Barycenter of a nonempty weighted system: the unit-mass point G with
/// sum(w_i * p_i) = (sum w_i) * G, returned with the total weight. Throws
/// NoBarycenter when the total weight vanishes (the system is a vector).
WeightedPoint barycenter(std::span<const WeightedPoint> system);

enum class Incidence {
    Collinear,         // 3 points: A ∧ B ∧ C = 0
    Coplanar,          // 4 points: A ∧ B ∧ C ∧ D = 0
    ParallelSegments,  // 4 points: B − A = D − C
};

bool incidence(Incidence kind, std::span<const GeometricForm> points);

/// Coordinates of a homogeneous form of grade 1, 2 or 3 (n = 3 only) in the
/// basis induced by the simplex: the vertices for grade 1; the six edge
/// products x1x2, x1x3, x1x4, x2x3, x2x4, x3x4 for grade 2; the signed face
/// products x2x3x4, -x1x3x4, x1x2x4, -x1x2x3 for grade 3. Exact linear
/// solve; reconstruction is exact.
std::vector<Rational> coords(const GeometricForm& x, const SimplexBasis& basis);

/// Pairing of forms of complementary grade (they must sum to n+1): the
/// coefficient of the full blade in x ∧ phi. Linear in each argument.
Rational dual_functional(const GeometricForm& phi, const GeometricForm& x);

/// Writes a bivector as a product of two vectors, a trivector as a product
/// of three (n = 3 only; zero factors into an empty list). The wedge of the
/// returned vectors reproduces the input exactly.
std::vector<GeometricForm> factor(const GeometricForm& x);

/// Oriented boundary of a triangle (3 points: AB + BC + CA) or of a
/// tetrahedron (4 points: BCD − ACD + ABD − ABC). Always a pure k-vector.
GeometricForm boundary_cycle(std::span<const GeometricForm> points);

/// Polygon reduction: the bivector of the closed edge cycle, and — when the
/// polygon lies in a plane spanned by two frame vectors — the signed area
/// coefficient on that plane's blade.
struct PolygonReduction {
    GeometricForm bivector;
    std::optional<Rational> area;
};

/// Ordered list of >= 3 unit-mass points, implicitly closed.
PolygonReduction reduce_polygon(std::span<const GeometricForm> vertices);

using Triangle = std::array<GeometricForm, 3>;

/// Closed-surface reduction: the trivector of the oriented triangle list and
/// its coefficient relative to v1 ∧ v2 ∧ v3. Throws NotClosed when the
/// triangle boundaries do not cancel.
struct SurfaceReduction {
    GeometricForm trivector;
    Rational coefficient;
};

SurfaceReduction reduce_closed_surface(std::span<const Triangle> triangles);

}  // namespace affex
