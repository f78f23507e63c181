#include "affex/affine.hpp"

#include <utility>

#include "affex/error.hpp"

namespace affex {

namespace {

void require_points(std::span<const GeometricForm> points) {
    for (const auto& p : points)
        if (!is_point(p)) throw NotAPoint("argument must be a unit-mass point");
}

void require_one_frame(std::span<const GeometricForm> forms) {
    for (const auto& f : forms)
        if (!(f.frame() == forms.front().frame()))
            throw FrameMismatch("forms live over frames of different dimension");
}

/// Solves the square system A c = rhs by exact Gaussian elimination.
/// Throws DegenerateBasis when A is singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> rhs) {
    const std::size_t m = a.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) throw DegenerateBasis("singular coordinate system");
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < m; ++j) a[row][j] -= factor * a[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Rational> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = rhs[i] / a[i][i];
    return out;
}

/// Basis of the grade-k component induced by the simplex vertices, in the
/// coordinate order used throughout: vertices; the six pairs 12, 13, 14,
/// 23, 24, 34; the signed triples x2x3x4, -x1x3x4, x1x2x4, -x1x2x3.
std::vector<GeometricForm> induced_basis(const SimplexBasis& basis, int k) {
    const auto& x = basis.vertices();
    switch (k) {
        case 1:
            return {x[0], x[1], x[2], x[3]};
        case 2:
            return {wedge(x[0], x[1]), wedge(x[0], x[2]), wedge(x[0], x[3]),
                    wedge(x[1], x[2]), wedge(x[1], x[3]), wedge(x[2], x[3])};
        case 3:
            return {wedge(wedge(x[1], x[2]), x[3]), -wedge(wedge(x[0], x[2]), x[3]),
                    wedge(wedge(x[0], x[1]), x[3]), -wedge(wedge(x[0], x[1]), x[2])};
        default:
            throw GradeError("coords supports grades 1, 2 and 3");
    }
}

}  // namespace

SimplexBasis::SimplexBasis(std::vector<GeometricForm> vertices)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw ArityError("simplex basis needs n+1 vertices");
    require_one_frame(vertices_);
    const Frame& frame = vertices_.front().frame();
    if (static_cast<int>(vertices_.size()) != frame.dimension() + 1)
        throw ArityError("simplex basis needs n+1 vertices");
    for (const auto& v : vertices_)
        if (v.homogeneous_grade() != 1)
            throw GradeError("simplex basis vertices must have grade 1");
    top_product_ = top_coefficient(wedge(vertices_));
    if (top_product_ == 0)
        throw DegenerateBasis("simplex basis has vanishing top product");
}

Rational vol(std::span<const GeometricForm> points) {
    if (points.empty()) throw ArityError("vol needs n+1 points");
    require_one_frame(points);
    if (static_cast<int>(points.size()) != points.front().dimension() + 1)
        throw ArityError("vol needs n+1 points");
    require_points(points);
    return top_coefficient(wedge(points));
}

WeightedPoint barycenter(std::span<const WeightedPoint> system) {
    if (system.empty()) throw ArityError("barycenter needs a nonempty system");
    for (const auto& wp : system)
        if (!is_point(wp.point)) throw NotAPoint("weighted entry must be a point");

    std::vector<std::pair<Rational, GeometricForm>> scaled;
    scaled.reserve(system.size());
    for (const auto& wp : system) scaled.emplace_back(wp.weight, wp.point);
    const GeometricForm sum = linear_combine(scaled);

    const Rational total = mass(sum);
    if (total == 0)
        throw NoBarycenter("total weight is zero; the system is a vector");
    return {Rational(1) / total * sum, total};
}

bool incidence(Incidence kind, std::span<const GeometricForm> points) {
    require_one_frame(points);
    require_points(points);
    switch (kind) {
        case Incidence::Collinear:
            if (points.size() != 3) throw ArityError("Collinear takes 3 points");
            return wedge(points).is_zero();
        case Incidence::Coplanar:
            if (points.size() != 4) throw ArityError("Coplanar takes 4 points");
            return wedge(points).is_zero();
        case Incidence::ParallelSegments:
            if (points.size() != 4)
                throw ArityError("ParallelSegments takes 4 points");
            return equals(points[1] - points[0], points[3] - points[2]);
    }
    throw Error("unknown incidence kind");
}

std::vector<Rational> coords(const GeometricForm& x, const SimplexBasis& basis) {
    if (basis.frame().dimension() != 3)
        throw UnsupportedDimension("coords is defined for n = 3");
    if (!(x.frame() == basis.frame()))
        throw FrameMismatch("form and basis frames differ");
    const auto maybe_grade = x.homogeneous_grade();
    if (!maybe_grade) throw GradeError("coords needs a nonzero homogeneous form");
    const int k = *maybe_grade;

    const std::vector<GeometricForm> elements = induced_basis(basis, k);
    const std::vector<Blade> grade_blades = blades_of_grade(3, k);

    std::vector<std::vector<Rational>> matrix(
        grade_blades.size(), std::vector<Rational>(elements.size()));
    std::vector<Rational> rhs(grade_blades.size());
    for (std::size_t row = 0; row < grade_blades.size(); ++row) {
        for (std::size_t col = 0; col < elements.size(); ++col)
            matrix[row][col] = elements[col].coefficient(grade_blades[row]);
        rhs[row] = x.coefficient(grade_blades[row]);
    }
    return solve_exact(std::move(matrix), std::move(rhs));
}

Rational dual_functional(const GeometricForm& phi, const GeometricForm& x) {
    if (!(phi.frame() == x.frame()))
        throw FrameMismatch("forms live over frames of different dimension");
    if (phi.is_zero() || x.is_zero()) return 0;
    const auto gp = phi.homogeneous_grade();
    const auto gx = x.homogeneous_grade();
    if (!gp || !gx) throw GradeError("dual_functional needs homogeneous forms");
    if (*gp + *gx != x.dimension() + 1)
        throw GradeError("grades must sum to n+1");
    return top_coefficient(wedge(x, phi));
}

std::vector<GeometricForm> factor(const GeometricForm& x) {
    const int n = x.dimension();
    if (n != 3) throw UnsupportedDimension("factor is defined for n = 3");
    if (x.is_zero()) return {};

    const auto maybe_grade = x.homogeneous_grade();
    if (!maybe_grade || (*maybe_grade != 2 && *maybe_grade != 3) ||
        !omega(x).is_zero())
        throw GradeError("factor needs a bivector or a trivector");

    const Frame& frame = x.frame();
    if (*maybe_grade == 3) {
        const Rational c = x.coefficient(unit_blade(1) | unit_blade(2) | unit_blade(3));
        const std::array<Rational, 3> e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, c};
        return {make_vector(frame, e1), make_vector(frame, e2),
                make_vector(frame, e3)};
    }

    // Alternating coefficient matrix over the vector indices; a rank-2
    // factorization comes from the two columns through the first pivot.
    std::array<std::array<Rational, 4>, 4> m{};
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            const Rational c = x.coefficient(unit_blade(i) | unit_blade(j));
            m[i][j] = c;
            m[j][i] = -c;
        }

    int p = 0, q = 0;
    for (int i = 1; i <= 3 && p == 0; ++i)
        for (int j = i + 1; j <= 3 && p == 0; ++j)
            if (m[i][j] != 0) {
                p = i;
                q = j;
            }

    std::array<Rational, 3> u{}, w{};
    for (int i = 1; i <= 3; ++i) {
        u[i - 1] = m[i][p];
        w[i - 1] = m[i][q] / m[p][q];
    }
    std::vector<GeometricForm> out{make_vector(frame, u), make_vector(frame, w)};
    if (!equals(wedge(out[0], out[1]), x))
        throw GradeError("bivector is not decomposable");
    return out;
}

GeometricForm boundary_cycle(std::span<const GeometricForm> points) {
    require_one_frame(points);
    require_points(points);
    if (points.size() == 3) {
        const auto &a = points[0], &b = points[1], &c = points[2];
        return wedge(a, b) + wedge(b, c) + wedge(c, a);
    }
    if (points.size() == 4) {
        const auto &a = points[0], &b = points[1], &c = points[2], &d = points[3];
        return wedge(wedge(b, c), d) - wedge(wedge(a, c), d) +
               wedge(wedge(a, b), d) - wedge(wedge(a, b), c);
    }
    throw ArityError("boundary_cycle takes 3 or 4 points");
}

PolygonReduction reduce_polygon(std::span<const GeometricForm> vertices) {
    if (vertices.size() < 3) throw ArityError("polygon needs at least 3 vertices");
    require_one_frame(vertices);
    require_points(vertices);

    const Frame& frame = vertices.front().frame();
    GeometricForm cycle(frame);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        cycle = cycle + wedge(vertices[i], vertices[(i + 1) % vertices.size()]);
    if (!omega(cycle).is_zero())
        throw Error("closed edge cycle must have vanishing boundary");
    // Halve the edge sum: a triangle's boundary cycle is the doubled-area
    // parallelogram bivector, so this scaling makes the plane-blade
    // coefficient the polygon's signed area.
    cycle = Rational(1, 2) * cycle;

    // The signed area is only a plane-relative coefficient: report it when
    // the vertices vary along at most two frame axes.
    std::vector<int> varying;
    for (int i = 1; i <= frame.dimension(); ++i) {
        const Rational first = vertices.front().coefficient(unit_blade(i));
        for (const auto& v : vertices)
            if (v.coefficient(unit_blade(i)) != first) {
                varying.push_back(i);
                break;
            }
    }

    std::optional<Rational> area;
    if (varying.size() == 2)
        area = cycle.coefficient(unit_blade(varying[0]) | unit_blade(varying[1]));
    else if (varying.size() < 2)
        area = Rational(0);
    return {std::move(cycle), std::move(area)};
}

SurfaceReduction reduce_closed_surface(std::span<const Triangle> triangles) {
    if (triangles.empty()) throw ArityError("surface needs at least one triangle");
    const Frame& frame = triangles.front()[0].frame();

    GeometricForm total(frame);
    for (const auto& t : triangles) {
        require_one_frame(t);
        if (!(t[0].frame() == frame))
            throw FrameMismatch("triangles live over frames of different dimension");
        require_points(t);
        total = total + wedge(wedge(t[0], t[1]), t[2]);
    }
    if (!omega(total).is_zero())
        throw NotClosed("triangle boundaries do not cancel");

    Rational coefficient = 0;
    if (frame.dimension() >= 3)
        coefficient =
            total.coefficient(unit_blade(1) | unit_blade(2) | unit_blade(3));
    return {std::move(total), std::move(coefficient)};
}

}  // namespace affex
