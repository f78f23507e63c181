#include "affex/oracle.hpp"

#include <utility>

#include "affex/error.hpp"

namespace affex::oracle {

namespace {

/// Coordinates of the j-th frame-simplex vertex: the origin for j = 0,
/// otherwise the unit point along axis j.
PointCoords simplex_vertex(int dimension, int j) {
    PointCoords out(dimension, Rational(0));
    if (j > 0) out[j - 1] = 1;
    return out;
}

/// Determinant by plain fraction elimination. Consumes the matrix.
Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

/// Visits every ordered tuple of `length` distinct frame-simplex vertices.
/// The visitor returns false to stop early.
template <typename Visitor>
bool for_each_completion(int dimension, int length, Visitor&& visit) {
    std::vector<int> chosen;
    std::vector<bool> used(static_cast<std::size_t>(dimension) + 1, false);
    const auto recurse = [&](auto&& self) -> bool {
        if (static_cast<int>(chosen.size()) == length) return visit(chosen);
        for (int j = 0; j <= dimension; ++j) {
            if (used[j]) continue;
            used[j] = true;
            chosen.push_back(j);
            const bool keep_going = self(self);
            chosen.pop_back();
            used[j] = false;
            if (!keep_going) return false;
        }
        return true;
    };
    return recurse(recurse);
}

}  // namespace

FreeForm::FreeForm(int dimension, int degree) : FreeForm(dimension, degree, {}) {}

FreeForm::FreeForm(int dimension, int degree, std::vector<FreeTerm> terms)
    : n_(dimension), k_(degree), terms_(std::move(terms)) {
    if (n_ < 1 || n_ > kMaxDimension) throw Error("dimension out of range");
    if (k_ < 1 || k_ > n_ + 1)
        throw GradeError("free form degree must lie between 1 and n+1");
    for (const auto& term : terms_) {
        if (static_cast<int>(term.points.size()) != k_)
            throw ArityError("free term tuple length must equal the degree");
        for (const auto& p : term.points)
            if (static_cast<int>(p.size()) != n_)
                throw ArityError("free term point has the wrong dimension");
    }
}

Rational simplex_volume(int dimension, std::span<const PointCoords> points) {
    if (static_cast<int>(points.size()) != dimension + 1)
        throw ArityError("simplex volume needs n+1 points");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dimension)
            throw ArityError("point has the wrong dimension");

    std::vector<std::vector<Rational>> diffs(
        dimension, std::vector<Rational>(dimension));
    for (int row = 0; row < dimension; ++row)
        for (int col = 0; col < dimension; ++col)
            diffs[row][col] = points[row + 1][col] - points[0][col];
    return determinant(std::move(diffs));
}

bool free_equals(const FreeForm& f, const FreeForm& g) {
    if (f.dimension() != g.dimension())
        throw FrameMismatch("free forms have different dimension");
    if (f.degree() != g.degree())
        throw GradeError("free forms have different degree");

    const int n = f.dimension();
    const int k = f.degree();

    std::vector<FreeTerm> difference = f.terms();
    for (const auto& term : g.terms())
        difference.push_back({-term.coeff, term.points});

    std::vector<PointCoords> assembled(static_cast<std::size_t>(n) + 1);
    return for_each_completion(n, n + 1 - k, [&](const std::vector<int>& tuple) {
        Rational total(0);
        for (const auto& term : difference) {
            for (int i = 0; i < k; ++i) assembled[i] = term.points[i];
            for (std::size_t i = 0; i < tuple.size(); ++i)
                assembled[k + i] = simplex_vertex(n, tuple[i]);
            total += term.coeff * simplex_volume(n, assembled);
        }
        return total == 0;
    });
}

GeometricForm canonicalize(const FreeForm& f) {
    const Frame frame(f.dimension());
    GeometricForm out(frame);
    for (const auto& term : f.terms()) {
        std::vector<GeometricForm> factors;
        factors.reserve(term.points.size());
        for (const auto& p : term.points) factors.push_back(make_point(frame, p));
        out = out + term.coeff * wedge(factors);
    }
    return out;
}

FreeForm point_difference_expansion(int dimension,
                                    std::span<const PointCoords> points) {
    if (points.size() < 2)
        throw ArityError("difference expansion needs at least two points");
    const int k = static_cast<int>(points.size()) - 1;

    std::vector<FreeTerm> terms;
    terms.reserve(std::size_t{1} << k);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        FreeTerm term;
        term.points.reserve(k);
        int base_choices = 0;
        for (int i = 0; i < k; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                term.points.push_back(points[0]);
                ++base_choices;
            } else {
                term.points.push_back(points[i + 1]);
            }
        }
        term.coeff = (base_choices % 2 == 0) ? 1 : -1;
        terms.push_back(std::move(term));
    }
    return {dimension, k, std::move(terms)};
}

}  // namespace affex::oracle
