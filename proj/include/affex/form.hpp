#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "affex/blade.hpp"
#include "affex/frame.hpp"
#include "affex/rational.hpp"

namespace affex {

/// Graded element of the exterior algebra built over a frame: a finite map
/// from blades to exact rational coefficients. Zero coefficients are never
/// stored, so structural equality is mathematical equality. Immutable after
/// construction; every operation below is a pure function.
class GeometricForm {
public:
    using Terms = std::map<Blade, Rational, BladeOrder>;

    /// The zero form.
    explicit GeometricForm(Frame frame) : frame_(std::move(frame)) {}

    /// Validates every blade against the frame and prunes zero coefficients.
    GeometricForm(Frame frame, Terms terms);

    const Frame& frame() const { return frame_; }
    int dimension() const { return frame_.dimension(); }
    const Terms& terms() const { return terms_; }

    /// Coefficient of a blade; zero when the blade is absent.
    Rational coefficient(Blade b) const;

    bool is_zero() const { return terms_.empty(); }

    /// Grade shared by all terms; nullopt for the zero form and for mixed
    /// forms.
    std::optional<int> homogeneous_grade() const;

private:
    Frame frame_;
    Terms terms_;
};

/// Grade-0 form holding a single scalar.
GeometricForm make_scalar(const Frame& frame, Rational value);

/// Point O + sum coords[i] * v_{i+1}; a grade-1 form of mass 1.
GeometricForm make_point(const Frame& frame, std::span<const Rational> coords);

/// Vector sum coords[i] * v_{i+1}; a grade-1 form of mass 0.
GeometricForm make_vector(const Frame& frame, std::span<const Rational> coords);

/// Exact coefficient-wise combination of scaled forms. All forms must share
/// one frame; the list must be nonempty.
GeometricForm linear_combine(
    std::span<const std::pair<Rational, GeometricForm>> terms);

/// Exterior product. Bilinear and associative; blades that share an index
/// annihilate, so grades above n+1 vanish silently.
GeometricForm wedge(const GeometricForm& a, const GeometricForm& b);

/// Left-to-right wedge of a nonempty list of factors.
GeometricForm wedge(std::span<const GeometricForm> factors);

/// Projection onto the grade-k component; k must lie in [0, n+1].
GeometricForm grade_part(const GeometricForm& x, int k);

/// Coefficient of the full blade O ∧ v1 ∧ ... ∧ vn (zero when absent).
Rational top_coefficient(const GeometricForm& x);

/// Exact equality of all blade coefficients. Throws FrameMismatch when the
/// frames differ.
bool equals(const GeometricForm& a, const GeometricForm& b);

GeometricForm operator+(const GeometricForm& a, const GeometricForm& b);
GeometricForm operator-(const GeometricForm& a, const GeometricForm& b);
GeometricForm operator-(const GeometricForm& x);
GeometricForm operator*(const Rational& scale, const GeometricForm& x);

}  // namespace affex
