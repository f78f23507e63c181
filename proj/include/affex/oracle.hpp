#pragma once

#include <span>
#include <vector>

#include "affex/form.hpp"

namespace affex::oracle {

// Reference route for the algebra: forms as formal sums of concrete point
// tuples, equality decided by evaluating affine volumes of completed
// simplices. Deliberately blade-free so that it shares no code path with
// the coordinate engine it certifies.

using PointCoords = std::vector<Rational>;

struct FreeTerm {
    Rational coeff;
    std::vector<PointCoords> points;  // exactly `degree` points
};

/// Formal linear combination of degree-k tuples of points with coordinates
/// in dimension n. Degree runs from 1 to n+1.
class FreeForm {
public:
    FreeForm(int dimension, int degree);
    FreeForm(int dimension, int degree, std::vector<FreeTerm> terms);

    int dimension() const { return n_; }
    int degree() const { return k_; }
    const std::vector<FreeTerm>& terms() const { return terms_; }

private:
    int n_;
    int k_;
    std::vector<FreeTerm> terms_;
};

/// Affine volume of n+1 points given by coordinates, evaluated directly as
/// the determinant of the difference vectors. No blades involved.
Rational simplex_volume(int dimension, std::span<const PointCoords> points);

/// Quotient equality: f = g iff every volume evaluation of f − g completed
/// by frame-simplex vertices vanishes. Completing only over the n+1 simplex
/// vertices suffices because the volume is multi-affine and translation
/// invariant in each slot.
bool free_equals(const FreeForm& f, const FreeForm& g);

/// Image of a free form in the coordinate representation: the sum of
/// coeff * (wedge of the tuple's points).
GeometricForm canonicalize(const FreeForm& f);

/// Expansion of (P1−P0)(P2−P0)...(Pk−P0) into 2^k signed point tuples,
/// as a degree-k free form.
FreeForm point_difference_expansion(int dimension,
                                    std::span<const PointCoords> points);

}  // namespace affex::oracle
