#pragma once

#include "affex/form.hpp"

namespace affex {

/// The boundary operator: linear, lowers grade by one. On a blade that
/// contains the origin unit it deletes that index (sign +1, the origin is
/// leftmost); blades without it are annihilated.
GeometricForm omega(const GeometricForm& x);

/// The mass: omega restricted to the grade-1 part, i.e. the coefficient of
/// the bare origin blade. Distinguishes weighted points (mass != 0) from
/// vectors (mass 0).
Rational mass(const GeometricForm& x);

/// Grade-1 form of mass exactly 1.
bool is_point(const GeometricForm& x);

/// Grade-1 form of mass 0 (the zero form counts).
bool is_vector(const GeometricForm& x);

/// Split of a homogeneous form at a point: x = p ∧ omega(x) + omega(p ∧ x).
/// `anchored` is the part attached to p, `residue` the pure k-vector part.
struct Reduction {
    GeometricForm anchored;
    GeometricForm residue;
};

/// Fundamental reduction of a homogeneous form x (grade 1..n+1) at a
/// unit-mass point p. The two parts always sum back to x exactly.
Reduction reduce_at(const GeometricForm& x, const GeometricForm& p);

enum class FormClass {
    Zero,
    WeightedPoint,
    Vector,
    Bipoint,
    Bivector,
    GeneralDegree2,
    Tripoint,
    Trivector,
    QuadriPoint,
    // Reported instead of the named degree-2/3/4 classes when n != 3.
    PureKVector,
    General,
};

const char* to_string(FormClass kind);

/// classify() result. For n = 3 `kind` carries the named classes; for other
/// dimensions it degrades to PureKVector/General and the two test flags
/// carry the full information.
struct Classification {
    FormClass kind;
    int grade;             // 0 for the zero form
    bool omega_null;       // omega(x) == 0
    bool self_wedge_null;  // x ∧ x == 0
};

/// Classifies a homogeneous form of grade 1..n+1 (or the zero form).
Classification classify(const GeometricForm& x);

}  // namespace affex
