#pragma once

#include <array>
#include <vector>

#include "affex/affine.hpp"

namespace affex {

/// A force vector applied at a point. Construction rejects a non-unit-mass
/// application point and a non-vector force; the algebra then works on the
/// assembled bipoint application ∧ force.
class AppliedForce {
public:
    AppliedForce(GeometricForm application, GeometricForm force);

    const GeometricForm& application() const { return application_; }
    const GeometricForm& force() const { return force_; }

private:
    GeometricForm application_;
    GeometricForm force_;
};

/// Finite list of applied forces over one frame.
class ForceSystem {
public:
    explicit ForceSystem(Frame frame) : frame_(std::move(frame)) {}
    ForceSystem(Frame frame, std::vector<AppliedForce> forces);

    const Frame& frame() const { return frame_; }
    const std::vector<AppliedForce>& forces() const { return forces_; }

private:
    Frame frame_;
    std::vector<AppliedForce> forces_;
};

/// The degree-2 form of the system: sum of application_i ∧ force_i.
GeometricForm system_form(const ForceSystem& s);

/// Sum of the force vectors, computed as omega of the system form.
GeometricForm resultant(const ForceSystem& s);

/// Frame-relative stand-in for the axial moment about the line (a, b): the
/// top coefficient of form ∧ a ∧ b. Throws DegenerateAxis when a = b.
Rational moment_ratio(const ForceSystem& s, const GeometricForm& a,
                      const GeometricForm& b);

/// Mechanical equivalence: the two degree-2 forms coincide.
bool equivalent(const ForceSystem& s1, const ForceSystem& s2);

/// Force-plus-couple reduction at a point: at ∧ resultant + couple equals
/// the system form exactly.
struct PoinsotReduction {
    GeometricForm at;
    GeometricForm resultant;
    GeometricForm couple;
};

PoinsotReduction reduce_poinsot(const ForceSystem& s, const GeometricForm& p);

/// Top coefficient of form ∧ form (n = 3 only). Vanishes exactly when the
/// system reduces to a single force or to a couple.
Rational scalar_invariant(const ForceSystem& s);

enum class SystemClass { Null, SingleForce, Couple, Wrench };

const char* to_string(SystemClass kind);

/// n = 3 only. Null if the form vanishes; Couple if the resultant does;
/// SingleForce if the form wedge-squares to zero; otherwise Wrench.
SystemClass classify_system(const ForceSystem& s);

/// Unique coefficients on the six edge bipoints of a non-degenerate
/// tetrahedron reconstructing the system form (n = 3 only).
std::array<Rational, 6> edge_decomposition(const ForceSystem& s,
                                           const SimplexBasis& basis);

}  // namespace affex
