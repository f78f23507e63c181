#include "affex/mechanics.hpp"

#include "affex/error.hpp"

namespace affex {

AppliedForce::AppliedForce(GeometricForm application, GeometricForm force)
    : application_(std::move(application)), force_(std::move(force)) {
    if (!(application_.frame() == force_.frame()))
        throw FrameMismatch("application point and force frames differ");
    if (!is_point(application_))
        throw NotAPoint("application must be a unit-mass point");
    if (!is_vector(force_)) throw NotAPoint("force must be a vector (mass 0)");
}

ForceSystem::ForceSystem(Frame frame, std::vector<AppliedForce> forces)
    : frame_(std::move(frame)), forces_(std::move(forces)) {
    for (const auto& f : forces_)
        if (!(f.application().frame() == frame_))
            throw FrameMismatch("force frame differs from the system frame");
}

GeometricForm system_form(const ForceSystem& s) {
    GeometricForm out(s.frame());
    for (const auto& f : s.forces())
        out = out + wedge(f.application(), f.force());
    return out;
}

GeometricForm resultant(const ForceSystem& s) {
    return omega(system_form(s));
}

Rational moment_ratio(const ForceSystem& s, const GeometricForm& a,
                      const GeometricForm& b) {
    if (!is_point(a) || !is_point(b))
        throw NotAPoint("axis endpoints must be unit-mass points");
    if (equals(a, b)) throw DegenerateAxis("axis endpoints coincide");
    return top_coefficient(wedge(system_form(s), wedge(a, b)));
}

bool equivalent(const ForceSystem& s1, const ForceSystem& s2) {
    return equals(system_form(s1), system_form(s2));
}

PoinsotReduction reduce_poinsot(const ForceSystem& s, const GeometricForm& p) {
    if (!is_point(p)) throw NotAPoint("reduction point must have mass 1");
    const GeometricForm form = system_form(s);
    return {p, omega(form), omega(wedge(p, form))};
}

Rational scalar_invariant(const ForceSystem& s) {
    if (s.frame().dimension() != 3)
        throw UnsupportedDimension("scalar invariant is defined for n = 3");
    const GeometricForm form = system_form(s);
    return top_coefficient(wedge(form, form));
}

const char* to_string(SystemClass kind) {
    switch (kind) {
        case SystemClass::Null: return "Null";
        case SystemClass::SingleForce: return "SingleForce";
        case SystemClass::Couple: return "Couple";
        case SystemClass::Wrench: return "Wrench";
    }
    return "?";
}

SystemClass classify_system(const ForceSystem& s) {
    if (s.frame().dimension() != 3)
        throw UnsupportedDimension("system classification is defined for n = 3");
    const GeometricForm form = system_form(s);
    if (form.is_zero()) return SystemClass::Null;
    if (omega(form).is_zero()) return SystemClass::Couple;
    if (wedge(form, form).is_zero()) return SystemClass::SingleForce;
    return SystemClass::Wrench;
}

std::array<Rational, 6> edge_decomposition(const ForceSystem& s,
                                           const SimplexBasis& basis) {
    if (s.frame().dimension() != 3)
        throw UnsupportedDimension("edge decomposition is defined for n = 3");
    const GeometricForm form = system_form(s);
    if (form.is_zero()) return {};
    const std::vector<Rational> c = coords(form, basis);
    return {c[0], c[1], c[2], c[3], c[4], c[5]};
}

}  // namespace affex
