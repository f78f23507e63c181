#include "affex/boundary.hpp"

#include "affex/error.hpp"

namespace affex {

GeometricForm omega(const GeometricForm& x) {
    GeometricForm::Terms out;
    for (const auto& [blade, coeff] : x.terms()) {
        if ((blade & kOriginBlade) == 0) continue;
        // The origin is the leftmost index, so removing it carries sign +1.
        out.emplace(blade ^ kOriginBlade, coeff);
    }
    return {x.frame(), std::move(out)};
}

Rational mass(const GeometricForm& x) {
    return x.coefficient(kOriginBlade);
}

bool is_point(const GeometricForm& x) {
    return x.homogeneous_grade() == 1 && mass(x) == 1;
}

bool is_vector(const GeometricForm& x) {
    if (x.is_zero()) return true;
    return x.homogeneous_grade() == 1 && mass(x) == 0;
}

Reduction reduce_at(const GeometricForm& x, const GeometricForm& p) {
    if (!is_point(p)) throw NotAPoint("reduction point must have mass 1");
    if (!x.is_zero()) {
        const auto k = x.homogeneous_grade();
        if (!k) throw GradeError("reduce_at needs a homogeneous form");
        if (*k < 1 || *k > x.dimension() + 1)
            throw GradeError("reduce_at needs grade between 1 and n+1");
    }
    return {wedge(p, omega(x)), omega(wedge(p, x))};
}

const char* to_string(FormClass kind) {
    switch (kind) {
        case FormClass::Zero: return "Zero";
        case FormClass::WeightedPoint: return "WeightedPoint";
        case FormClass::Vector: return "Vector";
        case FormClass::Bipoint: return "Bipoint";
        case FormClass::Bivector: return "Bivector";
        case FormClass::GeneralDegree2: return "GeneralDegree2";
        case FormClass::Tripoint: return "Tripoint";
        case FormClass::Trivector: return "Trivector";
        case FormClass::QuadriPoint: return "QuadriPoint";
        case FormClass::PureKVector: return "PureKVector";
        case FormClass::General: return "General";
    }
    return "?";
}

Classification classify(const GeometricForm& x) {
    if (x.is_zero()) return {FormClass::Zero, 0, true, true};

    const auto maybe_grade = x.homogeneous_grade();
    if (!maybe_grade) throw GradeError("classify needs a homogeneous form");
    const int k = *maybe_grade;
    const int n = x.dimension();
    if (k < 1 || k > n + 1)
        throw GradeError("classify needs grade between 1 and n+1");

    const bool omega_null = omega(x).is_zero();
    const bool self_wedge_null = wedge(x, x).is_zero();

    FormClass kind;
    if (k == 1) {
        kind = omega_null ? FormClass::Vector : FormClass::WeightedPoint;
    } else if (n != 3) {
        kind = omega_null ? FormClass::PureKVector : FormClass::General;
    } else if (k == 2) {
        if (omega_null)
            kind = FormClass::Bivector;
        else if (self_wedge_null)
            kind = FormClass::Bipoint;
        else
            kind = FormClass::GeneralDegree2;
    } else if (k == 3) {
        kind = omega_null ? FormClass::Trivector : FormClass::Tripoint;
    } else {
        kind = FormClass::QuadriPoint;
    }
    return {kind, k, omega_null, self_wedge_null};
}

}  // namespace affex
