#include "affex/form.hpp"

#include <array>
#include <bit>

#include "affex/error.hpp"

namespace affex {

namespace {

void require_same_frame(const GeometricForm& a, const GeometricForm& b) {
    if (!(a.frame() == b.frame()))
        throw FrameMismatch("forms live over frames of different dimension");
}

}  // namespace

GeometricForm::GeometricForm(Frame frame, Terms terms)
    : frame_(std::move(frame)), terms_(std::move(terms)) {
    const Blade top = frame_.top_blade();
    for (auto it = terms_.begin(); it != terms_.end();) {
        if ((it->first & ~top) != 0)
            throw GradeError("blade index exceeds the frame dimension");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Rational GeometricForm::coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GeometricForm::homogeneous_grade() const {
    if (terms_.empty()) return std::nullopt;
    const int k = grade(terms_.begin()->first);
    for (const auto& [blade, coeff] : terms_)
        if (grade(blade) != k) return std::nullopt;
    return k;
}

GeometricForm make_scalar(const Frame& frame, Rational value) {
    GeometricForm::Terms terms;
    if (value != 0) terms.emplace(Blade{0}, std::move(value));
    return {frame, std::move(terms)};
}

GeometricForm make_point(const Frame& frame, std::span<const Rational> coords) {
    if (static_cast<int>(coords.size()) != frame.dimension())
        throw ArityError("point literal needs exactly " +
                         std::to_string(frame.dimension()) + " coordinates");
    GeometricForm::Terms terms;
    terms.emplace(kOriginBlade, Rational(1));
    for (int i = 0; i < frame.dimension(); ++i)
        if (coords[i] != 0) terms.emplace(unit_blade(i + 1), coords[i]);
    return {frame, std::move(terms)};
}

GeometricForm make_vector(const Frame& frame, std::span<const Rational> coords) {
    if (static_cast<int>(coords.size()) != frame.dimension())
        throw ArityError("vector literal needs exactly " +
                         std::to_string(frame.dimension()) + " coordinates");
    GeometricForm::Terms terms;
    for (int i = 0; i < frame.dimension(); ++i)
        if (coords[i] != 0) terms.emplace(unit_blade(i + 1), coords[i]);
    return {frame, std::move(terms)};
}

GeometricForm linear_combine(
    std::span<const std::pair<Rational, GeometricForm>> terms) {
    if (terms.empty()) throw ArityError("linear_combine needs at least one term");

    const Frame& frame = terms.front().second.frame();
    GeometricForm::Terms out;
    for (const auto& [scale, form] : terms) {
        if (!(form.frame() == frame))
            throw FrameMismatch("forms live over frames of different dimension");
        if (scale == 0) continue;
        for (const auto& [blade, coeff] : form.terms()) {
            auto [it, inserted] = out.emplace(blade, scale * coeff);
            if (!inserted) {
                it->second += scale * coeff;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return {frame, std::move(out)};
}

GeometricForm wedge(const GeometricForm& a, const GeometricForm& b) {
    require_same_frame(a, b);
    GeometricForm::Terms out;
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            const int sign = merge_sign(ba, bb);
            if (sign == 0) continue;
            Rational contribution = ca * cb;
            if (sign < 0) contribution = -contribution;
            const Blade merged = ba | bb;
            auto [it, inserted] = out.emplace(merged, contribution);
            if (!inserted) {
                it->second += contribution;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return {a.frame(), std::move(out)};
}

GeometricForm wedge(std::span<const GeometricForm> factors) {
    if (factors.empty()) throw ArityError("wedge needs at least one factor");
    GeometricForm out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = wedge(out, factors[i]);
    return out;
}

GeometricForm grade_part(const GeometricForm& x, int k) {
    if (k < 0 || k > x.dimension() + 1) throw GradeError("grade out of range");
    GeometricForm::Terms out;
    for (const auto& [blade, coeff] : x.terms())
        if (grade(blade) == k) out.emplace(blade, coeff);
    return {x.frame(), std::move(out)};
}

Rational top_coefficient(const GeometricForm& x) {
    return x.coefficient(x.frame().top_blade());
}

bool equals(const GeometricForm& a, const GeometricForm& b) {
    require_same_frame(a, b);
    return a.terms() == b.terms();
}

GeometricForm operator+(const GeometricForm& a, const GeometricForm& b) {
    const std::array<std::pair<Rational, GeometricForm>, 2> terms{
        std::pair{Rational(1), a}, std::pair{Rational(1), b}};
    return linear_combine(terms);
}

GeometricForm operator-(const GeometricForm& a, const GeometricForm& b) {
    const std::array<std::pair<Rational, GeometricForm>, 2> terms{
        std::pair{Rational(1), a}, std::pair{Rational(-1), b}};
    return linear_combine(terms);
}

GeometricForm operator-(const GeometricForm& x) {
    return Rational(-1) * x;
}

GeometricForm operator*(const Rational& scale, const GeometricForm& x) {
    const std::array<std::pair<Rational, GeometricForm>, 1> terms{
        std::pair{scale, x}};
    return linear_combine(terms);
}

}  // namespace affex
