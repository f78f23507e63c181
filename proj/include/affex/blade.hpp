#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace affex {

/// Product of distinct basis elements, stored as a bitset over the indices
/// {0, ..., n}: bit 0 is the origin unit, bit i (i >= 1) the i-th frame
/// vector. The empty blade is the scalar unit.
using Blade = std::uint32_t;

/// Largest supported frame dimension; a blade over {0..16} fits one word.
inline constexpr int kMaxDimension = 16;

inline constexpr Blade kOriginBlade = 1u;

constexpr Blade unit_blade(int index) { return Blade{1} << index; }

/// Number of factors in the blade.
int grade(Blade b);

/// Ascending index list.
std::vector<int> blade_indices(Blade b);

/// Blade from a strictly ascending index list; validates range for the
/// given dimension.
Blade blade_from_indices(std::span<const int> indices, int dimension);

/// Sign of concatenating the two ascending index lists and sorting the
/// result: 0 when the blades share an index, otherwise the parity of the
/// number of inversions between them.
int merge_sign(Blade a, Blade b);

/// Canonical order: by grade, then lexicographically on the index lists.
bool blade_less(Blade a, Blade b);

struct BladeOrder {
    bool operator()(Blade a, Blade b) const { return blade_less(a, b); }
};

/// All grade-k blades for the given dimension, in canonical order.
std::vector<Blade> blades_of_grade(int dimension, int k);

}  // namespace affex
