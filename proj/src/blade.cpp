#include "affex/blade.hpp"

#include <algorithm>
#include <bit>

#include "affex/error.hpp"

namespace affex {

int grade(Blade b) {
    return std::popcount(b);
}

std::vector<int> blade_indices(Blade b) {
    std::vector<int> out;
    for (int i = 0; b != 0; ++i, b >>= 1)
        if (b & 1u) out.push_back(i);
    return out;
}

Blade blade_from_indices(std::span<const int> indices, int dimension) {
    Blade b = 0;
    int previous = -1;
    for (int i : indices) {
        if (i <= previous) throw GradeError("blade indices must be strictly ascending");
        if (i < 0 || i > dimension) throw GradeError("blade index out of range");
        b |= unit_blade(i);
        previous = i;
    }
    return b;
}

int merge_sign(Blade a, Blade b) {
    if (a & b) return 0;
    // Inversions between the two ascending lists: pairs (i in a, j in b)
    // with i > j.
    int inversions = 0;
    for (Blade t = a >> 1; t != 0; t >>= 1) inversions += std::popcount(t & b);
    return (inversions & 1) ? -1 : 1;
}

bool blade_less(Blade a, Blade b) {
    const int ga = std::popcount(a);
    const int gb = std::popcount(b);
    if (ga != gb) return ga < gb;
    if (a == b) return false;
    // Equal grade: the blade holding the lowest index at which the two
    // differ comes first in lexicographic list order.
    const Blade diff = a ^ b;
    const Blade lowest = diff & (~diff + 1u);
    return (a & lowest) != 0;
}

std::vector<Blade> blades_of_grade(int dimension, int k) {
    if (dimension < 1 || dimension > kMaxDimension)
        throw Error("dimension out of range");
    if (k < 0 || k > dimension + 1) throw GradeError("grade out of range");

    std::vector<Blade> out;
    const Blade limit = Blade{1} << (dimension + 1);
    for (Blade b = 0; b < limit; ++b)
        if (std::popcount(b) == k) out.push_back(b);
    std::sort(out.begin(), out.end(), blade_less);
    return out;
}

}  // namespace affex
