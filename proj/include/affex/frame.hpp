#pragma once

#include <string>
#include <utility>
#include <vector>

#include "affex/blade.hpp"
#include "affex/error.hpp"

namespace affex {

/// An n-dimensional frame: a distinguished origin and n independent basis
/// vectors. Fixes the volume normalization — the simplex
/// (O, O+v1, ..., O+vn) has affine volume 1. Labels are cosmetic and do not
/// take part in equality.
class Frame {
public:
    explicit Frame(int dimension) : Frame(dimension, {}) {}

    Frame(int dimension, std::vector<std::string> labels)
        : n_(dimension), labels_(std::move(labels)) {
        if (n_ < 1 || n_ > kMaxDimension)
            throw Error("frame dimension must be between 1 and " +
                        std::to_string(kMaxDimension));
    }

    int dimension() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Blade of the full product O ∧ v1 ∧ ... ∧ vn.
    Blade top_blade() const { return (Blade{1} << (n_ + 1)) - 1; }

    friend bool operator==(const Frame& a, const Frame& b) { return a.n_ == b.n_; }

private:
    int n_;
    std::vector<std::string> labels_;
};

}  // namespace affex
