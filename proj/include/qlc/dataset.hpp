#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qlc/linalg.hpp"

namespace qlc {

// Class labels are 1-based: 1 and 2.
struct LabeledSample {
    int label = 1;
    Vector x;

    bool operator==(const LabeledSample&) const = default;
};

// Samples of the pattern vector together with their class. Every row has the
// same dimension and a label in {1, 2}; add() enforces both.
class LabeledDataset {
public:
    LabeledDataset() = default;
    explicit LabeledDataset(std::size_t n) : n_(n) {}

    std::size_t dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    // Throws LabelError or DimensionMismatch.
    void add(int label, Vector x);

    std::span<const LabeledSample> rows() const noexcept { return rows_; }
    const LabeledSample& operator[](std::size_t i) const { return rows_[i]; }

    std::vector<Vector> class_samples(int label) const;
    std::size_t class_count(int label) const;

    bool operator==(const LabeledDataset&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<LabeledSample> rows_;
};

}  // namespace qlc
