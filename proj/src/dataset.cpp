#include "qlc/dataset.hpp"

#include <algorithm>
#include <string>

#include "qlc/error.hpp"

namespace qlc {

void LabeledDataset::add(int label, Vector x) {
    if (label != 1 && label != 2) {
        throw Error(ErrorKind::LabelError, "label " + std::to_string(label) + " is not 1 or 2");
    }
    if (x.size() != n_) {
        throw Error(ErrorKind::DimensionMismatch, "row of dimension " + std::to_string(x.size()) +
                                                      " in a dataset of dimension " +
                                                      std::to_string(n_));
    }
    rows_.push_back(LabeledSample{label, std::move(x)});
}

std::vector<Vector> LabeledDataset::class_samples(int label) const {
    std::vector<Vector> out;
    for (const auto& row : rows_)
        if (row.label == label) out.push_back(row.x);
    return out;
}

std::size_t LabeledDataset::class_count(int label) const {
    return static_cast<std::size_t>(std::count_if(
        rows_.begin(), rows_.end(), [label](const LabeledSample& r) { return r.label == label; }));
}

}  // namespace qlc
