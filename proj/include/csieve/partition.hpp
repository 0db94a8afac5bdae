#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "csieve/errors.hpp"

namespace csieve {

/// Partition shape with conjugate and hook-length access.  Cells are
/// (row, col), 1-based.
class PartitionShape {
public:
    explicit PartitionShape(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
        if (!parts_.empty() && parts_.back() < 0) throw UsageError("partition parts must be nonnegative");
    }

    /// Hook shape (a-k, 1^k); returns empty when a-k <= 0 handling is the
    /// caller's business (a-k >= 1 required here).
    static PartitionShape hook(int arm, int leg) {
        std::vector<int> parts{arm};
        for (int i = 0; i < leg; ++i) parts.push_back(1);
        return PartitionShape(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    int part(int i) const {  // 1-based row; 0 outside
        return (i >= 1 && i <= rows()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }

    PartitionShape conjugate() const {
        std::vector<int> conj;
        if (parts_.empty()) return PartitionShape({});
        conj.resize(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
        return PartitionShape(std::move(conj));
    }

    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= rows(); ++i)
            for (int j = 1; j <= part(i); ++j) out.emplace_back(i, j);
        return out;
    }

    /// h(i,j) = (lambda_i - j) + (lambda'_j - i) + 1
    int hook_length(int i, int j) const {
        PartitionShape conj = conjugate();
        return (part(i) - j) + (conj.part(j) - i) + 1;
    }

    std::map<std::pair<int, int>, int> hook_lengths() const {
        PartitionShape conj = conjugate();
        std::map<std::pair<int, int>, int> out;
        for (auto [i, j] : cells()) out[{i, j}] = (part(i) - j) + (conj.part(j) - i) + 1;
        return out;
    }

    bool operator==(const PartitionShape& o) const { return parts_ == o.parts_; }
    bool operator<(const PartitionShape& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

}  // namespace csieve
