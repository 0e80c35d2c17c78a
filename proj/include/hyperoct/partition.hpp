#pragma once

#include "hyperoct/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace hyperoct {

/// Integer partition; parts are positive and weakly decreasing.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; throws std::invalid_argument on a non-positive part.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    /// ‖ρ‖ = |ρ| − ℓ(ρ).
    int norm() const { return size() - length(); }
    int multiplicity(int j) const;
    bool empty() const { return parts_.empty(); }

    /// c(□) = column − row, boxes listed row by row.
    std::vector<int> contents() const;
    Integer hook_product() const;
    Partition conjugate() const;
    Partition without_ones() const;
    /// Appends parts equal to 1 until the size is `total`.
    Partition padded_to(int total) const;

    /// All partitions of n, largest first in lexicographic order ((n), (n−1,1), …, (1^n)).
    static std::vector<Partition> all(int n);

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

}  // namespace hyperoct
