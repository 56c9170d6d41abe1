#pragma once

#include <compare>
#include <string>
#include <vector>

namespace grasscalc {

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// stripped on construction, so (2,1,0) and (2,1) are the same partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "2,1"; "" and "0" denote the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    /// 0-based row; rows past the end have size 0.
    int part(int row) const
    {
        return row < length() ? parts_[static_cast<size_t>(row)] : 0;
    }
    long weight() const;
    bool empty() const { return parts_.empty(); }

    bool fits_box(int rows, int cols) const;
    bool contains(const Partition& mu) const;

    std::string to_string() const; // "2,1"; empty prints as "0"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Comparator giving the basis order used everywhere: decreasing
/// lexicographic on part sequences.
struct PartitionDescLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// Strictly increasing sequence i_1 < ... < i_k of positive integers.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> indices);

    /// Parses "[2,4]".
    static IndexSet parse(const std::string& text);

    const std::vector<int>& indices() const { return indices_; }
    int length() const { return static_cast<int>(indices_.size()); }
    /// |i| = sum(i_j - j); the complex dimension of the Schubert cell.
    long weight() const;

    std::string to_string() const; // "[2,4]"

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b)
    {
        return a.indices_ <=> b.indices_;
    }

private:
    std::vector<int> indices_;
};

} // namespace grasscalc
