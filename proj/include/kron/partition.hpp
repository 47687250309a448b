#pragma once

#include "kron/ints.hpp"

#include <string>
#include <vector>

namespace kron {

/// Integer partition with weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                  // 1-based, 0 beyond length
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    /// Complement in a rows x width rectangle, reading parts bottom-up.
    /// Requires length() <= rows and parts <= width.
    Partition complement(int rows, int width) const;
    /// Count of parts equal to v.
    int count_parts_equal(int v) const;

    /// Number of standard Young tableaux (hook length formula).
    Int dimension_sn() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;          // "4,2" ; empty partition -> ""
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

/// d-tuple of partitions of a common size, the label of a Kronecker coefficient.
class PartitionTuple {
public:
    PartitionTuple() = default;
    explicit PartitionTuple(std::vector<Partition> entries);

    const std::vector<Partition>& entries() const { return entries_; }
    const Partition& operator[](int i) const { return entries_.at(i); }
    int d() const { return static_cast<int>(entries_.size()); }
    int size() const;                       // common size m
    int max_part() const;
    int max_length() const;

    bool operator==(const PartitionTuple&) const = default;
    auto operator<=>(const PartitionTuple&) const = default;

    std::string to_string() const;          // "4,2;2,2,2;3,2,1"
    static PartitionTuple parse(const std::string& text);

private:
    std::vector<Partition> entries_;
};

/// All partitions of m, parts bounded by max_part, length bounded by max_len.
/// Output in the order produced by first-part-descending enumeration.
std::vector<Partition> partitions_of(int m, int max_part = -1, int max_len = -1);

}  // namespace kron
