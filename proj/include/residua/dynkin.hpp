#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "residua/rootsys.hpp"

namespace residua {

/// A partition with strictly decreasing positive parts.
using Partition = std::vector<long long>;

/**
 * A residual segment: the weakly decreasing non-negative half of the
 * symmetric coordinate string of a residual point, with its ambient kind.
 * Type B and D entries are integers, type C entries lie in 1/2 + Z, type A
 * entries form one strictly decreasing run of step 1.
 */
struct ResidualSegment {
    Kind kind;
    std::vector<HalfInt> values; // weakly decreasing, >= 0 (A: the full run, may dip < 0)

    std::size_t rank() const;
    bool operator==(const ResidualSegment&) const = default;
};

/// Weighted Dynkin diagram: one label in {0,2} per simple root.
struct WeightedDynkinDiagram {
    Kind kind;
    std::vector<int> labels;

    bool operator==(const WeightedDynkinDiagram&) const = default;
};

/// True when p indexes a distinguished nilpotent orbit of the given system:
/// A: a single part rank+1; B: distinct odd parts summing to 2*rank+1;
/// C: distinct even parts summing to 2*rank; D: an even number of distinct
/// odd parts summing to 2*rank.
bool is_distinguished_partition(const RootSystemSpec& spec, const Partition& p);

/// All distinguished partitions, sorted decreasing-lexicographically.
std::vector<Partition> distinguished_partitions(const RootSystemSpec& spec);

/// Builds the residual segment of a distinguished partition: expand each
/// part 2a+1 into the string a, a-1, ..., -a (type C: part 2k into
/// (2k-1)/2, ..., -(2k-1)/2), merge decreasingly, keep the first rank
/// entries. Throws std::invalid_argument if p is not distinguished.
ResidualSegment partition_to_segment(const RootSystemSpec& spec, const Partition& p);

/// Checks the defining multiplicity relations (via the jumps bijection).
bool is_valid_residual_segment(const ResidualSegment& s);

/// Residual segment -> weighted Dynkin diagram. Throws std::domain_error if
/// a label leaves {0,2} ("no even diagram").
WeightedDynkinDiagram segment_to_wdd(const ResidualSegment& s);

/// Inverse of segment_to_wdd; throws std::domain_error if the labels do not
/// come from a residual segment.
ResidualSegment wdd_to_segment(const WeightedDynkinDiagram& d);

std::string partition_str(const Partition& p);
Partition partition_parse(const std::string& s);

/// Compact digit string when integer-valued with max entry <= 9, else
/// comma-separated; parse accepts both.
std::string segment_str(const ResidualSegment& s);
ResidualSegment segment_parse(Kind kind, const std::string& s);

} // namespace residua
