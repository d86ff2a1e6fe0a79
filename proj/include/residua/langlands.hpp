#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "residua/segments.hpp"

namespace residua {

/// A multiset of linear segments, kept sorted: weakly decreasing midpoint,
/// ties broken by decreasing length (nested-first).
struct SegmentMultiset {
    std::vector<LinearSegment> segs;

    static SegmentMultiset of(std::vector<LinearSegment> v);
    void normalize();
    bool operator==(const SegmentMultiset&) const = default;
};

/// Two segments are linked when neither contains the other and their union
/// of values is again a segment (the adjacent case a2 = b1 - 1 included).
bool linked(const LinearSegment& s1, const LinearSegment& s2);

/// For linked segments returns {union, intersection}; the intersection is
/// absent when it is empty (adjacent case). Throws std::invalid_argument on
/// unlinked input.
std::pair<LinearSegment, std::optional<LinearSegment>>
union_intersection(const LinearSegment& s1, const LinearSegment& s2);

/// The Langlands parameter: each segment contributes its midpoint (a+b)/2
/// repeated length times; coordinates sorted weakly decreasing. Entries are
/// doubled (a+b) so that even-length segments stay exact.
std::vector<HalfInt> langlands_param(const SegmentMultiset& m);

/// The dominance-style order on parameters of equal length: mu <= pi iff
/// every prefix sum of pi - mu is >= 0. Type A compares modulo a common
/// shift; type D only constrains the first rank-1 prefixes and requires
/// sum_{i<n} d_i >= |d_n|.
bool leq_order(const RootSystemSpec& spec, const Parameter& mu, const Parameter& pi);

/// Replaces linked pairs by their union/intersection until none remain.
/// The result is the unique order-minimum of the reduction graph.
SegmentMultiset minimize(SegmentMultiset m);

/// True when every proper prefix of lambda has strictly positive sum.
bool positive_partial_sums(const Parameter& lambda);

} // namespace residua
