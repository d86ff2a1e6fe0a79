#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "residua/dynkin.hpp"

namespace residua {

/// The linear segment (a, a-1, ..., b); requires a >= b and a - b integral.
struct LinearSegment {
    HalfInt a;
    HalfInt b;

    LinearSegment(HalfInt a_, HalfInt b_);
    std::size_t length() const;
    std::vector<HalfInt> values() const;
    /// Midpoint (a+b)/2 is a half-integer only when the length is odd, so it
    /// is exposed doubled: a+b.
    HalfInt midpoint_twice() const { return a + b; }
    bool operator==(const LinearSegment&) const = default;
};

/// Strictly decreasing jump values of a residual segment (may include 0).
struct JumpsSet {
    Kind kind;
    std::vector<HalfInt> jumps;

    bool operator==(const JumpsSet&) const = default;
};

/**
 * A cuspidal string: an ordered list of linear segments followed by a
 * residual segment of the ambient kind. The flattened coordinate vector is
 * the concatenation of the linear segments' values and the tail's values.
 */
struct CuspidalString {
    std::vector<LinearSegment> linear;
    ResidualSegment tail;

    std::vector<HalfInt> flatten() const;
    std::size_t rank() const;
    bool operator==(const CuspidalString&) const = default;
};

/// Jumps of a valid residual segment: a_i is the largest value whose
/// multiplicity in the full symmetric string is >= i.
JumpsSet jumps_of(const ResidualSegment& s);

/// The Jordan partition {2 a_i + 1 : a_i in jumps}.
Partition jordan_of(const ResidualSegment& s);

/// Rebuilds the residual segment with the given jumps set.
ResidualSegment segment_from_jumps(const JumpsSet& j, std::size_t rank);

/// Short-root evaluation point: 1 for type B, 1/2 for type C (unused for A, D).
HalfInt default_epsilon(Kind k);

/**
 * Exact residual-point test for a parameter lambda (any Weyl chamber):
 * the number of positive-root hyperplanes of value 1 minus twice the number
 * of value 0 must equal the rank. epsilon is the short-root evaluation
 * point; the two-argument form uses default_epsilon.
 */
bool is_residual_point(const RootSystemSpec& spec, const Parameter& lambda,
                       HalfInt epsilon);
bool is_residual_point(const RootSystemSpec& spec, const Parameter& lambda);

/// Extracts the linear segment (a_i, -a_{i+1}) spanned by the consecutive
/// jumps pair (jumps[i], jumps[i+1]) (0-based i), together with the residual
/// segment left behind. Throws std::out_of_range for a bad index.
std::pair<LinearSegment, ResidualSegment> extract_jump_pair(const ResidualSegment& s,
                                                            std::size_t i);

/// Multiset insertion of the absolute values of seg into tail, re-sorted.
ResidualSegment insert_segment(const ResidualSegment& tail, const LinearSegment& seg);

/**
 * Given linear segments whose joint insertion into tail yields the valid
 * residual segment target, returns the index of one segment whose single
 * insertion into tail is already valid (a zero-free segment is preferred;
 * among nested segments the outermost wins). Returns std::nullopt when no
 * single insertion works.
 */
std::optional<std::size_t> find_mergeable(const std::vector<LinearSegment>& segs,
                                          const ResidualSegment& tail,
                                          const ResidualSegment& target);

std::string linear_str(const LinearSegment& s);
std::string jumps_str(const JumpsSet& j);
std::string cuspidal_str(const CuspidalString& c);
CuspidalString cuspidal_parse(const std::string& s);

} // namespace residua
