#pragma once

#include <cstddef>
#include <vector>

#include "residua/langlands.hpp"
#include "residua/segments.hpp"

namespace residua {

/// Ambient data for Weyl-orbit computations.
struct OrbitContext {
    RootSystemSpec spec;
    HalfInt epsilon;

    explicit OrbitContext(RootSystemSpec s) : spec(s), epsilon(default_epsilon(s.kind)) {}
    OrbitContext(RootSystemSpec s, HalfInt eps) : spec(s), epsilon(eps) {}
};

/// The dominant representative of lambda's Weyl orbit together with a
/// witness w such that weyl_apply(w, lambda) is that representative. For
/// type D the last coordinate is negated when an odd number of sign flips
/// is forced and lambda has no zero coordinate.
struct DominantRep {
    Parameter value;
    SignedPermutation witness;
};

DominantRep dominant_rep(const OrbitContext& ctx, const Parameter& lambda);

bool orbit_equivalent(const OrbitContext& ctx, const Parameter& a, const Parameter& b);

/// The full Weyl orbit of lambda, deduplicated, deterministic order.
/// Guarded: throws std::length_error above rank 8 unless the RESIDUA_MAX_RANK
/// environment variable raises the bound.
std::vector<Parameter> enumerate_orbit(const OrbitContext& ctx, const Parameter& lambda);

/// The number of positive roots beta with <lambda, beta^vee> < 0.
long long c1(const OrbitContext& ctx, const Parameter& lambda);

/// All cuspidal strings (a, b)(tail) in the orbit of the residual segment s
/// whose tail is again a valid residual segment, plus s itself with no
/// linear part. a runs over the jumps of s; deterministic order (a desc,
/// then b desc), deduplicated.
std::vector<CuspidalString> enumerate_L(const OrbitContext& ctx, const ResidualSegment& s);

/// Same search without requiring s to be residual: every splitting of the
/// flattened orbit into one linear segment plus a valid residual tail.
std::vector<CuspidalString> enumerate_splittings(const OrbitContext& ctx,
                                                 const Parameter& lambda);

/// Effective enumeration guard (8 unless RESIDUA_MAX_RANK is set).
std::size_t max_enumeration_rank();

} // namespace residua
