#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "residua/orbits.hpp"

namespace residua {

/// Elementary rank-one intertwining moves on a coordinate string.
enum class MoveKind {
    Transpose,        // swap coordinates i, i+1
    SignFlipLast,     // negate the last coordinate (types B, C)
    DReflectLastPair, // (x, y) -> (-y, -x) on the last two coordinates (type D)
};

/// How the rank-one operator attached to a move behaves at the point where
/// it is applied.
enum class MoveStatus {
    Bijective,        // invertible, freely usable
    NonGenericKernel, // non-generic kernel: the move may shrink the module
    Forbidden,        // would need the inverse direction; not allowed
};

struct Move {
    MoveKind kind;
    std::size_t index; // left slot of a transpose; unused otherwise
    MoveStatus status;
};

/// Status of a move at lambda without applying it.
MoveStatus move_status(const OrbitContext& ctx, const Parameter& lambda,
                       MoveKind kind, std::size_t index = 0);

/// Applies the move (regardless of status); validates kind against ctx.
Parameter apply_move(const OrbitContext& ctx, const Parameter& lambda,
                     MoveKind kind, std::size_t index = 0);

struct MovePath {
    bool found = false;
    std::vector<Move> moves;
};

/**
 * Constructs a path of moves from src to dst, each either bijective or with
 * non-generic kernel (never forbidden), following the absorb-and-reinsert
 * procedure: the values to be absorbed leave the right end of the linear
 * run, negatives are sign-flipped at the last slot (type D: reflected
 * against a trailing zero), and each value bubbles back to its sorted
 * place. Requires dst to keep the same leading value of the linear part or
 * to be purely residual; use search=true for a bounded breadth-first
 * fallback on other shapes.
 */
MovePath path_nongeneric(const OrbitContext& ctx, const CuspidalString& src,
                         const CuspidalString& dst, bool search = false);

/// Replays a path, checking statuses; throws std::logic_error on mismatch.
Parameter replay(const OrbitContext& ctx, const Parameter& start,
                 const std::vector<Move>& moves);

/// Outcome of the classification of a parameter against its orbit.
enum class CaseTag {
    DominantResidual,   // 1a: dominant and residual
    ExtremalPair,       // 1b: (a, -a') for consecutive jumps a, a'
    JumpTruncation,     // 1c: a a jump, b > -a'
    OrderMinimum,       // 2a: realizes the order-minimal standard parameter
    MinimumTruncation,  // 2b: same leading value as the minimum, b above its b'
    Unclassified,
};

std::string case_tag_str(CaseTag t);

/// Classifies a cuspidal string (at most one linear segment) per the
/// residual / non-residual case split.
CaseTag classify_case(const OrbitContext& ctx, const CuspidalString& s);

} // namespace residua
