#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "residua/halfint.hpp"

namespace residua {

/// The four classical families.
enum class Kind { A, B, C, D };

char kind_letter(Kind k);
Kind kind_from_letter(char c);

/**
 * A classical root system of a fixed rank, in the usual orthonormal
 * coordinates: type A_n lives in n+1 coordinates (inside the sum-zero
 * hyperplane), types B_n/C_n/D_n in n coordinates. Rank must be >= 1,
 * and >= 2 for type D.
 */
struct RootSystemSpec {
    Kind kind;
    std::size_t rank;

    RootSystemSpec(Kind k, std::size_t r);

    /// Number of coordinates vectors of this system carry.
    std::size_t dim() const { return kind == Kind::A ? rank + 1 : rank; }
};

/// A root or weight vector in coordinates; entries are exact half-integers.
using Vec = std::vector<HalfInt>;

/// A point of the parameter space (a real infinitesimal character), same storage.
using Parameter = Vec;

/// Simple roots in Bourbaki order: e_i - e_{i+1}, then the kind-specific last root.
std::vector<Vec> simple_roots(const RootSystemSpec& spec);

/// All positive roots; deterministic order (simple-root family sweep).
std::vector<Vec> positive_roots(const RootSystemSpec& spec);

/// Exact scalar product; defined whenever lengths agree.
HalfInt dot2(const Vec& a, const Vec& b); // returns 2*<a,b>, always a HalfInt's worth

/// Pairing <lambda, alpha^vee> = 2 <lambda,alpha> / <alpha,alpha>, exact.
/// Throws std::domain_error if the value leaves (1/2)Z (cannot happen for
/// classical roots and HalfInt lambda).
HalfInt pairing(const Vec& lambda, const Vec& alpha);

/// True when pairing(lambda, alpha) >= 0 for every simple root.
bool is_dominant(const RootSystemSpec& spec, const Parameter& lambda);

/**
 * An element of the relevant Weyl group, acting as a signed permutation:
 * (w.lambda)[i] = sign[i] * lambda[perm_inv[i]]. Type A elements carry no
 * sign flips; type D elements must flip an even number of signs unless the
 * vector they act on has a zero coordinate.
 */
struct SignedPermutation {
    std::vector<std::size_t> perm_inv; // source index for each target slot
    std::vector<int> sign;             // +1 / -1 per target slot

    static SignedPermutation identity(std::size_t n);
    std::size_t size() const { return perm_inv.size(); }
    int flips() const;
};

/// Applies w to lambda, validating w against the spec's Weyl group:
/// throws std::invalid_argument for sign flips in type A, and for an odd
/// number of flips in type D when lambda has no zero coordinate.
Parameter weyl_apply(const RootSystemSpec& spec, const SignedPermutation& w,
                     const Parameter& lambda);

/// Adjacency of simple roots i, j (0-based) in the Dynkin graph.
bool dynkin_adjacent(const RootSystemSpec& spec, std::size_t i, std::size_t j);

/// Equality of type-A parameters modulo a constant shift of all coordinates;
/// plain equality for the other kinds.
bool parameter_equivalent(const RootSystemSpec& spec, const Parameter& a,
                          const Parameter& b);

std::string vec_str(const Vec& v);

} // namespace residua
