#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "residua/rational.hpp"
#include "residua/rootsys.hpp"

namespace residua {

/// Vectors with general exact rational coordinates (projections leave the
/// half-integer lattice).
using RVec = std::vector<Rational>;

/// A standard parabolic subset: the retained simple roots Theta, identified
/// by their 0-based indices. Must be a proper nonempty subset.
struct ThetaSubset {
    RootSystemSpec spec;
    std::vector<std::size_t> theta; // sorted indices of roots kept in Theta

    ThetaSubset(RootSystemSpec s, std::vector<std::size_t> kept);
    std::vector<std::size_t> removed() const;
};

/// A root system found inside the projected set.
struct ProjectedComponent {
    std::string type;  // "A", "B", "C", "D", "BC", "A1"
    std::size_t rank;
    std::vector<RVec> roots; // full component, both signs, deterministic order
};

struct ProjectedSystem {
    std::vector<RVec> sigma;       // nonzero projections of all of Sigma, multiset
    std::vector<RVec> delta;       // projections of the removed simple roots, in order
    std::vector<ProjectedComponent> components;
};

/// Orthogonal projection of v onto the complement of span(Theta).
RVec project_vector(const ThetaSubset& th, const Vec& v);

/// Projects every root of Sigma; drops zeros for sigma.
ProjectedSystem project_roots(const ThetaSubset& th);

/// True when every projected root is an integral combination of the
/// projected removed simple roots with coefficients all of one sign.
bool unique_same_sign_combinations(const ProjectedSystem& ps);

/// The regularity condition: all coordinate blocks induced by Theta's
/// type-A components (outside the collapsed tail) have equal size. When it
/// holds, the projection contains an irreducible system of full rank
/// |removed|.
bool theta_condition(const ThetaSubset& th);

/// Block sizes read left to right (tail coordinates excluded); the number
/// of components equals the number of size changes plus one.
std::vector<std::size_t> block_sizes(const ThetaSubset& th);

std::string component_str(const ProjectedComponent& c);

} // namespace residua
