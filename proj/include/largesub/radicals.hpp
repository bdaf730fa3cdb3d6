#ifndef LARGESUB_RADICALS_HPP
#define LARGESUB_RADICALS_HPP

#include <string>
#include <vector>

#include "largesub/classes.hpp"
#include "largesub/group.hpp"

namespace largesub {

/// A characteristic subgroup together with a note on how it was obtained.
struct RadicalResult {
  Subgroup subgroup;
  std::string witness;
};

// Every radical below is a filter-and-join over normal_subgroups(g).

RadicalResult o_pi(const FiniteGroup& g, const PrimeSet& pi);
/// Preimage of O_pi(G / O_pi'(G)).
RadicalResult o_pi_prime_pi(const FiniteGroup& g, const PrimeSet& pi);
RadicalResult fitting(const FiniteGroup& g);
/// Subnormal quasi-simple subgroups, in canonical order.
std::vector<Subgroup> components(const FiniteGroup& g);
RadicalResult layer(const FiniteGroup& g);
RadicalResult generalized_fitting(const FiniteGroup& g);
RadicalResult soluble_radical(const FiniteGroup& g);

/// Normal subgroups N with x(N), maximal under inclusion.
std::vector<Subgroup> maximal_normal_x_subgroups(const FiniteGroup& g,
                                                 const ClassPredicate& x);

/// The unique maximal normal X-subgroup. Requires the fitting_class flag
/// (ClosureNotDeclared) and throws NotAFittingClassWitness if two maximal
/// normal X-subgroups exist.
RadicalResult x_radical(const FiniteGroup& g, const ClassPredicate& x);

/// Smallest normal N with G/N in X. Requires quotient and direct-product
/// closure flags; throws NotAFormationWitness if the intersection of the
/// candidate kernels does not itself have an X quotient.
Subgroup x_residual(const FiniteGroup& g, const ClassPredicate& x);
Subgroup supersoluble_residual(const FiniteGroup& g);

}  // namespace largesub

#endif  // LARGESUB_RADICALS_HPP
