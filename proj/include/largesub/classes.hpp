#ifndef LARGESUB_CLASSES_HPP
#define LARGESUB_CLASSES_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "largesub/group.hpp"

namespace largesub {

/// A finite set of primes, sorted and without repeats.
using PrimeSet = std::vector<std::size_t>;

/// Parses "2,3" (or "{2,3}"); throws ParseError on junk, non-primes or an
/// empty set.
PrimeSet parse_prime_set(std::string_view text);
std::string format_prime_set(const PrimeSet& pi);

/// The primes dividing n that are not in pi.
PrimeSet complement_primes(const PrimeSet& pi, std::size_t n);

/// Closure properties a class declares. These are metadata: property tests
/// spot-check them, nothing here proves them.
struct ClosureFlags {
  bool normal_subgroups = false;
  bool quotients = false;
  bool direct_products = false;
  bool central_extensions = false;
  bool solubly_saturated_formation = false;
  bool fitting_class = false;
};

struct ClassPredicate {
  std::string name;
  std::function<bool(const FiniteGroup&)> member;
  ClosureFlags closed_under;

  bool operator()(const FiniteGroup& g) const { return member(g); }
};

bool is_abelian(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
bool is_soluble(const FiniteGroup& g);
bool is_simple(const FiniteGroup& g);

/// Class 0 for the trivial group, 1 for nontrivial abelian groups;
/// nullopt when the lower central series stops above 1.
std::optional<std::size_t> nilpotency_class(const FiniteGroup& g);
/// nullopt when G is not soluble.
std::optional<std::size_t> derived_length(const FiniteGroup& g);

bool is_supersoluble(const FiniteGroup& g);
bool is_pi_group(const FiniteGroup& g, const PrimeSet& pi);
bool is_quasisimple(const FiniteGroup& g);
bool is_quasinilpotent(const FiniteGroup& g);
bool is_pi_separable(const FiniteGroup& g, const PrimeSet& pi);
bool has_normal_hall_pi_prime(const FiniteGroup& g, const PrimeSet& pi);

/// Membership in the extension closure of X, decided on composition
/// factors. Throws ClosureNotDeclared unless X is normal-subgroup closed.
bool in_extension_closure(const ClassPredicate& x, const FiniteGroup& g);

/// Soluble groups whose supersoluble residual is trivial or minimal
/// normal. Throws NotSoluble otherwise.
bool is_in_X0(const FiniteGroup& g);

/// Keys: abelian, nilpotent, nilpotent_class:c, soluble, soluble_derived:d,
/// supersoluble, quasinilpotent, normal_hall_pi_prime:P, pi_separable:P,
/// where P is a comma-separated prime list. The `name(arg)` spelling is
/// accepted too. Throws UnknownClass.
ClassPredicate builtin_class(std::string_view key);

}  // namespace largesub

#endif  // LARGESUB_CLASSES_HPP
