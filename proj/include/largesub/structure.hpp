#ifndef LARGESUB_STRUCTURE_HPP
#define LARGESUB_STRUCTURE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "largesub/group.hpp"

namespace largesub {

/// Incrementally grows a subgroup of `g` from added elements. Keeps only
/// the generators that actually enlarged the subgroup.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const FiniteGroup& g);
  SubgroupBuilder(const FiniteGroup& g, const Subgroup& start);

  /// Adjoins x; returns true if the subgroup grew.
  bool add(Element x);
  void add_all(std::span<const Element> xs) {
    for (Element x : xs) add(x);
  }
  bool contains(Element x) const noexcept { return set_.contains(x); }
  std::size_t order() const noexcept { return set_.size(); }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  Subgroup build() const { return Subgroup::trusted(set_); }

 private:
  const FiniteGroup* g_;
  ElementSet set_;
  std::vector<Element> elements_;
  std::vector<Element> gens_;
};

Subgroup closure(const FiniteGroup& g, std::span<const Element> seed);
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// A small generating set of s.
std::vector<Element> subgroup_generators(const FiniteGroup& g, const Subgroup& s);

bool is_normal(const FiniteGroup& g, const Subgroup& s);
/// s normal in the subgroup k (s <= k assumed).
bool is_normal_in(const FiniteGroup& g, const Subgroup& s, const Subgroup& k);

Subgroup centralizer(const FiniteGroup& g, std::span<const Element> s);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup center(const FiniteGroup& g);

/// [A, B], generated by all a^-1 b^-1 a b.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a,
                             const Subgroup& b);

enum class SeriesKind { Derived, LowerCentral, Composition, Chief };
std::string_view to_string(SeriesKind kind);

struct FactorTag {
  bool simple = false;
  bool prime_order = false;
  bool abelian = false;
};

/// A chain of subgroups. Derived, lower central and composition series are
/// listed from the top down (chain.front() is the starting group); chief
/// series are listed from the trivial subgroup up. factor_orders[i] is the
/// index between chain[i] and chain[i+1].
struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<Subgroup> chain;
  std::vector<std::size_t> factor_orders;
  std::vector<FactorTag> factor_tags;

  /// Number of strict steps in the chain.
  std::size_t length() const noexcept { return factor_orders.size(); }
  /// For derived / lower central series: whether the chain ends at 1.
  bool reaches_trivial() const noexcept {
    return !chain.empty() && chain.back().is_trivial();
  }
};

SeriesReport derived_series(const FiniteGroup& g);
SeriesReport derived_series(const FiniteGroup& g, const Subgroup& c);
SeriesReport lower_central_series(const FiniteGroup& g);
SeriesReport lower_central_series(const FiniteGroup& g, const Subgroup& h);

/// Orbits under conjugation, ordered by smallest member; the identity's
/// class comes first. Cached per group.
const std::vector<std::vector<Element>>& conjugacy_classes(const FiniteGroup& g);

Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> seed);

/// Every normal subgroup, in canonical order (trivial first, G last).
/// Cached per group.
const std::vector<Subgroup>& normal_subgroups(const FiniteGroup& g);

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g);
Subgroup socle(const FiniteGroup& g);
std::vector<Subgroup> maximal_normal_subgroups(const FiniteGroup& g);

/// Default choice: the largest candidate, then the lexicographically least.
/// With a seed the candidate is drawn at random instead, which is how the
/// Jordan-Holder property tests vary the chain.
SeriesReport composition_series(const FiniteGroup& g,
                                std::optional<std::uint64_t> seed = std::nullopt);
/// Default choice: the smallest candidate, then the lexicographically least.
SeriesReport chief_series(const FiniteGroup& g,
                          std::optional<std::uint64_t> seed = std::nullopt);

/// The composition factors as groups, top first.
std::vector<FiniteGroup> composition_factors(const FiniteGroup& g);

struct SubnormalSubgroup {
  Subgroup subgroup;
  std::size_t parent;  // index of a subgroup it is normal in; self for G
  std::size_t depth;   // 0 for G
};

struct SubnormalOptions {
  std::optional<std::size_t> depth_limit;
  /// When set, only subgroups passing the filter have their normal
  /// subgroups enumerated (all discovered subgroups are still returned).
  std::function<bool(const Subgroup&)> expand;
};

/// Fixpoint of "normal subgroups of collected subgroups" starting from G,
/// in discovery order. Each entry carries a witness chain via `parent`.
std::vector<SubnormalSubgroup> subnormal_subgroups(const FiniteGroup& g,
                                                   const SubnormalOptions& options = {});

/// Witness chain from entry i up to G (entry i first).
std::vector<Subgroup> subnormal_chain(const std::vector<SubnormalSubgroup>& all,
                                      std::size_t i);

/// Intersection of the p-th power subgroups over primes p dividing |A|.
Subgroup frattini_of_abelian(const FiniteGroup& a);

}  // namespace largesub

#endif  // LARGESUB_STRUCTURE_HPP
