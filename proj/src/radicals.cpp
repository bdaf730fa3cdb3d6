#include "largesub/radicals.hpp"

#include <algorithm>

#include "largesub/structure.hpp"
#include "numbers.hpp"

namespace largesub {

namespace {

bool order_within(std::size_t n, const PrimeSet& pi) {
  for (std::size_t p : prime_divisors(n))
    if (!std::binary_search(pi.begin(), pi.end(), p)) return false;
  return true;
}

template <typename Pred>
RadicalResult join_of_normals(const FiniteGroup& g, Pred keep, std::string_view what) {
  SubgroupBuilder b(g);
  std::size_t used = 0;
  for (const auto& n : normal_subgroups(g)) {
    if (n.is_trivial() || !keep(n)) continue;
    b.add_all(subgroup_generators(g, n));
    ++used;
  }
  return {b.build(), "join of " + std::to_string(used) + " normal " + std::string(what) +
                         " subgroup(s)"};
}

bool subgroup_is_nilpotent(const FiniteGroup& g, const Subgroup& n) {
  return lower_central_series(g, n).reaches_trivial();
}

bool subgroup_is_soluble(const FiniteGroup& g, const Subgroup& n) {
  return derived_series(g, n).reaches_trivial();
}

std::string describe(const Subgroup& s) { return "order " + std::to_string(s.order()); }

}  // namespace

RadicalResult o_pi(const FiniteGroup& g, const PrimeSet& pi) {
  if (pi.empty()) throw Error(ErrorKind::BadBound, "prime set must be nonempty");
  return join_of_normals(
      g, [&](const Subgroup& n) { return order_within(n.order(), pi); }, "pi");
}

RadicalResult o_pi_prime_pi(const FiniteGroup& g, const PrimeSet& pi) {
  if (pi.empty()) throw Error(ErrorKind::BadBound, "prime set must be nonempty");
  const PrimeSet rest = complement_primes(pi, g.order());
  const Subgroup lower =
      rest.empty() ? Subgroup::trivial(g.order()) : o_pi(g, rest).subgroup;
  const Quotient q = quotient_group(g, lower);
  const Subgroup upper = o_pi(q.group, pi).subgroup;
  ElementSet preimage(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (upper.contains(q.projection[x])) preimage.insert(static_cast<Element>(x));
  return {Subgroup::trusted(std::move(preimage)),
          "preimage of O_pi (" + describe(upper) + ") over O_pi' (" + describe(lower) + ")"};
}

RadicalResult fitting(const FiniteGroup& g) {
  return join_of_normals(
      g, [&](const Subgroup& n) { return subgroup_is_nilpotent(g, n); }, "nilpotent");
}

std::vector<Subgroup> components(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  const Subgroup whole = Subgroup::whole(g.order());
  if (subgroup_is_soluble(g, whole)) return out;
  // A component lies in a subnormal chain of non-soluble subgroups, so the
  // scan only descends through those.
  SubnormalOptions options;
  options.expand = [&g](const Subgroup& k) { return !subgroup_is_soluble(g, k); };
  for (const auto& entry : subnormal_subgroups(g, options)) {
    const Subgroup& k = entry.subgroup;
    if (k.is_trivial()) continue;
    if (commutator_subgroup(g, k, k) != k) continue;  // not perfect
    if (is_quasisimple(subgroup_as_group(g, k).group)) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RadicalResult layer(const FiniteGroup& g) {
  const auto comps = components(g);
  SubgroupBuilder b(g);
  for (const auto& c : comps) b.add_all(subgroup_generators(g, c));
  return {b.build(), "join of " + std::to_string(comps.size()) + " component(s)"};
}

RadicalResult generalized_fitting(const FiniteGroup& g) {
  const auto f = fitting(g).subgroup;
  const auto e = layer(g).subgroup;
  return {join(g, f, e), "F (" + describe(f) + ") joined with E (" + describe(e) + ")"};
}

RadicalResult soluble_radical(const FiniteGroup& g) {
  return join_of_normals(
      g, [&](const Subgroup& n) { return subgroup_is_soluble(g, n); }, "soluble");
}

std::vector<Subgroup> maximal_normal_x_subgroups(const FiniteGroup& g,
                                                 const ClassPredicate& x) {
  std::vector<Subgroup> members;
  for (const auto& n : normal_subgroups(g))
    if (x.member(subgroup_as_group(g, n).group)) members.push_back(n);
  std::vector<Subgroup> out;
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    bool maximal = true;
    for (const auto& m : out) maximal = maximal && !it->is_subgroup_of(m);
    if (maximal) out.push_back(*it);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RadicalResult x_radical(const FiniteGroup& g, const ClassPredicate& x) {
  if (!x.closed_under.fitting_class)
    throw Error(ErrorKind::ClosureNotDeclared,
                "class '" + x.name + "' is not declared a Fitting class");
  const auto maximal = maximal_normal_x_subgroups(g, x);
  if (maximal.size() > 1) {
    const Subgroup j = join(g, maximal[0], maximal[1]);
    throw Error(ErrorKind::NotAFittingClassWitness,
                "normal " + x.name + "-subgroups of orders " +
                    std::to_string(maximal[0].order()) + " and " +
                    std::to_string(maximal[1].order()) + " join to order " +
                    std::to_string(j.order()) + ", which is not in the class");
  }
  return {maximal.front(), "unique maximal normal " + x.name + "-subgroup"};
}

Subgroup x_residual(const FiniteGroup& g, const ClassPredicate& x) {
  if (!x.closed_under.quotients || !x.closed_under.direct_products)
    throw Error(ErrorKind::ClosureNotDeclared,
                "class '" + x.name + "' is not declared a formation");
  std::vector<Subgroup> kernels;
  for (const auto& n : normal_subgroups(g))
    if (x.member(quotient_group(g, n).group)) kernels.push_back(n);
  ElementSet meet = ElementSet::full(g.order());
  for (const auto& k : kernels) meet = meet.intersect(k.set());
  Subgroup residual = Subgroup::trusted(std::move(meet));
  if (!x.member(quotient_group(g, residual).group)) {
    for (std::size_t i = 0; i < kernels.size(); ++i)
      for (std::size_t j = i + 1; j < kernels.size(); ++j) {
        const Subgroup both = intersection(kernels[i], kernels[j]);
        if (!x.member(quotient_group(g, both).group))
          throw Error(ErrorKind::NotAFormationWitness,
                      "kernels of orders " + std::to_string(kernels[i].order()) +
                          " and " + std::to_string(kernels[j].order()) +
                          " have " + x.name + " quotients but their intersection does not");
      }
    throw Error(ErrorKind::NotAFormationWitness,
                "intersection of all " + x.name + " kernels has a non-" + x.name +
                    " quotient");
  }
  return residual;
}

Subgroup supersoluble_residual(const FiniteGroup& g) {
  return x_residual(g, builtin_class("supersoluble"));
}

}  // namespace largesub
