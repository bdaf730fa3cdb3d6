#include "largesub/structure.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "group_cache.hpp"
#include "numbers.hpp"

namespace largesub {

// -- SubgroupBuilder --------------------------------------------------------

SubgroupBuilder::SubgroupBuilder(const FiniteGroup& g)
    : g_(&g), set_(g.order()), elements_{0} {
  set_.insert(0);
}

SubgroupBuilder::SubgroupBuilder(const FiniteGroup& g, const Subgroup& start)
    : SubgroupBuilder(g) {
  add_all(start.elements());
}

bool SubgroupBuilder::add(Element x) {
  if (set_.contains(x)) return false;
  gens_.push_back(x);
  // Old elements are closed under the old generators and only need the new
  // one; every newly found element needs all of them.
  std::vector<std::pair<Element, std::size_t>> pending;
  pending.reserve(elements_.size());
  const std::size_t newest = gens_.size() - 1;
  for (Element e : elements_) pending.emplace_back(e, newest);
  while (!pending.empty()) {
    auto [e, first] = pending.back();
    pending.pop_back();
    for (std::size_t k = first; k < gens_.size(); ++k) {
      const Element y = g_->mul(e, gens_[k]);
      if (set_.insert(y)) {
        elements_.push_back(y);
        pending.emplace_back(y, 0);
      }
    }
  }
  return true;
}

// -- basic subgroup operations ---------------------------------------------

Subgroup closure(const FiniteGroup& g, std::span<const Element> seed) {
  SubgroupBuilder b(g);
  b.add_all(seed);
  return b.build();
}

std::vector<Element> subgroup_generators(const FiniteGroup& g, const Subgroup& s) {
  return SubgroupBuilder(g, s).generators();
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  SubgroupBuilder builder(g);
  builder.add_all(subgroup_generators(g, a));
  builder.add_all(subgroup_generators(g, b));
  return builder.build();
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  return Subgroup::trusted(a.set().intersect(b.set()));
}

bool is_normal_in(const FiniteGroup& g, const Subgroup& s, const Subgroup& k) {
  const auto sg = subgroup_generators(g, s);
  const auto kg = subgroup_generators(g, k);
  for (Element x : sg)
    for (Element y : kg)
      if (!s.contains(g.conj(x, y))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  if (s.parent_order() != g.order()) return false;
  const auto sg = subgroup_generators(g, s);
  for (Element x : sg)
    for (Element y : g.generators())
      if (!s.contains(g.conj(x, y))) return false;
  return true;
}

Subgroup centralizer(const FiniteGroup& g, std::span<const Element> s) {
  SubgroupBuilder b(g);
  b.add_all(s);
  const auto& gens = b.generators();
  ElementSet out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Element>(x);
    bool commutes = true;
    for (std::size_t i = 0; i < gens.size() && commutes; ++i)
      commutes = g.mul(e, gens[i]) == g.mul(gens[i], e);
    if (commutes) out.insert(e);
  }
  return Subgroup::trusted(std::move(out));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  return centralizer(g, subgroup_generators(g, s));
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, g.generators()); }

namespace {

// Normal closure of `seed` in the subgroup generated by `ambient`.
Subgroup normal_closure_within(const FiniteGroup& g, std::span<const Element> ambient,
                               std::span<const Element> seed) {
  SubgroupBuilder b(g);
  b.add_all(seed);
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    const Element h = b.generators()[i];
    for (Element k : ambient) b.add(g.conj(h, k));
  }
  return b.build();
}

}  // namespace

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a,
                             const Subgroup& b) {
  // [A, B] is the normal closure in <A, B> of the commutators of generators.
  const auto ga = subgroup_generators(g, a);
  const auto gb = subgroup_generators(g, b);
  std::vector<Element> seeds;
  for (Element x : ga)
    for (Element y : gb) seeds.push_back(g.commutator(x, y));
  std::vector<Element> ambient = ga;
  ambient.insert(ambient.end(), gb.begin(), gb.end());
  return normal_closure_within(g, ambient, seeds);
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> seed) {
  return normal_closure_within(g, g.generators(), seed);
}

// -- series -----------------------------------------------------------------

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Derived: return "derived";
    case SeriesKind::LowerCentral: return "lower_central";
    case SeriesKind::Composition: return "composition";
    case SeriesKind::Chief: return "chief";
  }
  return "unknown";
}

namespace {

Subgroup map_back(const EmbeddedGroup& emb, std::size_t parent_order,
                  const Subgroup& local) {
  ElementSet s(parent_order);
  local.set().for_each([&](Element x) { s.insert(emb.back_map[x]); });
  return Subgroup::trusted(std::move(s));
}

Subgroup map_into(const EmbeddedGroup& emb, const Subgroup& global) {
  ElementSet s(emb.group.order());
  for (std::size_t i = 0; i < emb.back_map.size(); ++i)
    if (global.contains(emb.back_map[i])) s.insert(static_cast<Element>(i));
  return Subgroup::trusted(std::move(s));
}

FiniteGroup factor_group(const FiniteGroup& g, const Subgroup& upper,
                         const Subgroup& lower) {
  const auto emb = subgroup_as_group(g, upper);
  return quotient_group(emb.group, map_into(emb, lower)).group;
}

bool is_simple_group(const FiniteGroup& g) {
  return g.order() > 1 && normal_subgroups(g).size() == 2;
}

FactorTag tag_factor(const FiniteGroup& g, const Subgroup& upper,
                     const Subgroup& lower) {
  FactorTag t;
  t.prime_order = is_prime(upper.order() / lower.order());
  t.abelian = commutator_subgroup(g, upper, upper).is_subgroup_of(lower);
  t.simple = t.abelian ? t.prime_order : is_simple_group(factor_group(g, upper, lower));
  return t;
}

void finish_descending(const FiniteGroup& g, SeriesReport& r) {
  for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) {
    r.factor_orders.push_back(r.chain[i].order() / r.chain[i + 1].order());
    r.factor_tags.push_back(tag_factor(g, r.chain[i], r.chain[i + 1]));
  }
}

}  // namespace

SeriesReport derived_series(const FiniteGroup& g, const Subgroup& c) {
  SeriesReport r{SeriesKind::Derived, {c}, {}, {}};
  while (true) {
    Subgroup next = commutator_subgroup(g, r.chain.back(), r.chain.back());
    if (next == r.chain.back()) break;
    r.chain.push_back(std::move(next));
  }
  finish_descending(g, r);
  return r;
}

SeriesReport derived_series(const FiniteGroup& g) {
  return derived_series(g, Subgroup::whole(g.order()));
}

SeriesReport lower_central_series(const FiniteGroup& g, const Subgroup& h) {
  SeriesReport r{SeriesKind::LowerCentral, {h}, {}, {}};
  while (true) {
    Subgroup next = commutator_subgroup(g, h, r.chain.back());
    if (next == r.chain.back()) break;
    r.chain.push_back(std::move(next));
  }
  finish_descending(g, r);
  return r;
}

SeriesReport lower_central_series(const FiniteGroup& g) {
  return lower_central_series(g, Subgroup::whole(g.order()));
}

// -- conjugacy and normal subgroups ----------------------------------------

const std::vector<std::vector<Element>>& conjugacy_classes(const FiniteGroup& g) {
  auto& c = g.cache();
  std::call_once(c.classes_once, [&] {
    constexpr std::size_t none = ~std::size_t{0};
    c.class_of.assign(g.order(), none);
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (c.class_of[x] != none) continue;
      const std::size_t id = c.classes.size();
      std::vector<Element> orbit{static_cast<Element>(x)};
      c.class_of[x] = id;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (Element s : g.generators()) {
          const Element y = g.conj(orbit[i], s);
          if (c.class_of[y] == none) {
            c.class_of[y] = id;
            orbit.push_back(y);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      c.classes.push_back(std::move(orbit));
    }
  });
  return c.classes;
}

const std::vector<Subgroup>& normal_subgroups(const FiniteGroup& g) {
  if (g.order() > order_cap())
    throw Error(ErrorKind::OrderCapExceeded,
                "normal subgroup enumeration above the order cap");
  auto& c = g.cache();
  std::call_once(c.normals_once, [&] {
    const auto& classes = conjugacy_classes(g);
    std::vector<Subgroup> found{Subgroup::trivial(g.order())};
    std::vector<std::vector<Element>> gens{{}};
    std::unordered_set<Subgroup, SubgroupHash> seen{found.front()};
    // Every normal subgroup is a union of classes, so adding one class at a
    // time from the trivial subgroup reaches all of them.
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t k = 1; k < classes.size(); ++k) {
        if (found[i].contains(classes[k].front())) continue;
        SubgroupBuilder b(g);
        b.add_all(gens[i]);
        b.add_all(classes[k]);
        Subgroup m = b.build();
        if (seen.insert(m).second) {
          found.push_back(std::move(m));
          gens.push_back(b.generators());
        }
      }
    }
    std::sort(found.begin(), found.end());
    c.normals = std::move(found);
  });
  return c.normals;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  if (g.is_trivial())
    throw Error(ErrorKind::TrivialGroup, "the trivial group has no minimal normal subgroup");
  const auto& all = normal_subgroups(g);
  std::vector<Subgroup> out;
  for (const auto& n : all) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const auto& m : out) minimal = minimal && !m.is_subgroup_of(n);
    // Canonical order lists smaller subgroups first, so any proper
    // nontrivial normal subgroup of n is already in `out` or contains one.
    if (minimal) out.push_back(n);
  }
  return out;
}

Subgroup socle(const FiniteGroup& g) {
  if (g.is_trivial()) return Subgroup::trivial(1);
  SubgroupBuilder b(g);
  for (const auto& m : minimal_normal_subgroups(g)) b.add_all(subgroup_generators(g, m));
  return b.build();
}

std::vector<Subgroup> maximal_normal_subgroups(const FiniteGroup& g) {
  if (g.is_trivial())
    throw Error(ErrorKind::TrivialGroup, "the trivial group has no proper normal subgroup");
  const auto& all = normal_subgroups(g);
  std::vector<Subgroup> out;
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    if (it->is_whole()) continue;
    bool maximal = true;
    for (const auto& m : out) maximal = maximal && !it->is_subgroup_of(m);
    if (maximal) out.push_back(*it);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SeriesReport composition_series(const FiniteGroup& g, std::optional<std::uint64_t> seed) {
  std::mt19937_64 rng(seed.value_or(0));
  SeriesReport r{SeriesKind::Composition, {Subgroup::whole(g.order())}, {}, {}};
  while (!r.chain.back().is_trivial()) {
    const auto emb = subgroup_as_group(g, r.chain.back());
    std::vector<Subgroup> candidates;
    for (const auto& m : maximal_normal_subgroups(emb.group))
      candidates.push_back(map_back(emb, g.order(), m));
    std::size_t pick = 0;
    if (seed) {
      pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
    } else {
      for (std::size_t i = 1; i < candidates.size(); ++i) {
        const auto& a = candidates[i];
        const auto& b = candidates[pick];
        if (a.order() > b.order() || (a.order() == b.order() && a < b)) pick = i;
      }
    }
    r.chain.push_back(candidates[pick]);
  }
  for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) {
    const std::size_t f = r.chain[i].order() / r.chain[i + 1].order();
    r.factor_orders.push_back(f);
    r.factor_tags.push_back({true, is_prime(f), is_prime(f)});
  }
  return r;
}

SeriesReport chief_series(const FiniteGroup& g, std::optional<std::uint64_t> seed) {
  std::mt19937_64 rng(seed.value_or(0));
  const auto& all = normal_subgroups(g);
  SeriesReport r{SeriesKind::Chief, {Subgroup::trivial(g.order())}, {}, {}};
  while (!r.chain.back().is_whole()) {
    const Subgroup& current = r.chain.back();
    std::vector<Subgroup> candidates;
    for (const auto& m : all) {  // ascending canonical order
      if (m == current || !current.is_subgroup_of(m)) continue;
      bool minimal = true;
      for (const auto& c : candidates) minimal = minimal && !c.is_subgroup_of(m);
      if (minimal) candidates.push_back(m);
    }
    std::size_t pick = 0;
    if (seed)
      pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
    r.chain.push_back(candidates[pick]);
  }
  for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) {
    r.factor_orders.push_back(r.chain[i + 1].order() / r.chain[i].order());
    r.factor_tags.push_back(tag_factor(g, r.chain[i + 1], r.chain[i]));
  }
  return r;
}

std::vector<FiniteGroup> composition_factors(const FiniteGroup& g) {
  const auto series = composition_series(g);
  std::vector<FiniteGroup> out;
  for (std::size_t i = 0; i + 1 < series.chain.size(); ++i)
    out.push_back(factor_group(g, series.chain[i], series.chain[i + 1]));
  return out;
}

// -- subnormal subgroups ----------------------------------------------------

std::vector<SubnormalSubgroup> subnormal_subgroups(const FiniteGroup& g,
                                                   const SubnormalOptions& options) {
  if (g.order() > order_cap())
    throw Error(ErrorKind::OrderCapExceeded,
                "subnormal subgroup enumeration above the order cap");
  std::vector<SubnormalSubgroup> all{{Subgroup::whole(g.order()), 0, 0}};
  std::unordered_set<Subgroup, SubgroupHash> seen{all.front().subgroup};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (options.depth_limit && all[i].depth >= *options.depth_limit) continue;
    if (all[i].subgroup.is_trivial()) continue;
    if (options.expand && !options.expand(all[i].subgroup)) continue;
    const auto emb = subgroup_as_group(g, all[i].subgroup);
    for (const auto& n : normal_subgroups(emb.group)) {
      Subgroup mapped = map_back(emb, g.order(), n);
      if (seen.insert(mapped).second)
        all.push_back({std::move(mapped), i, all[i].depth + 1});
    }
  }
  return all;
}

std::vector<Subgroup> subnormal_chain(const std::vector<SubnormalSubgroup>& all,
                                      std::size_t i) {
  std::vector<Subgroup> chain{all[i].subgroup};
  while (all[i].depth > 0) {
    i = all[i].parent;
    chain.push_back(all[i].subgroup);
  }
  return chain;
}

Subgroup frattini_of_abelian(const FiniteGroup& a) {
  const auto& gens = a.generators();
  for (Element x : gens)
    for (Element y : gens)
      if (a.mul(x, y) != a.mul(y, x))
        throw Error(ErrorKind::NotAbelian, "frattini_of_abelian requires an abelian group");
  ElementSet result = ElementSet::full(a.order());
  for (std::size_t p : prime_divisors(a.order())) {
    ElementSet powers(a.order());
    for (std::size_t x = 0; x < a.order(); ++x)
      powers.insert(a.power(static_cast<Element>(x), p));
    result = result.intersect(powers);
  }
  return Subgroup::trusted(std::move(result));
}

}  // namespace largesub
