#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "largesub/catalog.hpp"
#include "largesub/classes.hpp"
#include "largesub/structure.hpp"
#include "oracle.hpp"

using namespace largesub;
using fixtures::by_label;

namespace {

std::multiset<std::size_t> as_multiset(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

std::set<oracle::Set> element_sets(const std::vector<Subgroup>& subs) {
  std::set<oracle::Set> out;
  for (const auto& s : subs) out.insert(s.elements());
  return out;
}

}  // namespace

TEST_CASE("closure") {
  const auto a4 = alternating_group(4);
  CHECK(closure(a4, std::vector<Element>{}).is_trivial());
  CHECK(closure(a4, std::vector<Element>{by_label(a4, "[1 2 0 3]")}).order() == 3);
  const std::vector<Element> two{by_label(a4, "[1 0 3 2]"), by_label(a4, "[2 3 0 1]")};
  CHECK(closure(a4, two).order() == 4);
  for (const auto& g : fixtures::small_groups())
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); y += 3) {
        const std::vector<Element> seed{x, y};
        CHECK(closure(g, seed).elements() == oracle::closure(g, {x, y}));
      }
}

TEST_CASE("SubgroupBuilder keeps only effective generators") {
  const auto s4 = symmetric_group(4);
  SubgroupBuilder b(s4);
  for (Element x = 0; x < s4.order(); ++x) b.add(x);
  CHECK(b.order() == 24);
  CHECK(b.generators().size() <= 4);
  CHECK(b.build().is_whole());
}

TEST_CASE("centralizers and centres") {
  const auto sl = special_linear_2_3();
  const auto a4 = alternating_group(4);
  const auto v4 = closure(a4, std::vector<Element>{by_label(a4, "[1 0 3 2]"), by_label(a4, "[2 3 0 1]")});
  CHECK(centralizer(a4, std::vector<Element>{0}).is_whole());
  CHECK(centralizer(sl, center(sl)).order() == 24);
  CHECK(centralizer(a4, v4) == v4);
  CHECK(center(sl).order() == 2);
  CHECK(center(a4).is_trivial());
  CHECK(center(cyclic_group(6)).is_whole());
  for (const auto& g : fixtures::corpus()) {
    if (g.order() > 150) continue;
    CAPTURE(g.name());
    CHECK(center(g).elements() == oracle::center(g));
    for (const auto& n : normal_subgroups(g)) {
      const auto c = centralizer(g, n);
      CHECK(c.elements() == oracle::centralizer(g, n.elements()));
      CHECK(center(g).is_subgroup_of(c));
      CHECK(is_normal(g, c));
      // C_G(H) meet H is the centre of H.
      const auto inner = intersection(c, n);
      const auto embedded = subgroup_as_group(g, n);
      CHECK(inner.order() == oracle::center(embedded.group).size());
      if (oracle::abelian(g, n.elements())) CHECK(n.is_subgroup_of(c));
    }
  }
}

TEST_CASE("commutator subgroups") {
  const auto a4 = alternating_group(4);
  const auto q8 = quaternion_group(8);
  const auto all = Subgroup::whole(12);
  CHECK(commutator_subgroup(a4, all, Subgroup::trivial(12)).is_trivial());
  CHECK(commutator_subgroup(a4, all, all).order() == 4);
  CHECK(commutator_subgroup(q8, Subgroup::whole(8), Subgroup::whole(8)) == center(q8));
  for (const auto& g : fixtures::small_groups(60)) {
    CAPTURE(g.name());
    const auto& normals = normal_subgroups(g);
    for (const auto& a : normals)
      for (const auto& b : normals) {
        const auto c = commutator_subgroup(g, a, b);
        CHECK(c.elements() == oracle::commutator(g, a.elements(), b.elements()));
        CHECK(is_normal(g, c));
      }
  }
  // Non-normal arguments: the closure of the commutators, not its normal closure.
  const auto s4 = symmetric_group(4);
  const auto t = closure(s4, std::vector<Element>{by_label(s4, "[1 0 2 3]")});
  const auto u = closure(s4, std::vector<Element>{by_label(s4, "[0 2 1 3]")});
  CHECK(commutator_subgroup(s4, t, u).elements() == oracle::commutator(s4, t.elements(), u.elements()));
}

TEST_CASE("derived and lower central series") {
  const auto s4 = symmetric_group(4);
  const auto d = derived_series(s4);
  std::vector<std::size_t> orders;
  for (const auto& s : d.chain) orders.push_back(s.order());
  CHECK(orders == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(d.length() == 3);
  CHECK(d.reaches_trivial());
  CHECK(d.kind == SeriesKind::Derived);

  const auto ab = derived_series(cyclic_group(5));
  CHECK(ab.length() == 1);
  CHECK(ab.reaches_trivial());

  const auto a5 = derived_series(alternating_group(5));
  CHECK(a5.chain.size() == 1);
  CHECK_FALSE(a5.reaches_trivial());

  CHECK(lower_central_series(cyclic_group(4)).length() == 1);
  CHECK(lower_central_series(trivial_group()).length() == 0);
  const auto q = lower_central_series(quaternion_group(8));
  CHECK(q.length() == 2);
  CHECK(q.reaches_trivial());
  const auto s3 = lower_central_series(symmetric_group(3));
  CHECK_FALSE(s3.reaches_trivial());
  CHECK(s3.chain.back().order() == 3);

  for (const auto& g : fixtures::corpus()) {
    if (g.order() > 200) continue;
    CAPTURE(g.name());
    const auto series = derived_series(g);
    const auto chain = oracle::derived_chain(g, oracle::everything(g));
    REQUIRE(series.chain.size() == chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) CHECK(series.chain[i].elements() == chain[i]);
    std::size_t product = 1;
    for (auto f : series.factor_orders) product *= f;
    CHECK(product == g.order() / series.chain.back().order());
  }

  SUBCASE("series of a subgroup") {
    const auto a4 = alternating_group(4);
    const auto v = closure(a4, std::vector<Element>{by_label(a4, "[1 0 3 2]"), by_label(a4, "[2 3 0 1]")});
    CHECK(derived_series(a4, v).length() == 1);
    CHECK(lower_central_series(a4, v).length() == 1);
  }
}

TEST_CASE("conjugacy classes") {
  for (std::size_t n : {1, 4, 6}) {
    const auto g = cyclic_group(n);
    for (const auto& c : conjugacy_classes(g)) CHECK(c.size() == 1);
  }
  auto sizes = [](const FiniteGroup& g) {
    std::multiset<std::size_t> s;
    for (const auto& c : conjugacy_classes(g)) s.insert(c.size());
    return s;
  };
  CHECK(sizes(symmetric_group(3)) == std::multiset<std::size_t>{1, 2, 3});
  CHECK(sizes(alternating_group(4)) == std::multiset<std::size_t>{1, 3, 4, 4});
  for (const auto& g : fixtures::corpus()) {
    CAPTURE(g.name());
    const auto& classes = conjugacy_classes(g);
    CHECK(classes.front() == std::vector<Element>{0});
    std::set<oracle::Set> mine(classes.begin(), classes.end());
    const auto theirs = oracle::conjugacy_classes(g);
    CHECK(mine == std::set<oracle::Set>(theirs.begin(), theirs.end()));
  }
}

TEST_CASE("normal closure") {
  const auto s4 = symmetric_group(4);
  const auto a4 = alternating_group(4);
  CHECK(normal_closure(s4, std::vector<Element>{}).is_trivial());
  CHECK(normal_closure(s4, std::vector<Element>{by_label(s4, "[1 2 0 3]")}).order() == 12);
  CHECK(normal_closure(a4, std::vector<Element>{by_label(a4, "[1 0 3 2]")}).order() == 4);
  for (const auto& g : fixtures::small_groups(60))
    for (Element x = 0; x < g.order(); ++x)
      CHECK(normal_closure(g, std::vector<Element>{x}).elements() == oracle::normal_closure(g, {x}));
}

TEST_CASE("normal subgroups") {
  auto orders = [](const FiniteGroup& g) {
    std::vector<std::size_t> o;
    for (const auto& n : normal_subgroups(g)) o.push_back(n.order());
    return o;
  };
  CHECK(orders(alternating_group(4)) == std::vector<std::size_t>{1, 4, 12});
  CHECK(orders(special_linear_2_3()) == std::vector<std::size_t>{1, 2, 8, 24});
  CHECK(orders(alternating_group(5)) == std::vector<std::size_t>{1, 60});
  CHECK(orders(cyclic_group(7)) == std::vector<std::size_t>{1, 7});
  CHECK(orders(trivial_group()) == std::vector<std::size_t>{1});

  for (const auto& g : fixtures::corpus()) {
    if (g.order() > 200) continue;
    CAPTURE(g.name());
    const auto& normals = normal_subgroups(g);
    if (g.order() <= 100) {
      const auto expected = oracle::normal_subgroups(g);
      CHECK(element_sets(normals) == std::set<oracle::Set>(expected.begin(), expected.end()));
    }
    CHECK(std::is_sorted(normals.begin(), normals.end()));
    CHECK(normals.front().is_trivial());
    CHECK(normals.back().is_whole());
    const auto sets = element_sets(normals);
    for (const auto& a : normals)
      for (const auto& b : normals) {
        CHECK(sets.count(intersection(a, b).elements()) == 1);
        CHECK(sets.count(join(g, a, b).elements()) == 1);
      }
    // Each member is a union of classes.
    for (const auto& n : normals)
      for (const auto& c : conjugacy_classes(g)) {
        const bool any = std::any_of(c.begin(), c.end(), [&](Element x) { return n.contains(x); });
        const bool all = std::all_of(c.begin(), c.end(), [&](Element x) { return n.contains(x); });
        CHECK(any == all);
      }
  }
  SUBCASE("small groups against the full subgroup lattice") {
    for (const auto& g : fixtures::small_groups(24)) {
      std::set<oracle::Set> expected;
      for (const auto& s : oracle::all_subgroups(g))
        if (oracle::is_normal(g, s)) expected.insert(s);
      CHECK(element_sets(normal_subgroups(g)) == expected);
    }
  }
  SUBCASE("cap") {
    const auto g = alternating_group(5);
    ScopedOrderCap cap(30);
    try {
      (void)normal_subgroups(g);
      FAIL("expected OrderCapExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OrderCapExceeded);
    }
  }
}

TEST_CASE("minimal and maximal normal subgroups, socle") {
  const auto a4 = alternating_group(4);
  const auto mins = minimal_normal_subgroups(a4);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 4);
  const auto a4a4 = direct_product(a4, a4);
  const auto m2 = minimal_normal_subgroups(a4a4);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0].order() == 4);
  CHECK(m2[1].order() == 4);
  const auto sl = special_linear_2_3();
  const auto msl = minimal_normal_subgroups(sl);
  REQUIRE(msl.size() == 1);
  CHECK(msl[0] == center(sl));

  CHECK(socle(a4).order() == 4);
  CHECK(socle(direct_product(cyclic_group(2), klein_four_group())).is_whole());
  CHECK(socle(a4a4).order() == 16);
  CHECK(socle(trivial_group()).is_trivial());

  const auto maxa4 = maximal_normal_subgroups(a4);
  REQUIRE(maxa4.size() == 1);
  CHECK(maxa4[0].order() == 4);
  std::vector<std::size_t> c6;
  for (const auto& m : maximal_normal_subgroups(cyclic_group(6))) c6.push_back(m.order());
  std::sort(c6.begin(), c6.end());
  CHECK(c6 == std::vector<std::size_t>{2, 3});
  const auto maxa5 = maximal_normal_subgroups(alternating_group(5));
  REQUIRE(maxa5.size() == 1);
  CHECK(maxa5[0].is_trivial());

  for (auto f : {+[](const FiniteGroup& g) { (void)minimal_normal_subgroups(g); },
                 +[](const FiniteGroup& g) { (void)maximal_normal_subgroups(g); }}) {
    try {
      f(trivial_group());
      FAIL("expected TrivialGroup");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TrivialGroup);
    }
  }

  for (const auto& g : fixtures::corpus()) {
    if (g.is_trivial()) continue;
    CAPTURE(g.name());
    const auto& normals = normal_subgroups(g);
    for (const auto& m : minimal_normal_subgroups(g)) {
      CHECK_FALSE(m.is_trivial());
      for (const auto& n : normals) CHECK((!n.is_subgroup_of(m) || n.is_trivial() || n == m));
      // Minimal normal subgroups are direct powers of simple groups; in a
      // soluble group they are elementary abelian.
      const auto mg = subgroup_as_group(g, m);
      if (is_soluble(g)) {
        CHECK(oracle::abelian(mg.group, oracle::everything(mg.group)));
        CHECK(oracle::is_prime(oracle::exponent(mg.group)));
      }
      const auto factors = composition_factors(mg.group);
      for (const auto& f : factors) CHECK(f.order() == factors.front().order());
    }
    for (const auto& m : maximal_normal_subgroups(g)) {
      CHECK_FALSE(m.is_whole());
      for (const auto& n : normals) CHECK((!m.is_subgroup_of(n) || n.is_whole() || n == m));
    }
  }
}

TEST_CASE("composition series") {
  const auto s4 = composition_series(symmetric_group(4));
  CHECK(as_multiset(s4.factor_orders) == std::multiset<std::size_t>{2, 3, 2, 2});
  CHECK(composition_series(cyclic_group(7)).factor_orders == std::vector<std::size_t>{7});
  CHECK(composition_series(alternating_group(5)).factor_orders == std::vector<std::size_t>{60});
  CHECK(composition_series(trivial_group()).length() == 0);

  for (const auto& g : fixtures::corpus()) {
    CAPTURE(g.name());
    const auto series = composition_series(g);
    CHECK(series.chain.front().is_whole());
    CHECK(series.chain.back().is_trivial());
    for (std::size_t i = 0; i + 1 < series.chain.size(); ++i) {
      const auto& big = series.chain[i];
      const auto& small = series.chain[i + 1];
      CHECK(small.order() < big.order());
      CHECK(is_normal_in(g, small, big));
      CHECK(series.factor_tags[i].simple);
    }
    if (is_soluble(g)) CHECK(as_multiset(series.factor_orders) == oracle::prime_factors(g.order()));
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      CHECK(as_multiset(composition_series(g, seed).factor_orders) ==
            as_multiset(series.factor_orders));
  }
}

TEST_CASE("chief series") {
  const auto a4 = chief_series(alternating_group(4));
  std::vector<std::size_t> orders;
  for (const auto& s : a4.chain) orders.push_back(s.order());
  CHECK(orders == std::vector<std::size_t>{1, 4, 12});
  CHECK(a4.factor_orders == std::vector<std::size_t>{4, 3});
  CHECK(chief_series(cyclic_group(4)).factor_orders == std::vector<std::size_t>{2, 2});
  CHECK(chief_series(alternating_group(5)).factor_orders == std::vector<std::size_t>{60});

  for (const auto& g : fixtures::corpus()) {
    CAPTURE(g.name());
    const auto series = chief_series(g);
    CHECK(series.chain.front().is_trivial());
    CHECK(series.chain.back().is_whole());
    for (std::size_t i = 0; i + 1 < series.chain.size(); ++i) {
      const auto& lo = series.chain[i];
      const auto& hi = series.chain[i + 1];
      CHECK(is_normal(g, hi));
      // hi/lo is minimal normal in G/lo: no normal subgroup strictly between.
      for (const auto& n : normal_subgroups(g))
        CHECK_FALSE((lo.is_subgroup_of(n) && n.is_subgroup_of(hi) && n != lo && n != hi));
    }
    if (is_supersoluble(g))
      for (auto f : series.factor_orders) CHECK(oracle::is_prime(f));
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      CHECK(as_multiset(chief_series(g, seed).factor_orders) == as_multiset(series.factor_orders));
  }
}

TEST_CASE("subnormal subgroups") {
  auto sets = [](const std::vector<SubnormalSubgroup>& all) {
    std::set<oracle::Set> out;
    for (const auto& s : all) out.insert(s.subgroup.elements());
    return out;
  };
  SUBCASE("abelian groups: every subgroup") {
    for (const auto& g : {cyclic_group(8), klein_four_group(),
                          direct_product(cyclic_group(4), cyclic_group(2))}) {
      const auto subs = oracle::all_subgroups(g);
      CHECK(sets(subnormal_subgroups(g)) == std::set<oracle::Set>(subs.begin(), subs.end()));
    }
  }
  SUBCASE("S4") {
    const auto s4 = symmetric_group(4);
    const auto all = sets(subnormal_subgroups(s4));
    CHECK(all.size() == 7);  // 1, three in V4, V4, A4, S4
    for (const auto& s : all) CHECK(std::set<std::size_t>{1, 2, 4, 12, 24}.count(s.size()) == 1);
    const auto t = closure(s4, std::vector<Element>{by_label(s4, "[1 0 2 3]")});
    CHECK(all.count(t.elements()) == 0);
    const auto dt = closure(s4, std::vector<Element>{by_label(s4, "[1 0 3 2]")});
    CHECK(all.count(dt.elements()) == 1);
  }
  SUBCASE("A5 x A5 contains both factors") {
    ScopedOrderCap cap(4000);
    const auto a5 = alternating_group(5);
    const auto g = direct_product(a5, a5);
    const auto all = subnormal_subgroups(g);
    std::size_t sixty = 0;
    for (const auto& s : all) sixty += s.subgroup.order() == 60;
    CHECK(sixty == 2);
  }
  SUBCASE("witness chains and normal subgroups") {
    for (const auto& g : fixtures::small_groups(48)) {
      CAPTURE(g.name());
      const auto all = subnormal_subgroups(g);
      const auto found = sets(all);
      for (const auto& n : normal_subgroups(g)) CHECK(found.count(n.elements()) == 1);
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto chain = subnormal_chain(all, i);
        CHECK(chain.front() == all[i].subgroup);
        CHECK(chain.back().is_whole());
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
          CHECK(is_normal_in(g, chain[k], chain[k + 1]));
          CHECK(found.count(chain[k].elements()) == 1);
        }
      }
      // Against the definition: H is subnormal iff a chain of normal
      // inclusions through the subgroup lattice reaches G.
      if (g.order() <= 24) {
        const auto subs = oracle::all_subgroups(g);
        std::set<oracle::Set> sub_normal{oracle::everything(g)};
        bool grew = true;
        while (grew) {
          grew = false;
          for (const auto& h : subs) {
            if (sub_normal.count(h)) continue;
            for (const auto& k : sub_normal) {
              if (!oracle::subset(h, k)) continue;
              const auto kg = fixtures::subgroup(g, k);
              if (is_normal_in(g, fixtures::subgroup(g, h), kg)) {
                sub_normal.insert(h);
                grew = true;
                break;
              }
            }
          }
        }
        CHECK(found == sub_normal);
      }
    }
  }
  SUBCASE("depth limit") {
    const auto s4 = symmetric_group(4);
    SubnormalOptions o;
    o.depth_limit = 1;
    for (const auto& s : subnormal_subgroups(s4, o)) CHECK(is_normal(s4, s.subgroup));
  }
}

TEST_CASE("Frattini subgroups of abelian groups") {
  CHECK(frattini_of_abelian(cyclic_group(4)).order() == 2);
  CHECK(frattini_of_abelian(cyclic_group(6)).is_trivial());
  CHECK(frattini_of_abelian(klein_four_group()).is_trivial());
  CHECK(frattini_of_abelian(cyclic_group(8)).order() == 4);
  CHECK(frattini_of_abelian(direct_product(cyclic_group(4), cyclic_group(9))).order() == 6);
  try {
    frattini_of_abelian(symmetric_group(3));
    FAIL("expected NotAbelian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAbelian);
  }
}

TEST_CASE("series kinds print") {
  CHECK(to_string(SeriesKind::Derived) == "derived");
  CHECK(to_string(SeriesKind::Chief) == "chief");
}
