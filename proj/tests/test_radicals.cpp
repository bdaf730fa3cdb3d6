#include <doctest.h>

#include "fixtures.hpp"
#include "largesub/catalog.hpp"
#include "largesub/classes.hpp"
#include "largesub/radicals.hpp"
#include "largesub/structure.hpp"
#include "oracle.hpp"

using namespace largesub;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

bool pi_subgroup(const oracle::Set& s, const PrimeSet& pi) {
  for (auto p : oracle::prime_factors(s.size()))
    if (std::find(pi.begin(), pi.end(), p) == pi.end()) return false;
  return true;
}

}  // namespace

TEST_CASE("pi-cores") {
  CHECK(o_pi(alternating_group(4), {2}).subgroup.order() == 4);
  CHECK(o_pi(symmetric_group(4), {3}).subgroup.is_trivial());
  CHECK(o_pi(symmetric_group(4), {2, 3}).subgroup.is_whole());
  CHECK(o_pi_prime_pi(symmetric_group(4), {2}).subgroup.order() == 4);
  CHECK(o_pi_prime_pi(symmetric_group(3), {3}).subgroup.order() == 3);
  CHECK(o_pi_prime_pi(quaternion_group(8), {2}).subgroup.is_whole());

  for (const auto& g : fixtures::corpus()) {
    if (g.order() > 100) continue;
    CAPTURE(g.name());
    const auto normals = oracle::normal_subgroups(g);
    for (const PrimeSet& pi : {PrimeSet{2}, PrimeSet{3}, PrimeSet{2, 3}, PrimeSet{5}}) {
      const auto expected = oracle::radical(g, normals, [&](const oracle::Set& n) { return pi_subgroup(n, pi); });
      const auto mine = o_pi(g, pi).subgroup;
      CHECK(mine.elements() == expected);
      // O_{pi',pi} contains O_{pi'} with a pi-group quotient.
      const auto pi_prime = complement_primes(pi, g.order());
      const auto opp = o_pi_prime_pi(g, pi).subgroup;
      CHECK(is_normal(g, opp));
      const auto lower = pi_prime.empty() ? Subgroup::trivial(g.order()) : o_pi(g, pi_prime).subgroup;
      CHECK(lower.is_subgroup_of(opp));
      std::size_t index = opp.order() / lower.order();
      for (auto p : oracle::prime_factors(index)) CHECK(std::find(pi.begin(), pi.end(), p) != pi.end());
    }
  }
}

TEST_CASE("Fitting subgroup") {
  CHECK(fitting(symmetric_group(4)).subgroup.order() == 4);
  CHECK(fitting(quaternion_group(16)).subgroup.is_whole());
  CHECK(fitting(alternating_group(5)).subgroup.is_trivial());
  for (const auto& g : fixtures::corpus()) {
    if (g.order() > 100) continue;
    CAPTURE(g.name());
    const auto f = fitting(g).subgroup;
    CHECK(f.elements() == oracle::fitting(g));
    // Product of the p-cores.
    Subgroup prod = Subgroup::trivial(g.order());
    for (auto p : oracle::prime_factors(g.order())) prod = join(g, prod, o_pi(g, {p}).subgroup);
    CHECK(prod == f);
    CHECK(x_radical(g, builtin_class("nilpotent")).subgroup == f);
  }
}

TEST_CASE("components and layer") {
  CHECK(components(symmetric_group(4)).empty());
  CHECK(components(special_linear_2_3()).empty());
  const auto a5 = alternating_group(5);
  const auto ca5 = components(a5);
  REQUIRE(ca5.size() == 1);
  CHECK(ca5[0].is_whole());

  const auto a5s4 = direct_product(a5, symmetric_group(4));
  const auto c = components(a5s4);
  REQUIRE(c.size() == 1);
  CHECK(c[0].order() == 60);
  // The A5 factor is {(g, 1)}, i.e. the multiples of |S4|.
  for (Element x : c[0].elements()) CHECK(x % 24 == 0);

  CHECK(layer(symmetric_group(4)).subgroup.is_trivial());
  CHECK(layer(special_linear_2_3()).subgroup.is_trivial());
  {
    ScopedOrderCap cap(4000);
    const auto a5a5 = direct_product(a5, a5);
    CHECK(layer(a5a5).subgroup.is_whole());
    CHECK(components(a5a5).size() == 2);
  }

  for (const auto& g : fixtures::corpus()) {
    CAPTURE(g.name());
    const auto comps = components(g);
    for (const auto& a : comps) {
      CHECK(is_quasisimple(subgroup_as_group(g, a).group));
      for (const auto& b : comps)
        if (a != b) CHECK(oracle::commute(g, a.elements(), b.elements()));
    }
    if (is_soluble(g)) {
      CHECK(comps.empty());
      CHECK(layer(g).subgroup.is_trivial());
      CHECK(generalized_fitting(g).subgroup == fitting(g).subgroup);
    }
  }
}

TEST_CASE("generalized Fitting subgroup") {
  CHECK(generalized_fitting(symmetric_group(4)).subgroup.order() == 4);
  CHECK(generalized_fitting(alternating_group(5)).subgroup.is_whole());
  CHECK(generalized_fitting(quaternion_group(8)).subgroup.is_whole());
  CHECK(generalized_fitting(symmetric_group(5)).subgroup.order() == 60);
  for (const auto& g : fixtures::corpus()) {
    CAPTURE(g.name());
    const auto fs = generalized_fitting(g).subgroup;
    CHECK(is_normal(g, fs));
    CHECK(fitting(g).subgroup.is_subgroup_of(fs));
    CHECK(layer(g).subgroup.is_subgroup_of(fs));
    CHECK(x_radical(g, builtin_class("quasinilpotent")).subgroup == fs);
    CHECK(is_quasinilpotent(subgroup_as_group(g, fs).group));
  }
}

TEST_CASE("soluble radical") {
  CHECK(soluble_radical(special_linear_2_3()).subgroup.is_whole());
  CHECK(soluble_radical(alternating_group(5)).subgroup.is_trivial());
  const auto g = direct_product(alternating_group(5), cyclic_group(6));
  const auto r = soluble_radical(g).subgroup;
  CHECK(r.order() == 6);
  for (Element x : r.elements()) CHECK(x < 6);
  for (const auto& h : fixtures::corpus()) {
    if (h.order() > 100) continue;
    const auto expected = oracle::radical(h, oracle::normal_subgroups(h),
                                          [&](const oracle::Set& n) { return oracle::soluble(h, n); });
    CHECK(soluble_radical(h).subgroup.elements() == expected);
    CHECK(x_radical(h, builtin_class("soluble")).subgroup.elements() == expected);
  }
}

TEST_CASE("maximal normal X-subgroups") {
  const auto sl = special_linear_2_3();
  const auto ab = builtin_class("abelian");
  const auto msl = maximal_normal_x_subgroups(sl, ab);
  REQUIRE(msl.size() == 1);
  CHECK(msl[0] == center(sl));
  const auto ma4 = maximal_normal_x_subgroups(alternating_group(4), ab);
  REQUIRE(ma4.size() == 1);
  CHECK(ma4[0].order() == 4);
  const auto q16 = quaternion_group(16);
  const auto mq = maximal_normal_x_subgroups(q16, builtin_class("nilpotent_class:3"));
  REQUIRE(mq.size() == 1);
  CHECK(mq[0].is_whole());

  for (const auto& g : fixtures::corpus()) {
    if (g.order() > 200) continue;
    CAPTURE(g.name());
    for (const char* key : {"abelian", "nilpotent_class:2", "soluble_derived:2"}) {
      const auto x = builtin_class(key);
      const auto maxes = maximal_normal_x_subgroups(g, x);
      CHECK_FALSE(maxes.empty());
      for (const auto& a : maxes)
        for (const auto& b : maxes)
          if (a != b) CHECK_FALSE(a.is_subgroup_of(b));
      for (const auto& n : normal_subgroups(g)) {
        if (!x(subgroup_as_group(g, n).group)) continue;
        bool covered = false;
        for (const auto& m : maxes) covered = covered || n.is_subgroup_of(m);
        CHECK(covered);
      }
    }
  }
}

TEST_CASE("radical and residual validation") {
  const auto s3 = symmetric_group(3);
  // Abelian falsely flagged as a Fitting class; C2 x D8 has two maximal
  // abelian normal subgroups.
  ClassPredicate ab = builtin_class("abelian");
  ab.closed_under.fitting_class = true;
  const auto d = direct_product(cyclic_group(2), dihedral_group(8));
  CHECK(kind_of([&] { x_radical(d, ab); }) == ErrorKind::NotAFittingClassWitness);
  CHECK(kind_of([&] { x_radical(s3, builtin_class("abelian")); }) == ErrorKind::ClosureNotDeclared);

  CHECK(x_residual(s3, builtin_class("abelian")).order() == 3);
  // Cyclic groups are not closed under direct products: V4 has kernels
  // {C2 a, C2 b} with cyclic quotients, but V4 / 1 is not cyclic.
  ClassPredicate cyc{"cyclic",
                     [](const FiniteGroup& g) {
                       for (Element x = 0; x < g.order(); ++x)
                         if (oracle::element_order(g, x) == g.order()) return true;
                       return false;
                     },
                     {true, true, true, false, false, false}};
  const auto v4 = klein_four_group();
  CHECK(kind_of([&] { x_residual(v4, cyc); }) == ErrorKind::NotAFormationWitness);
  cyc.closed_under.direct_products = false;
  CHECK(kind_of([&] { x_residual(v4, cyc); }) == ErrorKind::ClosureNotDeclared);
}

TEST_CASE("supersoluble residual") {
  CHECK(supersoluble_residual(special_linear_2_3()).order() == 8);
  CHECK(supersoluble_residual(alternating_group(4)).order() == 4);
  CHECK(supersoluble_residual(symmetric_group(3)).is_trivial());
  const auto a4 = alternating_group(4);
  const auto a4a4 = direct_product(a4, a4);
  const auto r = supersoluble_residual(a4a4);
  CHECK(r.order() == 16);
  // The Sylow 2-subgroup: every element of 2-power order.
  for (Element x = 0; x < a4a4.order(); ++x)
    CHECK(r.contains(x) == (16 % oracle::element_order(a4a4, x) == 0));

  const auto ss = builtin_class("supersoluble");
  for (const auto& g : fixtures::small_groups(48)) {
    CAPTURE(g.name());
    const auto res = supersoluble_residual(g);
    CHECK(is_normal(g, res));
    CHECK(oracle::supersoluble(quotient_group(g, res).group,
                               oracle::everything(quotient_group(g, res).group)));
    for (const auto& m : normal_subgroups(g))
      if (m.is_subgroup_of(res) && m != res) CHECK_FALSE(ss(quotient_group(g, m).group));
  }
}
