#include "largesub/largeness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "largesub/catalog.hpp"
#include "largesub/radicals.hpp"
#include "largesub/structure.hpp"

namespace largesub {

bool is_large(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n))
    throw Error(ErrorKind::NotNormal, "largeness is only defined for normal subgroups");
  return centralizer(g, n).is_subgroup_of(n);
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Passed: return "passed";
    case Outcome::HypothesesFailed: return "hypotheses_failed";
    case Outcome::Counterexample: return "counterexample";
  }
  return "unknown";
}

bool VerificationReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const auto& h) { return h.second; });
}

bool VerificationReport::all_witnesses_large() const {
  return std::all_of(witnesses.begin(), witnesses.end(),
                     [](const auto& w) { return w.is_large; });
}

Outcome VerificationReport::outcome() const {
  if (!hypotheses_hold()) return Outcome::HypothesesFailed;
  return passed ? Outcome::Passed : Outcome::Counterexample;
}

void VerificationReport::finalize() {
  passed = hypotheses_hold() && all_witnesses_large();
  counterexample.reset();
  if (hypotheses_hold())
    for (const auto& w : witnesses)
      if (!w.is_large) {
        counterexample = w;
        break;
      }
}

WitnessResult test_witness(const FiniteGroup& g, const Subgroup& n,
                           std::string description) {
  if (!is_normal(g, n))
    throw Error(ErrorKind::NotNormal, description + " is not normal");
  const Subgroup c = centralizer(g, n);
  return {std::move(description), n, c.is_subgroup_of(n), c.order()};
}

namespace {

VerificationReport start_report(std::string theorem, const FiniteGroup& g) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.group_name = g.name();
  r.group_order = g.order();
  return r;
}

void add_witnesses(VerificationReport& r, const FiniteGroup& g,
                   const std::vector<Subgroup>& subgroups, const std::string& what) {
  for (const auto& s : subgroups)
    r.witnesses.push_back(test_witness(g, s, what));
}

void require_soluble(const FiniteGroup& g) {
  if (!is_soluble(g))
    throw Error(ErrorKind::NotSoluble,
                (g.name().empty() ? std::string("group") : g.name()) + " is not soluble");
}

}  // namespace

VerificationReport verify_theorem_A(const FiniteGroup& g, const ClassPredicate& x) {
  const auto& f = x.closed_under;
  std::string missing;
  if (!f.normal_subgroups) missing += " normal_subgroups";
  if (!f.quotients) missing += " quotients";
  if (!f.direct_products) missing += " direct_products";
  if (!f.central_extensions) missing += " central_extensions";
  if (!missing.empty())
    throw Error(ErrorKind::ClosureFlagsMissing,
                "class '" + x.name + "' lacks closure under" + missing);
  auto r = start_report("theorem_A[" + x.name + "]", g);
  r.hypotheses = {{"closed_under_normal_subgroups", true},
                  {"closed_under_quotients", true},
                  {"closed_under_direct_products", true},
                  {"closed_under_central_extensions", true},
                  {"in_extension_closure", in_extension_closure(x, g)}};
  if (r.hypotheses.back().second)
    add_witnesses(r, g, maximal_normal_x_subgroups(g, x), "maximal normal " + x.name + "-subgroup");
  r.finalize();
  return r;
}

VerificationReport verify_theorem_C(const FiniteGroup& g, const ClassPredicate& x) {
  const auto& f = x.closed_under;
  if (!f.solubly_saturated_formation || !f.normal_subgroups)
    throw Error(ErrorKind::FlagsMissing,
                "class '" + x.name +
                    "' is not declared a normal-subgroup-closed solubly saturated formation");
  const bool contains_abelian = x.member(cyclic_group(2)) && x.member(cyclic_group(6)) &&
                                x.member(klein_four_group());
  if (!contains_abelian)
    throw Error(ErrorKind::FlagsMissing,
                "class '" + x.name + "' rejects one of C2, C6, V4");
  auto r = start_report("theorem_C[" + x.name + "]", g);
  r.hypotheses = {{"solubly_saturated_formation", true},
                  {"closed_under_normal_subgroups", true},
                  {"contains_abelian_sample", true},
                  {"in_extension_closure", in_extension_closure(x, g)}};
  if (r.hypotheses.back().second)
    add_witnesses(r, g, maximal_normal_x_subgroups(g, x), "maximal normal " + x.name + "-subgroup");
  r.finalize();
  return r;
}

VerificationReport verify_corollary(const FiniteGroup& g, Corollary which,
                                    const PrimeSet& pi) {
  switch (which) {
    case Corollary::D: {
      if (!is_soluble(g))
        throw Error(ErrorKind::HypothesisFailed, "corollary D needs a soluble group");
      auto r = start_report("corollary_D", g);
      r.hypotheses = {{"soluble", true}};
      r.witnesses.push_back(test_witness(g, fitting(g).subgroup, "F(G)"));
      r.finalize();
      return r;
    }
    case Corollary::E: {
      auto r = start_report("corollary_E", g);
      r.witnesses.push_back(test_witness(g, generalized_fitting(g).subgroup, "F*(G)"));
      r.finalize();
      return r;
    }
    case Corollary::F: {
      if (pi.empty()) throw Error(ErrorKind::BadBound, "corollary F needs a prime set");
      if (!is_pi_separable(g, pi))
        throw Error(ErrorKind::HypothesisFailed,
                    "corollary F needs a {" + format_prime_set(pi) + "}-separable group");
      auto r = start_report("corollary_F[" + format_prime_set(pi) + "]", g);
      r.hypotheses = {{"pi_separable", true}};
      r.witnesses.push_back(
          test_witness(g, o_pi_prime_pi(g, pi).subgroup, "O_{pi',pi}(G)"));
      r.finalize();
      return r;
    }
  }
  throw Error(ErrorKind::BadBound, "unknown corollary");
}

VerificationReport verify_prop_G(const FiniteGroup& g, std::size_t c) {
  if (c < 2) throw Error(ErrorKind::BadBound, "nilpotency class bound must be at least 2");
  require_soluble(g);
  const auto x = builtin_class("nilpotent_class:" + std::to_string(c));
  auto r = start_report("prop_G[c=" + std::to_string(c) + "]", g);
  r.hypotheses = {{"soluble", true}};
  add_witnesses(r, g, maximal_normal_x_subgroups(g, x), "maximal normal subgroup of class <= " + std::to_string(c));
  r.finalize();
  return r;
}

VerificationReport verify_derived_length_variant(const FiniteGroup& g, std::size_t d) {
  if (d < 2) throw Error(ErrorKind::BadBound, "derived length bound must be at least 2");
  require_soluble(g);
  const auto x = builtin_class("soluble_derived:" + std::to_string(d));
  auto r = start_report("prop_G_derived[d=" + std::to_string(d) + "]", g);
  r.hypotheses = {{"soluble", true}};
  add_witnesses(r, g, maximal_normal_x_subgroups(g, x), "maximal normal subgroup of derived length <= " + std::to_string(d));
  r.finalize();
  return r;
}

VerificationReport verify_prop_H(const FiniteGroup& g) {
  require_soluble(g);
  auto r = start_report("prop_H", g);
  r.hypotheses = {{"soluble", true}, {"in_X0", is_in_X0(g)}};
  add_witnesses(r, g, maximal_normal_x_subgroups(g, builtin_class("abelian")),
                "maximal abelian normal subgroup");
  r.finalize();
  return r;
}

// -- central product witness ---------------------------------------------

bool PropBWitness::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

PropBWitness prop_b_witness(const FiniteGroup& g, const Subgroup& z) {
  if (z.parent_order() != g.order() || !z.is_subgroup_of(center(g)))
    throw Error(ErrorKind::NotCentral, "Z must lie in the centre of G");
  if (z.is_trivial())
    throw Error(ErrorKind::HypothesisFailed, "Z must be nontrivial");

  const EmbeddedGroup zg = subgroup_as_group(g, z);
  FiniteGroup y = frattini_cover_abelian(zg.group);
  const Subgroup phi = frattini_of_abelian(y);
  const EmbeddedGroup phig = subgroup_as_group(y, phi);

  const bool inv_match = abelian_invariants(zg.group) == abelian_invariants(phig.group);
  if (!inv_match) throw Error(ErrorKind::NotIsomorphism, "Frattini cover does not match Z");
  CentralProduct cp = central_product(g, y, abelian_isomorphism(zg, phig));
  const FiniteGroup& gamma = cp.group;

  ElementSet g_image(gamma.order()), z_image(gamma.order()), phi_image(gamma.order());
  for (Element x : cp.embed_first) g_image.insert(x);
  z.set().for_each([&](Element x) { z_image.insert(cp.embed_first[x]); });
  phi.set().for_each([&](Element x) { phi_image.insert(cp.embed_second[x]); });
  const Subgroup g_sub = Subgroup::trusted(g_image);

  PropBWitness w{g, z, y, gamma, {}};
  w.checks.emplace_back("frattini_of_cover_matches_Z", inv_match);
  w.checks.emplace_back("order_is_|G||Y|/|Z|",
                        gamma.order() * z.order() == g.order() * y.order());
  w.checks.emplace_back("image_of_G_normal", is_normal(gamma, g_sub));
  w.checks.emplace_back("Z_central_and_inside_Phi(Y)",
                        z_image.is_subset_of(center(gamma).set()) &&
                            z_image.is_subset_of(phi_image));
  return w;
}

// -- open-question scan -----------------------------------------------------

std::string_view to_string(ScanStatus status) {
  switch (status) {
    case ScanStatus::Finding: return "finding";
    case ScanStatus::NotFinding: return "not_finding";
    case ScanStatus::Skipped: return "skipped";
  }
  return "unknown";
}

namespace {

ScanEntry scan_one(const FiniteGroup& g, std::size_t position) {
  ScanEntry e;
  e.position = position;
  e.name = g.name();
  e.order = g.order();
  if (!is_soluble(g)) {
    e.status = ScanStatus::Skipped;
    e.note = "not soluble";
    return e;
  }
  e.residual_order = supersoluble_residual(g).order();
  e.report = verify_prop_H(g);
  e.in_X0 = e.report->hypotheses.back().second;
  e.status = (!e.in_X0 && e.report->all_witnesses_large()) ? ScanStatus::Finding
                                                           : ScanStatus::NotFinding;
  return e;
}

}  // namespace

std::vector<ScanEntry> scan_open_question(const std::vector<FiniteGroup>& corpus,
                                          unsigned threads) {
  std::vector<ScanEntry> out(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        out[i] = scan_one(corpus[i], i);
      } catch (const Error& err) {
        out[i].position = i;
        out[i].name = corpus[i].name();
        out[i].order = corpus[i].order();
        out[i].status = ScanStatus::Skipped;
        out[i].note = err.what();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(corpus.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

}  // namespace largesub
