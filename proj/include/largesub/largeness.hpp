#ifndef LARGESUB_LARGENESS_HPP
#define LARGESUB_LARGENESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "largesub/classes.hpp"
#include "largesub/group.hpp"

namespace largesub {

/// A normal subgroup N is large in G when C_G(N) <= N. Throws NotNormal.
bool is_large(const FiniteGroup& g, const Subgroup& n);

struct WitnessResult {
  std::string description;
  Subgroup subgroup;
  bool is_large = false;
  std::size_t centralizer_order = 0;
};

enum class Outcome { Passed, HypothesesFailed, Counterexample };
std::string_view to_string(Outcome outcome);

/// Outcome of one verifier on one group.
///
/// `passed` holds exactly when every hypothesis holds and every witness is
/// large; `counterexample` is set exactly when the hypotheses hold but some
/// witness is not large. Both are filled in by `finalize()`, which every
/// verifier calls last.
struct VerificationReport {
  std::string theorem;
  std::string group_name;
  std::size_t group_order = 0;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::vector<WitnessResult> witnesses;
  bool passed = false;
  std::optional<WitnessResult> counterexample;

  bool hypotheses_hold() const;
  bool all_witnesses_large() const;
  Outcome outcome() const;
  void finalize();
};

/// Tests each subgroup for largeness, recording centralizer orders.
WitnessResult test_witness(const FiniteGroup& g, const Subgroup& n,
                           std::string description);

/// Requires normal/quotient/direct-product/central-extension flags
/// (ClosureFlagsMissing otherwise).
VerificationReport verify_theorem_A(const FiniteGroup& g, const ClassPredicate& x);

/// Requires the solubly-saturated-formation and normal-subgroup flags and
/// that X accepts C2, C6 and V4 (FlagsMissing otherwise).
VerificationReport verify_theorem_C(const FiniteGroup& g, const ClassPredicate& x);

enum class Corollary { D, E, F };

/// D: F(G) for soluble G. E: F*(G) for any G. F: O_{pi',pi}(G) for
/// pi-separable G. Throws HypothesisFailed when D or F does not apply.
VerificationReport verify_corollary(const FiniteGroup& g, Corollary which,
                                    const PrimeSet& pi = {});

/// Maximal normal subgroups of nilpotency class <= c. Throws NotSoluble or
/// BadBound (c < 2).
VerificationReport verify_prop_G(const FiniteGroup& g, std::size_t c);

/// Maximal normal subgroups of derived length <= d. Throws NotSoluble or
/// BadBound (d < 2).
VerificationReport verify_derived_length_variant(const FiniteGroup& g, std::size_t d);

/// Maximal abelian normal subgroups, with membership in X0 as the
/// hypothesis. Witnesses are recorded even when G is not in X0.
VerificationReport verify_prop_H(const FiniteGroup& g);

/// The central product G o Y that identifies a central subgroup Z of G
/// with the Frattini subgroup of an abelian Y, plus the facts checked on it.
struct PropBWitness {
  FiniteGroup g;
  Subgroup z;
  FiniteGroup y;
  FiniteGroup gamma;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_passed() const;
};

PropBWitness prop_b_witness(const FiniteGroup& g, const Subgroup& z);

enum class ScanStatus { Finding, NotFinding, Skipped };
std::string_view to_string(ScanStatus status);

struct ScanEntry {
  std::size_t position = 0;
  std::string name;
  std::size_t order = 0;
  ScanStatus status = ScanStatus::Skipped;
  bool in_X0 = false;
  std::size_t residual_order = 0;
  std::optional<VerificationReport> report;  // absent for skipped groups
  std::string note;
};

/// Classifies every corpus member: a finding is a soluble group outside X0
/// all of whose maximal abelian normal subgroups are large. Non-soluble
/// members are skipped. Groups are processed on `threads` workers; the
/// result is in corpus order regardless.
std::vector<ScanEntry> scan_open_question(const std::vector<FiniteGroup>& corpus,
                                          unsigned threads = 1);

}  // namespace largesub

#endif  // LARGESUB_LARGENESS_HPP
