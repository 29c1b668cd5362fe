#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/group.hpp"
#include "bracekit/words.hpp"

namespace bracekit {

enum class StatementId { Prop31, Cor32, Prop44, Cor45, Thm51, Thm52, Lemma21 };

const char* statement_name(StatementId id);
std::optional<StatementId> statement_from_name(const std::string& name);

/// Structured outcome of one statement check on one skew brace. A report
/// with hypotheses_hold == false is vacuous: the conclusion is still
/// evaluated where it makes sense, but carries no weight.
struct VerifierReport {
  StatementId statement = StatementId::Thm51;
  std::string brace_id;            // filled by the sweep runner
  std::vector<int> subgroup;       // B or D parameter, when the statement has one
  bool hypotheses_hold = true;
  bool conclusion_holds = true;
  std::map<std::string, long long> parameters;
  std::optional<std::vector<int>> witness;
  std::map<std::string, long long> empirical_bounds;
  std::vector<std::string> notes;

  bool vacuous() const { return !hypotheses_hold; }
  bool failed() const { return hypotheses_hold && !conclusion_holds; }
};

// Each verifier recomputes both sides of its statement from scratch, so a
// false conclusion means either an implementation bug or a genuine
// counterexample; re-validating the brace distinguishes the two.

/// If W vanishes on Aut(add/B) then products and inverses taken in either
/// operation agree modulo B on the verbal subgroup W of the multiplicative
/// group. B must be characteristic in the additive group.
VerifierReport verify_prop31(const SkewBrace& brace, const Subgroup& b, const WordSet& w);
VerifierReport verify_prop31(const SkewBrace& brace, const Subgroup& b, const WordSet& w,
                             const AutGroup& add_auts);

/// With add-derived term n inside B and Aut(add/B) solvable of derived
/// length m, the multiplicative derived term m+n lies inside B.
VerifierReport verify_cor32(const SkewBrace& brace, const Subgroup& b);
VerifierReport verify_cor32(const SkewBrace& brace, const Subgroup& b,
                            const AutGroup& add_auts);

/// For cyclic characteristic D, with B the centralizer of D: products and
/// inverses agree modulo B on a multiplicative derived term, whose index is
/// computed from the primary parts of D. Also checks the intersection
/// identity over the primary centralizers and the embedding of each
/// add/B_i into Aut(D_i).
VerifierReport verify_prop44(const SkewBrace& brace, const Subgroup& d);
VerifierReport verify_prop44(const SkewBrace& brace, const Subgroup& d,
                             const AutGroup& add_auts);

/// For cyclic characteristic D central in the n-th add-derived term, the
/// multiplicative derived term m+n lies in the centralizer of D.
VerifierReport verify_cor45(const SkewBrace& brace, const Subgroup& d);
VerifierReport verify_cor45(const SkewBrace& brace, const Subgroup& d,
                            const AutGroup& add_auts);

/// Nilpotent additive group implies solvable multiplicative group.
VerifierReport verify_thm51(const SkewBrace& brace);

/// Cyclic additive derived subgroup implies solvable multiplicative group;
/// also checks the supporting chain through the centralizer of the derived
/// subgroup.
VerifierReport verify_thm52(const SkewBrace& brace);
VerifierReport verify_thm52(const SkewBrace& brace, const AutGroup& add_auts);

/// A characteristic subgroup of the additive group is closed under the
/// multiplicative operation and inverses, and the restriction is a brace.
VerifierReport verify_lemma21(const SkewBrace& brace, const Subgroup& b);
VerifierReport verify_lemma21(const SkewBrace& brace, const Subgroup& b,
                              const AutGroup& add_auts);

// Shared helpers, used by the verifiers and exercised directly in tests.

/// j-th derived term (1-based; term 1 is the whole group). Indices past the
/// stabilization point return the stabilized term.
Subgroup derived_term(const FiniteGroup& g, int j);

/// Derived length of an automorphism group, via its composition table when
/// small and via permutation arithmetic when large.
std::optional<int> aut_group_derived_length(const AutGroup& auts);
/// Whether the k-th derived term of an automorphism group is trivial.
bool aut_group_derived_term_trivial(const AutGroup& auts, int k);

/// Sweep support for the quotient-coincidence statements: evaluates several
/// derived-word indices against one characteristic subgroup, computing the
/// quotient and its automorphism group once.
std::vector<VerifierReport> verify_prop31_derived_batch(const SkewBrace& brace,
                                                        const Subgroup& b,
                                                        const std::vector<int>& ks,
                                                        const AutGroup& add_auts);

}  // namespace bracekit
