#pragma once

#include <string>
#include <vector>

#include "bracekit/group.hpp"

namespace bracekit {

/// One carrier with two group structures sharing identity 0. The defining
/// law ties them together: a (*) (b (+) c) = (a (*) b) (-a) (+) (a (*) c).
struct SkewBrace {
  FiniteGroup add;
  FiniteGroup mul;

  int order() const { return add.n; }
  int addop(int a, int b) const { return add.op(a, b); }
  int mulop(int a, int b) const { return mul.op(a, b); }
  int neg(int a) const { return add.inv[a]; }
  int minv(int a) const { return mul.inv[a]; }
};

/// Validates both tables as groups with identity 0 and the defining law over
/// all triples. Throws Error(AxiomFails) with the least failing (a,b,c).
SkewBrace validate_skew_brace(int n, const std::vector<int>& add_table,
                              const std::vector<int>& mul_table);
SkewBrace validate_skew_brace(const FiniteGroup& add, const FiniteGroup& mul);

/// Both operations equal; every lambda map is the identity.
SkewBrace trivial_brace(const FiniteGroup& g);

struct LambdaMap {
  int actor = 0;
  std::vector<int> perm;  // perm[x] = (-a) (+) (a (*) x)
};

/// The lambda map of a; asserts it is an automorphism of the additive group
/// (anything else indicates a corrupted brace).
LambdaMap lambda(const SkewBrace& brace, int a);
/// All lambda permutations, indexed by actor.
std::vector<std::vector<int>> lambda_table(const SkewBrace& brace);

struct CheckResult {
  bool ok = true;
  std::vector<int> witness;  // least failing tuple when !ok

  explicit operator bool() const { return ok; }
};

/// Checks lambda_{a(*)b} = lambda_a . lambda_b for all a, b; witness (a,b,x).
CheckResult check_lambda_hom(const SkewBrace& brace);
/// Checks a(*)b = a (+) lambda_a(b) and a^{-1} = -(lambda_{a^{-1}}(a)).
/// Witness: (2,a,b) for the first identity, (3,a) for the second.
CheckResult check_eq2_eq3(const SkewBrace& brace);

int add_commutator(const SkewBrace& brace, int a, int b);
int mul_commutator(const SkewBrace& brace, int a, int b);

/// Restriction of the brace to a characteristic subgroup of the additive
/// group (relabeled, order preserving). Closure under (*) and its inverses
/// is guaranteed for characteristic subgroups; a violation is reported as
/// Error(ClosureFails) since it can only mean a corrupted input.
SkewBrace subbrace_from_characteristic(const SkewBrace& brace, const Subgroup& b);
SkewBrace subbrace_from_characteristic(const SkewBrace& brace, const Subgroup& b,
                                       const AutGroup& add_auts);

/// The homomorphism from the multiplicative group into Aut(add/B) induced by
/// the lambda maps, together with its kernel.
struct PsiHom {
  Subgroup char_subgroup;      // B, characteristic in the additive group
  QuotientResult quot;         // add / B
  AutGroup quotient_auts;      // Aut(add / B)
  std::vector<int> aut_index;  // per carrier a: index of psi(a) in quotient_auts
  Subgroup kernel;             // subgroup of the multiplicative group

  /// Verifies psi(a (*) b) = psi(a) . psi(b) directly on permutations.
  bool check_hom(const SkewBrace& brace) const;
};

PsiHom psi_hom(const SkewBrace& brace, const Subgroup& b);
PsiHom psi_hom(const SkewBrace& brace, const Subgroup& b, const AutGroup& add_auts);

}  // namespace bracekit
