#include <doctest.h>

#include <algorithm>

#include "bracekit/brace.hpp"
#include "bracekit/enumerate.hpp"
#include "bracekit/small_groups.hpp"

using namespace bracekit;

namespace {

// The brace on the Klein four-group whose multiplicative group is cyclic.
SkewBrace klein_cyclic_brace() {
  FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
  for (const SkewBrace& b : enumerate_braces(klein)) {
    for (int a = 1; a < 4; ++a)
      if (b.mul.element_order(a) == 4) return b;
  }
  FAIL("no brace with Klein addition and cyclic multiplication");
  return trivial_brace(klein);
}

int perm_order(const std::vector<int>& p) {
  std::vector<int> cur = p;
  std::vector<int> id(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) id[i] = static_cast<int>(i);
  int k = 1;
  while (cur != id) {
    std::vector<int> next(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) next[i] = p[cur[i]];
    cur = next;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("the trivial brace satisfies everything") {
  SkewBrace brace = trivial_brace(cyclic_group(6));
  CHECK(check_lambda_hom(brace).ok);
  CHECK(check_eq2_eq3(brace).ok);
  for (int a = 0; a < 6; ++a) {
    LambdaMap lm = lambda(brace, a);
    for (int x = 0; x < 6; ++x) CHECK(lm.perm[x] == x);
  }
}

TEST_CASE("the defining law rejects a mismatched pair of tables") {
  FiniteGroup z6 = cyclic_group(6);
  FiniteGroup s3 = symmetric_group(3);
  CHECK_THROWS_AS(validate_skew_brace(z6, s3), Error);
  try {
    validate_skew_brace(z6, s3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AxiomFails);
    REQUIRE(e.witness().size() == 3);
    CHECK(e.witness() == std::vector<int>{1, 1, 1});
    // The witness really violates the law.
    int a = e.witness()[0], b = e.witness()[1], c = e.witness()[2];
    int lhs = s3.op(a, z6.op(b, c));
    int rhs = z6.op(z6.op(s3.op(a, b), z6.inv[a]), s3.op(a, c));
    CHECK(lhs != rhs);
  }
}

TEST_CASE("validate_skew_brace propagates group errors per table") {
  std::vector<int> bad = cyclic_group(4).table;
  bad[1 * 4 + 1] = 1;
  CHECK_THROWS_AS(validate_skew_brace(4, bad, cyclic_group(4).table), Error);
  CHECK_THROWS_AS(validate_skew_brace(4, cyclic_group(4).table, bad), Error);
}

TEST_CASE("lambda maps of the Klein-addition brace with cyclic multiplication") {
  SkewBrace brace = klein_cyclic_brace();
  CHECK(perm_order(lambda(brace, 0).perm) == 1);
  int gen = -1;
  for (int a = 1; a < 4; ++a)
    if (brace.mul.element_order(a) == 4) gen = a;
  REQUIRE(gen >= 0);
  CHECK(perm_order(lambda(brace, gen).perm) == 2);
  CHECK(check_lambda_hom(brace).ok);
  CHECK(check_eq2_eq3(brace).ok);
}

TEST_CASE("a corrupted multiplicative table breaks the lambda homomorphism") {
  SkewBrace brace = trivial_brace(cyclic_group(4));
  std::swap(brace.mul.table[1 * 4 + 1], brace.mul.table[1 * 4 + 2]);
  CheckResult result = check_lambda_hom(brace);
  CHECK_FALSE(result.ok);
  CHECK(result.witness == std::vector<int>{1, 2, 1});
}

TEST_CASE("a corrupted inverse array breaks the inverse identity") {
  SkewBrace brace = trivial_brace(cyclic_group(4));
  brace.mul.inv[1] = 1;  // should be 3
  CheckResult result = check_eq2_eq3(brace);
  CHECK_FALSE(result.ok);
  REQUIRE(result.witness.size() == 2);
  CHECK(result.witness[0] == 3);  // identity tag
  CHECK(result.witness[1] == 1);  // failing element
}

TEST_CASE("additive and multiplicative commutators") {
  SkewBrace trivial = trivial_brace(symmetric_group(3));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(add_commutator(trivial, a, b) == mul_commutator(trivial, a, b));

  SkewBrace abelian = trivial_brace(cyclic_group(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(add_commutator(abelian, a, b) == 0);

  // Some order-8 brace over Z4 x Z2 addition has nonabelian multiplication.
  FiniteGroup z4xz2 = direct_product(cyclic_group(4), cyclic_group(2));
  bool found_noncommuting = false;
  for (const SkewBrace& b : enumerate_braces(z4xz2)) {
    if (b.mul.is_abelian()) continue;
    for (int x = 0; x < 8 && !found_noncommuting; ++x)
      for (int y = 0; y < 8; ++y)
        if (mul_commutator(b, x, y) != 0) {
          found_noncommuting = true;
          break;
        }
    break;
  }
  CHECK(found_noncommuting);
}

TEST_CASE("subbraces from characteristic subgroups") {
  SkewBrace brace = klein_cyclic_brace();

  SkewBrace from_trivial = subbrace_from_characteristic(brace, trivial_subgroup(brace.add));
  CHECK(from_trivial.order() == 1);

  SkewBrace whole = subbrace_from_characteristic(brace, full_subgroup(brace.add));
  CHECK(whole.add.table == brace.add.table);
  CHECK(whole.mul.table == brace.mul.table);

  // Klein has no proper nontrivial characteristic subgroup.
  AutGroup auts = automorphism_group(brace.add);
  CHECK_THROWS_AS(
      subbrace_from_characteristic(brace, make_subgroup(brace.add, {0, 1}), auts), Error);
}

TEST_CASE("the doubled subgroup gives an order-2 subbrace at order 8") {
  FiniteGroup z4xz2 = direct_product(cyclic_group(4), cyclic_group(2));
  auto braces = enumerate_braces(z4xz2);
  REQUIRE(!braces.empty());
  // 2G = {(0,0),(2,0)} = indices {0, 4}; doubling is preserved by every
  // automorphism, so this subgroup is characteristic.
  for (const SkewBrace& b : braces) {
    Subgroup doubled = make_subgroup(b.add, {0, 4});
    SkewBrace sub = subbrace_from_characteristic(b, doubled);
    CHECK(sub.order() == 2);
    CHECK(check_lambda_hom(sub).ok);
  }
}

TEST_CASE("the induced quotient homomorphism and its kernel") {
  SkewBrace brace = klein_cyclic_brace();

  PsiHom by_full = psi_hom(brace, full_subgroup(brace.add));
  CHECK(by_full.quot.group.n == 1);
  CHECK(by_full.kernel.size() == brace.order());

  SkewBrace trivial = trivial_brace(symmetric_group(3));
  AutGroup s3_auts = automorphism_group(trivial.add);
  for (const Subgroup& b : characteristic_subgroups(trivial.add, s3_auts)) {
    PsiHom psi = psi_hom(trivial, b, s3_auts);
    CHECK(psi.kernel.size() == trivial.order());  // identity lambda maps
    CHECK(psi.check_hom(trivial));
  }

  PsiHom by_zero = psi_hom(brace, trivial_subgroup(brace.add));
  CHECK(by_zero.check_hom(brace));
  // With B = 0 the induced maps are the lambda maps themselves.
  auto maps = lambda_table(brace);
  std::vector<int> identity = {0, 1, 2, 3};
  for (int a = 0; a < 4; ++a) {
    bool lambda_trivial = maps[a] == identity;
    CHECK(lambda_trivial == by_zero.kernel.contains(a));
  }
  // The kernel is normal in the multiplicative group.
  CHECK(is_subgroup(brace.mul, by_zero.kernel));
  CHECK_NOTHROW(quotient(brace.mul, by_zero.kernel));
}

TEST_CASE("every enumerated brace up to order 8 satisfies the lambda identities") {
  for (int order : {1, 2, 3, 4, 5, 6, 7, 8}) {
    for (const auto* entry : groups_of_order(order)) {
      for (const SkewBrace& b : enumerate_braces(entry->group)) {
        CHECK(check_lambda_hom(b).ok);
        CHECK(check_eq2_eq3(b).ok);
        for (int a = 0; a < b.order(); ++a) CHECK_NOTHROW(lambda(b, a));
      }
    }
  }
}
