#include "bracekit/brace.hpp"

#include <algorithm>

namespace bracekit {

namespace {

void check_defining_law(const FiniteGroup& add, const FiniteGroup& mul) {
  int n = add.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = mul.op(a, add.op(b, c));
        int rhs = add.op(add.op(mul.op(a, b), add.inv[a]), mul.op(a, c));
        if (lhs != rhs)
          throw Error(Errc::AxiomFails,
                      "defining law fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")",
                      {a, b, c});
      }
}

}  // namespace

SkewBrace validate_skew_brace(int n, const std::vector<int>& add_table,
                              const std::vector<int>& mul_table) {
  FiniteGroup add = validate_group(n, add_table);
  FiniteGroup mul = validate_group(n, mul_table);
  check_defining_law(add, mul);
  return SkewBrace{std::move(add), std::move(mul)};
}

SkewBrace validate_skew_brace(const FiniteGroup& add, const FiniteGroup& mul) {
  if (add.n != mul.n)
    throw Error(Errc::BadInput, "additive and multiplicative groups differ in order");
  FiniteGroup a = validate_group(add.n, add.table, add.labels);
  FiniteGroup m = validate_group(mul.n, mul.table, mul.labels);
  check_defining_law(a, m);
  return SkewBrace{std::move(a), std::move(m)};
}

SkewBrace trivial_brace(const FiniteGroup& g) {
  FiniteGroup checked = validate_group(g.n, g.table, g.labels);
  return SkewBrace{checked, checked};
}

LambdaMap lambda(const SkewBrace& brace, int a) {
  int n = brace.order();
  if (a < 0 || a >= n) throw Error(Errc::BadInput, "lambda actor out of range");
  LambdaMap map;
  map.actor = a;
  map.perm.resize(n);
  for (int x = 0; x < n; ++x) map.perm[x] = brace.addop(brace.neg(a), brace.mulop(a, x));
  // Consistency assertion: the map must be an additive automorphism.
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    if (seen[map.perm[x]])
      throw Error(Errc::ValidationFailed, "lambda map is not a bijection");
    seen[map.perm[x]] = 1;
  }
  if (map.perm[0] != 0)
    throw Error(Errc::ValidationFailed, "lambda map does not fix the identity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map.perm[brace.addop(x, y)] != brace.addop(map.perm[x], map.perm[y]))
        throw Error(Errc::ValidationFailed, "lambda map is not additive");
  return map;
}

std::vector<std::vector<int>> lambda_table(const SkewBrace& brace) {
  std::vector<std::vector<int>> maps;
  maps.reserve(brace.order());
  for (int a = 0; a < brace.order(); ++a) maps.push_back(lambda(brace, a).perm);
  return maps;
}

namespace {

// Lambda maps without the automorphism assertion, so the checks below can
// report witnesses on corrupted inputs instead of throwing.
std::vector<std::vector<int>> raw_lambda_table(const SkewBrace& brace) {
  int n = brace.order();
  std::vector<std::vector<int>> maps(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      maps[a][x] = brace.addop(brace.neg(a), brace.mulop(a, x));
  return maps;
}

}  // namespace

CheckResult check_lambda_hom(const SkewBrace& brace) {
  int n = brace.order();
  std::vector<std::vector<int>> maps = raw_lambda_table(brace);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& composed = maps[brace.mulop(a, b)];
      for (int x = 0; x < n; ++x)
        if (composed[x] != maps[a][maps[b][x]]) return CheckResult{false, {a, b, x}};
    }
  return CheckResult{};
}

CheckResult check_eq2_eq3(const SkewBrace& brace) {
  int n = brace.order();
  std::vector<std::vector<int>> maps = raw_lambda_table(brace);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (brace.mulop(a, b) != brace.addop(a, maps[a][b]))
        return CheckResult{false, {2, a, b}};
  for (int a = 0; a < n; ++a) {
    int c = brace.minv(a);
    if (c != brace.neg(maps[c][a])) return CheckResult{false, {3, a}};
  }
  return CheckResult{};
}

int add_commutator(const SkewBrace& brace, int a, int b) {
  const FiniteGroup& g = brace.add;
  return g.op(g.op(g.op(g.inv[a], g.inv[b]), a), b);
}

int mul_commutator(const SkewBrace& brace, int a, int b) {
  const FiniteGroup& g = brace.mul;
  return g.op(g.op(g.op(g.inv[a], g.inv[b]), a), b);
}

SkewBrace subbrace_from_characteristic(const SkewBrace& brace, const Subgroup& b,
                                       const AutGroup& add_auts) {
  if (!is_subgroup(brace.add, b))
    throw Error(Errc::BadInput, "not a subgroup of the additive group");
  if (!is_characteristic(brace.add, b, add_auts))
    throw Error(Errc::NotCharacteristic, "subgroup is not characteristic in the additive group");
  for (int x : b.elements) {
    if (!b.contains(brace.minv(x)))
      throw Error(Errc::ClosureFails,
                  "multiplicative inverse of " + std::to_string(x) + " escapes", {x});
    for (int y : b.elements)
      if (!b.contains(brace.mulop(x, y)))
        throw Error(Errc::ClosureFails,
                    "product " + std::to_string(x) + " (*) " + std::to_string(y) + " escapes",
                    {x, y});
  }
  int m = b.size();
  std::vector<int> pos(brace.order(), -1);
  for (int i = 0; i < m; ++i) pos[b.elements[i]] = i;
  std::vector<int> add_table(static_cast<std::size_t>(m) * m);
  std::vector<int> mul_table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add_table[i * m + j] = pos[brace.addop(b.elements[i], b.elements[j])];
      mul_table[i * m + j] = pos[brace.mulop(b.elements[i], b.elements[j])];
    }
  return validate_skew_brace(m, add_table, mul_table);
}

SkewBrace subbrace_from_characteristic(const SkewBrace& brace, const Subgroup& b) {
  return subbrace_from_characteristic(brace, b, automorphism_group(brace.add));
}

bool PsiHom::check_hom(const SkewBrace& brace) const {
  int n = brace.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& pa = quotient_auts.perms[aut_index[a]];
      const auto& pb = quotient_auts.perms[aut_index[b]];
      const auto& pab = quotient_auts.perms[aut_index[brace.mulop(a, b)]];
      for (int x = 0; x < quot.group.n; ++x)
        if (pab[x] != pa[pb[x]]) return false;
    }
  return true;
}

PsiHom psi_hom(const SkewBrace& brace, const Subgroup& b, const AutGroup& add_auts) {
  if (!is_subgroup(brace.add, b))
    throw Error(Errc::BadInput, "not a subgroup of the additive group");
  if (!is_characteristic(brace.add, b, add_auts))
    throw Error(Errc::NotCharacteristic, "subgroup is not characteristic in the additive group");

  PsiHom psi;
  psi.char_subgroup = b;
  psi.quot = quotient(brace.add, b);
  FiniteGroup& q = psi.quot.group;
  psi.quotient_auts = automorphism_group(q);

  int n = brace.order();
  psi.aut_index.resize(n);
  std::vector<int> induced(q.n);
  for (int a = 0; a < n; ++a) {
    LambdaMap lm = lambda(brace, a);
    for (int i = 0; i < q.n; ++i) induced[i] = psi.quot.projection.image[lm.perm[psi.quot.reps[i]]];
    int idx = psi.quotient_auts.index_of(induced);
    if (idx < 0)
      throw Error(Errc::ValidationFailed,
                  "induced lambda map is not an automorphism of the quotient");
    psi.aut_index[a] = idx;
  }

  std::vector<int> kernel_elems;
  for (int a = 0; a < n; ++a)
    if (psi.aut_index[a] == 0) kernel_elems.push_back(a);  // perms[0] is the identity
  psi.kernel = Subgroup{std::move(kernel_elems), n};
  return psi;
}

PsiHom psi_hom(const SkewBrace& brace, const Subgroup& b) {
  return psi_hom(brace, b, automorphism_group(brace.add));
}

}  // namespace bracekit
