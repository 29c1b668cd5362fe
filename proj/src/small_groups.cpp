#include "bracekit/small_groups.hpp"

#include <algorithm>
#include <numeric>

namespace bracekit {

FiniteGroup dihedral_group(int m) {
  if (m < 1) throw Error(Errc::BadInput, "dihedral parameter must be >= 1");
  // Elements r^i s^j with index i + m*j; s r = r^-1 s.
  int n = 2 * m;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](int i, int j) { return ((i % m + m) % m) + m * j; };
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          table[idx(i1, j1) * n + idx(i2, j2)] = idx(i, j1 ^ j2);
        }
  return validate_group(n, table);
}

FiniteGroup dicyclic_group(int m) {
  if (m < 1) throw Error(Errc::BadInput, "dicyclic parameter must be >= 1");
  // Elements a^i b^j, i < 2m, j < 2, index i + 2m*j; b a = a^-1 b, b^2 = a^m.
  int n = 4 * m;
  int am = 2 * m;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](int i, int j) { return ((i % am + am) % am) + am * j; };
  for (int i1 = 0; i1 < am; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < am; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          int j = j1 + j2;
          if (j == 2) {
            i += m;
            j = 0;
          }
          table[idx(i1, j1) * n + idx(i2, j2)] = idx(i, j);
        }
  return validate_group(n, table);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action) {
  if (static_cast<int>(action.size()) != h.n)
    throw Error(Errc::BadInput, "semidirect action must assign a map to every element of H");
  // Each action[t] must be an automorphism of N and t -> action[t] a homomorphism.
  for (int t = 0; t < h.n; ++t) {
    const auto& p = action[t];
    if (static_cast<int>(p.size()) != n.n || p[0] != 0)
      throw Error(Errc::BadInput, "semidirect action entry is not identity-preserving");
    for (int a = 0; a < n.n; ++a)
      for (int b = 0; b < n.n; ++b)
        if (p[n.op(a, b)] != n.op(p[a], p[b]))
          throw Error(Errc::BadInput, "semidirect action entry is not an automorphism");
  }
  for (int t1 = 0; t1 < h.n; ++t1)
    for (int t2 = 0; t2 < h.n; ++t2)
      for (int a = 0; a < n.n; ++a)
        if (action[h.op(t1, t2)][a] != action[t1][action[t2][a]])
          throw Error(Errc::BadInput, "semidirect action is not a homomorphism");

  int order = n.n * h.n;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  auto idx = [&](int a, int t) { return a * h.n + t; };
  for (int a1 = 0; a1 < n.n; ++a1)
    for (int t1 = 0; t1 < h.n; ++t1)
      for (int a2 = 0; a2 < n.n; ++a2)
        for (int t2 = 0; t2 < h.n; ++t2)
          table[idx(a1, t1) * order + idx(a2, t2)] =
              idx(n.op(a1, action[t1][a2]), h.op(t1, t2));
  return validate_group(order, table);
}

FiniteGroup semidirect_cyclic(int n, int h, int k) {
  FiniteGroup zn = cyclic_group(n);
  FiniteGroup zh = cyclic_group(h);
  std::vector<std::vector<int>> action(h, std::vector<int>(n));
  long long mult = 1;
  for (int t = 0; t < h; ++t) {
    for (int a = 0; a < n; ++a) action[t][a] = static_cast<int>((mult * a) % n);
    mult = (mult * k) % n;
  }
  return semidirect_product(zn, zh, action);
}

namespace {

std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return perms;  // lexicographic; identity first
}

bool perm_is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup symmetric_group(int m) {
  if (m < 1 || m > 5) throw Error(Errc::BadInput, "symmetric_group supports 1 <= m <= 5");
  auto perms = all_permutations(m);
  int n = static_cast<int>(perms.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  auto rank = [&](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<int> prod(m);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // Product convention: (a*b)(x) = b(a(x)), i.e. apply a first.
      for (int x = 0; x < m; ++x) prod[x] = perms[b][perms[a][x]];
      table[a * n + b] = rank(prod);
    }
    std::string label;
    for (int x = 0; x < m; ++x) label += static_cast<char>('0' + perms[a][x]);
    labels[a] = label;
  }
  return validate_group(n, table, std::move(labels));
}

FiniteGroup alternating_group(int m) {
  FiniteGroup sym = symmetric_group(m);
  auto perms = all_permutations(m);
  std::vector<int> evens;
  for (int a = 0; a < sym.n; ++a)
    if (perm_is_even(perms[a])) evens.push_back(a);
  return restrict_to_subgroup(sym, make_subgroup(sym, evens));
}

namespace {

std::vector<NamedGroup> build_catalog() {
  std::vector<NamedGroup> catalog;
  auto add = [&](const std::string& name, FiniteGroup g) {
    NamedGroup entry;
    entry.name = name;
    entry.order = g.n;
    entry.group = std::move(g);
    catalog.push_back(std::move(entry));
  };

  auto zn = [](int k) { return cyclic_group(k); };
  auto dp = [](const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b); };

  add("Z1", zn(1));
  add("Z2", zn(2));
  add("Z3", zn(3));
  add("Z4", zn(4));
  add("Z2xZ2", dp(zn(2), zn(2)));
  add("Z5", zn(5));
  add("Z6", zn(6));
  add("S3", dihedral_group(3));
  add("Z7", zn(7));
  add("Z8", zn(8));
  add("Z4xZ2", dp(zn(4), zn(2)));
  add("Z2xZ2xZ2", dp(dp(zn(2), zn(2)), zn(2)));
  add("D4", dihedral_group(4));
  add("Q8", dicyclic_group(2));
  add("Z9", zn(9));
  add("Z3xZ3", dp(zn(3), zn(3)));
  add("Z10", zn(10));
  add("D5", dihedral_group(5));
  add("Z11", zn(11));
  add("Z12", zn(12));
  add("Z6xZ2", dp(zn(6), zn(2)));
  add("D6", dihedral_group(6));
  {
    // A4 = (Z2 x Z2) x| Z3, the 3-element rotation of the involutions.
    FiniteGroup klein = dp(zn(2), zn(2));
    std::vector<int> rot = {0, 2, 3, 1};  // 1 -> 2 -> 3 -> 1
    std::vector<std::vector<int>> action(3);
    action[0] = {0, 1, 2, 3};
    action[1] = rot;
    action[2] = {0, 3, 1, 2};
    add("A4", semidirect_product(klein, zn(3), action));
  }
  add("Dic3", dicyclic_group(3));
  add("Z13", zn(13));
  add("Z14", zn(14));
  add("D7", dihedral_group(7));
  add("Z15", zn(15));
  add("Z16", zn(16));
  add("Z8xZ2", dp(zn(8), zn(2)));
  add("Z4xZ4", dp(zn(4), zn(4)));
  add("Z4xZ2xZ2", dp(dp(zn(4), zn(2)), zn(2)));
  add("Z2xZ2xZ2xZ2", dp(dp(dp(zn(2), zn(2)), zn(2)), zn(2)));
  add("D8", dihedral_group(8));
  add("SD16", semidirect_cyclic(8, 2, 3));
  add("Q16", dicyclic_group(4));
  add("M16", semidirect_cyclic(8, 2, 5));
  add("Z4:Z4", semidirect_cyclic(4, 4, 3));
  {
    // (Z2 x Z2) x| Z4, the generator of Z4 swapping the two factors.
    FiniteGroup klein = dp(zn(2), zn(2));
    std::vector<int> swap = {0, 2, 1, 3};
    std::vector<std::vector<int>> action(4);
    action[0] = {0, 1, 2, 3};
    action[1] = swap;
    action[2] = {0, 1, 2, 3};
    action[3] = swap;
    add("(Z2xZ2):Z4", semidirect_product(klein, zn(4), action));
  }
  add("D4xZ2", dp(dihedral_group(4), zn(2)));
  add("Q8xZ2", dp(dicyclic_group(2), zn(2)));
  {
    // Central product D4 o Z4: quotient of D4 x Z4 by the diagonal central
    // involution (r^2, 2).
    FiniteGroup big = dp(dihedral_group(4), zn(4));
    Subgroup diag = subgroup_closure(big, {2 * 4 + 2});
    add("D4oZ4", quotient(big, diag).group);
  }

  // Assign per-order indices in catalog order.
  std::stable_sort(catalog.begin(), catalog.end(),
                   [](const NamedGroup& a, const NamedGroup& b) { return a.order < b.order; });
  int prev_order = 0;
  int counter = 0;
  for (auto& entry : catalog) {
    if (entry.order != prev_order) {
      prev_order = entry.order;
      counter = 0;
    }
    entry.index_in_order = counter++;
  }
  return catalog;
}

}  // namespace

const std::vector<NamedGroup>& small_groups_catalog() {
  static const std::vector<NamedGroup> catalog = build_catalog();
  return catalog;
}

std::vector<const NamedGroup*> groups_of_order(int n) {
  std::vector<const NamedGroup*> result;
  for (const auto& entry : small_groups_catalog())
    if (entry.order == n) result.push_back(&entry);
  return result;
}

const NamedGroup* identify_group(const FiniteGroup& g) {
  for (const auto& entry : small_groups_catalog()) {
    if (entry.order != g.n) continue;
    if (find_group_isomorphism(entry.group, g).has_value()) return &entry;
  }
  return nullptr;
}

}  // namespace bracekit
