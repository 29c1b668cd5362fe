#include "bracekit/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace bracekit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotLatin: return "NotLatin";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::NotCharacteristic: return "NotCharacteristic";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::OrderBoundExceeded: return "OrderBoundExceeded";
    case Errc::ArityTooLarge: return "ArityTooLarge";
    case Errc::AxiomFails: return "AxiomFails";
    case Errc::ClosureFails: return "ClosureFails";
    case Errc::HypothesisFails: return "HypothesisFails";
    case Errc::BadInput: return "BadInput";
    case Errc::Io: return "Io";
    case Errc::ValidationFailed: return "ValidationFailed";
  }
  return "Unknown";
}

int FiniteGroup::power(int a, long long e) const {
  if (e < 0) return power(inv[a], -e);
  int acc = 0;
  for (long long i = 0; i < e; ++i) acc = op(acc, a);
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int x = a;
  int k = 1;
  while (x != 0) {
    x = op(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

FiniteGroup validate_group(int n, const std::vector<int>& table,
                           std::vector<std::string> labels) {
  if (n <= 0 || table.size() != static_cast<std::size_t>(n) * n)
    throw Error(Errc::BadInput, "operation table must be n*n with n >= 1");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw Error(Errc::BadInput, "labels must be empty or of length n");
  for (int i = 0; i < n * n; ++i)
    if (table[i] < 0 || table[i] >= n)
      throw Error(Errc::BadInput, "table entry out of range at cell " + std::to_string(i));

  for (int a = 0; a < n; ++a) {
    if (table[a] != a)
      throw Error(Errc::NoIdentity,
                  "index 0 is not a left identity at " + std::to_string(a), {a});
    if (table[a * n] != a)
      throw Error(Errc::NoIdentity,
                  "index 0 is not a right identity at " + std::to_string(a), {a});
  }

  // Latin property: each row and column is a permutation.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = table[a * n + b];
      if (seen[v])
        throw Error(Errc::NotLatin, "row " + std::to_string(a) + " repeats value " +
                                        std::to_string(v), {a, b});
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int v = table[a * n + b];
      if (seen[v])
        throw Error(Errc::NotLatin, "column " + std::to_string(b) + " repeats value " +
                                        std::to_string(v), {a, b});
      seen[v] = 1;
    }
  }

  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a * n + b] == 0 && table[b * n + a] == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0)
      throw Error(Errc::NoInverse, "no two-sided inverse for " + std::to_string(a), {a});
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
          throw Error(Errc::NotAssociative,
                      "associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")",
                      {a, b, c});

  FiniteGroup g;
  g.n = n;
  g.table = table;
  g.inv = std::move(inv);
  g.labels = std::move(labels);
  return g;
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& rows,
                           std::vector<std::string> labels) {
  int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw Error(Errc::BadInput, "operation table must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_group(n, flat, std::move(labels));
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(Errc::BadInput, "cyclic group order must be >= 1");
  FiniteGroup g;
  g.n = n;
  g.table.resize(static_cast<std::size_t>(n) * n);
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    g.inv[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
  }
  return g;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  int n = g.n * h.n;
  FiniteGroup p;
  p.n = n;
  p.table.resize(static_cast<std::size_t>(n) * n);
  p.inv.resize(n);
  auto idx = [&](int x, int y) { return x * h.n + y; };
  for (int x1 = 0; x1 < g.n; ++x1)
    for (int y1 = 0; y1 < h.n; ++y1) {
      int a = idx(x1, y1);
      p.inv[a] = idx(g.inv[x1], h.inv[y1]);
      for (int x2 = 0; x2 < g.n; ++x2)
        for (int y2 = 0; y2 < h.n; ++y2)
          p.table[a * n + idx(x2, y2)] = idx(g.op(x1, x2), h.op(y1, y2));
    }
  return p;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{0}, g.n}; }

Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup s;
  s.parent_order = g.n;
  s.elements.resize(g.n);
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> member(g.n, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!member[x]) {
      member[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (int x : generators) {
    if (x < 0 || x >= g.n) throw Error(Errc::BadInput, "generator out of range");
    add(x);
  }
  // A finite set closed under products is a subgroup.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.op(elems[i], elems[j]));
      add(g.op(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems), g.n};
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_order != g.n) return false;
  if (h.elements.empty() || h.elements.front() != 0) return false;
  if (!std::is_sorted(h.elements.begin(), h.elements.end())) return false;
  if (g.n % h.size() != 0) return false;
  for (int a : h.elements) {
    if (a < 0 || a >= g.n || !h.contains(g.inv[a])) return false;
    for (int b : h.elements)
      if (!h.contains(g.op(a, b))) return false;
  }
  return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup s{std::move(elements), g.n};
  if (!is_subgroup(g, s))
    throw Error(Errc::BadInput, "element set is not a subgroup of the parent");
  return s;
}

bool subgroup_contains(const Subgroup& outer, const Subgroup& inner) {
  return std::includes(outer.elements.begin(), outer.elements.end(),
                       inner.elements.begin(), inner.elements.end());
}

FiniteGroup restrict_to_subgroup(const FiniteGroup& g, const Subgroup& h) {
  int m = h.size();
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < m; ++i) pos[h.elements[i]] = i;
  FiniteGroup r;
  r.n = m;
  r.table.resize(static_cast<std::size_t>(m) * m);
  r.inv.resize(m);
  for (int i = 0; i < m; ++i) {
    int gi = h.elements[i];
    int iv = pos[g.inv[gi]];
    if (iv < 0) throw Error(Errc::BadInput, "subset not closed under inverses");
    r.inv[i] = iv;
    for (int j = 0; j < m; ++j) {
      int v = pos[g.op(gi, h.elements[j])];
      if (v < 0) throw Error(Errc::BadInput, "subset not closed under the operation");
      r.table[i * m + j] = v;
    }
  }
  if (!g.labels.empty()) {
    r.labels.reserve(m);
    for (int e : h.elements) r.labels.push_back(g.labels[e]);
  }
  return r;
}

bool is_cyclic_subgroup(const FiniteGroup& g, const Subgroup& h) {
  for (int a : h.elements) {
    int x = 0;
    int count = 0;
    do {
      x = g.op(x, a);
      ++count;
    } while (x != 0);
    if (count == h.size()) return true;
  }
  return false;
}

int commutator(const FiniteGroup& g, int a, int b) {
  return g.op(g.op(g.op(g.inv[a], g.inv[b]), a), b);
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens;
  gens.reserve(static_cast<std::size_t>(a.size()) * b.size());
  for (int x : a.elements)
    for (int y : b.elements) gens.push_back(commutator(g, x, y));
  return subgroup_closure(g, gens);
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{full_subgroup(g)};
  for (;;) {
    Subgroup next = commutator_subgroup(g, series.back(), series.back());
    if (next.elements == series.back().elements) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> derived_length(const FiniteGroup& g) {
  auto series = derived_series(g);
  if (series.back().size() != 1) return std::nullopt;
  // series[i] is the (i+1)-th derived term; the last is trivial.
  return static_cast<int>(series.size()) - 1;
}

bool is_solvable(const FiniteGroup& g) { return derived_length(g).has_value(); }

bool is_nilpotent(const FiniteGroup& g) {
  Subgroup whole = full_subgroup(g);
  Subgroup gamma = whole;
  for (;;) {
    Subgroup next = commutator_subgroup(g, gamma, whole);
    if (next.size() == 1) return true;
    if (next.elements == gamma.elements) return false;
    gamma = std::move(next);
  }
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, full_subgroup(g)); }

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> elems;
  for (int a = 0; a < g.n; ++a) {
    bool ok = true;
    for (int b : h.elements)
      if (g.op(a, b) != g.op(b, a)) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(a);
  }
  return Subgroup{std::move(elems), g.n};
}

bool check_hom(const GroupHom& hom, const FiniteGroup& domain, const FiniteGroup& codomain) {
  if (hom.domain_order != domain.n || hom.codomain_order != codomain.n) return false;
  if (static_cast<int>(hom.image.size()) != domain.n) return false;
  if (hom.image[0] != 0) return false;
  for (int a = 0; a < domain.n; ++a)
    for (int b = 0; b < domain.n; ++b)
      if (hom.image[domain.op(a, b)] != codomain.op(hom.image[a], hom.image[b])) return false;
  return true;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& normal_subgroup) {
  const Subgroup& nsub = normal_subgroup;
  if (!is_subgroup(g, nsub))
    throw Error(Errc::BadInput, "quotient requires a subgroup of the parent");
  for (int a = 0; a < g.n; ++a)
    for (int x : nsub.elements)
      if (!nsub.contains(g.conjugate(x, a)))
        throw Error(Errc::NotNormal,
                    "subgroup is not normal: conjugate of " + std::to_string(x) + " by " +
                        std::to_string(a) + " escapes",
                    {a, x});

  // Left cosets; minimal element is the representative.
  std::vector<int> coset_rep(g.n, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.n; ++x) {
    if (coset_rep[x] >= 0) continue;
    int rep = x;  // ascending scan, so x is minimal in its coset
    for (int h : nsub.elements) coset_rep[g.op(x, h)] = rep;
    reps.push_back(rep);
  }
  int q = static_cast<int>(reps.size());
  std::vector<int> rep_index(g.n, -1);
  for (int i = 0; i < q; ++i) rep_index[reps[i]] = i;

  FiniteGroup grp;
  grp.n = q;
  grp.table.resize(static_cast<std::size_t>(q) * q);
  grp.inv.resize(q);
  for (int i = 0; i < q; ++i) {
    grp.inv[i] = rep_index[coset_rep[g.inv[reps[i]]]];
    for (int j = 0; j < q; ++j)
      grp.table[i * q + j] = rep_index[coset_rep[g.op(reps[i], reps[j])]];
  }

  GroupHom proj;
  proj.domain_order = g.n;
  proj.codomain_order = q;
  proj.image.resize(g.n);
  for (int x = 0; x < g.n; ++x) proj.image[x] = rep_index[coset_rep[x]];

  return QuotientResult{std::move(grp), std::move(proj), std::move(reps)};
}

int AutGroup::index_of(const std::vector<int>& perm) const {
  auto it = std::lower_bound(perms.begin(), perms.end(), perm);
  if (it == perms.end() || *it != perm) return -1;
  return static_cast<int>(it - perms.begin());
}

namespace {

// Greedy minimal generating sequence: repeatedly adjoin the least element
// outside the span of what we have.
std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup span = subgroup_closure(g, {});
  while (span.size() < g.n) {
    int pick = -1;
    for (int a = 0; a < g.n; ++a)
      if (!span.contains(a)) {
        pick = a;
        break;
      }
    gens.push_back(pick);
    std::vector<int> all = gens;
    span = subgroup_closure(g, all);
  }
  return gens;
}

// Extends a partial map of `dom` into `cod` by img[x] = y and closes it under
// products. Returns false on any homomorphism or injectivity conflict.
bool assign_and_close(const FiniteGroup& dom, const FiniteGroup& cod, std::vector<int>& img,
                      std::vector<char>& used, std::vector<int>& defined, int x, int y) {
  if (img[x] >= 0) return img[x] == y;
  if (used[y]) return false;
  img[x] = y;
  used[y] = 1;
  defined.push_back(x);
  std::size_t head = defined.size() - 1;
  while (head < defined.size()) {
    int a = defined[head++];
    std::size_t count = defined.size();
    for (std::size_t i = 0; i < count; ++i) {
      int b = defined[i];
      for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
        int z = dom.op(p, q);
        int w = cod.op(img[p], img[q]);
        if (img[z] >= 0) {
          if (img[z] != w) return false;
        } else {
          if (used[w]) return false;
          img[z] = w;
          used[w] = 1;
          defined.push_back(z);
        }
      }
    }
  }
  return true;
}

void iso_backtrack(const FiniteGroup& dom, const FiniteGroup& cod,
                   const std::vector<int>& gens, const std::vector<int>& dom_order,
                   const std::vector<int>& cod_order, std::size_t level, std::vector<int>& img,
                   std::vector<char>& used, std::vector<int>& defined,
                   const std::function<bool(const std::vector<int>&)>& emit, bool& stop) {
  if (stop) return;
  if (level == gens.size()) {
    if (!emit(img)) stop = true;
    return;
  }
  int gen = gens[level];
  if (img[gen] >= 0) {
    iso_backtrack(dom, cod, gens, dom_order, cod_order, level + 1, img, used, defined, emit,
                  stop);
    return;
  }
  for (int c = 0; c < cod.n; ++c) {
    if (used[c] || cod_order[c] != dom_order[gen]) continue;
    std::vector<int> img_copy = img;
    std::vector<char> used_copy = used;
    std::vector<int> defined_copy = defined;
    if (assign_and_close(dom, cod, img_copy, used_copy, defined_copy, gen, c)) {
      iso_backtrack(dom, cod, gens, dom_order, cod_order, level + 1, img_copy, used_copy,
                    defined_copy, emit, stop);
      if (stop) return;
    }
  }
}

std::vector<int> element_orders(const FiniteGroup& g) {
  std::vector<int> ord(g.n);
  for (int a = 0; a < g.n; ++a) ord[a] = g.element_order(a);
  return ord;
}

// Runs the generator-image search from dom to cod, calling emit for every
// bijective homomorphism found; emit returns false to stop the search.
void for_each_isomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                          const std::function<bool(const std::vector<int>&)>& emit) {
  if (dom.n != cod.n) return;
  std::vector<int> gens = generating_sequence(dom);
  std::vector<int> dom_ord = element_orders(dom);
  std::vector<int> cod_ord = element_orders(cod);
  {
    // Cheap obstruction: the order multisets must agree.
    std::vector<int> a = dom_ord, b = cod_ord;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  std::vector<int> img(dom.n, -1);
  std::vector<char> used(cod.n, 0);
  std::vector<int> defined;
  img[0] = 0;
  used[0] = 1;
  defined.push_back(0);
  bool stop = false;
  iso_backtrack(dom, cod, gens, dom_ord, cod_ord, 0, img, used, defined, emit, stop);
}

}  // namespace

AutGroup automorphism_group(const FiniteGroup& g, int order_bound) {
  if (g.n > order_bound)
    throw Error(Errc::OrderBoundExceeded,
                "group order " + std::to_string(g.n) + " exceeds bound " +
                    std::to_string(order_bound));
  AutGroup result;
  result.base_order = g.n;
  for_each_isomorphism(g, g, [&](const std::vector<int>& perm) {
    result.perms.push_back(perm);
    return true;
  });
  std::sort(result.perms.begin(), result.perms.end());
  return result;
}

FiniteGroup composition_table(const AutGroup& auts, int size_bound) {
  int m = auts.size();
  if (m > size_bound)
    throw Error(Errc::OrderBoundExceeded,
                "automorphism group of size " + std::to_string(m) +
                    " exceeds composition-table bound " + std::to_string(size_bound));
  int n = auts.base_order;
  FiniteGroup g;
  g.n = m;
  g.table.resize(static_cast<std::size_t>(m) * m);
  g.inv.resize(m, -1);
  std::vector<int> comp(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int x = 0; x < n; ++x) comp[x] = auts.perms[i][auts.perms[j][x]];
      int k = auts.index_of(comp);
      if (k < 0)
        throw Error(Errc::ValidationFailed, "automorphism set not closed under composition");
      g.table[i * m + j] = k;
      if (k == 0) g.inv[i] = j;
    }
  for (int i = 0; i < m; ++i)
    if (g.inv[i] < 0)
      throw Error(Errc::ValidationFailed, "automorphism set lacks an inverse");
  return g;
}

bool is_characteristic(const FiniteGroup& g, const Subgroup& h, const AutGroup& auts) {
  if (h.parent_order != g.n || auts.base_order != g.n)
    throw Error(Errc::BadInput, "subgroup/automorphisms do not match the group");
  std::vector<int> mapped(h.elements.size());
  for (const auto& perm : auts.perms) {
    for (std::size_t i = 0; i < h.elements.size(); ++i) mapped[i] = perm[h.elements[i]];
    std::sort(mapped.begin(), mapped.end());
    if (mapped != h.elements) return false;
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_bound) {
  if (g.n > order_bound)
    throw Error(Errc::OrderBoundExceeded,
                "group order " + std::to_string(g.n) + " exceeds bound " +
                    std::to_string(order_bound));
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  Subgroup triv = subgroup_closure(g, {});
  found.insert(triv.elements);
  frontier.push_back(triv.elements);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& base : frontier) {
      for (int x = 0; x < g.n; ++x) {
        if (std::binary_search(base.begin(), base.end(), x)) continue;
        std::vector<int> gens = base;
        gens.push_back(x);
        Subgroup k = subgroup_closure(g, gens);
        if (found.insert(k.elements).second) next.push_back(k.elements);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (const auto& elems : found) result.push_back(Subgroup{elems, g.n});
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return result;
}

std::vector<Subgroup> characteristic_subgroups(const FiniteGroup& g, const AutGroup& auts) {
  std::vector<Subgroup> result;
  for (auto& s : all_subgroups(g))
    if (is_characteristic(g, s, auts)) result.push_back(std::move(s));
  return result;
}

std::vector<Subgroup> characteristic_subgroups(const FiniteGroup& g, int order_bound) {
  AutGroup auts = automorphism_group(g, order_bound);
  return characteristic_subgroups(g, auts);
}

long long multiplicative_order(long long modulus, long long k) {
  if (modulus < 2) throw Error(Errc::BadInput, "modulus must be >= 2");
  k %= modulus;
  if (k < 0) k += modulus;
  if (std::gcd(k, modulus) != 1)
    throw Error(Errc::NotCoprime, std::to_string(k) + " is not coprime to " +
                                      std::to_string(modulus));
  long long x = k % modulus;
  long long t = 1;
  while (x != 1 % modulus) {
    x = (x * k) % modulus;
    ++t;
  }
  return t;
}

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b) {
  std::optional<std::vector<int>> found;
  for_each_isomorphism(a, b, [&](const std::vector<int>& perm) {
    found = perm;
    return false;  // first hit is enough
  });
  return found;
}

void for_each_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                const std::function<bool(const std::vector<int>&)>& emit) {
  for_each_isomorphism(a, b, emit);
}

namespace {

using Perm = std::vector<int>;

Perm compose_perm(const Perm& f, const Perm& g) {  // apply g first
  Perm r(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) r[x] = f[g[x]];
  return r;
}

Perm invert_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

// Closure of `gens` under composition, as a sorted element set.
std::set<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> elems{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Perm f = compose_perm(e, g);
        if (elems.insert(f).second) next.push_back(std::move(f));
      }
    frontier = std::move(next);
  }
  return elems;
}

std::vector<Perm> greedy_perm_generators(const std::vector<Perm>& elements,
                                         std::size_t degree) {
  std::vector<Perm> gens;
  std::set<Perm> span = perm_closure(gens, degree);
  for (const auto& e : elements) {
    if (span.size() == elements.size()) break;
    if (!span.count(e)) {
      gens.push_back(e);
      span = perm_closure(gens, degree);
    }
  }
  return gens;
}

// Derived subgroup of the group generated by `gens`: normal closure of the
// generator commutators, returned as a full element set. Alternates subgroup
// closure with conjugation by the ambient generators until stable.
std::set<Perm> perm_derived_subgroup(const std::vector<Perm>& gens, std::size_t degree) {
  std::vector<Perm> seed;
  for (const auto& a : gens)
    for (const auto& b : gens)
      seed.push_back(
          compose_perm(compose_perm(invert_perm(a), invert_perm(b)), compose_perm(a, b)));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<Perm> inv_gens;
  inv_gens.reserve(gens.size());
  for (const auto& g : gens) inv_gens.push_back(invert_perm(g));
  for (;;) {
    std::set<Perm> elems = perm_closure(seed, degree);
    std::vector<Perm> escaped;
    for (const auto& e : elems)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Perm c = compose_perm(compose_perm(inv_gens[i], e), gens[i]);
        if (!elems.count(c)) escaped.push_back(std::move(c));
      }
    if (escaped.empty()) return elems;
    seed.assign(elems.begin(), elems.end());
    seed.insert(seed.end(), escaped.begin(), escaped.end());
  }
}

}  // namespace

std::optional<int> perm_group_derived_length(const std::vector<std::vector<int>>& elements) {
  if (elements.empty()) throw Error(Errc::BadInput, "empty permutation group");
  std::size_t degree = elements[0].size();
  std::vector<Perm> current(elements.begin(), elements.end());
  int steps = 0;
  for (;;) {
    if (current.size() == 1) return steps;
    std::vector<Perm> gens = greedy_perm_generators(current, degree);
    std::set<Perm> derived = perm_derived_subgroup(gens, degree);
    if (derived.size() == current.size()) return std::nullopt;  // stabilized above trivial
    current.assign(derived.begin(), derived.end());
    ++steps;
  }
}

bool perm_group_derived_term_trivial(const std::vector<std::vector<int>>& elements, int k) {
  if (k < 1) throw Error(Errc::BadInput, "derived term index must be >= 1");
  if (elements.empty()) throw Error(Errc::BadInput, "empty permutation group");
  std::size_t degree = elements[0].size();
  std::vector<Perm> current(elements.begin(), elements.end());
  for (int i = 1; i < k; ++i) {
    if (current.size() == 1) return true;
    std::vector<Perm> gens = greedy_perm_generators(current, degree);
    std::set<Perm> derived = perm_derived_subgroup(gens, degree);
    if (derived.size() == current.size()) return false;
    current.assign(derived.begin(), derived.end());
  }
  return current.size() == 1;
}

}  // namespace bracekit
