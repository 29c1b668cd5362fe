#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bracekit/errors.hpp"

namespace bracekit {

inline constexpr int kDefaultOrderBound = 64;

/// A finite group given by its full operation table. The identity is always
/// carrier index 0; constructors relabel as needed to keep that invariant.
struct FiniteGroup {
  int n = 1;
  std::vector<int> table;            // row-major, table[a*n + b] = a*b
  std::vector<int> inv;              // inv[a]*a = a*inv[a] = 0
  std::vector<std::string> labels;   // optional display names, empty or size n

  int op(int a, int b) const { return table[a * n + b]; }
  int inverse(int a) const { return inv[a]; }
  /// a conjugated by g, i.e. g^{-1} a g.
  int conjugate(int a, int g) const { return op(op(inv[g], a), g); }
  int power(int a, long long e) const;
  int element_order(int a) const;
  bool is_abelian() const;
  bool commute(int a, int b) const { return op(a, b) == op(b, a); }
};

/// Checks identity-at-0, Latin property, inverses and associativity.
/// Throws Error with a witness on the first violation found in scan order.
FiniteGroup validate_group(int n, const std::vector<int>& table,
                           std::vector<std::string> labels = {});
FiniteGroup validate_group(const std::vector<std::vector<int>>& rows,
                           std::vector<std::string> labels = {});

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// A subset of a parent group's carrier, sorted ascending. Binds to the
/// parent by order only; callers keep the (group, subgroup) pair together.
struct Subgroup {
  std::vector<int> elements;  // sorted, contains 0
  int parent_order = 1;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  bool operator==(const Subgroup&) const = default;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
/// Subgroup generated by `generators` (breadth-first products).
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators);
/// Validates closure, identity membership and the Lagrange condition.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool subgroup_contains(const Subgroup& outer, const Subgroup& inner);
/// The subgroup relabeled as a standalone group (element i of the result is
/// elements[i] of the parent; 0 stays 0).
FiniteGroup restrict_to_subgroup(const FiniteGroup& g, const Subgroup& h);
/// True iff some element of h generates all of h.
bool is_cyclic_subgroup(const FiniteGroup& g, const Subgroup& h);

int commutator(const FiniteGroup& g, int a, int b);
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Derived series starting at the whole group, strictly decreasing, with the
/// stabilized term included exactly once at the end.
std::vector<Subgroup> derived_series(const FiniteGroup& g);
/// Smallest k with the (k+1)-th derived term trivial; nullopt when the
/// series stabilizes above the trivial subgroup (not solvable).
std::optional<int> derived_length(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
/// Lower central series test.
bool is_nilpotent(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);

/// A homomorphism between groups identified by their orders; image[a] is the
/// index of the image of a in the codomain.
struct GroupHom {
  int domain_order = 1;
  int codomain_order = 1;
  std::vector<int> image;
};

bool check_hom(const GroupHom& hom, const FiniteGroup& domain, const FiniteGroup& codomain);

struct QuotientResult {
  FiniteGroup group;        // on minimal coset representatives, N -> 0
  GroupHom projection;      // carrier index -> quotient index
  std::vector<int> reps;    // representative (minimal element) per quotient index
};

/// Throws Error(NotNormal) with witness {a, n} when a^{-1} n a leaves N.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& normal_subgroup);

/// The full automorphism group as explicit permutations of the carrier,
/// sorted lexicographically (so the identity is perms[0]).
struct AutGroup {
  int base_order = 1;
  std::vector<std::vector<int>> perms;

  int size() const { return static_cast<int>(perms.size()); }
  /// Index of a permutation in perms, or -1.
  int index_of(const std::vector<int>& perm) const;
};

/// Generator-image backtracking over a minimal generating sequence.
AutGroup automorphism_group(const FiniteGroup& g, int order_bound = kDefaultOrderBound);

/// Realizes an automorphism group as a FiniteGroup under composition
/// (entry (i,j) is perms[i] applied after perms[j]).
FiniteGroup composition_table(const AutGroup& auts, int size_bound = 4096);

bool is_characteristic(const FiniteGroup& g, const Subgroup& h, const AutGroup& auts);

/// The full subgroup lattice, sorted by (size, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_bound = kDefaultOrderBound);
std::vector<Subgroup> characteristic_subgroups(const FiniteGroup& g,
                                               int order_bound = kDefaultOrderBound);
std::vector<Subgroup> characteristic_subgroups(const FiniteGroup& g, const AutGroup& auts);

/// Least t >= 1 with k^t = 1 (mod modulus). Throws Error(NotCoprime).
long long multiplicative_order(long long modulus, long long k);

/// Carrier bijection a -> b preserving the operation, when one exists.
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b);

/// Calls emit for every isomorphism a -> b (generator-image backtracking);
/// emit returns false to stop the search early.
void for_each_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                const std::function<bool(const std::vector<int>&)>& emit);

// Derived-series machinery on a permutation group given by its element list.
// Used for automorphism groups too large to realize as composition tables.
std::optional<int> perm_group_derived_length(const std::vector<std::vector<int>>& elements);
/// True iff the k-th derived term (1-based, term 1 = whole group) is trivial.
bool perm_group_derived_term_trivial(const std::vector<std::vector<int>>& elements, int k);

}  // namespace bracekit
