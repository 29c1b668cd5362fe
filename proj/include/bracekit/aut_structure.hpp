#pragma once

#include <vector>

#include "bracekit/group.hpp"

namespace bracekit {

/// Invariant-factor form of a finite abelian group: d1 | d2 | ... | dk with
/// every di >= 2. The empty list is the trivial group.
struct AbelianInvariants {
  std::vector<long long> factors;

  bool is_trivial() const { return factors.empty(); }
  bool is_cyclic() const { return factors.size() <= 1; }
  long long order() const;
  bool operator==(const AbelianInvariants&) const = default;
};

/// Invariant factors of Aut(Z_n), from the prime-power decomposition of n:
/// odd p^a contributes a cyclic factor of order p^{a-1}(p-1); 2^a contributes
/// nothing for a = 1, Z2 for a = 2, and Z2 x Z_{2^{a-2}} for a >= 3.
AbelianInvariants aut_cyclic_invariants(long long n);

/// Invariant factors of an abelian group, by repeatedly splitting off a
/// cyclic direct factor of maximal order. Throws Error(NotAbelian).
AbelianInvariants abelian_invariants_of(const FiniteGroup& g);

/// |Aut(Z2 x Z_{2^n})|: 6 for n = 1, else 2^{n+1}.
long long aut_order_z2_x_z2n(int n);

}  // namespace bracekit
