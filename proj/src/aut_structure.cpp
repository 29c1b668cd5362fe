#include "bracekit/aut_structure.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bracekit {

long long AbelianInvariants::order() const {
  long long o = 1;
  for (long long f : factors) o *= f;
  return o;
}

namespace {

std::map<long long, int> factorize(long long n) {
  std::map<long long, int> factors;
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++factors[p];
      n /= p;
    }
  if (n > 1) ++factors[n];
  return factors;
}

// Combines a list of cyclic factor orders into invariant-factor form by
// aligning, per prime, the largest prime-power parts with each other.
AbelianInvariants combine_cyclic_factors(const std::vector<long long>& cyclic_orders) {
  std::map<long long, std::vector<int>> partitions;  // prime -> exponents, desc
  for (long long q : cyclic_orders)
    for (auto [p, e] : factorize(q)) partitions[p].push_back(e);
  std::size_t width = 0;
  for (auto& [p, exps] : partitions) {
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    width = std::max(width, exps.size());
  }
  std::vector<long long> desc(width, 1);
  for (const auto& [p, exps] : partitions)
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (int j = 0; j < exps[i]; ++j) desc[i] *= p;
  AbelianInvariants inv;
  inv.factors.assign(desc.rbegin(), desc.rend());
  return inv;
}

}  // namespace

AbelianInvariants aut_cyclic_invariants(long long n) {
  if (n < 1) throw Error(Errc::BadInput, "cyclic group order must be >= 1");
  std::vector<long long> cyclic_parts;
  for (auto [p, e] : factorize(n)) {
    if (p == 2) {
      if (e == 2) cyclic_parts.push_back(2);
      if (e >= 3) {
        cyclic_parts.push_back(2);
        cyclic_parts.push_back(1LL << (e - 2));
      }
      // e == 1 contributes the trivial group
    } else {
      long long order = p - 1;
      for (int i = 1; i < e; ++i) order *= p;
      cyclic_parts.push_back(order);
    }
  }
  return combine_cyclic_factors(cyclic_parts);
}

AbelianInvariants abelian_invariants_of(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(Errc::NotAbelian, "group is not abelian");
  AbelianInvariants inv;
  // In a finite abelian group a cyclic subgroup of maximal order is a direct
  // factor, and the complement is the quotient by it.
  FiniteGroup current = g;
  while (current.n > 1) {
    int best = 1;
    int best_order = 1;
    for (int a = 1; a < current.n; ++a) {
      int o = current.element_order(a);
      if (o > best_order) {
        best_order = o;
        best = a;
      }
    }
    inv.factors.push_back(best_order);
    current = quotient(current, subgroup_closure(current, {best})).group;
  }
  std::reverse(inv.factors.begin(), inv.factors.end());
  return inv;
}

long long aut_order_z2_x_z2n(int n) {
  if (n < 1) throw Error(Errc::BadInput, "parameter must be >= 1");
  if (n == 1) return 6;
  return 1LL << (n + 1);
}

}  // namespace bracekit
