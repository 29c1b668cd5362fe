#pragma once

#include <string>
#include <vector>

#include "bracekit/group.hpp"

namespace bracekit {

inline constexpr int kCatalogMaxOrder = 16;

struct NamedGroup {
  std::string name;
  int order = 1;
  int index_in_order = 0;  // position among groups of the same order
  FiniteGroup group;
};

/// Every isomorphism type of order 1..16, in a fixed canonical order
/// (per order: abelian types first, then the nonabelian ones).
const std::vector<NamedGroup>& small_groups_catalog();

/// Catalog entries of one order, in catalog order.
std::vector<const NamedGroup*> groups_of_order(int n);

/// Catalog entry isomorphic to g, or nullptr (always found for |g| <= 16).
const NamedGroup* identify_group(const FiniteGroup& g);

// Construction helpers. All place the identity at index 0.
FiniteGroup dihedral_group(int m);                 // order 2m, m >= 1
FiniteGroup dicyclic_group(int m);                 // order 4m, m >= 1 (m = 2 gives Q8)
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action);
FiniteGroup semidirect_cyclic(int n, int h, int k);  // Z_n x| Z_h, x -> k*x action
FiniteGroup symmetric_group(int m);                // m <= 5; labels carry the images
FiniteGroup alternating_group(int m);              // m <= 5

}  // namespace bracekit
