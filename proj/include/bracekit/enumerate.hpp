#pragma once

#include <string>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/group.hpp"

namespace bracekit {

inline constexpr int kDefaultEnumerationBound = 12;
inline constexpr int kMaxEnumerationBound = 16;

/// An element (g, phi) of Hol(G) = G x| Aut(G); phi indexes into an AutGroup.
/// Composition: (g, phi) * (h, psi) = (g + phi(h), phi . psi).
struct HolomorphElement {
  int translation = 0;
  int automorphism = 0;
};

HolomorphElement holomorph_compose(const FiniteGroup& add, const AutGroup& auts,
                                   const HolomorphElement& x, const HolomorphElement& y);

/// Hol(add) as an explicit group, element (g, phi) at index g*|Aut| + phi.
FiniteGroup holomorph_group(const FiniteGroup& add, const AutGroup& auts,
                            int size_bound = 4096);

/// All skew braces with the given additive group, one per regular subgroup
/// of the holomorph, sorted by multiplicative table. Not reduced up to
/// isomorphism (see build_corpus for that).
std::vector<SkewBrace> enumerate_braces(const FiniteGroup& add,
                                        int order_bound = kDefaultEnumerationBound);

/// Carrier bijection preserving both operations, when one exists.
bool brace_isomorphic(const SkewBrace& a, const SkewBrace& b);

struct CorpusEntry {
  std::string id;  // "o{order}-g{group}-b{brace}"
  int order = 1;
  int group_index = 0;
  int brace_index = 0;
  std::string add_iso_class;
  std::string mul_iso_class;
  SkewBrace brace;
};

struct BraceCorpus {
  std::string generator;
  std::vector<int> orders;
  std::string timestamp;  // set at build time, preserved by load/save
  std::vector<CorpusEntry> entries;
};

/// Enumerates every additive group of every listed order, reduces to one
/// representative per brace isomorphism class, and assigns stable ids in
/// canonical (order, group index, multiplicative table) order.
BraceCorpus build_corpus(const std::vector<int>& orders,
                         int order_bound = kDefaultEnumerationBound, int jobs = 1);

}  // namespace bracekit
