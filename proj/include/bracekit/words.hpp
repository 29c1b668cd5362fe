#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracekit/group.hpp"

namespace bracekit {

inline constexpr long long kDefaultScanBudget = 1LL << 22;

/// A freely reduced word in free-group generators x1..x_arity.
/// Syllables are (variable index, nonzero exponent) with no two adjacent
/// syllables sharing a variable.
struct GroupWord {
  int arity = 0;
  std::vector<std::pair<int, int>> syllables;

  static GroupWord variable(int index, int arity);
  GroupWord inverse() const;
  GroupWord concat(const GroupWord& other) const;
  /// u^-1 v^-1 u v.
  static GroupWord commutator_of(const GroupWord& u, const GroupWord& v);
  bool operator==(const GroupWord&) const = default;
};

struct WordSet {
  std::vector<GroupWord> words;
};

/// Substitutes assignment[i] for x_{i+1} and multiplies out in g.
int evaluate(const GroupWord& w, const FiniteGroup& g, const std::vector<int>& assignment);

/// Subgroup generated by all values of all words of W over g, by exhaustive
/// assignment scan. Throws Error(ArityTooLarge) when |g|^arity exceeds budget.
Subgroup verbal_subgroup(const FiniteGroup& g, const WordSet& w,
                         long long budget = kDefaultScanBudget);

/// The single iterated-commutator word whose verbal subgroup is the k-th
/// derived term: d_1 = x1, d_{k+1} = [d_k(first half), d_k(second half)].
WordSet derived_word_set(int k);

/// k such that w equals derived_word_set(k), if any (checked up to arity cap).
std::optional<int> derived_word_index(const WordSet& w);

/// Parses the CLI word syntax: variables x1..xn, * for concatenation,
/// ^<integer> for powers, [u,v] for commutators, parentheses for grouping.
GroupWord parse_word(const std::string& text);
std::string word_to_string(const GroupWord& w);

}  // namespace bracekit
