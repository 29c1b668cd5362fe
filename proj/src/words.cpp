#include "bracekit/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace bracekit {

namespace {

void push_reduced(std::vector<std::pair<int, int>>& syllables, int var, int exp) {
  if (exp == 0) return;
  if (!syllables.empty() && syllables.back().first == var) {
    syllables.back().second += exp;
    if (syllables.back().second == 0) syllables.pop_back();
  } else {
    syllables.emplace_back(var, exp);
  }
}

}  // namespace

GroupWord GroupWord::variable(int index, int arity) {
  if (index < 0 || index >= arity) throw Error(Errc::BadInput, "variable index out of range");
  return GroupWord{arity, {{index, 1}}};
}

GroupWord GroupWord::inverse() const {
  GroupWord r;
  r.arity = arity;
  r.syllables.reserve(syllables.size());
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it)
    r.syllables.emplace_back(it->first, -it->second);
  return r;
}

GroupWord GroupWord::concat(const GroupWord& other) const {
  GroupWord r;
  r.arity = std::max(arity, other.arity);
  r.syllables = syllables;
  for (const auto& [v, e] : other.syllables) push_reduced(r.syllables, v, e);
  return r;
}

GroupWord GroupWord::commutator_of(const GroupWord& u, const GroupWord& v) {
  return u.inverse().concat(v.inverse()).concat(u).concat(v);
}

int evaluate(const GroupWord& w, const FiniteGroup& g, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != w.arity)
    throw Error(Errc::BadInput, "assignment length must equal the word arity");
  int acc = 0;
  for (const auto& [var, exp] : w.syllables) {
    int a = assignment[var];
    if (a < 0 || a >= g.n) throw Error(Errc::BadInput, "assignment value out of range");
    acc = g.op(acc, g.power(a, exp));
  }
  return acc;
}

Subgroup verbal_subgroup(const FiniteGroup& g, const WordSet& w, long long budget) {
  if (w.words.empty())
    throw Error(Errc::BadInput, "verbal subgroup requires a nonempty word set");
  std::vector<char> value_seen(g.n, 0);
  std::vector<int> values;
  for (const auto& word : w.words) {
    long long scan = 1;
    for (int i = 0; i < word.arity; ++i) {
      scan *= g.n;
      if (scan > budget)
        throw Error(Errc::ArityTooLarge,
                    "assignment scan of size |G|^" + std::to_string(word.arity) +
                        " exceeds the budget");
    }
    std::vector<int> assignment(word.arity, 0);
    for (long long tick = 0; tick < scan; ++tick) {
      int v = evaluate(word, g, assignment);
      if (!value_seen[v]) {
        value_seen[v] = 1;
        values.push_back(v);
      }
      for (int i = 0; i < word.arity; ++i) {
        if (++assignment[i] < g.n) break;
        assignment[i] = 0;
      }
    }
  }
  return subgroup_closure(g, values);
}

WordSet derived_word_set(int k) {
  if (k < 1) throw Error(Errc::BadInput, "derived word index must be >= 1");
  GroupWord w = GroupWord::variable(0, 1);
  for (int i = 1; i < k; ++i) {
    int half = w.arity;
    GroupWord shifted;
    shifted.arity = 2 * half;
    shifted.syllables.reserve(w.syllables.size());
    for (const auto& [v, e] : w.syllables) shifted.syllables.emplace_back(v + half, e);
    GroupWord left = w;
    left.arity = 2 * half;
    w = GroupWord::commutator_of(left, shifted);
  }
  return WordSet{{w}};
}

std::optional<int> derived_word_index(const WordSet& w) {
  if (w.words.size() != 1) return std::nullopt;
  for (int k = 1; k <= 8; ++k) {
    WordSet d = derived_word_set(k);
    if (d.words[0] == w.words[0]) return k;
    if (d.words[0].arity > w.words[0].arity) break;
  }
  return std::nullopt;
}

namespace {

struct WordParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::BadInput,
                "word syntax error at offset " + std::to_string(pos) + ": " + what);
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected an integer");
    return std::stoi(text.substr(start, pos - start));
  }

  GroupWord parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("expected a variable, '[' or '('");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      GroupWord w = parse_word_expr();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (c == '[') {
      ++pos;
      GroupWord u = parse_word_expr();
      if (!eat(',')) fail("expected ',' inside commutator");
      GroupWord v = parse_word_expr();
      if (!eat(']')) fail("expected ']'");
      return GroupWord::commutator_of(u, v);
    }
    if (c == 'x' || c == 'X') {
      ++pos;
      int index = parse_int();
      if (index < 1) fail("variables are numbered from x1");
      return GroupWord::variable(index - 1, index);
    }
    fail("unexpected character");
  }

  GroupWord parse_factor() {
    GroupWord w = parse_atom();
    skip_ws();
    while (pos < text.size() && text[pos] == '^') {
      ++pos;
      int e = parse_int();
      if (e == 0) fail("exponent must be nonzero");
      GroupWord powered{w.arity, {}};
      GroupWord base = e > 0 ? w : w.inverse();
      for (int i = 0; i < std::abs(e); ++i) powered = powered.concat(base);
      w = std::move(powered);
      skip_ws();
    }
    return w;
  }

  GroupWord parse_word_expr() {
    GroupWord w = parse_factor();
    skip_ws();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      w = w.concat(parse_factor());
      skip_ws();
    }
    return w;
  }
};

}  // namespace

GroupWord parse_word(const std::string& text) {
  WordParser p{text};
  GroupWord w = p.parse_word_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return w;
}

std::string word_to_string(const GroupWord& w) {
  if (w.syllables.empty()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [v, e] : w.syllables) {
    if (!first) out += "*";
    first = false;
    out += "x" + std::to_string(v + 1);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace bracekit
