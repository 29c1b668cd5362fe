#include "bracekit/verify.hpp"

#include <algorithm>

namespace bracekit {

const char* statement_name(StatementId id) {
  switch (id) {
    case StatementId::Prop31: return "prop31";
    case StatementId::Cor32: return "cor32";
    case StatementId::Prop44: return "prop44";
    case StatementId::Cor45: return "cor45";
    case StatementId::Thm51: return "thm51";
    case StatementId::Thm52: return "thm52";
    case StatementId::Lemma21: return "lemma21";
  }
  return "?";
}

std::optional<StatementId> statement_from_name(const std::string& name) {
  for (StatementId id : {StatementId::Prop31, StatementId::Cor32, StatementId::Prop44,
                         StatementId::Cor45, StatementId::Thm51, StatementId::Thm52,
                         StatementId::Lemma21})
    if (name == statement_name(id)) return id;
  return std::nullopt;
}

Subgroup derived_term(const FiniteGroup& g, int j) {
  if (j < 1) throw Error(Errc::BadInput, "derived term index must be >= 1");
  auto series = derived_series(g);
  std::size_t idx = std::min<std::size_t>(j - 1, series.size() - 1);
  return series[idx];
}

std::optional<int> aut_group_derived_length(const AutGroup& auts) {
  if (auts.size() <= 4096) return derived_length(composition_table(auts));
  return perm_group_derived_length(auts.perms);
}

bool aut_group_derived_term_trivial(const AutGroup& auts, int k) {
  if (auts.size() <= 4096) return derived_term(composition_table(auts), k).size() == 1;
  return perm_group_derived_term_trivial(auts.perms, k);
}

namespace {

void require_characteristic(const SkewBrace& brace, const Subgroup& sub,
                            const AutGroup& add_auts, const char* role) {
  if (!is_subgroup(brace.add, sub))
    throw Error(Errc::BadInput, std::string(role) + " is not a subgroup of the additive group");
  if (!is_characteristic(brace.add, sub, add_auts))
    throw Error(Errc::NotCharacteristic,
                std::string(role) + " is not characteristic in the additive group");
}

// Coincidence check: products and inverses taken in either operation agree
// modulo B on `scope`. Returns the least failing tuple, if any.
std::optional<std::vector<int>> coincidence_witness(const SkewBrace& brace,
                                                    const GroupHom& proj,
                                                    const Subgroup& scope) {
  for (int a : scope.elements)
    for (int b : scope.elements)
      if (proj.image[brace.mulop(a, b)] != proj.image[brace.addop(a, b)])
        return std::vector<int>{a, b};
  for (int a : scope.elements)
    if (proj.image[brace.minv(a)] != proj.image[brace.neg(a)])
      return std::vector<int>{a};
  return std::nullopt;
}

// Least j >= 1 such that the coincidence equalities hold on the j-th
// multiplicative derived term modulo B. The terms shrink, so the property is
// monotone in j.
std::optional<int> minimal_coincidence_index(const SkewBrace& brace, const GroupHom& proj) {
  auto series = derived_series(brace.mul);
  for (std::size_t i = 0; i < series.size(); ++i)
    if (!coincidence_witness(brace, proj, series[i])) return static_cast<int>(i) + 1;
  return std::nullopt;
}

// Least j >= 1 with the j-th derived term of g inside `target`.
std::optional<int> minimal_term_inside(const FiniteGroup& g, const Subgroup& target) {
  auto series = derived_series(g);
  for (std::size_t i = 0; i < series.size(); ++i)
    if (subgroup_contains(target, series[i])) return static_cast<int>(i) + 1;
  return std::nullopt;
}

std::vector<std::pair<long long, int>> prime_factorization(long long n) {
  std::vector<std::pair<long long, int>> factors;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

}  // namespace

VerifierReport verify_prop31(const SkewBrace& brace, const Subgroup& b, const WordSet& w,
                             const AutGroup& add_auts) {
  std::vector<int> ks;
  if (auto k = derived_word_index(w)) {
    auto reports = verify_prop31_derived_batch(brace, b, {*k}, add_auts);
    return reports.front();
  }

  require_characteristic(brace, b, add_auts, "B");
  VerifierReport report;
  report.statement = StatementId::Prop31;
  report.subgroup = b.elements;

  QuotientResult quot = quotient(brace.add, b);
  AutGroup aut_q = automorphism_group(quot.group);
  FiniteGroup aut_table = composition_table(aut_q);
  report.parameters["quotient_order"] = quot.group.n;
  report.parameters["aut_order"] = aut_q.size();

  report.hypotheses_hold = verbal_subgroup(aut_table, w).size() == 1;

  Subgroup scope = verbal_subgroup(brace.mul, w);
  report.parameters["w_mul_size"] = scope.size();
  auto witness = coincidence_witness(brace, quot.projection, scope);
  report.conclusion_holds = !witness.has_value();
  if (witness) report.witness = witness;
  return report;
}

VerifierReport verify_prop31(const SkewBrace& brace, const Subgroup& b, const WordSet& w) {
  return verify_prop31(brace, b, w, automorphism_group(brace.add));
}

std::vector<VerifierReport> verify_prop31_derived_batch(const SkewBrace& brace,
                                                        const Subgroup& b,
                                                        const std::vector<int>& ks,
                                                        const AutGroup& add_auts) {
  require_characteristic(brace, b, add_auts, "B");
  QuotientResult quot = quotient(brace.add, b);
  AutGroup aut_q = automorphism_group(quot.group);
  auto mul_series = derived_series(brace.mul);

  std::vector<VerifierReport> reports;
  for (int k : ks) {
    VerifierReport report;
    report.statement = StatementId::Prop31;
    report.subgroup = b.elements;
    report.parameters["k"] = k;
    report.parameters["quotient_order"] = quot.group.n;
    report.parameters["aut_order"] = aut_q.size();
    report.hypotheses_hold = aut_group_derived_term_trivial(aut_q, k);

    // For a derived word the verbal subgroup is the k-th derived term, which
    // avoids the |G|^(2^(k-1)) assignment scan.
    const Subgroup& scope =
        mul_series[std::min<std::size_t>(k - 1, mul_series.size() - 1)];
    report.parameters["w_mul_size"] = scope.size();
    auto witness = coincidence_witness(brace, quot.projection, scope);
    report.conclusion_holds = !witness.has_value();
    if (witness) report.witness = witness;
    reports.push_back(std::move(report));
  }
  return reports;
}

VerifierReport verify_cor32(const SkewBrace& brace, const Subgroup& b,
                            const AutGroup& add_auts) {
  require_characteristic(brace, b, add_auts, "B");
  VerifierReport report;
  report.statement = StatementId::Cor32;
  report.subgroup = b.elements;

  std::optional<int> n = minimal_term_inside(brace.add, b);
  QuotientResult quot = quotient(brace.add, b);
  AutGroup aut_q = automorphism_group(quot.group);
  std::optional<int> m = aut_group_derived_length(aut_q);
  report.parameters["aut_order"] = aut_q.size();

  if (!n) {
    report.hypotheses_hold = false;
    report.notes.push_back("no add-derived term lies inside B");
  } else {
    report.parameters["n"] = *n;
  }
  if (!m) {
    report.hypotheses_hold = false;
    report.notes.push_back("Aut(add/B) is not solvable");
  } else {
    report.parameters["m"] = *m;
  }

  if (auto j = minimal_term_inside(brace.mul, b))
    report.empirical_bounds["min_index"] = *j;

  if (n && m) {
    Subgroup term = derived_term(brace.mul, *m + *n);
    report.conclusion_holds = subgroup_contains(b, term);
    if (!report.conclusion_holds) report.witness = std::vector<int>{*m + *n};
  } else {
    report.notes.push_back("conclusion not evaluated: index undefined");
  }
  return report;
}

VerifierReport verify_cor32(const SkewBrace& brace, const Subgroup& b) {
  return verify_cor32(brace, b, automorphism_group(brace.add));
}

VerifierReport verify_prop44(const SkewBrace& brace, const Subgroup& d,
                             const AutGroup& add_auts) {
  require_characteristic(brace, d, add_auts, "D");
  if (!is_cyclic_subgroup(brace.add, d))
    throw Error(Errc::NotCyclic, "D is not cyclic");

  VerifierReport report;
  report.statement = StatementId::Prop44;
  report.subgroup = d.elements;

  Subgroup b = centralizer(brace.add, d);
  long long d_order = d.size();
  report.parameters["d_order"] = d_order;
  auto factors = prime_factorization(d_order);
  report.parameters["alpha0"] = 0;
  int odd_primes = 0;

  int max_m = 0;
  bool all_solvable = true;
  bool embedding_ok = true;
  // Empty factor family (|D| = 1) leaves the intersection at the whole
  // group, which is then the centralizer of the trivial subgroup.
  std::vector<char> intersection(brace.order(), 1);

  for (auto [p, e] : factors) {
    if (p == 2)
      report.parameters["alpha0"] = e;
    else
      ++odd_primes;

    // Primary part of D: elements of p-power order. Unique, hence
    // characteristic in the ambient group along with D.
    std::vector<int> part;
    for (int x : d.elements) {
      int o = brace.add.element_order(x);
      while (o % p == 0) o /= static_cast<int>(p);
      if (o == 1) part.push_back(x);
    }
    Subgroup d_i = make_subgroup(brace.add, part);
    Subgroup b_i = centralizer(brace.add, d_i);
    for (int x = 0; x < brace.order(); ++x)
      if (!b_i.contains(x)) intersection[x] = 0;

    QuotientResult quot_i = quotient(brace.add, b_i);
    AutGroup aut_i = automorphism_group(quot_i.group);
    std::optional<int> m_i = aut_group_derived_length(aut_i);
    if (!m_i) {
      all_solvable = false;
      report.notes.push_back("Aut(add/B_i) not solvable for p=" + std::to_string(p));
    } else {
      report.parameters["m_p" + std::to_string(p)] = *m_i;
      max_m = std::max(max_m, *m_i);
    }

    // add/B_i embeds into Aut(D_i) via conjugation: every conjugation map
    // must restrict to an automorphism of D_i, the number of distinct
    // restrictions must be the quotient order, and that count must divide
    // |Aut(D_i)|.
    FiniteGroup d_i_group = restrict_to_subgroup(brace.add, d_i);
    std::vector<int> pos(brace.order(), -1);
    for (int i = 0; i < d_i.size(); ++i) pos[d_i.elements[i]] = i;
    std::vector<std::vector<int>> conj_perms;
    for (int a = 0; a < brace.order(); ++a) {
      std::vector<int> perm(d_i.size());
      bool inside = true;
      for (int i = 0; i < d_i.size(); ++i) {
        int image = brace.add.conjugate(d_i.elements[i], a);
        if (pos[image] < 0) {
          inside = false;
          break;
        }
        perm[i] = pos[image];
      }
      if (!inside) {
        embedding_ok = false;
        break;
      }
      conj_perms.push_back(std::move(perm));
    }
    if (embedding_ok) {
      std::sort(conj_perms.begin(), conj_perms.end());
      conj_perms.erase(std::unique(conj_perms.begin(), conj_perms.end()), conj_perms.end());
      AutGroup aut_d_i = automorphism_group(d_i_group);
      if (static_cast<int>(conj_perms.size()) != quot_i.group.n ||
          aut_d_i.size() % static_cast<int>(conj_perms.size()) != 0)
        embedding_ok = false;
      for (const auto& perm : conj_perms)
        if (embedding_ok && aut_d_i.index_of(perm) < 0) embedding_ok = false;
    }
  }

  std::vector<int> intersection_elems;
  for (int x = 0; x < brace.order(); ++x)
    if (intersection[x]) intersection_elems.push_back(x);
  bool intersection_ok = intersection_elems == b.elements;

  report.parameters["s"] = odd_primes;
  report.hypotheses_hold = all_solvable;

  // The statement asserts a positive index works; the primary-part analysis
  // yields max m_i, clamped to 1.
  int m = std::max(1, max_m);
  report.parameters["m"] = m;
  report.parameters["intersection_ok"] = intersection_ok ? 1 : 0;
  report.parameters["embedding_ok"] = embedding_ok ? 1 : 0;

  QuotientResult quot = quotient(brace.add, b);
  Subgroup scope = derived_term(brace.mul, m);
  auto witness = coincidence_witness(brace, quot.projection, scope);
  report.conclusion_holds = !witness.has_value() && intersection_ok && embedding_ok;
  if (witness) {
    report.witness = witness;
  } else if (!report.conclusion_holds) {
    // Intersection or embedding defect: the symmetric difference of the
    // primary-centralizer intersection against B, as the obstruction.
    std::vector<int> mismatch;
    for (int x = 0; x < brace.order(); ++x)
      if (static_cast<bool>(intersection[x]) != b.contains(x)) mismatch.push_back(x);
    report.witness = mismatch;
  }

  if (auto j = minimal_coincidence_index(brace, quot.projection))
    report.empirical_bounds["min_m"] = *j;
  return report;
}

VerifierReport verify_prop44(const SkewBrace& brace, const Subgroup& d) {
  return verify_prop44(brace, d, automorphism_group(brace.add));
}

VerifierReport verify_cor45(const SkewBrace& brace, const Subgroup& d,
                            const AutGroup& add_auts) {
  VerifierReport inner = verify_prop44(brace, d, add_auts);
  VerifierReport report;
  report.statement = StatementId::Cor45;
  report.subgroup = d.elements;
  report.hypotheses_hold = inner.hypotheses_hold;
  long long m = inner.parameters.at("m");
  report.parameters["m"] = m;

  // Minimal n with D inside the center of the n-th add-derived term. Not
  // monotone in n (D must lie inside the term), so scan every term.
  auto series = derived_series(brace.add);
  std::optional<int> n;
  for (std::size_t i = 0; i < series.size() && !n; ++i) {
    if (!subgroup_contains(series[i], d)) continue;
    bool central = true;
    for (int x : d.elements) {
      for (int y : series[i].elements)
        if (brace.add.op(x, y) != brace.add.op(y, x)) {
          central = false;
          break;
        }
      if (!central) break;
    }
    if (central) n = static_cast<int>(i) + 1;
  }
  if (!n) {
    report.hypotheses_hold = false;
    report.notes.push_back("D is not central in any add-derived term");
  } else {
    report.parameters["n"] = *n;
  }

  Subgroup b = centralizer(brace.add, d);
  if (auto j = minimal_term_inside(brace.mul, b))
    report.empirical_bounds["min_index"] = *j;

  if (n) {
    Subgroup term = derived_term(brace.mul, static_cast<int>(m) + *n);
    report.conclusion_holds = subgroup_contains(b, term);
    if (!report.conclusion_holds)
      report.witness = std::vector<int>{static_cast<int>(m) + *n};
  } else {
    report.notes.push_back("conclusion not evaluated: index undefined");
  }
  return report;
}

VerifierReport verify_cor45(const SkewBrace& brace, const Subgroup& d) {
  return verify_cor45(brace, d, automorphism_group(brace.add));
}

VerifierReport verify_thm51(const SkewBrace& brace) {
  VerifierReport report;
  report.statement = StatementId::Thm51;
  report.hypotheses_hold = is_nilpotent(brace.add);
  auto length = derived_length(brace.mul);
  report.conclusion_holds = length.has_value();
  if (length)
    report.parameters["mul_derived_length"] = *length;
  else
    report.witness = derived_series(brace.mul).back().elements;  // the stable term
  return report;
}

VerifierReport verify_thm52(const SkewBrace& brace, const AutGroup& add_auts) {
  VerifierReport report;
  report.statement = StatementId::Thm52;

  Subgroup derived_sub = derived_term(brace.add, 2);
  report.parameters["derived_order"] = derived_sub.size();
  report.hypotheses_hold = is_cyclic_subgroup(brace.add, derived_sub);

  auto length = derived_length(brace.mul);
  bool solvable = length.has_value();
  if (length)
    report.parameters["mul_derived_length"] = *length;
  else
    report.witness = derived_series(brace.mul).back().elements;
  report.conclusion_holds = solvable;

  if (!report.hypotheses_hold) return report;

  // Supporting chain: the centralizer C of the derived subgroup is nilpotent
  // (class <= 2 via the additive commutator identity), characteristic, a
  // subbrace with solvable multiplicative restriction, and the m+2-th
  // multiplicative derived term lands inside it.
  Subgroup c = centralizer(brace.add, derived_sub);
  report.parameters["centralizer_order"] = c.size();

  bool chain_nilpotent = is_nilpotent(restrict_to_subgroup(brace.add, c));
  report.parameters["centralizer_nilpotent"] = chain_nilpotent ? 1 : 0;

  bool class2 = true;
  std::vector<int> class2_witness;
  for (int a : c.elements) {
    for (int b : c.elements) {
      int ab = add_commutator(brace, a, b);
      for (int x : c.elements)
        if (add_commutator(brace, ab, x) != 0) {
          class2 = false;
          class2_witness = {a, b, x};
          break;
        }
      if (!class2) break;
    }
    if (!class2) break;
  }
  report.parameters["class2_identity"] = class2 ? 1 : 0;
  if (!class2)
    report.notes.push_back("open question: [[a,b],c] (+) identity fails at (" +
                           std::to_string(class2_witness[0]) + "," +
                           std::to_string(class2_witness[1]) + "," +
                           std::to_string(class2_witness[2]) + ")");

  bool chain_char = is_characteristic(brace.add, c, add_auts);
  report.parameters["centralizer_characteristic"] = chain_char ? 1 : 0;

  bool chain_subbrace = false;
  bool chain_sub_mul_solvable = false;
  if (chain_char) {
    try {
      SkewBrace sub = subbrace_from_characteristic(brace, c, add_auts);
      chain_subbrace = true;
      chain_sub_mul_solvable = is_solvable(sub.mul);
    } catch (const Error&) {
      chain_subbrace = false;
    }
  }
  report.parameters["centralizer_subbrace"] = chain_subbrace ? 1 : 0;
  report.parameters["centralizer_mul_solvable"] = chain_sub_mul_solvable ? 1 : 0;

  VerifierReport inner = verify_prop44(brace, derived_sub, add_auts);
  long long m = inner.parameters.at("m");
  report.parameters["m"] = m;
  Subgroup term = derived_term(brace.mul, static_cast<int>(m) + 2);
  bool chain_inclusion = subgroup_contains(c, term);
  report.parameters["inclusion_holds"] = chain_inclusion ? 1 : 0;
  if (auto j = minimal_term_inside(brace.mul, c)) report.empirical_bounds["min_index"] = *j;

  report.conclusion_holds = solvable && chain_nilpotent && chain_char && chain_subbrace &&
                            chain_sub_mul_solvable && chain_inclusion;
  if (!report.conclusion_holds && !report.witness)
    report.witness = derived_term(brace.mul, static_cast<int>(m) + 2).elements;
  return report;
}

VerifierReport verify_thm52(const SkewBrace& brace) {
  return verify_thm52(brace, automorphism_group(brace.add));
}

VerifierReport verify_lemma21(const SkewBrace& brace, const Subgroup& b,
                              const AutGroup& add_auts) {
  if (!is_subgroup(brace.add, b))
    throw Error(Errc::BadInput, "B is not a subgroup of the additive group");
  VerifierReport report;
  report.statement = StatementId::Lemma21;
  report.subgroup = b.elements;
  report.hypotheses_hold = is_characteristic(brace.add, b, add_auts);

  bool closed = true;
  for (int a : b.elements) {
    if (!b.contains(brace.minv(a))) {
      closed = false;
      report.witness = std::vector<int>{a};
      break;
    }
    for (int x : b.elements)
      if (!b.contains(brace.mulop(a, x))) {
        closed = false;
        report.witness = std::vector<int>{a, x};
        break;
      }
    if (!closed) break;
  }
  report.conclusion_holds = closed;
  if (closed && report.hypotheses_hold) {
    SkewBrace sub = subbrace_from_characteristic(brace, b, add_auts);
    report.parameters["subbrace_order"] = sub.order();
  }
  return report;
}

VerifierReport verify_lemma21(const SkewBrace& brace, const Subgroup& b) {
  return verify_lemma21(brace, b, automorphism_group(brace.add));
}

}  // namespace bracekit
