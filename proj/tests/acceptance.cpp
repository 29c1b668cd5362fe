// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10 drives the installed CLI binary (path in the
// BRACEKIT_CLI environment variable).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "bracekit/aut_structure.hpp"
#include "bracekit/brace.hpp"
#include "bracekit/enumerate.hpp"
#include "bracekit/json_io.hpp"
#include "bracekit/small_groups.hpp"
#include "bracekit/sweep.hpp"
#include "bracekit/verify.hpp"
#include "bracekit/words.hpp"
#include "support/oracle.hpp"

using namespace bracekit;

namespace {

int failures = 0;

void report_line(int criterion, bool ok, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  if (!ok) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// 1. Every corpus brace satisfies the defining law over all triples, the
//    lambda homomorphism property and both lambda identities, within the
//    ten-minute budget for build plus checks.
void criterion_1(const BraceCorpus& corpus, double elapsed_build) {
  Timer timer;
  long long checked = 0;
  long long violations = 0;
  for (const auto& entry : corpus.entries) {
    const SkewBrace& b = entry.brace;
    try {
      validate_skew_brace(b.order(), b.add.table, b.mul.table);  // the law, all triples
    } catch (const Error&) {
      ++violations;
    }
    if (!check_lambda_hom(b).ok) ++violations;
    if (!check_eq2_eq3(b).ok) ++violations;
    ++checked;
  }
  double total = elapsed_build + timer.seconds();
  bool ok = violations == 0 && checked == static_cast<long long>(corpus.entries.size()) &&
            total < 600.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "axiom suite: %lld braces, %lld violations, %.2fs build+check (budget 600s)",
                checked, violations, total);
  report_line(1, ok, buf);
}

// 2. Holomorph enumeration equals the direct table-search oracle, exactly,
//    for every additive group of order up to 6.
void criterion_2() {
  bool ok = true;
  int groups = 0;
  for (int order = 1; order <= 6; ++order) {
    for (const auto* entry : groups_of_order(order)) {
      auto expected = testing::direct_brace_mul_tables(entry->group);
      std::vector<std::vector<int>> actual;
      for (const SkewBrace& b : enumerate_braces(entry->group)) actual.push_back(b.mul.table);
      if (actual != expected) ok = false;
      ++groups;
    }
  }
  report_line(2, ok, "enumeration equals the direct search oracle on " +
                         std::to_string(groups) + " additive groups of order <= 6");
}

// 3. Aut(Z_{p^n}) for odd p is cyclic of order p^{n-1}(p-1).
void criterion_3() {
  bool ok = true;
  int cases = 0;
  for (long long p : {3, 5, 7}) {
    for (long long pn = p; pn <= 64; pn *= p) {
      long long expected_order = (pn / p) * (p - 1);
      AbelianInvariants closed = aut_cyclic_invariants(pn);
      AutGroup brute = automorphism_group(cyclic_group(static_cast<int>(pn)));
      AbelianInvariants realized = abelian_invariants_of(composition_table(brute));
      if (!(closed.is_cyclic() && closed.order() == expected_order &&
            brute.size() == expected_order && realized == closed))
        ok = false;
      ++cases;
    }
  }
  report_line(3, ok, "Aut(Z_p^n) cyclic of order p^(n-1)(p-1) for p in {3,5,7}, " +
                         std::to_string(cases) + " cases, brute force vs closed form");
}

// 4. Aut(Z_{2^n}) has invariant factors [2, 2^{n-2}] for n in 3..6, the
//    element 3 has multiplicative order 2^{n-2}, Aut(Z4) = Z2, Aut(Z2) = 1.
void criterion_4() {
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    AbelianInvariants expected{{2, 1LL << (n - 2)}};
    AutGroup brute = automorphism_group(cyclic_group(1 << n));
    if (abelian_invariants_of(composition_table(brute)) != expected) ok = false;
    if (aut_cyclic_invariants(1 << n) != expected) ok = false;
    if (multiplicative_order(1LL << n, 3) != (1LL << (n - 2))) ok = false;
  }
  if (automorphism_group(cyclic_group(4)).size() != 2) ok = false;
  if (automorphism_group(cyclic_group(2)).size() != 1) ok = false;
  report_line(4, ok, "Aut(Z_2^n) = Z2 x Z_2^(n-2) for n in 3..6, with the order of 3");
}

// 5. |Aut(Z2 x Z_{2^n})| is 6 for n = 1 and 2^{n+1} for n in 2..4, and each
//    of these automorphism groups is solvable.
void criterion_5() {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(1 << n));
    AutGroup brute = automorphism_group(g);
    if (brute.size() != aut_order_z2_x_z2n(n)) ok = false;
    if (!aut_group_derived_length(brute).has_value()) ok = false;
  }
  if (aut_order_z2_x_z2n(1) != 6) ok = false;
  report_line(5, ok, "|Aut(Z2 x Z_2^n)| matches 6 / 2^(n+1) for n in 1..4 and is solvable");
}

// 6. Quotient-coincidence sweep: every hypothesis-true case concludes.
void criterion_6(const std::vector<VerifierReport>& reports) {
  long long hypothesis_true = 0;
  long long counterexamples = 0;
  for (const auto& r : reports) {
    if (r.statement != StatementId::Prop31) continue;
    if (!r.hypotheses_hold) continue;
    ++hypothesis_true;
    if (!r.conclusion_holds) ++counterexamples;
  }
  report_line(6, counterexamples == 0 && hypothesis_true > 0,
              "coincidence statement: " + std::to_string(hypothesis_true) +
                  " hypothesis-true cases, " + std::to_string(counterexamples) +
                  " counterexamples");
}

// 7. Derived-length transfer sweep, with the empirical index bound.
void criterion_7(const std::vector<VerifierReport>& reports) {
  long long hypothesis_true = 0;
  long long bad = 0;
  for (const auto& r : reports) {
    if (r.statement != StatementId::Cor32 || !r.hypotheses_hold) continue;
    ++hypothesis_true;
    if (!r.conclusion_holds) ++bad;
    long long bound = r.parameters.at("m") + r.parameters.at("n");
    auto it = r.empirical_bounds.find("min_index");
    if (it == r.empirical_bounds.end() || it->second > bound) ++bad;
  }
  report_line(7, bad == 0 && hypothesis_true > 0,
              "derived-length transfer: " + std::to_string(hypothesis_true) +
                  " cases, empirical index never above m+n");
}

// 8. Centralizer statements: equalities at the computed m, the intersection
//    identity, the embedding checks, and the containment at m+n.
void criterion_8(const std::vector<VerifierReport>& reports) {
  long long prop44_cases = 0;
  long long cor45_cases = 0;
  long long bad = 0;
  for (const auto& r : reports) {
    if (r.statement == StatementId::Prop44 && r.hypotheses_hold) {
      ++prop44_cases;
      if (!r.conclusion_holds) ++bad;
      if (r.parameters.at("intersection_ok") != 1) ++bad;
      if (r.parameters.at("embedding_ok") != 1) ++bad;
      auto it = r.empirical_bounds.find("min_m");
      if (it == r.empirical_bounds.end() || it->second > r.parameters.at("m")) ++bad;
    }
    if (r.statement == StatementId::Cor45 && r.hypotheses_hold) {
      ++cor45_cases;
      if (!r.conclusion_holds) ++bad;
    }
  }
  report_line(8, bad == 0 && prop44_cases > 0 && cor45_cases > 0,
              "centralizer statements: " + std::to_string(prop44_cases) + " + " +
                  std::to_string(cor45_cases) + " cases, intersections and embeddings exact");
}

// 9. Solvability statements, including the supporting chain facts.
void criterion_9(const std::vector<VerifierReport>& reports) {
  long long cases = 0;
  long long bad = 0;
  for (const auto& r : reports) {
    if (r.statement == StatementId::Thm51 && r.hypotheses_hold) {
      ++cases;
      if (!r.conclusion_holds) ++bad;
    }
    if (r.statement == StatementId::Thm52 && r.hypotheses_hold) {
      ++cases;
      if (!r.conclusion_holds) ++bad;
      for (const char* key : {"class2_identity", "centralizer_nilpotent",
                              "centralizer_subbrace", "centralizer_mul_solvable",
                              "inclusion_holds"})
        if (r.parameters.at(key) != 1) ++bad;
    }
    if (r.statement == StatementId::Lemma21 && r.hypotheses_hold && !r.conclusion_holds)
      ++bad;
  }
  report_line(9, bad == 0 && cases > 0,
              "solvability statements and proof-chain facts: " + std::to_string(cases) +
                  " hypothesis-true cases, zero failures");
}

// 10. Two full sweep runs with different job counts produce byte-identical
//     JSON reports.
void criterion_10() {
  const char* cli = std::getenv("BRACEKIT_CLI");
  if (!cli) {
    report_line(10, false, "determinism: BRACEKIT_CLI not set");
    return;
  }
  std::string out1 = "acceptance_sweep_jobs1.json";
  std::string out2 = "acceptance_sweep_jobs4.json";
  std::string cmd1 = std::string(cli) + " sweep --jobs 1 --out " + out1 + " 2>/dev/null";
  std::string cmd2 = std::string(cli) + " sweep --jobs 4 --out " + out2 + " 2>/dev/null";
  int rc1 = std::system(cmd1.c_str());
  int rc2 = std::system(cmd2.c_str());
  bool ok = rc1 == 0 && rc2 == 0;
  std::string a, b;
  if (ok) {
    a = read_text_file(out1);
    b = read_text_file(out2);
    ok = !a.empty() && a == b;
  }
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  report_line(10, ok, "determinism: sweep --jobs 1 and --jobs 4 agree byte for byte (" +
                          std::to_string(a.size()) + " bytes)");
}

}  // namespace

int main() {
  Timer build_timer;
  std::vector<int> orders;
  for (int o = 1; o <= 12; ++o) orders.push_back(o);
  BraceCorpus corpus = build_corpus(orders);
  double elapsed_build = build_timer.seconds();

  criterion_1(corpus, elapsed_build);
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();

  SweepResult sweep = run_sweep(corpus);
  criterion_6(sweep.reports);
  criterion_7(sweep.reports);
  criterion_8(sweep.reports);
  criterion_9(sweep.reports);
  criterion_10();

  std::printf("summary: checked=%lld passed=%lld vacuous=%lld failed=%lld\n",
              sweep.summary.checked, sweep.summary.passed, sweep.summary.vacuous,
              sweep.summary.failed);
  if (sweep.summary.failed != 0) {
    std::printf("[FAIL] sweep reported conclusion failures\n");
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}
