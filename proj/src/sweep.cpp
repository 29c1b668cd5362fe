#include "bracekit/sweep.hpp"

#include <algorithm>

#include "bracekit/parallel.hpp"

namespace bracekit {

namespace {

bool wants(const SweepOptions& options, StatementId id) {
  if (options.statements.empty()) return true;
  return std::find(options.statements.begin(), options.statements.end(), id) !=
         options.statements.end();
}

}  // namespace

std::vector<VerifierReport> verify_brace(const SkewBrace& brace, const SweepOptions& options) {
  std::vector<VerifierReport> reports;
  AutGroup add_auts = automorphism_group(brace.add);
  std::vector<Subgroup> char_subs = characteristic_subgroups(brace.add, add_auts);

  if (wants(options, StatementId::Prop31))
    for (const Subgroup& b : char_subs)
      for (auto& report : verify_prop31_derived_batch(brace, b, options.prop31_ks, add_auts))
        reports.push_back(std::move(report));

  if (wants(options, StatementId::Cor32))
    for (const Subgroup& b : char_subs) reports.push_back(verify_cor32(brace, b, add_auts));

  std::vector<const Subgroup*> cyclic_subs;
  for (const Subgroup& d : char_subs)
    if (is_cyclic_subgroup(brace.add, d)) cyclic_subs.push_back(&d);

  if (wants(options, StatementId::Prop44))
    for (const Subgroup* d : cyclic_subs) reports.push_back(verify_prop44(brace, *d, add_auts));

  if (wants(options, StatementId::Cor45))
    for (const Subgroup* d : cyclic_subs) reports.push_back(verify_cor45(brace, *d, add_auts));

  if (wants(options, StatementId::Thm51)) reports.push_back(verify_thm51(brace));

  if (wants(options, StatementId::Thm52)) reports.push_back(verify_thm52(brace, add_auts));

  if (wants(options, StatementId::Lemma21))
    for (const Subgroup& b : char_subs) reports.push_back(verify_lemma21(brace, b, add_auts));

  return reports;
}

SweepResult run_sweep(const BraceCorpus& corpus, const SweepOptions& options) {
  std::vector<std::vector<VerifierReport>> per_entry(corpus.entries.size());
  parallel_for_index(corpus.entries.size(), options.jobs, [&](std::size_t i) {
    per_entry[i] = verify_brace(corpus.entries[i].brace, options);
    for (auto& report : per_entry[i]) report.brace_id = corpus.entries[i].id;
  });

  SweepResult result;
  for (auto& chunk : per_entry)
    for (auto& report : chunk) result.reports.push_back(std::move(report));
  result.summary = summarize(result.reports);
  return result;
}

SweepSummary summarize(const std::vector<VerifierReport>& reports) {
  SweepSummary summary;
  summary.checked = static_cast<long long>(reports.size());
  for (const auto& report : reports) {
    if (report.vacuous())
      ++summary.vacuous;
    else if (report.conclusion_holds)
      ++summary.passed;
    else
      ++summary.failed;
  }
  return summary;
}

}  // namespace bracekit
