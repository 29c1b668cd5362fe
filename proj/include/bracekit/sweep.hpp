#pragma once

#include <vector>

#include "bracekit/enumerate.hpp"
#include "bracekit/verify.hpp"

namespace bracekit {

struct SweepSummary {
  long long checked = 0;
  long long passed = 0;
  long long vacuous = 0;
  long long failed = 0;
};

struct SweepOptions {
  int jobs = 1;
  // Empty means every statement.
  std::vector<StatementId> statements;
  // Derived-word indices fed to the quotient-coincidence statement.
  std::vector<int> prop31_ks = {1, 2, 3, 4};
};

struct SweepResult {
  std::vector<VerifierReport> reports;
  SweepSummary summary;
};

/// Runs every selected statement over every corpus entry, one task per
/// entry, distributed over a worker pool. Reports come back in canonical
/// (entry, statement, subgroup, parameter) order regardless of job count.
SweepResult run_sweep(const BraceCorpus& corpus, const SweepOptions& options = {});

/// Reports for a single brace, in canonical statement order.
std::vector<VerifierReport> verify_brace(const SkewBrace& brace, const SweepOptions& options);

SweepSummary summarize(const std::vector<VerifierReport>& reports);

}  // namespace bracekit
