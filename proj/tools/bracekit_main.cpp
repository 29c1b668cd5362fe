// bracekit command line: validation, enumeration, structure analysis and the
// statement-verification battery, with machine-readable reports.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bracekit/aut_structure.hpp"
#include "bracekit/brace.hpp"
#include "bracekit/enumerate.hpp"
#include "bracekit/json_io.hpp"
#include "bracekit/small_groups.hpp"
#include "bracekit/sweep.hpp"
#include "bracekit/version.hpp"
#include "bracekit/words.hpp"

namespace {

using namespace bracekit;

constexpr int kExitOk = 0;
constexpr int kExitStatementViolated = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUsage = 64;

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string output_path;
  std::string corpus_path;
  std::string statement = "all";
  std::string word;
  Format format = Format::Json;
  int order = 0;
  int group_index = -1;
  int max_order = 0;  // 0: use the default / environment override
  int jobs = 0;       // 0: hardware parallelism
  bool big = false;
  bool as_group = false;
  int cyclic_n = 0;
  int z2x_n = 0;
};

int default_max_order() {
  if (const char* env = std::getenv("BRACEKIT_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v >= 1 && v <= kMaxEnumerationBound) return v;
  }
  return kDefaultEnumerationBound;
}

void emit(const RunConfig& config, const std::string& payload) {
  if (config.output_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(config.output_path, payload);
  }
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

int effective_bound(const RunConfig& config) {
  int bound = config.max_order > 0 ? config.max_order : default_max_order();
  if (config.big) bound = std::max(bound, kMaxEnumerationBound);
  return std::min(bound, kMaxEnumerationBound);
}

// -- validate ---------------------------------------------------------------

int run_validate(const RunConfig& config) {
  nlohmann::json j = nlohmann::json::parse(read_text_file(config.input_path));
  if (config.as_group) {
    FiniteGroup g = group_from_json(j);
    ojson out{{"valid", true}, {"kind", "group"}, {"n", g.n}};
    emit(config, config.format == Format::Text
                     ? "valid group of order " + std::to_string(g.n)
                     : dump(out));
    return kExitOk;
  }
  SkewBrace brace = brace_from_json(j);
  ojson out{{"valid", true}, {"kind", "skew_brace"}, {"n", brace.order()}};
  emit(config, config.format == Format::Text
                   ? "valid skew brace of order " + std::to_string(brace.order())
                   : dump(out));
  return kExitOk;
}

// -- enumerate ----------------------------------------------------------------

int run_enumerate(const RunConfig& config) {
  int bound = effective_bound(config);
  if (config.order < 1 || config.order > bound)
    throw Error(Errc::OrderBoundExceeded,
                "order " + std::to_string(config.order) + " outside 1.." +
                    std::to_string(bound) + " (raise with --big or BRACEKIT_MAX_ORDER)");
  auto groups = groups_of_order(config.order);
  ojson out = ojson::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (config.group_index >= 0 && static_cast<int>(i) != config.group_index) continue;
    for (const SkewBrace& brace : enumerate_braces(groups[i]->group, bound)) {
      ojson item;
      item["add_iso_class"] = groups[i]->name;
      item["brace"] = brace_to_json(brace);
      out.push_back(std::move(item));
    }
  }
  if (config.format == Format::Text) {
    emit(config, std::to_string(out.size()) + " skew braces of order " +
                     std::to_string(config.order));
  } else {
    emit(config, dump(out));
  }
  return kExitOk;
}

// -- corpus -------------------------------------------------------------------

int run_corpus_build(const RunConfig& config) {
  int bound = effective_bound(config);
  std::vector<int> orders;
  for (int o = 1; o <= bound; ++o) orders.push_back(o);
  BraceCorpus corpus = build_corpus(orders, bound, config.jobs);
  emit(config, dump(corpus_to_json(corpus)));
  std::cerr << "corpus: " << corpus.entries.size() << " braces over orders 1.." << bound
            << "\n";
  return kExitOk;
}

// -- analyze ------------------------------------------------------------------

ojson analyze_group(const FiniteGroup& g) {
  ojson j;
  j["order"] = g.n;
  j["abelian"] = g.is_abelian();
  if (g.is_abelian()) {
    ojson factors = ojson::array();
    for (long long f : abelian_invariants_of(g).factors) factors.push_back(f);
    j["invariant_factors"] = std::move(factors);
  }
  auto dl = derived_length(g);
  j["solvable"] = dl.has_value();
  if (dl) j["derived_length"] = *dl;
  j["nilpotent"] = is_nilpotent(g);
  j["center_order"] = center(g).size();
  if (g.n <= kCatalogMaxOrder) {
    const NamedGroup* entry = identify_group(g);
    if (entry) j["iso_class"] = entry->name;
  }
  return j;
}

int run_analyze(const RunConfig& config) {
  nlohmann::json j = nlohmann::json::parse(read_text_file(config.input_path));
  SkewBrace brace = brace_from_json(j);
  ojson out;
  out["order"] = brace.order();
  out["add"] = analyze_group(brace.add);
  out["mul"] = analyze_group(brace.mul);

  auto maps = lambda_table(brace);
  bool trivial = true;
  std::vector<std::vector<int>> distinct;
  for (auto& m : maps) {
    bool is_id = true;
    for (int x = 0; x < brace.order(); ++x)
      if (m[x] != x) is_id = false;
    if (!is_id) trivial = false;
    if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
  }
  out["lambda"] = ojson{{"trivial", trivial}, {"image_size", distinct.size()}};
  out["characteristic_subgroups"] = characteristic_subgroups(brace.add).size();

  if (!config.word.empty()) {
    GroupWord w = parse_word(config.word);
    Subgroup v_add = verbal_subgroup(brace.add, WordSet{{w}});
    Subgroup v_mul = verbal_subgroup(brace.mul, WordSet{{w}});
    out["word"] = ojson{{"text", word_to_string(w)},
                        {"verbal_subgroup_add", v_add.elements},
                        {"verbal_subgroup_mul", v_mul.elements}};
  }

  if (config.format == Format::Text) {
    std::string text = "order " + std::to_string(brace.order()) + "\n";
    text += "add: " + out["add"].dump() + "\n";
    text += "mul: " + out["mul"].dump() + "\n";
    text += "lambda: " + out["lambda"].dump() + "\n";
    emit(config, text);
  } else {
    emit(config, dump(out));
  }
  return kExitOk;
}

// -- aut ----------------------------------------------------------------------

int run_aut(const RunConfig& config) {
  ojson out;
  bool ok = true;
  if (config.cyclic_n > 0) {
    long long n = config.cyclic_n;
    AbelianInvariants closed = aut_cyclic_invariants(n);
    out["group"] = "Z" + std::to_string(n);
    out["invariants"] = closed.factors;
    out["aut_order"] = closed.order();
    if (n <= kDefaultOrderBound) {
      AutGroup auts = automorphism_group(cyclic_group(static_cast<int>(n)));
      AbelianInvariants brute = abelian_invariants_of(composition_table(auts));
      ok = brute == closed && auts.size() == closed.order();
      out["brute_force_check"] = ok ? "OK" : "MISMATCH";
    } else {
      out["brute_force_check"] = "skipped (order above bound)";
    }
  } else if (config.z2x_n > 0) {
    int n = config.z2x_n;
    out["group"] = "Z2xZ" + std::to_string(1 << n);
    long long order = aut_order_z2_x_z2n(n);
    out["aut_order"] = order;
    if ((2LL << n) <= kDefaultOrderBound) {
      FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(1 << n));
      AutGroup auts = automorphism_group(g);
      bool solvable = aut_group_derived_length(auts).has_value();
      ok = auts.size() == order && solvable;
      out["brute_force_check"] = ok ? "OK" : "MISMATCH";
      out["solvable"] = solvable;
    } else {
      out["brute_force_check"] = "skipped (order above bound)";
    }
  } else {
    throw Error(Errc::BadInput, "aut requires --cyclic N or --z2xz2n N");
  }
  if (config.format == Format::Text) {
    std::string text = out["group"].get<std::string>() + ": invariants [";
    if (out.contains("invariants")) {
      bool first = true;
      for (const auto& f : out["invariants"]) {
        if (!first) text += ", ";
        first = false;
        text += std::to_string(f.get<long long>());
      }
    }
    text += "]";
    if (out.contains("brute_force_check"))
      text += "\nbrute-force check: " + out["brute_force_check"].get<std::string>();
    emit(config, text + "\n");
  } else {
    emit(config, dump(out));
  }
  return ok ? kExitOk : kExitStatementViolated;
}

// -- verify / sweep -----------------------------------------------------------

std::string reports_to_csv(const std::vector<VerifierReport>& reports) {
  std::string csv = "statement,brace,subgroup_size,hypotheses_hold,conclusion_holds\n";
  for (const auto& r : reports) {
    csv += std::string(statement_name(r.statement)) + "," + r.brace_id + "," +
           std::to_string(r.subgroup.size()) + "," + (r.hypotheses_hold ? "1" : "0") + "," +
           (r.conclusion_holds ? "1" : "0") + "\n";
  }
  return csv;
}

std::string summary_line(const SweepSummary& summary) {
  return "checked=" + std::to_string(summary.checked) +
         " passed=" + std::to_string(summary.passed) +
         " vacuous=" + std::to_string(summary.vacuous) +
         " failed=" + std::to_string(summary.failed);
}

int finish_reports(const RunConfig& config, const std::vector<VerifierReport>& reports) {
  SweepSummary summary = summarize(reports);
  if (config.format == Format::Csv) {
    emit(config, reports_to_csv(reports));
  } else if (config.format == Format::Text) {
    std::string text;
    for (const auto& r : reports) {
      text += std::string(statement_name(r.statement)) + " " + r.brace_id + " ";
      text += r.vacuous() ? "vacuous" : (r.conclusion_holds ? "ok" : "FAILED");
      text += "\n";
    }
    emit(config, text);
  } else {
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    emit(config, dump(arr));
  }
  std::cerr << summary_line(summary) << "\n";
  return summary.failed > 0 ? kExitStatementViolated : kExitOk;
}

SweepOptions sweep_options(const RunConfig& config) {
  SweepOptions options;
  options.jobs = config.jobs;
  if (config.statement != "all") {
    auto id = statement_from_name(config.statement);
    if (!id) throw Error(Errc::BadInput, "unknown statement: " + config.statement);
    options.statements = {*id};
  }
  return options;
}

int run_verify(const RunConfig& config) {
  BraceCorpus corpus =
      corpus_from_json(nlohmann::json::parse(read_text_file(config.corpus_path)));
  SweepOptions options = sweep_options(config);

  if (!config.word.empty()) {
    // Explicit word: run the quotient-coincidence statement with that W.
    GroupWord w = parse_word(config.word);
    WordSet ws{{w}};
    std::vector<VerifierReport> reports;
    for (const auto& entry : corpus.entries) {
      AutGroup auts = automorphism_group(entry.brace.add);
      for (const Subgroup& b : characteristic_subgroups(entry.brace.add, auts)) {
        VerifierReport r = verify_prop31(entry.brace, b, ws, auts);
        r.brace_id = entry.id;
        reports.push_back(std::move(r));
      }
    }
    return finish_reports(config, reports);
  }

  SweepResult result = run_sweep(corpus, options);
  return finish_reports(config, result.reports);
}

int run_sweep_cmd(const RunConfig& config) {
  int bound = effective_bound(config);
  std::vector<int> orders;
  for (int o = 1; o <= bound; ++o) orders.push_back(o);
  BraceCorpus corpus = build_corpus(orders, bound, config.jobs);
  if (!config.corpus_path.empty())
    write_text_file(config.corpus_path, dump(corpus_to_json(corpus)));

  SweepOptions options = sweep_options(config);
  SweepResult result = run_sweep(corpus, options);

  if (config.format == Format::Json) {
    ojson out;
    out["orders"] = corpus.orders;
    out["entry_count"] = corpus.entries.size();
    ojson arr = ojson::array();
    for (const auto& r : result.reports) arr.push_back(report_to_json(r));
    out["reports"] = std::move(arr);
    out["summary"] = ojson{{"checked", result.summary.checked},
                           {"passed", result.summary.passed},
                           {"vacuous", result.summary.vacuous},
                           {"failed", result.summary.failed}};
    emit(config, dump(out));
    std::cerr << summary_line(result.summary) << "\n";
    return result.summary.failed > 0 ? kExitStatementViolated : kExitOk;
  }
  return finish_reports(config, result.reports);
}

int run(const RunConfig& config) {
  if (config.command == "validate") return run_validate(config);
  if (config.command == "enumerate") return run_enumerate(config);
  if (config.command == "corpus") return run_corpus_build(config);
  if (config.command == "analyze") return run_analyze(config);
  if (config.command == "aut") return run_aut(config);
  if (config.command == "verify") return run_verify(config);
  if (config.command == "sweep") return run_sweep_cmd(config);
  throw Error(Errc::BadInput, "unknown command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bracekit: finite skew brace computation and verification"};
  app.set_version_flag("--version", std::string("bracekit ") + bracekit::kVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::string format_name = "json";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", config.output_path, "write the report to a file");
    cmd->add_option("--format", format_name, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--jobs", config.jobs, "worker threads (0 = hardware)");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate a skew brace JSON file");
  validate->add_option("file", config.input_path, "brace JSON file")->required();
  validate->add_flag("--group", config.as_group, "treat the input as a bare group");
  add_common(validate);

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "enumerate skew braces of one order");
  enumerate_cmd->add_option("--order", config.order, "carrier order")->required();
  enumerate_cmd->add_option("--group-index", config.group_index,
                            "restrict to one additive group (catalog index)");
  enumerate_cmd->add_flag("--big", config.big, "allow orders 13..16 (slow)");
  add_common(enumerate_cmd);

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "corpus operations");
  corpus_cmd->require_subcommand(1);
  CLI::App* corpus_build = corpus_cmd->add_subcommand("build", "build the brace corpus");
  corpus_build->add_option("--max-order", config.max_order, "largest order to enumerate");
  corpus_build->add_flag("--big", config.big, "allow orders 13..16 (slow)");
  add_common(corpus_build);

  CLI::App* analyze = app.add_subcommand("analyze", "structural report for a brace file");
  analyze->add_option("file", config.input_path, "brace JSON file")->required();
  analyze->add_option("--word", config.word, "also compute this word's verbal subgroups");
  add_common(analyze);

  CLI::App* aut = app.add_subcommand("aut", "automorphism group structure");
  aut->add_option("--cyclic", config.cyclic_n, "invariants of Aut(Z_n)");
  aut->add_option("--z2xz2n", config.z2x_n, "order of Aut(Z2 x Z_{2^n})");
  add_common(aut);

  CLI::App* verify = app.add_subcommand("verify", "run statement checks over a corpus");
  verify->add_option("--statement", config.statement,
                     "prop31, cor32, prop44, cor45, thm51, thm52, lemma21 or all");
  verify->add_option("--corpus", config.corpus_path, "corpus JSON file")->required();
  verify->add_option("--word", config.word, "use this word for the coincidence statement");
  add_common(verify);

  CLI::App* sweep = app.add_subcommand("sweep", "corpus build plus every statement");
  sweep->add_option("--max-order", config.max_order, "largest order to enumerate");
  sweep->add_flag("--big", config.big, "allow orders 13..16 (slow)");
  sweep->add_option("--statement", config.statement, "restrict to one statement");
  sweep->add_option("--corpus-out", config.corpus_path, "also save the built corpus");
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (format_name == "csv")
    config.format = Format::Csv;
  else if (format_name == "text")
    config.format = Format::Text;

  try {
    return run(config);
  } catch (const bracekit::Error& e) {
    std::cerr << "error (" << bracekit::errc_name(e.code()) << "): " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error (json): " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
