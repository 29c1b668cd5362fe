#include <doctest.h>

#include "bracekit/enumerate.hpp"
#include "bracekit/json_io.hpp"
#include "bracekit/small_groups.hpp"

using namespace bracekit;

TEST_CASE("group JSON round trip") {
  FiniteGroup s3 = symmetric_group(3);
  ojson j = group_to_json(s3);
  FiniteGroup back = group_from_json(j);
  CHECK(back.table == s3.table);
  CHECK(back.labels == s3.labels);

  FiniteGroup plain = cyclic_group(5);
  ojson j2 = group_to_json(plain);
  CHECK_FALSE(j2.contains("labels"));
  CHECK(group_from_json(j2).table == plain.table);
}

TEST_CASE("group JSON is validated on load") {
  ojson j;
  j["n"] = 2;
  j["table"] = std::vector<std::vector<int>>{{0, 1}, {1, 1}};
  CHECK_THROWS_AS(group_from_json(j), Error);
  ojson missing;
  missing["n"] = 2;
  CHECK_THROWS_AS(group_from_json(missing), Error);
  ojson ragged;
  ragged["n"] = 2;
  ragged["table"] = std::vector<std::vector<int>>{{0, 1}, {1}};
  CHECK_THROWS_AS(group_from_json(ragged), Error);
}

TEST_CASE("brace JSON round trip and validation") {
  FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
  for (const SkewBrace& b : enumerate_braces(klein)) {
    ojson j = brace_to_json(b);
    SkewBrace back = brace_from_json(j);
    CHECK(back.add.table == b.add.table);
    CHECK(back.mul.table == b.mul.table);
  }
  // A non-brace pair must be rejected on load.
  ojson j;
  j["n"] = 6;
  ojson bad_add = group_to_json(cyclic_group(6));
  ojson bad_mul = group_to_json(symmetric_group(3));
  j["add"] = bad_add["table"];
  j["mul"] = bad_mul["table"];
  CHECK_THROWS_AS(brace_from_json(j), Error);
}

TEST_CASE("corpus serialization round-trips byte-identically") {
  BraceCorpus corpus = build_corpus({1, 2, 3, 4, 5, 6});
  std::string first = corpus_to_json(corpus).dump(2);
  BraceCorpus loaded = corpus_from_json(nlohmann::json::parse(first));
  std::string second = corpus_to_json(loaded).dump(2);
  CHECK(first == second);
  CHECK(loaded.entries.size() == corpus.entries.size());
  CHECK(loaded.timestamp == corpus.timestamp);
}

TEST_CASE("corpus loading re-validates entries") {
  BraceCorpus corpus = build_corpus({4});
  ojson j = corpus_to_json(corpus);
  int old = j["entries"][0]["brace"]["mul"][1][1].get<int>();
  j["entries"][0]["brace"]["mul"][1][1] = (old + 1) % 4;  // corrupt one cell
  CHECK_THROWS_AS(corpus_from_json(j), Error);
  try {
    corpus_from_json(j);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ValidationFailed);
  }
}

TEST_CASE("corpus ids must be unique") {
  BraceCorpus corpus = build_corpus({4});
  ojson j = corpus_to_json(corpus);
  j["entries"][1]["id"] = j["entries"][0]["id"];
  CHECK_THROWS_AS(corpus_from_json(j), Error);
}

TEST_CASE("report JSON carries the statement and verdict fields") {
  VerifierReport report;
  report.statement = StatementId::Cor32;
  report.brace_id = "o6-g1-b0";
  report.subgroup = {0, 2, 4};
  report.parameters["m"] = 0;
  report.parameters["n"] = 2;
  report.empirical_bounds["min_index"] = 2;
  ojson j = report_to_json(report);
  CHECK(j["statement"] == "cor32");
  CHECK(j["brace"] == "o6-g1-b0");
  CHECK(j["hypotheses_hold"] == true);
  CHECK(j["conclusion_holds"] == true);
  CHECK(j["vacuous"] == false);
  CHECK(j["witness"].is_null());
  CHECK(j["parameters"]["n"] == 2);

  report.hypotheses_hold = false;
  report.witness = std::vector<int>{1, 2};
  ojson j2 = report_to_json(report);
  CHECK(j2["vacuous"] == true);
  CHECK(j2["witness"] == std::vector<int>{1, 2});
}

TEST_CASE("file helpers raise Io errors") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/path/file.json"), Error);
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/file.json", "x"), Error);
}
