#include "bracekit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bracekit {

namespace {

std::vector<std::vector<int>> table_rows(const FiniteGroup& g) {
  std::vector<std::vector<int>> rows(g.n, std::vector<int>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) rows[a][b] = g.op(a, b);
  return rows;
}

std::vector<int> flatten_rows(const nlohmann::json& rows, int n) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw Error(Errc::BadInput, "table must be an n-row array");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(Errc::BadInput, "table rows must have length n");
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) throw Error(Errc::BadInput, "table entries must be integers");
      flat.push_back(cell.get<int>());
    }
  }
  return flat;
}

std::vector<std::string> labels_from_json(const nlohmann::json& j) {
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& item : j.at("labels")) labels.push_back(item.get<std::string>());
  }
  return labels;
}

}  // namespace

ojson group_to_json(const FiniteGroup& g) {
  ojson j;
  j["n"] = g.n;
  j["table"] = table_rows(g);
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("table"))
    throw Error(Errc::BadInput, "group JSON requires 'n' and 'table'");
  int n = j.at("n").get<int>();
  return validate_group(n, flatten_rows(j.at("table"), n), labels_from_json(j));
}

ojson brace_to_json(const SkewBrace& brace) {
  ojson j;
  j["n"] = brace.order();
  j["add"] = table_rows(brace.add);
  j["mul"] = table_rows(brace.mul);
  if (!brace.add.labels.empty()) j["labels"] = brace.add.labels;
  return j;
}

SkewBrace brace_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("add") || !j.contains("mul"))
    throw Error(Errc::BadInput, "brace JSON requires 'n', 'add' and 'mul'");
  int n = j.at("n").get<int>();
  SkewBrace brace =
      validate_skew_brace(n, flatten_rows(j.at("add"), n), flatten_rows(j.at("mul"), n));
  brace.add.labels = labels_from_json(j);
  return brace;
}

ojson corpus_to_json(const BraceCorpus& corpus) {
  ojson j;
  j["metadata"] = ojson{{"generator", corpus.generator},
                        {"orders", corpus.orders},
                        {"timestamp", corpus.timestamp}};
  ojson entries = ojson::array();
  for (const auto& entry : corpus.entries) {
    ojson e;
    e["id"] = entry.id;
    e["order"] = entry.order;
    e["group_index"] = entry.group_index;
    e["brace_index"] = entry.brace_index;
    e["add_iso_class"] = entry.add_iso_class;
    e["mul_iso_class"] = entry.mul_iso_class;
    e["brace"] = brace_to_json(entry.brace);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

BraceCorpus corpus_from_json(const nlohmann::json& j) {
  BraceCorpus corpus;
  if (!j.contains("metadata") || !j.contains("entries"))
    throw Error(Errc::BadInput, "corpus JSON requires 'metadata' and 'entries'");
  const auto& meta = j.at("metadata");
  corpus.generator = meta.value("generator", "");
  corpus.timestamp = meta.value("timestamp", "");
  if (meta.contains("orders"))
    corpus.orders = meta.at("orders").get<std::vector<int>>();
  std::vector<std::string> ids;
  for (const auto& e : j.at("entries")) {
    CorpusEntry entry;
    entry.id = e.at("id").get<std::string>();
    entry.order = e.at("order").get<int>();
    entry.group_index = e.at("group_index").get<int>();
    entry.brace_index = e.at("brace_index").get<int>();
    entry.add_iso_class = e.at("add_iso_class").get<std::string>();
    entry.mul_iso_class = e.at("mul_iso_class").get<std::string>();
    try {
      entry.brace = brace_from_json(e.at("brace"));
    } catch (const Error& err) {
      throw Error(Errc::ValidationFailed,
                  "corpus entry " + entry.id + " failed validation: " + err.what());
    }
    if (entry.brace.order() != entry.order)
      throw Error(Errc::ValidationFailed,
                  "corpus entry " + entry.id + " order disagrees with its brace");
    ids.push_back(entry.id);
    corpus.entries.push_back(std::move(entry));
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw Error(Errc::ValidationFailed, "corpus ids are not unique");
  return corpus;
}

ojson report_to_json(const VerifierReport& report) {
  ojson j;
  j["statement"] = statement_name(report.statement);
  if (!report.brace_id.empty()) j["brace"] = report.brace_id;
  if (!report.subgroup.empty()) j["subgroup"] = report.subgroup;
  j["hypotheses_hold"] = report.hypotheses_hold;
  j["conclusion_holds"] = report.conclusion_holds;
  j["vacuous"] = report.vacuous();
  if (!report.parameters.empty()) j["parameters"] = report.parameters;
  if (report.witness)
    j["witness"] = *report.witness;
  else
    j["witness"] = nullptr;
  if (!report.empirical_bounds.empty()) j["empirical_bounds"] = report.empirical_bounds;
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot open for writing: " + path);
  out << content;
  if (!out) throw Error(Errc::Io, "write failed: " + path);
}

}  // namespace bracekit
