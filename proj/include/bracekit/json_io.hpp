#pragma once

#include <string>

#include <json.hpp>

#include "bracekit/brace.hpp"
#include "bracekit/enumerate.hpp"
#include "bracekit/group.hpp"
#include "bracekit/verify.hpp"

namespace bracekit {

// All emitters use ordered_json with a fixed key order so that identical
// inputs serialize to identical bytes.
using ojson = nlohmann::ordered_json;

ojson group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);  // validates

ojson brace_to_json(const SkewBrace& brace);
SkewBrace brace_from_json(const nlohmann::json& j);  // validates

ojson corpus_to_json(const BraceCorpus& corpus);
BraceCorpus corpus_from_json(const nlohmann::json& j);  // re-validates every entry

ojson report_to_json(const VerifierReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bracekit
