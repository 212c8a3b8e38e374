#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cohomolib/bwb.hpp"
#include "cohomolib/cohom.hpp"
#include "cohomolib/liecoh.hpp"

namespace cohomolib {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cohomolib/1";

// weights travel as arrays of rational strings
json weight_json(const IVec& w);
IVec weight_from_json(const json& j);
// "1,-2", "[\"1\",\"-2\"]" or "[1,-2]"
IVec parse_weight_arg(const std::string& s);
json word_json(const WeylElement& w);  // 1-based
WeylElement weyl_from_word_arg(const RootSystem& R, const std::string& s);  // "1,2,1" 1-based, "" or "e" for identity

Embedding embedding_from_json(const json& j);
Embedding embedding_from_text(const std::string& text);  // JSON text or @path
json embedding_json(const Embedding& E);

json result_json(const PullbackResult& r);
json principal_json(const PrincipalVerdict& v);
json monoid_json(const MonoidSample& s);
json slice_json(const CohomologySlice& s);
json character_json(const Character& chi);
json bott_json(const IVec& lambda, const BottResult& b);
json rootsystem_json(const RootSystem& R);

struct Config {
  long long max_dim = 5000;
  long long weyl_bound = 100000;
  int height_bound = 8;
  int parallel_workers = 1;
  std::string output_format = "json";
};
// path, else $COHOMOLIB_CONFIG, else defaults; the file is a JSON object
Config load_config(const std::optional<std::string>& path);
void validate_config(const Config& c);

// flat "key: value" rendering for output_format = table
std::string render_table(const json& j);

}  // namespace cohomolib
