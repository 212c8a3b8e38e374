#include "support.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cohomolib/io.hpp"

using namespace cohomolib;

namespace {

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

const char* kDescriptors[] = {
    R"({"variant": "Diagonal", "type": "A2"})",
    R"({"variant": "RegularSubsystem", "type": "A3", "positive_roots": [["1","0","0"], ["0","0","1"]]})",
    R"({"variant": "PrincipalSL2", "type": "B2"})",
    R"({"variant": "AdjointIntoSL", "type": "A2", "h1": ["1", "1+w"]})",
    R"({"variant": "AdjointIntoSL", "type": "A1", "h1": [1]})",
    R"({"variant": "Explicit", "small": "A1", "big": "A2", "e": [[["e1","1"],["e2","1"]]], "f": [[["f1","2"],["f2","2"]]]})",
    R"({"variant": "Composed", "stages": [{"variant": "Diagonal", "type": "A1"},
        {"variant": "RegularSubsystem", "type": "A3", "positive_roots": [[1,0,0],[0,0,1]]}]})",
};

}  // namespace

TEST_CASE("weights and words") {
  CHECK(weight_json({1, -2}) == json::parse(R"(["1","-2"])"));
  for (IVec w : std::vector<IVec>{{0}, {3, -7}, {1, 2, -3, 4}}) CHECK(weight_from_json(weight_json(w)) == w);
  CHECK(parse_weight_arg("-5") == IVec{-5});
  CHECK(parse_weight_arg("1,-3") == IVec{1, -3});
  CHECK(parse_weight_arg(R"(["1","-3"])") == IVec{1, -3});
  CHECK(parse_weight_arg("[1,-3]") == IVec{1, -3});
  CHECK(parse_weight_arg(R"(["4/2"])") == IVec{2});
  CHECK_THROWS_AS(parse_weight_arg(R"(["1/2"])"), UserError);
  CHECK_THROWS_AS(parse_weight_arg("1,x"), UserError);
  CHECK_THROWS_AS(parse_weight_arg("[1,"), UserError);

  RootSystem R(CartanType::parse("A3"));
  auto w = weyl_from_word_arg(R, "1,2,1");
  CHECK(word_json(w).size() == 3);
  std::string back;
  for (auto& x : word_json(w)) back += (back.empty() ? "" : ",") + std::to_string(x.get<int>());
  CHECK(weyl_from_word_arg(R, back) == w);
  CHECK(weyl_from_word_arg(R, "e") == WeylElement::identity(R));
  CHECK(weyl_from_word_arg(R, "") == WeylElement::identity(R));
  CHECK_THROWS_AS(weyl_from_word_arg(R, "4"), UserError);
}

TEST_CASE("descriptor round trip") {
  for (auto text : kDescriptors) {
    auto E = embedding_from_text(text);
    auto j = embedding_json(E);
    auto F = embedding_from_json(j);
    CHECK(F.spec == E.spec);
    CHECK(F.variant == E.variant);
    CHECK(F.restrict_matrix == E.restrict_matrix);
    CHECK(F.images == E.images);
    CHECK(F.big().name() == E.big().name());
    // a report carrying the descriptor is accepted as well
    json report = result_json(decide_pullback(E, IVec(E.big().rank(), 0)));
    report["embedding"] = j;
    CHECK(embedding_from_json(report).spec == E.spec);
  }
  auto path = temp_file("cohomolib_desc.json", kDescriptors[0]);
  CHECK(embedding_from_text("@" + path).variant == Variant::Diagonal);
  CHECK_THROWS_AS(embedding_from_text(R"({"variant": "Nope"})"), UserError);
  CHECK_THROWS_AS(embedding_from_text(R"({"variant": "Diagonal"})"), UserError);
  CHECK_THROWS_AS(embedding_from_text("{"), UserError);
  CHECK_THROWS_AS(embedding_from_text("@/nonexistent/file.json"), UserError);
  CHECK_THROWS_AS(embedding_from_text(R"({"variant": "AdjointIntoSL", "type": "A1", "h1": ["0"]})"), UserError);
}

TEST_CASE("result reports") {
  auto E = make_diagonal(CartanType::parse("A1"));
  auto j = result_json(decide_pullback(E, {2, -5}));
  CHECK(j["schema"] == kSchema);
  CHECK(j["verdict"] == "NonZero");
  CHECK(j["q"] == 1);
  CHECK(weight_from_json(j["mu"]) == IVec{1});
  CHECK(weight_from_json(j["mu_tilde"]) == IVec{2, 3});
  CHECK(j["wt_word"] == json::parse("[2]"));
  CHECK(j.contains("condition_ii"));
  auto z = result_json(decide_pullback(E, {-1, 0}));
  CHECK(z["verdict"] == "Zero");
  CHECK(z["reason"] == "SingularBig");
  auto t = render_table(j);
  CHECK(t.find("verdict: NonZero") != std::string::npos);
  CHECK(t.find("condition_ii.engine: projection") != std::string::npos);

  auto P = make_principal(CartanType::parse("A2"));
  auto pj = principal_json(principal_classify(P, act_affine(WeylElement::simple(P.big(), 0), IVec{4, 0})));
  CHECK(pj["case"] == principal_case_name(PrincipalCase::CaseII));
  CHECK(pj["j"] == 1);
}

TEST_CASE("configuration") {
  auto c = load_config(std::nullopt);
  CHECK(c.max_dim == 5000);
  CHECK(c.weyl_bound == 100000);
  CHECK(c.height_bound == 8);
  auto p = temp_file("cohomolib_cfg.json", R"({"max_dim": 99, "output_format": "table"})");
  c = load_config(p);
  CHECK(c.max_dim == 99);
  CHECK(c.output_format == "table");
  setenv("COHOMOLIB_CONFIG", p.c_str(), 1);
  CHECK(load_config(std::nullopt).max_dim == 99);
  unsetenv("COHOMOLIB_CONFIG");
  CHECK_THROWS_AS(load_config(temp_file("c1.json", R"({"max_dim": -1})")), UserError);
  CHECK_THROWS_AS(load_config(temp_file("c2.json", R"({"colour": 1})")), UserError);
  CHECK_THROWS_AS(load_config(temp_file("c3.json", R"({"max_dim": "big"})")), UserError);
  CHECK_THROWS_AS(load_config(temp_file("c4.json", R"({"output_format": "xml"})")), UserError);
  CHECK_THROWS_AS(load_config(temp_file("c5.json", "[1]")), UserError);
}
