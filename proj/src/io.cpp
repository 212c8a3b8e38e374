#include "cohomolib/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cohomolib {

json weight_json(const IVec& w) {
  json a = json::array();
  for (long long x : w) a.push_back(std::to_string(x));
  return a;
}

namespace {

long long integral_entry(const json& x) {
  if (x.is_number_integer()) return x.get<long long>();
  if (x.is_string()) {
    Q q = parse_rational(x.get<std::string>());
    if (q.get_den() != 1) throw UserError("weight coordinate " + x.get<std::string>() + " is not integral");
    return to_ll(q.get_num());
  }
  throw UserError("weight coordinates must be strings or integers");
}

json parse_json_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UserError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UserError(std::string("descriptor is missing \"") + key + "\"");
  return j.at(key);
}

std::string str_field(const json& j, const char* key) {
  const json& f = field(j, key);
  if (!f.is_string()) throw UserError(std::string("descriptor field \"") + key + "\" must be a string");
  return f.get<std::string>();
}

// chevalley label -> basis index of the algebra of R
int label_index(const RootSystem& R, const std::string& s) {
  int N = R.num_positive(), l = R.rank();
  if (s.size() < 2) throw UserError("bad basis label " + s);
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(s.substr(1), &used) - 1;
    if (used != s.size() - 1) throw UserError("bad basis label " + s);
  } catch (const std::logic_error&) {
    throw UserError("bad basis label " + s);
  }
  if (s[0] == 'e' && k >= 0 && k < N) return k;
  if (s[0] == 'h' && k >= 0 && k < l) return N + k;
  if (s[0] == 'f' && k >= 0 && k < N) return N + l + k;
  throw UserError("bad basis label " + s);
}

std::string index_label(const RootSystem& R, int a) {
  int N = R.num_positive(), l = R.rank();
  if (a < N) return "e" + std::to_string(a + 1);
  if (a < N + l) return "h" + std::to_string(a - N + 1);
  return "f" + std::to_string(a - N - l + 1);
}

std::vector<SVec> images_from(const RootSystem& big, const json& arr) {
  if (!arr.is_array()) throw UserError("explicit images must be a list");
  std::vector<SVec> out;
  for (auto& img : arr) {
    if (!img.is_array()) throw UserError("each image is a list of [label, rational] pairs");
    SVec v;
    for (auto& pr : img) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string())
        throw UserError("each image term is a [label, rational] pair");
      Q c = pr[1].is_string() ? parse_rational(pr[1].get<std::string>())
                              : pr[1].is_number_integer() ? qll(pr[1].get<long long>())
                                                          : throw UserError("coefficient must be a rational string");
      v = sv_add(v, SVec{{label_index(big, pr[0].get<std::string>()), c}});
    }
    out.push_back(v);
  }
  return out;
}

json images_json(const RootSystem& big, const std::vector<SVec>& v) {
  json a = json::array();
  for (auto& s : v) {
    json img = json::array();
    for (auto& [b, c] : s) img.push_back({index_label(big, b), to_string(c)});
    a.push_back(img);
  }
  return a;
}

Embedding build(const json& j, json& canon) {
  std::string variant = str_field(j, "variant");
  canon = json::object();
  canon["variant"] = variant;
  if (variant == "Diagonal") {
    auto t = CartanType::parse(str_field(j, "type"));
    canon["type"] = t.name();
    return make_diagonal(t);
  }
  if (variant == "RegularSubsystem") {
    auto t = CartanType::parse(str_field(j, "type"));
    const json& pr = field(j, "positive_roots");
    if (!pr.is_array()) throw UserError("positive_roots must be a list of root coordinate lists");
    std::vector<IVec> roots;
    for (auto& r : pr) roots.push_back(weight_from_json(r));
    canon["type"] = t.name();
    json rj = json::array();
    for (auto& r : roots) rj.push_back(r);
    canon["positive_roots"] = rj;
    return make_regular(t, roots);
  }
  if (variant == "PrincipalSL2") {
    auto t = CartanType::parse(str_field(j, "type"));
    canon["type"] = t.name();
    return make_principal(t);
  }
  if (variant == "AdjointIntoSL") {
    auto t = CartanType::parse(str_field(j, "type"));
    const json& h = field(j, "h1");
    if (!h.is_array()) throw UserError("h1 must be a list of coordinates");
    std::vector<QOmega> h1;
    json hj = json::array();
    for (auto& x : h) {
      QOmega q = x.is_string() ? parse_qomega(x.get<std::string>())
                               : x.is_number_integer() ? QOmega(qll(x.get<long long>()))
                                                       : throw UserError("h1 coordinates must be strings");
      h1.push_back(q);
      hj.push_back(to_string(q));
    }
    canon["type"] = t.name();
    canon["h1"] = hj;
    return make_adjoint(t, h1);
  }
  if (variant == "Explicit") {
    auto s = CartanType::parse(str_field(j, "small"));
    auto b = CartanType::parse(str_field(j, "big"));
    RootSystem Rb(b);
    auto e = images_from(Rb, field(j, "e"));
    auto f = images_from(Rb, field(j, "f"));
    canon["small"] = s.name();
    canon["big"] = b.name();
    canon["e"] = images_json(Rb, e);
    canon["f"] = images_json(Rb, f);
    return make_explicit(s, b, e, f);
  }
  if (variant == "Composed") {
    const json& st = field(j, "stages");
    if (!st.is_array() || st.empty()) throw UserError("stages must be a nonempty list, small to big");
    std::vector<Embedding> stages;
    json sj = json::array();
    for (auto& x : st) {
      json c;
      stages.push_back(build(x, c));
      sj.push_back(c);
    }
    canon["stages"] = sj;
    return make_composed(std::move(stages));
  }
  throw UserError("unknown variant \"" + variant + "\"");
}

}  // namespace

IVec weight_from_json(const json& j) {
  if (!j.is_array()) throw UserError("a weight is a list of coordinates");
  IVec w;
  for (auto& x : j) w.push_back(integral_entry(x));
  return w;
}

IVec parse_weight_arg(const std::string& s) {
  std::string t = s;
  while (!t.empty() && std::isspace((unsigned char)t.front())) t.erase(t.begin());
  if (!t.empty() && t.front() == '[') return weight_from_json(parse_json_text(t, "weight"));
  try {
    return parse_ivec(t);
  } catch (const UserError&) {
    throw;
  } catch (const std::exception&) {
    throw UserError("malformed weight \"" + s + "\"");
  }
}

json word_json(const WeylElement& w) {
  json a = json::array();
  for (int i : w.word1()) a.push_back(i);
  return a;
}

WeylElement weyl_from_word_arg(const RootSystem& R, const std::string& s) {
  if (s.empty() || s == "e") return WeylElement::identity(R);
  IVec v = parse_weight_arg(s);
  std::vector<int> word;
  for (long long i : v) {
    if (i < 1 || i > R.rank()) throw UserError("simple reflection index " + std::to_string(i) + " out of range");
    word.push_back(int(i - 1));
  }
  return WeylElement::from_word(R, word);
}

Embedding embedding_from_json(const json& j) {
  // a report carries its descriptor under "embedding"
  if (j.is_object() && !j.contains("variant") && j.contains("embedding")) return embedding_from_json(j.at("embedding"));
  json canon;
  Embedding E = build(j, canon);
  E.spec = canon.dump();
  return E;
}

Embedding embedding_from_text(const std::string& text) {
  std::string t = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
  return embedding_from_json(parse_json_text(t, "descriptor"));
}

json embedding_json(const Embedding& E) {
  if (!E.spec.empty()) return json::parse(E.spec);
  json j;
  j["variant"] = variant_name(E.variant);
  switch (E.variant) {
    case Variant::Diagonal:
      j["type"] = E.small().type().name();
      break;
    case Variant::RegularSubsystem: {
      j["type"] = E.big().type().name();
      json rj = json::array();
      for (int k : E.simple_images) rj.push_back(E.big().positive_root(k));
      // simple images generate the same subsystem
      j["positive_roots"] = rj;
      break;
    }
    case Variant::PrincipalSL2:
      j["type"] = E.big().type().name();
      break;
    case Variant::AdjointIntoSL: {
      j["type"] = E.small().type().name();
      json hj = json::array();
      for (auto& q : E.adjoint->h1) hj.push_back(to_string(q));
      j["h1"] = hj;
      break;
    }
    case Variant::Explicit: {
      j["small"] = E.small().type().name();
      j["big"] = E.big().type().name();
      std::vector<SVec> e, f;
      for (int i = 0; i < E.small().rank(); ++i) {
        int p = E.small().root_index(E.small().simple_root(i));
        e.push_back(E.images[E.g->e(p)]);
        f.push_back(E.images[E.g->f(p)]);
      }
      j["e"] = images_json(E.big(), e);
      j["f"] = images_json(E.big(), f);
      break;
    }
    case Variant::Composed: {
      json sj = json::array();
      for (auto& s : E.stages) sj.push_back(embedding_json(s));
      j["stages"] = sj;
      break;
    }
  }
  return j;
}

json result_json(const PullbackResult& r) {
  json j;
  j["schema"] = kSchema;
  j["verdict"] = r.nonzero ? "NonZero" : "Zero";
  if (!r.nonzero) j["reason"] = reason_name(r.reason);
  if (!r.detail.empty()) j["detail"] = r.detail;
  j["path"] = r.path;
  j["lambda_tilde"] = weight_json(r.lambda_tilde);
  if (!r.lambda.empty()) j["lambda"] = weight_json(r.lambda);
  bool degree_known = r.nonzero || r.reason == Reason::ConditionIFails || r.reason == Reason::ConditionIIFails ||
                      r.reason == Reason::BudgetExceeded;
  if (degree_known) j["q"] = r.q;
  if (r.w) j["w_word"] = word_json(*r.w);
  if (r.wt) j["wt_word"] = word_json(*r.wt);
  if (!r.mu.empty()) j["mu"] = weight_json(r.mu);
  if (!r.mu_tilde.empty()) j["mu_tilde"] = weight_json(r.mu_tilde);
  if (r.nonzero || r.reason == Reason::ConditionIIFails) j["a"] = to_string(r.a);
  if (!r.component_note.empty()) j["component_note"] = r.component_note;
  if (r.cond2) {
    json c;
    c["contains"] = r.cond2->contains;
    c["engine"] = r.cond2->engine;
    c["certified_mod_p"] = r.cond2->certified_mod_p;
    c["sector_dim"] = r.cond2->sector_dim;
    c["multiplicity"] = r.cond2->multiplicity;
    c["materialized"] = r.cond2->materialized;
    c["top_reached"] = r.cond2->top_reached;
    j["condition_ii"] = c;
  }
  return j;
}

json principal_json(const PrincipalVerdict& v) {
  json j = result_json(v.result);
  j["case"] = principal_case_name(v.kind);
  j["j"] = v.j + 1;
  j["c"] = weight_json(v.c);
  j["lambda_value"] = std::to_string(v.lambda);
  return j;
}

json monoid_json(const MonoidSample& s) {
  json j;
  j["schema"] = kSchema;
  j["w_word"] = word_json(s.w);
  j["wt_word"] = word_json(s.wt);
  json pts = json::array();
  for (auto& p : s.points) {
    json x;
    x["mu"] = weight_json(p.mu);
    x["mu_tilde"] = weight_json(p.mu_tilde);
    x["in_c"] = flag_name(p.in_c);
    if (!p.note.empty()) x["note"] = p.note;
    pts.push_back(x);
  }
  j["points"] = pts;
  json gens = json::array();
  for (auto k : s.generators) gens.push_back(weight_json(s.points[k].mu_tilde));
  j["generators"] = gens;
  json viol = json::array();
  for (auto [a, b] : s.additivity_violations)
    viol.push_back({weight_json(s.points[a].mu_tilde), weight_json(s.points[b].mu_tilde)});
  j["additivity_violations"] = viol;
  j["contains_zero"] = s.contains_zero;
  json ex = json::array();
  for (auto k : s.excluded) ex.push_back(weight_json(s.points[k].mu_tilde));
  j["excluded"] = ex;
  j["observed_k"] = s.observed_k ? json(*s.observed_k) : json(nullptr);
  j["unknown"] = s.unknown;
  return j;
}

json slice_json(const CohomologySlice& s) {
  json a = json::array();
  for (auto& e : s.entries) {
    json x;
    x["weight"] = weight_json(e.weight);
    x["dim"] = e.dim;
    x["w_word"] = e.w ? word_json(*e.w) : json(nullptr);
    a.push_back(x);
  }
  return a;
}

json character_json(const Character& chi) {
  json j = json::object();
  for (auto& [w, m] : chi) j[join(w)] = m;
  return j;
}

json bott_json(const IVec& lambda, const BottResult& b) {
  json j;
  j["schema"] = kSchema;
  j["lambda"] = weight_json(lambda);
  j["regular"] = !b.singular;
  if (b.singular) {
    j["witness"] = weight_json(b.witness);
  } else {
    j["q"] = b.q;
    j["w_word"] = word_json(b.w);
    j["mu"] = weight_json(b.mu);
    j["dual"] = b.dual;
  }
  j["module"] = b.module_note();
  return j;
}

json rootsystem_json(const RootSystem& R) {
  json j;
  j["schema"] = kSchema;
  j["type"] = R.type().name();
  j["rank"] = R.rank();
  j["cartan"] = R.cartan();
  json pr = json::array();
  for (auto& r : R.positive_roots()) pr.push_back(r);
  j["positive_roots"] = pr;
  j["num_positive"] = R.num_positive();
  j["weyl_order"] = weyl_group_order(R).get_str();
  json d = json::array();
  for (auto& q : R.half_lengths()) d.push_back(to_string(q));
  j["half_lengths"] = d;
  return j;
}

void validate_config(const Config& c) {
  if (c.max_dim <= 0 || c.weyl_bound <= 0 || c.height_bound <= 0 || c.parallel_workers <= 0)
    throw UserError("config bounds must be positive");
  if (c.output_format != "json" && c.output_format != "table")
    throw UserError("output_format must be json or table");
}

Config load_config(const std::optional<std::string>& path) {
  Config c;
  std::optional<std::string> p = path;
  if (!p) {
    if (const char* env = std::getenv("COHOMOLIB_CONFIG"); env && *env) p = env;
  }
  if (p) {
    json j = parse_json_text(read_file(*p), "config");
    if (!j.is_object()) throw UserError("config must be a JSON object");
    try {
      for (auto& [k, v] : j.items()) {
        if (k == "max_dim") c.max_dim = v.get<long long>();
        else if (k == "weyl_bound") c.weyl_bound = v.get<long long>();
        else if (k == "height_bound") c.height_bound = v.get<int>();
        else if (k == "parallel_workers") c.parallel_workers = v.get<int>();
        else if (k == "output_format") c.output_format = v.get<std::string>();
        else throw UserError("unknown config key \"" + k + "\"");
      }
    } catch (const json::type_error& e) {
      throw UserError(std::string("config value has the wrong type: ") + e.what());
    }
  }
  validate_config(c);
  return c;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  std::string v;
  if (j.is_string()) {
    v = j.get<std::string>();
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) v += ",";
      v += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
    }
    v = "(" + v + ")";
  } else {
    v = j.dump();
  }
  out << prefix << ": " << v << "\n";
}

}  // namespace

std::string render_table(const json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace cohomolib
