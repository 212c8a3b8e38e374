// Thin bindings: everything crosses the boundary as JSON text, the Python side decodes it.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohomolib/io.hpp"

namespace py = pybind11;
using namespace cohomolib;

namespace {

RootSystem roots_of(const std::string& t) { return RootSystem(CartanType::parse(t)); }

IVec sized(const RootSystem& R, const IVec& w) {
  if (int(w.size()) != R.rank())
    throw UserError("weight needs " + std::to_string(R.rank()) + " coordinates for " + R.type().name());
  return w;
}

DecideOptions options(long long max_dim, const std::string& engine) {
  DecideOptions o;
  o.max_dim = max_dim;
  if (engine == "projection") o.engine = EngineKind::Projection;
  else if (engine == "closure") o.engine = EngineKind::Closure;
  else if (engine != "auto") throw UserError("engine must be auto, projection or closure");
  return o;
}

WeylElement word_or(const RootSystem& R, const std::optional<std::vector<int>>& word, const WeylElement& dflt) {
  if (!word) return dflt;
  std::vector<int> z;
  for (int s : *word) {
    if (s < 1 || s > R.rank()) throw UserError("word letters run from 1 to the rank");
    z.push_back(s - 1);
  }
  return WeylElement::from_word(R, z);
}

std::string decide(const std::string& embedding, const IVec& weight, long long max_dim, const std::string& engine) {
  Embedding E = embedding_from_text(embedding);
  json j = result_json(decide_pullback(E, sized(E.big(), weight), options(max_dim, engine)));
  j["embedding"] = embedding_json(E);
  return j.dump();
}

std::string diagonal(const std::string& type, const IVec& l1, const IVec& l2) {
  RootSystem R = roots_of(type);
  return result_json(diagonal_decide(R, sized(R, l1), sized(R, l2))).dump();
}

std::string resolve_line_bundle(const std::string& type, const IVec& weight) {
  RootSystem R = roots_of(type);
  return bott_json(weight, resolve(R, sized(R, weight))).dump();
}

std::string kostant(const std::string& type, const IVec& mu) {
  RootSystem R = roots_of(type);
  json out = json::array();
  for (int q = 0; q <= R.num_positive(); ++q) {
    auto s = kostant_cohomology(R, sized(R, mu), q);
    out.push_back({{"q", q}, {"total", s.total()}, {"entries", slice_json(s)}});
  }
  return out.dump();
}

std::string principal(const std::string& type, const IVec& weight) {
  Embedding E = make_principal(CartanType::parse(type));
  return principal_json(principal_classify(E, sized(E.big(), weight))).dump();
}

std::string probe(const std::string& embedding, const std::optional<std::vector<int>>& w,
                  const std::optional<std::vector<int>>& wt, int height_bound, long long max_dim) {
  Embedding E = embedding_from_text(embedding);
  if (!wt && !E.adjoint) throw UserError("wt is required unless the embedding is adjoint");
  WeylElement big = wt ? word_or(E.big(), wt, WeylElement::identity(E.big())) : E.adjoint->wt;
  WeylElement small = word_or(E.small(), w, longest_element(E.small()));
  return monoid_json(C_monoid_probe(E, small, big, height_bound, options(max_dim, "auto"))).dump();
}

}  // namespace

PYBIND11_MODULE(_cohomolib, m) {
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<UserError>(m, "UserError", PyExc_ValueError);
  m.def("rootsystem", [](const std::string& t) { return rootsystem_json(roots_of(t)).dump(); });
  m.def("resolve", &resolve_line_bundle);
  m.def("kostant", &kostant);
  m.def("decide", &decide);
  m.def("diagonal_decide", &diagonal);
  m.def("principal_classify", &principal);
  m.def("principal_values", [](const std::string& t) { return principal_fundamental_values(roots_of(t)); });
  m.def("invariant_degrees", [](const std::string& t, int kmax) { return invariant_degrees(roots_of(t), kmax); });
  m.def("monoid_probe", &probe);
}
