#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "cohomolib/io.hpp"

using namespace cohomolib;

namespace {

struct Budget : std::runtime_error {
  json partial;
  Budget(const std::string& m, json p) : std::runtime_error(m), partial(std::move(p)) {}
};

EngineKind engine_from(const std::string& s) {
  if (s == "auto") return EngineKind::Auto;
  if (s == "projection") return EngineKind::Projection;
  if (s == "closure") return EngineKind::Closure;
  throw UserError("engine must be auto, projection or closure");
}

RootSystem roots_of(const std::string& type) { return RootSystem(CartanType::parse(type)); }

IVec checked_weight(const RootSystem& R, const std::string& s, const char* what) {
  IVec w = parse_weight_arg(s);
  if (int(w.size()) != R.rank())
    throw UserError(std::string(what) + " needs " + std::to_string(R.rank()) + " coordinates for " + R.type().name());
  return w;
}

json pullback_report(const PullbackResult& r, const Embedding* E) {
  json j = result_json(r);
  if (E) j["embedding"] = embedding_json(*E);
  if (r.reason == Reason::BudgetExceeded) throw Budget(r.detail, j);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomolib: cohomological pullbacks between flag manifolds"};
  app.require_subcommand(1);
  std::optional<std::string> config_path;
  std::string format;
  long long seed = 0;
  app.add_option("--config", config_path, "config file (JSON); default $COHOMOLIB_CONFIG");
  app.add_option("--format", format, "json or table, overrides the config");
  app.add_option("--seed", seed, "accepted for reproducible scripts; all computation is deterministic");

  std::string type, weight, l1, l2, embedding, w_word, wt_word, engine = "auto", h1, exclude;
  int q = -1, kmax = 6, k = 2, height_bound = -1, max_length = -1;

  std::function<json(const Config&)> action;
  auto verb = [&](CLI::App* sub, std::function<json(const Config&)> f) {
    sub->callback([&action, f] { action = f; });
  };

  auto* rootsys = app.add_subcommand("rootsys", "root system data");
  rootsys->require_subcommand(1);
  auto* describe = rootsys->add_subcommand("describe", "Cartan matrix, positive roots, |W|");
  describe->add_option("--type", type, "type such as A2, A1xA1, G2")->required();
  verb(describe, [&](const Config&) { return rootsystem_json(roots_of(type)); });

  auto* weyl = app.add_subcommand("weyl", "Weyl group");
  weyl->require_subcommand(1);
  auto* wenum = weyl->add_subcommand("enumerate", "elements by length, as reduced words");
  wenum->add_option("--type", type)->required();
  wenum->add_option("--max-length", max_length);
  verb(wenum, [&](const Config& c) {
    RootSystem R = roots_of(type);
    auto groups = enumerate_weyl(R, c.weyl_bound);
    json j;
    j["schema"] = kSchema;
    j["type"] = R.type().name();
    json by = json::array();
    long long total = 0;
    for (std::size_t l = 0; l < groups.size(); ++l) {
      total += groups[l].size();
      if (max_length >= 0 && int(l) > max_length) continue;
      json g = json::array();
      for (auto& w : groups[l]) g.push_back(word_json(w));
      by.push_back({{"length", l}, {"count", groups[l].size()}, {"words", g}});
    }
    j["order"] = total;
    j["by_length"] = by;
    return j;
  });

  auto* bwb = app.add_subcommand("bwb", "Borel-Weil-Bott");
  bwb->require_subcommand(1);
  auto* resolve_cmd = bwb->add_subcommand("resolve", "cohomology of the line bundle O(lambda)");
  resolve_cmd->add_option("--type", type)->required();
  resolve_cmd->add_option("--weight", weight, "lambda, e.g. --weight=-5 or --weight=1,-3")->required();
  verb(resolve_cmd, [&](const Config&) {
    RootSystem R = roots_of(type);
    IVec l = checked_weight(R, weight, "--weight");
    return bott_json(l, resolve(R, l));
  });

  auto slices = [&](const Config& c, bool ce) {
    RootSystem R = roots_of(type);
    IVec mu = checked_weight(R, weight, "--weight");
    json j;
    j["schema"] = kSchema;
    j["type"] = R.type().name();
    j["mu"] = weight_json(mu);
    json out = json::array();
    std::vector<CohomologySlice> all;
    if (ce) {
      try {
        all = chevalley_eilenberg_all(R, mu, c.max_dim * 400);
      } catch (const BudgetError& e) {
        throw Budget(e.what(), j);
      }
    } else {
      for (int d = 0; d <= R.num_positive(); ++d) all.push_back(kostant_cohomology(R, mu, d, c.weyl_bound));
    }
    bool agree = true;
    for (auto& s : all) {
      if (q >= 0 && s.q != q) continue;
      json x;
      x["q"] = s.q;
      x["total"] = s.total();
      x["entries"] = slice_json(s);
      if (ce) {
        bool same = s.weights() == kostant_cohomology(R, mu, s.q, c.weyl_bound).weights();
        x["matches_kostant"] = same;
        agree = agree && same;
      }
      out.push_back(x);
    }
    j["slices"] = out;
    if (ce) j["matches_kostant"] = agree;
    return j;
  };
  auto* kostant = app.add_subcommand("kostant", "n-cohomology of V(mu) from the Weyl group");
  kostant->add_option("--type", type)->required();
  kostant->add_option("--weight", weight, "dominant mu")->required();
  kostant->add_option("--q", q, "single degree");
  verb(kostant, [&](const Config& c) { return slices(c, false); });
  auto* ce = app.add_subcommand("ce-oracle", "n-cohomology of V(mu) from the cochain complex");
  ce->add_option("--type", type)->required();
  ce->add_option("--weight", weight, "dominant mu")->required();
  ce->add_option("--q", q, "single degree");
  verb(ce, [&](const Config& c) { return slices(c, true); });

  auto* diag = app.add_subcommand("diag", "diagonal embeddings");
  diag->require_subcommand(1);
  auto* dcheck = diag->add_subcommand("check", "decide the pullback along G -> G x G");
  dcheck->add_option("--type", type)->required();
  dcheck->add_option("--l1", l1)->required();
  dcheck->add_option("--l2", l2)->required();
  bool general = false;
  dcheck->add_flag("--general", general, "also run the general condition (ii) engine");
  verb(dcheck, [&](const Config& c) {
    RootSystem R = roots_of(type);
    IVec a = checked_weight(R, l1, "--l1"), b = checked_weight(R, l2, "--l2");
    PullbackResult r = diagonal_decide(R, a, b);
    json j = result_json(r);
    if (general) {
      Embedding E = make_diagonal(CartanType::parse(type));
      DecideOptions o;
      o.max_dim = c.max_dim;
      o.weyl_bound = c.weyl_bound;
      IVec lt = a;
      lt.insert(lt.end(), b.begin(), b.end());
      PullbackResult g = decide_pullback(E, lt, o);
      j["general"] = result_json(g);
      j["agree"] = g.nonzero == r.nonzero;
      if (g.reason == Reason::BudgetExceeded) throw Budget(g.detail, j);
    }
    return j;
  });
  auto* dtrip = diag->add_subcommand("triples", "(w1, w2, w) with disjoint inversion sets filling Phi_w");
  dtrip->add_option("--type", type)->required();
  verb(dtrip, [&](const Config& c) {
    RootSystem R = roots_of(type);
    json j;
    j["schema"] = kSchema;
    j["type"] = R.type().name();
    json t = json::array();
    for (auto& x : enumerate_disjoint_triples(R, c.weyl_bound))
      t.push_back({{"w1", word_json(x.w1)}, {"w2", word_json(x.w2)}, {"w", word_json(x.w)}});
    j["count"] = t.size();
    j["triples"] = t;
    return j;
  });

  auto* emb = app.add_subcommand("embed", "embedding descriptors");
  emb->require_subcommand(1);
  auto* evalid = emb->add_subcommand("validate", "check a descriptor and print its data");
  evalid->add_option("--embedding", embedding, "descriptor JSON or @file")->required();
  verb(evalid, [&](const Config&) {
    Embedding E = embedding_from_text(embedding);
    json j;
    j["schema"] = kSchema;
    j["valid"] = true;
    j["embedding"] = embedding_json(E);
    j["small"] = E.small().type().name();
    j["big"] = E.big().type().name();
    j["restrict_matrix"] = E.restrict_matrix;
    if (E.adjoint) {
      j["c"] = to_string(E.adjoint->c);
      j["wt_word"] = word_json(E.adjoint->wt);
      j["rational_images"] = E.has_images();
    }
    if (E.variant == Variant::PrincipalSL2) j["fundamental_values"] = principal_fundamental_values(E.big());
    return j;
  });

  auto* decide = app.add_subcommand("decide", "decide the pullback for one weight lambda~");
  decide->add_option("--embedding", embedding, "descriptor JSON or @file")->required();
  decide->add_option("--weight", weight, "lambda~ in fundamental coordinates of the big algebra")->required();
  decide->add_option("--engine", engine, "auto | projection | closure");
  verb(decide, [&](const Config& c) {
    Embedding E = embedding_from_text(embedding);
    IVec lt = checked_weight(E.big(), weight, "--weight");
    DecideOptions o;
    o.max_dim = c.max_dim;
    o.weyl_bound = c.weyl_bound;
    o.engine = engine_from(engine);
    return pullback_report(decide_pullback(E, lt, o), &E);
  });

  auto* principal = app.add_subcommand("principal", "principal sl2 curves");
  principal->require_subcommand(1);
  auto* pclass = principal->add_subcommand("classify", "trichotomy for lambda~ of length one");
  pclass->add_option("--type", type)->required();
  pclass->add_option("--weight", weight)->required();
  verb(pclass, [&](const Config&) {
    Embedding E = make_principal(CartanType::parse(type));
    IVec lt = checked_weight(E.big(), weight, "--weight");
    return principal_json(principal_classify(E, lt));
  });
  auto* pvals = principal->add_subcommand("values", "restrictions of the fundamental weights");
  pvals->add_option("--type", type)->required();
  verb(pvals, [&](const Config&) {
    RootSystem R = roots_of(type);
    json j;
    j["schema"] = kSchema;
    j["type"] = R.type().name();
    j["values"] = principal_fundamental_values(R);
    j["coroot_coefficients"] = principal_coroot_coefficients(R);
    return j;
  });

  auto* compose = app.add_subcommand("compose", "composed embeddings");
  compose->require_subcommand(1);
  auto* cdec = compose->add_subcommand("decide", "stage by stage decision");
  cdec->add_option("--embedding", embedding, "Composed descriptor JSON or @file")->required();
  cdec->add_option("--weight", weight)->required();
  verb(cdec, [&](const Config& c) {
    Embedding E = embedding_from_text(embedding);
    IVec lt = checked_weight(E.big(), weight, "--weight");
    DecideOptions o;
    o.max_dim = c.max_dim;
    o.weyl_bound = c.weyl_bound;
    return pullback_report(composed_decide(E, lt, o), &E);
  });

  auto* monoid = app.add_subcommand("monoid", "monoids of cohomological pairs");
  monoid->require_subcommand(1);
  auto* probe = monoid->add_subcommand("probe", "flag D points inside a box");
  probe->add_option("--embedding", embedding)->required();
  probe->add_option("--w", w_word, "w as a 1-based reduced word, \"e\" for identity; default w_o")->default_str("");
  probe->add_option("--wt", wt_word, "w~ as a 1-based word; default from the adjoint data")->default_str("");
  probe->add_option("--height-bound", height_bound, "bound on the coordinate sum of mu~");
  probe->add_option("--exclude", exclude, "mu~ ignored for observed_k, ';'-separated");
  verb(probe, [&](const Config& c) {
    Embedding E = embedding_from_text(embedding);
    WeylElement wt = wt_word.empty() && E.adjoint ? E.adjoint->wt : weyl_from_word_arg(E.big(), wt_word);
    WeylElement w = w_word.empty() ? longest_element(E.small()) : weyl_from_word_arg(E.small(), w_word);
    std::vector<IVec> ex;
    std::string rest = exclude;
    while (!rest.empty()) {
      auto p = rest.find(';');
      std::string one = rest.substr(0, p);
      if (!one.empty()) ex.push_back(checked_weight(E.big(), one, "--exclude"));
      rest = p == std::string::npos ? "" : rest.substr(p + 1);
    }
    DecideOptions o;
    o.max_dim = c.max_dim;
    o.weyl_bound = c.weyl_bound;
    auto s = C_monoid_probe(E, w, wt, height_bound > 0 ? height_bound : c.height_bound, o, ex);
    json j = monoid_json(s);
    j["embedding"] = embedding_json(E);
    return j;
  });

  auto* adj = app.add_subcommand("adjoint", "adjoint embeddings g -> sl(g)");
  adj->require_subcommand(1);
  auto* adeg = adj->add_subcommand("degrees", "degrees of the basic invariants of S(g)");
  adeg->add_option("--type", type)->required();
  adeg->add_option("--kmax", kmax);
  verb(adeg, [&](const Config&) {
    RootSystem R = roots_of(type);
    json j;
    j["schema"] = kSchema;
    j["type"] = R.type().name();
    j["kmax"] = kmax;
    j["degrees"] = invariant_degrees(R, kmax);
    return j;
  });
  auto* apull = adj->add_subcommand("pullback", "lambda~ = w~^-1 . (k omega~1)");
  apull->add_option("--type", type)->required();
  apull->add_option("--h1", h1, "coroot coordinates, e.g. 1,1+w")->required();
  apull->add_option("--k", k);
  verb(apull, [&](const Config&) {
    std::vector<QOmega> h;
    std::string rest = h1;
    while (true) {
      auto p = rest.find(',');
      h.push_back(parse_qomega(rest.substr(0, p)));
      if (p == std::string::npos) break;
      rest = rest.substr(p + 1);
    }
    Embedding E = make_adjoint(CartanType::parse(type), h);
    json hj = json::array();
    for (auto& x : h) hj.push_back(to_string(x));
    E.spec = json({{"variant", "AdjointIntoSL"}, {"type", E.small().type().name()}, {"h1", hj}}).dump();
    return pullback_report(adjoint_pullback(E, k), &E);
  });

  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* s : a->get_subcommands({})) {
      s->fallthrough();
      fall(s);
    }
  };
  fall(&app);

  Config cfg;
  auto emit = [&](const json& j) {
    if (cfg.output_format == "table")
      std::cout << render_table(j);
    else
      std::cout << j.dump(2) << "\n";
  };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    cfg = load_config(config_path);
    if (!format.empty()) cfg.output_format = format;
    validate_config(cfg);
    emit(action(cfg));
    return 0;
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Budget& e) {
    json j = e.partial;
    j["schema"] = kSchema;
    j["error"] = "BudgetExceeded";
    j["detail"] = e.what();
    emit(j);
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    emit(json({{"schema", kSchema}, {"error", "BudgetExceeded"}, {"detail", e.what()}}));
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  }
}
