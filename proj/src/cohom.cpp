#include "cohomolib/cohom.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cohomolib {

std::string reason_name(Reason r) {
  switch (r) {
    case Reason::None: return "None";
    case Reason::SingularBig: return "SingularBig";
    case Reason::SingularSmall: return "SingularSmall";
    case Reason::DegreeMismatch: return "DegreeMismatch";
    case Reason::ConditionIFails: return "ConditionIFails";
    case Reason::ConditionIIFails: return "ConditionIIFails";
    case Reason::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::string principal_case_name(PrincipalCase c) {
  switch (c) {
    case PrincipalCase::CaseI: return "Case(i)";
    case PrincipalCase::CaseII: return "Case(ii)";
    case PrincipalCase::CaseIII: return "Case(iii)";
    case PrincipalCase::Zero: return "Zero";
  }
  return "?";
}

std::string flag_name(Flag f) {
  switch (f) {
    case Flag::Yes: return "yes";
    case Flag::No: return "no";
    case Flag::Unknown: return "unknown";
  }
  return "?";
}

namespace {

using WVec = std::map<IVec, std::vector<Q>>;  // big weight -> coordinates

int simple_pos(const RootSystem& R, int i) { return R.root_index(R.simple_root(i)); }

WVec apply_op(const RootActions& A, const SVec& x, const WVec& v) {
  WVec out;
  for (auto& [wt, vec] : v) {
    for (auto& [tgt, B] : A.combo(x, wt)) {
      auto acc = cohomolib::apply(B, vec);
      auto it = out.find(tgt);
      if (it == out.end()) {
        out.emplace(tgt, std::move(acc));
      } else {
        for (std::size_t t = 0; t < acc.size(); ++t) it->second[t] += acc[t];
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    bool z = true;
    for (auto& q : it->second) z = z && is_zero(q);
    it = z ? out.erase(it) : std::next(it);
  }
  return out;
}

int rank_mod_p(const QMat& m) { return rank_of(reduce_mod_p(m)); }

const Character& big_character(const RootSystem& Rt, const IVec& mu_t, EngineCache* cache) {
  static thread_local std::map<std::pair<IMat, IVec>, Character> local;
  if (cache) {
    auto it = cache->big_characters.find(mu_t);
    if (it != cache->big_characters.end()) return it->second;
    return cache->big_characters.emplace(mu_t, Freudenthal(Rt, mu_t).full()).first->second;
  }
  auto key = std::make_pair(Rt.cartan(), mu_t);
  auto it = local.find(key);
  if (it != local.end()) return it->second;
  if (local.size() > 64) local.clear();
  return local.emplace(key, Freudenthal(Rt, mu_t).full()).first->second;
}

PullbackResult zero(PullbackResult r, Reason why, std::string detail) {
  r.nonzero = false;
  r.reason = why;
  r.detail = std::move(detail);
  return r;
}

std::string vstr(const IVec& v) { return "(" + join(v) + ")"; }

}  // namespace

ConditionIIReport condition_ii(const Embedding& E, const IVec& mu_t, const IVec& nu_t, const IVec& mu,
                               const DecideOptions& opt, EngineCache* cache) {
  if (!E.has_images()) throw UserError("condition (ii) engine needs a rational embedding");
  const RootSystem& R = E.small();
  const RootSystem& Rt = E.big();
  const LieAlgebra& gt = *E.gt;
  ConditionIIReport rep;

  IMat C = centralizer_rows(E);
  IVec kappa = mat_vec(C, nu_t);
  const Character& chi = big_character(Rt, mu_t, cache);
  if (!chi.count(nu_t) || chi.at(nu_t) != 1) throw std::logic_error("extreme weight space is not one dimensional");
  std::map<IVec, long long> gdim;
  std::map<IVec, std::vector<IVec>> level;
  for (auto& [nu, m] : chi) {
    if (mat_vec(C, nu) != kappa) continue;
    IVec l = restrict_weight(E, nu);
    gdim[l] += m;
    level[l].push_back(nu);
  }
  rep.multiplicity = highest_weight_multiplicity(R, mu, [&](const IVec& x) {
    auto it = gdim.find(x);
    return it == gdim.end() ? 0LL : it->second;
  });
  rep.sector_dim = gdim.count(mu) ? gdim[mu] : 0;
  if (rep.multiplicity == 0) {
    rep.engine = "character";
    rep.contains = false;
    return rep;
  }

  EngineKind kind = opt.engine == EngineKind::Auto ? EngineKind::Projection : opt.engine;

  // the module
  std::shared_ptr<HWModule> fa, fb;  // must outlive the tensor product
  std::unique_ptr<WeightModule> own;
  const WeightModule* M = nullptr;
  if (kind == EngineKind::Projection && E.variant == Variant::Diagonal) {
    int l = R.rank();
    IVec m1(mu_t.begin(), mu_t.begin() + l), m2(mu_t.begin() + l, mu_t.end());
    auto get = [&](const IVec& hw) -> std::shared_ptr<HWModule> {
      if (cache) {
        auto it = cache->factor_modules.find(hw);
        if (it != cache->factor_modules.end()) return it->second;
      }
      ModuleOptions mo;
      mo.max_dim = opt.max_dim;
      auto p = std::make_shared<HWModule>(E.g->roots_ptr(), hw, mo);
      if (cache) cache->factor_modules[hw] = p;
      return p;
    };
    fa = get(m1);
    fb = get(m2);
    if (fa->total_dim() + fb->total_dim() > opt.max_dim) throw BudgetError("tensor factors exceed max_dim");
    own = std::make_unique<TensorModule>(E.gt->roots_ptr(), *fa, *fb);
  } else {
    ModuleOptions mo;
    mo.max_dim = opt.max_dim;
    if (kind == EngineKind::Projection) {
      mo.floors.push_back(nu_t);
      for (auto& x : level[mu]) mo.floors.push_back(x);
    }
    own = std::make_unique<HWModule>(E.gt->roots_ptr(), mu_t, mo);
  }
  M = own.get();
  rep.materialized = M->materialized();
  RootActions A(gt, *M);
  if (M->dim(nu_t) != 1) throw std::logic_error("extreme vector missing from the module");

  if (kind == EngineKind::Closure) {
    rep.engine = "closure";
    const auto* H = dynamic_cast<const HWModule*>(M);
    // global coordinates and labels (g-weight, c-weight)
    std::vector<IVec> labels;
    std::map<IVec, int> off;
    int n = 0;
    for (int k = 0; k < H->num_spaces(); ++k) {
      const IVec& wt = H->space_weight(k);
      off[wt] = H->space_offset(k);
      IVec lab = restrict_weight(E, wt);
      IVec cw = mat_vec(C, wt);
      lab.insert(lab.end(), cw.begin(), cw.end());
      for (int t = 0; t < H->space_dim(k); ++t) labels.push_back(lab);
      n += H->space_dim(k);
    }
    std::vector<SparseQ> gens;
    for (int i = 0; i < R.rank(); ++i)
      for (int a : {E.g->e(simple_pos(R, i)), E.g->f(simple_pos(R, i))}) {
        SparseQ S;
        S.rows = S.cols = n;
        S.col.resize(n);
        for (int k = 0; k < H->num_spaces(); ++k) {
          const IVec& wt = H->space_weight(k);
          for (auto& [tgt, B] : A.combo(E.images[a], wt)) {
            int ro = off.at(tgt), co = H->space_offset(k);
            for (int c = 0; c < B.c; ++c)
              for (int r = 0; r < B.r; ++r)
                if (!is_zero(B(r, c))) S.col[co + c].push_back({ro + r, B(r, c)});
          }
        }
        gens.push_back(std::move(S));
      }
    std::vector<Q> v(n, Q(0));
    v[off.at(nu_t)] = 1;
    auto sub = generated_submodule(labels, gens, v);
    Character gchar;
    for (auto& [lab, m] : sub.character) gchar[IVec(lab.begin(), lab.begin() + R.rank())] += m;
    auto dec = decompose_character(R, gchar);
    rep.contains = dec.count(mu) && dec[mu] > 0;
    IVec top = mu_t;
    int toff = off.at(top);
    // top vector is in the submodule iff e_top lies in the span at that label
    for (auto& b : sub.basis)
      if (!is_zero(b[toff])) rep.top_reached = true;
    return rep;
  }

  rep.engine = "projection";
  // raise the extreme vector of g-weight w^-1 mu to weight mu
  WVec x{{nu_t, {Q(1)}}};
  IVec c = restrict_weight(E, nu_t);
  int guard = 0;
  while (c != mu) {
    int i = 0;
    while (i < R.rank() && c[i] >= 0) ++i;
    if (i == R.rank()) throw std::logic_error("raising path ended at a dominant weight other than mu");
    long long a = -c[i];
    const SVec& ei = E.images[E.g->e(simple_pos(R, i))];
    for (long long t = 0; t < a; ++t) x = apply_op(A, ei, x);
    c = c + a * R.to_fundamental(R.simple_root(i));
    if (++guard > 10000) throw std::logic_error("runaway raising path");
  }
  if (x.empty()) {
    rep.contains = false;
    return rep;
  }
  rep.top_reached = x.size() == 1 && x.begin()->first == mu_t;

  std::map<IVec, int> roff;
  int N = 0;
  for (auto& nu : level[mu]) {
    roff[nu] = N;
    N += M->dim(nu);
  }
  if (N != rep.sector_dim) throw std::logic_error("sector dimension mismatch");
  long long rankF = N - rep.multiplicity;
  std::vector<std::vector<std::pair<int, Q>>> cols;
  for (int i = 0; i < R.rank() && rankF > 0; ++i) {
    IVec up = mu + R.to_fundamental(R.simple_root(i));
    auto it = level.find(up);
    if (it == level.end()) continue;
    const SVec& fi = E.images[E.g->f(simple_pos(R, i))];
    for (auto& nu : it->second) {
      int d = M->dim(nu);
      if (d == 0) continue;
      auto blocks = A.combo(fi, nu);
      for (int t = 0; t < d; ++t) {
        std::vector<std::pair<int, Q>> col;
        for (auto& [tgt, B] : blocks) {
          auto ro = roff.find(tgt);
          if (ro == roff.end()) throw std::logic_error("lowering left the sector");
          for (int r = 0; r < B.r; ++r)
            if (!is_zero(B(r, t))) col.push_back({ro->second + r, B(r, t)});
        }
        if (!col.empty()) cols.push_back(std::move(col));
      }
    }
  }
  QMat Fx(N, int(cols.size()) + 1);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& [r, v] : cols[j]) Fx(r, int(j)) = v;
  for (auto& [wt, vec] : x) {
    auto ro = roff.find(wt);
    if (ro == roff.end()) throw std::logic_error("raised vector left the sector");
    for (std::size_t t = 0; t < vec.size(); ++t) Fx(ro->second + int(t), int(cols.size())) = vec[t];
  }
  if (rankF == 0) {
    rep.contains = true;
    return rep;
  }
  if (rank_mod_p(Fx) == rankF + 1) {
    rep.contains = true;
    rep.certified_mod_p = true;
    return rep;
  }
  int rx = rank_of(Fx);
  QMat F(N, Fx.c - 1);
  for (int r = 0; r < N; ++r)
    for (int j = 0; j < F.c; ++j) F(r, j) = Fx(r, j);
  int rf = rank_of(F);
  if (rf != rankF) throw std::logic_error("rank of the lowering image disagrees with the multiplicity formula");
  rep.contains = rx == rf + 1;
  return rep;
}

PullbackResult adjoint_pullback_impl(const Embedding& E, const IVec& lambda_tilde, int k);

PullbackResult decide_pullback(const Embedding& E, const IVec& lt, const DecideOptions& opt, EngineCache* cache) {
  const RootSystem& R = E.small();
  const RootSystem& Rt = E.big();
  PullbackResult r;
  r.path = "general pipeline";
  r.lambda_tilde = lt;
  auto bt = make_dominant(Rt, lt);
  if (!bt.regular) return zero(r, Reason::SingularBig, "lambda~ + rho~ is orthogonal to " + vstr(bt.witness));
  r.wt = bt.w_lambda;
  r.mu_tilde = bt.dominant;
  r.lambda = restrict_weight(E, lt);
  auto b = make_dominant(R, r.lambda);
  if (!b.regular) return zero(r, Reason::SingularSmall, "lambda + rho is orthogonal to " + vstr(b.witness));
  r.w = b.w_lambda;
  r.mu = b.dominant;
  r.q = b.length;
  if (!E.has_images()) {
    if (E.variant != Variant::AdjointIntoSL) throw UserError("embedding has no explicit images");
    if (bt.length != b.length)
      return zero(r, Reason::DegreeMismatch, "l~(lambda~) = " + std::to_string(bt.length) + ", l(lambda) = " + std::to_string(b.length));
    if (bt.length == 0) {
      // degree zero needs no images: V(mu) is the highest component
      r.nonzero = true;
      r.a = QOmega(1);
      r.component_note = "highest component V" + vstr(r.mu) + " in V~" + vstr(r.mu_tilde);
      return r;
    }
    // only w~^-1 . (k omega~1) is reachable without rational images
    IVec top = r.mu_tilde;
    long long k = top[0];
    bool shape = true;
    for (std::size_t t = 1; t < top.size(); ++t) shape = shape && top[t] == 0;
    if (!shape || *r.wt != E.adjoint->wt) throw UserError("an irrational h1 only supports lambda~ = w~^-1 . (k omega~1)");
    return adjoint_pullback_impl(E, lt, int(k));
  }
  auto ci = condition_i(E, *r.wt);
  if (!ci.holds)
    return zero(r, Reason::ConditionIFails,
                ci.nonzero == 1 ? "the surviving wedge is not an inversion set"
                                : std::to_string(ci.nonzero) + " nonzero wedge coefficients");
  if (bt.length != b.length)
    return zero(r, Reason::DegreeMismatch, "l~(lambda~) = " + std::to_string(bt.length) + ", l(lambda) = " + std::to_string(b.length));
  if (ci.w != b.w_lambda) return zero(r, Reason::ConditionIFails, "condition (i) selects a w different from w_lambda");
  r.a = ci.a;
  IVec nu_t = act_linear(r.wt->inverse(), r.mu_tilde);
  if (nu_t != lt + Rt.sum_of(inversion_set(Rt, *r.wt))) throw std::logic_error("extreme weight identity fails");
  if (opt.skip_condition_ii) {
    r.nonzero = true;
    r.component_note = "condition (ii) not checked";
    return r;
  }
  try {
    r.cond2 = condition_ii(E, r.mu_tilde, nu_t, r.mu, opt, cache);
  } catch (const BudgetError& e) {
    return zero(r, Reason::BudgetExceeded, e.what());
  }
  r.path += " (" + r.cond2->engine + " engine)";
  if (!r.cond2->contains) return zero(r, Reason::ConditionIIFails, "V" + vstr(r.mu) + " does not occur in U(g) v~");
  r.nonzero = true;
  r.component_note = "V" + vstr(r.mu) + " in V~" + vstr(r.mu_tilde);
  return r;
}

PullbackResult diagonal_decide(const RootSystem& R, const IVec& l1, const IVec& l2) {
  PullbackResult r;
  r.path = "diagonal fast path";
  r.lambda_tilde = l1;
  r.lambda_tilde.insert(r.lambda_tilde.end(), l2.begin(), l2.end());
  auto b1 = make_dominant(R, l1), b2 = make_dominant(R, l2);
  if (!b1.regular) return zero(r, Reason::SingularBig, "first factor singular at " + vstr(b1.witness));
  if (!b2.regular) return zero(r, Reason::SingularBig, "second factor singular at " + vstr(b2.witness));
  r.mu_tilde = b1.dominant;
  r.mu_tilde.insert(r.mu_tilde.end(), b2.dominant.begin(), b2.dominant.end());
  r.lambda = l1 + l2;
  auto b = make_dominant(R, r.lambda);
  if (!b.regular) return zero(r, Reason::SingularSmall, "lambda + rho is orthogonal to " + vstr(b.witness));
  r.w = b.w_lambda;
  r.mu = b.dominant;
  auto p1 = inversion_indices(R, b1.w_lambda), p2 = inversion_indices(R, b2.w_lambda), p = inversion_indices(R, b.w_lambda);
  std::set<int> u(p1.begin(), p1.end());
  bool disjoint = true;
  for (int k : p2) disjoint = u.insert(k).second && disjoint;
  if (!disjoint) return zero(r, Reason::ConditionIFails, "inversion sets of w1 and w2 overlap");
  std::vector<IVec> uni;
  for (int k : u) uni.push_back(R.positive_root(k));
  if (!from_inversion_set(R, uni)) return zero(r, Reason::ConditionIFails, "Phi_w1 and Phi_w2 do not form an inversion set");
  if (b1.length + b2.length != b.length)
    return zero(r, Reason::DegreeMismatch,
                "l(lambda1) + l(lambda2) = " + std::to_string(b1.length + b2.length) + ", l(lambda) = " + std::to_string(b.length));
  if (u != std::set<int>(p.begin(), p.end())) return zero(r, Reason::ConditionIFails, "Phi_w1 and Phi_w2 do not fill Phi_w");
  r.q = b.length;
  r.nonzero = true;
  r.a = QOmega(1);
  r.component_note = "V" + vstr(r.mu) + " in V" + vstr(b1.dominant) + " (x) V" + vstr(b2.dominant);
  return r;
}

namespace {

IVec small_root_in_big(const Embedding& E, const IVec& small_root) {
  const RootSystem& Rt = E.big();
  IVec out(Rt.rank(), 0);
  for (std::size_t i = 0; i < small_root.size(); ++i)
    out = out + small_root[i] * Rt.positive_root(E.simple_images[i]);
  return out;
}

}  // namespace

PullbackResult regular_decide(const Embedding& E, const IVec& lt) {
  if (E.variant != Variant::RegularSubsystem) throw UserError("regular_decide needs a RegularSubsystem embedding");
  const RootSystem& R = E.small();
  const RootSystem& Rt = E.big();
  PullbackResult r;
  r.path = "regular fast path";
  r.lambda_tilde = lt;
  auto bt = make_dominant(Rt, lt);
  if (!bt.regular) return zero(r, Reason::SingularBig, "lambda~ + rho~ is orthogonal to " + vstr(bt.witness));
  r.wt = bt.w_lambda;
  r.mu_tilde = bt.dominant;
  r.lambda = restrict_weight(E, lt);
  std::set<IVec> delta(E.subsystem.begin(), E.subsystem.end());
  auto phit = inversion_set(Rt, *r.wt);
  bool inside = true;
  for (auto& b : phit) inside = inside && delta.count(b);
  auto b = make_dominant(R, r.lambda);
  if (!inside) {
    if (!b.regular) return zero(r, Reason::SingularSmall, "lambda + rho is orthogonal to " + vstr(b.witness));
    r.w = b.w_lambda;
    r.mu = b.dominant;
    return zero(r, Reason::ConditionIFails, "Phi_w~ is not contained in the subsystem");
  }
  // Phi_w~ inside Delta: w = w~ read in the small Weyl group
  std::vector<IVec> phi;
  for (int k = 0; k < R.num_positive(); ++k)
    if (std::count(phit.begin(), phit.end(), small_root_in_big(E, R.positive_root(k)))) phi.push_back(R.positive_root(k));
  auto w = from_inversion_set(R, phi);
  if (!w || int(phi.size()) != int(phit.size())) throw std::logic_error("subsystem inversion set does not lift");
  if (!b.regular || b.w_lambda != *w) throw std::logic_error("regular fast path: w_lambda differs from w~");
  if (restrict_weight(E, r.mu_tilde) != b.dominant) throw std::logic_error("regular fast path: restriction of mu~ is not mu");
  r.w = *w;
  r.mu = b.dominant;
  r.q = b.length;
  r.nonzero = true;
  r.a = QOmega(1);
  r.component_note = "highest component V" + vstr(r.mu) + " in V~" + vstr(r.mu_tilde);
  return r;
}

PrincipalVerdict principal_classify(const Embedding& E, const IVec& lt) {
  if (E.variant != Variant::PrincipalSL2) throw UserError("principal_classify needs a PrincipalSL2 embedding");
  const RootSystem& Rt = E.big();
  PrincipalVerdict v;
  auto bt = make_dominant(Rt, lt);
  if (!bt.regular || bt.length != 1) throw UserError("principal_classify needs lambda~ of length one");
  v.j = bt.w_lambda.word()[0];
  v.c = bt.dominant;
  IVec lam = restrict_weight(E, lt);
  v.lambda = lam[0];
  PullbackResult& r = v.result;
  r.path = "principal fast path";
  r.lambda_tilde = lt;
  r.lambda = lam;
  r.wt = bt.w_lambda;
  r.mu_tilde = bt.dominant;
  r.q = 1;
  auto kappa = principal_fundamental_values(Rt);
  int j = v.j;
  IVec minus_aj = -Rt.to_fundamental(Rt.simple_root(j));
  const auto& fac = Rt.type().factors[Rt.factor_of(j)];
  auto set_nonzero = [&](long long m, const std::string& note) {
    r.nonzero = true;
    r.reason = Reason::None;
    r.w = WeylElement::simple(E.small(), 0);
    r.mu = {m};
    r.a = QOmega(1);
    r.component_note = note;
  };
  if (lt == minus_aj) {
    v.kind = PrincipalCase::CaseIII;
    set_nonzero(0, "trivial module to trivial module");
    return v;
  }
  auto fallback = [&](const std::string& why) {
    v.kind = PrincipalCase::Zero;
    if (v.lambda == -1) {
      r.reason = Reason::SingularSmall;
      r.detail = "lambda = -1";
    } else if (v.lambda >= 0) {
      r.reason = Reason::DegreeMismatch;
      r.detail = "lambda = " + std::to_string(v.lambda) + " has length zero";
    } else {
      r.reason = Reason::ConditionIIFails;
      r.detail = why;
    }
  };
  if (fac.series == 'A' && fac.rank == 1) {
    long long rhs = 0;
    for (int k = 0; k < Rt.rank(); ++k)
      if (k != j) rhs += v.c[k] * kappa[k];
    bool ineq = v.c[j] >= rhs;
    if (ineq != (v.lambda <= -2)) throw std::logic_error("principal c-inequality disagrees with lambda <= -2");
    if (ineq) {
      v.kind = PrincipalCase::CaseI;
      set_nonzero(-v.lambda - 2, "V(" + std::to_string(-v.lambda - 2) + ") = V(-lambda-2)");
      return v;
    }
    fallback("c-inequality fails");
    return v;
  }
  if (fac.series == 'A' && fac.rank == 2) {
    bool pure = true;
    for (int k = 0; k < Rt.rank(); ++k)
      if (k != j && v.c[k] != 0) pure = false;
    if (pure && v.c[j] >= 2 && v.c[j] % 2 == 0) {
      v.kind = PrincipalCase::CaseII;
      set_nonzero(0, "invariants of S^" + std::to_string(v.c[j]) + "(sl2)");
      return v;
    }
    fallback(pure ? "m = " + std::to_string(v.c[j]) + " is odd: S^m(sl2) has no invariants" : "not of the form s~j.(m omega~j)");
    return v;
  }
  fallback("only lambda~ = -alpha~j survives for this ideal");
  return v;
}

PullbackResult composed_decide(const Embedding& E, const IVec& lt, const DecideOptions& opt) {
  auto stage_decide = [&](const Embedding& S, const IVec& w) -> PullbackResult {
    if (S.variant == Variant::Diagonal) {
      int l = S.small().rank();
      return diagonal_decide(S.small(), IVec(w.begin(), w.begin() + l), IVec(w.begin() + l, w.end()));
    }
    if (S.variant == Variant::RegularSubsystem) return regular_decide(S, w);
    if (S.variant == Variant::Composed) return composed_decide(S, w, opt);
    return decide_pullback(S, w, opt);
  };
  if (E.variant != Variant::Composed) return stage_decide(E, lt);
  PullbackResult out;
  out.path = "composed";
  out.lambda_tilde = lt;
  IVec cur = lt;
  std::vector<PullbackResult> parts(E.stages.size());
  for (int s = int(E.stages.size()) - 1; s >= 0; --s) {
    parts[s] = stage_decide(E.stages[s], cur);
    if (!parts[s].nonzero) {
      out = parts[s];
      out.lambda_tilde = lt;
      out.path = "composed, stage " + std::to_string(s + 1) + ": " + parts[s].path;
      out.detail = "stage " + std::to_string(s + 1) + ": " + parts[s].detail;
      return out;
    }
    cur = restrict_weight(E.stages[s], cur);
  }
  const PullbackResult& first = parts.front();
  const PullbackResult& last = parts.back();
  if (first.q != last.q) throw std::logic_error("stage degrees disagree");
  out.nonzero = true;
  out.q = last.q;
  out.wt = last.wt;
  out.mu_tilde = last.mu_tilde;
  out.w = first.w;
  out.lambda = first.lambda;
  out.mu = first.mu;
  out.a = QOmega(1);
  std::string p;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (s) p += " then ";
    p += parts[s].path;
  }
  out.path = "composed: " + p;
  out.component_note = "V" + vstr(out.mu) + " via " + std::to_string(parts.size()) + " stages";
  return out;
}

std::vector<TrivialMorphism> trivial_morphisms(const Embedding& E, int max_length, long long weyl_bound) {
  const RootSystem& Rt = E.big();
  std::vector<TrivialMorphism> out;
  auto groups = enumerate_weyl(Rt, weyl_bound);
  for (int q = 0; q <= max_length && q < int(groups.size()); ++q)
    for (auto& wt : groups[q]) {
      auto ci = condition_i(E, wt);
      if (!ci.holds) continue;
      out.push_back({wt, ci.w, act_affine(wt.inverse(), IVec(Rt.rank(), 0)), ci.a});
    }
  return out;
}

std::vector<DisjointTriple> enumerate_disjoint_triples(const RootSystem& R, long long weyl_bound) {
  std::vector<WeylElement> all;
  for (auto& g : enumerate_weyl(R, weyl_bound))
    for (auto& w : g) all.push_back(w);
  if ((long long)all.size() * (long long)all.size() > weyl_bound * 10)
    throw BudgetError("|W|^2 exceeds the enumeration bound");
  std::vector<std::vector<int>> inv;
  for (auto& w : all) inv.push_back(inversion_indices(R, w));
  std::map<std::vector<int>, std::size_t> by_set;
  for (std::size_t k = 0; k < all.size(); ++k) by_set[inv[k]] = k;
  std::vector<DisjointTriple> out;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      std::vector<int> u;
      std::set_union(inv[a].begin(), inv[a].end(), inv[b].begin(), inv[b].end(), std::back_inserter(u));
      if (u.size() != inv[a].size() + inv[b].size()) continue;
      auto it = by_set.find(u);
      if (it == by_set.end()) continue;
      out.push_back({all[a], all[b], all[it->second]});
    }
  return out;
}

MonoidSample D_monoid_points(const Embedding& E, const WeylElement& w, const WeylElement& wt, int hb) {
  const RootSystem& R = E.small();
  const RootSystem& Rt = E.big();
  auto ci = condition_i(E, wt);
  if (!ci.holds || ci.w != w) throw UserError("condition (i) fails for this (w, w~)");
  MonoidSample s;
  s.w = w;
  s.wt = wt;
  WeylElement wti = wt.inverse();
  int L = Rt.rank();
  IVec cur(L, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == L) {
      IVec mu = act_linear(w, restrict_weight(E, act_linear(wti, cur)));
      if (R.is_dominant(mu)) s.points.push_back({mu, cur, Flag::Unknown, ""});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, hb);
  std::set<IVec> present;
  for (auto& p : s.points) present.insert(p.mu_tilde);
  s.contains_zero = present.count(IVec(L, 0)) > 0;
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const IVec& m = s.points[k].mu_tilde;
    bool zero_pt = std::all_of(m.begin(), m.end(), [](long long x) { return x == 0; });
    if (zero_pt) continue;
    bool dec = false;
    for (auto& p : s.points) {
      const IVec& a = p.mu_tilde;
      if (std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; }) || a == m) continue;
      IVec b = m - a;
      if (std::all_of(b.begin(), b.end(), [](long long x) { return x >= 0; }) && present.count(b)) {
        dec = true;
        break;
      }
    }
    if (!dec) s.generators.push_back(k);
  }
  return s;
}

std::optional<int> observed_k(const MonoidSample& s, int kmax) {
  std::map<IVec, std::size_t> at;
  for (std::size_t k = 0; k < s.points.size(); ++k) at[s.points[k].mu_tilde] = k;
  std::set<std::size_t> ex(s.excluded.begin(), s.excluded.end());
  for (int k = 1; k <= kmax; ++k) {
    bool ok = true, tested = false;
    for (auto& p : s.points) {
      IVec m = (long long)k * p.mu_tilde;
      if (m == p.mu_tilde && k > 1) continue;
      auto it = at.find(m);
      if (it == at.end()) continue;
      if (std::all_of(m.begin(), m.end(), [](long long x) { return x == 0; })) continue;
      if (ex.count(it->second)) continue;
      Flag f = s.points[it->second].in_c;
      if (f == Flag::Unknown) return std::nullopt;
      tested = true;
      if (f == Flag::No) {
        ok = false;
        break;
      }
    }
    if (ok && tested) return k;
  }
  return std::nullopt;
}

PullbackResult adjoint_pullback(const Embedding& E, int k) {
  if (!E.adjoint) throw UserError("adjoint_pullback needs an AdjointIntoSL embedding");
  const RootSystem& Rt = E.big();
  IVec top(Rt.rank(), 0);
  top[0] = k;
  return adjoint_pullback_impl(E, act_affine(E.adjoint->wt.inverse(), top), k);
}

PullbackResult adjoint_pullback_impl(const Embedding& E, const IVec& lt, int k) {
  const RootSystem& R = E.small();
  const RootSystem& Rt = E.big();
  const AdjointData& ad = *E.adjoint;
  if (k < 0) throw UserError("k must be nonnegative");
  PullbackResult r;
  r.path = "adjoint fast path";
  r.lambda_tilde = lt;
  auto bt = make_dominant(Rt, lt);
  if (!bt.regular || bt.w_lambda != ad.wt || bt.length != R.num_positive())
    throw std::logic_error("w~^-1 . (k omega~1) does not resolve back through w~");
  r.wt = bt.w_lambda;
  r.mu_tilde = bt.dominant;
  r.lambda = restrict_weight(E, lt);
  if (r.lambda != IVec(R.rank(), -2)) throw std::logic_error("restricted weight is not -2 rho");
  auto b = make_dominant(R, r.lambda);
  if (!b.regular || b.length != R.num_positive() || b.w_lambda != longest_element(R))
    throw std::logic_error("-2 rho does not resolve through w_o in degree r");
  r.w = b.w_lambda;
  r.mu = b.dominant;
  r.q = b.length;
  r.a = ad.c;
  if (ad.c.zero()) return zero(r, Reason::ConditionIFails, "prod -beta_j(h1) vanishes");
  auto vals = invariants_at(*E.g, k, ad.h1);
  bool any = false;
  for (auto& v : vals) any = any || !v.zero();
  if (!any)
    return zero(r, Reason::ConditionIIFails,
                vals.empty() ? "S^" + std::to_string(k) + "(g) has no invariants"
                             : "every degree " + std::to_string(k) + " invariant vanishes at h1");
  r.nonzero = true;
  r.component_note = "invariants of S^" + std::to_string(k) + "(g), nonzero at h1";
  return r;
}

// ---------------------------------------------------------------------------

long long symmetric_invariant_count(const RootSystem& R, int k) {
  Character adj;
  for (auto& a : R.positive_roots()) {
    IVec f = R.to_fundamental(a);
    adj[f] += 1;
    adj[-f] += 1;
  }
  adj[IVec(R.rank(), 0)] += R.rank();
  return trivial_multiplicity(R, symmetric_power_character(R, adj, k));
}

std::vector<int> invariant_degrees(const RootSystem& R, int kmax) {
  std::vector<long long> series(kmax + 1, 0);  // coefficients of prod 1/(1-t^d) so far
  series[0] = 1;
  std::vector<int> degs;
  for (int k = 1; k <= kmax; ++k) {
    long long have = symmetric_invariant_count(R, k);
    long long extra = have - series[k];
    if (extra < 0) throw std::logic_error("invariant counts are not those of a polynomial ring");
    for (long long t = 0; t < extra; ++t) {
      degs.push_back(k);
      for (int m = k; m <= kmax; ++m) series[m] += series[m - k];
    }
  }
  return degs;
}

std::vector<QOmega> invariants_at(const LieAlgebra& g, int k, const std::vector<QOmega>& h) {
  const RootSystem& R = g.roots();
  int D = g.dim(), l = R.rank();
  std::vector<IVec> wt(D);
  for (int a = 0; a < D; ++a) wt[a] = g.weight(a);
  // zero weight monomials
  std::vector<std::vector<int>> mons;
  std::vector<int> cur;
  std::function<void(int, IVec)> rec = [&](int start, IVec s) {
    if (int(cur.size()) == k) {
      if (std::all_of(s.begin(), s.end(), [](long long x) { return x == 0; })) mons.push_back(cur);
      return;
    }
    for (int a = start; a < D; ++a) {
      cur.push_back(a);
      rec(a, s + wt[a]);
      cur.pop_back();
    }
  };
  rec(0, IVec(l, 0));
  if (mons.empty()) return {};
  // rows: images under e_i, f_i, indexed by target monomial
  std::map<std::vector<int>, int> row;
  std::vector<std::map<int, Q>> entries;  // per column
  entries.resize(mons.size());
  for (int i = 0; i < l; ++i) {
    int p = R.root_index(R.simple_root(i));
    for (int x : {g.e(p), g.f(p)}) {
      for (std::size_t c = 0; c < mons.size(); ++c) {
        const auto& m = mons[c];
        for (std::size_t pos = 0; pos < m.size(); ++pos)
          for (auto& [b, u] : g.bracket(x, m[pos])) {
            std::vector<int> t = m;
            t[pos] = b;
            std::sort(t.begin(), t.end());
            t.insert(t.begin(), x);  // keep images of different generators apart
            auto it = row.find(t);
            if (it == row.end()) it = row.emplace(t, int(row.size())).first;
            entries[c][it->second] += u;
          }
      }
    }
  }
  QMat A(int(row.size()), int(mons.size()));
  for (std::size_t c = 0; c < mons.size(); ++c)
    for (auto& [r, u] : entries[c]) A(r, int(c)) = u;
  QMat ker = A.r ? nullspace(A) : QMat::identity(int(mons.size()));
  // B(h_i, h) with (h_i, h_j) = A_ij / d_j
  std::vector<QOmega> bh(l);
  const auto& d = R.half_lengths();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) bh[i] += QOmega(qll(R.cartan()[i][j]) / d[j]) * h[j];
  std::vector<QOmega> mono_val(mons.size());
  for (std::size_t c = 0; c < mons.size(); ++c) {
    QOmega v(1);
    for (int a : mons[c]) {
      if (!g.is_h(a)) {
        v = QOmega(0);
        break;
      }
      v *= bh[a - g.num_positive()];
    }
    mono_val[c] = v;
  }
  std::vector<QOmega> out;
  for (int col = 0; col < ker.c; ++col) {
    QOmega s;
    for (int c = 0; c < ker.r; ++c)
      if (!is_zero(ker(c, col))) s += QOmega(ker(c, col)) * mono_val[c];
    out.push_back(s);
  }
  return out;
}

MonoidSample C_monoid_probe(const Embedding& E, const WeylElement& w, const WeylElement& wt, int hb,
                            const DecideOptions& opt, const std::vector<IVec>& exclude) {
  MonoidSample s = D_monoid_points(E, w, wt, hb);
  const RootSystem& Rt = E.big();
  EngineCache cache;
  WeylElement wti = wt.inverse();
  for (auto& p : s.points) {
    IVec lt = act_affine(wti, p.mu_tilde);
    PullbackResult r;
    bool adj_shape = E.adjoint && wt == E.adjoint->wt &&
                     std::all_of(p.mu_tilde.begin() + 1, p.mu_tilde.end(), [](long long x) { return x == 0; });
    if (adj_shape) {
      r = adjoint_pullback_impl(E, lt, int(p.mu_tilde[0]));
    } else if (!E.has_images()) {
      p.in_c = Flag::Unknown;
      p.note = "no rational images";
      ++s.unknown;
      continue;
    } else {
      DecideOptions o = opt;
      o.skip_condition_ii = false;
      r = decide_pullback(E, lt, o, &cache);
    }
    if (r.reason == Reason::BudgetExceeded) {
      p.in_c = Flag::Unknown;
      p.note = r.detail;
      ++s.unknown;
      continue;
    }
    if (r.nonzero && (r.mu != p.mu || r.mu_tilde != p.mu_tilde)) throw std::logic_error("probe point resolved to a different pair");
    p.in_c = r.nonzero ? Flag::Yes : Flag::No;
    p.note = r.nonzero ? r.path : reason_name(r.reason);
  }
  std::map<IVec, std::size_t> at;
  for (std::size_t k = 0; k < s.points.size(); ++k) at[s.points[k].mu_tilde] = k;
  for (std::size_t a = 0; a < s.points.size(); ++a)
    for (std::size_t b = a; b < s.points.size(); ++b) {
      if (s.points[a].in_c != Flag::Yes || s.points[b].in_c != Flag::Yes) continue;
      auto it = at.find(s.points[a].mu_tilde + s.points[b].mu_tilde);
      if (it == at.end()) continue;
      if (s.points[it->second].in_c == Flag::No) s.additivity_violations.push_back({a, b});
    }
  for (auto& x : exclude) {
    auto it = at.find(x);
    if (it != at.end()) s.excluded.push_back(it->second);
  }
  (void)Rt;
  s.observed_k = observed_k(s);
  return s;
}

}  // namespace cohomolib
