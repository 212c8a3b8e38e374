#include "cohomolib/embed.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cohomolib {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Diagonal: return "Diagonal";
    case Variant::RegularSubsystem: return "RegularSubsystem";
    case Variant::PrincipalSL2: return "PrincipalSL2";
    case Variant::AdjointIntoSL: return "AdjointIntoSL";
    case Variant::Explicit: return "Explicit";
    case Variant::Composed: return "Composed";
  }
  return "?";
}

QOmega root_at(const RootSystem& R, const IVec& root, const std::vector<QOmega>& h) {
  IVec f = R.to_fundamental(root);
  QOmega s;
  for (int i = 0; i < R.rank(); ++i)
    if (f[i]) s += QOmega(qll(f[i])) * h[i];
  return s;
}

namespace {

std::shared_ptr<const LieAlgebra> algebra(const CartanType& t) {
  return std::make_shared<LieAlgebra>(std::make_shared<RootSystem>(t));
}

std::shared_ptr<const LieAlgebra> algebra(const RootSystem& R) {
  return std::make_shared<LieAlgebra>(std::make_shared<RootSystem>(R));
}

std::vector<SVec> extend_images(const LieAlgebra& g, const LieAlgebra& gt, const std::vector<SVec>& e_img,
                                const std::vector<SVec>& f_img) {
  const RootSystem& R = g.roots();
  std::vector<SVec> img(g.dim());
  for (int i = 0; i < R.rank(); ++i) {
    int k = R.root_index(R.simple_root(i));
    img[g.e(k)] = e_img[i];
    img[g.f(k)] = f_img[i];
    img[g.h(i)] = gt.bracket(e_img[i], f_img[i]);
  }
  for (int k = 0; k < R.num_positive(); ++k) {
    if (R.simple_index(k) >= 0) continue;
    const auto& rc = g.recipe(k);
    int si = R.root_index(R.simple_root(rc.i));
    img[g.e(k)] = sv_scale(gt.bracket(img[g.e(si)], img[g.e(rc.gamma)]), rc.se);
    img[g.f(k)] = sv_scale(gt.bracket(img[g.f(si)], img[g.f(rc.gamma)]), rc.sf);
  }
  return img;
}

SVec apply_images(const std::vector<SVec>& img, const SVec& x) {
  SVec out;
  for (auto& [a, u] : x) out = sv_add(out, img[a], u);
  return out;
}

void validate(Embedding& E) {
  const LieAlgebra& g = *E.g;
  const LieAlgebra& gt = *E.gt;
  int D = g.dim();
  for (int a = 0; a < D; ++a) {
    if (E.images[a].empty()) throw UserError("embedding sends " + g.label(a) + " to zero");
    for (auto& [b, u] : E.images[a]) {
      bool ok = g.is_e(a) ? gt.is_e(b) : g.is_h(a) ? gt.is_h(b) : gt.is_f(b);
      if (!ok) throw UserError("image of " + g.label(a) + " has a " + gt.label(b) + " component; need b inside b~");
    }
  }
  for (int a = 0; a < D; ++a)
    for (int b = a + 1; b < D; ++b) {
      SVec lhs = apply_images(E.images, g.bracket(a, b));
      SVec rhs = gt.bracket(E.images[a], E.images[b]);
      if (lhs != rhs) throw UserError("bracket relation fails for [" + g.label(a) + ", " + g.label(b) + "]");
    }
  int l = g.rank(), L = gt.rank();
  E.restrict_matrix.assign(l, IVec(L, 0));
  for (int i = 0; i < l; ++i)
    for (auto& [b, u] : E.images[g.h(i)]) {
      if (u.get_den() != 1) throw UserError("restriction matrix is not integral");
      E.restrict_matrix[i][b - gt.num_positive()] = to_ll(u.get_num());
    }
}

}  // namespace

Embedding make_diagonal(const CartanType& t) {
  CartanType tt = CartanType::parse(t.name() + "x" + t.name(), true);
  Embedding E;
  E.variant = Variant::Diagonal;
  E.g = algebra(t);
  E.gt = algebra(tt);
  const RootSystem& R = E.small();
  const RootSystem& Rt = E.big();
  int l = R.rank();
  std::vector<SVec> ei(l), fi(l);
  for (int i = 0; i < l; ++i) {
    int a = Rt.root_index(Rt.simple_root(i)), b = Rt.root_index(Rt.simple_root(i + l));
    ei[i] = sv_add({{E.gt->e(a), 1}}, {{E.gt->e(b), 1}});
    fi[i] = sv_add({{E.gt->f(a), 1}}, {{E.gt->f(b), 1}});
  }
  E.images = extend_images(*E.g, *E.gt, ei, fi);
  validate(E);
  return E;
}

Embedding make_regular(const CartanType& big, const std::vector<IVec>& pos) {
  auto Rt = std::make_shared<RootSystem>(big);
  std::set<IVec> P(pos.begin(), pos.end());
  if (P.size() != pos.size()) throw UserError("repeated root in the subsystem");
  if (P.empty()) throw UserError("empty subsystem");
  for (auto& b : P)
    if (int(b.size()) != Rt->rank() || !Rt->is_positive_root(b))
      throw UserError("[" + join(b) + "] is not a positive root of " + Rt->name());
  for (auto& a : P)
    for (auto& b : P) {
      if (Rt->is_root(a + b) && !P.count(a + b))
        throw UserError("subsystem not closed: [" + join(a) + "] + [" + join(b) + "] missing");
      IVec d = a - b;
      if (Rt->is_root(d) && !P.count(d) && !P.count(-d))
        throw UserError("subsystem not closed: [" + join(a) + "] - [" + join(b) + "] missing");
    }
  // simple roots of the subsystem: indecomposable elements, in big-root order
  std::vector<IVec> simple;
  for (int k = 0; k < Rt->num_positive(); ++k) {
    const IVec& b = Rt->positive_root(k);
    if (!P.count(b)) continue;
    bool dec = false;
    for (auto& a : P)
      if (P.count(b - a)) dec = true;
    if (!dec) simple.push_back(b);
  }
  int l = int(simple.size());
  IMat A(l, IVec(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) A[i][j] = Rt->pairing(Rt->to_fundamental(simple[j]), simple[i]);
  RootSystem R = [&] {
    try {
      return RootSystem::from_cartan(A);
    } catch (const std::exception& e) {
      throw UserError(std::string("subsystem simple roots do not form a Cartan matrix: ") + e.what());
    }
  }();
  if (R.num_positive() != int(P.size())) throw UserError("subsystem is not closed under the Weyl group of its simple roots");
  Embedding E;
  E.variant = Variant::RegularSubsystem;
  E.g = algebra(R);
  E.gt = std::make_shared<LieAlgebra>(Rt);
  E.subsystem.assign(P.begin(), P.end());
  std::vector<SVec> ei(l), fi(l);
  for (int i = 0; i < l; ++i) {
    int k = Rt->root_index(simple[i]);
    E.simple_images.push_back(k);
    ei[i] = {{E.gt->e(k), 1}};
    fi[i] = {{E.gt->f(k), 1}};
  }
  E.images = extend_images(*E.g, *E.gt, ei, fi);
  validate(E);
  return E;
}

std::vector<long long> principal_coroot_coefficients(const RootSystem& big) {
  // A^T k = 2 (1,...,1)
  int L = big.rank();
  QMat At(L, L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) At(i, j) = qll(big.cartan()[j][i]);
  auto k = solve(At, QVec(L, Q(2)));
  if (!k) throw std::logic_error("singular Cartan matrix");
  std::vector<long long> out;
  for (auto& x : *k) {
    if (x.get_den() != 1) throw std::logic_error("principal coefficients are not integral");
    out.push_back(to_ll(x.get_num()));
  }
  return out;
}

std::vector<long long> principal_fundamental_values(const RootSystem& big) { return principal_coroot_coefficients(big); }

Embedding make_principal(const CartanType& big) {
  Embedding E;
  E.variant = Variant::PrincipalSL2;
  E.g = algebra(CartanType::parse("A1"));
  E.gt = algebra(big);
  const RootSystem& Rt = E.big();
  auto k = principal_coroot_coefficients(Rt);
  SVec e, f;
  for (int j = 0; j < Rt.rank(); ++j) {
    int r = Rt.root_index(Rt.simple_root(j));
    e = sv_add(e, {{E.gt->e(r), 1}});
    f = sv_add(f, {{E.gt->f(r), qll(k[j])}});
  }
  E.images = extend_images(*E.g, *E.gt, {e}, {f});
  validate(E);
  return E;
}

Embedding make_explicit(const CartanType& small, const CartanType& big, const std::vector<SVec>& e_images,
                        const std::vector<SVec>& f_images) {
  Embedding E;
  E.variant = Variant::Explicit;
  E.g = algebra(small);
  E.gt = algebra(big);
  int l = E.small().rank();
  if (int(e_images.size()) != l || int(f_images.size()) != l)
    throw UserError("explicit embedding needs images of e_i and f_i for every simple root");
  for (auto* v : {&e_images, &f_images})
    for (auto& s : *v)
      for (auto& [b, u] : s)
        if (b < 0 || b >= E.gt->dim()) throw UserError("basis index out of range");
  E.images = extend_images(*E.g, *E.gt, e_images, f_images);
  validate(E);
  return E;
}

Embedding make_adjoint(const CartanType& t, const std::vector<QOmega>& h1) {
  auto R = std::make_shared<RootSystem>(t);
  if (int(h1.size()) != R->rank()) throw UserError("h1 needs one coordinate per simple coroot");
  AdjointData ad;
  ad.h1 = h1;
  int N = R->num_positive(), l = R->rank();
  for (int k = N - 1; k >= 0; --k) ad.order.push_back(k);
  for (int k : ad.order)
    if (root_at(*R, R->positive_root(k), h1).zero())
      throw UserError("h1 is singular: root [" + join(R->positive_root(k)) + "] vanishes on it");
  int drop = -1;
  for (int i = 0; i < l && drop < 0; ++i)
    if (!h1[i].zero()) drop = i;
  for (int i = 0; i < l; ++i)
    if (i != drop) ad.cartan.push_back(i);
  ad.n = 2 * N + l;
  ad.c = QOmega(1);
  for (int k : ad.order) ad.c *= -root_at(*R, R->positive_root(k), h1);

  Embedding E;
  E.variant = Variant::AdjointIntoSL;
  E.g = std::make_shared<LieAlgebra>(R);
  E.gt = algebra(CartanType::parse("A" + std::to_string(ad.n - 1)));
  const LieAlgebra& g = *E.g;
  const LieAlgebra& gt = *E.gt;
  const RootSystem& Rt = gt.roots();
  int n = ad.n, r = N;

  std::vector<int> w;
  for (int j = 0; j < r; ++j) w.push_back(j);
  ad.wt = WeylElement::from_word(Rt, w);
  for (int j = 0; j < r; ++j) {
    IVec a(n - 1, 0);
    for (int t2 = j; t2 < r; ++t2) a[t2] = 1;
    ad.phi_wt.push_back(a);
  }
  {
    auto inv = inversion_set(Rt, ad.wt);
    std::set<IVec> x(inv.begin(), inv.end()), y(ad.phi_wt.begin(), ad.phi_wt.end());
    if (x != y) throw std::logic_error("inversion set of s1...sr is not the expected one");
  }

  // iota(h_i) is diagonal in basis (e_beta..., cartan..., f_beta...)
  E.restrict_matrix.assign(l, IVec(n - 1, 0));
  for (int i = 0; i < l; ++i) {
    IVec diag;
    for (int k : ad.order) diag.push_back(R->to_fundamental(R->positive_root(k))[i]);
    for (int t2 = 0; t2 < l; ++t2) diag.push_back(0);
    for (auto it = ad.order.rbegin(); it != ad.order.rend(); ++it) diag.push_back(-R->to_fundamental(R->positive_root(*it))[i]);
    long long s = 0;
    for (int m = 0; m < n - 1; ++m) {
      s += diag[m];
      E.restrict_matrix[i][m] = s;
    }
  }

  bool rational = true;
  for (auto& x : h1) rational = rational && x.rational();
  if (rational) {
    int D = g.dim();
    // the ordered basis in Chevalley coordinates, one column per vector
    QMat B(D, D);
    int col = 0;
    for (int k : ad.order) B(g.e(k), col++) = 1;
    for (int i = 0; i < l; ++i) B(g.h(i), col) = h1[i].a;
    ++col;
    for (int i : ad.cartan) B(g.h(i), col++) = 1;
    for (auto it = ad.order.rbegin(); it != ad.order.rend(); ++it) B(g.f(*it), col++) = 1;
    QMat Binv = inverse(B);
    auto to_sl = [&](const QMat& X) {
      SVec s;
      std::map<int, Q> acc;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (a == b || is_zero(X(a, b))) continue;
          int lo = std::min(a, b), hi = std::max(a, b);
          IVec root(n - 1, 0);
          for (int t2 = lo; t2 < hi; ++t2) root[t2] = 1;
          int k = Rt.root_index(root);
          acc[a < b ? gt.e(k) : gt.f(k)] += X(a, b);
        }
      Q pre = 0;
      for (int m = 0; m < n - 1; ++m) {
        pre += X(m, m);
        if (!is_zero(pre)) acc[gt.h(m)] += pre;
      }
      for (auto& [k, v] : acc)
        if (!is_zero(v)) s.push_back({k, v});
      return s;
    };
    E.images.resize(D);
    for (int a = 0; a < D; ++a) E.images[a] = to_sl(Binv * g.ad({{a, 1}}) * B);
    IMat expect = E.restrict_matrix;
    validate(E);
    if (E.restrict_matrix != expect) throw std::logic_error("adjoint restriction mismatch");
  }
  E.adjoint = ad;
  return E;
}

Embedding make_composed(std::vector<Embedding> stages) {
  if (stages.empty()) throw UserError("composed embedding needs at least one stage");
  for (std::size_t s = 0; s + 1 < stages.size(); ++s)
    if (stages[s].big().cartan() != stages[s + 1].small().cartan())
      throw UserError("stage " + std::to_string(s + 1) + " does not land in the source of stage " + std::to_string(s + 2));
  Embedding E;
  E.variant = Variant::Composed;
  E.g = stages.front().g;
  E.gt = stages.back().gt;
  bool imgs = true;
  for (auto& s : stages) imgs = imgs && s.has_images();
  if (imgs) {
    E.images = stages.front().images;
    for (std::size_t s = 1; s < stages.size(); ++s)
      for (auto& v : E.images) v = apply_images(stages[s].images, v);
  }
  E.restrict_matrix = stages.back().restrict_matrix;
  for (int s = int(stages.size()) - 2; s >= 0; --s) E.restrict_matrix = mat_mul(stages[s].restrict_matrix, E.restrict_matrix);
  E.stages = std::move(stages);
  return E;
}

IVec restrict_weight(const Embedding& E, const IVec& lt) {
  if (int(lt.size()) != E.big().rank()) throw UserError("weight has the wrong rank for " + E.big().name());
  return mat_vec(E.restrict_matrix, lt);
}

QMat phi_o_matrix(const Embedding& E) {
  if (!E.has_images()) throw UserError("phi_o needs a rational embedding");
  int N = E.small().num_positive(), Nt = E.big().num_positive();
  QMat m(Nt, N);
  for (int k = 0; k < N; ++k)
    for (auto& [b, u] : E.images[E.g->e(k)]) m(b, k) = u;
  return m;
}

WedgePullback wedge_pullback(const Embedding& E, const std::vector<IVec>& phi_big) {
  if (!E.has_images()) throw UserError("wedge pullback needs a rational embedding");
  const RootSystem& R = E.small();
  const RootSystem& Rt = E.big();
  WedgePullback out;
  out.source = phi_big;
  std::vector<int> rows;
  for (auto& b : phi_big) {
    int k = Rt.root_index(b);
    if (k < 0) throw UserError("[" + join(b) + "] is not a positive root of " + Rt.name());
    rows.push_back(k);
  }
  int q = int(rows.size());
  IVec target = restrict_weight(E, Rt.sum_of(phi_big));
  QVec troot = R.to_root_coords(target);
  Q th = 0;
  for (auto& x : troot) th += x;
  if (!is_integral(troot)) return out;
  long long H = to_ll(th.get_num());
  QMat phi = phi_o_matrix(E);
  int N = R.num_positive();
  std::vector<int> cur;
  std::function<void(int, long long, IVec)> dfs = [&](int start, long long h, IVec sum) {
    if (int(cur.size()) == q) {
      if (sum != target) return;
      ++out.candidates;
      QMat m(q, q);
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m(i, j) = phi(rows[i], cur[j]);
      Q d = determinant(m);
      if (!is_zero(d)) out.coefficients[cur] = d;
      return;
    }
    for (int k = start; k < N; ++k) {
      long long hk = R.height(R.positive_root(k));
      if (h + hk > H) continue;
      if (N - k < q - int(cur.size())) break;
      cur.push_back(k);
      dfs(k + 1, h + hk, sum + R.to_fundamental(R.positive_root(k)));
      cur.pop_back();
    }
  };
  dfs(0, 0, IVec(R.rank(), 0));
  return out;
}

ConditionI condition_i(const Embedding& E, const WeylElement& wt) {
  ConditionI res;
  const RootSystem& R = E.small();
  const RootSystem& Rt = E.big();
  auto phit = inversion_set(Rt, wt);
  if (!E.has_images()) {
    if (!E.adjoint) throw UserError("embedding has no images");
    std::set<IVec> a(phit.begin(), phit.end()), b(E.adjoint->phi_wt.begin(), E.adjoint->phi_wt.end());
    if (a != b) throw UserError("an irrational h1 only supports w~ = s~1...s~r");
    res.a = E.adjoint->c;
    res.holds = !res.a.zero();
    res.nonzero = res.holds ? 1 : 0;
    res.w = longest_element(R);
    for (int k = 0; k < R.num_positive(); ++k) res.support.push_back(k);
    return res;
  }
  auto wp = wedge_pullback(E, phit);
  res.nonzero = int(wp.coefficients.size());
  if (res.nonzero != 1) return res;
  auto& [sub, a] = *wp.coefficients.begin();
  res.support = sub;
  std::vector<IVec> phi;
  for (int k : sub) phi.push_back(R.positive_root(k));
  auto w = from_inversion_set(R, phi);
  if (!w) return res;
  res.holds = true;
  res.w = *w;
  res.a = QOmega(a);
  return res;
}

IMat centralizer_rows(const Embedding& E) {
  const RootSystem& Rt = E.big();
  int L = Rt.rank();
  std::vector<IVec> cons;
  std::set<int> seen;
  auto add_root = [&](int k) {
    if (seen.insert(k).second) cons.push_back(Rt.to_fundamental(Rt.positive_root(k)));
  };
  if (E.has_images()) {
    for (auto& v : E.images)
      for (auto& [b, u] : v)
        if (!E.gt->is_h(b)) add_root(E.gt->root_of(b));
  } else {
    for (int k = 0; k < Rt.num_positive(); ++k) add_root(k);
  }
  // restriction rows also constrain: keep c inside the kernel of every root used
  QMat A(int(cons.size()), L);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < L; ++j) A(i, j) = qll(cons[i][j]);
  QMat ns = A.r ? nullspace(A) : QMat::identity(L);
  IMat rows;
  for (int c = 0; c < ns.c; ++c) {
    Z den = 1;
    for (int j = 0; j < L; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ns(j, c).get_den_mpz_t());
    IVec row(L);
    for (int j = 0; j < L; ++j) {
      Q x = ns(j, c) * Q(den);
      row[j] = to_ll(x.get_num());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cohomolib
