#include "cohomolib/hwmodule.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cohomolib/weyl.hpp"

namespace cohomolib {

Z weyl_dimension(const RootSystem& R, const IVec& lambda) {
  if (!R.is_dominant(lambda)) throw UserError("weyl_dimension needs a dominant weight");
  Q num = 1, den = 1;
  const auto& d = R.half_lengths();
  for (auto& a : R.positive_roots()) {
    Q s = 0, r = 0;
    for (int j = 0; j < R.rank(); ++j) {
      if (!a[j]) continue;
      s += qll((lambda[j] + 1) * a[j]) * d[j];
      r += qll(a[j]) * d[j];
    }
    num *= s;
    den *= r;
  }
  Q q = num / den;
  return q.get_num();
}

long long weyl_dimension_ll(const RootSystem& R, const IVec& lambda) {
  Z z = weyl_dimension(R, lambda);
  if (!z.fits_slong_p()) throw BudgetError("dimension overflows 64 bits");
  return z.get_si();
}

Freudenthal::Freudenthal(const RootSystem& R, const IVec& lambda) : R_(&R), lambda_(lambda) {
  if (!R.is_dominant(lambda)) throw UserError("highest weight must be dominant");
  // dominant weights below lambda, reachable through dominant weights
  std::set<IVec> seen{lambda};
  std::vector<IVec> doms{lambda};
  for (std::size_t k = 0; k < doms.size(); ++k)
    for (auto& a : R.positive_roots()) {
      IVec c = doms[k] - R.to_fundamental(a);
      if (R.is_dominant(c) && seen.insert(c).second) doms.push_back(c);
    }
  std::vector<std::pair<Q, IVec>> order;
  for (auto& m : doms) order.push_back({R.weight_height(m), m});
  std::sort(order.begin(), order.end(), [](auto& x, auto& y) { return x.first > y.first || (x.first == y.first && x.second > y.second); });
  IVec lr = lambda + R.rho();
  Q top = R.inner(lr, lr);
  std::vector<IVec> proots;
  for (auto& a : R.positive_roots()) proots.push_back(R.to_fundamental(a));
  for (auto& [h, mu] : order) {
    if (mu == lambda) {
      dom_[mu] = 1;
      continue;
    }
    Q acc = 0;
    for (std::size_t t = 0; t < proots.size(); ++t) {
      const IVec& af = proots[t];
      IVec nu = mu;
      while (true) {
        nu = nu + af;
        auto it = dom_.find(R.dominant_conjugate(nu));
        if (it == dom_.end()) break;
        acc += qll(it->second) * R.inner(nu, af);
      }
    }
    IVec mr = mu + R.rho();
    Q den = top - R.inner(mr, mr);
    Q m = 2 * acc / den;
    if (m.get_den() != 1) throw std::logic_error("Freudenthal produced a fraction");
    dom_[mu] = to_ll(m.get_num());
  }
}

long long Freudenthal::mult(const IVec& w) const {
  auto it = dom_.find(R_->dominant_conjugate(w));
  return it == dom_.end() ? 0 : it->second;
}

Character Freudenthal::full() const {
  Character chi;
  for (auto& [mu, m] : dom_) {
    if (m == 0) continue;
    for (auto& w : R_->orbit(mu)) chi[w] = m;
  }
  return chi;
}

Character freudenthal_character(const RootSystem& R, const IVec& lambda, long long max_dim) {
  if (weyl_dimension(R, lambda) > Z(std::to_string(max_dim)))
    throw BudgetError("dim V(" + join(lambda) + ") exceeds max_dim");
  return Freudenthal(R, lambda).full();
}

long long character_dim(const Character& chi) {
  long long s = 0;
  for (auto& [w, m] : chi) s += m;
  return s;
}

Character character_product(const Character& a, const Character& b) {
  Character c;
  for (auto& [x, m] : a)
    for (auto& [y, n] : b) {
      long long& slot = c[x + y];
      slot += m * n;
    }
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

Character adams(const Character& chi, long long k) {
  Character c;
  for (auto& [w, m] : chi) c[k * w] += m;
  return c;
}

Character symmetric_power_character(const RootSystem& R, const Character& chi, int k) {
  if (k < 0) throw UserError("negative symmetric power");
  std::vector<Character> S{{{IVec(R.rank(), 0), 1}}};
  std::vector<Character> psi(k + 1);
  for (int j = 1; j <= k; ++j) psi[j] = adams(chi, j);
  for (int n = 1; n <= k; ++n) {
    Character acc;
    for (int j = 1; j <= n; ++j)
      for (auto& [w, m] : character_product(psi[j], S[n - j])) acc[w] += m;
    Character s;
    for (auto& [w, m] : acc) {
      if (m % n) throw std::logic_error("Newton recursion not integral");
      if (m) s[w] = m / n;
    }
    S.push_back(std::move(s));
  }
  return S[k];
}

namespace {

struct WeylTable {
  std::vector<IVec> shifts;  // rho - w rho
  std::vector<int> signs;
};

const WeylTable& weyl_table(const RootSystem& R) {
  static std::map<IMat, WeylTable> cache;
  auto it = cache.find(R.cartan());
  if (it != cache.end()) return it->second;
  WeylTable t;
  for (auto& grp : enumerate_weyl(R, 100000))
    for (auto& w : grp) {
      t.shifts.push_back(R.rho() - w.act_weight(R.rho()));
      t.signs.push_back(w.length() % 2 ? -1 : 1);
    }
  return cache.emplace(R.cartan(), std::move(t)).first->second;
}

bool weight_before(const RootSystem& R, const IVec& a, const IVec& b) {
  Q ha = R.weight_height(a), hb = R.weight_height(b);
  return ha > hb || (ha == hb && a > b);
}

}  // namespace

long long highest_weight_multiplicity(const RootSystem& R, const IVec& mu,
                                      const std::function<long long(const IVec&)>& dim_at) {
  const auto& t = weyl_table(R);
  long long n = 0;
  for (std::size_t k = 0; k < t.shifts.size(); ++k) n += t.signs[k] * dim_at(mu + t.shifts[k]);
  return n;
}

Decomposition decompose_character(const RootSystem& R, const Character& chi) {
  std::map<IVec, long long> rest;
  for (auto& [w, m] : chi)
    if (R.is_dominant(w) && m) rest[w] = m;
  Decomposition out;
  while (!rest.empty()) {
    auto best = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (weight_before(R, it->first, best->first)) best = it;
    IVec mu = best->first;
    long long m = best->second;
    if (m < 0) throw UserError("not a character: negative multiplicity at " + join(mu));
    out[mu] = m;
    Freudenthal f(R, mu);
    for (auto& [w, k] : f.dominant()) {
      long long& slot = rest[w];
      slot -= m * k;
      if (slot == 0) rest.erase(w);
    }
  }
  return out;
}

long long trivial_multiplicity(const RootSystem& R, const Character& chi) {
  return highest_weight_multiplicity(R, IVec(R.rank(), 0), [&](const IVec& w) {
    auto it = chi.find(w);
    return it == chi.end() ? 0LL : it->second;
  });
}

Decomposition tensor_decompose(const RootSystem& R, const IVec& l1, const IVec& l2, long long max_dim) {
  Z d = weyl_dimension(R, l1) * weyl_dimension(R, l2);
  if (d > Z(std::to_string(max_dim))) throw BudgetError("tensor product dimension " + d.get_str() + " exceeds max_dim");
  Character a = Freudenthal(R, l1).full(), b = Freudenthal(R, l2).full();
  // only the dominant part of the product is needed for peeling
  int n = R.rank();
  std::vector<std::pair<IVec, long long>> av(a.begin(), a.end()), bv(b.begin(), b.end());
  Character dom;
  IVec s(n);
  for (auto& [x, m] : av)
    for (auto& [y, k] : bv) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = x[i] + y[i] >= 0;
      if (!ok) continue;
      for (int i = 0; i < n; ++i) s[i] = x[i] + y[i];
      dom[s] += m * k;
    }
  return decompose_character(R, dom);
}

Decomposition tensor_decompose_klimyk(const RootSystem& R, const IVec& l1, const IVec& l2) {
  Decomposition out;
  for (auto& [mu, m] : Freudenthal(R, l1).full()) {
    auto reg = make_dominant(R, mu + l2);
    if (!reg.regular) continue;
    out[reg.dominant] += (reg.length % 2 ? -1 : 1) * m;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

long long WeightModule::total_dim() const {
  long long s = 0;
  for (auto& w : support()) s += dim(w);
  return s;
}

// ---------------------------------------------------------------------------

HWModule::HWModule(std::shared_ptr<const RootSystem> Rp, const IVec& lambda, const ModuleOptions& opt)
    : R_(std::move(Rp)), lambda_(lambda) {
  const RootSystem& R = *R_;
  int n = R.rank();
  if (int(lambda.size()) != n) throw UserError("rank mismatch");
  if (!R.is_dominant(lambda)) throw UserError("highest weight must be dominant");
  Freudenthal fr(R, lambda);
  Character chi = fr.full();

  // depth vector: root coordinates of lambda - wt
  auto depth = [&](const IVec& w) {
    QVec d = R.to_root_coords(lambda - w);
    return to_ivec(d);
  };
  std::vector<IVec> floor_depths;
  for (auto& f : opt.floors) floor_depths.push_back(depth(f));
  std::vector<std::pair<IVec, IVec>> keep;  // (weight, depth)
  for (auto& [w, m] : chi) {
    IVec dw = depth(w);
    bool ok = floor_depths.empty();
    for (auto& fd : floor_depths) {
      bool below = true;
      for (int i = 0; i < n && below; ++i) below = dw[i] <= fd[i];
      if (below) {
        ok = true;
        break;
      }
    }
    if (ok) keep.push_back({w, dw});
  }
  partial_ = keep.size() < chi.size();
  long long total = 0;
  for (auto& [w, d] : keep) total += chi[w];
  if (total > opt.max_dim)
    throw BudgetError("module V(" + join(lambda) + ") needs " + std::to_string(total) + " basis vectors, max_dim is " +
                      std::to_string(opt.max_dim));
  std::sort(keep.begin(), keep.end(), [](auto& x, auto& y) {
    long long hx = 0, hy = 0;
    for (auto v : x.second) hx += v;
    for (auto v : y.second) hy += v;
    return hx < hy || (hx == hy && x.first > y.first);
  });
  int S = int(keep.size());
  weights_.resize(S);
  dims_.resize(S);
  offset_.resize(S);
  for (int k = 0; k < S; ++k) {
    weights_[k] = keep[k].first;
    index_[weights_[k]] = k;
    dims_[k] = int(chi[weights_[k]]);
    offset_[k] = k ? offset_[k - 1] + dims_[k - 1] : 0;
  }
  total_ = total;
  E_.assign(S, std::vector<QMat>(n));
  F_.assign(S, std::vector<QMat>(n));
  zero_.resize(S);
  for (int k = 0; k < S; ++k) {
    zero_[k] = QMat(0, dims_[k]);
    for (int i = 0; i < n; ++i) {
      int u = space_index(weights_[k] + R.to_fundamental(R.simple_root(i)));
      int dn = space_index(weights_[k] - R.to_fundamental(R.simple_root(i)));
      E_[k][i] = QMat(u >= 0 ? dims_[u] : 0, dims_[k]);
      F_[k][i] = QMat(dn >= 0 ? dims_[dn] : 0, dims_[k]);
    }
  }
  if (opt.with_gram) gram_.assign(S, QMat());
  if (S == 0) return;
  if (weights_[0] != lambda) throw std::logic_error("highest weight missing");
  if (opt.with_gram) gram_[0] = QMat::identity(1);

  std::vector<IVec> af(n);
  for (int i = 0; i < n; ++i) af[i] = R.to_fundamental(R.simple_root(i));

  for (int k = 1; k < S; ++k) {
    const IVec& nu = weights_[k];
    int m = dims_[k];
    std::vector<int> up(n);
    std::vector<int> row_off(n + 1, 0);
    for (int j = 0; j < n; ++j) {
      up[j] = space_index(nu + af[j]);
      row_off[j + 1] = row_off[j] + (up[j] >= 0 ? dims_[up[j]] : 0);
    }
    std::vector<std::pair<int, int>> cand;
    for (int i = 0; i < n; ++i)
      if (up[i] >= 0)
        for (int t = 0; t < dims_[up[i]]; ++t) cand.push_back({i, t});
    int rows = row_off[n], nc = int(cand.size());
    QMat K(rows, nc);
    for (int c = 0; c < nc; ++c) {
      auto [i, t] = cand[c];
      int ui = up[i];
      for (int j = 0; j < n; ++j) {
        if (up[j] < 0) continue;
        // e_j f_i y = f_i e_j y + delta_ij <nu + a_i, a_i^vee> y
        int top = space_index(nu + af[i] + af[j]);
        if (top >= 0) {
          const QMat& Ej = E_[ui][j];      // V^{nu+a_i} -> V^{nu+a_i+a_j}
          const QMat& Fi = F_[top][i];     // V^{nu+a_i+a_j} -> V^{nu+a_j}
          for (int r = 0; r < Fi.r; ++r) {
            Q s = 0;
            for (int q = 0; q < Fi.c; ++q)
              if (!is_zero(Fi(r, q)) && !is_zero(Ej(q, t))) s += Fi(r, q) * Ej(q, t);
            K(row_off[j] + r, c) += s;
          }
        }
        if (i == j) K(row_off[j] + t, c) += qll(nu[i] + 2);
      }
    }
    QMat Rr = K;
    auto piv = rref(Rr);
    if (int(piv.size()) != m)
      throw std::logic_error("module construction: rank " + std::to_string(piv.size()) + " != multiplicity " +
                             std::to_string(m) + " at weight " + join(nu));
    for (int j = 0; j < n; ++j) {
      if (up[j] < 0) continue;
      QMat& Ej = E_[k][j];
      for (int r = 0; r < Ej.r; ++r)
        for (int b = 0; b < m; ++b) Ej(r, b) = K(row_off[j] + r, piv[b]);
    }
    for (int c = 0; c < nc; ++c) {
      auto [i, t] = cand[c];
      QMat& Fi = F_[up[i]][i];
      for (int b = 0; b < m; ++b) Fi(b, t) = Rr(b, c);
    }
    if (opt.with_gram) {
      // <f_i y, z> = <y, e_i z>
      QMat G(m, m);
      for (int b = 0; b < m; ++b) {
        auto [i, t] = cand[piv[b]];
        const QMat& Gu = gram_[up[i]];
        const QMat& Ei = E_[k][i];
        for (int c2 = 0; c2 < m; ++c2) {
          Q s = 0;
          for (int q = 0; q < Gu.c; ++q) s += Gu(t, q) * Ei(q, c2);
          G(b, c2) = s;
        }
      }
      gram_[k] = G;
    }
  }
}

int HWModule::space_index(const IVec& wt) const {
  auto it = index_.find(wt);
  return it == index_.end() ? -1 : it->second;
}

int HWModule::dim(const IVec& wt) const {
  int k = space_index(wt);
  return k < 0 ? 0 : dims_[k];
}

const QMat& HWModule::raise(int i, const IVec& wt) const {
  int k = space_index(wt);
  if (k < 0) {
    static const QMat empty;
    return empty;
  }
  return E_[k][i];
}

const QMat& HWModule::lower(int i, const IVec& wt) const {
  int k = space_index(wt);
  if (k < 0) {
    static const QMat empty;
    return empty;
  }
  if (partial_ && F_[k][i].r == 0) {
    // the target may exist in V(lambda) but lie outside the built part
    IVec tgt = wt - R_->to_fundamental(R_->simple_root(i));
    if (Freudenthal(*R_, lambda_).mult(tgt) > 0) throw std::logic_error("lowering below the built part of a partial module");
  }
  return F_[k][i];
}

std::vector<IVec> HWModule::basis_weights() const {
  std::vector<IVec> out;
  for (int k = 0; k < num_spaces(); ++k)
    for (int t = 0; t < dims_[k]; ++t) out.push_back(weights_[k]);
  return out;
}

QMat HWModule::global_e(int i) const {
  QMat g(static_cast<int>(total_), static_cast<int>(total_));
  for (int k = 0; k < num_spaces(); ++k) {
    int u = space_index(weights_[k] + R_->to_fundamental(R_->simple_root(i)));
    if (u < 0) continue;
    const QMat& b = E_[k][i];
    for (int r = 0; r < b.r; ++r)
      for (int c = 0; c < b.c; ++c) g(offset_[u] + r, offset_[k] + c) = b(r, c);
  }
  return g;
}

QMat HWModule::global_f(int i) const {
  QMat g(static_cast<int>(total_), static_cast<int>(total_));
  for (int k = 0; k < num_spaces(); ++k) {
    int dn = space_index(weights_[k] - R_->to_fundamental(R_->simple_root(i)));
    if (dn < 0) continue;
    const QMat& b = F_[k][i];
    for (int r = 0; r < b.r; ++r)
      for (int c = 0; c < b.c; ++c) g(offset_[dn] + r, offset_[k] + c) = b(r, c);
  }
  return g;
}

QMat HWModule::global_h(int i) const {
  QMat g(static_cast<int>(total_), static_cast<int>(total_));
  for (int k = 0; k < num_spaces(); ++k)
    for (int t = 0; t < dims_[k]; ++t) g(offset_[k] + t, offset_[k] + t) = qll(weights_[k][i]);
  return g;
}

// ---------------------------------------------------------------------------

TensorModule::TensorModule(std::shared_ptr<const RootSystem> product, const WeightModule& a, const WeightModule& b)
    : R_(std::move(product)), a_(a), b_(b), ra_(a.roots().rank()) {
  if (ra_ + b.roots().rank() != R_->rank()) throw UserError("product rank mismatch");
}

namespace {
std::pair<IVec, IVec> split(const IVec& w, int ra) {
  return {IVec(w.begin(), w.begin() + ra), IVec(w.begin() + ra, w.end())};
}
}  // namespace

int TensorModule::dim(const IVec& wt) const {
  auto [x, y] = split(wt, ra_);
  return a_.dim(x) * b_.dim(y);
}

std::vector<IVec> TensorModule::support() const {
  std::vector<IVec> out;
  auto sa = a_.support(), sb = b_.support();
  for (auto& x : sa)
    for (auto& y : sb) {
      IVec w = x;
      w.insert(w.end(), y.begin(), y.end());
      out.push_back(w);
    }
  return out;
}

long long TensorModule::total_dim() const { return a_.total_dim() * b_.total_dim(); }

const QMat& TensorModule::block(bool up, int i, const IVec& wt) const {
  auto key = std::make_tuple(up, i, wt);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto [x, y] = split(wt, ra_);
  int da = a_.dim(x), db = b_.dim(y);
  QMat out;
  if (i < ra_) {
    const QMat& A = up ? a_.raise(i, x) : a_.lower(i, x);
    out = QMat(A.r * db, da * db);
    for (int r = 0; r < A.r; ++r)
      for (int c = 0; c < A.c; ++c) {
        if (is_zero(A(r, c))) continue;
        for (int t = 0; t < db; ++t) out(r * db + t, c * db + t) = A(r, c);
      }
  } else {
    const QMat& B = up ? b_.raise(i - ra_, y) : b_.lower(i - ra_, y);
    out = QMat(da * B.r, da * db);
    for (int s = 0; s < da; ++s)
      for (int r = 0; r < B.r; ++r)
        for (int c = 0; c < B.c; ++c)
          if (!is_zero(B(r, c))) out(s * B.r + r, s * db + c) = B(r, c);
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

const QMat& TensorModule::raise(int i, const IVec& wt) const { return block(true, i, wt); }
const QMat& TensorModule::lower(int i, const IVec& wt) const { return block(false, i, wt); }

// ---------------------------------------------------------------------------

SparseQ SparseQ::from_dense(const QMat& m) {
  SparseQ s;
  s.rows = m.r;
  s.cols = m.c;
  s.col.resize(m.c);
  for (int j = 0; j < m.c; ++j)
    for (int i = 0; i < m.r; ++i)
      if (!is_zero(m(i, j))) s.col[j].push_back({i, m(i, j)});
  return s;
}

SubmoduleResult generated_submodule(const std::vector<IVec>& labels, const std::vector<SparseQ>& gens,
                                    const std::vector<Q>& v) {
  int n = int(labels.size());
  if (int(v.size()) != n) throw UserError("vector length mismatch");
  // coordinates grouped by weight label
  std::map<IVec, std::vector<int>> groups;
  for (int c = 0; c < n; ++c) groups[labels[c]].push_back(c);
  std::vector<int> local(n);
  for (auto& [w, cs] : groups)
    for (std::size_t t = 0; t < cs.size(); ++t) local[cs[t]] = int(t);
  std::map<IVec, EchelonBasis<Q>> spans;
  auto weight_of = [&](const std::vector<std::pair<int, Q>>& sv) -> const IVec& {
    const IVec& w = labels[sv.front().first];
    for (auto& [c, x] : sv)
      if (labels[c] != w) throw UserError("generated_submodule: vector is not a weight vector");
    return w;
  };
  std::vector<std::pair<int, Q>> start;
  for (int c = 0; c < n; ++c)
    if (!is_zero(v[c])) start.push_back({c, v[c]});
  if (start.empty()) throw UserError("generated_submodule: zero vector");
  SubmoduleResult res;
  std::deque<std::vector<std::pair<int, Q>>> queue;
  auto offer = [&](const std::vector<std::pair<int, Q>>& sv) {
    if (sv.empty()) return;
    const IVec& w = weight_of(sv);
    auto& cs = groups[w];
    auto it = spans.find(w);
    if (it == spans.end()) it = spans.emplace(w, EchelonBasis<Q>(int(cs.size()))).first;
    std::vector<Q> dense(cs.size(), Q(0));
    for (auto& [c, x] : sv) dense[local[c]] = x;
    if (it->second.insert(dense)) {
      queue.push_back(sv);
      std::vector<Q> g(n, Q(0));
      for (auto& [c, x] : sv) g[c] = x;
      res.basis.push_back(std::move(g));
      res.character[w] += 1;
    }
  };
  offer(start);
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (auto& G : gens) {
      std::map<int, Q> acc;
      for (auto& [c, x] : cur)
        for (auto& [r, y] : G.col[c]) acc[r] += x * y;
      std::vector<std::pair<int, Q>> out;
      for (auto& [r, y] : acc)
        if (!is_zero(y)) out.push_back({r, y});
      offer(out);
    }
  }
  res.dim = (long long)res.basis.size();
  return res;
}

}  // namespace cohomolib
