#include "cohomolib/liealg.hpp"

#include <stdexcept>

namespace cohomolib {

SVec sv_add(const SVec& a, const SVec& b, const Q& s) {
  SVec out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back({b[j].first, s * b[j].second});
      ++j;
    } else {
      Q v = a[i].second + s * b[j].second;
      if (!is_zero(v)) out.push_back({a[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

SVec sv_scale(const SVec& a, const Q& s) {
  if (is_zero(s)) return {};
  SVec out = a;
  for (auto& [k, v] : out) v *= s;
  return out;
}

Q sv_get(const SVec& a, int k) {
  for (auto& [i, v] : a)
    if (i == k) return v;
  return 0;
}

QMat block_product(const QMat& a, const QMat& b) {
  if (a.c != b.r) throw std::logic_error("block shape mismatch");
  return a * b;
}

void add_scaled(QMat& into, const QMat& x, const Q& s) {
  if (into.r != x.r || into.c != x.c) throw std::logic_error("block shape mismatch");
  for (std::size_t k = 0; k < x.a.size(); ++k)
    if (!is_zero(x.a[k])) into.a[k] += s * x.a[k];
}

namespace {

IVec fund_shift(const RootSystem& R, const IVec& root) { return R.to_fundamental(root); }

}  // namespace

int LieAlgebra::root_of(int a) const {
  if (is_e(a)) return a;
  if (is_f(a)) return a - N_ - l_;
  return -1;
}

IVec LieAlgebra::weight(int a) const {
  if (is_e(a)) return R_->positive_root(a);
  if (is_f(a)) return -R_->positive_root(a - N_ - l_);
  return IVec(l_, 0);
}

std::string LieAlgebra::label(int a) const {
  if (is_e(a)) return "e" + std::to_string(a + 1);
  if (is_h(a)) return "h" + std::to_string(a - N_ + 1);
  return "f" + std::to_string(a - N_ - l_ + 1);
}

int LieAlgebra::parse_label(const std::string& s) const {
  if (s.size() < 2) return -1;
  int k;
  try {
    std::size_t used = 0;
    k = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) return -1;
  } catch (...) {
    return -1;
  }
  --k;
  if (s[0] == 'e' && k >= 0 && k < N_) return e(k);
  if (s[0] == 'f' && k >= 0 && k < N_) return f(k);
  if (s[0] == 'h' && k >= 0 && k < l_) return h(k);
  return -1;
}

LieAlgebra::LieAlgebra(std::shared_ptr<const RootSystem> Rp) : R_(std::move(Rp)) {
  const RootSystem& R = *R_;
  N_ = R.num_positive();
  l_ = R.rank();
  recipe_.assign(N_, Recipe{});
  int D = dim();
  table_.assign(std::size_t(D) * D, SVec{});

  // one adjoint module per simple factor; their sum is faithful
  std::vector<std::unique_ptr<HWModule>> mods;
  std::vector<std::unique_ptr<RootActions>> acts;
  for (int fct = 0; fct < R.num_factors(); ++fct) {
    IVec theta = R.to_fundamental(R.positive_root(R.highest_root_index(fct)));
    ModuleOptions opt;
    opt.max_dim = 1000000;
    mods.push_back(std::make_unique<HWModule>(R_, theta, opt));
    acts.push_back(std::make_unique<RootActions>(*this, *mods.back()));
  }

  for (int k = 0; k < N_; ++k) {
    const IVec& beta = R.positive_root(k);
    if (R.simple_index(k) >= 0) continue;
    int i = 0;
    for (; i < l_; ++i)
      if (R.is_positive_root(beta - R.simple_root(i))) break;
    if (i == l_) throw std::logic_error("no simple root below a non-simple root");
    IVec gamma = beta - R.simple_root(i);
    int p = 0;
    while (R.is_root(gamma - (long long)(p + 1) * R.simple_root(i))) ++p;
    Recipe rc;
    rc.i = i;
    rc.gamma = R.root_index(gamma);
    rc.se = Q(1) / qll(p + 1);
    rc.sf = 1;
    recipe_[k] = rc;
    // fix sf from [e_beta, f_beta] = h_beta on the factor's adjoint module
    int fct = R.factor_of_root(beta);
    const HWModule& M = *mods[fct];
    RootActions& A = *acts[fct];
    bool fixed = false;
    for (auto& nu : M.support()) {
      long long pr = R.pairing(nu, beta);
      if (pr == 0) continue;
      // [e_beta, f'] on the top vector of M^nu where f' uses sf = 1
      IVec down = nu - fund_shift(R, beta);
      if (M.dim(down) == 0) continue;
      QMat c = block_product(A.block(e(k), down), A.block(f(k), nu));
      QMat d = block_product(A.block(f(k), nu + fund_shift(R, beta)), A.block(e(k), nu));
      Q s = c(0, 0) - d(0, 0);
      if (is_zero(s)) throw std::logic_error("degenerate root vector recipe");
      recipe_[k].sf = qll(pr) / s;
      A.forget(f(k));
      fixed = true;
      break;
    }
    if (!fixed) throw std::logic_error("could not normalize f for a root");
  }

  // structure constants
  auto set = [&](int a, int b, SVec v) { table_[std::size_t(a) * D + b] = std::move(v); };
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      if (a == b) continue;
      if (is_h(a) && is_h(b)) continue;
      if (is_h(a)) {
        int i = a - N_;
        IVec wf = R.to_fundamental(weight(b));
        if (wf[i]) set(a, b, {{b, qll(wf[i])}});
        continue;
      }
      if (is_h(b)) {
        int i = b - N_;
        IVec wf = R.to_fundamental(weight(a));
        if (wf[i]) set(a, b, {{a, qll(-wf[i])}});
        continue;
      }
      IVec wa = weight(a), wb = weight(b), wc = wa + wb;
      bool zero = true;
      for (auto x : wc) zero = zero && x == 0;
      if (zero) {
        // a = e_beta, b = f_beta or the reverse
        QVec cc = R.coroot_coeffs(R.positive_root(root_of(a)));
        SVec v;
        for (int i = 0; i < l_; ++i)
          if (!is_zero(cc[i])) v.push_back({h(i), is_e(a) ? cc[i] : Q(-cc[i])});
        set(a, b, v);
        continue;
      }
      if (!R.is_root(wc)) continue;
      int fa = R.factor_of_root(is_e(a) ? wa : -wa), fb = R.factor_of_root(is_e(b) ? wb : -wb);
      if (fa != fb) continue;
      int target = R.is_positive_root(wc) ? e(R.root_index(wc)) : f(R.root_index(-wc));
      const HWModule& M = *mods[fa];
      const RootActions& A = *acts[fa];
      IVec sa = fund_shift(R, wa), sb = fund_shift(R, wb);
      Q coef = 0;
      bool have = false;
      for (auto& nu : M.support()) {
        if (M.dim(nu + sa + sb) == 0) continue;
        QMat t = A.block(target, nu);
        QMat c = block_product(A.block(a, nu + sb), A.block(b, nu));
        add_scaled(c, block_product(A.block(b, nu + sa), A.block(a, nu)), -1);
        if (!have) {
          for (std::size_t q = 0; q < t.a.size() && !have; ++q)
            if (!is_zero(t.a[q])) {
              coef = c.a[q] / t.a[q];
              have = true;
            }
          if (!have) continue;
        }
        add_scaled(c, t, -coef);
        if (!c.is_zero()) throw std::logic_error("bracket is not a multiple of the root vector");
      }
      if (!have) throw std::logic_error("root vector acts trivially on the adjoint module");
      if (!is_zero(coef)) set(a, b, {{target, coef}});
    }
}

SVec LieAlgebra::bracket(const SVec& x, const SVec& y) const {
  std::map<int, Q> acc;
  for (auto& [a, u] : x)
    for (auto& [b, v] : y)
      for (auto& [c, w] : bracket(a, b)) acc[c] += u * v * w;
  SVec out;
  for (auto& [c, w] : acc)
    if (!is_zero(w)) out.push_back({c, w});
  return out;
}

QMat LieAlgebra::ad(const SVec& x) const {
  int D = dim();
  QMat m(D, D);
  for (int b = 0; b < D; ++b)
    for (auto& [a, u] : x)
      for (auto& [c, w] : bracket(a, b)) m(c, b) += u * w;
  return m;
}

const QMat& RootActions::block(int a, const IVec& wt) const {
  auto key = std::make_pair(a, wt);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const RootSystem& R = g_.roots();
  IVec shift = R.to_fundamental(g_.weight(a));
  int rows = M_.dim(wt + shift), cols = M_.dim(wt);
  QMat out(rows, cols);
  if (rows && cols) {
    if (g_.is_h(a)) {
      int i = a - g_.num_positive();
      for (int t = 0; t < cols; ++t) out(t, t) = qll(wt[i]);
    } else {
      int k = g_.root_of(a);
      bool up = g_.is_e(a);
      int s = R.simple_index(k);
      if (s >= 0) {
        const QMat& m = up ? M_.raise(s, wt) : M_.lower(s, wt);
        if (m.r != rows || m.c != cols) throw std::logic_error("module block has the wrong shape");
        out = m;
      } else {
        const auto& rc = g_.recipe(k);
        int gi = up ? g_.e(rc.gamma) : g_.f(rc.gamma);
        int si = up ? g_.e(R.root_index(R.simple_root(rc.i))) : g_.f(R.root_index(R.simple_root(rc.i)));
        IVec sg = R.to_fundamental(g_.weight(gi)), ss = R.to_fundamental(g_.weight(si));
        // [x_i, x_gamma]
        QMat c = block_product(block(si, wt + sg), block(gi, wt));
        add_scaled(c, block_product(block(gi, wt + ss), block(si, wt)), -1);
        out = scaled(c, up ? rc.se : rc.sf);
      }
    }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

void RootActions::forget(int a) {
  for (auto it = memo_.begin(); it != memo_.end();) it = it->first.first == a ? memo_.erase(it) : std::next(it);
}

std::map<IVec, QMat> RootActions::combo(const SVec& x, const IVec& wt) const {
  std::map<IVec, QMat> out;
  const RootSystem& R = g_.roots();
  for (auto& [a, u] : x) {
    IVec tgt = wt + R.to_fundamental(g_.weight(a));
    const QMat& b = block(a, wt);
    if (b.r == 0 || b.c == 0) continue;
    auto it = out.find(tgt);
    if (it == out.end()) it = out.emplace(tgt, QMat(b.r, b.c)).first;
    add_scaled(it->second, b, u);
  }
  return out;
}

}  // namespace cohomolib
