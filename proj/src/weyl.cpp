#include "cohomolib/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cohomolib {

namespace {

IMat simple_root_matrix(const RootSystem& R, int i) {
  int n = R.rank();
  IMat m = identity_imat(n);
  for (int j = 0; j < n; ++j) m[i][j] -= R.cartan()[i][j];
  return m;
}

IMat simple_fund_matrix(const RootSystem& R, int i) {
  int n = R.rank();
  IMat m = identity_imat(n);
  for (int k = 0; k < n; ++k) m[k][i] -= R.cartan()[k][i];
  return m;
}

bool negative(const IVec& v) {
  for (long long x : v)
    if (x > 0) return false;
  return true;
}

// left multiply by s_i
void left_mul(const RootSystem& R, int i, IMat& m) {
  int n = R.rank();
  IVec row(n, 0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) row[j] += R.cartan()[i][k] * m[k][j];
  for (int j = 0; j < n; ++j) m[i][j] -= row[j];
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem& R) {
  WeylElement w;
  w.R_ = &R;
  int n = R.rank();
  w.root_ = w.root_inv_ = w.fund_ = w.fund_inv_ = identity_imat(n);
  return w;
}

WeylElement WeylElement::simple(const RootSystem& R, int i) { return from_word(R, {i}); }

WeylElement WeylElement::from_word(const RootSystem& R, const std::vector<int>& word) {
  WeylElement w = identity(R);
  for (int i : word) {
    if (i < 0 || i >= R.rank()) throw UserError("simple reflection index out of range");
    IMat s = simple_root_matrix(R, i), f = simple_fund_matrix(R, i);
    w.root_ = mat_mul(w.root_, s);
    w.root_inv_ = mat_mul(s, w.root_inv_);
    w.fund_ = mat_mul(w.fund_, f);
    w.fund_inv_ = mat_mul(f, w.fund_inv_);
  }
  w.canonicalize(R);
  return w;
}

void WeylElement::canonicalize(const RootSystem& R) {
  // lex-least reduced word: repeatedly peel the smallest left descent
  word_.clear();
  IMat m = root_, minv = root_inv_;
  int n = R.rank();
  while (true) {
    int found = -1;
    for (int i = 0; i < n && found < 0; ++i) {
      IVec col(n);
      for (int k = 0; k < n; ++k) col[k] = minv[k][i];
      if (negative(col)) found = i;
    }
    if (found < 0) break;
    word_.push_back(found);
    left_mul(R, found, m);
    minv = mat_mul(minv, simple_root_matrix(R, found));
    if (word_.size() > 10000) throw std::logic_error("runaway reduced word");
  }
}

std::vector<int> WeylElement::word1() const {
  std::vector<int> w;
  for (int i : word_) w.push_back(i + 1);
  return w;
}

WeylElement WeylElement::inverse() const {
  WeylElement w;
  w.R_ = R_;
  w.root_ = root_inv_;
  w.root_inv_ = root_;
  w.fund_ = fund_inv_;
  w.fund_inv_ = fund_;
  w.canonicalize(*R_);
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement w;
  w.R_ = R_;
  w.root_ = mat_mul(root_, o.root_);
  w.root_inv_ = mat_mul(o.root_inv_, root_inv_);
  w.fund_ = mat_mul(fund_, o.fund_);
  w.fund_inv_ = mat_mul(o.fund_inv_, fund_inv_);
  w.canonicalize(*R_);
  return w;
}

QVec WeylElement::act_weight(const QVec& l) const {
  int n = rank();
  QVec out(n, Q(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (fund_[i][j]) out[i] += qll(fund_[i][j]) * l[j];
  return out;
}

IVec act_linear(const WeylElement& w, const IVec& l) {
  if (int(l.size()) != w.rank()) throw UserError("rank mismatch");
  return w.act_weight(l);
}

QVec act_linear(const WeylElement& w, const QVec& l) {
  if (int(l.size()) != w.rank()) throw UserError("rank mismatch");
  return w.act_weight(l);
}

IVec act_affine(const WeylElement& w, const IVec& l) {
  IVec rho(l.size(), 1);
  return act_linear(w, l + rho) - rho;
}

QVec act_affine(const WeylElement& w, const QVec& l) {
  QVec s = l;
  for (auto& x : s) x += 1;
  QVec r = act_linear(w, s);
  for (auto& x : r) x -= 1;
  return r;
}

std::vector<int> inversion_indices(const RootSystem& R, const WeylElement& w) {
  std::vector<int> out;
  for (int k = 0; k < R.num_positive(); ++k)
    if (negative(w.act_root(R.positive_root(k)))) out.push_back(k);
  return out;
}

std::vector<IVec> inversion_set(const RootSystem& R, const WeylElement& w) {
  std::vector<IVec> out;
  for (int k : inversion_indices(R, w)) out.push_back(R.positive_root(k));
  return out;
}

std::optional<WeylElement> from_inversion_set(const RootSystem& R, const std::vector<IVec>& phi) {
  std::set<IVec> target(phi.begin(), phi.end());
  for (auto& b : target)
    if (!R.is_positive_root(b)) return std::nullopt;
  // peel a simple root: Phi_{w s_i} relation Phi_w = s_i(Phi_{w'}) + {a_i}
  std::vector<int> rev;
  std::set<IVec> cur = target;
  while (!cur.empty()) {
    int pick = -1;
    for (int i = 0; i < R.rank() && pick < 0; ++i)
      if (cur.count(R.simple_root(i))) pick = i;
    if (pick < 0) return std::nullopt;
    std::set<IVec> next;
    for (auto& b : cur) {
      if (b == R.simple_root(pick)) continue;
      IVec c = R.reflect_root(pick, b);
      if (!R.is_positive_root(c)) return std::nullopt;
      next.insert(c);
    }
    rev.push_back(pick);
    cur = std::move(next);
  }
  std::reverse(rev.begin(), rev.end());
  WeylElement w = WeylElement::from_word(R, rev);
  auto got = inversion_set(R, w);
  if (std::set<IVec>(got.begin(), got.end()) != target) return std::nullopt;
  return w;
}

std::vector<std::vector<WeylElement>> enumerate_weyl(const RootSystem& R, long long bound) {
  Z order = weyl_group_order(R);
  if (order > Z(std::to_string(bound)))
    throw BudgetError("|W| = " + order.get_str() + " exceeds weyl_bound " + std::to_string(bound));
  std::vector<std::vector<WeylElement>> groups{{WeylElement::identity(R)}};
  std::set<IMat> seen{groups[0][0].root_action()};
  while (true) {
    std::vector<WeylElement> next;
    for (auto& w : groups.back())
      for (int i = 0; i < R.rank(); ++i) {
        WeylElement v = w * WeylElement::simple(R, i);
        if (v.length() != w.length() + 1) continue;
        if (seen.insert(v.root_action()).second) next.push_back(v);
      }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), [](const WeylElement& a, const WeylElement& b) { return a.word() < b.word(); });
    groups.push_back(std::move(next));
  }
  return groups;
}

WeylElement longest_element(const RootSystem& R) {
  // ascend until every simple root is a right descent
  WeylElement w = WeylElement::identity(R);
  while (true) {
    int up = -1;
    for (int i = 0; i < R.rank() && up < 0; ++i)
      if (!negative(w.act_root(R.simple_root(i)))) up = i;
    if (up < 0) return w;
    w = w * WeylElement::simple(R, up);
  }
}

RegularizationResult make_dominant(const RootSystem& R, const IVec& lambda) {
  if (int(lambda.size()) != R.rank()) throw UserError("rank mismatch");
  RegularizationResult res;
  IVec mu = lambda + R.rho();
  std::vector<int> word;  // left factors, applied in order
  while (true) {
    int i = 0;
    while (i < R.rank() && mu[i] >= 0) ++i;
    if (i == R.rank()) break;
    mu = R.reflect_weight(i, mu);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  WeylElement w = WeylElement::from_word(R, word);
  for (int i = 0; i < R.rank(); ++i)
    if (mu[i] == 0) {
      res.regular = false;
      IVec wit = w.inverse().act_root(R.simple_root(i));
      if (!R.is_positive_root(wit)) wit = -wit;
      res.witness = wit;
      res.w_lambda = w;
      res.length = w.length();
      return res;
    }
  res.regular = true;
  res.w_lambda = w;
  res.dominant = mu - R.rho();
  res.length = w.length();
  return res;
}

}  // namespace cohomolib
