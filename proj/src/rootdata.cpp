#include "cohomolib/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cohomolib {

namespace {

bool admissible(char s, int n, bool allow_c2) {
  switch (s) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3 || (n == 2 && allow_c2);
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

}  // namespace

CartanType CartanType::parse(const std::string& name, bool allow_c2) {
  CartanType t;
  std::string s;
  for (char ch : name)
    if (ch != ' ') s += ch;
  if (s.empty()) throw UserError("empty Cartan type");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t nx = s.find_first_of("x*", pos);
    std::string part = s.substr(pos, nx == std::string::npos ? std::string::npos : nx - pos);
    if (part.size() < 2) throw UserError("malformed Cartan type '" + name + "'");
    char series = char(std::toupper((unsigned char)part[0]));
    int rank = 0;
    for (std::size_t i = 1; i < part.size(); ++i) {
      if (!std::isdigit((unsigned char)part[i])) throw UserError("malformed Cartan type '" + name + "'");
      rank = rank * 10 + (part[i] - '0');
      if (rank > 64) throw UserError("rank too large in '" + name + "'");
    }
    if (!admissible(series, rank, allow_c2))
      throw UserError("inadmissible type " + std::string(1, series) + std::to_string(rank));
    t.factors.push_back({series, rank, t.total_rank});
    t.total_rank += rank;
    if (nx == std::string::npos) break;
    pos = nx + 1;
  }
  return t;
}

std::string CartanType::name() const {
  std::string s;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) s += "x";
    s += factors[k].series;
    s += std::to_string(factors[k].rank);
  }
  return s;
}

IMat standard_cartan(char series, int n) {
  IMat a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // a_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':  // a_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(1, 3);
      for (int i = 4; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':  // a_1 short
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default: throw UserError("unknown series");
  }
  return a;
}

IMat CartanType::cartan_matrix() const {
  IMat a(total_rank, IVec(total_rank, 0));
  for (auto& f : factors) {
    IMat b = standard_cartan(f.series, f.rank);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) a[f.offset + i][f.offset + j] = b[i][j];
  }
  return a;
}

RootSystem::RootSystem(const CartanType& t) {
  type_ = t;
  name_ = t.name();
  cartan_ = t.cartan_matrix();
  build();
}

RootSystem RootSystem::from_cartan(const IMat& cartan, const std::string& label) {
  RootSystem R;
  R.cartan_ = cartan;
  int n = int(cartan.size());
  for (int i = 0; i < n; ++i) {
    if (int(cartan[i].size()) != n || cartan[i][i] != 2) throw UserError("not a Cartan matrix");
    for (int j = 0; j < n; ++j)
      if (i != j && (cartan[i][j] > 0 || ((cartan[i][j] == 0) != (cartan[j][i] == 0))))
        throw UserError("not a Cartan matrix");
  }
  // connected components in index order, each labelled by classification
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<int> q{s};
    comp[s] = nc;
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j = 0; j < n; ++j)
        if (cartan[i][j] != 0 && comp[j] < 0) {
          comp[j] = nc;
          q.push_back(j);
        }
    }
    ++nc;
  }
  R.type_.total_rank = n;
  R.factor_of_ = comp;
  R.type_.factors.assign(nc, {});
  for (int c = 0; c < nc; ++c) {
    int rk = 0, first = -1;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) {
        ++rk;
        if (first < 0) first = i;
      }
    R.type_.factors[c] = {'?', rk, first};
  }
  R.name_ = label;
  R.build();
  // identify each component from its rank and root count
  for (int c = 0; c < nc; ++c) {
    auto& f = R.type_.factors[c];
    int npos = 0;
    bool laced = true;
    for (auto& r : R.pos_)
      if (R.factor_of_root(r) == c) ++npos;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (comp[i] == c && i != j && cartan[i][j] < -1) laced = false;
    int k = f.rank;
    if (laced)
      f.series = npos == k * (k + 1) / 2 ? 'A' : (npos == k * (k - 1) ? 'D' : 'E');
    else if (k == 2)
      f.series = npos == 4 ? 'B' : 'G';
    else
      f.series = npos == 24 && k == 4 ? 'F' : 'B';
  }
  if (R.name_.empty()) R.name_ = R.type_.name();
  return R;
}

void RootSystem::build() {
  rank_ = int(cartan_.size());
  int n = rank_;
  if (factor_of_.empty()) {
    factor_of_.assign(n, 0);
    for (std::size_t k = 0; k < type_.factors.size(); ++k)
      for (int i = 0; i < type_.factors[k].rank; ++i) factor_of_[type_.factors[k].offset + i] = int(k);
  }
  // symmetrize: d_i A_ij = d_j A_ji, per component, then scale long roots to 2
  d_.assign(n, Q(0));
  for (int s = 0; s < n; ++s) {
    if (sgn(d_[s]) != 0) continue;
    std::vector<int> comp{s};
    d_[s] = 1;
    std::deque<int> q{s};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j = 0; j < n; ++j)
        if (j != i && cartan_[i][j] != 0 && sgn(d_[j]) == 0) {
          d_[j] = d_[i] * qll(cartan_[i][j]) / qll(cartan_[j][i]);
          q.push_back(j);
          comp.push_back(j);
        }
    }
    Q mx = 0;
    for (int i : comp) mx = std::max(mx, d_[i]);
    for (int i : comp) d_[i] /= mx;
  }
  form_ = QMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_(i, j) = d_[i] * qll(cartan_[i][j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (form_(i, j) != form_(j, i)) throw UserError("Cartan matrix is not symmetrizable");
  cinv_ = inverse(from_imat(cartan_));
  hvec_.assign(n, Q(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) hvec_[j] += cinv_(i, j);

  // positive roots by root strings, level by level
  pos_.clear();
  index_.clear();
  std::vector<IVec> level;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    level.push_back(e);
  }
  std::set<IVec> all(level.begin(), level.end());
  while (!level.empty()) {
    std::set<IVec, std::greater<IVec>> next;
    for (auto& b : level) {
      for (int i = 0; i < n; ++i) {
        // p = largest k with b - k a_i a root
        int p = 0;
        while (true) {
          IVec c = b;
          c[i] -= p + 1;
          if (c[i] < 0 || !all.count(c)) break;
          ++p;
        }
        long long pair = 0;
        for (int j = 0; j < n; ++j) pair += cartan_[i][j] * b[j];
        long long qq = p - pair;
        if (qq > 0) {
          IVec c = b;
          c[i] += 1;
          next.insert(c);
        }
      }
      if (pos_.size() > 20000) throw UserError("Cartan matrix is not of finite type");
    }
    // within a height: descending lexicographic, so a_1 precedes a_2
    std::vector<IVec> lv(level.begin(), level.end());
    std::sort(lv.begin(), lv.end(), std::greater<IVec>());
    for (auto& r : lv) {
      index_[r] = int(pos_.size());
      pos_.push_back(r);
    }
    level.assign(next.begin(), next.end());
    for (auto& r : level) all.insert(r);
  }
}

int RootSystem::root_index(const IVec& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const IVec& r) const { return root_index(r) >= 0 || root_index(-r) >= 0; }

int RootSystem::height(const IVec& r) const {
  long long h = 0;
  for (long long x : r) h += x;
  return int(h);
}

int RootSystem::simple_index(int k) const {
  if (k < 0 || k >= rank_) return -1;
  return height(pos_[k]) == 1 ? k : -1;
}

int RootSystem::highest_root_index(int factor) const {
  int best = -1;
  for (int k = 0; k < num_positive(); ++k)
    if (factor_of_root(pos_[k]) == factor) best = k;
  return best;
}

IVec RootSystem::fundamental_weight(int j) const {
  IVec w(rank_, 0);
  w[j] = 1;
  return w;
}

IVec RootSystem::simple_root(int i) const {
  IVec r(rank_, 0);
  r[i] = 1;
  return r;
}

IVec RootSystem::to_fundamental(const IVec& rc) const { return mat_vec(cartan_, rc); }

QVec RootSystem::to_fundamental(const QVec& rc) const {
  QVec out(rank_, Q(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += qll(cartan_[i][j]) * rc[j];
  return out;
}

QVec RootSystem::to_root_coords(const QVec& f) const { return cohomolib::apply(cinv_, f); }
QVec RootSystem::to_root_coords(const IVec& f) const { return cohomolib::apply(cinv_, to_qvec(f)); }

IVec RootSystem::sum_of(const std::vector<IVec>& roots) const {
  IVec s(rank_, 0);
  for (auto& r : roots) s = s + r;
  return to_fundamental(s);
}

QVec RootSystem::half_sum(const std::vector<IVec>& roots) const {
  QVec s = to_qvec(sum_of(roots));
  for (auto& x : s) x /= 2;
  return s;
}

Q RootSystem::root_inner(const IVec& a, const IVec& b) const {
  Q s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j]) s += qll(a[i] * b[j]) * form_(i, j);
  }
  return s;
}

Q RootSystem::pairing(const QVec& lambda, const IVec& alpha) const {
  if (!is_root(alpha)) throw UserError("not a root");
  // (lambda, alpha) = sum_j lambda_j d_j alpha_j in fundamental coordinates
  Q num = 0;
  for (int j = 0; j < rank_; ++j)
    if (alpha[j]) num += lambda[j] * d_[j] * qll(alpha[j]);
  return 2 * num / root_inner(alpha, alpha);
}

long long RootSystem::pairing(const IVec& lambda, const IVec& alpha) const {
  Q p = pairing(to_qvec(lambda), alpha);
  return to_ll(p.get_num());
}

QVec RootSystem::coroot_coeffs(const IVec& alpha) const {
  Q aa = root_inner(alpha, alpha);
  QVec c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = qll(alpha[i]) * 2 * d_[i] / aa;
  return c;
}

Q RootSystem::inner(const QVec& l, const QVec& m) const {
  QVec mr = to_root_coords(m);
  Q s = 0;
  for (int j = 0; j < rank_; ++j) s += l[j] * d_[j] * mr[j];
  return s;
}

Q RootSystem::inner(const IVec& l, const IVec& m) const { return inner(to_qvec(l), to_qvec(m)); }

Q RootSystem::weight_height(const IVec& l) const {
  Q s = 0;
  for (int j = 0; j < rank_; ++j) s += hvec_[j] * qll(l[j]);
  return s;
}

bool RootSystem::is_dominant(const IVec& l) const {
  for (long long x : l)
    if (x < 0) return false;
  return true;
}

bool RootSystem::dominates(const IVec& l, const IVec& m) const {
  QVec d = to_root_coords(l - m);
  for (auto& x : d)
    if (sgn(x) < 0 || x.get_den() != 1) return false;
  return true;
}

IVec RootSystem::reflect_root(int i, const IVec& b) const {
  long long p = 0;
  for (int j = 0; j < rank_; ++j) p += cartan_[i][j] * b[j];
  IVec c = b;
  c[i] -= p;
  return c;
}

IVec RootSystem::reflect_weight(int i, const IVec& l) const {
  IVec c = l;
  long long p = l[i];
  for (int k = 0; k < rank_; ++k) c[k] -= p * cartan_[k][i];
  return c;
}

IVec RootSystem::dominant_conjugate(const IVec& l) const {
  IVec c = l;
  while (true) {
    int i = 0;
    while (i < rank_ && c[i] >= 0) ++i;
    if (i == rank_) return c;
    c = reflect_weight(i, c);
  }
}

std::vector<IVec> RootSystem::orbit(const IVec& dom) const {
  std::set<IVec> seen{dom};
  std::vector<IVec> out{dom};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      if (out[k][i] <= 0) continue;
      IVec c = reflect_weight(i, out[k]);
      if (seen.insert(c).second) out.push_back(c);
    }
  }
  return out;
}

int RootSystem::factor_of_root(const IVec& r) const {
  for (int i = 0; i < rank_; ++i)
    if (r[i] != 0) return factor_of_[i];
  return -1;
}

Z weyl_group_order(const RootSystem& R) {
  Z order = 1;
  auto fact = [](int n) {
    Z f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (auto& f : R.type().factors) {
    int n = f.rank;
    switch (f.series) {
      case 'A': order *= fact(n + 1); break;
      case 'B':
      case 'C': order *= fact(n) * (Z(1) << n); break;
      case 'D': order *= fact(n) * (Z(1) << (n - 1)); break;
      case 'E': order *= n == 6 ? Z(51840) : n == 7 ? Z(2903040) : Z(696729600); break;
      case 'F': order *= 1152; break;
      case 'G': order *= 12; break;
      default: throw UserError("unknown series");
    }
  }
  return order;
}

}  // namespace cohomolib
