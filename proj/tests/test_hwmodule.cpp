#include "support.hpp"

#include <functional>

#include "cohomolib/hwmodule.hpp"
#include "cohomolib/weyl.hpp"

using namespace cohomolib;

namespace {

std::shared_ptr<const RootSystem> sysp(const char* t) {
  return std::make_shared<const RootSystem>(CartanType::parse(t));
}

// dim V(lambda) for sl_{n+1} from the partition form
long long type_a_dim(const IVec& lam) {
  int n = int(lam.size()) + 1;
  std::vector<long long> p(n, 0);
  for (int i = n - 2; i >= 0; --i) p[i] = p[i + 1] + lam[i];
  Q d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= qll(p[i] - p[j] + j - i) / qll(j - i);
  return to_ll(d.get_num());
}

// Kostant partition function on root coordinates
struct Partitions {
  const RootSystem& R;
  std::map<std::pair<int, IVec>, long long> memo;
  long long count(const IVec& v, int from = 0) {
    for (auto x : v)
      if (x < 0) return 0;
    if (from == R.num_positive()) {
      for (auto x : v)
        if (x) return 0;
      return 1;
    }
    auto key = std::make_pair(from, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long s = 0;
    IVec u = v;
    const IVec& a = R.positive_root(from);
    while (true) {
      bool ok = true;
      for (auto x : u) ok = ok && x >= 0;
      if (!ok) break;
      s += count(u, from + 1);
      u = u - a;
    }
    return memo[key] = s;
  }
};

// Kostant multiplicity formula
long long kostant_mult(const RootSystem& R, const IVec& lam, const IVec& mu) {
  Partitions P{R, {}};
  long long s = 0;
  for (auto& g : enumerate_weyl(R, 1000))
    for (auto& w : g) {
      QVec diff = R.to_root_coords(act_affine(w, lam) - mu);
      if (!is_integral(diff)) continue;
      long long c = P.count(to_ivec(diff));
      s += (w.length() % 2 ? -c : c);
    }
  return s;
}

QMat kron(const QMat& a, const QMat& b) {
  QMat m(a.r * b.r, a.c * b.c);
  for (int i = 0; i < a.r; ++i)
    for (int j = 0; j < a.c; ++j)
      if (!is_zero(a(i, j)))
        for (int k = 0; k < b.r; ++k)
          for (int l = 0; l < b.c; ++l) m(i * b.r + k, j * b.c + l) = a(i, j) * b(k, l);
  return m;
}

void check_relations(const HWModule& M) {
  const auto& R = M.roots();
  int n = R.rank();
  std::vector<QMat> E, F, H;
  for (int i = 0; i < n; ++i) {
    E.push_back(M.global_e(i));
    F.push_back(M.global_f(i));
    H.push_back(M.global_h(i));
  }
  auto zero = QMat(E[0].r, E[0].c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QMat c = E[i] * F[j] - F[j] * E[i];
      CHECK(c.a == (i == j ? H[i] : zero).a);
      CHECK((H[i] * E[j] - E[j] * H[i]).a == scaled(E[j], qll(R.cartan()[i][j])).a);
      if (i == j) continue;
      // Serre: ad(e_i)^{1 - a_ij} e_j = 0, same for f
      for (int up = 0; up < 2; ++up) {
        QMat x = up ? E[j] : F[j];
        const QMat& y = up ? E[i] : F[i];
        for (int k = 0; k < 1 - R.cartan()[i][j]; ++k) x = y * x - x * y;
        CHECK(x.is_zero());
      }
    }
}

}  // namespace

TEST_CASE("Weyl dimension examples") {
  auto a2 = sysp("A2");
  CHECK(weyl_dimension(*a2, {1, 1}) == 8);
  CHECK(weyl_dimension(*a2, {2, 0}) == 6);
  CHECK(weyl_dimension(*sysp("G2"), {1, 0}) * weyl_dimension(*sysp("G2"), {0, 1}) == 98);
  CHECK(weyl_dimension(*sysp("B2"), {1, 0}) * weyl_dimension(*sysp("B2"), {0, 1}) == 20);
  CHECK(weyl_dimension(*sysp("E8"), {0, 0, 0, 0, 0, 0, 0, 0}) == 1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 3; ++c) CHECK(weyl_dimension_ll(*sysp("A3"), {a, b, c}) == type_a_dim({a, b, c}));
}

TEST_CASE("Freudenthal agrees with the Kostant multiplicity formula") {
  CHECK(Freudenthal(*sysp("A2"), {1, 1}).mult({0, 0}) == 2);
  for (auto t : {"A2", "B2", "G2"}) {
    auto R = sysp(t);
    for (IVec lam : std::vector<IVec>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 3}}) {
      Freudenthal F(*R, lam);
      auto chi = F.full();
      CHECK(character_dim(chi) == weyl_dimension_ll(*R, lam));
      for (auto& [mu, m] : F.dominant()) CHECK(m == kostant_mult(*R, lam, mu));
    }
  }
}

TEST_CASE("constructed modules") {
  for (auto t : {"A1", "A2", "B2", "G2", "A3", "A1xA2"}) {
    auto R = sysp(t);
    int n = R->rank();
    std::vector<IVec> lams{IVec(n, 0), IVec(n, 1)};
    IVec e1(n, 0);
    e1[0] = 2;
    lams.push_back(e1);
    for (auto& lam : lams) {
      HWModule M(R, lam);
      CHECK(M.total_dim() == weyl_dimension_ll(*R, lam));
      Freudenthal F(*R, lam);
      for (auto& wt : M.support()) CHECK(M.dim(wt) == F.mult(wt));
      if (M.total_dim() <= 64) check_relations(M);
    }
  }
  CHECK_THROWS_AS(HWModule(sysp("A2"), {-1, 0}), UserError);
  ModuleOptions small;
  small.max_dim = 10;
  CHECK_THROWS_AS(HWModule(sysp("A2"), {2, 2}, small), BudgetError);
}

TEST_CASE("tensor products") {
  auto a1 = sysp("A1");
  CHECK(tensor_decompose(*a1, {1}, {1}, 100) == Decomposition{{{2}, 1}, {{0}, 1}});
  auto a2 = sysp("A2");
  CHECK(tensor_decompose(*a2, {1, 0}, {0, 1}, 100) == Decomposition{{{1, 1}, 1}, {{0, 0}, 1}});
  CHECK(tensor_decompose(*a2, {1, 1}, {1, 1}, 1000) ==
        Decomposition{{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{0, 0}, 1}});
  for (auto t : {"A2", "B2", "G2", "A3"}) {
    auto R = sysp(t);
    int n = R->rank();
    IVec x(n, 0), y(n, 0);
    x[0] = 1;
    y[n - 1] = 2;
    y[0] += 1;
    auto d = tensor_decompose(*R, x, y, 100000);
    CHECK(d == tensor_decompose_klimyk(*R, x, y));
    long long total = 0;
    for (auto& [mu, m] : d) total += m * weyl_dimension_ll(*R, mu);
    CHECK(total == weyl_dimension_ll(*R, x) * weyl_dimension_ll(*R, y));
  }
  CHECK_THROWS_AS(tensor_decompose(*a2, {3, 3}, {3, 3}, 100), BudgetError);
}

TEST_CASE("tensor module over a product algebra") {
  auto a1 = sysp("A1");
  auto prod = sysp("A1xA1");
  HWModule V1(a1, {1}), V2(a1, {2});
  TensorModule T(prod, V1, V2);
  CHECK(T.total_dim() == 6);
  CHECK(T.dim({1, 2}) == 1);
  CHECK(T.dim({-1, 0}) == 1);
  CHECK(T.dim({0, 0}) == 0);
  // e on the second factor from (1, 0) to (1, 2) equals V2's block
  CHECK(T.raise(1, {1, 0}).a == V2.raise(0, {0}).a);
  CHECK(T.raise(0, {-1, 0}).a == V1.raise(0, {-1}).a);
}

TEST_CASE("symmetric powers") {
  auto a1 = sysp("A1");
  Character adj = Freudenthal(*a1, {2}).full();
  auto s2 = symmetric_power_character(*a1, adj, 2);
  CHECK(character_dim(s2) == 6);
  CHECK(s2.at({0}) == 2);
  CHECK(character_dim(symmetric_power_character(*a1, adj, 3)) == 10);
  // multisets of weights, counted directly
  std::vector<IVec> ws;
  for (auto& [w, m] : adj)
    for (long long k = 0; k < m; ++k) ws.push_back(w);
  for (int k = 0; k <= 8; ++k) {
    Character direct;
    std::function<void(int, int, IVec)> rec = [&](int from, int left, IVec acc) {
      if (!left) {
        direct[acc] += 1;
        return;
      }
      for (int i = from; i < int(ws.size()); ++i) rec(i, left - 1, acc + ws[i]);
    };
    rec(0, k, {0});
    CHECK(symmetric_power_character(*a1, adj, k) == direct);
    // S^k(sl2) has an invariant iff k is even
    CHECK(trivial_multiplicity(*a1, direct) == (k % 2 == 0 ? 1 : 0));
  }
  auto a2 = sysp("A2");
  Character adj2 = Freudenthal(*a2, {1, 1}).full();
  CHECK(trivial_multiplicity(*a2, symmetric_power_character(*a2, adj2, 2)) == 1);
  CHECK(trivial_multiplicity(*a2, symmetric_power_character(*a2, adj2, 3)) == 1);
  CHECK(trivial_multiplicity(*a2, symmetric_power_character(*a2, adj2, 4)) == 1);
  CHECK(trivial_multiplicity(*a2, symmetric_power_character(*a2, adj2, 1)) == 0);
}

TEST_CASE("generated submodules of V1 (x) V1") {
  auto a1 = sysp("A1");
  HWModule V(a1, {1});
  QMat e = V.global_e(0), f = V.global_f(0), h = V.global_h(0);
  QMat I = QMat::identity(2);
  std::vector<SparseQ> gens{SparseQ::from_dense(kron(e, I) + kron(I, e)),
                            SparseQ::from_dense(kron(f, I) + kron(I, f))};
  auto bw = V.basis_weights();
  std::vector<IVec> labels;
  for (auto& x : bw)
    for (auto& y : bw) labels.push_back(x + y);
  int top = bw[0] == IVec{1} ? 0 : 1, bot = 1 - top;
  std::vector<Q> v(4, Q(0));
  v[top * 2 + bot] = 1;
  auto r = generated_submodule(labels, gens, v);
  CHECK(r.dim == 4);
  CHECK(r.character == Character{{{2}, 1}, {{0}, 2}, {{-2}, 1}});
  // the singlet: v+ (x) v- - v- (x) v+ up to the normalization of the basis
  QMat ef = kron(e, I) + kron(I, e);
  std::vector<Q> s(4, Q(0));
  s[top * 2 + bot] = 1;
  auto img = cohomolib::apply(ef, s);
  // solve for t with e(s + t u) = 0, u = v- (x) v+
  std::vector<Q> u(4, Q(0));
  u[bot * 2 + top] = 1;
  auto iu = cohomolib::apply(ef, u);
  Q t = 0;
  for (int k = 0; k < 4; ++k)
    if (!is_zero(iu[k])) t = -img[k] / iu[k];
  s[bot * 2 + top] = t;
  auto r1 = generated_submodule(labels, gens, s);
  CHECK(r1.dim == 1);
  CHECK_THROWS_AS(generated_submodule(labels, gens, std::vector<Q>(4, Q(0))), UserError);
}
