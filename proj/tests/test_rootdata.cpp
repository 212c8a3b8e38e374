#include "support.hpp"

#include <set>

#include "cohomolib/rootdata.hpp"

using namespace cohomolib;

namespace {

RootSystem sys(const char* t) { return RootSystem(CartanType::parse(t)); }

const char* kTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "A1xA1", "A2xB2", "D5", "E6"};

// |Delta+| from the classification tables
int expected_positive(char s, int n) {
  switch (s) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("small systems") {
  auto a1 = sys("A1");
  CHECK(a1.num_positive() == 1);
  CHECK(a1.cartan() == IMat{{2}});
  CHECK(a1.rho() == IVec{1});

  auto a2 = sys("A2");
  std::set<IVec> got(a2.positive_roots().begin(), a2.positive_roots().end());
  CHECK(got == std::set<IVec>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(sys("G2").num_positive() == 6);
}

TEST_CASE("positive root counts match the classification") {
  for (auto t : kTypes) {
    auto R = sys(t);
    int want = 0;
    for (auto& f : R.type().factors) want += expected_positive(f.series, f.rank);
    CHECK_MESSAGE(R.num_positive() == want, t);
  }
  CHECK(sys("E8").num_positive() == 120);
}

TEST_CASE("pairings") {
  CHECK(sys("A1").pairing(IVec{5}, IVec{1}) == 5);
  auto a2 = sys("A2");
  CHECK(a2.pairing(a2.rho(), IVec{1, 1}) == 2);
  CHECK(a2.pairing(IVec{1, 0}, IVec{0, 1}) == 0);
  // long and short coroots in G2: <rho, theta^vee> = h^vee - 1 = 3
  auto g2 = sys("G2");
  IVec theta = g2.positive_roots().back();
  CHECK(g2.pairing(g2.rho(), theta) == 3);
}

TEST_CASE("sums of roots") {
  auto a2 = sys("A2");
  CHECK(a2.sum_of(a2.positive_roots()) == IVec{2, 2});
  CHECK(a2.sum_of({{0, 1}, {1, 1}}) == IVec{0, 3});
  CHECK(sys("A1").rho() == IVec{1});
}

TEST_CASE("simple reflections permute the roots") {
  for (auto t : kTypes) {
    auto R = sys(t);
    if (R.rank() > 4) continue;
    for (int i = 0; i < R.rank(); ++i) {
      std::set<IVec> img;
      for (auto& b : R.positive_roots()) {
        IVec r = R.reflect_root(i, b);
        CHECK(R.is_root(r));
        img.insert(r);
        img.insert(-r);
      }
      CHECK(int(img.size()) == 2 * R.num_positive());
    }
  }
}

TEST_CASE("every root reflection permutes the roots") {
  // s_a(b) = b - <b, a^vee> a on root coordinates
  for (auto t : {"B3", "G2", "C3", "A3", "F4"}) {
    auto R = sys(t);
    for (auto& a : R.positive_roots())
      for (auto& b : R.positive_roots()) {
        QVec c = R.coroot_coeffs(a);
        IVec bf = R.to_fundamental(b);
        Q p = 0;
        for (int i = 0; i < R.rank(); ++i) p += c[i] * qll(bf[i]);
        REQUIRE(p.get_den() == 1);
        IVec r = b - to_ll(p.get_num()) * a;
        CHECK(R.is_root(r));
      }
  }
}

TEST_CASE("coordinates round trip and rho") {
  for (auto t : kTypes) {
    auto R = sys(t);
    for (auto& b : R.positive_roots()) CHECK(to_ivec(R.to_root_coords(R.to_fundamental(b))) == b);
    for (int i = 0; i < R.rank(); ++i) CHECK(R.pairing(R.rho(), R.simple_root(i)) == 1);
    // rho is half the positive root sum
    IVec two = R.sum_of(R.positive_roots());
    for (auto x : two) CHECK(x == 2);
  }
}

TEST_CASE("root closure") {
  for (auto t : kTypes) {
    auto R = sys(t);
    for (auto& a : R.positive_roots())
      for (auto& b : R.positive_roots())
        if (R.is_root(a + b)) CHECK(R.is_positive_root(a + b));
  }
}

TEST_CASE("invariant form") {
  auto ratio = [](const RootSystem& R) -> Q {
    const auto& d = R.half_lengths();
    Q lo = d[0], hi = d[0];
    for (auto& x : d) {
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
    CHECK(hi == Q(1));
    return hi / lo;
  };
  CHECK(ratio(sys("B2")) == Q(2));
  CHECK(ratio(sys("G2")) == Q(3));
  CHECK(ratio(sys("A3")) == Q(1));
  // the Cartan matrix is symmetrized by d
  for (auto t : kTypes) {
    auto R = sys(t);
    const auto& dd = R.half_lengths();
    for (int i = 0; i < R.rank(); ++i)
      for (int j = 0; j < R.rank(); ++j) CHECK(dd[i] * qll(R.cartan()[i][j]) == dd[j] * qll(R.cartan()[j][i]));
  }
}

TEST_CASE("type parsing") {
  CHECK(CartanType::parse("A1xA1").total_rank == 2);
  CHECK_THROWS_AS(CartanType::parse("B1"), UserError);
  CHECK_THROWS_AS(CartanType::parse("D3"), UserError);
  CHECK_THROWS_AS(CartanType::parse("E9"), UserError);
  CHECK_THROWS_AS(CartanType::parse("X2"), UserError);
  CHECK_THROWS_AS(CartanType::parse("C2"), UserError);
  CHECK(CartanType::parse("C2", true).total_rank == 2);
}

TEST_CASE("from_cartan labels factors") {
  auto R = RootSystem::from_cartan({{2, 0}, {0, 2}});
  CHECK(R.num_factors() == 2);
  CHECK(R.factor_of(0) == 0);
  CHECK(R.factor_of(1) == 1);
  CHECK(R.type().name() == "A1xA1");
  auto G = RootSystem::from_cartan({{2, -1}, {-3, 2}});
  CHECK(G.num_positive() == 6);
}
