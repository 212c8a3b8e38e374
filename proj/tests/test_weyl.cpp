#include "support.hpp"

#include <random>
#include <set>

#include "cohomolib/weyl.hpp"

using namespace cohomolib;

namespace {

RootSystem sys(const char* t) { return RootSystem(CartanType::parse(t)); }

std::vector<long long> sizes(const RootSystem& R) {
  std::vector<long long> s;
  for (auto& g : enumerate_weyl(R, 100000)) s.push_back(g.size());
  return s;
}

// prod (1 + t + ... + t^{d-1}) over the degrees
std::vector<long long> poincare(const std::vector<int>& degrees) {
  std::vector<long long> p{1};
  for (int d : degrees) {
    std::vector<long long> q(p.size() + d - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int j = 0; j < d; ++j) q[i + j] += p[i];
    p = q;
  }
  return p;
}

const char* kSmall[] = {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2"};

}  // namespace

TEST_CASE("dot action examples") {
  auto a1 = sys("A1");
  auto s = WeylElement::simple(a1, 0);
  CHECK(act_affine(s, IVec{-5}) == IVec{3});
  auto a2 = sys("A2");
  CHECK(act_affine(WeylElement::identity(a2), IVec{4, -7}) == IVec{4, -7});
  CHECK(act_affine(WeylElement::simple(a2, 0), IVec{0, 0}) == IVec{-2, 1});
}

TEST_CASE("inversion sets") {
  auto a2 = sys("A2");
  CHECK(inversion_set(a2, WeylElement::identity(a2)).empty());
  auto w = WeylElement::from_word(a2, {0, 1});
  auto phi = inversion_set(a2, w);
  CHECK(std::set<IVec>(phi.begin(), phi.end()) == std::set<IVec>{{0, 1}, {1, 1}});
  CHECK_FALSE(from_inversion_set(a2, {{1, 1}}).has_value());
  CHECK(*from_inversion_set(a2, phi) == w);
}

TEST_CASE("inversion sets are exactly the closed and coclosed subsets") {
  for (auto t : {"A2", "A3", "B2", "G2", "A1xA1"}) {
    auto R = sys(t);
    int N = R.num_positive();
    auto closed = [&](const std::set<IVec>& S) {
      for (auto& a : S)
        for (auto& b : S)
          if (R.is_root(a + b) && !S.count(a + b)) return false;
      return true;
    };
    int count = 0;
    for (unsigned m = 0; m < (1u << N); ++m) {
      std::set<IVec> S, T;
      std::vector<IVec> v;
      for (int k = 0; k < N; ++k) {
        if (m >> k & 1) {
          S.insert(R.positive_root(k));
          v.push_back(R.positive_root(k));
        } else {
          T.insert(R.positive_root(k));
        }
      }
      bool oracle = closed(S) && closed(T);
      auto w = from_inversion_set(R, v);
      CHECK(oracle == w.has_value());
      if (w) {
        auto back = inversion_set(R, *w);
        CHECK(std::set<IVec>(back.begin(), back.end()) == S);
        ++count;
      }
    }
    CHECK(count == to_ll(weyl_group_order(R)));
  }
}

TEST_CASE("enumeration by length") {
  CHECK(sizes(sys("A1")) == std::vector<long long>{1, 1});
  CHECK(sizes(sys("A2")) == std::vector<long long>{1, 2, 2, 1});
  CHECK(sizes(sys("A1xA1")) == std::vector<long long>{1, 2, 1});
  CHECK(sizes(sys("A3")) == poincare({2, 3, 4}));
  CHECK(sizes(sys("B3")) == poincare({2, 4, 6}));
  CHECK(sizes(sys("G2")) == poincare({2, 6}));
  CHECK(sizes(sys("F4")) == poincare({2, 6, 8, 12}));
  CHECK_THROWS_AS(enumerate_weyl(sys("E8"), 100000), BudgetError);
}

TEST_CASE("make_dominant") {
  auto a1 = sys("A1");
  CHECK_FALSE(make_dominant(a1, IVec{-1}).regular);
  auto r = make_dominant(a1, IVec{-2});
  CHECK(r.regular);
  CHECK(r.w_lambda == WeylElement::simple(a1, 0));
  CHECK(r.dominant == IVec{0});
  CHECK(r.length == 1);
  auto a2 = sys("A2");
  auto d = make_dominant(a2, IVec{3, 1});
  CHECK(d.length == 0);
  CHECK(d.w_lambda == WeylElement::identity(a2));
}

TEST_CASE("dot action identities, exhaustive over W") {
  std::mt19937 rng(20240613);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (auto t : kSmall) {
    auto R = sys(t);
    std::vector<IVec> lams;
    for (int k = 0; k < 100; ++k) {
      IVec l(R.rank());
      for (auto& x : l) x = coord(rng);
      lams.push_back(l);
    }
    IVec zero(R.rank(), 0);
    std::vector<WeylElement> all;
    for (auto& g : enumerate_weyl(R, 100000))
      for (auto& w : g) all.push_back(w);
    for (auto& w : all) {
      auto wi = w.inverse();
      CHECK(act_affine(wi, zero) == -R.sum_of(inversion_set(R, w)));
      CHECK(w.length() == int(inversion_set(R, w).size()));
      for (auto& l : lams) CHECK(act_linear(wi, act_affine(w, l)) == l - act_affine(wi, zero));
    }
    // group action on a sample of pairs
    for (std::size_t a = 0; a < all.size(); a += 3)
      for (std::size_t b = 0; b < all.size(); b += 5)
        CHECK(act_affine(all[a] * all[b], lams[a % 100]) == act_affine(all[a], act_affine(all[b], lams[a % 100])));
    // regularization lands on a dominant weight and is stable there
    for (auto& l : lams) {
      auto r = make_dominant(R, l);
      if (!r.regular) {
        CHECK(R.pairing(l + R.rho(), r.witness) == 0);
        continue;
      }
      CHECK(R.is_dominant(r.dominant));
      CHECK(act_affine(r.w_lambda, l) == r.dominant);
      auto again = make_dominant(R, r.dominant);
      CHECK(again.w_lambda == WeylElement::identity(R));
    }
  }
}

TEST_CASE("longest element") {
  for (auto t : kSmall) {
    auto R = sys(t);
    auto w0 = longest_element(R);
    CHECK(w0.length() == R.num_positive());
    CHECK(w0 * w0 == WeylElement::identity(R));
  }
}
