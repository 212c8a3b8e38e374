#include "support.hpp"

#include "cohomolib/bwb.hpp"
#include "cohomolib/hwmodule.hpp"

using namespace cohomolib;

namespace {
RootSystem sys(const char* t) { return RootSystem(CartanType::parse(t)); }
}  // namespace

TEST_CASE("resolver examples") {
  auto a1 = sys("A1");
  auto r = resolve(a1, IVec{2});
  CHECK(r.q == 0);
  CHECK(r.mu == IVec{2});
  r = resolve(a1, IVec{-5});
  CHECK(r.q == 1);
  CHECK(r.mu == IVec{3});
  CHECK(r.dual);
  CHECK(resolve(a1, IVec{-1}).singular);
  auto a2 = sys("A2");
  r = resolve(a2, IVec{-2, 1});
  CHECK(r.q == 1);
  CHECK(r.mu == IVec{0, 0});
}

TEST_CASE("reciprocity examples") {
  auto a1 = sys("A1");
  auto c = reciprocity_check(a1, IVec{-5}, IVec{3}, 1);
  CHECK(c.lhs == 1);
  CHECK(c.rhs == 1);
  c = reciprocity_check(a1, IVec{-5}, IVec{2}, 1);
  CHECK(c.lhs == 0);
  CHECK(c.rhs == 0);
  c = reciprocity_check(sys("A2"), IVec{0, 0}, IVec{0, 0}, 0);
  CHECK(c.lhs == 1);
  CHECK(c.rhs == 1);
}

TEST_CASE("resolved weights are dominant and resolve to degree zero") {
  for (auto t : {"A2", "B2", "G2", "A3"}) {
    auto R = sys(t);
    for (int a = -6; a <= 4; ++a)
      for (int b = -6; b <= 4; ++b) {
        IVec l(R.rank(), 0);
        l[0] = a;
        l[1] = b;
        auto r = resolve(R, l);
        if (r.singular) continue;
        CHECK(R.is_dominant(r.mu));
        CHECK(r.q == r.w.length());
        CHECK(resolve(R, r.mu).q == 0);
      }
  }
}

TEST_CASE("reciprocity over w^-1 . mu") {
  for (auto t : {"A1", "A2", "B2"}) {
    auto R = sys(t);
    auto groups = enumerate_weyl(R, 1000);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        IVec mu(R.rank(), 0);
        mu[0] = a;
        if (R.rank() > 1) mu[1] = b;
        if (R.rank() == 1 && b) continue;
        for (std::size_t q = 0; q < groups.size(); ++q)
          for (auto& w : groups[q]) {
            IVec l = act_affine(w.inverse(), mu);
            auto c = reciprocity_check(R, l, mu, int(q));
            CHECK(c.lhs == 1);
            CHECK(c.lhs == c.rhs);
            // another degree sees nothing
            auto off = reciprocity_check(R, l, mu, int((q + 1) % groups.size()));
            CHECK(off.lhs == off.rhs);
          }
      }
  }
}
