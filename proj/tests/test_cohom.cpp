#include "support.hpp"

#include <set>

#include "cohomolib/cohom.hpp"

using namespace cohomolib;

namespace {

CartanType ct(const char* t) { return CartanType::parse(t); }

std::vector<WeylElement> all_of(const RootSystem& R) {
  std::vector<WeylElement> v;
  for (auto& g : enumerate_weyl(R, 100000))
    for (auto& w : g) v.push_back(w);
  return v;
}

// Hom_g(V(mu), V~(mu~)) != 0, by restricting the whole character
bool branch_contains(const Embedding& E, const IVec& mu_t, const IVec& mu) {
  Character chi;
  for (auto& [w, m] : Freudenthal(E.big(), mu_t).full()) chi[restrict_weight(E, w)] += m;
  auto d = decompose_character(E.small(), chi);
  return d.count(mu) && d.at(mu) > 0;
}

// every weight of the big lattice in a box, as a list
std::vector<IVec> box(int rank, int lo, int hi) {
  std::vector<IVec> out;
  IVec cur(rank, lo);
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < rank && cur[i] == hi) cur[i++] = lo;
    if (i == rank) break;
    ++cur[i];
  }
  return out;
}

void check_nonzero_record(const Embedding& E, const PullbackResult& r) {
  if (!r.nonzero) return;
  REQUIRE(r.w.has_value());
  REQUIRE(r.wt.has_value());
  CHECK(r.w->length() == r.q);
  CHECK(r.wt->length() == r.q);
  CHECK(E.small().is_dominant(r.mu));
  CHECK(E.big().is_dominant(r.mu_tilde));
  CHECK(act_affine(*r.wt, r.lambda_tilde) == r.mu_tilde);
  CHECK(act_affine(*r.w, r.lambda) == r.mu);
  CHECK(branch_contains(E, r.mu_tilde, r.mu));
  if (r.cond2) CHECK(r.cond2->contains);
}

QOmega w_(long long a, long long b) { return QOmega(qll(a), qll(b)); }

}  // namespace

TEST_CASE("decision examples") {
  auto D = make_diagonal(ct("A1"));
  auto r = decide_pullback(D, {2, -5});
  CHECK(r.nonzero);
  CHECK(r.q == 1);
  CHECK(r.mu == IVec{1});
  CHECK(r.mu_tilde == IVec{2, 3});
  CHECK(tensor_decompose(D.small(), {2}, {3}, 100).count({1}));
  check_nonzero_record(D, r);
  r = decide_pullback(D, {-5, -5});
  CHECK_FALSE(r.nonzero);
  CHECK(r.reason == Reason::ConditionIFails);
  CHECK(decide_pullback(D, {-1, 4}).reason == Reason::SingularBig);
  CHECK(decide_pullback(D, {1, -2}).reason == Reason::SingularSmall);
  CHECK(decide_pullback(D, {0, -3}).nonzero);
  CHECK(decide_pullback(D, {3, 3}).nonzero);

  auto A = make_adjoint(ct("A1"), {QOmega(1)});
  IVec top{2, 0};
  auto ra = decide_pullback(A, act_affine(A.adjoint->wt.inverse(), top));
  CHECK(ra.nonzero);
  CHECK(ra.mu == IVec{0});
  CHECK(ra.q == 1);
  check_nonzero_record(A, ra);
}

TEST_CASE("budget exhaustion is a verdict") {
  auto D = make_diagonal(ct("A2"));
  DecideOptions o;
  o.max_dim = 3;
  auto r = decide_pullback(D, {-2, 1, 0, 6}, o);
  CHECK_FALSE(r.nonzero);
  CHECK(r.reason == Reason::BudgetExceeded);
}

TEST_CASE("diagonal: fast path, both engines and the tensor oracle agree") {
  for (auto t : {"A1", "A2"}) {
    auto E = make_diagonal(ct(t));
    int l = E.small().rank();
    int lo = l == 1 ? -6 : -4, hi = l == 1 ? 4 : 2;
    EngineCache cache;
    for (auto& lt : box(2 * l, lo, hi)) {
      IVec l1(lt.begin(), lt.begin() + l), l2(lt.begin() + l, lt.end());
      auto f = diagonal_decide(E.small(), l1, l2);
      auto g = decide_pullback(E, lt, {}, &cache);
      CHECK_MESSAGE(f.nonzero == g.nonzero, join(lt));
      CHECK(f.reason == g.reason);
      if (g.nonzero) {
        CHECK(f.mu == g.mu);
        check_nonzero_record(E, g);
        // the tensor product oracle: mu~ splits into the two factors
        IVec m1(g.mu_tilde.begin(), g.mu_tilde.begin() + l), m2(g.mu_tilde.begin() + l, g.mu_tilde.end());
        CHECK(tensor_decompose(E.small(), m1, m2, 100000).count(g.mu));
      }
    }
  }
  // closure engine on a smaller sample
  auto E = make_diagonal(ct("A2"));
  DecideOptions c;
  c.engine = EngineKind::Closure;
  for (auto& lt : box(4, -3, 1)) {
    auto a = decide_pullback(E, lt, c), b = diagonal_decide(E.small(), {lt[0], lt[1]}, {lt[2], lt[3]});
    CHECK(a.nonzero == b.nonzero);
  }
}

TEST_CASE("disjoint triples") {
  auto a1 = RootSystem(ct("A1"));
  CHECK(enumerate_disjoint_triples(a1).size() == 3);
  for (auto t : {"A1", "A2", "B2", "G2", "A3"}) {
    RootSystem R(ct(t));
    auto W = all_of(R);
    std::set<std::vector<IVec>> phis;
    for (auto& w : W) {
      auto p = inversion_set(R, w);
      std::set<IVec> ps(p.begin(), p.end());
      phis.insert(std::vector<IVec>(ps.begin(), ps.end()));
    }
    long long want = 0;
    for (auto& w1 : W)
      for (auto& w2 : W) {
        auto p1 = inversion_set(R, w1), p2 = inversion_set(R, w2);
        std::set<IVec> u(p1.begin(), p1.end());
        u.insert(p2.begin(), p2.end());
        if (int(u.size()) == w1.length() + w2.length() && phis.count(std::vector<IVec>(u.begin(), u.end()))) ++want;
      }
    auto tr = enumerate_disjoint_triples(R);
    CHECK_MESSAGE(int(tr.size()) == want, t);
    long long e2 = 0;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (auto& x : tr) {
      if (x.w2 == WeylElement::identity(R)) ++e2;
      seen.insert({x.w1.word(), x.w2.word()});
    }
    CHECK(e2 == int(W.size()));
    for (auto& x : tr) CHECK(seen.count({x.w2.word(), x.w1.word()}));
  }
}

TEST_CASE("regular subsystems") {
  auto E = make_regular(ct("A3"), {{1, 0, 0}, {0, 0, 1}});
  // w~ = s~2 for mu~ = 0
  auto r = regular_decide(E, {1, -2, 1});
  CHECK_FALSE(r.nonzero);
  CHECK(decide_pullback(E, {1, -2, 1}).nonzero == false);
  auto y = regular_decide(E, {-2, 1, 0});
  CHECK(y.nonzero);
  CHECK(y.component_note.find("highest") != std::string::npos);

  std::vector<std::pair<const char*, std::vector<IVec>>> cases{
      {"A3", {{1, 0, 0}, {0, 0, 1}}}, {"A3", {{0, 1, 0}, {1, 1, 1}}}, {"A2", {{1, 0}, {0, 1}, {1, 1}}},
      {"B2", {{1, 0}, {1, 2}}},        {"A2", {{1, 1}}}};
  for (auto& [t, pos] : cases) {
    auto F = make_regular(ct(t), pos);
    bool identity = int(pos.size()) == F.big().num_positive();
    EngineCache cache;
    for (auto& lt : box(F.big().rank(), -3, 1)) {
      auto f = regular_decide(F, lt), g = decide_pullback(F, lt, {}, &cache);
      CHECK_MESSAGE(f.nonzero == g.nonzero, t, " ", join(lt));
      if (identity) CHECK(f.nonzero == make_dominant(F.big(), lt).regular);
      if (f.nonzero) {
        CHECK(f.mu == g.mu);
        CHECK(restrict_weight(F, f.mu_tilde) == f.mu);
        check_nonzero_record(F, g);
      }
    }
  }
}

TEST_CASE("principal sl2 classification") {
  auto P = make_principal(ct("A1xA1"));
  IVec lt = act_affine(WeylElement::simple(P.big(), 0), IVec{3, 2});
  auto v = principal_classify(P, lt);
  CHECK(v.kind == PrincipalCase::CaseI);
  CHECK(v.result.mu == IVec{1});
  auto d = diagonal_decide(RootSystem(ct("A1")), {lt[0]}, {lt[1]});
  CHECK(d.nonzero);
  CHECK(d.mu == IVec{1});

  auto A2 = make_principal(ct("A2"));
  auto s1 = WeylElement::simple(A2.big(), 0);
  auto c2 = principal_classify(A2, act_affine(s1, IVec{4, 0}));
  CHECK(c2.kind == PrincipalCase::CaseII);
  CHECK(c2.lambda == -2);
  CHECK(c2.result.mu == IVec{0});
  CHECK(principal_classify(A2, act_affine(s1, IVec{3, 0})).kind == PrincipalCase::Zero);
  auto c3 = principal_classify(A2, act_affine(s1, IVec{0, 0}));
  CHECK(c3.kind == PrincipalCase::CaseIII);
  CHECK_THROWS_AS(principal_classify(A2, IVec{1, 1}), UserError);

  // against the general pipeline over every length-one weight in a box
  for (auto t : {"A1xA1", "A2", "B2", "A1xA2"}) {
    auto E = make_principal(ct(t));
    EngineCache cache;
    int seen = 0;
    for (auto& l : box(E.big().rank(), -5, 3)) {
      auto b = make_dominant(E.big(), l);
      if (!b.regular || b.length != 1) continue;
      ++seen;
      auto pv = principal_classify(E, l);
      auto g = decide_pullback(E, l, {}, &cache);
      CHECK_MESSAGE(pv.result.nonzero == g.nonzero, t, " ", join(l));
      CHECK((pv.kind != PrincipalCase::Zero) == g.nonzero);
      if (g.nonzero) check_nonzero_record(E, g);
    }
    CHECK(seen > 0);
  }
}

TEST_CASE("composed embeddings") {
  auto C = make_composed({make_diagonal(ct("A1")), make_regular(ct("A3"), {{1, 0, 0}, {0, 0, 1}})});
  EngineCache cache;
  for (auto& l : box(3, -4, 3)) {
    auto a = composed_decide(C, l), g = decide_pullback(C, l, {}, &cache);
    CHECK_MESSAGE(a.nonzero == g.nonzero, join(l));
    if (a.nonzero) CHECK(a.mu == g.mu);
  }
  auto single = make_composed({make_diagonal(ct("A2"))});
  for (auto& l : box(4, -3, 1)) {
    auto a = composed_decide(single, l), b = diagonal_decide(single.small(), {l[0], l[1]}, {l[2], l[3]});
    CHECK(a.nonzero == b.nonzero);
    CHECK(a.reason == b.reason);
  }
}

TEST_CASE("trivial morphisms") {
  auto D = make_diagonal(ct("A1"));
  auto t = trivial_morphisms(D, 2);
  CHECK(t.size() == 3);
  for (auto& m : t) {
    CHECK(m.lambda_tilde == act_affine(m.wt.inverse(), IVec{0, 0}));
    auto r = decide_pullback(D, m.lambda_tilde);
    CHECK(r.nonzero);
    CHECK(r.mu == IVec{0});
  }
  // the second block subsystem of A3: only s~2 in degree one
  auto C = make_composed({make_diagonal(ct("A1")), make_regular(ct("A3"), {{0, 1, 0}, {1, 1, 1}})});
  auto t1 = trivial_morphisms(C, 1);
  std::vector<std::vector<int>> words;
  for (auto& m : t1)
    if (m.wt.length() == 1) words.push_back(m.wt.word());
  CHECK(words == std::vector<std::vector<int>>{{1}});
  auto I = make_regular(ct("A2"), {{1, 0}, {0, 1}, {1, 1}});
  CHECK(trivial_morphisms(I, 3).size() == 6);
  CHECK(trivial_morphisms(I, 1).size() == 3);
}

TEST_CASE("D monoid points follow the extreme-weight relation") {
  auto D = make_diagonal(ct("A1"));
  auto s = WeylElement::simple(D.small(), 0);
  auto wt = WeylElement::simple(D.big(), 1);  // (e, s)
  auto m = D_monoid_points(D, s, wt, 10);
  CHECK(m.contains_zero);
  std::set<std::pair<IVec, IVec>> got, want;
  for (auto& p : m.points) got.insert({p.mu, p.mu_tilde});
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; a + b <= 10; ++b)
      if (b >= a) want.insert({IVec{b - a}, IVec{a, b}});
  CHECK(got == want);
  CHECK_THROWS_AS(D_monoid_points(D, s, WeylElement::identity(D.big()), 4), UserError);

  auto A = make_adjoint(ct("A1"), {QOmega(1)});
  auto ma = D_monoid_points(A, longest_element(A.small()), A.adjoint->wt, 6);
  std::set<IVec> tops;
  for (auto& p : ma.points) {
    CHECK(p.mu == IVec{0});
    tops.insert(p.mu_tilde);
  }
  std::set<IVec> line;
  for (int k = 0; k <= 6; ++k) line.insert(IVec{k, 0});
  CHECK(tops == line);
  REQUIRE(ma.generators.size() == 1);
  CHECK(ma.points[ma.generators[0]].mu_tilde == IVec{1, 0});
}

TEST_CASE("C monoid probes") {
  auto D = make_diagonal(ct("A1"));
  auto s = WeylElement::simple(D.small(), 0);
  for (auto& wt : {WeylElement::simple(D.big(), 0), WeylElement::simple(D.big(), 1)}) {
    auto p = C_monoid_probe(D, s, wt, 8);
    for (auto& x : p.points) CHECK(x.in_c == Flag::Yes);
    CHECK(p.additivity_violations.empty());
    CHECK(observed_k(p) == 1);
  }
  // degree zero: C0 = {(iota^* mu~, mu~)}
  for (auto E : {make_diagonal(ct("A2")), make_principal(ct("A2")), make_regular(ct("B2"), {{1, 0}, {1, 2}})}) {
    auto p = C_monoid_probe(E, WeylElement::identity(E.small()), WeylElement::identity(E.big()), 3);
    std::set<IVec> tops;
    for (auto& x : p.points) {
      CHECK(x.mu == restrict_weight(E, x.mu_tilde));
      CHECK(x.in_c == Flag::Yes);
      tops.insert(x.mu_tilde);
    }
    long long n = 0;
    for (auto& b : box(E.big().rank(), 0, 3)) {
      long long h = 0;
      for (auto c : b) h += c;
      if (h <= 3) ++n;
    }
    CHECK(int(tops.size()) == n);
    CHECK(observed_k(p) == 1);
  }
  // sl2 adjoint: C is the even multiples of omega~1
  auto A = make_adjoint(ct("A1"), {QOmega(1)});
  auto p = C_monoid_probe(A, longest_element(A.small()), A.adjoint->wt, 6);
  for (auto& x : p.points) CHECK((x.in_c == Flag::Yes) == (x.mu_tilde[0] % 2 == 0));
  CHECK(p.additivity_violations.empty());
  CHECK(observed_k(p) == 2);
}

TEST_CASE("dominant weights pull back in degree zero") {
  for (auto E : {make_diagonal(ct("A2")), make_principal(ct("B2")), make_regular(ct("A3"), {{0, 1, 0}, {1, 1, 1}}),
                 make_adjoint(ct("A1"), {QOmega(1)})}) {
    EngineCache cache;
    for (auto& l : box(std::min(E.big().rank(), 4), 0, 2)) {
      IVec lt(E.big().rank(), 0);
      std::copy(l.begin(), l.end(), lt.begin());
      auto r = decide_pullback(E, lt, {}, &cache);
      CHECK(r.nonzero);
      CHECK(r.q == 0);
      CHECK(r.mu == restrict_weight(E, lt));
      check_nonzero_record(E, r);
    }
  }
}

TEST_CASE("invariant degrees") {
  CHECK(invariant_degrees(RootSystem(ct("A1")), 6) == std::vector<int>{2});
  CHECK(invariant_degrees(RootSystem(ct("A2")), 6) == std::vector<int>{2, 3});
  CHECK(invariant_degrees(RootSystem(ct("B2")), 6) == std::vector<int>{2, 4});
  CHECK(invariant_degrees(RootSystem(ct("A3")), 5) == std::vector<int>{2, 3, 4});
  CHECK(invariant_degrees(RootSystem(ct("A1xA1")), 4) == std::vector<int>{2, 2});
  // p2^a p3^b with 2a + 3b = k
  for (int k = 0; k <= 7; ++k) {
    long long n = 0;
    for (int b = 0; 3 * b <= k; ++b) n += (k - 3 * b) % 2 == 0;
    CHECK(symmetric_invariant_count(RootSystem(ct("A2")), k) == n);
  }
}

TEST_CASE("invariants evaluated on the Cartan") {
  LieAlgebra a1(std::make_shared<const RootSystem>(ct("A1")));
  auto v2 = invariants_at(a1, 2, {QOmega(1)});
  REQUIRE(v2.size() == 1);
  CHECK_FALSE(v2[0].zero());
  CHECK(invariants_at(a1, 3, {QOmega(1)}).empty());

  // sl3 on diag(x1, x2, x3), coroot coordinates (x1, -x3): the invariants of degree k
  // span p2^a p3^b, so they vanish at h iff every such monomial does
  LieAlgebra a2(std::make_shared<const RootSystem>(ct("A2")));
  struct Point {
    std::vector<QOmega> h;
    bool p2, p3;  // nonvanishing of the power sums
  };
  std::vector<Point> pts{{{w_(1, 0), w_(1, 1)}, false, true},  // diag(1, w, w^2)
                         {{w_(1, 0), w_(0, 0)}, true, false},  // diag(1, -1, 0)
                         {{w_(2, 0), w_(1, 0)}, true, true}};  // diag(2, -1, -1)
  for (auto& p : pts)
    for (int k = 1; k <= 6; ++k) {
      bool want = false;
      for (int b = 0; 3 * b <= k; ++b) {
        if ((k - 3 * b) % 2) continue;
        int a = (k - 3 * b) / 2;
        want = want || ((a == 0 || p.p2) && (b == 0 || p.p3));
      }
      auto vals = invariants_at(a2, k, p.h);
      CHECK(int(vals.size()) == symmetric_invariant_count(a2.roots(), k));
      bool any = false;
      for (auto& x : vals) any = any || !x.zero();
      CHECK_MESSAGE(any == want, "k=", k);
    }
}

TEST_CASE("adjoint pullbacks") {
  auto A = make_adjoint(ct("A1"), {QOmega(1)});
  auto r2 = adjoint_pullback(A, 2), r3 = adjoint_pullback(A, 3);
  CHECK(r2.nonzero);
  CHECK(r2.q == 1);
  CHECK_FALSE(r3.nonzero);
  CHECK(r3.reason == Reason::ConditionIIFails);
  for (int k = 0; k <= 5; ++k) {
    auto f = adjoint_pullback(A, k);
    IVec top{k, 0};
    auto g = decide_pullback(A, act_affine(A.adjoint->wt.inverse(), top));
    CHECK(f.nonzero == g.nonzero);
    CHECK(f.nonzero == (k % 2 == 0));
  }
  // p2(h1) = 0 on sl3
  auto B = make_adjoint(ct("A2"), {w_(1, 0), w_(1, 1)});
  CHECK_FALSE(B.has_images());
  auto b2 = adjoint_pullback(B, 2);
  CHECK_FALSE(b2.nonzero);
  CHECK(b2.reason == Reason::ConditionIIFails);
  CHECK(adjoint_pullback(B, 3).nonzero);
  CHECK(adjoint_pullback(B, 3).q == 3);
  IVec top(B.big().rank(), 0);
  top[0] = 3;
  CHECK(decide_pullback(B, act_affine(B.adjoint->wt.inverse(), top)).nonzero);
}
