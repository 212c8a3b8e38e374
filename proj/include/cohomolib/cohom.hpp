#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohomolib/bwb.hpp"
#include "cohomolib/embed.hpp"

namespace cohomolib {

enum class Reason { None, SingularBig, SingularSmall, DegreeMismatch, ConditionIFails, ConditionIIFails, BudgetExceeded };
std::string reason_name(Reason r);

enum class EngineKind { Auto, Projection, Closure };

struct ConditionIIReport {
  bool contains = false;
  std::string engine;
  bool certified_mod_p = false;
  long long sector_dim = 0;   // dimension of the level-mu part of the sector
  long long multiplicity = 0; // of V(mu) in the sector
  long long materialized = 0;
  bool top_reached = false;   // highest vector of V~(mu~) lies in U(g) v~
};

struct PullbackResult {
  bool nonzero = false;
  Reason reason = Reason::None;
  std::string detail;
  std::string path;
  int q = 0;
  IVec lambda_tilde, lambda;
  std::optional<WeylElement> w, wt;
  IVec mu, mu_tilde;
  QOmega a;
  std::string component_note;
  std::optional<ConditionIIReport> cond2;
};

struct DecideOptions {
  long long max_dim = 5000;
  long long weyl_bound = 100000;
  EngineKind engine = EngineKind::Auto;
  // always run condition (ii), even where a fast path would settle it
  bool skip_condition_ii = false;
};

// caches modules across calls for one embedding
class EngineCache {
 public:
  std::map<IVec, std::shared_ptr<HWModule>> factor_modules;
  std::map<IVec, Character> big_characters;
};

// condition (ii) for the extreme weight nu~ of V~(mu~) and the g-weight mu
ConditionIIReport condition_ii(const Embedding& E, const IVec& mu_tilde, const IVec& nu_tilde, const IVec& mu,
                               const DecideOptions& opt, EngineCache* cache = nullptr);

PullbackResult decide_pullback(const Embedding& E, const IVec& lambda_tilde, const DecideOptions& opt = {},
                               EngineCache* cache = nullptr);
PullbackResult diagonal_decide(const RootSystem& R, const IVec& l1, const IVec& l2);
PullbackResult regular_decide(const Embedding& E, const IVec& lambda_tilde);

enum class PrincipalCase { CaseI, CaseII, CaseIII, Zero };
std::string principal_case_name(PrincipalCase c);
struct PrincipalVerdict {
  PrincipalCase kind = PrincipalCase::Zero;
  int j = -1;                  // the simple root with w~ = s~_j
  IVec c;                      // mu~ in fundamental coordinates
  long long lambda = 0;        // iota^* lambda~
  PullbackResult result;
};
PrincipalVerdict principal_classify(const Embedding& E, const IVec& lambda_tilde);

PullbackResult composed_decide(const Embedding& E, const IVec& lambda_tilde, const DecideOptions& opt = {});

struct TrivialMorphism {
  WeylElement wt, w;
  IVec lambda_tilde;
  QOmega a;
};
std::vector<TrivialMorphism> trivial_morphisms(const Embedding& E, int max_length, long long weyl_bound = 100000);

struct DisjointTriple {
  WeylElement w1, w2, w;
};
std::vector<DisjointTriple> enumerate_disjoint_triples(const RootSystem& R, long long weyl_bound = 100000);

enum class Flag { Yes, No, Unknown };
std::string flag_name(Flag f);

struct MonoidPoint {
  IVec mu, mu_tilde;
  Flag in_c = Flag::Unknown;
  std::string note;
};

struct MonoidSample {
  WeylElement w, wt;
  std::vector<MonoidPoint> points;
  std::vector<std::size_t> generators;  // indices into points (D generators in the box)
  std::vector<std::pair<std::size_t, std::size_t>> additivity_violations;
  bool contains_zero = false;
  std::optional<int> observed_k;
  std::vector<std::size_t> excluded;  // points ignored when observed_k was computed
  long long unknown = 0;
};

// points of D_{w, w~} with sum of fundamental coordinates of mu~ <= height_bound
MonoidSample D_monoid_points(const Embedding& E, const WeylElement& w, const WeylElement& wt, int height_bound);
// flags every D point; exclude lists mu~ ignored for observed_k
MonoidSample C_monoid_probe(const Embedding& E, const WeylElement& w, const WeylElement& wt, int height_bound,
                            const DecideOptions& opt = {}, const std::vector<IVec>& exclude = {});
// smallest k <= kmax with k * g in C for every generator g inside the box
std::optional<int> observed_k(const MonoidSample& s, int kmax = 12);

// degrees of the free generators of S(g)^g up to kmax
std::vector<int> invariant_degrees(const RootSystem& R, int kmax);
// dim S^k(g)^g
long long symmetric_invariant_count(const RootSystem& R, int k);

// values p(h) for a basis of the degree k invariants of g, h in coroot coordinates
std::vector<QOmega> invariants_at(const LieAlgebra& g, int k, const std::vector<QOmega>& h);

PullbackResult adjoint_pullback(const Embedding& E, int k);

}  // namespace cohomolib
