#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohomolib/liealg.hpp"
#include "cohomolib/weyl.hpp"

namespace cohomolib {

enum class Variant { Diagonal, RegularSubsystem, PrincipalSL2, AdjointIntoSL, Explicit, Composed };
std::string variant_name(Variant v);

struct AdjointData {
  std::vector<QOmega> h1;     // coroot coordinates
  std::vector<int> order;     // positive root indices of g, beta_1 (highest) first
  std::vector<int> cartan;    // simple coroots completing h1 in the basis
  int n = 0;                  // dim g
  QOmega c;                   // prod -beta_j(h1)
  WeylElement wt;             // s~1 ... s~r in sl_n
  std::vector<IVec> phi_wt;   // {a~_{j, r+1}}
};

// A monomorphism g -> g~ with b inside b~, stored through the images of
// all Chevalley basis elements of g.
class Embedding {
 public:
  Variant variant = Variant::Explicit;
  std::shared_ptr<const LieAlgebra> g, gt;
  std::vector<SVec> images;  // indexed by g's basis
  IMat restrict_matrix;      // lambda = M lambda~ in fundamental coordinates
  std::vector<Embedding> stages;  // Composed: small to big
  std::vector<IVec> subsystem;    // RegularSubsystem: Delta+ in big root coordinates
  std::vector<int> simple_images; // RegularSubsystem: big positive root index of each simple root
  std::optional<AdjointData> adjoint;
  std::string spec;  // json text of the descriptor, filled by io

  const RootSystem& small() const { return g->roots(); }
  const RootSystem& big() const { return gt->roots(); }
  // false only for an adjoint embedding with irrational h1
  bool has_images() const { return !images.empty(); }
};

// all validate the bracket relations and b ⊂ b~, throwing UserError
Embedding make_diagonal(const CartanType& t);
Embedding make_regular(const CartanType& big, const std::vector<IVec>& positive_roots);
Embedding make_principal(const CartanType& big);
Embedding make_adjoint(const CartanType& t, const std::vector<QOmega>& h1);
// gens[i] = images of e_i and f_i; e.g. {"e1", "1"} pairs given as SVec in g~ labels
Embedding make_explicit(const CartanType& small, const CartanType& big, const std::vector<SVec>& e_images,
                        const std::vector<SVec>& f_images);
Embedding make_composed(std::vector<Embedding> stages);

IVec restrict_weight(const Embedding& E, const IVec& big_weight);
QMat phi_o_matrix(const Embedding& E);

struct WedgePullback {
  std::vector<IVec> source;  // Phi~
  std::map<std::vector<int>, Q> coefficients;  // sorted positive root indices of g
  int candidates = 0;  // weight-compatible subsets examined
};
WedgePullback wedge_pullback(const Embedding& E, const std::vector<IVec>& phi_big);

struct ConditionI {
  bool holds = false;
  WeylElement w;
  QOmega a;
  int nonzero = 0;
  std::vector<int> support;  // the unique subset when nonzero == 1
};
ConditionI condition_i(const Embedding& E, const WeylElement& wt);

// iota^*(omega~_j) for the principal sl2
std::vector<long long> principal_fundamental_values(const RootSystem& big);
// k with h = sum k_j h~_j, a~_j(h) = 2
std::vector<long long> principal_coroot_coefficients(const RootSystem& big);

// centralizer of iota(g) in h~ as integer rows acting on big weights
IMat centralizer_rows(const Embedding& E);

// evaluation of a root (root coordinates of g) at a Cartan element in coroot coordinates
QOmega root_at(const RootSystem& R, const IVec& root, const std::vector<QOmega>& h);

}  // namespace cohomolib
