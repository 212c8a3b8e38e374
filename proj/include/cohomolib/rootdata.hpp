#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohomolib/linalg.hpp"
#include "cohomolib/rational.hpp"

namespace cohomolib {

struct CartanFactor {
  char series = 'A';
  int rank = 1;
  int offset = 0;  // index of the factor's first simple root
};

struct CartanType {
  std::vector<CartanFactor> factors;
  int total_rank = 0;

  // "A2", "A1xA1", "B2xG2"; C2 is accepted only with allow_c2
  static CartanType parse(const std::string& name, bool allow_c2 = false);
  std::string name() const;
  IMat cartan_matrix() const;
};

IMat standard_cartan(char series, int rank);

// Roots are integer vectors in simple-root coordinates, weights are in
// fundamental-weight coordinates.  cartan[i][j] = <a_j, a_i^vee>, so the
// fundamental coordinates of a root are cartan * (root coordinates).
class RootSystem {
 public:
  explicit RootSystem(const CartanType& t);
  // arbitrary symmetrizable Cartan matrix of finite type
  static RootSystem from_cartan(const IMat& cartan, const std::string& label = "");

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const CartanType& type() const { return type_; }
  const IMat& cartan() const { return cartan_; }
  const QMat& form() const { return form_; }  // (a_i, a_j), long roots have length^2 2
  const std::vector<IVec>& positive_roots() const { return pos_; }
  int num_positive() const { return int(pos_.size()); }
  const IVec& positive_root(int k) const { return pos_[k]; }
  // index into positive_roots or -1
  int root_index(const IVec& root_coords) const;
  bool is_root(const IVec& root_coords) const;
  bool is_positive_root(const IVec& root_coords) const { return root_index(root_coords) >= 0; }
  int height(const IVec& root_coords) const;
  int simple_index(int k) const;  // simple root number if positive root k is simple, else -1
  int highest_root_index(int factor) const;

  IVec rho() const { return IVec(rank_, 1); }
  IVec fundamental_weight(int j) const;
  IVec simple_root(int i) const;
  IVec to_fundamental(const IVec& root_coords) const;
  QVec to_fundamental(const QVec& root_coords) const;
  QVec to_root_coords(const QVec& fund) const;
  QVec to_root_coords(const IVec& fund) const;
  IVec sum_of(const std::vector<IVec>& roots) const;  // <Phi> in fundamental coords
  QVec half_sum(const std::vector<IVec>& roots) const;

  // <lambda, alpha^vee>; alpha must be a root
  Q pairing(const QVec& lambda, const IVec& alpha) const;
  long long pairing(const IVec& lambda, const IVec& alpha) const;
  Q inner(const QVec& lambda, const QVec& mu) const;  // invariant form on weights
  Q inner(const IVec& lambda, const IVec& mu) const;
  Q root_inner(const IVec& a, const IVec& b) const;  // form on root coordinates
  // coefficients of alpha^vee in the simple coroots
  QVec coroot_coeffs(const IVec& alpha) const;
  Q weight_height(const IVec& lambda) const;  // sum of root coordinates
  bool is_dominant(const IVec& lambda) const;
  // lambda - mu is a nonnegative integer combination of simple roots
  bool dominates(const IVec& lambda, const IVec& mu) const;

  IVec reflect_root(int i, const IVec& beta) const;
  IVec reflect_weight(int i, const IVec& lambda) const;
  // dominant representative of the linear W-orbit
  IVec dominant_conjugate(const IVec& lambda) const;
  std::vector<IVec> orbit(const IVec& dominant) const;

  int factor_of(int simple) const { return factor_of_[simple]; }
  int num_factors() const { return int(type_.factors.size()); }
  // which factor a root (root coords) lives in
  int factor_of_root(const IVec& root) const;
  const std::vector<Q>& half_lengths() const { return d_; }  // (a_i,a_i)/2
  const QMat& inverse_cartan() const { return cinv_; }

 private:
  RootSystem() = default;
  void build();

  std::string name_;
  CartanType type_;
  int rank_ = 0;
  IMat cartan_;
  QMat form_, cinv_;
  std::vector<Q> d_;
  std::vector<IVec> pos_;
  std::map<IVec, int> index_;
  std::vector<int> factor_of_;
  std::vector<Q> hvec_;  // weight height = hvec . lambda
};

// |W| straight from the classification, for gating enumerations
Z weyl_group_order(const RootSystem& R);

}  // namespace cohomolib
