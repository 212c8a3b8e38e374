#pragma once

#include <optional>
#include <vector>

#include "cohomolib/rootdata.hpp"

namespace cohomolib {

// A Weyl group element, stored through its action on root coordinates and
// on fundamental coordinates (both integral), with inverses.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const RootSystem& R);
  static WeylElement simple(const RootSystem& R, int i);
  // word [i1,...,ik] (0-based) is the product s_i1 ... s_ik
  static WeylElement from_word(const RootSystem& R, const std::vector<int>& word);

  int rank() const { return int(root_.size()); }
  const IMat& root_action() const { return root_; }
  const IMat& fund_action() const { return fund_; }
  const std::vector<int>& word() const { return word_; }  // canonical, 0-based
  std::vector<int> word1() const;  // 1-based, for reports
  int length() const { return int(word_.size()); }

  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& o) const;
  bool operator==(const WeylElement& o) const { return root_ == o.root_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const { return word_ < o.word_ || (word_ == o.word_ && root_ < o.root_); }

  IVec act_root(const IVec& beta) const { return mat_vec(root_, beta); }
  IVec act_weight(const IVec& lambda) const { return mat_vec(fund_, lambda); }
  QVec act_weight(const QVec& lambda) const;

 private:
  void canonicalize(const RootSystem& R);
  IMat root_, root_inv_, fund_, fund_inv_;
  std::vector<int> word_;
  const RootSystem* R_ = nullptr;
};

IVec act_linear(const WeylElement& w, const IVec& lambda);
QVec act_linear(const WeylElement& w, const QVec& lambda);
// w . lambda = w(lambda + rho) - rho
IVec act_affine(const WeylElement& w, const IVec& lambda);
QVec act_affine(const WeylElement& w, const QVec& lambda);

// Phi_w = positive roots sent to negative ones, in root-system order
std::vector<IVec> inversion_set(const RootSystem& R, const WeylElement& w);
std::vector<int> inversion_indices(const RootSystem& R, const WeylElement& w);
// empty when Phi is not the inversion set of any element
std::optional<WeylElement> from_inversion_set(const RootSystem& R, const std::vector<IVec>& phi);

// elements grouped by length; throws BudgetError when |W| > bound
std::vector<std::vector<WeylElement>> enumerate_weyl(const RootSystem& R, long long bound);
WeylElement longest_element(const RootSystem& R);

struct RegularizationResult {
  bool regular = false;
  WeylElement w_lambda;
  IVec dominant;
  int length = 0;
  IVec witness;  // positive root with (lambda + rho, root^vee) = 0 when singular
};

RegularizationResult make_dominant(const RootSystem& R, const IVec& lambda);

}  // namespace cohomolib
