#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "cohomolib/hwmodule.hpp"

namespace cohomolib {

// sparse vector over a basis, sorted by index, no zeros
using SVec = std::vector<std::pair<int, Q>>;

SVec sv_add(const SVec& a, const SVec& b, const Q& s = 1);  // a + s b
SVec sv_scale(const SVec& a, const Q& s);
Q sv_get(const SVec& a, int k);

// Chevalley basis of g.  Index convention: e_beta for positive root k is
// k, h_i is N + i, f_beta is N + rank + k.  Root vectors of non-simple
// roots come from a fixed recipe, e_beta = [e_i, e_gamma]/(p+1) with i
// the least simple index such that gamma = beta - a_i is a root, and f_beta
// rescaled so that [e_beta, f_beta] = h_beta.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::shared_ptr<const RootSystem> R);

  const RootSystem& roots() const { return *R_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return R_; }
  int dim() const { return 2 * N_ + l_; }
  int num_positive() const { return N_; }
  int rank() const { return l_; }
  int e(int k) const { return k; }
  int h(int i) const { return N_ + i; }
  int f(int k) const { return N_ + l_ + k; }
  bool is_e(int a) const { return a < N_; }
  bool is_h(int a) const { return a >= N_ && a < N_ + l_; }
  bool is_f(int a) const { return a >= N_ + l_; }
  int root_of(int a) const;  // positive root index of e/f basis element, -1 for h
  // weight of a basis element, root coordinates
  IVec weight(int a) const;
  std::string label(int a) const;  // "e3", "h1", "f2" (1-based)
  int parse_label(const std::string& s) const;  // -1 on failure

  const SVec& bracket(int a, int b) const { return table_[std::size_t(a) * dim() + b]; }
  SVec bracket(const SVec& x, const SVec& y) const;
  // ad(x) as a dense matrix in the Chevalley basis
  QMat ad(const SVec& x) const;

  struct Recipe {
    int i = -1, gamma = -1;  // simple index and positive root index; -1 for simple roots
    Q se = 1, sf = 1;
  };
  const Recipe& recipe(int k) const { return recipe_[k]; }

 private:
  std::shared_ptr<const RootSystem> R_;
  int N_ = 0, l_ = 0;
  std::vector<Recipe> recipe_;
  std::vector<SVec> table_;
};

// Root vector blocks on a weight module, built by the same recipe as the
// algebra's basis so that they satisfy its structure constants.
class RootActions {
 public:
  RootActions(const LieAlgebra& g, const WeightModule& M) : g_(g), M_(M) {}
  // action of basis element a on M^wt, shape dim(wt + weight(a)) x dim(wt)
  const QMat& block(int a, const IVec& wt) const;
  // action of a combination of basis elements on M^wt, grouped by target weight
  std::map<IVec, QMat> combo(const SVec& x, const IVec& wt) const;
  const WeightModule& module() const { return M_; }
  const LieAlgebra& algebra() const { return g_; }
  void forget(int a);

 private:
  const LieAlgebra& g_;
  const WeightModule& M_;
  mutable std::map<std::pair<int, IVec>, QMat> memo_;
};

QMat block_product(const QMat& a, const QMat& b);
void add_scaled(QMat& into, const QMat& x, const Q& s);

}  // namespace cohomolib
