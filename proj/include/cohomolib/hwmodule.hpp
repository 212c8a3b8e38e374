#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "cohomolib/linalg.hpp"
#include "cohomolib/rootdata.hpp"

namespace cohomolib {

using Character = std::map<IVec, long long>;
using Decomposition = std::map<IVec, long long>;  // highest weight -> multiplicity

Z weyl_dimension(const RootSystem& R, const IVec& lambda);
long long weyl_dimension_ll(const RootSystem& R, const IVec& lambda);

// Freudenthal multiplicities of V(lambda), memoized on dominant weights.
class Freudenthal {
 public:
  Freudenthal(const RootSystem& R, const IVec& lambda);
  long long mult(const IVec& weight) const;
  const std::map<IVec, long long>& dominant() const { return dom_; }
  Character full() const;

 private:
  const RootSystem* R_;
  IVec lambda_;
  std::map<IVec, long long> dom_;
};

Character freudenthal_character(const RootSystem& R, const IVec& lambda, long long max_dim);
long long character_dim(const Character& chi);
Character character_product(const Character& a, const Character& b);
Character adams(const Character& chi, long long k);
Character symmetric_power_character(const RootSystem& R, const Character& chi, int k);
Decomposition decompose_character(const RootSystem& R, const Character& chi);
long long trivial_multiplicity(const RootSystem& R, const Character& chi);
// multiplicity of V(mu) from weight-space dimensions alone:
// sum over W of sign(w) dim M^{mu + rho - w rho}
long long highest_weight_multiplicity(const RootSystem& R, const IVec& mu,
                                      const std::function<long long(const IVec&)>& dim_at);
Decomposition tensor_decompose(const RootSystem& R, const IVec& l1, const IVec& l2, long long max_dim);
// Brauer-Klimyk, used to cross-check the peeling
Decomposition tensor_decompose_klimyk(const RootSystem& R, const IVec& l1, const IVec& l2);

// A module over the Lie algebra of R given weight space by weight space,
// with the simple Chevalley generators as block maps.
class WeightModule {
 public:
  virtual ~WeightModule() = default;
  virtual const RootSystem& roots() const = 0;
  virtual int dim(const IVec& wt) const = 0;
  // e_i : V^wt -> V^{wt + a_i}, shape dim(wt + a_i) x dim(wt)
  virtual const QMat& raise(int i, const IVec& wt) const = 0;
  virtual const QMat& lower(int i, const IVec& wt) const = 0;
  virtual std::vector<IVec> support() const = 0;
  virtual long long total_dim() const;
  // number of stored basis vectors (the construction budget counts these)
  virtual long long materialized() const { return total_dim(); }
};

struct ModuleOptions {
  long long max_dim = 5000;
  bool with_gram = false;
  // if nonempty only the weights above one of these are built
  std::vector<IVec> floors;
};

// Irreducible V(lambda) built top-down: each vector is represented by its
// images under the raising operators, candidates f_i y are kept while they
// stay independent, which removes the radical of the contravariant form.
class HWModule : public WeightModule {
 public:
  HWModule(std::shared_ptr<const RootSystem> R, const IVec& lambda, const ModuleOptions& opt = {});

  const RootSystem& roots() const override { return *R_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return R_; }
  const IVec& highest() const { return lambda_; }
  int dim(const IVec& wt) const override;
  const QMat& raise(int i, const IVec& wt) const override;
  const QMat& lower(int i, const IVec& wt) const override;
  std::vector<IVec> support() const override { return weights_; }
  long long total_dim() const override { return total_; }
  bool partial() const { return partial_; }

  int num_spaces() const { return int(weights_.size()); }
  int space_index(const IVec& wt) const;
  const IVec& space_weight(int k) const { return weights_[k]; }
  int space_offset(int k) const { return offset_[k]; }
  int space_dim(int k) const { return dims_[k]; }
  std::vector<IVec> basis_weights() const;
  // global matrices on the whole (built) module
  QMat global_e(int i) const;
  QMat global_f(int i) const;
  QMat global_h(int i) const;
  const QMat& gram(int k) const { return gram_.at(k); }
  bool has_gram() const { return !gram_.empty(); }

 private:
  std::shared_ptr<const RootSystem> R_;
  IVec lambda_;
  bool partial_ = false;
  long long total_ = 0;
  std::vector<IVec> weights_;
  std::map<IVec, int> index_;
  std::vector<int> dims_, offset_;
  std::vector<std::vector<QMat>> E_, F_;
  std::vector<QMat> gram_;
  std::vector<QMat> zero_;  // 0 x dim placeholders
};

// V1 (x) V2 as a module over the product algebra R1 x R2.
class TensorModule : public WeightModule {
 public:
  TensorModule(std::shared_ptr<const RootSystem> product, const WeightModule& a, const WeightModule& b);
  const RootSystem& roots() const override { return *R_; }
  int dim(const IVec& wt) const override;
  const QMat& raise(int i, const IVec& wt) const override;
  const QMat& lower(int i, const IVec& wt) const override;
  std::vector<IVec> support() const override;
  long long total_dim() const override;
  long long materialized() const override { return a_.materialized() + b_.materialized(); }

 private:
  const QMat& block(bool up, int i, const IVec& wt) const;
  std::shared_ptr<const RootSystem> R_;
  const WeightModule& a_;
  const WeightModule& b_;
  int ra_;
  mutable std::map<std::tuple<bool, int, IVec>, QMat> cache_;
};

// Sparse matrix stored by columns.
struct SparseQ {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Q>>> col;
  static SparseQ from_dense(const QMat& m);
};

struct SubmoduleResult {
  std::vector<std::vector<Q>> basis;  // global coordinates
  Character character;                // by the supplied weight labels
  long long dim = 0;
};

// Smallest subspace containing v and stable under gens.  labels[c] is the
// weight of coordinate c; gens must be homogeneous for these labels.
SubmoduleResult generated_submodule(const std::vector<IVec>& labels, const std::vector<SparseQ>& gens,
                                    const std::vector<Q>& v);

}  // namespace cohomolib
