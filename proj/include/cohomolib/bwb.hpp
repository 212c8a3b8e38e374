#pragma once

#include <string>

#include "cohomolib/weyl.hpp"

namespace cohomolib {

struct BottResult {
  bool singular = false;
  IVec witness;  // singular: positive root orthogonal to lambda + rho
  int q = 0;
  WeylElement w;
  IVec mu;  // dominant, mu = w . lambda
  // H^q(X, O(lambda)) is the dual of V(mu); kept explicit so callers never
  // confuse a module with its dual
  bool dual = true;
  std::string module_note() const;
};

BottResult resolve(const RootSystem& R, const IVec& lambda);

struct ReciprocityCheck {
  long long lhs = 0, rhs = 0;
};

// lhs: multiplicity of V(mu)^* in H^q(X, O(lambda)) from the resolver;
// rhs: dimension of the lambda weight space of H^q(n, V(mu)) (Kostant)
ReciprocityCheck reciprocity_check(const RootSystem& R, const IVec& lambda, const IVec& mu, int q);

}  // namespace cohomolib
