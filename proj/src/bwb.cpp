#include "cohomolib/bwb.hpp"

#include "cohomolib/liecoh.hpp"

namespace cohomolib {

std::string BottResult::module_note() const {
  if (singular) return "all cohomology vanishes";
  return "H^" + std::to_string(q) + "(X,O(lambda)) = V(" + join(mu) + ")*";
}

BottResult resolve(const RootSystem& R, const IVec& lambda) {
  auto reg = make_dominant(R, lambda);
  BottResult b;
  if (!reg.regular) {
    b.singular = true;
    b.witness = reg.witness;
    return b;
  }
  b.q = reg.length;
  b.w = reg.w_lambda;
  b.mu = reg.dominant;
  return b;
}

ReciprocityCheck reciprocity_check(const RootSystem& R, const IVec& lambda, const IVec& mu, int q) {
  if (!R.is_dominant(mu)) throw UserError("mu must be dominant");
  ReciprocityCheck c;
  auto b = resolve(R, lambda);
  if (!b.singular && b.q == q && b.mu == mu) c.lhs = 1;
  for (auto& e : kostant_cohomology(R, mu, q).entries)
    if (e.weight == lambda) c.rhs += e.dim;
  return c;
}

}  // namespace cohomolib
