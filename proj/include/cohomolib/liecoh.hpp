#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cohomolib/hwmodule.hpp"
#include "cohomolib/weyl.hpp"

namespace cohomolib {

struct CohomologyEntry {
  IVec weight;  // h-weight, fundamental coordinates
  long long dim = 0;
  std::optional<WeylElement> w;
  std::vector<IVec> harmonic;  // Phi_{w^-1}: the cocycle is e*_{-Phi} (x) v^{w(mu)}
};

struct CohomologySlice {
  int q = 0;
  std::vector<CohomologyEntry> entries;
  std::map<IVec, long long> weights() const;
  long long total() const;
};

CohomologySlice kostant_cohomology(const RootSystem& R, const IVec& mu, int q, long long weyl_bound = 100000);
CohomologySlice trivial_coeff_cohomology(const RootSystem& R, int q, long long weyl_bound = 100000);

// Brute force H^q(n, V(mu)) from the cochain complex Hom(wedge^q n, V(mu)),
// weight block by weight block.  budget bounds dim V(mu) * 2^|positive roots|.
CohomologySlice chevalley_eilenberg_cohomology(const RootSystem& R, const IVec& mu, int q, long long budget = 2000000);
// all degrees in one pass
std::vector<CohomologySlice> chevalley_eilenberg_all(const RootSystem& R, const IVec& mu, long long budget = 2000000);

}  // namespace cohomolib
