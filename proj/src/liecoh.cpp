#include "cohomolib/liecoh.hpp"

#include <bit>

#include "cohomolib/liealg.hpp"

namespace cohomolib {

std::map<IVec, long long> CohomologySlice::weights() const {
  std::map<IVec, long long> m;
  for (auto& e : entries) m[e.weight] += e.dim;
  return m;
}

long long CohomologySlice::total() const {
  long long s = 0;
  for (auto& e : entries) s += e.dim;
  return s;
}

CohomologySlice kostant_cohomology(const RootSystem& R, const IVec& mu, int q, long long weyl_bound) {
  if (!R.is_dominant(mu)) throw UserError("kostant_cohomology needs a dominant weight");
  CohomologySlice s;
  s.q = q;
  auto groups = enumerate_weyl(R, weyl_bound);
  if (q < 0 || q >= int(groups.size())) return s;
  for (auto& w : groups[q]) {
    CohomologyEntry e;
    e.weight = act_affine(w, mu);
    e.dim = 1;
    e.w = w;
    e.harmonic = inversion_set(R, w.inverse());
    s.entries.push_back(std::move(e));
  }
  return s;
}

CohomologySlice trivial_coeff_cohomology(const RootSystem& R, int q, long long weyl_bound) {
  return kostant_cohomology(R, IVec(R.rank(), 0), q, weyl_bound);
}

namespace {

std::vector<int> members(unsigned mask) {
  std::vector<int> v;
  for (int k = 0; mask; ++k, mask >>= 1)
    if (mask & 1) v.push_back(k);
  return v;
}

}  // namespace

std::vector<CohomologySlice> chevalley_eilenberg_all(const RootSystem& R, const IVec& mu, long long budget) {
  int N = R.num_positive();
  if (N > 20) throw BudgetError("too many positive roots for the cochain complex");
  long long dimv = weyl_dimension_ll(R, mu);
  if (dimv * (1LL << N) > budget)
    throw BudgetError("cochain complex of size " + std::to_string(dimv * (1LL << N)) + " exceeds budget");
  auto Rp = std::make_shared<RootSystem>(R);
  LieAlgebra g(Rp);
  ModuleOptions opt;
  opt.max_dim = dimv;
  HWModule V(Rp, mu, opt);
  RootActions act(g, V);

  std::vector<IVec> rootf(N);
  for (int k = 0; k < N; ++k) rootf[k] = R.to_fundamental(R.positive_root(k));
  unsigned full = N ? ((1u << N) - 1) : 0;
  std::vector<IVec> sumf(full + 1, IVec(R.rank(), 0));
  for (unsigned m = 1; m <= full; ++m) {
    int low = std::countr_zero(m);
    sumf[m] = sumf[m & (m - 1)] + rootf[low];
  }
  // [e_a, e_b] = c e_{t}
  std::vector<std::vector<std::pair<int, Q>>> br(N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (auto& [t, c] : g.bracket(g.e(a), g.e(b))) br[a * N + b].push_back({g.root_of(t), c});

  // cochain basis per (degree, weight): list of (mask, offset)
  struct Block {
    std::vector<std::pair<unsigned, int>> cells;
    std::map<unsigned, int> where;
    int size = 0;
  };
  std::vector<std::map<IVec, Block>> blocks(N + 1);
  for (unsigned m = 0; m <= full; ++m) {
    int q = std::popcount(m);
    for (auto& nu : V.support()) {
      IVec om = nu - sumf[m];
      Block& b = blocks[q][om];
      b.where[m] = b.size;
      b.cells.push_back({m, b.size});
      b.size += V.dim(nu);
    }
  }
  // rank of d: C^q_om -> C^{q+1}_om
  auto drank = [&](int q, const IVec& om) -> int {
    if (q < 0 || q >= N) return 0;
    auto it1 = blocks[q].find(om);
    auto it2 = blocks[q + 1].find(om);
    if (it1 == blocks[q].end() || it2 == blocks[q + 1].end()) return 0;
    const Block& src = it1->second;
    const Block& dst = it2->second;
    QMat D(dst.size, src.size);
    for (auto& [T, roff] : dst.cells) {
      auto xs = members(T);
      IVec nuT = om + sumf[T];
      int dT = V.dim(nuT);
      // module term
      for (std::size_t i = 0; i < xs.size(); ++i) {
        unsigned S = T & ~(1u << xs[i]);
        auto w = src.where.find(S);
        if (w == src.where.end()) continue;
        IVec nuS = om + sumf[S];
        const QMat& blk = act.block(g.e(xs[i]), nuS);
        Q sg = (i % 2) ? -1 : 1;
        for (int r = 0; r < blk.r; ++r)
          for (int c = 0; c < blk.c; ++c)
            if (!is_zero(blk(r, c))) D(roff + r, w->second + c) += sg * blk(r, c);
      }
      // bracket term
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
          for (auto& [t, c] : br[xs[i] * N + xs[j]]) {
            unsigned rest = T & ~(1u << xs[i]) & ~(1u << xs[j]);
            if (rest & (1u << t)) continue;
            unsigned S = rest | (1u << t);
            int pos = std::popcount(rest & ((1u << t) - 1));
            Q sg = ((i + j + pos) % 2) ? -1 : 1;
            auto w = src.where.find(S);
            if (w == src.where.end()) continue;
            for (int r = 0; r < dT; ++r) D(roff + r, w->second + r) += sg * c;
          }
    }
    return rank_of(D);
  };

  std::vector<CohomologySlice> out(N + 1);
  for (int q = 0; q <= N; ++q) {
    out[q].q = q;
    for (auto& [om, b] : blocks[q]) {
      long long h = b.size - drank(q, om) - drank(q - 1, om);
      if (h < 0) throw std::logic_error("negative cohomology dimension");
      if (h) out[q].entries.push_back({om, h, std::nullopt, {}});
    }
  }
  return out;
}

CohomologySlice chevalley_eilenberg_cohomology(const RootSystem& R, const IVec& mu, int q, long long budget) {
  auto all = chevalley_eilenberg_all(R, mu, budget);
  if (q < 0 || q >= int(all.size())) {
    CohomologySlice s;
    s.q = q;
    return s;
  }
  return all[q];
}

}  // namespace cohomolib
