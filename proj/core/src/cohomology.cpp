#include "liaison/cohomology.hpp"

#include <algorithm>

namespace liaison {

GradedModule graded_ext(const GradedModule& m, int i) {
  const PolyRing& ring = m.ring();
  if (i < 0) return GradedModule::zero(ring);
  FreeComplex res = minimal_free_resolution(m, ring.nvars() + 1);
  int len = res.length();
  if (i > len) return GradedModule::zero(ring);

  // Hom cochain 0 -> L_0^v -> L_1^v -> ... ; H^i = ker(out)/im(in).
  if (i == len) {
    if (len == 0) return GradedModule::free_module(ring, res.module(0).dual(0));
    GradedMatrix in = res.differential(len - 1).dual(0);
    return GradedModule::cokernel(in);
  }
  GradedMatrix out = res.differential(i).dual(0);  // L_i^v -> L_{i+1}^v
  GradedMatrix kappa = syzygies(out);
  if (kappa.cols() == 0) return GradedModule::zero(ring);
  GradedMatrix rels = syzygies(kappa);
  if (i >= 1) {
    GradedMatrix in = res.differential(i - 1).dual(0);  // L_{i-1}^v -> L_i^v
    GradedMatrix lifted = lift_through(kappa, in);
    rels = matrix_hconcat(lifted, rels);
  }
  return minimal_presentation(GradedModule(std::move(rels)));
}

GradedDimensionTable sheaf_cohomology_table(const GradedModule& m, int low, int high) {
  const PolyRing& ring = m.ring();
  int nv = ring.nvars();
  int n = nv - 1;
  GradedDimensionTable t;
  t.low = low;
  t.high = high;

  HilbertSeries hs_m = hilbert_series_module(m);
  std::vector<HilbertSeries> ext_hs(nv + 1);
  for (int j = 0; j <= nv; ++j) ext_hs[j] = hilbert_series_module(graded_ext(m, j));

  // h^0(F(d)) = dim M_d - dim H^0_m(M)_d + dim H^1_m(M)_d, with
  // H^j_m(M)_d = Ext^{nv-j}(M,S)_{-d-nv} by graded local duality.
  auto hm = [&](int j, int d) -> long long {
    if (j < 0 || j > nv) return 0;
    return hilbert_value(ext_hs[nv - j], -d - nv);
  };
  for (int i = 0; i <= n; ++i) t.rows[i] = std::vector<long long>(high - low + 1, 0);
  for (int d = low; d <= high; ++d) {
    t.rows[0][d - low] = hilbert_value(hs_m, d) - hm(0, d) + hm(1, d);
    for (int i = 1; i <= n; ++i) t.rows[i][d - low] = hm(i + 1, d);
  }
  return t;
}

GradedDimensionTable ideal_sheaf_cohomology(const Ideal& i, int low, int high) {
  Ideal sat = saturate(i);
  if (sat.is_unit_ideal()) throw PreconditionError("ideal sheaf of the empty scheme");
  return sheaf_cohomology_table(GradedModule::from_ideal(sat), low, high);
}

std::pair<int, int> default_window(const Ideal& i) {
  int reg = regularity_of_ideal(i);
  int w = std::max(reg + 2, 4);
  return {-w, w};
}

GradedDimensionTable rao_modules(const Ideal& i, int low, int high) {
  GradedDimensionTable full = ideal_sheaf_cohomology(i, low, high);
  GradedDimensionTable out;
  out.low = low;
  out.high = high;
  int n = i.ring().nvars() - 1;
  for (int row = 1; row <= n - 2; ++row) out.rows[row] = full.rows[row];
  return out;
}

bool check_h_star_vanishing(const GradedModule& m, int r) {
  int nv = m.ring().nvars();
  for (int i = 1; i < r; ++i) {
    // H^i_*(sheaf) = 0 iff H^{i+1}_m(M) = 0 iff Ext^{nv-1-i}(M,S) = 0.
    if (!module_is_zero(graded_ext(m, nv - 1 - i))) return false;
  }
  return true;
}

bool ext_sheaves_vanish(const GradedModule& m, int r) {
  for (int i = 1; i < r; ++i)
    if (!module_finite_length(graded_ext(m, i))) return false;
  return true;
}

bool is_reflexive(const GradedModule& m) {
  DoubleDualData dd = double_dual(m);
  if (!cokernel_is_zero(matrix_hconcat(dd.eval, dd.double_dual.rels()))) return false;
  return hilbert_series_module(m) == hilbert_series_module(dd.double_dual);
}

namespace {

// Multiplication by a monomial between two degree pieces of the module.
DenseMatrix multiplication_map(const ModulePieces& pieces, const Monomial& mono, int from_d,
                               int to_d) {
  const auto& F = pieces.module().ring().field();
  int fd = pieces.dim(from_d), td = pieces.dim(to_d);
  DenseMatrix out(F, td, fd);
  for (int j = 0; j < fd; ++j) {
    std::vector<Polynomial> rep = pieces.representative(from_d, j);
    for (auto& p : rep) p = poly_mul_term(p, mono, F.one());
    std::vector<Coeff> red = pieces.coords(rep, to_d);
    for (int r = 0; r < td; ++r) out.at(r, j) = red[r];
  }
  return out;
}

std::map<int, std::vector<long long>> koszul_power_table(const ModulePieces& pieces, int low,
                                                         int high, int t) {
  const PolyRing& ring = pieces.module().ring();
  const auto& F = ring.field();
  int nv = ring.nvars();
  std::vector<std::vector<unsigned>> subsets(nv + 1);
  for (unsigned mask = 0; mask < (1u << nv); ++mask)
    subsets[__builtin_popcount(mask)].push_back(mask);

  std::map<int, std::vector<long long>> rows;
  for (int j = 0; j <= nv; ++j) rows[j] = std::vector<long long>(high - low + 1, 0);

  for (int d = low; d <= high; ++d) {
    std::vector<int> pdim;
    for (int j = 0; j <= nv; ++j) pdim.push_back(pieces.dim(d + j * t));
    std::vector<DenseMatrix> delta;
    for (int j = 0; j < nv; ++j) {
      // One multiplication map per variable, shared across wedge components.
      std::vector<DenseMatrix> mult;
      mult.reserve(nv);
      for (int v = 0; v < nv; ++v) {
        Monomial xt(nv);
        xt.e[v] = t;
        mult.push_back(multiplication_map(pieces, xt, d + j * t, d + (j + 1) * t));
      }
      int rows_n = static_cast<int>(subsets[j + 1].size()) * pdim[j + 1];
      int cols_n = static_cast<int>(subsets[j].size()) * pdim[j];
      DenseMatrix dm(F, rows_n, cols_n);
      for (size_t bs = 0; bs < subsets[j].size(); ++bs) {
        unsigned mask = subsets[j][bs];
        for (int v = 0; v < nv; ++v) {
          if (mask & (1u << v)) continue;
          unsigned bigger = mask | (1u << v);
          auto it = std::find(subsets[j + 1].begin(), subsets[j + 1].end(), bigger);
          int bt = static_cast<int>(it - subsets[j + 1].begin());
          int sign = __builtin_popcount(mask & ((1u << v) - 1)) % 2 == 0 ? 1 : -1;
          for (int rr = 0; rr < mult[v].rows(); ++rr)
            for (int cc = 0; cc < mult[v].cols(); ++cc) {
              Coeff val = mult[v].at(rr, cc);
              if (sign < 0) val = F.neg(val);
              int R = bt * pdim[j + 1] + rr;
              int C = static_cast<int>(bs) * pdim[j] + cc;
              dm.at(R, C) = F.add(dm.at(R, C), val);
            }
        }
      }
      delta.push_back(std::move(dm));
    }
    for (int j = 0; j <= nv; ++j) {
      long long dim_space = static_cast<long long>(subsets[j].size()) * pdim[j];
      long long rank_out = (j < nv) ? delta[j].rank() : 0;
      long long rank_in = (j > 0) ? delta[j - 1].rank() : 0;
      rows[j][d - low] = dim_space - rank_out - rank_in;
    }
  }
  return rows;
}

}  // namespace

std::map<int, std::vector<long long>> local_cohomology_oracle(const GradedModule& m, int low,
                                                              int high, int max_power) {
  ModulePieces pieces(m);
  std::map<int, std::vector<long long>> prev;
  for (int t = 1; t <= max_power; ++t) {
    auto cur = koszul_power_table(pieces, low, high, t);
    if (t > 1 && cur == prev) return cur;
    prev = std::move(cur);
  }
  throw InternalError("local_cohomology_oracle did not stabilize within the power budget");
}

long long line_bundle_cohomology(int nvars, int i, int a) {
  int n = nvars - 1;
  auto binom = [](long long x, int k) -> long long {
    if (x < k) return 0;
    long long num = 1, den = 1;
    for (int j = 0; j < k; ++j) {
      num *= x - j;
      den *= j + 1;
    }
    return num / den;
  };
  if (i == 0) return a >= 0 ? binom(a + n, n) : 0;
  if (i == n) return binom(-a - 1, n);
  return 0;
}

}  // namespace liaison
