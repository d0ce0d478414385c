#ifndef LIAISON_COHOMOLOGY_HPP
#define LIAISON_COHOMOLOGY_HPP

#include "liaison/hilbert.hpp"

namespace liaison {

/// Dimension table: rows indexed by cohomology degree i, columns by twist n
/// over a finite window [low, high].
struct GradedDimensionTable {
  int low = 0, high = -1;
  std::map<int, std::vector<long long>> rows;

  long long at(int i, int n) const {
    auto it = rows.find(i);
    if (it == rows.end()) return 0;
    if (n < low || n > high) throw PreconditionError("twist outside table window");
    return it->second[n - low];
  }
  bool row_is_zero(int i) const {
    auto it = rows.find(i);
    if (it == rows.end()) return true;
    for (long long v : it->second)
      if (v != 0) return false;
    return true;
  }
  bool operator==(const GradedDimensionTable& o) const {
    return low == o.low && high == o.high && rows == o.rows;
  }
};

/// Ext^i(M, S) as a presented graded module (zero module when i is out of
/// range), computed from the dualized minimal free resolution.
GradedModule graded_ext(const GradedModule& m, int i);

/// h^i(F(n)) for the sheaf F associated to M, over the window, for
/// i = 0..projective dimension of the space. Uses graded duality:
/// h^i(F(n)) = dim Ext^{nv-1-i}(M,S)_{-n-nv} for i >= 1.
GradedDimensionTable sheaf_cohomology_table(const GradedModule& m, int low, int high);

/// Table for the ideal sheaf of V(I) (saturates internally; h^0 row equals
/// the Hilbert function of the saturated ideal).
GradedDimensionTable ideal_sheaf_cohomology(const Ideal& i, int low, int high);

/// Default window [-(reg+2), reg+2] from the regularity of the resolution.
std::pair<int, int> default_window(const Ideal& i);

/// The intermediate cohomology rows i = 1 .. n-2 of the ideal sheaf (the Rao
/// or deficiency modules as dimension vectors).
GradedDimensionTable rao_modules(const Ideal& i, int low, int high);

/// True iff H^i_*(sheaf of M) = 0 for all 0 < i < r, tested exactly via
/// vanishing of the dual Ext modules (no window).
bool check_h_star_vanishing(const GradedModule& m, int r);

/// True iff the graded module Ext^i(M,S) has finite length for all 0 < i < r,
/// i.e. the corresponding Ext sheaves vanish.
bool ext_sheaves_vanish(const GradedModule& m, int r);

/// Natural map to the double dual is an isomorphism.
bool is_reflexive(const GradedModule& m);

/// Independent oracle: H^j_m(M) in the window by the stabilized Koszul
/// complex on t-th powers of the variables; exact but only practical for
/// modules with slowly growing Hilbert functions.
std::map<int, std::vector<long long>> local_cohomology_oracle(const GradedModule& m, int low,
                                                              int high, int max_power = 14);

/// Closed form h^i(O_P^n(a)) used for cross-checks.
long long line_bundle_cohomology(int nvars, int i, int a);

}  // namespace liaison

#endif
