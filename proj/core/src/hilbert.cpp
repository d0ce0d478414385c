#include "liaison/hilbert.hpp"

#include <algorithm>

namespace liaison {

HilbertSeries hilbert_series(const FreeComplex& res) {
  HilbertSeries hs;
  hs.nvars = res.ring().nvars();
  for (int i = 0; i <= res.length(); ++i) {
    long long sign = (i % 2 == 0) ? 1 : -1;
    for (int t : res.module(i).twists()) hs.numerator[t] += sign;
  }
  for (auto it = hs.numerator.begin(); it != hs.numerator.end();)
    it = it->second == 0 ? hs.numerator.erase(it) : std::next(it);
  return hs;
}

HilbertSeries hilbert_series_module(const GradedModule& m) {
  return hilbert_series(minimal_free_resolution(m, m.ring().nvars() + 1));
}

namespace {

// dim S_e = C(e + nv - 1, nv - 1) for e >= 0, else 0.
long long dim_s(int nv, long long e) {
  if (e < 0) return 0;
  long long num = 1, den = 1;
  for (int k = 1; k <= nv - 1; ++k) {
    num *= e + k;
    den *= k;
  }
  return num / den;
}

// The polynomial extension of dim S_e.
long long dim_s_poly(int nv, long long e) {
  long long num = 1, den = 1;
  for (int k = 1; k <= nv - 1; ++k) {
    num *= e + k;
    den *= k;
  }
  return num / den;
}

}  // namespace

long long hilbert_value(const HilbertSeries& hs, int d) {
  long long v = 0;
  for (auto& [a, c] : hs.numerator) v += c * dim_s(hs.nvars, d - a);
  return v;
}

long long hilbert_polynomial_value(const HilbertSeries& hs, long long d) {
  long long v = 0;
  for (auto& [a, c] : hs.numerator) v += c * dim_s_poly(hs.nvars, d - a);
  return v;
}

int regularity(const FreeComplex& res) {
  int reg = -(1 << 30);
  for (int i = 0; i <= res.length(); ++i)
    for (int t : res.module(i).twists()) reg = std::max(reg, t - i);
  return reg;
}

int regularity_of_module(const GradedModule& m) {
  if (module_is_zero(m)) return -(1 << 30);
  return regularity(minimal_free_resolution(m, m.ring().nvars() + 1));
}

int regularity_of_ideal(const Ideal& i) {
  Ideal sat = saturate(i);
  if (sat.is_unit_ideal()) return 0;
  return regularity(minimal_free_resolution(GradedModule::from_ideal(sat), i.ring().nvars() + 1));
}

bool module_finite_length(const GradedModule& m) {
  HilbertSeries hs = hilbert_series_module(m);
  // Finite length iff the Hilbert polynomial vanishes identically; test at
  // nvars+1 points (its degree is < nvars).
  for (int k = 0; k <= hs.nvars; ++k)
    if (hilbert_polynomial_value(hs, 1000 + 17 * k) != 0) return false;
  return true;
}

int scheme_dimension(const Ideal& i) {
  Ideal sat = saturate(i);
  if (sat.is_unit_ideal()) return -1;
  return affine_dimension(sat) - 1;
}

long long scheme_degree(const Ideal& i) {
  Ideal sat = saturate(i);
  if (sat.is_unit_ideal()) return 0;
  int m = affine_dimension(sat) - 1;
  if (m < 0) return 0;
  HilbertSeries hs = hilbert_series_module(GradedModule::quotient_ring(sat));
  // m-th finite difference of the Hilbert polynomial is deg * m! / m! = deg.
  long long base = 1000;
  std::vector<long long> vals;
  for (int k = 0; k <= m; ++k) vals.push_back(hilbert_polynomial_value(hs, base + k));
  for (int step = 0; step < m; ++step)
    for (size_t j = 0; j + 1 < vals.size() - static_cast<size_t>(step); ++j)
      vals[j] = vals[j + 1] - vals[j];
  return vals[0];
}

Coeff random_coeff(const CoefficientField& F, std::mt19937_64& rng, bool allow_zero) {
  if (F.kind() == CoefficientField::Kind::prime_field) {
    std::uniform_int_distribution<int64_t> dist(allow_zero ? 0 : 1, F.characteristic() - 1);
    return F.from_int(dist(rng));
  }
  std::uniform_int_distribution<int> dist(allow_zero ? -5 : 1, 5);
  int v = dist(rng);
  if (!allow_zero && v == 0) v = 1;
  return F.from_int(v);
}

std::optional<GradedMatrix> module_isomorphism(const GradedModule& m_in, const GradedModule& n_in,
                                               uint64_t seed, int tries) {
  GradedModule m = minimal_presentation(m_in);
  GradedModule n = minimal_presentation(n_in);
  if (m.gens().rank() == 0 && n.gens().rank() == 0)
    return GradedMatrix::zero_map(m.ring(), m.gens(), n.gens());
  if (m.gens().twist_function() != n.gens().twist_function()) return std::nullopt;
  if (!(hilbert_series_module(m) == hilbert_series_module(n))) return std::nullopt;

  auto homs = hom_space_degree_zero(m, n);
  if (homs.empty()) return std::nullopt;
  const auto& F = m.ring().field();

  auto is_iso = [&](const GradedMatrix& phi) {
    // Surjective + equal Hilbert series => isomorphism.
    return cokernel_is_zero(matrix_hconcat(phi, n.rels()));
  };
  for (const auto& phi : homs)
    if (is_iso(phi)) return phi;

  std::mt19937_64 rng(seed);
  for (int t = 0; t < tries; ++t) {
    GradedMatrix phi = GradedMatrix::zero_map(m.ring(), m.gens(), n.gens());
    bool nonzero = false;
    GradedMatrix acc = phi;
    for (const auto& h : homs) {
      Coeff c = random_coeff(F, rng);
      if (F.is_zero(c)) continue;
      nonzero = true;
      for (int i = 0; i < acc.rows(); ++i)
        for (int j = 0; j < acc.cols(); ++j)
          acc.set(i, j, poly_add(acc.at(i, j), poly_scale(h.at(i, j), c)));
    }
    if (!nonzero) continue;
    if (is_iso(acc)) return acc;
  }
  return std::nullopt;
}

bool modules_isomorphic(const GradedModule& m, const GradedModule& n, uint64_t seed) {
  return module_isomorphism(m, n, seed).has_value();
}

}  // namespace liaison
