#ifndef LIAISON_HILBERT_HPP
#define LIAISON_HILBERT_HPP

#include <random>

#include "liaison/complexes.hpp"

namespace liaison {

/// Hilbert series numerator N(t) with denominator (1-t)^nvars, exact over Z.
struct HilbertSeries {
  std::map<int, long long> numerator;
  int nvars = 0;

  bool operator==(const HilbertSeries& o) const {
    return nvars == o.nvars && numerator == o.numerator;
  }
};

HilbertSeries hilbert_series(const FreeComplex& resolution);
HilbertSeries hilbert_series_module(const GradedModule& m);

/// Exact Hilbert function value (dimension counts, zero below the support).
long long hilbert_value(const HilbertSeries& hs, int d);
/// Hilbert polynomial value (the polynomial extension, any integer d).
long long hilbert_polynomial_value(const HilbertSeries& hs, long long d);

/// max over the resolution of (generator degree - homological position).
int regularity(const FreeComplex& resolution);
int regularity_of_module(const GradedModule& m);
/// Castelnuovo-Mumford regularity of the subscheme V(I) (the sheaf-side
/// convention: regularity of the saturated ideal).
int regularity_of_ideal(const Ideal& i);

/// Degree of the projective scheme V(I) from its Hilbert polynomial; 0 when
/// the scheme is empty.
long long scheme_degree(const Ideal& i);
/// Projective dimension of V(I); -1 when empty.
int scheme_dimension(const Ideal& i);

/// True iff the module is finite-dimensional over k (Hilbert polynomial 0).
bool module_finite_length(const GradedModule& m);

/// Deterministic tries plus seeded random combinations of Hom-space basis
/// elements; a surjection between modules with equal Hilbert series is an
/// isomorphism. Returns the isomorphism matrix when found.
std::optional<GradedMatrix> module_isomorphism(const GradedModule& m, const GradedModule& n,
                                               uint64_t seed = 0, int tries = 40);
bool modules_isomorphic(const GradedModule& m, const GradedModule& n, uint64_t seed = 0);

/// Random nonzero field element (small integers over the rationals).
Coeff random_coeff(const CoefficientField& F, std::mt19937_64& rng, bool allow_zero = true);

}  // namespace liaison

#endif
