#ifndef LIAISON_POLYNOMIAL_HPP
#define LIAISON_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liaison/monomial.hpp"
#include "liaison/ring.hpp"

namespace liaison {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Exact multivariate polynomial with terms kept strictly grevlex-descending.
/// The ring travels with the value so mismatched arithmetic is caught.
class Polynomial {
 public:
  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}
  Polynomial(PolyRing ring, std::vector<Term> terms);

  static Polynomial zero(const PolyRing& r) { return Polynomial(r); }
  /// Adopts terms that are already normalized (strictly descending, no zeros).
  static Polynomial from_sorted(const PolyRing& r, std::vector<Term> terms) {
    Polynomial p(r);
    p.terms_ = std::move(terms);
    return p;
  }
  static Polynomial constant(const PolyRing& r, const Coeff& c);
  static Polynomial variable(const PolyRing& r, int i, int power = 1);
  static Polynomial monomial_term(const PolyRing& r, Monomial m, Coeff c);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }
  const Coeff& leading_coeff() const { return leading().coeff; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  PolyRing ring_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Coeff& c);
Polynomial poly_mul_term(const Polynomial& a, const Monomial& m, const Coeff& c);
Polynomial poly_monic(const Polynomial& a);

/// Exact quotient a / b; nullopt when b does not divide a.
std::optional<Polynomial> poly_exact_divide(const Polynomial& a, const Polynomial& b);

/// Homogeneous component of the given total degree.
Polynomial homogeneous_component(const Polynomial& a, int degree);

}  // namespace liaison

#endif
