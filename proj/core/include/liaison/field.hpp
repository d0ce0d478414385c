#ifndef LIAISON_FIELD_HPP
#define LIAISON_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "liaison/errors.hpp"

namespace liaison {

/// A field element: either a residue in [0, p) for a prime field, or an
/// arbitrary-precision rational. All arithmetic is exact; the interpreting
/// CoefficientField supplies the operations.
class Coeff {
 public:
  Coeff() : v_(int64_t{0}) {}
  explicit Coeff(int64_t r) : v_(r) {}
  explicit Coeff(mpq_class q) : v_(std::move(q)) {}

  bool is_modular() const { return std::holds_alternative<int64_t>(v_); }
  int64_t residue() const { return std::get<int64_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  bool operator==(const Coeff& o) const { return v_ == o.v_; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

 private:
  std::variant<int64_t, mpq_class> v_;
};

/// Exact coefficient field: the rationals, or GF(p) for a prime p.
class CoefficientField {
 public:
  enum class Kind { rationals, prime_field };

  static CoefficientField rationals() { return CoefficientField(Kind::rationals, 0); }
  static CoefficientField prime(int64_t p);

  Kind kind() const { return kind_; }
  int64_t characteristic() const { return p_; }

  bool operator==(const CoefficientField& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const CoefficientField& o) const { return !(*this == o); }

  Coeff zero() const { return from_int(0); }
  Coeff one() const { return from_int(1); }
  Coeff from_int(int64_t n) const;
  Coeff from_fraction(int64_t num, int64_t den) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  std::string to_string() const;
  std::string coeff_to_string(const Coeff& a) const;

 private:
  CoefficientField(Kind k, int64_t p) : kind_(k), p_(p) {}

  Kind kind_;
  int64_t p_;
};

}  // namespace liaison

#endif
