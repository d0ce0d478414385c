#include "liaison/field.hpp"

namespace liaison {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t mod_reduce(int64_t n, int64_t p) {
  int64_t r = n % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; requires 0 < a < p with p prime.
int64_t mod_inverse(int64_t a, int64_t p) {
  int64_t old_r = a, r = p;
  int64_t old_s = 1, s = 0;
  while (r != 0) {
    int64_t q = old_r / r;
    int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_reduce(old_s, p);
}

}  // namespace

CoefficientField CoefficientField::prime(int64_t p) {
  if (!is_prime(p)) throw PreconditionError("prime_field modulus " + std::to_string(p) + " is not prime");
  return CoefficientField(Kind::prime_field, p);
}

Coeff CoefficientField::from_int(int64_t n) const {
  if (kind_ == Kind::prime_field) return Coeff(mod_reduce(n, p_));
  return Coeff(mpq_class(n));
}

Coeff CoefficientField::from_fraction(int64_t num, int64_t den) const {
  if (den == 0) throw PreconditionError("zero denominator");
  if (kind_ == Kind::prime_field) {
    int64_t d = mod_reduce(den, p_);
    if (d == 0) throw PreconditionError("denominator divisible by field characteristic");
    return Coeff(mod_reduce(mod_reduce(num, p_) * mod_inverse(d, p_), p_));
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Coeff(std::move(q));
}

bool CoefficientField::is_zero(const Coeff& a) const {
  if (kind_ == Kind::prime_field) return a.residue() == 0;
  return sgn(a.rational()) == 0;
}

bool CoefficientField::is_one(const Coeff& a) const {
  if (kind_ == Kind::prime_field) return a.residue() == 1;
  return a.rational() == 1;
}

Coeff CoefficientField::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::prime_field) return Coeff(mod_reduce(a.residue() + b.residue(), p_));
  return Coeff(mpq_class(a.rational() + b.rational()));
}

Coeff CoefficientField::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::prime_field) return Coeff(mod_reduce(a.residue() - b.residue(), p_));
  return Coeff(mpq_class(a.rational() - b.rational()));
}

Coeff CoefficientField::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::prime_field) return Coeff(mod_reduce(a.residue() * b.residue(), p_));
  return Coeff(mpq_class(a.rational() * b.rational()));
}

Coeff CoefficientField::neg(const Coeff& a) const {
  if (kind_ == Kind::prime_field) return Coeff(mod_reduce(-a.residue(), p_));
  return Coeff(mpq_class(-a.rational()));
}

Coeff CoefficientField::inv(const Coeff& a) const {
  if (is_zero(a)) throw PreconditionError("division by zero");
  if (kind_ == Kind::prime_field) return Coeff(mod_inverse(a.residue(), p_));
  return Coeff(mpq_class(1 / a.rational()));
}

std::string CoefficientField::to_string() const {
  if (kind_ == Kind::prime_field) return "GF(" + std::to_string(p_) + ")";
  return "QQ";
}

std::string CoefficientField::coeff_to_string(const Coeff& a) const {
  if (kind_ == Kind::prime_field) return std::to_string(a.residue());
  return a.rational().get_str();
}

}  // namespace liaison
