#include "liaison/polynomial.hpp"

#include <algorithm>

namespace liaison {

namespace {

// Sort descending, merge equal monomials, drop zero coefficients.
std::vector<Term> normalize(const CoefficientField& F, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (F.is_zero(out.back().coeff)) out.pop_back();
    } else if (!F.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(PolyRing ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  terms_ = normalize(ring_.field(), std::move(terms));
}

Polynomial Polynomial::constant(const PolyRing& r, const Coeff& c) {
  return Polynomial(r, {Term{Monomial(r.nvars()), c}});
}

Polynomial Polynomial::variable(const PolyRing& r, int i, int power) {
  Monomial m(r.nvars());
  m.e[i] = power;
  return Polynomial(r, {Term{std::move(m), r.field().one()}});
}

Polynomial Polynomial::monomial_term(const PolyRing& r, Monomial m, Coeff c) {
  return Polynomial(r, {Term{std::move(m), std::move(c)}});
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& F = ring_.field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = F.coeff_to_string(t.coeff);
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negative) {
        out += "-";
        cs = cs.substr(1);
      }
    } else {
      out += negative ? " - " : " + ";
      if (negative) cs = cs.substr(1);
    }
    first = false;
    std::string ms;
    for (int i = 0; i < t.mono.nvars(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (!ms.empty()) ms += "*";
      ms += ring_.var_name(i);
      if (t.mono.e[i] > 1) ms += "^" + std::to_string(t.mono.e[i]);
    }
    if (ms.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += ms;
    } else {
      out += cs + "*" + ms;
    }
  }
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& F = a.ring().field();
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  size_t i = 0, j = 0;
  while (i < a.terms().size() && j < b.terms().size()) {
    int c = grevlex_cmp(a.terms()[i].mono, b.terms()[j].mono);
    if (c > 0) {
      out.push_back(a.terms()[i++]);
    } else if (c < 0) {
      out.push_back(b.terms()[j++]);
    } else {
      Coeff s = F.add(a.terms()[i].coeff, b.terms()[j].coeff);
      if (!F.is_zero(s)) out.push_back(Term{a.terms()[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms().size(); ++i) out.push_back(a.terms()[i]);
  for (; j < b.terms().size(); ++j) out.push_back(b.terms()[j]);
  return Polynomial::from_sorted(a.ring(), std::move(out));
}

Polynomial poly_neg(const Polynomial& a) {
  const auto& F = a.ring().field();
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = F.neg(t.coeff);
  return Polynomial::from_sorted(a.ring(), std::move(out));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) { return poly_add(a, poly_neg(b)); }

Polynomial poly_mul_term(const Polynomial& a, const Monomial& m, const Coeff& c) {
  const auto& F = a.ring().field();
  if (F.is_zero(c)) return Polynomial::zero(a.ring());
  std::vector<Term> out;
  out.reserve(a.terms().size());
  // Multiplication by a fixed term preserves the grevlex order of terms.
  for (const auto& t : a.terms()) out.push_back(Term{mono_mul(t.mono, m), F.mul(t.coeff, c)});
  return Polynomial::from_sorted(a.ring(), std::move(out));
}

Polynomial poly_scale(const Polynomial& a, const Coeff& c) {
  return poly_mul_term(a, Monomial(a.ring().nvars()), c);
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  Polynomial acc = Polynomial::zero(a.ring());
  for (const auto& t : b.terms()) acc = poly_add(acc, poly_mul_term(a, t.mono, t.coeff));
  return acc;
}

Polynomial poly_monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, a.ring().field().inv(a.leading_coeff()));
}

std::optional<Polynomial> poly_exact_divide(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) return std::nullopt;
  const auto& F = a.ring().field();
  Polynomial rem = a;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    if (!mono_divides(b.leading_monomial(), rem.leading_monomial())) return std::nullopt;
    Monomial m = mono_div(rem.leading_monomial(), b.leading_monomial());
    Coeff c = F.div(rem.leading_coeff(), b.leading_coeff());
    quot.push_back(Term{m, c});
    rem = poly_sub(rem, poly_mul_term(b, m, c));
  }
  return Polynomial(a.ring(), std::move(quot));
}

Polynomial homogeneous_component(const Polynomial& a, int degree) {
  std::vector<Term> out;
  for (const auto& t : a.terms())
    if (t.mono.degree() == degree) out.push_back(t);
  return Polynomial(a.ring(), std::move(out));
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur(nvars);
  // Depth-first enumeration, then sort into grevlex-descending order.
  struct Rec {
    int nvars;
    std::vector<Monomial>* out;
    void go(Monomial& m, int var, int remaining) {
      if (var == nvars - 1) {
        m.e[var] = remaining;
        out->push_back(m);
        m.e[var] = 0;
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        m.e[var] = k;
        go(m, var + 1, remaining - k);
      }
      m.e[var] = 0;
    }
  } rec{nvars, &out};
  rec.go(cur, 0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

}  // namespace liaison
