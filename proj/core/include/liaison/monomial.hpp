#ifndef LIAISON_MONOMIAL_HPP
#define LIAISON_MONOMIAL_HPP

#include <numeric>
#include <vector>

namespace liaison {

/// Exponent vector of a monomial in a fixed number of variables.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const {
    for (int x : e)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {  // a / b, assumes b | a
  Monomial r(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

/// Graded reverse lexicographic comparison: a > b iff deg a > deg b, or the
/// degrees agree and the last nonzero entry of a - b is negative.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

inline bool grevlex_greater(const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; }

/// All monomials of the given total degree, in grevlex-descending order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace liaison

#endif
