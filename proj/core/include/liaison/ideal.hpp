#ifndef LIAISON_IDEAL_HPP
#define LIAISON_IDEAL_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "liaison/gb.hpp"

namespace liaison {

/// Homogeneous ideal with a lazily computed, shared, reduced Groebner basis.
/// Values are immutable; the cache is internally synchronized so a shared
/// Ideal may be queried from several threads.
class Ideal {
 public:
  Ideal(PolyRing ring, std::vector<Polynomial> gens);

  static Ideal zero(const PolyRing& r) { return Ideal(r, {}); }
  static Ideal unit(const PolyRing& r) {
    return Ideal(r, {Polynomial::constant(r, r.field().one())});
  }

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// The reduced Groebner basis (grevlex); computed once and cached.
  const std::vector<Polynomial>& groebner_basis() const;

  bool is_zero_ideal() const { return groebner_basis().empty(); }
  bool is_unit_ideal() const;

 private:
  PolyRing ring_;
  std::vector<Polynomial> gens_;

  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const std::vector<Polynomial>> gb;
  };
  std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& i);
bool ideal_contains(const Ideal& i, const Polynomial& f);
bool ideal_contains_ideal(const Ideal& i, const Ideal& j);  // j subseteq i
bool ideal_equal(const Ideal& i, const Ideal& j);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const Ideal& i, const Ideal& j);
/// (i : j) = { f : f*j subseteq i }.
Ideal ideal_quotient(const Ideal& i, const Ideal& j);
/// Saturation with respect to the irrelevant maximal ideal (x0..xn).
Ideal saturate(const Ideal& i);
bool is_saturated(const Ideal& i);

/// Height of the ideal, from the staircase of the initial ideal.
/// Errors on the unit ideal.
int codimension(const Ideal& i);
/// Krull dimension of S/I (affine cone dimension).
int affine_dimension(const Ideal& i);

/// dim_k of the degree-d piece of the ideal; 0 for d < 0.
int hilbert_function_ideal(const Ideal& i, int d);
/// dim_k of the degree-d piece of S/I.
int hilbert_function_quotient(const Ideal& i, int d);

bool is_regular_sequence(const std::vector<Polynomial>& fs);

/// Leading monomials of the reduced basis (the initial ideal's minimal
/// generators).
std::vector<Monomial> initial_ideal_gens(const Ideal& i);

/// Minimal generators of the ideal: a subset-style pruning of the input
/// generators to a minimal homogeneous generating set, degree-ascending.
std::vector<Polynomial> minimal_ideal_generators(const Ideal& i);

}  // namespace liaison

#endif
