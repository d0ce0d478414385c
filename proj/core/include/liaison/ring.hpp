#ifndef LIAISON_RING_HPP
#define LIAISON_RING_HPP

#include <string>

#include "liaison/field.hpp"

namespace liaison {

/// Homogeneous coordinate ring k[x0..x{n}] of P^n with the grevlex order.
/// num_vars = n + 1; the monomial order is fixed ring-wide.
class PolyRing {
 public:
  PolyRing(CoefficientField field, int num_vars) : field_(field), nvars_(num_vars) {
    if (num_vars < 2) throw PreconditionError("PolyRing needs at least 2 variables");
  }

  const CoefficientField& field() const { return field_; }
  int nvars() const { return nvars_; }
  int projective_dim() const { return nvars_ - 1; }

  std::string var_name(int i) const { return "x" + std::to_string(i); }

  bool operator==(const PolyRing& o) const { return field_ == o.field_ && nvars_ == o.nvars_; }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

  std::string to_string() const { return field_.to_string() + "[" + std::to_string(nvars_) + " vars]"; }

 private:
  CoefficientField field_;
  int nvars_;
};

inline void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (a != b) throw RingMismatchError("operands live in different rings");
}

}  // namespace liaison

#endif
