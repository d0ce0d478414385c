#ifndef LIAISON_TEST_SUPPORT_HPP
#define LIAISON_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include "liaison/ideal.hpp"
#include "liaison/parse.hpp"

namespace ltest {

inline liaison::PolyRing ring_p3() {
  return liaison::PolyRing(liaison::CoefficientField::prime(32003), 4);
}

inline liaison::PolyRing ring_p4() {
  return liaison::PolyRing(liaison::CoefficientField::prime(32003), 5);
}

inline liaison::PolyRing ring_p3_qq() {
  return liaison::PolyRing(liaison::CoefficientField::rationals(), 4);
}

inline liaison::Polynomial P(const liaison::PolyRing& r, const std::string& s) {
  return liaison::parse_polynomial(r, s);
}

inline liaison::Ideal I(const liaison::PolyRing& r, const std::vector<std::string>& gens) {
  std::vector<liaison::Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return liaison::Ideal(r, std::move(ps));
}

// Frequently used corpus ideals over P^3.
inline liaison::Ideal line(const liaison::PolyRing& r) { return I(r, {"x0", "x1"}); }
inline liaison::Ideal twisted_cubic(const liaison::PolyRing& r) {
  return I(r, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
}
inline liaison::Ideal skew_lines(const liaison::PolyRing& r) {
  return I(r, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
}

}  // namespace ltest

#endif
