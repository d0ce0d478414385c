#ifndef LIAISON_TWIST_FUNCTION_HPP
#define LIAISON_TWIST_FUNCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "liaison/errors.hpp"

namespace liaison {

/// Finitely supported function Z -> N, e.g. "number of generators in each
/// degree". Carries the partial-sum operator f#(a) = sum_{n<=a} f(n).
class TwistFunction {
 public:
  TwistFunction() = default;
  explicit TwistFunction(std::map<int, int> support);

  /// Builds the multiplicity function of a multiset of degrees.
  static TwistFunction from_degrees(const std::vector<int>& degrees);

  const std::map<int, int>& support() const { return support_; }
  int value(int n) const;
  int total() const;
  bool is_zero() const { return support_.empty(); }

  int sharp(int a) const;

  int min_degree() const;  // throws on zero function
  int max_degree() const;

  /// The nondecreasing degree sequence {a_i} with f(n) = #{i : a_i = n}.
  std::vector<int> degree_sequence() const;

  TwistFunction shifted(int h) const;  // n -> f(n - h)
  TwistFunction plus(const TwistFunction& g) const;
  /// Pointwise difference; throws if any value would go negative.
  TwistFunction minus(const TwistFunction& g) const;

  bool operator==(const TwistFunction& o) const { return support_ == o.support_; }
  bool operator!=(const TwistFunction& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<int, int> support_;  // degree -> positive count
};

enum class SharpVerdict { f_dominates, g_dominates, equal, incomparable };

/// Compares partial sums of two functions with equal totals, checking the
/// partial-sum characterization against the sorted-sequence one.
SharpVerdict sharp_compare(const TwistFunction& f, const TwistFunction& g);

std::string to_string(SharpVerdict v);

}  // namespace liaison

#endif
