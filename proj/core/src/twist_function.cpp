#include "liaison/twist_function.hpp"

#include <algorithm>

namespace liaison {

TwistFunction::TwistFunction(std::map<int, int> support) : support_(std::move(support)) {
  for (auto it = support_.begin(); it != support_.end();) {
    if (it->second == 0) {
      it = support_.erase(it);
    } else if (it->second < 0) {
      throw PreconditionError("twist function values must be nonnegative");
    } else {
      ++it;
    }
  }
}

TwistFunction TwistFunction::from_degrees(const std::vector<int>& degrees) {
  std::map<int, int> s;
  for (int d : degrees) s[d] += 1;
  return TwistFunction(std::move(s));
}

int TwistFunction::value(int n) const {
  auto it = support_.find(n);
  return it == support_.end() ? 0 : it->second;
}

int TwistFunction::total() const {
  int t = 0;
  for (auto& [n, v] : support_) t += v;
  return t;
}

int TwistFunction::sharp(int a) const {
  int t = 0;
  for (auto& [n, v] : support_) {
    if (n > a) break;
    t += v;
  }
  return t;
}

int TwistFunction::min_degree() const {
  if (support_.empty()) throw PreconditionError("zero twist function has no minimum degree");
  return support_.begin()->first;
}

int TwistFunction::max_degree() const {
  if (support_.empty()) throw PreconditionError("zero twist function has no maximum degree");
  return support_.rbegin()->first;
}

std::vector<int> TwistFunction::degree_sequence() const {
  std::vector<int> out;
  for (auto& [n, v] : support_)
    for (int i = 0; i < v; ++i) out.push_back(n);
  return out;
}

TwistFunction TwistFunction::shifted(int h) const {
  std::map<int, int> s;
  for (auto& [n, v] : support_) s[n + h] = v;
  return TwistFunction(std::move(s));
}

TwistFunction TwistFunction::plus(const TwistFunction& g) const {
  std::map<int, int> s = support_;
  for (auto& [n, v] : g.support_) s[n] += v;
  return TwistFunction(std::move(s));
}

TwistFunction TwistFunction::minus(const TwistFunction& g) const {
  std::map<int, int> s = support_;
  for (auto& [n, v] : g.support_) {
    s[n] -= v;
    if (s[n] < 0) throw PreconditionError("twist function difference went negative");
  }
  return TwistFunction(std::move(s));
}

std::string TwistFunction::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto& [n, v] : support_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(n) + ":" + std::to_string(v);
  }
  return out + "}";
}

SharpVerdict sharp_compare(const TwistFunction& f, const TwistFunction& g) {
  if (f.total() != g.total())
    throw PreconditionError("sharp_compare requires equal totals");
  bool f_ge = true, g_ge = true;
  if (!f.is_zero() || !g.is_zero()) {
    int lo = std::min(f.is_zero() ? g.min_degree() : f.min_degree(),
                      g.is_zero() ? f.min_degree() : g.min_degree());
    int hi = std::max(f.is_zero() ? g.max_degree() : f.max_degree(),
                      g.is_zero() ? f.max_degree() : g.max_degree());
    for (int n = lo; n <= hi; ++n) {
      int fs = f.sharp(n), gs = g.sharp(n);
      if (fs < gs) f_ge = false;
      if (gs < fs) g_ge = false;
    }
  }
  // Cross-check against the sorted degree sequences: f# >= g# iff a_i <= b_i.
  std::vector<int> as = f.degree_sequence(), bs = g.degree_sequence();
  bool f_ge_seq = true, g_ge_seq = true;
  for (size_t i = 0; i < as.size(); ++i) {
    if (as[i] > bs[i]) f_ge_seq = false;
    if (bs[i] > as[i]) g_ge_seq = false;
  }
  if (f_ge != f_ge_seq || g_ge != g_ge_seq)
    throw InternalError("sharp_compare characterizations disagree");
  if (f_ge && g_ge) return SharpVerdict::equal;
  if (f_ge) return SharpVerdict::f_dominates;
  if (g_ge) return SharpVerdict::g_dominates;
  return SharpVerdict::incomparable;
}

std::string to_string(SharpVerdict v) {
  switch (v) {
    case SharpVerdict::f_dominates: return "f_dominates";
    case SharpVerdict::g_dominates: return "g_dominates";
    case SharpVerdict::equal: return "equal";
    default: return "incomparable";
  }
}

}  // namespace liaison
