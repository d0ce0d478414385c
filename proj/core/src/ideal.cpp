#include "liaison/ideal.hpp"

#include <algorithm>

namespace liaison {

namespace {

ModElem poly_to_elem(const Polynomial& p) {
  std::vector<ModTerm> terms;
  for (const auto& t : p.terms()) terms.push_back(ModTerm{0, t.mono, t.coeff});
  return mod_normalize(p.ring().field(), ModuleOrder(), std::move(terms));
}

Polynomial elem_to_poly(const PolyRing& r, const ModElem& e) {
  std::vector<Term> terms;
  for (const auto& t : e.terms) terms.push_back(Term{t.mono, t.coeff});
  return Polynomial(r, std::move(terms));
}

}  // namespace

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw PreconditionError("ideal generator is not homogeneous: " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->gb) return *cache_->gb;
  }
  std::vector<ModElem> elems;
  elems.reserve(gens_.size());
  for (const auto& g : gens_) elems.push_back(poly_to_elem(g));
  ModuleGB gb = ModuleGB::compute(ring_, std::move(elems), ModuleOrder());
  auto out = std::make_shared<std::vector<Polynomial>>();
  for (const auto& e : gb.basis()) out->push_back(elem_to_poly(ring_, e));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->gb) cache_->gb = std::move(out);
  return *cache_->gb;
}

bool Ideal::is_unit_ideal() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

Polynomial normal_form(const Polynomial& f, const Ideal& i) {
  require_same_ring(f.ring(), i.ring());
  const auto& gb = i.groebner_basis();
  const auto& F = f.ring().field();
  Polynomial rem = Polynomial::zero(f.ring());
  Polynomial h = f;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : gb) {
      if (!mono_divides(g.leading_monomial(), h.leading_monomial())) continue;
      Monomial q = mono_div(h.leading_monomial(), g.leading_monomial());
      Coeff c = F.neg(F.div(h.leading_coeff(), g.leading_coeff()));
      h = poly_add(h, poly_mul_term(g, q, c));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem = poly_add(rem, Polynomial::monomial_term(f.ring(), h.leading_monomial(), h.leading_coeff()));
      h = Polynomial::from_sorted(f.ring(), std::vector<Term>(h.terms().begin() + 1, h.terms().end()));
    }
  }
  return rem;
}

bool ideal_contains(const Ideal& i, const Polynomial& f) { return normal_form(f, i).is_zero(); }

bool ideal_contains_ideal(const Ideal& i, const Ideal& j) {
  for (const auto& g : j.generators())
    if (!ideal_contains(i, g)) return false;
  return true;
}

bool ideal_equal(const Ideal& i, const Ideal& j) {
  return i.groebner_basis() == j.groebner_basis();
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring());
  std::vector<Polynomial> gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring());
  const PolyRing& r = i.ring();
  // Syzygies of the two-row matrix [1 g1..ga 0..0 ; 1 0..0 h1..hb]: the first
  // coordinate of each syzygy lands in I cap J, and those generate it.
  const auto& gi = i.generators();
  const auto& gj = j.generators();
  if (gi.empty() || gj.empty()) return Ideal::zero(r);
  std::vector<int> src_tw;
  src_tw.push_back(0);
  for (const auto& g : gi) src_tw.push_back(g.degree());
  for (const auto& g : gj) src_tw.push_back(g.degree());
  GradedMatrix m(r, GradedFreeModule(src_tw), GradedFreeModule(std::vector<int>{0, 0}));
  Polynomial one = Polynomial::constant(r, r.field().one());
  m.set(0, 0, one);
  m.set(1, 0, one);
  for (size_t k = 0; k < gi.size(); ++k) m.set(0, static_cast<int>(1 + k), gi[k]);
  for (size_t k = 0; k < gj.size(); ++k) m.set(1, static_cast<int>(1 + gi.size() + k), gj[k]);
  m.require_homogeneous("ideal_intersection");
  GradedMatrix syz = syzygies(m);
  std::vector<Polynomial> gens;
  for (int c = 0; c < syz.cols(); ++c)
    if (!syz.at(0, c).is_zero()) gens.push_back(poly_neg(syz.at(0, c)));
  return Ideal(r, std::move(gens));
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring());
  const PolyRing& r = i.ring();
  if (j.is_zero_ideal()) return Ideal::unit(r);
  bool first = true;
  Ideal acc = Ideal::unit(r);
  for (const auto& f : j.generators()) {
    // (i : f) = (i cap (f)) / f, division exact elementwise.
    Ideal pf(r, {f});
    Ideal meet = ideal_intersection(i, pf);
    std::vector<Polynomial> gens;
    for (const auto& g : meet.generators()) {
      auto q = poly_exact_divide(g, f);
      if (!q) throw InternalError("ideal_quotient: inexact division");
      gens.push_back(std::move(*q));
    }
    Ideal qf(r, std::move(gens));
    acc = first ? qf : ideal_intersection(acc, qf);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& i) {
  const PolyRing& r = i.ring();
  std::vector<Polynomial> vars;
  for (int k = 0; k < r.nvars(); ++k) vars.push_back(Polynomial::variable(r, k));
  Ideal irrelevant(r, vars);
  Ideal cur = i;
  for (;;) {
    Ideal next = ideal_quotient(cur, irrelevant);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
}

bool is_saturated(const Ideal& i) {
  return ideal_equal(i, saturate(i));
}

namespace {

// Krull dimension of S/M for the monomial ideal M generated by leads:
// the largest variable subset supporting no generator.
int staircase_affine_dim(int nvars, const std::vector<Monomial>& leads) {
  for (const auto& m : leads)
    if (m.is_one()) return -1;  // unit ideal: empty spectrum
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (int v = 0; v < nvars && inside; ++v)
        if (m.e[v] > 0 && !(mask & (1u << v))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace

int affine_dimension(const Ideal& i) {
  std::vector<Monomial> leads = initial_ideal_gens(i);
  int d = staircase_affine_dim(i.ring().nvars(), leads);
  if (d < 0) throw PreconditionError("dimension of the unit ideal");
  return d;
}

int codimension(const Ideal& i) {
  return i.ring().nvars() - affine_dimension(i);
}

int hilbert_function_quotient(const Ideal& i, int d) {
  if (d < 0) return 0;
  std::vector<Monomial> leads = initial_ideal_gens(i);
  int count = 0;
  for (const auto& m : monomials_of_degree(i.ring().nvars(), d)) {
    bool divisible = false;
    for (const auto& l : leads)
      if (mono_divides(l, m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
  }
  return count;
}

int hilbert_function_ideal(const Ideal& i, int d) {
  if (d < 0) return 0;
  int sd = static_cast<int>(monomials_of_degree(i.ring().nvars(), d).size());
  return sd - hilbert_function_quotient(i, d);
}

bool is_regular_sequence(const std::vector<Polynomial>& fs) {
  if (fs.empty()) return true;
  const PolyRing& r = fs.front().ring();
  for (const auto& f : fs) {
    if (f.is_zero() || f.is_constant()) return false;
    if (!f.is_homogeneous()) return false;
  }
  Ideal i(r, fs);
  if (i.is_unit_ideal()) return false;
  return codimension(i) == static_cast<int>(fs.size());
}

std::vector<Monomial> initial_ideal_gens(const Ideal& i) {
  std::vector<Monomial> leads;
  for (const auto& g : i.groebner_basis()) leads.push_back(g.leading_monomial());
  return leads;
}

std::vector<Polynomial> minimal_ideal_generators(const Ideal& i) {
  std::vector<Polynomial> gens = i.generators();
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  // Greedy prune: drop any generator lying in the ideal of the others.
  for (size_t k = 0; k < gens.size();) {
    std::vector<Polynomial> others;
    for (size_t t = 0; t < gens.size(); ++t)
      if (t != k) others.push_back(gens[t]);
    Ideal rest(i.ring(), others);
    if (ideal_contains(rest, gens[k])) {
      gens.erase(gens.begin() + k);
    } else {
      ++k;
    }
  }
  return gens;
}

}  // namespace liaison
