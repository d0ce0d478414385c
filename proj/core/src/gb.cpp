#include "liaison/gb.hpp"

#include <algorithm>
#include <set>

namespace liaison {

ModElem mod_normalize(const CoefficientField& F, const ModuleOrder& ord, std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const ModTerm& a, const ModTerm& b) { return ord.cmp(a, b) > 0; });
  ModElem out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().pos == t.pos && out.terms.back().mono == t.mono) {
      out.terms.back().coeff = F.add(out.terms.back().coeff, t.coeff);
      if (F.is_zero(out.terms.back().coeff)) out.terms.pop_back();
    } else if (!F.is_zero(t.coeff)) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

ModElem mod_add(const CoefficientField& F, const ModuleOrder& ord, const ModElem& a, const ModElem& b) {
  ModElem out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = ord.cmp(a.terms[i], b.terms[j]);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Coeff s = F.add(a.terms[i].coeff, b.terms[j].coeff);
      if (!F.is_zero(s)) {
        ModTerm t = a.terms[i];
        t.coeff = std::move(s);
        out.terms.push_back(std::move(t));
      }
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

ModElem mod_scale(const CoefficientField& F, const ModElem& a, const Coeff& c) {
  if (F.is_zero(c)) return {};
  ModElem out = a;
  for (auto& t : out.terms) t.coeff = F.mul(t.coeff, c);
  return out;
}

ModElem mod_mul_term(const CoefficientField& F, const ModElem& a, const Monomial& m, const Coeff& c) {
  if (F.is_zero(c)) return {};
  ModElem out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms)
    out.terms.push_back(ModTerm{t.pos, mono_mul(t.mono, m), F.mul(t.coeff, c)});
  return out;  // term order is preserved under multiplication by a monomial
}

ModElem mod_mul_poly(const CoefficientField& F, const ModuleOrder& ord, const ModElem& a,
                     const Polynomial& p) {
  ModElem acc;
  for (const auto& t : p.terms()) acc = mod_add(F, ord, acc, mod_mul_term(F, a, t.mono, t.coeff));
  return acc;
}

ModElem column_to_elem(const GradedMatrix& m, int j) {
  std::vector<ModTerm> terms;
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& t : m.at(i, j).terms()) terms.push_back(ModTerm{i, t.mono, t.coeff});
  return mod_normalize(m.ring().field(), ModuleOrder(), std::move(terms));
}

std::vector<ModElem> columns_to_elems(const GradedMatrix& m) {
  std::vector<ModElem> out;
  out.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) out.push_back(column_to_elem(m, j));
  return out;
}

int elem_degree(const ModElem& e, const std::vector<int>& twists) {
  if (e.is_zero()) throw PreconditionError("degree of zero module element");
  int d = e.terms.front().mono.degree() + twists[e.terms.front().pos];
  for (const auto& t : e.terms)
    if (t.mono.degree() + twists[t.pos] != d)
      throw PreconditionError("module element is not homogeneous");
  return d;
}

ModuleGB ModuleGB::compute(const PolyRing& ring, std::vector<ModElem> gens, ModuleOrder ord,
                           bool track) {
  const auto& F = ring.field();
  ModuleGB gb(ring, ord);
  gb.tracked_ = track;
  gb.ninputs_ = gens.size();

  // Seed the basis with the nonzero inputs, remembering input coordinates.
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    gb.basis_.push_back(gens[i]);
    if (track) {
      ModElem c;
      c.terms.push_back(ModTerm{static_cast<int>(i), Monomial(ring.nvars()), F.one()});
      gb.coords_.push_back(std::move(c));
    }
  }

  struct Pair {
    int i, j;
    int deg;  // degree of the lcm of the leading monomials
  };
  auto lead_lcm_deg = [&](int i, int j) {
    return mono_lcm(gb.basis_[i].lead().mono, gb.basis_[j].lead().mono).degree();
  };
  std::vector<Pair> pairs;
  std::set<std::pair<int, int>> done;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i)
      if (gb.basis_[i].lead().pos == gb.basis_[j].lead().pos)
        pairs.push_back(Pair{i, j, lead_lcm_deg(i, j)});
  };
  for (int j = 0; j < static_cast<int>(gb.basis_.size()); ++j) push_pairs_for(j);

  bool ideal_case = true;  // product criterion is only valid for ideals
  {
    std::set<int> positions;
    for (const auto& g : gb.basis_)
      for (const auto& t : g.terms) positions.insert(t.pos);
    ideal_case = positions.size() <= 1;
  }

  while (!pairs.empty()) {
    // Normal selection: smallest lcm degree first.
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].deg < pairs[best].deg ||
          (pairs[k].deg == pairs[best].deg &&
           std::make_pair(pairs[k].i, pairs[k].j) < std::make_pair(pairs[best].i, pairs[best].j)))
        best = k;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);
    done.insert({pr.i, pr.j});

    const ModElem& gi = gb.basis_[pr.i];
    const ModElem& gj = gb.basis_[pr.j];
    const Monomial& mi = gi.lead().mono;
    const Monomial& mj = gj.lead().mono;

    if (ideal_case && mono_coprime(mi, mj)) continue;  // Buchberger's first criterion

    // Chain criterion: some k with lead pos equal, lm_k | lcm, both pairs done.
    Monomial L = mono_lcm(mi, mj);
    bool skip = false;
    for (int k = 0; k < static_cast<int>(gb.basis_.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (gb.basis_[k].lead().pos != gi.lead().pos) continue;
      if (!mono_divides(gb.basis_[k].lead().mono, L)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second})) skip = true;
    }
    if (skip) continue;

    Coeff ci = F.inv(gi.lead().coeff);
    Coeff cj = F.neg(F.inv(gj.lead().coeff));
    ModElem s = mod_add(F, ord, mod_mul_term(F, gi, mono_div(L, mi), ci),
                        mod_mul_term(F, gj, mono_div(L, mj), cj));
    ModElem coord;
    if (track)
      coord = mod_add(F, ord, mod_mul_term(F, gb.coords_[pr.i], mono_div(L, mi), ci),
                      mod_mul_term(F, gb.coords_[pr.j], mono_div(L, mj), cj));
    ModElem* coord_ptr = track ? &coord : nullptr;
    ModElem nf = gb.reduce(s, coord_ptr);
    if (!nf.is_zero()) {
      gb.basis_.push_back(std::move(nf));
      if (track) gb.coords_.push_back(std::move(coord));
      push_pairs_for(static_cast<int>(gb.basis_.size()) - 1);
    }
  }

  // Reduce to the unique reduced basis: minimal leads, monic, tails reduced.
  std::vector<char> keep(gb.basis_.size(), 1);
  for (size_t i = 0; i < gb.basis_.size(); ++i)
    for (size_t j = 0; j < gb.basis_.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (gb.basis_[i].lead().pos == gb.basis_[j].lead().pos &&
          mono_divides(gb.basis_[j].lead().mono, gb.basis_[i].lead().mono)) {
        // j's lead divides i's: i is redundant (break ties toward lower index)
        if (gb.basis_[i].lead().mono == gb.basis_[j].lead().mono && i < j) continue;
        keep[i] = 0;
      }
    }
  std::vector<ModElem> minimal, minimal_coords;
  for (size_t i = 0; i < gb.basis_.size(); ++i)
    if (keep[i]) {
      minimal.push_back(gb.basis_[i]);
      if (track) minimal_coords.push_back(gb.coords_[i]);
    }
  gb.basis_ = std::move(minimal);
  gb.coords_ = std::move(minimal_coords);

  for (size_t i = 0; i < gb.basis_.size(); ++i) {
    // Tail-reduce element i against the others.
    ModElem self = gb.basis_[i];
    ModElem self_coord = track ? gb.coords_[i] : ModElem{};
    std::vector<ModElem> others_basis, others_coords;
    ModuleGB tmp(ring, ord);
    tmp.tracked_ = track;
    tmp.ninputs_ = gb.ninputs_;
    for (size_t j = 0; j < gb.basis_.size(); ++j)
      if (j != i) {
        tmp.basis_.push_back(gb.basis_[j]);
        if (track) tmp.coords_.push_back(gb.coords_[j]);
      }
    ModElem* cp = track ? &self_coord : nullptr;
    ModElem red = tmp.reduce(self, cp);
    if (red.is_zero()) throw InternalError("reduced GB element vanished during interreduction");
    Coeff inv = F.inv(red.lead().coeff);
    gb.basis_[i] = mod_scale(F, red, inv);
    if (track) gb.coords_[i] = mod_scale(F, self_coord, inv);
  }

  // Canonical output order: descending leading terms.
  std::vector<size_t> perm(gb.basis_.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    return ord.cmp(gb.basis_[a].lead(), gb.basis_[b].lead()) > 0;
  });
  std::vector<ModElem> sorted_basis, sorted_coords;
  for (size_t i : perm) {
    sorted_basis.push_back(std::move(gb.basis_[i]));
    if (track) sorted_coords.push_back(std::move(gb.coords_[i]));
  }
  gb.basis_ = std::move(sorted_basis);
  gb.coords_ = std::move(sorted_coords);
  return gb;
}

ModElem ModuleGB::reduce(const ModElem& e, ModElem* coord_out) const {
  const auto& F = ring_.field();
  ModElem rem;
  ModElem h = e;
  while (!h.is_zero()) {
    const ModTerm& t = h.lead();
    bool reduced = false;
    for (size_t k = 0; k < basis_.size(); ++k) {
      const ModTerm& lt = basis_[k].lead();
      if (lt.pos != t.pos || !mono_divides(lt.mono, t.mono)) continue;
      Monomial q = mono_div(t.mono, lt.mono);
      Coeff c = F.neg(F.div(t.coeff, lt.coeff));
      h = mod_add(F, ord_, h, mod_mul_term(F, basis_[k], q, c));
      if (coord_out) *coord_out = mod_add(F, ord_, *coord_out, mod_mul_term(F, coords_[k], q, c));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.terms.push_back(t);
      h.terms.erase(h.terms.begin());
    }
  }
  return rem;
}

ModElem ModuleGB::normal_form(const ModElem& e) const { return reduce(e, nullptr); }

bool ModuleGB::reduces_to_zero(const ModElem& e) const { return normal_form(e).is_zero(); }

ModuleGB::TrackedNF ModuleGB::normal_form_tracked(const ModElem& e) const {
  if (!tracked_) throw InternalError("normal_form_tracked on an untracked basis");
  const auto& F = ring_.field();
  ModElem coord;
  ModElem rem = reduce(e, &coord);
  // coord expresses (rem - e) over inputs; witness is its negation per input.
  std::vector<Polynomial> witness(ninputs_, Polynomial::zero(ring_));
  for (const auto& t : coord.terms) {
    Polynomial add = Polynomial::monomial_term(ring_, t.mono, F.neg(t.coeff));
    witness[t.pos] = poly_add(witness[t.pos], add);
  }
  return TrackedNF{std::move(rem), std::move(witness)};
}

GradedMatrix syzygies(const GradedMatrix& m) {
  const PolyRing& ring = m.ring();
  const auto& F = ring.field();
  int t = m.rows();
  int s = m.cols();
  // Augment each column with a unit vector in the shadow block, then
  // eliminate the target block; survivors supported in the shadow block are
  // the syzygies.
  std::vector<ModElem> gens;
  ModuleOrder ord(t);
  for (int j = 0; j < s; ++j) {
    ModElem e = column_to_elem(m, j);
    e.terms.push_back(ModTerm{t + j, Monomial(ring.nvars()), F.one()});
    gens.push_back(mod_normalize(F, ord, std::move(e.terms)));
  }
  ModuleGB gb = ModuleGB::compute(ring, std::move(gens), ord);

  std::vector<ModElem> syz;
  for (const auto& g : gb.basis()) {
    bool pure = true;
    for (const auto& term : g.terms)
      if (term.pos < t) {
        pure = false;
        break;
      }
    if (pure) syz.push_back(g);
  }
  // Wrap as a graded matrix into source(m).
  std::vector<int> src_tw = m.source().twists();
  std::vector<int> syz_tw;
  for (const auto& g : syz) {
    ModElem shifted;
    for (const auto& term : g.terms) shifted.terms.push_back(ModTerm{term.pos - t, term.mono, term.coeff});
    syz_tw.push_back(elem_degree(shifted, src_tw));
  }
  GradedMatrix out(ring, GradedFreeModule(syz_tw), m.source());
  for (size_t j = 0; j < syz.size(); ++j)
    for (const auto& term : syz[j].terms) {
      int row = term.pos - t;
      out.set(row, static_cast<int>(j),
              poly_add(out.at(row, static_cast<int>(j)),
                       Polynomial::monomial_term(ring, term.mono, term.coeff)));
    }
  out.require_homogeneous("syzygies");
  return out;
}

GradedMatrix lift_through(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.target() != b.target()) throw PreconditionError("lift_through: target mismatch");
  const PolyRing& ring = a.ring();
  ModuleGB gb = ModuleGB::compute(ring, columns_to_elems(a), ModuleOrder(), /*track=*/true);
  GradedMatrix out(ring, b.source(), a.source());
  for (int j = 0; j < b.cols(); ++j) {
    auto nf = gb.normal_form_tracked(column_to_elem(b, j));
    if (!nf.remainder.is_zero())
      throw PreconditionError("lift_through: column " + std::to_string(j) + " is not in the image");
    for (int i = 0; i < a.cols(); ++i) out.set(i, j, nf.witness[i]);
  }
  out.require_homogeneous("lift_through");
  return out;
}

}  // namespace liaison
