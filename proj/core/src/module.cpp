#include "liaison/module.hpp"

#include <algorithm>
#include <map>

namespace liaison {

GradedModule::GradedModule(GradedMatrix rels) : rels_(std::move(rels)) {
  rels_.require_homogeneous("GradedModule");
}

GradedModule GradedModule::free_module(const PolyRing& r, GradedFreeModule gens) {
  return GradedModule(GradedMatrix(r, GradedFreeModule(std::vector<int>{}), std::move(gens)));
}

GradedModule GradedModule::zero(const PolyRing& r) {
  return free_module(r, GradedFreeModule(std::vector<int>{}));
}

GradedModule GradedModule::from_ideal(const Ideal& i) {
  const PolyRing& r = i.ring();
  std::vector<Polynomial> gens = minimal_ideal_generators(i);
  if (gens.empty()) return zero(r);
  std::vector<int> tw;
  for (const auto& g : gens) tw.push_back(g.degree());
  GradedMatrix row(r, GradedFreeModule(tw), GradedFreeModule(std::vector<int>{0}));
  for (size_t k = 0; k < gens.size(); ++k) row.set(0, static_cast<int>(k), gens[k]);
  return GradedModule(syzygies(row));
}

GradedModule GradedModule::quotient_ring(const Ideal& i) {
  const PolyRing& r = i.ring();
  std::vector<Polynomial> gens = minimal_ideal_generators(i);
  std::vector<int> tw;
  for (const auto& g : gens) tw.push_back(g.degree());
  GradedMatrix row(r, GradedFreeModule(tw), GradedFreeModule(std::vector<int>{0}));
  for (size_t k = 0; k < gens.size(); ++k) row.set(0, static_cast<int>(k), gens[k]);
  return GradedModule(std::move(row));
}

GradedModule minimal_presentation(const GradedModule& m) {
  const PolyRing& ring = m.ring();
  const auto& F = ring.field();
  std::vector<int> gen_tw = m.gens().twists();
  std::vector<int> rel_tw = m.rels().source().twists();
  std::vector<std::vector<Polynomial>> a;  // rows = generators
  for (int i = 0; i < m.rels().rows(); ++i) a.push_back(m.rels().row(i));

  // Cancel unit entries, lowest (row, column) pivot first.
  for (;;) {
    int pi = -1, pj = -1;
    for (size_t i = 0; i < a.size() && pi < 0; ++i)
      for (size_t j = 0; j < rel_tw.size(); ++j) {
        const Polynomial& p = a[i][j];
        if (!p.is_zero() && p.degree() == 0) {
          pi = static_cast<int>(i);
          pj = static_cast<int>(j);
          break;
        }
      }
    if (pi < 0) break;
    Coeff u = a[pi][pj].leading_coeff();
    // Schur update: a'[i][j] = a[i][j] - a[i][pj] * a[pi][j] / u
    for (size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == pi || a[i][pj].is_zero()) continue;
      Polynomial f = poly_scale(a[i][pj], F.neg(F.inv(u)));
      for (size_t j = 0; j < rel_tw.size(); ++j) {
        if (static_cast<int>(j) == pj) continue;
        a[i][j] = poly_add(a[i][j], poly_mul(f, a[pi][j]));
      }
    }
    a.erase(a.begin() + pi);
    gen_tw.erase(gen_tw.begin() + pi);
    for (auto& row : a) row.erase(row.begin() + pj);
    rel_tw.erase(rel_tw.begin() + pj);
  }

  // Drop zero columns.
  std::vector<int> keep;
  for (size_t j = 0; j < rel_tw.size(); ++j) {
    bool zero = true;
    for (size_t i = 0; i < a.size() && zero; ++i)
      if (!a[i][j].is_zero()) zero = false;
    if (!zero) keep.push_back(static_cast<int>(j));
  }
  std::vector<int> kept_tw;
  for (int j : keep) kept_tw.push_back(rel_tw[j]);
  GradedMatrix out(ring, GradedFreeModule(kept_tw), GradedFreeModule(gen_tw));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < keep.size(); ++k)
      out.set(static_cast<int>(i), static_cast<int>(k), a[i][keep[k]]);
  out.require_homogeneous("minimal_presentation");
  return GradedModule(std::move(out));
}

GradedMatrix prune_to_minimal_generators(const GradedMatrix& columns) {
  const PolyRing& ring = columns.ring();
  std::vector<int> kept(columns.cols());
  for (size_t k = 0; k < kept.size(); ++k) kept[k] = static_cast<int>(k);
  std::sort(kept.begin(), kept.end(), [&](int x, int y) {
    int dx = columns.source().twist(x), dy = columns.source().twist(y);
    if (dx != dy) return dx < dy;
    return x < y;
  });
  // Greedy prune, highest degree first so low-degree generators survive.
  for (int pass = static_cast<int>(kept.size()) - 1; pass >= 0; --pass) {
    std::vector<ModElem> others;
    for (size_t t = 0; t < kept.size(); ++t)
      if (static_cast<int>(t) != pass) others.push_back(column_to_elem(columns, kept[t]));
    if (others.empty()) break;
    ModuleGB gb = ModuleGB::compute(ring, std::move(others), ModuleOrder());
    if (gb.reduces_to_zero(column_to_elem(columns, kept[pass]))) kept.erase(kept.begin() + pass);
  }
  std::sort(kept.begin(), kept.end());
  return columns.select_columns(kept);
}

bool module_is_zero(const GradedModule& m) {
  return minimal_presentation(m).gens().rank() == 0;
}

TwistFunction module_minimal_generators(const GradedModule& m) {
  return minimal_presentation(m).gens().twist_function();
}

DualModule hom_dual(const GradedModule& m) {
  GradedMatrix kappa = syzygies(m.rels().dual(0));
  GradedMatrix rels = syzygies(kappa);
  return DualModule{GradedModule(std::move(rels)), std::move(kappa)};
}

GradedModule dual_module(const GradedModule& m, int twist_h) {
  return hom_dual(m).mod.shifted(twist_h);
}

DoubleDualData double_dual(const GradedModule& m) {
  DualModule d1 = hom_dual(m);
  DualModule d2 = hom_dual(d1.mod);
  // eval sends generator e_i to the functional "evaluate at e_i", whose
  // coordinates along d1's generators form the i-th row of d1.embed.
  GradedMatrix eval = lift_through(d2.embed, d1.embed.dual(0));
  return DoubleDualData{std::move(d2.mod), std::move(eval)};
}

bool cokernel_is_zero(const GradedMatrix& m) {
  const auto& F = m.ring().field();
  // coker = 0 iff coker (x) k = 0: per generator degree, the constant entry
  // block must have full row rank (graded Nakayama).
  std::map<int, std::vector<int>> rows_by_twist;
  for (int i = 0; i < m.rows(); ++i) rows_by_twist[m.target().twist(i)].push_back(i);
  for (auto& [a, rows] : rows_by_twist) {
    std::vector<int> cols;
    for (int j = 0; j < m.cols(); ++j)
      if (m.source().twist(j) == a) cols.push_back(j);
    DenseMatrix block(F, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) {
        const Polynomial& p = m.at(rows[i], cols[j]);
        if (!p.is_zero() && p.degree() == 0)
          block.at(static_cast<int>(i), static_cast<int>(j)) = p.leading_coeff();
      }
    if (block.rank() < static_cast<int>(rows.size())) return false;
  }
  return true;
}

std::vector<std::pair<int, Monomial>> free_basis_in_degree(const PolyRing& r,
                                                           const GradedFreeModule& m, int d) {
  std::vector<std::pair<int, Monomial>> basis;
  for (int i = 0; i < m.rank(); ++i)
    for (auto& mo : monomials_of_degree(r.nvars(), d - m.twist(i))) basis.emplace_back(i, mo);
  return basis;
}

std::vector<Coeff> element_coords(const PolyRing& r,
                                  const std::vector<std::pair<int, Monomial>>& basis,
                                  const std::vector<Polynomial>& elem) {
  const auto& F = r.field();
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (size_t k = 0; k < basis.size(); ++k)
    index[{basis[k].first, basis[k].second.e}] = static_cast<int>(k);
  std::vector<Coeff> out(basis.size(), F.zero());
  for (size_t i = 0; i < elem.size(); ++i)
    for (const auto& t : elem[i].terms()) {
      auto it = index.find({static_cast<int>(i), t.mono.e});
      if (it == index.end()) throw InternalError("element_coords: element leaves the expected degree");
      out[it->second] = F.add(out[it->second], t.coeff);
    }
  return out;
}

ModulePieces::ModulePieces(const GradedModule& m)
    : m_(m), gb_(ModuleGB::compute(m.ring(), columns_to_elems(m.rels()), ModuleOrder())) {}

std::vector<std::pair<int, Monomial>> ModulePieces::basis(int d) const {
  std::vector<std::pair<int, Monomial>> out;
  for (int i = 0; i < m_.gens().rank(); ++i) {
    for (auto& mo : monomials_of_degree(m_.ring().nvars(), d - m_.gens().twist(i))) {
      bool standard = true;
      for (const auto& g : gb_.basis()) {
        const ModTerm& lt = g.lead();
        if (lt.pos == i && mono_divides(lt.mono, mo)) {
          standard = false;
          break;
        }
      }
      if (standard) out.emplace_back(i, mo);
    }
  }
  return out;
}

std::vector<Coeff> ModulePieces::coords(const std::vector<Polynomial>& elem_in_gens, int d) const {
  const auto& F = m_.ring().field();
  std::vector<ModTerm> terms;
  for (size_t i = 0; i < elem_in_gens.size(); ++i)
    for (const auto& t : elem_in_gens[i].terms())
      terms.push_back(ModTerm{static_cast<int>(i), t.mono, t.coeff});
  ModElem e = mod_normalize(F, gb_.order(), std::move(terms));
  ModElem nf = gb_.normal_form(e);
  auto b = basis(d);
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (size_t k = 0; k < b.size(); ++k) index[{b[k].first, b[k].second.e}] = static_cast<int>(k);
  std::vector<Coeff> out(b.size(), F.zero());
  for (const auto& t : nf.terms) {
    auto it = index.find({t.pos, t.mono.e});
    if (it == index.end()) throw InternalError("ModulePieces::coords: nonstandard term in normal form");
    out[it->second] = F.add(out[it->second], t.coeff);
  }
  return out;
}

std::vector<Polynomial> ModulePieces::representative(int d, int k) const {
  auto b = basis(d);
  std::vector<Polynomial> out(m_.gens().rank(), Polynomial::zero(m_.ring()));
  out[b[k].first] = Polynomial::monomial_term(m_.ring(), b[k].second, m_.ring().field().one());
  return out;
}

std::vector<GradedMatrix> hom_space_degree_zero(const GradedModule& m, const GradedModule& n) {
  require_same_ring(m.ring(), n.ring());
  const PolyRing& ring = m.ring();
  const auto& F = ring.field();

  // Unknowns: coordinates of the image of each generator of M in F0(N).
  std::vector<std::vector<std::pair<int, Monomial>>> img_basis;
  std::vector<int> offset;
  int total = 0;
  for (int i = 0; i < m.gens().rank(); ++i) {
    auto b = free_basis_in_degree(ring, n.gens(), m.gens().twist(i));
    offset.push_back(total);
    total += static_cast<int>(b.size());
    img_basis.push_back(std::move(b));
  }

  // Constraints: each relation of M must map into the relation image of N.
  ModulePieces npieces(n);
  std::vector<std::vector<Coeff>> eq_rows;
  for (int rc = 0; rc < m.rels().cols(); ++rc) {
    int b = m.rels().source().twist(rc);
    int pdim = npieces.dim(b);
    if (pdim == 0) continue;
    std::vector<std::vector<Coeff>> contrib(total);
    for (int i = 0; i < m.gens().rank(); ++i) {
      const Polynomial& ri = m.rels().at(i, rc);
      if (ri.is_zero()) continue;
      for (size_t k = 0; k < img_basis[i].size(); ++k) {
        auto [comp, mu] = img_basis[i][k];
        std::vector<Polynomial> vec(n.gens().rank(), Polynomial::zero(ring));
        vec[comp] = poly_mul_term(ri, mu, F.one());
        auto red = npieces.coords(vec, b);
        auto& slot = contrib[offset[i] + static_cast<int>(k)];
        if (slot.empty()) slot.assign(pdim, F.zero());
        for (int c = 0; c < pdim; ++c) slot[c] = F.add(slot[c], red[c]);
      }
    }
    for (int rr = 0; rr < pdim; ++rr) {
      std::vector<Coeff> eq(total, F.zero());
      for (int u = 0; u < total; ++u)
        if (!contrib[u].empty()) eq[u] = contrib[u][rr];
      eq_rows.push_back(std::move(eq));
    }
  }

  DenseMatrix sys(F, static_cast<int>(eq_rows.size()), total);
  for (size_t i = 0; i < eq_rows.size(); ++i)
    for (int j = 0; j < total; ++j) sys.at(static_cast<int>(i), j) = eq_rows[i][j];
  auto kernel = sys.kernel_basis();

  std::vector<GradedMatrix> out;
  for (const auto& v : kernel) {
    GradedMatrix phi(ring, m.gens(), n.gens());
    for (int i = 0; i < m.gens().rank(); ++i) {
      std::vector<std::vector<Term>> per_comp(n.gens().rank());
      for (size_t k = 0; k < img_basis[i].size(); ++k) {
        const Coeff& c = v[offset[i] + static_cast<int>(k)];
        if (F.is_zero(c)) continue;
        per_comp[img_basis[i][k].first].push_back(Term{img_basis[i][k].second, c});
      }
      for (int g = 0; g < n.gens().rank(); ++g)
        if (!per_comp[g].empty()) phi.set(g, i, Polynomial(ring, std::move(per_comp[g])));
    }
    phi.require_homogeneous("hom_space_degree_zero");
    out.push_back(std::move(phi));
  }
  return out;
}

std::optional<SplitStep> split_free_summand(const GradedModule& m_in) {
  GradedModule m = minimal_presentation(m_in);
  const PolyRing& ring = m.ring();
  const auto& F = ring.field();
  if (m.gens().rank() == 0) return std::nullopt;

  std::vector<int> degrees = m.gens().twists();
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  ModulePieces pieces(m);
  for (int a : degrees) {
    GradedModule line = GradedModule::free_module(ring, GradedFreeModule(std::vector<int>{a}));
    auto homs = hom_space_degree_zero(m, line);
    if (homs.empty()) continue;
    int sdim = pieces.dim(a);
    for (const auto& phi : homs) {
      for (int l = 0; l < sdim; ++l) {
        // Pairing phi(s) lands in S_0 = k; a nonzero value certifies a split.
        std::vector<Polynomial> rep = pieces.representative(a, l);
        Polynomial pairing = Polynomial::zero(ring);
        for (int comp = 0; comp < m.gens().rank(); ++comp)
          pairing = poly_add(pairing, poly_mul(phi.at(0, comp), rep[comp]));
        if (pairing.is_zero()) continue;
        GradedMatrix sc(ring, GradedFreeModule(std::vector<int>{a}), m.gens());
        for (int g = 0; g < m.gens().rank(); ++g) sc.set(g, 0, rep[g]);
        GradedModule complement = minimal_presentation(GradedModule(matrix_hconcat(m.rels(), sc)));
        return SplitStep{a, std::move(complement)};
      }
    }
  }
  return std::nullopt;
}

FreeSplitResult split_all_free_summands(const GradedModule& m) {
  GradedModule core = minimal_presentation(m);
  std::vector<int> twists;
  for (;;) {
    auto step = split_free_summand(core);
    if (!step) break;
    twists.push_back(step->twist);
    core = std::move(step->complement);
  }
  std::sort(twists.begin(), twists.end());
  return FreeSplitResult{std::move(core), std::move(twists)};
}

}  // namespace liaison
