#include "liaison/linkage.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace liaison {

CompleteIntersection::CompleteIntersection(std::vector<Polynomial> fs) : forms_(std::move(fs)) {
  if (forms_.empty()) throw PreconditionError("complete intersection needs at least one form");
  if (!is_regular_sequence(forms_))
    throw PreconditionError("forms do not make a regular sequence");
  if (static_cast<int>(forms_.size()) >= ring().nvars())
    throw PreconditionError("complete intersection must have codimension < number of variables");
  total_ = 0;
  for (const auto& f : forms_) {
    degrees_.push_back(f.degree());
    total_ += f.degree();
  }
}

LinkResult link(const Ideal& i, const CompleteIntersection& ci) {
  require_same_ring(i.ring(), ci.ring());
  Ideal cideal = ci.ideal();
  if (!ideal_contains_ideal(i, cideal))
    throw PreconditionError("link: the complete intersection is not contained in the ideal");
  Ideal residual = ideal_quotient(cideal, i);
  return LinkResult{residual, residual.is_unit_ideal()};
}

bool double_link_identity_check(const Ideal& i, const CompleteIntersection& ci) {
  LinkResult first = link(i, ci);
  if (first.empty_residual) return ideal_equal(saturate(i), ci.ideal());
  LinkResult second = link(first.ideal, ci);
  return ideal_equal(second.ideal, saturate(i));
}

ETypeData extract_e_type(const Ideal& i, int r) {
  const PolyRing& ring = i.ring();
  if (i.is_unit_ideal() || i.is_zero_ideal())
    throw PreconditionError("extract_e_type needs a proper nonzero ideal");
  if (codimension(i) < r)
    throw PreconditionError("extract_e_type: codimension below the requested level");
  Ideal sat = saturate(i);
  FreeComplex res = resolve_quotient(sat, ring.nvars() + 1);
  if (res.length() < r) throw InternalError("resolution shorter than the codimension");

  ETypeData out(ring);
  out.codim = r;
  out.twist_h = 0;
  out.ideal = sat;
  for (int k = 1; k <= r - 1; ++k) out.q.push_back(res.module(k));
  for (int k = 1; k <= r - 2; ++k) out.q_maps.push_back(res.differential(k));
  out.aug = res.differential(0);
  // E = image of the r-th differential, presented by the resolution's tail.
  GradedFreeModule egens = res.module(r);
  GradedMatrix rels = (res.length() > r)
                          ? res.differential(r)
                          : GradedMatrix::zero_map(ring, GradedFreeModule(std::vector<int>{}), egens);
  out.kernel = GradedModule(std::move(rels));
  out.e_map = res.differential(r - 1);
  if (out.kernel.gens().rank() == 0) throw InternalError("E-type kernel is zero");
  return out;
}

namespace {

// Twisting a whole E-type or N-type datum: data for I_X(h) shifted by +h is
// data for I_X.
ETypeData normalize_etype(const ETypeData& e) {
  if (e.twist_h == 0) return e;
  ETypeData out = e;
  int h = e.twist_h;
  out.kernel = e.kernel.shifted(h);
  out.e_map = e.e_map.shifted(h);
  for (auto& m : out.q) m = m.shifted(h);
  for (auto& d : out.q_maps) d = d.shifted(h);
  out.aug = e.aug.shifted(h);
  out.twist_h = 0;
  return out;
}

NTypeData normalize_ntype(const NTypeData& n) {
  if (n.twist_h == 0) return n;
  NTypeData out = n;
  int h = n.twist_h;
  out.middle = n.middle.shifted(h);
  out.psi = n.psi.shifted(h);
  for (auto& m : out.p) m = m.shifted(h);
  for (auto& d : out.p_maps) d = d.shifted(h);
  out.aug = n.aug.shifted(h);
  out.twist_h = 0;
  return out;
}

Ideal ideal_of_row(const PolyRing& ring, const GradedMatrix& row) {
  std::vector<Polynomial> gens;
  for (int j = 0; j < row.cols(); ++j)
    if (!row.at(0, j).is_zero()) gens.push_back(row.at(0, j));
  return Ideal(ring, std::move(gens));
}

// Lifts the Koszul complex of the intersection into the E-type complex.
// Components: alpha[i] : F_i -> (O, Q_1, ..., Q_{r-1}, gens(E)).
std::vector<GradedMatrix> lift_koszul_into_etype(const ETypeData& e, const FreeComplex& f) {
  const PolyRing& ring = f.ring();
  int r = e.codim;
  std::vector<GradedMatrix> alpha;
  alpha.push_back(GradedMatrix::identity(ring, f.module(0)));
  alpha.push_back(lift_through(e.aug, matrix_compose(alpha[0], f.differential(0))));
  for (int i = 2; i <= r - 1; ++i)
    alpha.push_back(lift_through(e.q_maps[i - 2], matrix_compose(alpha[i - 1], f.differential(i - 1))));
  alpha.push_back(lift_through(e.e_map, matrix_compose(alpha[r - 1], f.differential(r - 1))));
  return alpha;
}

}  // namespace

NTypeData e_to_n_transform(const ETypeData& e_in, const CompleteIntersection& ci) {
  ETypeData e = normalize_etype(e_in);
  const PolyRing& ring = e.aug.ring();
  int r = e.codim;
  if (ci.codim() != r) throw PreconditionError("e_to_n_transform: codimension mismatch");
  if (!ideal_contains_ideal(e.ideal, ci.ideal()))
    throw PreconditionError("e_to_n_transform: intersection not contained in the ideal");
  LinkResult lk = link(e.ideal, ci);
  if (lk.empty_residual)
    throw PreconditionError("e_to_n_transform: the scheme links to the empty scheme");

  FreeComplex f = koszul_complex(ci.forms());
  int d = ci.total_degree();
  std::vector<GradedMatrix> alpha = lift_koszul_into_etype(e, f);

  // N = E^v(-d) (+) F_{r-1}^v(-d); generators: kappa columns then wedge basis.
  DualModule dual = hom_dual(e.kernel);
  GradedMatrix kappa = dual.embed.shifted(d);  // F_kappa(+d) -> gens(E)^v(-d)
  GradedModule epart = dual.mod.shifted(d);
  GradedFreeModule fpart = f.module(r - 1).dual(-d);
  NTypeData out(ring);
  out.codim = r;
  out.twist_h = 0;
  out.middle = epart.direct_sum(GradedModule::free_module(ring, fpart));

  // Augmentation row: (alpha_r^v o kappa | -koszul^v).
  GradedMatrix aug_e = matrix_compose(alpha[r].dual(-d), kappa);
  GradedMatrix aug_f = matrix_neg(f.differential(r - 1).dual(-d));
  out.aug = matrix_hconcat(aug_e, aug_f);

  // psi : P_1 -> N.
  GradedMatrix psi_top = lift_through(kappa, e.e_map.dual(-d));
  GradedMatrix psi_bot = alpha[r - 1].dual(-d);
  if (r == 2) {
    out.psi = matrix_vconcat(psi_top, psi_bot);
    out.p.push_back(out.psi.source());
  } else {
    // P_1 = Q_{r-1}^v(-d) (+) F_{r-2}^v(-d).
    GradedMatrix zero_tl(ring, f.module(r - 2).dual(-d), psi_top.target());
    GradedMatrix top = matrix_hconcat(psi_top, zero_tl);
    GradedMatrix bot = matrix_hconcat(psi_bot, matrix_neg(f.differential(r - 2).dual(-d)));
    out.psi = matrix_vconcat(top, bot);
    out.p.push_back(out.psi.source());
    for (int j = 1; j <= r - 2; ++j) {
      // P_{j+1} -> P_j.
      GradedMatrix a_to_a = (j + 1 <= r - 2)
                                ? matrix_hconcat(e.q_maps[r - j - 2].dual(-d),
                                                 GradedMatrix::zero_map(
                                                     ring, f.module(r - j - 2).dual(-d),
                                                     e.q_maps[r - j - 2].dual(-d).target()))
                                : e.q_maps[r - j - 2].dual(-d);
      GradedMatrix a_to_b = alpha[r - j - 1].dual(-d);
      GradedMatrix bot_row =
          (j + 1 <= r - 2)
              ? matrix_hconcat(a_to_b, matrix_neg(f.differential(r - j - 2).dual(-d)))
              : a_to_b;
      GradedMatrix pm = matrix_vconcat(a_to_a, bot_row);
      out.p_maps.push_back(pm);
      out.p.push_back(pm.source());
    }
  }

  out.ideal = lk.ideal;
  if (!ideal_equal(ideal_of_row(ring, out.aug), out.ideal))
    throw InternalError("e_to_n_transform: assembled middle does not present the linked ideal");
  out.source_etype = std::make_shared<ETypeData>(e);
  out.source_ci = std::make_shared<CompleteIntersection>(ci);
  return out;
}

namespace {

// Koszul self-duality F_j = F_{r-j}^v(-d) with per-subset permutation signs.
GradedMatrix koszul_duality_component(const PolyRing& ring, const FreeComplex& f, int j, int d,
                                      bool flip) {
  int r = f.length();
  int n = r;
  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    subsets[__builtin_popcount(mask)].push_back(mask);
  GradedMatrix out(ring, f.module(j), f.module(r - j).dual(-d));
  const auto& F = ring.field();
  for (size_t col = 0; col < subsets[j].size(); ++col) {
    unsigned mask = subsets[j][col];
    unsigned comp = ((1u << n) - 1u) & ~mask;
    auto it = std::find(subsets[r - j].begin(), subsets[r - j].end(), comp);
    int row = static_cast<int>(it - subsets[r - j].begin());
    // Parity of inversions between the listed mask and its complement.
    int inv = 0;
    for (int a = 0; a < n; ++a)
      if (mask & (1u << a))
        for (int b = 0; b < a; ++b)
          if (comp & (1u << b)) ++inv;
    bool neg = (inv % 2 == 1) != flip;
    out.set(row, static_cast<int>(col),
            Polynomial::constant(ring, neg ? F.neg(F.one()) : F.one()));
  }
  return out;
}

// Checks d^G o alpha_{j} = alpha_{j-1} o d^F where the target at level 1 is
// the module N (equality modulo relations).
bool square_commutes_mod(const GradedMatrix& lhs, const GradedMatrix& rhs,
                         const ModuleGB* rels_gb) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
  const PolyRing& ring = lhs.ring();
  for (int c = 0; c < lhs.cols(); ++c) {
    std::vector<ModTerm> terms;
    for (int i = 0; i < lhs.rows(); ++i) {
      Polynomial diff = poly_sub(lhs.at(i, c), rhs.at(i, c));
      for (const auto& t : diff.terms()) terms.push_back(ModTerm{i, t.mono, t.coeff});
    }
    ModElem e = mod_normalize(ring.field(), ModuleOrder(), std::move(terms));
    if (e.is_zero()) continue;
    if (!rels_gb || !rels_gb->reduces_to_zero(e)) return false;
  }
  return true;
}

// The projection-based morphism of Koszul into the N-type complex that came
// out of e_to_n_transform: second-factor inclusions via Koszul self-duality,
// with pi^v at the deep end. Signs are resolved square by square.
std::optional<std::vector<GradedMatrix>> projection_morphism(const NTypeData& n,
                                                             const CompleteIntersection& ci,
                                                             const FreeComplex& f) {
  if (!n.source_etype || !n.source_ci) return std::nullopt;
  if (n.source_ci->forms().size() != ci.forms().size()) return std::nullopt;
  for (size_t k = 0; k < ci.forms().size(); ++k)
    if (!(n.source_ci->forms()[k] == ci.forms()[k])) return std::nullopt;

  const PolyRing& ring = f.ring();
  int r = n.codim;
  int d = ci.total_degree();
  ModuleGB rels_gb =
      ModuleGB::compute(ring, columns_to_elems(n.middle.rels()), ModuleOrder());

  std::vector<GradedMatrix> alpha;
  alpha.push_back(GradedMatrix::identity(ring, f.module(0)));
  // alpha_1 : F_1 -> N, landing in the wedge summand F_{r-1}^v(-d).
  int epart_rank = n.middle.gens().rank() - f.module(r - 1).rank();
  for (bool flip1 : {false, true}) {
    GradedMatrix iota = koszul_duality_component(ring, f, 1, d, flip1);
    GradedMatrix a1(ring, f.module(1), n.middle.gens());
    for (int i = 0; i < iota.rows(); ++i)
      for (int c = 0; c < iota.cols(); ++c) a1.set(epart_rank + i, c, iota.at(i, c));
    if (!square_commutes_mod(matrix_compose(n.aug, a1),
                             matrix_compose(alpha[0], f.differential(0)), nullptr))
      continue;
    std::vector<GradedMatrix> cand{alpha[0], a1};
    // Higher components: wedge duality into the second factors of the P's,
    // pi^v at the top. Resolve each sign by its commuting square.
    bool ok = true;
    for (int j = 2; j <= r && ok; ++j) {
      GradedMatrix rhs = matrix_compose(cand[j - 1], f.differential(j - 1));
      const GradedMatrix& dg = (j == 2) ? n.psi : n.p_maps[j - 3];
      bool found = false;
      if (j == r) {
        // alpha_r = +- pi^v(-d) into P_{r-1} = Q_1^v(-d).
        const GradedMatrix& pi = n.source_etype->aug;
        for (bool flip : {false, true}) {
          GradedMatrix cnd = pi.dual(-d);
          if (flip) cnd = matrix_neg(cnd);
          if (square_commutes_mod(matrix_compose(dg, cnd), rhs,
                                  j == 2 ? &rels_gb : nullptr)) {
            cand.push_back(std::move(cnd));
            found = true;
            break;
          }
        }
      } else {
        int fpart_rank = f.module(r - j).rank();
        int apart_rank = dg.source().rank() - fpart_rank;
        for (bool flip : {false, true}) {
          GradedMatrix iotaj = koszul_duality_component(ring, f, j, d, flip);
          GradedMatrix cnd(ring, f.module(j), dg.source());
          for (int i = 0; i < iotaj.rows(); ++i)
            for (int c = 0; c < iotaj.cols(); ++c) cnd.set(apart_rank + i, c, iotaj.at(i, c));
          if (square_commutes_mod(matrix_compose(dg, cnd), rhs,
                                  j == 2 ? &rels_gb : nullptr)) {
            cand.push_back(std::move(cnd));
            found = true;
            break;
          }
        }
      }
      ok = found;
    }
    if (ok) return cand;
  }
  return std::nullopt;
}

// Division-based lift of Koszul into the N-type complex.
std::vector<GradedMatrix> lift_koszul_into_ntype(const NTypeData& n, const FreeComplex& f) {
  const PolyRing& ring = f.ring();
  int r = n.codim;
  std::vector<GradedMatrix> alpha;
  alpha.push_back(GradedMatrix::identity(ring, f.module(0)));
  alpha.push_back(lift_through(n.aug, matrix_compose(alpha[0], f.differential(0))));
  if (r >= 2) {
    // Solve psi X = rhs modulo the relations of N.
    GradedMatrix rhs = matrix_compose(alpha[1], f.differential(1));
    GradedMatrix stacked = matrix_hconcat(n.psi, n.middle.rels());
    GradedMatrix full = lift_through(stacked, rhs);
    std::vector<int> top(n.psi.cols());
    for (size_t k = 0; k < top.size(); ++k) top[k] = static_cast<int>(k);
    alpha.push_back(full.select_rows(top));
  }
  for (int j = 3; j <= r; ++j)
    alpha.push_back(lift_through(n.p_maps[j - 3], matrix_compose(alpha[j - 1], f.differential(j - 1))));
  return alpha;
}

}  // namespace

ETypeData n_to_e_transform(const NTypeData& n_in, const CompleteIntersection& ci) {
  NTypeData n = normalize_ntype(n_in);
  const PolyRing& ring = n.aug.ring();
  int r = n.codim;
  if (ci.codim() != r) throw PreconditionError("n_to_e_transform: codimension mismatch");
  if (!ideal_contains_ideal(n.ideal, ci.ideal()))
    throw PreconditionError("n_to_e_transform: intersection not contained in the ideal");
  if (!verify_n_condition(n))
    throw PreconditionError("n_to_e_transform: input fails the N-type Ext conditions");
  LinkResult lk = link(n.ideal, ci);
  if (lk.empty_residual)
    throw PreconditionError("n_to_e_transform: the scheme links to the empty scheme");

  FreeComplex f = koszul_complex(ci.forms());
  int d = ci.total_degree();
  std::vector<GradedMatrix> alpha;
  if (auto proj = projection_morphism(n, ci, f)) {
    alpha = std::move(*proj);
  } else {
    alpha = lift_koszul_into_ntype(n, f);
  }

  // E_W = N^v(-d).
  DualModule dual = hom_dual(n.middle);
  GradedMatrix kappa = dual.embed.shifted(d);  // F_kappa(+d) -> gens(N)^v(-d)
  ETypeData out(ring);
  out.codim = r;
  out.twist_h = 0;
  out.kernel = dual.mod.shifted(d);
  if (out.kernel.gens().rank() == 0)
    throw InternalError("n_to_e_transform: dual middle module vanished");

  // e_map : E_W -> Q_{r-1} = P_1^v(-d) (+) F_1^v(-d).
  GradedMatrix top = matrix_compose(n.psi.dual(-d), kappa);
  GradedMatrix bot = matrix_compose(alpha[1].dual(-d), kappa);
  out.e_map = matrix_vconcat(top, bot);

  // Free tail Q_k = P_{r-k}^v(-d) (+) F_{r-k}... in descending cone order:
  // Q_k for k = r-1 .. 1; q list is stored ascending Q_1 .. Q_{r-1}.
  std::vector<GradedFreeModule> qs(r - 1, GradedFreeModule(std::vector<int>{}));
  for (int k = 1; k <= r - 1; ++k)
    qs[k - 1] = n.p[r - k - 1].dual(-d).direct_sum(f.module(r - k).dual(-d));
  out.q = qs;
  for (int k = r - 2; k >= 1; --k) {
    // Q_{k+1} -> Q_k: blocks [(p_map)^v 0-ish; alpha^v -koszul^v].
    const GradedMatrix& pm = n.p_maps[r - k - 2];  // P_{r-k-1} -> P_{r-k-2}... source P_{r-k-1}
    GradedMatrix a_to_a = pm.dual(-d);             // P_{r-k-1}^v... -> P_{r-k}^v? see below
    // Source Q_{k+1} = P_{r-k-1}^v (+) F_{r-k-1}^v, target Q_k = P_{r-k}^v (+) F_{r-k}^v.
    GradedMatrix a_to_b = alpha[r - k].dual(-d);
    GradedMatrix b_to_b = matrix_neg(f.differential(r - k - 1).dual(-d));
    GradedMatrix zero_bl = GradedMatrix::zero_map(ring, f.module(r - k - 1).dual(-d),
                                                  a_to_a.target());
    GradedMatrix toprow = matrix_hconcat(a_to_a, zero_bl);
    GradedMatrix botrow = matrix_hconcat(a_to_b, b_to_b);
    out.q_maps.push_back(matrix_vconcat(toprow, botrow));
  }
  std::reverse(out.q_maps.begin(), out.q_maps.end());

  // Augmentation Q_1 -> O: [alpha_r^v | -koszul^v].
  GradedMatrix aug_a = alpha[r].dual(-d);
  GradedMatrix aug_b = matrix_neg(f.differential(r - 1).dual(-d));
  out.aug = matrix_hconcat(aug_a, aug_b);

  out.ideal = lk.ideal;
  if (!ideal_equal(ideal_of_row(ring, out.aug), out.ideal))
    throw InternalError("n_to_e_transform: assembled tail does not present the linked ideal");
  return out;
}

bool verify_e_condition(const ETypeData& e) {
  GradedModule dual = hom_dual(e.kernel).mod;
  return ext_sheaves_vanish(dual, e.codim);
}

bool verify_n_condition(const NTypeData& n) {
  if (!is_reflexive(n.middle)) return false;
  if (!ext_sheaves_vanish(n.middle, n.codim)) return false;
  GradedModule dual = hom_dual(n.middle).mod;
  return check_h_star_vanishing(dual, n.codim);
}

namespace {

// Exactness through Hilbert series: the alternating sum over the sequence
// must equal the series of the twisted ideal.
bool sequence_exact_by_series(const PolyRing& ring, const HilbertSeries& mod_series,
                              const std::vector<GradedFreeModule>& frees, const Ideal& ideal,
                              int h, bool mod_is_leftmost) {
  HilbertSeries ideal_hs = hilbert_series_module(GradedModule::from_ideal(ideal));
  // The sequence 0 -> A_k -> ... -> A_1 -> I(h) -> 0 forces
  // sum (-1)^i HS(A_i) = HS(I(h)); HS(I(h))(t) has numerator shifted by -h.
  std::map<int, long long> acc;
  int sign = 1;
  if (mod_is_leftmost) {
    // module is the deepest term: sign depends on tail length parity
    sign = (frees.size() % 2 == 0) ? 1 : -1;
    for (auto& [a, c] : mod_series.numerator) acc[a] += sign * c;
    sign = (frees.size() % 2 == 0) ? -1 : 1;
    for (size_t k = frees.size(); k-- > 0;) {
      for (int t : frees[k].twists()) acc[t] += sign;
      sign = -sign;
    }
  } else {
    // module adjacent to the ideal (N-type): signs alternate from it.
    for (auto& [a, c] : mod_series.numerator) acc[a] += c;
    sign = -1;
    for (size_t k = 0; k < frees.size(); ++k) {
      for (int t : frees[k].twists()) acc[t] += sign;
      sign = -sign;
    }
  }
  for (auto& [a, c] : ideal_hs.numerator) acc[a - h] -= c;
  for (auto& [a, c] : acc)
    if (c != 0) return false;
  return true;
}

}  // namespace

bool etype_sequence_exact(const ETypeData& e) {
  // 0 -> E -> Q_{r-1} -> ... -> Q_1 -> I(h) -> 0.
  std::vector<GradedFreeModule> frees = e.q;  // Q_1..Q_{r-1}
  return sequence_exact_by_series(e.aug.ring(), hilbert_series_module(e.kernel), frees, e.ideal,
                                  e.twist_h, /*mod_is_leftmost=*/true);
}

bool ntype_sequence_exact(const NTypeData& n) {
  // 0 -> P_{r-1} -> ... -> P_1 -> N -> I(h) -> 0.
  return sequence_exact_by_series(n.aug.ring(), hilbert_series_module(n.middle), n.p, n.ideal,
                                  n.twist_h, /*mod_is_leftmost=*/false);
}

ETypeData minimize_etype(const ETypeData& e_in) {
  ETypeData e = e_in;
  const PolyRing& ring = e.aug.ring();
  const auto& F = ring.field();

  // Work on mutable grids: rels (rows = E gens), emap (rows = Q_{r-1} basis),
  // then the free tail toward the augmentation.
  std::vector<int> egen_tw = e.kernel.gens().twists();
  std::vector<int> rel_tw = e.kernel.rels().source().twists();
  std::vector<std::vector<Polynomial>> rels;
  for (int i = 0; i < e.kernel.rels().rows(); ++i) rels.push_back(e.kernel.rels().row(i));
  std::vector<std::vector<Polynomial>> emap;
  for (int i = 0; i < e.e_map.rows(); ++i) emap.push_back(e.e_map.row(i));
  std::vector<std::vector<int>> qtw;
  for (auto& m : e.q) qtw.push_back(m.twists());
  // tail[k]: map out of Q_{k+1} (tail[0] = aug on Q_1, tail[k] = q_maps[k-1]).
  std::vector<std::vector<std::vector<Polynomial>>> tail;
  {
    std::vector<std::vector<Polynomial>> augg;
    for (int i = 0; i < e.aug.rows(); ++i) augg.push_back(e.aug.row(i));
    tail.push_back(std::move(augg));
    for (auto& qm : e.q_maps) {
      std::vector<std::vector<Polynomial>> g;
      for (int i = 0; i < qm.rows(); ++i) g.push_back(qm.row(i));
      tail.push_back(std::move(g));
    }
  }
  int r = e.codim;
  auto is_unit = [](const Polynomial& p) { return !p.is_zero() && p.degree() == 0; };

  for (;;) {
    bool progress = false;

    // (1) unit inside rels: eliminate a redundant E generator.
    for (size_t i = 0; i < egen_tw.size() && !progress; ++i)
      for (size_t c = 0; c < rel_tw.size(); ++c) {
        if (!is_unit(rels[i][c])) continue;
        Coeff u = rels[i][c].leading_coeff();
        for (size_t k = 0; k < egen_tw.size(); ++k) {
          if (k == i || rels[k][c].is_zero()) continue;
          Polynomial fct = poly_scale(rels[k][c], F.neg(F.inv(u)));
          for (size_t cc = 0; cc < rel_tw.size(); ++cc) {
            if (cc == c) continue;
            rels[k][cc] = poly_add(rels[k][cc], poly_mul(fct, rels[i][cc]));
          }
          rels[k][c] = Polynomial::zero(ring);
        }
        rels.erase(rels.begin() + i);
        egen_tw.erase(egen_tw.begin() + i);
        for (auto& row : rels) row.erase(row.begin() + c);
        rel_tw.erase(rel_tw.begin() + c);
        for (auto& row : emap) row.erase(row.begin() + i);
        progress = true;
        break;
      }
    if (progress) continue;

    // (2) unit in e_map: split a matched pair (E generator, Q_{r-1} basis).
    int qi = -1, ej = -1;
    for (size_t i = 0; i < emap.size() && qi < 0; ++i)
      for (size_t j = 0; j < egen_tw.size(); ++j)
        if (is_unit(emap[i][j])) {
          qi = static_cast<int>(i);
          ej = static_cast<int>(j);
          break;
        }
    if (qi >= 0) {
      Coeff u = emap[qi][ej].leading_coeff();
      // Generator change: e'_k = e_k - c_k e_j clears row qi.
      for (size_t k = 0; k < egen_tw.size(); ++k) {
        if (static_cast<int>(k) == ej || emap[qi][k].is_zero()) continue;
        Polynomial ck = poly_scale(emap[qi][k], F.inv(u));
        for (size_t cc = 0; cc < rel_tw.size(); ++cc)
          rels[ej][cc] = poly_add(rels[ej][cc], poly_mul(ck, rels[k][cc]));
        for (size_t i = 0; i < emap.size(); ++i)
          emap[i][k] = poly_sub(emap[i][k], poly_mul(ck, emap[i][ej]));
      }
      // Clear column ej outside the pivot row.
      for (size_t i = 0; i < emap.size(); ++i) {
        if (static_cast<int>(i) == qi || emap[i][ej].is_zero()) continue;
        Polynomial di = poly_scale(emap[i][ej], F.inv(u));
        for (size_t j = 0; j < egen_tw.size(); ++j)
          emap[i][j] = poly_sub(emap[i][j], poly_mul(di, emap[qi][j]));
      }
      for (size_t cc = 0; cc < rel_tw.size(); ++cc)
        if (!rels[ej][cc].is_zero())
          throw InternalError("minimize_etype: cancelled generator still has relations");
      rels.erase(rels.begin() + ej);
      egen_tw.erase(egen_tw.begin() + ej);
      for (auto& row : emap) row.erase(row.begin() + ej);
      emap.erase(emap.begin() + qi);
      qtw[r - 2].erase(qtw[r - 2].begin() + qi);
      // The map out of Q_{r-1} loses the matching column.
      auto& next = tail[r - 2];
      for (auto& row : next) row.erase(row.begin() + qi);
      progress = true;
      continue;
    }

    // (3) unit inside the free tail.
    for (int t = static_cast<int>(tail.size()) - 1; t >= 1 && !progress; --t) {
      auto& g = tail[t];
      for (size_t a = 0; a < g.size() && !progress; ++a)
        for (size_t b = 0; b < (g.empty() ? 0 : g[a].size()); ++b) {
          if (!is_unit(g[a][b])) continue;
          Coeff u = g[a][b].leading_coeff();
          for (size_t i = 0; i < g.size(); ++i) {
            if (i == a || g[i][b].is_zero()) continue;
            Polynomial fct = poly_scale(g[i][b], F.neg(F.inv(u)));
            for (size_t j = 0; j < g[i].size(); ++j) {
              if (j == b) continue;
              g[i][j] = poly_add(g[i][j], poly_mul(fct, g[a][j]));
            }
          }
          // Source Q_{t+1} loses generator b; target loses generator a.
          g.erase(g.begin() + a);
          for (auto& row : g) row.erase(row.begin() + b);
          qtw[t].erase(qtw[t].begin() + b);
          if (t >= 1) qtw[t - 1].erase(qtw[t - 1].begin() + a);
          // Incoming map into Q_{t+1} loses row b.
          if (t + 1 < static_cast<int>(tail.size())) {
            tail[t + 1].erase(tail[t + 1].begin() + b);
          } else {
            emap.erase(emap.begin() + b);
          }
          // Outgoing map from the target loses column a (none past aug).
          if (t >= 1) {
            for (auto& row : tail[t - 1]) row.erase(row.begin() + a);
          }
          progress = true;
          break;
        }
    }
    if (!progress) break;
  }

  // Rebuild.
  ETypeData out(ring);
  out.codim = e.codim;
  out.twist_h = e.twist_h;
  out.ideal = e.ideal;
  GradedMatrix rl(ring, GradedFreeModule(rel_tw), GradedFreeModule(egen_tw));
  for (size_t i = 0; i < rels.size(); ++i)
    for (size_t c = 0; c < rel_tw.size(); ++c) rl.set(static_cast<int>(i), static_cast<int>(c), rels[i][c]);
  out.kernel = GradedModule(std::move(rl));
  for (auto& t : qtw) out.q.push_back(GradedFreeModule(t));
  GradedMatrix em(ring, out.kernel.gens(), out.q[r - 2]);
  for (size_t i = 0; i < emap.size(); ++i)
    for (size_t j = 0; j < egen_tw.size(); ++j) em.set(static_cast<int>(i), static_cast<int>(j), emap[i][j]);
  out.e_map = std::move(em);
  GradedMatrix ag(ring, out.q[0], GradedFreeModule(std::vector<int>{-e.twist_h}));
  for (size_t j = 0; j < (tail[0].empty() ? qtw[0].size() : tail[0][0].size()); ++j)
    ag.set(0, static_cast<int>(j), tail[0][0][j]);
  out.aug = std::move(ag);
  for (int k = 1; k < static_cast<int>(tail.size()); ++k) {
    GradedMatrix qm(ring, out.q[k], out.q[k - 1]);
    for (size_t i = 0; i < tail[k].size(); ++i)
      for (size_t j = 0; j < tail[k][i].size(); ++j)
        qm.set(static_cast<int>(i), static_cast<int>(j), tail[k][i][j]);
    out.q_maps.push_back(std::move(qm));
  }
  out.e_map.require_homogeneous("minimize_etype");
  out.aug.require_homogeneous("minimize_etype aug");
  return out;
}

NTypeData minimize_ntype(const NTypeData& n_in) {
  NTypeData n = n_in;
  const PolyRing& ring = n.aug.ring();
  const auto& F = ring.field();
  // Only free-standing generators of N (no relations touching them) are
  // cancelled against P_1 basis vectors; this keeps the quotient honest.
  for (;;) {
    GradedModule mp = minimal_presentation(n.middle);
    // Rebuild psi/aug in the minimal presentation's coordinates is nontrivial;
    // instead require the data to already be minimally presented where the
    // cancellation acts: detect a unit psi entry on a relation-free generator.
    int gi = -1, pb = -1;
    for (int i = 0; i < n.psi.rows() && gi < 0; ++i) {
      bool free_gen = true;
      for (int c = 0; c < n.middle.rels().cols(); ++c)
        if (!n.middle.rels().at(i, c).is_zero()) free_gen = false;
      if (!free_gen) continue;
      for (int b = 0; b < n.psi.cols(); ++b) {
        const Polynomial& p = n.psi.at(i, b);
        if (!p.is_zero() && p.degree() == 0) {
          gi = i;
          pb = b;
          break;
        }
      }
    }
    if (gi < 0) break;
    Coeff u = n.psi.at(gi, pb).leading_coeff();

    // P-basis change clears row gi; then generator change clears column pb.
    GradedMatrix psi = n.psi;
    for (int c = 0; c < psi.cols(); ++c) {
      if (c == pb || psi.at(gi, c).is_zero()) continue;
      Polynomial fc = poly_scale(psi.at(gi, c), F.neg(F.inv(u)));
      for (int i = 0; i < psi.rows(); ++i)
        psi.set(i, c, poly_add(psi.at(i, c), poly_mul(fc, psi.at(i, pb))));
      // p_maps feeding P_1 lose nothing yet; their row update folds into the
      // deletion below because the changed column is the one removed.
      (void)0;
    }
    // Quotient N by the split section psi(col pb): add it as a relation and
    // drop the matched generator gi by unit cancellation right away.
    std::vector<int> keep_cols;
    for (int c = 0; c < psi.cols(); ++c)
      if (c != pb) keep_cols.push_back(c);
    GradedMatrix new_psi = psi.select_columns(keep_cols);
    GradedMatrix section(ring, GradedFreeModule(std::vector<int>{psi.source().twist(pb)}),
                         n.middle.gens());
    for (int i = 0; i < psi.rows(); ++i) section.set(i, 0, psi.at(i, pb));
    GradedMatrix new_rels = matrix_hconcat(n.middle.rels(), section);

    // Eliminate generator gi using the unit in the appended relation column.
    int relcol = new_rels.cols() - 1;
    std::vector<std::vector<Polynomial>> rg;
    for (int i = 0; i < new_rels.rows(); ++i) rg.push_back(new_rels.row(i));
    std::vector<std::vector<Polynomial>> pg;
    for (int i = 0; i < new_psi.rows(); ++i) pg.push_back(new_psi.row(i));
    std::vector<std::vector<Polynomial>> ag;
    ag.push_back(n.aug.row(0));
    for (int k = 0; k < new_rels.rows(); ++k) {
      if (k == gi || rg[k][relcol].is_zero()) continue;
      Polynomial fc = poly_scale(rg[k][relcol], F.neg(F.inv(u)));
      for (int cc = 0; cc < relcol; ++cc) rg[k][cc] = poly_add(rg[k][cc], poly_mul(fc, rg[gi][cc]));
      for (size_t cc = 0; cc < pg[k].size(); ++cc)
        pg[k][cc] = poly_add(pg[k][cc], poly_mul(fc, pg[gi][cc]));
      rg[k][relcol] = Polynomial::zero(ring);
    }
    // aug kills the section, so plain restriction of the functional is the
    // induced augmentation on the quotient.
    std::vector<int> gen_tw = n.middle.gens().twists();
    std::vector<int> rel_tw = new_rels.source().twists();
    rg.erase(rg.begin() + gi);
    pg.erase(pg.begin() + gi);
    ag[0].erase(ag[0].begin() + gi);
    gen_tw.erase(gen_tw.begin() + gi);
    for (auto& row : rg) row.erase(row.begin() + relcol);
    rel_tw.erase(rel_tw.begin() + relcol);

    GradedMatrix rl(ring, GradedFreeModule(rel_tw), GradedFreeModule(gen_tw));
    for (size_t i = 0; i < rg.size(); ++i)
      for (size_t c = 0; c < rel_tw.size(); ++c) rl.set(static_cast<int>(i), static_cast<int>(c), rg[i][c]);
    n.middle = GradedModule(std::move(rl));
    GradedMatrix np(ring, new_psi.source(), n.middle.gens());
    for (size_t i = 0; i < pg.size(); ++i)
      for (int c = 0; c < new_psi.cols(); ++c) np.set(static_cast<int>(i), c, pg[i][c]);
    n.psi = std::move(np);
    n.p[0] = n.psi.source();
    GradedMatrix na(ring, n.middle.gens(), n.aug.target());
    for (size_t c = 0; c < ag[0].size(); ++c) na.set(0, static_cast<int>(c), ag[0][c]);
    n.aug = std::move(na);
    if (!n.p_maps.empty()) {
      // P_1 lost basis pb: the map P_2 -> P_1 loses that row.
      std::vector<int> keep_rows;
      for (int i = 0; i < n.p_maps[0].rows(); ++i)
        if (i != pb) keep_rows.push_back(i);
      n.p_maps[0] = n.p_maps[0].select_rows(keep_rows);
    }
  }
  return n;
}

bool is_pure_codimension(const Ideal& i, int r) {
  if (codimension(i) < r)
    throw PreconditionError("is_pure_codimension: codimension below the requested level");
  ETypeData e = extract_e_type(i, r);
  return verify_e_condition(e);
}

std::vector<std::vector<int>> monomial_associated_primes(const Ideal& i) {
  const PolyRing& ring = i.ring();
  int nv = ring.nvars();
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) {
    if (g.num_terms() != 1)
      throw PreconditionError("monomial_associated_primes needs a monomial ideal");
    gens.push_back(g.leading_monomial());
  }
  // Minimalize the monomial generators.
  std::vector<Monomial> mins;
  for (const auto& m : gens) {
    bool dominated = false;
    for (const auto& o : gens)
      if (!(o == m) && mono_divides(o, m)) {
        dominated = true;
        break;
      }
    if (!dominated) mins.push_back(m);
  }
  std::vector<int> maxexp(nv, 0);
  for (const auto& m : mins)
    for (int v = 0; v < nv; ++v) maxexp[v] = std::max(maxexp[v], m.e[v]);

  std::set<std::vector<int>> found;
  // Enumerate candidate witnesses u and read off (I : u) when it is a
  // monomial prime.
  std::vector<int> cur(nv, 0);
  std::function<void(int)> enumerate = [&](int v) {
    if (v == nv) {
      Monomial u{cur};
      // colon (I : u), deduplicated and minimalized.
      std::vector<Monomial> colon;
      for (const auto& g : mins) {
        Monomial q = mono_div(g, mono_gcd(g, u));
        if (q.is_one()) return;  // u in I: colon is the unit ideal
        bool dup = false;
        for (const auto& o : colon)
          if (o == q) dup = true;
        if (!dup) colon.push_back(q);
      }
      std::vector<Monomial> cmins;
      for (const auto& m : colon) {
        bool dominated = false;
        for (const auto& o : colon)
          if (!(o == m) && mono_divides(o, m)) dominated = true;
        if (!dominated) cmins.push_back(m);
      }
      std::vector<int> vars;
      for (const auto& m : cmins) {
        if (m.degree() != 1) return;
        for (int w = 0; w < nv; ++w)
          if (m.e[w] == 1) vars.push_back(w);
      }
      if (vars.empty()) return;
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      if (static_cast<int>(vars.size()) == static_cast<int>(cmins.size())) found.insert(vars);
      return;
    }
    for (int e = 0; e <= maxexp[v]; ++e) {
      cur[v] = e;
      enumerate(v + 1);
    }
    cur[v] = 0;
  };
  enumerate(0);
  return std::vector<std::vector<int>>(found.begin(), found.end());
}

StableClass stable_normal_form(const GradedModule& m) {
  FreeSplitResult split = split_all_free_summands(m);
  StableClass out(m.ring());
  out.split_twists = split.split_twists;
  if (split.core.gens().rank() == 0) {
    out.normal_form = split.core;
    out.twist_offset = 0;
    return out;
  }
  int mind = *std::min_element(split.core.gens().twists().begin(),
                               split.core.gens().twists().end());
  out.normal_form = split.core.shifted(-mind);
  out.twist_offset = mind;
  return out;
}

StableClass phi_invariant(const Ideal& i) {
  if (!is_pure_codimension(i, 2))
    throw PreconditionError("phi_invariant: the scheme is not of pure codimension two");
  ETypeData e = extract_e_type(i, 2);
  return stable_normal_form(e.kernel);
}

StableClass phi_dual_class(const StableClass& c) {
  if (c.is_zero()) return c;
  // The dual even class corresponds to N_0 = Hom(E_0, S) on the N-side; its
  // E-side representative is the kernel of the minimal surjection onto N_0.
  GradedModule n0 = minimal_presentation(hom_dual(c.normal_form).mod);
  GradedMatrix r = n0.rels();
  GradedModule kernel = GradedModule(syzygies(r));
  return stable_normal_form(kernel);
}

bool stable_classes_equal(const StableClass& a, const StableClass& b, uint64_t seed) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_zero() != b.is_zero()) return false;
  return modules_isomorphic(a.normal_form, b.normal_form, seed);
}

bool same_even_class(const Ideal& i, const Ideal& j, uint64_t seed) {
  return stable_classes_equal(phi_invariant(i), phi_invariant(j), seed);
}

bool deformation_equivalent(const Ideal& i, const Ideal& j, uint64_t seed) {
  if (!same_even_class(i, j, seed)) return false;
  auto [li, hi] = default_window(i);
  auto [lj, hj] = default_window(j);
  int lo = std::min(li, lj), hi2 = std::max(hi, hj);
  return ideal_sheaf_cohomology(i, lo, hi2) == ideal_sheaf_cohomology(j, lo, hi2);
}

Polynomial random_element_of_degree(const Ideal& i, int d, std::mt19937_64& rng) {
  const PolyRing& ring = i.ring();
  const auto& F = ring.field();
  Polynomial acc = Polynomial::zero(ring);
  for (const auto& g : i.generators()) {
    int e = d - g.degree();
    if (e < 0) continue;
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(ring.nvars(), e)) ts.push_back(Term{m, random_coeff(F, rng)});
    acc = poly_add(acc, poly_mul(g, Polynomial(ring, std::move(ts))));
  }
  return acc;
}

CompleteIntersection random_ci_in_ideal(const Ideal& i, const std::vector<int>& degrees,
                                        RandomPolicy policy) {
  std::mt19937_64 rng(policy.seed);
  for (int attempt = 0; attempt < policy.retries; ++attempt) {
    std::vector<Polynomial> forms;
    for (int d : degrees) forms.push_back(random_element_of_degree(i, d, rng));
    bool ok = true;
    for (const auto& f : forms)
      if (f.is_zero()) ok = false;
    if (ok && is_regular_sequence(forms)) return CompleteIntersection(std::move(forms));
  }
  throw BudgetError("random_ci_in_ideal: no regular sequence found within the retry budget");
}

NTypeData n_type_of(const Ideal& i, RandomPolicy policy) {
  int r = codimension(i);
  Ideal sat = saturate(i);
  // Canonical-ish intersection: lowest generator degrees first, deterministic
  // seed, verified regular.
  std::vector<Polynomial> gens = minimal_ideal_generators(sat);
  std::vector<int> degs;
  for (const auto& g : gens) degs.push_back(g.degree());
  std::sort(degs.begin(), degs.end());
  std::vector<int> pick(degs.begin(), degs.begin() + r);
  // Deterministic attempt from the generators themselves.
  std::optional<CompleteIntersection> ci;
  if (r == 2) {
    for (size_t a = 0; a < gens.size() && !ci; ++a)
      for (size_t b = a + 1; b < gens.size() && !ci; ++b) {
        std::vector<Polynomial> fs{gens[a], gens[b]};
        if (is_regular_sequence(fs)) ci.emplace(fs);
      }
  }
  for (int bump = 0; bump <= 3 && !ci; ++bump) {
    std::vector<int> degs_try = pick;
    degs_try.back() += bump;
    try {
      ci = random_ci_in_ideal(sat, degs_try, policy);
    } catch (const BudgetError&) {
      if (bump == 3) throw;
    }
  }

  LinkResult w = link(sat, *ci);
  if (w.empty_residual)
    throw PreconditionError("n_type_of: the ideal is a complete intersection; link back is empty");
  ETypeData ew = extract_e_type(w.ideal, r);
  NTypeData out = e_to_n_transform(ew, *ci);
  if (!ideal_equal(out.ideal, sat))
    throw InternalError("n_type_of: double link did not return to the input");
  return out;
}

std::optional<std::vector<CompleteIntersection>> connect_even_linkage_heuristic(
    const Ideal& i, const Ideal& j, RandomPolicy policy) {
  if (!same_even_class(i, j, policy.seed))
    throw PreconditionError("connect_even_linkage_heuristic: different even classes");
  Ideal si = saturate(i), sj = saturate(j);
  if (ideal_equal(si, sj)) return std::vector<CompleteIntersection>{};

  std::mt19937_64 rng(policy.seed);
  auto degrees_of = [](const Ideal& x) {
    std::vector<int> ds;
    for (const auto& g : minimal_ideal_generators(x)) ds.push_back(g.degree());
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  std::vector<int> di = degrees_of(si);
  for (int attempt = 0; attempt < policy.retries; ++attempt) {
    try {
      std::uniform_int_distribution<int> bump(0, 1);
      std::vector<int> d1{di[0] + bump(rng), di[std::min<size_t>(1, di.size() - 1)] + bump(rng)};
      RandomPolicy sub{rng(), 8};
      CompleteIntersection ci1 = random_ci_in_ideal(si, d1, sub);
      LinkResult w = link(si, ci1);
      if (w.empty_residual) continue;
      std::vector<int> dw = degrees_of(w.ideal);
      std::vector<int> d2{dw[0] + bump(rng), dw[std::min<size_t>(1, dw.size() - 1)] + bump(rng)};
      RandomPolicy sub2{rng(), 8};
      CompleteIntersection ci2 = random_ci_in_ideal(w.ideal, d2, sub2);
      LinkResult x = link(w.ideal, ci2);
      if (x.empty_residual) continue;
      if (ideal_equal(x.ideal, sj) && double_link_identity_check(si, ci1) &&
          double_link_identity_check(w.ideal, ci2))
        return std::vector<CompleteIntersection>{ci1, ci2};
    } catch (const BudgetError&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace liaison
