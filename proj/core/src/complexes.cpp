#include "liaison/complexes.hpp"

#include <algorithm>

namespace liaison {

FreeComplex::FreeComplex(PolyRing ring, std::vector<GradedFreeModule> modules,
                         std::vector<GradedMatrix> differentials)
    : ring_(std::move(ring)), modules_(std::move(modules)), diffs_(std::move(differentials)) {
  if (modules_.empty()) throw PreconditionError("FreeComplex needs at least one module");
  if (diffs_.size() + 1 != modules_.size())
    throw PreconditionError("FreeComplex: differential count mismatch");
}

FreeComplex FreeComplex::single(const PolyRing& r, GradedFreeModule m) {
  return FreeComplex(r, {std::move(m)}, {});
}

const GradedFreeModule& FreeComplex::module(int i) const {
  if (i < 0 || i >= static_cast<int>(modules_.size()))
    throw PreconditionError("FreeComplex::module index out of range");
  return modules_[i];
}

GradedFreeModule FreeComplex::module_or_zero(int i) const {
  if (i < 0 || i >= static_cast<int>(modules_.size())) return GradedFreeModule(std::vector<int>{});
  return modules_[i];
}

void FreeComplex::validate() const {
  for (int i = 0; i < num_differentials(); ++i) {
    const GradedMatrix& d = diffs_[i];
    if (d.target() != modules_[i] || d.source() != modules_[i + 1])
      throw InternalError("FreeComplex: differential endpoints disagree with modules");
    d.require_homogeneous("FreeComplex::validate");
    if (i + 1 < num_differentials()) {
      GradedMatrix dd = matrix_compose(d, diffs_[i + 1]);
      if (!dd.is_zero()) throw InternalError("FreeComplex: d o d != 0 at position " + std::to_string(i));
    }
  }
}

FreeComplex FreeComplex::dual(int h) const {
  int len = length();
  std::vector<GradedFreeModule> mods;
  for (int i = 0; i <= len; ++i) mods.push_back(modules_[len - i].dual(h));
  std::vector<GradedMatrix> diffs;
  for (int i = 0; i < len; ++i) diffs.push_back(diffs_[len - i - 1].dual(h));
  return FreeComplex(ring_, std::move(mods), std::move(diffs));
}

FreeComplex FreeComplex::shifted(int h) const {
  std::vector<GradedFreeModule> mods;
  for (const auto& m : modules_) mods.push_back(m.shifted(h));
  std::vector<GradedMatrix> diffs;
  for (const auto& d : diffs_) diffs.push_back(d.shifted(h));
  return FreeComplex(ring_, std::move(mods), std::move(diffs));
}

FreeComplex FreeComplex::trimmed() const {
  int last = length();
  while (last > 0 && modules_[last].rank() == 0) --last;
  std::vector<GradedFreeModule> mods(modules_.begin(), modules_.begin() + last + 1);
  std::vector<GradedMatrix> diffs(diffs_.begin(), diffs_.begin() + last);
  return FreeComplex(ring_, std::move(mods), std::move(diffs));
}

void validate_morphism(const FreeComplex& f, const FreeComplex& g, const ComplexMorphism& alpha) {
  int n = static_cast<int>(alpha.components.size());
  for (int i = 0; i < n; ++i) {
    alpha.components[i].require_homogeneous("validate_morphism");
    if (i + 1 < n && i < f.num_differentials() && i < g.num_differentials()) {
      GradedMatrix lhs = matrix_compose(g.differential(i), alpha.components[i + 1]);
      GradedMatrix rhs = matrix_compose(alpha.components[i], f.differential(i));
      for (int r = 0; r < lhs.rows(); ++r)
        for (int c = 0; c < lhs.cols(); ++c)
          if (lhs.at(r, c) != rhs.at(r, c))
            throw InternalError("morphism square " + std::to_string(i) + " does not commute");
    }
  }
}

FreeComplex koszul_complex(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw PreconditionError("koszul_complex of an empty sequence");
  if (!is_regular_sequence(fs)) throw PreconditionError("koszul_complex: not a regular sequence");
  const PolyRing& r = fs.front().ring();
  int n = static_cast<int>(fs.size());
  std::vector<int> degs;
  for (const auto& f : fs) degs.push_back(f.degree());

  // Basis of the j-th exterior power: size-j subsets as ascending bitmasks.
  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    subsets[__builtin_popcount(mask)].push_back(mask);

  std::vector<GradedFreeModule> mods;
  for (int j = 0; j <= n; ++j) {
    std::vector<int> tw;
    for (unsigned mask : subsets[j]) {
      int d = 0;
      for (int k = 0; k < n; ++k)
        if (mask & (1u << k)) d += degs[k];
      tw.push_back(d);
    }
    mods.push_back(GradedFreeModule(std::move(tw)));
  }

  std::vector<GradedMatrix> diffs;
  for (int j = 0; j < n; ++j) {
    GradedMatrix d(r, mods[j + 1], mods[j]);
    for (size_t col = 0; col < subsets[j + 1].size(); ++col) {
      unsigned mask = subsets[j + 1][col];
      int sign_idx = 0;
      for (int k = 0; k < n; ++k) {
        if (!(mask & (1u << k))) continue;
        unsigned sub = mask & ~(1u << k);
        auto it = std::find(subsets[j].begin(), subsets[j].end(), sub);
        int row = static_cast<int>(it - subsets[j].begin());
        Polynomial entry = (sign_idx % 2 == 0) ? fs[k] : poly_neg(fs[k]);
        d.set(row, static_cast<int>(col), std::move(entry));
        ++sign_idx;
      }
    }
    diffs.push_back(std::move(d));
  }
  FreeComplex out(r, std::move(mods), std::move(diffs));
  out.validate();
  return out;
}

ComplexMorphism lift_morphism(const FreeComplex& f, const FreeComplex& g) {
  const PolyRing& ring = f.ring();
  if (f.module(0).rank() != 1 || g.module(0).rank() != 1 || f.module(0).twist(0) != 0 ||
      g.module(0).twist(0) != 0)
    throw PreconditionError("lift_morphism expects rank-1 twist-0 augmentation targets");
  ComplexMorphism alpha;
  alpha.components.push_back(GradedMatrix::identity(ring, f.module(0)));
  for (int i = 1; i <= f.length(); ++i) {
    GradedMatrix rhs = matrix_compose(alpha.components[i - 1], f.differential(i - 1));
    if (i > g.length()) {
      if (!rhs.is_zero())
        throw PreconditionError("lift_morphism: source complex is longer and the square is nonzero");
      alpha.components.push_back(
          GradedMatrix::zero_map(ring, f.module(i), GradedFreeModule(std::vector<int>{})));
      continue;
    }
    alpha.components.push_back(lift_through(g.differential(i - 1), rhs));
  }
  validate_morphism(f, g, alpha);
  return alpha;
}

FreeComplex mapping_cone(const FreeComplex& f, const FreeComplex& g, const ComplexMorphism& alpha) {
  require_same_ring(f.ring(), g.ring());
  const PolyRing& ring = f.ring();
  int len = std::max(f.length() + 1, g.length());
  std::vector<GradedFreeModule> mods;
  for (int i = 0; i <= len; ++i) mods.push_back(f.module_or_zero(i - 1).direct_sum(g.module_or_zero(i)));
  std::vector<GradedMatrix> diffs;
  for (int i = 0; i < len; ++i) {
    // Cone_{i+1} = F_i (+) G_{i+1} -> Cone_i = F_{i-1} (+) G_i,
    // (x, y) -> (d x, alpha x - d y).
    GradedMatrix d(ring, mods[i + 1], mods[i]);
    int fr = f.module_or_zero(i - 1).rank();
    int fc = f.module_or_zero(i).rank();
    if (i >= 1 && i - 1 < f.num_differentials()) {
      const GradedMatrix& df = f.differential(i - 1);
      for (int r = 0; r < df.rows(); ++r)
        for (int c = 0; c < df.cols(); ++c) d.set(r, c, df.at(r, c));
    }
    if (i < static_cast<int>(alpha.components.size())) {
      const GradedMatrix& a = alpha.components[i];
      for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) d.set(fr + r, c, a.at(r, c));
    }
    if (i < g.num_differentials()) {
      const GradedMatrix& dg = g.differential(i);
      for (int r = 0; r < dg.rows(); ++r)
        for (int c = 0; c < dg.cols(); ++c) d.set(fr + r, fc + c, poly_neg(dg.at(r, c)));
    }
    diffs.push_back(std::move(d));
  }
  FreeComplex out(ring, std::move(mods), std::move(diffs));
  out.validate();
  return out;
}

FreeComplex mapping_cone_of_dual(const FreeComplex& f, const FreeComplex& g,
                                 const ComplexMorphism& alpha, int twist) {
  require_same_ring(f.ring(), g.ring());
  const PolyRing& ring = f.ring();
  int len = std::max(f.length(), g.length());
  // Pad both complexes to a common length, dualize, and dualize the morphism;
  // the dual morphism runs g^v -> f^v.
  auto pad_dual = [&](const FreeComplex& c) {
    std::vector<GradedFreeModule> mods;
    for (int i = 0; i <= len; ++i) mods.push_back(c.module_or_zero(len - i).dual(twist));
    std::vector<GradedMatrix> diffs;
    for (int i = 0; i < len; ++i) {
      int j = len - i - 1;  // original differential index
      if (j < c.num_differentials()) {
        diffs.push_back(c.differential(j).dual(twist));
      } else {
        diffs.push_back(GradedMatrix::zero_map(ring, mods[i + 1], mods[i]));
      }
    }
    return FreeComplex(ring, std::move(mods), std::move(diffs));
  };
  FreeComplex fd = pad_dual(f);
  FreeComplex gd = pad_dual(g);
  ComplexMorphism beta;
  for (int i = 0; i <= len; ++i) {
    int j = len - i;
    if (j < static_cast<int>(alpha.components.size())) {
      beta.components.push_back(alpha.components[j].dual(twist));
    } else {
      beta.components.push_back(GradedMatrix::zero_map(ring, gd.module(i), fd.module(i)));
    }
  }
  validate_morphism(gd, fd, beta);
  return mapping_cone(gd, fd, beta);
}

FreeComplex cancel_split_summands(const FreeComplex& c) {
  const PolyRing& ring = c.ring();
  const auto& F = ring.field();
  std::vector<std::vector<int>> twists;
  for (int i = 0; i <= c.length(); ++i) twists.push_back(c.module(i).twists());
  std::vector<std::vector<std::vector<Polynomial>>> mats;  // mats[p][row][col]
  for (int p = 0; p < c.num_differentials(); ++p) {
    std::vector<std::vector<Polynomial>> m;
    for (int i = 0; i < c.differential(p).rows(); ++i) m.push_back(c.differential(p).row(i));
    mats.push_back(std::move(m));
  }

  for (;;) {
    int pp = -1, pr = -1, pc = -1;
    for (int p = 0; p < static_cast<int>(mats.size()) && pp < 0; ++p)
      for (size_t i = 0; i < mats[p].size() && pp < 0; ++i)
        for (size_t j = 0; j < (mats[p].empty() ? 0 : mats[p][i].size()); ++j) {
          const Polynomial& e = mats[p][i][j];
          if (!e.is_zero() && e.degree() == 0) {
            pp = p;
            pr = static_cast<int>(i);
            pc = static_cast<int>(j);
            break;
          }
        }
    if (pp < 0) break;

    auto& g = mats[pp];
    Coeff u = g[pr][pc].leading_coeff();
    // Schur complement on the pivot differential.
    for (size_t i = 0; i < g.size(); ++i) {
      if (static_cast<int>(i) == pr || g[i][pc].is_zero()) continue;
      Polynomial fctr = poly_scale(g[i][pc], F.neg(F.inv(u)));
      for (size_t j = 0; j < g[i].size(); ++j) {
        if (static_cast<int>(j) == pc) continue;
        g[i][j] = poly_add(g[i][j], poly_mul(fctr, g[pr][j]));
      }
    }
    // Drop target generator pr from module(pp) and source generator pc from
    // module(pp+1); the neighbor differentials lose the matching column/row.
    g.erase(g.begin() + pr);
    for (auto& row : g) row.erase(row.begin() + pc);
    twists[pp].erase(twists[pp].begin() + pr);
    twists[pp + 1].erase(twists[pp + 1].begin() + pc);
    if (pp >= 1) {
      for (auto& row : mats[pp - 1]) row.erase(row.begin() + pr);
    }
    if (pp + 1 < static_cast<int>(mats.size())) {
      mats[pp + 1].erase(mats[pp + 1].begin() + pc);
    }
  }

  std::vector<GradedFreeModule> mods;
  for (auto& t : twists) mods.push_back(GradedFreeModule(t));
  std::vector<GradedMatrix> diffs;
  for (size_t p = 0; p < mats.size(); ++p) {
    GradedMatrix d(ring, mods[p + 1], mods[p]);
    for (size_t i = 0; i < mats[p].size(); ++i)
      for (size_t j = 0; j < mats[p][i].size(); ++j)
        d.set(static_cast<int>(i), static_cast<int>(j), mats[p][i][j]);
    diffs.push_back(std::move(d));
  }
  FreeComplex out(ring, std::move(mods), std::move(diffs));
  out.validate();
  return out.trimmed();
}

std::map<std::pair<int, int>, int> betti_table(const FreeComplex& c) {
  std::map<std::pair<int, int>, int> out;
  for (int i = 0; i <= c.length(); ++i)
    for (int t : c.module(i).twists()) out[{i, t}] += 1;
  return out;
}

FreeComplex minimal_free_resolution(const GradedModule& m, int max_length) {
  const PolyRing& ring = m.ring();
  GradedModule m0 = minimal_presentation(m);
  std::vector<GradedFreeModule> mods{m0.gens()};
  std::vector<GradedMatrix> diffs;
  if (m0.rels().cols() > 0) {
    GradedMatrix d = prune_to_minimal_generators(m0.rels());
    for (;;) {
      mods.push_back(d.source());
      diffs.push_back(d);
      if (static_cast<int>(diffs.size()) > max_length)
        throw InternalError("minimal_free_resolution exceeded max_length " +
                            std::to_string(max_length));
      GradedMatrix k = syzygies(d);
      if (k.cols() == 0) break;
      d = prune_to_minimal_generators(k);
    }
  }
  FreeComplex out(ring, std::move(mods), std::move(diffs));
  out.validate();
  return out;
}

FreeComplex resolve_quotient(const Ideal& i, int max_length) {
  return minimal_free_resolution(GradedModule::quotient_ring(i), max_length);
}

bool complex_exact_in_positive_positions(const FreeComplex& c, int dmax) {
  for (int pos = 1; pos <= c.length(); ++pos) {
    const GradedMatrix& din = c.differential(pos - 1);  // module(pos) -> module(pos-1)
    int dmin = 1 << 30;
    for (int t : c.module(pos).twists()) dmin = std::min(dmin, t);
    if (c.module(pos).rank() == 0) continue;
    for (int d = dmin; d <= dmax; ++d) {
      DenseMatrix inpiece = degree_piece(din, d);
      int dim_src = inpiece.cols();
      int dim_ker = dim_src - inpiece.rank();
      int dim_im = 0;
      if (pos < c.length()) {
        DenseMatrix outpiece = degree_piece(c.differential(pos), d);
        dim_im = outpiece.rank();
      }
      if (dim_ker != dim_im) return false;
    }
  }
  return true;
}

}  // namespace liaison
