#ifndef LIAISON_COMPLEXES_HPP
#define LIAISON_COMPLEXES_HPP

#include <map>

#include "liaison/module.hpp"

namespace liaison {

/// Chain of graded free modules F_0 <- F_1 <- ... <- F_len with d o d = 0.
/// differential(i) maps module(i+1) into module(i). For a resolution of S/I
/// the position-0 module is the rank-1 twist-0 augmentation target.
class FreeComplex {
 public:
  FreeComplex(PolyRing ring, std::vector<GradedFreeModule> modules,
              std::vector<GradedMatrix> differentials);

  static FreeComplex single(const PolyRing& r, GradedFreeModule m);

  const PolyRing& ring() const { return ring_; }
  int length() const { return static_cast<int>(modules_.size()) - 1; }
  const GradedFreeModule& module(int i) const;
  /// Zero-rank module for positions outside [0, length()].
  GradedFreeModule module_or_zero(int i) const;
  const GradedMatrix& differential(int i) const { return diffs_[i]; }
  int num_differentials() const { return static_cast<int>(diffs_.size()); }

  void validate() const;  // homogeneity and d o d = 0

  /// Dual at twist h: positions reindex i -> length-i, differentials dualize.
  FreeComplex dual(int h) const;
  FreeComplex shifted(int h) const;

  /// Drops trailing zero-rank modules.
  FreeComplex trimmed() const;

 private:
  PolyRing ring_;
  std::vector<GradedFreeModule> modules_;
  std::vector<GradedMatrix> diffs_;
};

/// Morphism of complexes: components[i] : f.module(i) -> g.module(i).
struct ComplexMorphism {
  std::vector<GradedMatrix> components;
};

void validate_morphism(const FreeComplex& f, const FreeComplex& g, const ComplexMorphism& alpha);

/// Koszul complex of a regular sequence: K_0 = O, K_1 = +O(-d_i), ...,
/// K_r = O(-sum d_i).
FreeComplex koszul_complex(const std::vector<Polynomial>& fs);

/// Lifts the identity of the degree-0 augmentation to a morphism f -> g.
/// Requires g exact as a complex of graded modules in positive positions
/// (e.g. a free resolution); throws PreconditionError if a square cannot be
/// solved (containment failure).
ComplexMorphism lift_morphism(const FreeComplex& f, const FreeComplex& g);

/// Mapping cone of a morphism alpha: F -> G with the differential convention
/// D(x, y) = (d x, alpha x - d y): Cone_i = F_{i-1} (+) G_i.
FreeComplex mapping_cone(const FreeComplex& f, const FreeComplex& g, const ComplexMorphism& alpha);

/// Cone of the dualized morphism alpha^v(twist): the two complexes swap roles.
FreeComplex mapping_cone_of_dual(const FreeComplex& f, const FreeComplex& g,
                                 const ComplexMorphism& alpha, int twist);

/// Repeatedly cancels nonzero-constant differential entries, producing a
/// homotopy-equivalent complex with all entries in the maximal ideal.
/// Pivots scan lowest (position, row, column) first.
FreeComplex cancel_split_summands(const FreeComplex& c);

/// (position, twist) -> rank census.
std::map<std::pair<int, int>, int> betti_table(const FreeComplex& c);

/// Minimal free resolution of a module: F_0 <- F_1 <- ... with
/// coker(differential(0)) = M, minimal at every step.
FreeComplex minimal_free_resolution(const GradedModule& m, int max_length);

/// Minimal free resolution of S/I, augmented at O.
FreeComplex resolve_quotient(const Ideal& i, int max_length);

/// Degreewise exactness check: at positions 1..length the complex is exact
/// through total degree <= dmax (position 0 is the augmentation).
bool complex_exact_in_positive_positions(const FreeComplex& c, int dmax);

}  // namespace liaison

#endif
