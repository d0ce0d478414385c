#ifndef LIAISON_MODULE_HPP
#define LIAISON_MODULE_HPP

#include <optional>

#include "liaison/ideal.hpp"

namespace liaison {

/// Finitely generated graded module, presented as coker(rels: F1 -> F0).
/// Generators are the basis of F0 = rels.target().
class GradedModule {
 public:
  explicit GradedModule(GradedMatrix rels);

  static GradedModule free_module(const PolyRing& r, GradedFreeModule gens);
  static GradedModule zero(const PolyRing& r);
  static GradedModule cokernel(GradedMatrix m) { return GradedModule(std::move(m)); }
  /// The ideal I as a module: generators in their degrees, relations its syzygies.
  static GradedModule from_ideal(const Ideal& i);
  /// The cyclic module S/I.
  static GradedModule quotient_ring(const Ideal& i);

  const PolyRing& ring() const { return rels_.ring(); }
  const GradedFreeModule& gens() const { return rels_.target(); }
  const GradedMatrix& rels() const { return rels_; }

  GradedModule shifted(int h) const { return GradedModule(rels_.shifted(h)); }
  GradedModule direct_sum(const GradedModule& o) const {
    return GradedModule(matrix_direct_sum(rels_, o.rels_));
  }

  /// Rank over the fraction field.
  int rank() const { return gens().rank() - poly_matrix_rank(rels_); }

 private:
  GradedMatrix rels_;
};

/// Unit-entry Gaussian cancellation plus removal of zero/duplicate relation
/// columns; afterwards all relation entries lie in the maximal ideal, so the
/// generators are minimal. Pivots are chosen lowest (row, column) first.
GradedModule minimal_presentation(const GradedModule& m);

/// Additionally prunes relation columns to a minimal generating set of the
/// relation submodule (needed when the relations feed a resolution step).
GradedMatrix prune_to_minimal_generators(const GradedMatrix& columns);

bool module_is_zero(const GradedModule& m);

/// Minimal generator degrees, as a twist function (graded Nakayama).
TwistFunction module_minimal_generators(const GradedModule& m);

/// Hom(M, S) together with the matrix embedding its generators into
/// gens(M)^dual; embed columns are the generator functionals.
struct DualModule {
  GradedModule mod;
  GradedMatrix embed;
};
DualModule hom_dual(const GradedModule& m);

/// Hom(M, S) twisted: Hom(M, S)(-h) = Hom(M(h'), ...) bookkeeping helper.
GradedModule dual_module(const GradedModule& m, int twist_h);

/// The canonical map M -> M^{vv} in generator coordinates, with the target's
/// presentation. Used for reflexivity tests.
struct DoubleDualData {
  GradedModule double_dual;
  GradedMatrix eval;  // gens(M) -> gens(double_dual)
};
DoubleDualData double_dual(const GradedModule& m);

/// True iff coker(m) = 0, by graded Nakayama on the constant blocks.
bool cokernel_is_zero(const GradedMatrix& m);

/// Degree pieces of a module via normal forms against a Groebner basis of
/// the relation columns: the degree-d basis is the set of standard
/// (component, monomial) pairs, so sizes track the module's Hilbert function
/// rather than the ambient free module.
class ModulePieces {
 public:
  explicit ModulePieces(const GradedModule& m);

  const GradedModule& module() const { return m_; }
  /// Standard-pair basis of the degree-d piece.
  std::vector<std::pair<int, Monomial>> basis(int d) const;
  int dim(int d) const { return static_cast<int>(basis(d).size()); }
  /// Coordinates of a homogeneous degree-d element given over the generators.
  std::vector<Coeff> coords(const std::vector<Polynomial>& elem_in_gens, int d) const;
  /// The k-th basis vector as an element over the generators.
  std::vector<Polynomial> representative(int d, int k) const;

 private:
  GradedModule m_;
  ModuleGB gb_;
};

/// Ambient (component, monomial) basis of F_d for a free module.
std::vector<std::pair<int, Monomial>> free_basis_in_degree(const PolyRing& r,
                                                           const GradedFreeModule& m, int d);

/// Expresses a homogeneous element (polynomial vector over gens) in F0_d
/// coordinates.
std::vector<Coeff> element_coords(const PolyRing& r,
                                  const std::vector<std::pair<int, Monomial>>& basis,
                                  const std::vector<Polynomial>& elem);

/// Basis of the degree-0 homomorphisms M -> N, each given as a matrix
/// gens(M) -> gens(N).
std::vector<GradedMatrix> hom_space_degree_zero(const GradedModule& m, const GradedModule& n);

/// A split-off free rank-1 summand, if any: returns the twist and the new
/// complement presentation.
struct SplitStep {
  int twist;
  GradedModule complement;
};
std::optional<SplitStep> split_free_summand(const GradedModule& m);

/// Splits free rank-1 summands until none remains. Returns the core module
/// (minimal presentation) and the multiset of split twists.
struct FreeSplitResult {
  GradedModule core;
  std::vector<int> split_twists;
};
FreeSplitResult split_all_free_summands(const GradedModule& m);

}  // namespace liaison

#endif
