#ifndef LIAISON_GB_HPP
#define LIAISON_GB_HPP

#include <vector>

#include "liaison/graded.hpp"

namespace liaison {

/// One term of an element of a free module: coeff * monomial * e_pos.
struct ModTerm {
  int pos;
  Monomial mono;
  Coeff coeff;
};

/// Element of a free module, terms kept strictly descending in the ambient
/// module order.
struct ModElem {
  std::vector<ModTerm> terms;
  bool is_zero() const { return terms.empty(); }
  const ModTerm& lead() const { return terms.front(); }
};

/// Position-over-term block order. Positions below elim_split form a dominant
/// block (used to eliminate the target components in syzygy computations);
/// within a block terms compare by grevlex, ties by smaller position first.
class ModuleOrder {
 public:
  explicit ModuleOrder(int elim_split = 0) : elim_split_(elim_split) {}
  int elim_split() const { return elim_split_; }

  int cmp(const ModTerm& a, const ModTerm& b) const {
    int ba = a.pos < elim_split_ ? 0 : 1;
    int bb = b.pos < elim_split_ ? 0 : 1;
    if (ba != bb) return ba < bb ? 1 : -1;
    int c = grevlex_cmp(a.mono, b.mono);
    if (c != 0) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return 0;
  }

 private:
  int elim_split_;
};

ModElem mod_add(const CoefficientField& F, const ModuleOrder& ord, const ModElem& a, const ModElem& b);
ModElem mod_scale(const CoefficientField& F, const ModElem& a, const Coeff& c);
ModElem mod_mul_term(const CoefficientField& F, const ModElem& a, const Monomial& m, const Coeff& c);
ModElem mod_mul_poly(const CoefficientField& F, const ModuleOrder& ord, const ModElem& a, const Polynomial& p);
ModElem mod_normalize(const CoefficientField& F, const ModuleOrder& ord, std::vector<ModTerm> terms);

ModElem column_to_elem(const GradedMatrix& m, int j);
std::vector<ModElem> columns_to_elems(const GradedMatrix& m);
/// Degree of a homogeneous module element under the target twists; element
/// must be homogeneous (checked).
int elem_degree(const ModElem& e, const std::vector<int>& twists);

/// A computed Groebner basis for a submodule of a free module, with optional
/// coordinate tracking (each basis element expressed over the input columns).
class ModuleGB {
 public:
  static ModuleGB compute(const PolyRing& ring, std::vector<ModElem> gens, ModuleOrder ord,
                          bool track = false);

  const PolyRing& ring() const { return ring_; }
  const ModuleOrder& order() const { return ord_; }
  const std::vector<ModElem>& basis() const { return basis_; }
  const std::vector<ModElem>& coords() const { return coords_; }

  ModElem normal_form(const ModElem& e) const;
  bool reduces_to_zero(const ModElem& e) const;

  struct TrackedNF {
    ModElem remainder;
    std::vector<Polynomial> witness;  // over the original input columns
  };
  /// Requires track=true at compute time: e = sum_i witness_i * input_i + remainder.
  TrackedNF normal_form_tracked(const ModElem& e) const;

 private:
  ModuleGB(PolyRing r, ModuleOrder o) : ring_(std::move(r)), ord_(o) {}

  ModElem reduce(const ModElem& e, ModElem* coord_out) const;

  PolyRing ring_;
  ModuleOrder ord_;
  bool tracked_ = false;
  size_t ninputs_ = 0;
  std::vector<ModElem> basis_;
  std::vector<ModElem> coords_;  // parallel to basis_, over input index positions
};

/// Generators of the syzygy module of the columns of m: the kernel of the map
/// source(m) -> target(m). Columns of the result are homogeneous elements of
/// source(m), and compose(m, result) = 0.
GradedMatrix syzygies(const GradedMatrix& m);

/// Expresses each column of b over the columns of a: returns x with a*x = b.
/// Throws PreconditionError when some column is not in the image.
GradedMatrix lift_through(const GradedMatrix& a, const GradedMatrix& b);

}  // namespace liaison

#endif
