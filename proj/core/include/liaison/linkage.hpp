#ifndef LIAISON_LINKAGE_HPP
#define LIAISON_LINKAGE_HPP

#include <memory>

#include "liaison/cohomology.hpp"

namespace liaison {

/// Seed and retry budget for the randomized "general choice" helpers; every
/// random pick is re-verified by an exact check before being returned.
struct RandomPolicy {
  uint64_t seed = 0;
  int retries = 64;
};

/// A global complete intersection: r forms making a regular sequence.
class CompleteIntersection {
 public:
  explicit CompleteIntersection(std::vector<Polynomial> fs);

  const PolyRing& ring() const { return forms_.front().ring(); }
  const std::vector<Polynomial>& forms() const { return forms_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int total_degree() const { return total_; }
  int codim() const { return static_cast<int>(forms_.size()); }
  Ideal ideal() const { return Ideal(ring(), forms_); }

 private:
  std::vector<Polynomial> forms_;
  std::vector<int> degrees_;
  int total_;
};

struct LinkResult {
  Ideal ideal;          // saturated ideal of the residual scheme
  bool empty_residual;  // the input equalled the complete intersection
};

/// Liaison by ideal quotient: the residual of i inside the complete
/// intersection. Requires ci.ideal() inside i.
LinkResult link(const Ideal& i, const CompleteIntersection& ci);

/// link(link(i)) == saturate(i), the involution property.
bool double_link_identity_check(const Ideal& i, const CompleteIntersection& ci);

/// E-type data: 0 -> E -> Q_{r-1} -> ... -> Q_1 -> I_X(h) -> 0 with the Q_i
/// dissocie and H^i_*(E) = 0 for 0 < i < r.
struct ETypeData {
  explicit ETypeData(const PolyRing& r)
      : kernel(GradedModule::zero(r)),
        e_map(GradedMatrix(r, GradedFreeModule(), GradedFreeModule())),
        aug(GradedMatrix(r, GradedFreeModule(), GradedFreeModule())),
        ideal(Ideal::zero(r)) {}

  int codim = 2;
  GradedModule kernel;                  // E, presented on its generators
  GradedMatrix e_map;                   // gens(E) -> Q_{r-1}
  std::vector<GradedFreeModule> q;      // Q_1 .. Q_{r-1}
  std::vector<GradedMatrix> q_maps;     // Q_{i+1} -> Q_i
  GradedMatrix aug;                     // Q_1 -> S(h)  (row; image = I_X(h))
  int twist_h = 0;
  Ideal ideal;                          // saturated ideal of X
};

/// N-type data: 0 -> P_{r-1} -> ... -> P_1 -> N -> I_X(h) -> 0 with the P_i
/// dissocie, N reflexive, Ext^i(N, O) = 0 for 0 < i < r.
struct NTypeData {
  explicit NTypeData(const PolyRing& r)
      : middle(GradedModule::zero(r)),
        psi(GradedMatrix(r, GradedFreeModule(), GradedFreeModule())),
        aug(GradedMatrix(r, GradedFreeModule(), GradedFreeModule())),
        ideal(Ideal::zero(r)) {}

  int codim = 2;
  GradedModule middle;                  // N
  GradedMatrix psi;                     // P_1 -> gens(N)
  std::vector<GradedFreeModule> p;      // P_1 .. P_{r-1}
  std::vector<GradedMatrix> p_maps;     // P_{i+1} -> P_i
  GradedMatrix aug;                     // gens(N) -> S(h)  (row; image = I_X(h))
  int twist_h = 0;
  Ideal ideal;
  // Set when this data came out of e_to_n_transform; enables the
  // projection-based morphism on the way back.
  std::shared_ptr<const ETypeData> source_etype;
  std::shared_ptr<const CompleteIntersection> source_ci;
};

/// Cuts the minimal free resolution of S/I at homological position r.
ETypeData extract_e_type(const Ideal& i, int r);

/// Builds an N-type resolution directly from an ideal by resolving a linked
/// scheme and playing the mapping cone back (two quotients, one resolution).
NTypeData n_type_of(const Ideal& i, RandomPolicy policy = {});

/// Mapping-cone transform: from an E-type resolution of X and a complete
/// intersection inside I_X, the N-type resolution of the linked scheme.
NTypeData e_to_n_transform(const ETypeData& e, const CompleteIntersection& ci);

/// Inverse transform; uses the projection-based morphism when the input
/// carries provenance from e_to_n_transform with the same intersection,
/// otherwise lifts by division.
ETypeData n_to_e_transform(const NTypeData& n, const CompleteIntersection& ci);

/// Ext^i(E^v, O) = 0 for 0 < i < r, as finite length of the graded Ext.
bool verify_e_condition(const ETypeData& e);
/// Reflexive, Ext^i(N, O) = 0 and H^i_*(N^v) = 0 for 0 < i < r.
bool verify_n_condition(const NTypeData& n);

/// Exactness of the E-type sequence as graded modules, checked through
/// Hilbert series (the global-sections exactness of Remark-type data).
bool etype_sequence_exact(const ETypeData& e);
bool ntype_sequence_exact(const NTypeData& n);

/// Cancels split free pairs between E and the dissocie tail (and unit
/// relations inside E), producing a minimal E-type presentation.
ETypeData minimize_etype(const ETypeData& e);
NTypeData minimize_ntype(const NTypeData& n);

/// Purity criterion: extract an E-type resolution at level r and test the
/// Ext vanishing of its dual. Throws when codimension(i) < r.
bool is_pure_codimension(const Ideal& i, int r);

/// Associated primes of a monomial ideal (each as a sorted variable list),
/// by colon enumeration over divisors of the lcm of the generators.
/// Test oracle for the purity criterion.
std::vector<std::vector<int>> monomial_associated_primes(const Ideal& i);

/// Stable equivalence normal form: no free rank-1 summand splits off, and
/// the smallest generator degree is normalized to 0.
struct StableClass {
  explicit StableClass(const PolyRing& r) : normal_form(GradedModule::zero(r)) {}

  GradedModule normal_form;
  int twist_offset = 0;      // original = normal_form shifted by +offset
  std::vector<int> split_twists;

  bool is_zero() const { return normal_form.gens().rank() == 0; }
};

StableClass stable_normal_form(const GradedModule& m);

/// The Rao-correspondence invariant: the stable class of E from an E-type
/// resolution. Requires pure codimension two.
StableClass phi_invariant(const Ideal& i);

/// The class of the dual module (the image of the odd-linked class).
StableClass phi_dual_class(const StableClass& c);

bool stable_classes_equal(const StableClass& a, const StableClass& b, uint64_t seed = 0);

bool same_even_class(const Ideal& i, const Ideal& j, uint64_t seed = 0);

/// Equal cohomology tables over a shared window plus equal Phi class: the
/// checkable stand-in for "deforms with constant cohomology inside the class".
bool deformation_equivalent(const Ideal& i, const Ideal& j, uint64_t seed = 0);

/// Best-effort randomized search for an even chain of verified links from i
/// to j. Empty chain when the ideals already agree; nullopt on budget
/// exhaustion. Throws when the classes differ.
std::optional<std::vector<CompleteIntersection>> connect_even_linkage_heuristic(
    const Ideal& i, const Ideal& j, RandomPolicy policy = {});

/// Random homogeneous element of the degree-d piece of the ideal.
Polynomial random_element_of_degree(const Ideal& i, int d, std::mt19937_64& rng);

/// Random complete intersection of the given degrees inside the ideal,
/// verified to be a regular sequence; throws BudgetError past the retries.
CompleteIntersection random_ci_in_ideal(const Ideal& i, const std::vector<int>& degrees,
                                        RandomPolicy policy = {});

}  // namespace liaison

#endif
