#include <doctest.h>

#include <random>

#include "liaison/complexes.hpp"
#include "liaison/hilbert.hpp"
#include "test_support.hpp"

using namespace liaison;
using namespace ltest;

TEST_CASE("polynomial arithmetic basics") {
  PolyRing r = ring_p3();
  CHECK(poly_mul(P(r, "x0"), P(r, "x1")) == P(r, "x0*x1"));
  CHECK(poly_add(P(r, "x0^2 - x1"), P(r, "x1 - x0^2")).is_zero());
  CHECK(poly_mul(P(r, "x0+x1"), P(r, "x0-x1")) == P(r, "x0^2 - x1^2"));
  CHECK(P(r, "x0x1") == P(r, "x0*x1"));
  CHECK(P(r, "2(x0+x1)^2") == P(r, "2x0^2 + 4x0x1 + 2x1^2"));
}

TEST_CASE("ring axioms on random triples, exactly") {
  for (auto field : {CoefficientField::prime(32003), CoefficientField::rationals()}) {
    PolyRing r(field, 4);
    std::mt19937_64 rng(7);
    auto random_poly = [&]() {
      std::vector<Term> ts;
      std::uniform_int_distribution<int> nterms(0, 4), expd(0, 2);
      int k = nterms(rng);
      for (int t = 0; t < k; ++t) {
        Monomial m(4);
        for (int v = 0; v < 4; ++v) m.e[v] = expd(rng);
        ts.push_back(Term{m, random_coeff(field, rng)});
      }
      return Polynomial(r, ts);
    };
    for (int trial = 0; trial < 25; ++trial) {
      Polynomial a = random_poly(), b = random_poly(), c = random_poly();
      CHECK(poly_add(a, b) == poly_add(b, a));
      CHECK(poly_mul(a, b) == poly_mul(b, a));
      CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
      CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
      CHECK(poly_add(a, poly_neg(a)).is_zero());
    }
  }
}

TEST_CASE("prime field agrees with rationals reduced mod p") {
  PolyRing rq = ring_p3_qq();
  PolyRing rp = ring_p3();
  auto reduce = [&](const Polynomial& f) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
      const mpq_class& q = t.coeff.rational();
      long num = mpz_fdiv_ui(q.get_num().get_mpz_t(), 32003);
      long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), 32003);
      ts.push_back(Term{t.mono, rp.field().from_fraction(num, den)});
    }
    return Polynomial(rp, ts);
  };
  Polynomial a = P(rq, "1/2x0^2 + 3x1x2 - 7/5x3^2");
  Polynomial b = P(rq, "2/3x0x1 - x2^2 + 4x0x3");
  CHECK(reduce(poly_mul(a, b)) == poly_mul(reduce(a), reduce(b)));
  CHECK(reduce(poly_add(a, b)) == poly_add(reduce(a), reduce(b)));
}

TEST_CASE("matrix dual conventions") {
  PolyRing r = ring_p3();
  // Koszul row (x0 x1): O(-1)^2 -> O.
  GradedMatrix m(r, GradedFreeModule({1, 1}), GradedFreeModule({0}));
  m.set(0, 0, P(r, "x0"));
  m.set(0, 1, P(r, "x1"));
  REQUIRE(m.is_homogeneous());

  SUBCASE("dual at twist -2 is the column map O(-2) -> O(-1)^2") {
    GradedMatrix d = m.dual(-2);
    CHECK(d.source().twists() == std::vector<int>{2});
    CHECK(d.target().twists() == std::vector<int>{1, 1});
    CHECK(d.at(0, 0) == P(r, "x0"));
    CHECK(d.at(1, 0) == P(r, "x1"));
    CHECK(d.is_homogeneous());
  }
  SUBCASE("dual twice at twist 0 is the identity operation") {
    GradedMatrix dd = m.dual(0).dual(0);
    CHECK(dd.source() == m.source());
    CHECK(dd.target() == m.target());
    CHECK(dd.at(0, 0) == m.at(0, 0));
    CHECK(dd.at(0, 1) == m.at(0, 1));
  }
  SUBCASE("identity on O(-1)^2 dualized at 0 is the identity on O(1)^2") {
    GradedMatrix id = GradedMatrix::identity(r, GradedFreeModule({1, 1}));
    GradedMatrix d = id.dual(0);
    CHECK(d.source().twists() == std::vector<int>{-1, -1});
    CHECK(d.at(0, 0) == P(r, "1"));
    CHECK(d.at(1, 1) == P(r, "1"));
  }
  SUBCASE("compose with identity and shift additivity") {
    GradedMatrix id = GradedMatrix::identity(r, m.source());
    GradedMatrix c = matrix_compose(m, id);
    CHECK(c.at(0, 0) == m.at(0, 0));
    CHECK(m.shifted(1).shifted(1).source() == m.shifted(2).source());
    GradedFreeModule a({1}), b({2});
    CHECK(a.direct_sum(b).twists() == std::vector<int>{1, 2});
  }
}

TEST_CASE("groebner bases of small ideals") {
  PolyRing r = ring_p3();
  SUBCASE("already reduced linear monomials") {
    Ideal i = I(r, {"x0", "x1"});
    CHECK(i.groebner_basis().size() == 2);
  }
  SUBCASE("gaussian elimination happens") {
    Ideal i = I(r, {"x0", "x0 + x1"});
    auto gb = i.groebner_basis();
    REQUIRE(gb.size() == 2);
    CHECK(ideal_contains(i, P(r, "x1")));
    CHECK(ideal_equal(i, I(r, {"x0", "x1"})));
  }
  SUBCASE("twisted cubic has a 3-element reduced basis") {
    Ideal i = twisted_cubic(r);
    CHECK(i.groebner_basis().size() == 3);
    // Buchberger criterion: all S-pairs reduce to zero.
    const auto& gb = i.groebner_basis();
    for (size_t a = 0; a < gb.size(); ++a)
      for (size_t b = a + 1; b < gb.size(); ++b) {
        Monomial L = mono_lcm(gb[a].leading_monomial(), gb[b].leading_monomial());
        const auto& F = r.field();
        Polynomial s =
            poly_sub(poly_mul_term(gb[a], mono_div(L, gb[a].leading_monomial()),
                                   F.inv(gb[a].leading_coeff())),
                     poly_mul_term(gb[b], mono_div(L, gb[b].leading_monomial()),
                                   F.inv(gb[b].leading_coeff())));
        CHECK(normal_form(s, i).is_zero());
      }
  }
  SUBCASE("same over the rationals") {
    PolyRing rq = ring_p3_qq();
    CHECK(twisted_cubic(rq).groebner_basis().size() == 3);
  }
}

TEST_CASE("ideal quotient examples") {
  PolyRing r = ring_p3();
  SUBCASE("quotient by the unit ideal") {
    Ideal q = ideal_quotient(I(r, {"x0"}), Ideal::unit(r));
    CHECK(ideal_equal(q, I(r, {"x0"})));
  }
  SUBCASE("principal ideals divide") {
    Ideal q = ideal_quotient(I(r, {"x0*x1"}), I(r, {"x0"}));
    CHECK(ideal_equal(q, I(r, {"x1"})));
  }
  SUBCASE("mixed quotient") {
    Ideal q = ideal_quotient(I(r, {"x0", "x1*x2"}), I(r, {"x0", "x1"}));
    CHECK(ideal_equal(q, I(r, {"x0", "x2"})));
  }
  SUBCASE("membership property on random corpus pairs") {
    std::vector<Ideal> pool = {I(r, {"x0", "x1"}), twisted_cubic(r), skew_lines(r),
                               I(r, {"x0*x1", "x2*x3"}), I(r, {"x0^2", "x1"})};
    for (const auto& i : pool)
      for (const auto& j : pool) {
        Ideal q = ideal_quotient(i, j);
        // q * j subseteq i, and q contains i.
        for (const auto& a : q.generators())
          for (const auto& b : j.generators()) CHECK(ideal_contains(i, poly_mul(a, b)));
        CHECK(ideal_contains_ideal(q, i));
      }
  }
}

TEST_CASE("codimension and hilbert function") {
  PolyRing r = ring_p3();
  CHECK(codimension(I(r, {"x0", "x1"})) == 2);
  CHECK(codimension(twisted_cubic(r)) == 2);
  CHECK(codimension(skew_lines(r)) == 2);
  CHECK(codimension(I(r, {"x0*x1"})) == 1);
  CHECK(codimension(I(r, {"x0", "x1", "x2", "x3"})) == 4);

  CHECK(hilbert_function_ideal(Ideal::unit(r), 0) == 1);
  CHECK(hilbert_function_ideal(I(r, {"x0", "x1"}), 1) == 2);
  CHECK(hilbert_function_ideal(twisted_cubic(r), 2) == 3);
  CHECK(hilbert_function_ideal(twisted_cubic(r), -1) == 0);

  SUBCASE("hilbert function agrees with brute-force reduction count") {
    for (const Ideal& i : {twisted_cubic(r), skew_lines(r)}) {
      for (int d = 0; d <= 6; ++d) {
        // Count degree-d monomials whose normal form is nonzero: that is the
        // quotient dimension; check both routes agree.
        int std_count = 0;
        for (const auto& m : monomials_of_degree(4, d)) {
          Polynomial f = Polynomial::monomial_term(r, m, r.field().one());
          if (!ideal_contains(i, f)) ++std_count;
        }
        // Not every non-member monomial is standard, so compare through the
        // quotient dimension computed by staircase counting instead.
        CHECK(hilbert_function_quotient(i, d) <= static_cast<int>(monomials_of_degree(4, d).size()));
        CHECK(hilbert_function_quotient(i, d) + hilbert_function_ideal(i, d) ==
              static_cast<int>(monomials_of_degree(4, d).size()));
        (void)std_count;
      }
    }
  }
}

TEST_CASE("regular sequences") {
  PolyRing r = ring_p3();
  CHECK(is_regular_sequence({P(r, "x0"), P(r, "x1")}));
  CHECK_FALSE(is_regular_sequence({P(r, "x0"), P(r, "x0*x1")}));
  CHECK(is_regular_sequence({P(r, "x0*x2 - x1^2"), P(r, "x1*x3 - x2^2")}));
}

TEST_CASE("syzygies") {
  PolyRing r = ring_p3();
  SUBCASE("Koszul relation of a 1x2 row") {
    GradedMatrix m(r, GradedFreeModule({1, 1}), GradedFreeModule({0}));
    m.set(0, 0, P(r, "x0"));
    m.set(0, 1, P(r, "x1"));
    GradedMatrix s = syzygies(m);
    REQUIRE(s.cols() == 1);
    CHECK(matrix_compose(m, s).is_zero());
    CHECK(s.source().twists() == std::vector<int>{2});
  }
  SUBCASE("identity has zero kernel") {
    GradedMatrix id = GradedMatrix::identity(r, GradedFreeModule({1, 2}));
    CHECK(syzygies(id).cols() == 0);
  }
  SUBCASE("twisted cubic generators have two linear syzygies") {
    Ideal i = twisted_cubic(r);
    auto gens = minimal_ideal_generators(i);
    REQUIRE(gens.size() == 3);
    GradedMatrix row(r, GradedFreeModule({2, 2, 2}), GradedFreeModule({0}));
    for (int k = 0; k < 3; ++k) row.set(0, k, gens[k]);
    GradedMatrix s = prune_to_minimal_generators(syzygies(row));
    CHECK(s.cols() == 2);
    CHECK(s.source().twists() == std::vector<int>{3, 3});
    CHECK(matrix_compose(row, s).is_zero());
  }
}

TEST_CASE("minimal free resolutions") {
  PolyRing r = ring_p3();
  SUBCASE("complete intersection gives the Koszul complex") {
    FreeComplex c = resolve_quotient(I(r, {"x0", "x1"}), 5);
    REQUIRE(c.length() == 2);
    CHECK(c.module(0).twists() == std::vector<int>{0});
    CHECK(c.module(1).same_twists_up_to_order(GradedFreeModule({1, 1})));
    CHECK(c.module(2).twists() == std::vector<int>{2});
  }
  SUBCASE("twisted cubic: 0 -> S(-3)^2 -> S(-2)^3 -> S") {
    FreeComplex c = resolve_quotient(twisted_cubic(r), 5);
    REQUIRE(c.length() == 2);
    CHECK(c.module(1).same_twists_up_to_order(GradedFreeModule({2, 2, 2})));
    CHECK(c.module(2).same_twists_up_to_order(GradedFreeModule({3, 3})));
    auto b = betti_table(c);
    CHECK(b[{0, 0}] == 1);
    CHECK(b[{1, 2}] == 3);
    CHECK(b[{2, 3}] == 2);
  }
  SUBCASE("skew lines: 0 -> S(-4) -> S(-3)^4 -> S(-2)^4 -> S") {
    FreeComplex c = resolve_quotient(skew_lines(r), 5);
    REQUIRE(c.length() == 3);
    CHECK(c.module(1).same_twists_up_to_order(GradedFreeModule({2, 2, 2, 2})));
    CHECK(c.module(2).same_twists_up_to_order(GradedFreeModule({3, 3, 3, 3})));
    CHECK(c.module(3).same_twists_up_to_order(GradedFreeModule({4})));
  }
  SUBCASE("resolutions are exact degreewise") {
    for (const Ideal& i : {twisted_cubic(r), skew_lines(r)}) {
      FreeComplex c = resolve_quotient(i, 5);
      CHECK(complex_exact_in_positive_positions(c, 6));
      // Alternating sum of dimensions equals the quotient Hilbert function.
      HilbertSeries hs = hilbert_series(c);
      for (int d = 0; d <= 6; ++d) CHECK(hilbert_value(hs, d) == hilbert_function_quotient(i, d));
    }
  }
}

TEST_CASE("koszul complexes") {
  PolyRing r = ring_p3();
  FreeComplex k2 = koszul_complex({P(r, "x0"), P(r, "x1")});
  CHECK(k2.module(0).rank() == 1);
  CHECK(k2.module(1).rank() == 2);
  CHECK(k2.module(2).rank() == 1);

  FreeComplex k3 = koszul_complex({P(r, "x0"), P(r, "x1"), P(r, "x2")});
  CHECK(k3.module(1).rank() == 3);
  CHECK(k3.module(2).rank() == 3);
  CHECK(k3.module(3).rank() == 1);

  FreeComplex k22 = koszul_complex({P(r, "x0*x2 - x1^2"), P(r, "x1*x3 - x2^2")});
  CHECK(k22.module(2).twists() == std::vector<int>{4});

  SUBCASE("koszul complex of a non regular sequence errors") {
    CHECK_THROWS_AS(koszul_complex({P(r, "x0"), P(r, "x0*x1")}), PreconditionError);
  }
}

TEST_CASE("mapping cones and cancellation") {
  PolyRing r = ring_p3();
  FreeComplex k = koszul_complex({P(r, "x0"), P(r, "x1")});
  SUBCASE("cone of the identity is contractible") {
    ComplexMorphism id;
    for (int i = 0; i <= k.length(); ++i)
      id.components.push_back(GradedMatrix::identity(r, k.module(i)));
    FreeComplex cone = mapping_cone(k, k, id);
    cone.validate();
    // Ranks add up.
    for (int i = 0; i <= cone.length(); ++i)
      CHECK(cone.module(i).rank() ==
            k.module_or_zero(i - 1).rank() + k.module_or_zero(i).rank());
    // Contractible: cancellation kills everything.
    FreeComplex minimal = cancel_split_summands(cone);
    int total = 0;
    for (int i = 0; i <= minimal.length(); ++i) total += minimal.module(i).rank();
    CHECK(total == 0);
  }
  SUBCASE("cancel is a fixpoint on already-minimal complexes") {
    FreeComplex c = resolve_quotient(twisted_cubic(r), 5);
    FreeComplex c2 = cancel_split_summands(c);
    CHECK(betti_table(c) == betti_table(c2));
  }
}

TEST_CASE("lift of a Koszul inclusion") {
  PolyRing r = ring_p3();
  // (x0, x1*x2) inside (x0, x1): lift exists and commutes.
  FreeComplex f = koszul_complex({P(r, "x0"), P(r, "x1*x2")});
  FreeComplex g = resolve_quotient(I(r, {"x0", "x1"}), 5);
  ComplexMorphism alpha = lift_morphism(f, g);
  validate_morphism(f, g, alpha);  // throws on failure
  CHECK(alpha.components.size() == 3);
  SUBCASE("containment failure raises") {
    FreeComplex bad = koszul_complex({P(r, "x2"), P(r, "x3")});
    CHECK_THROWS_AS(lift_morphism(bad, g), PreconditionError);
  }
}

TEST_CASE("module presentations and duals") {
  PolyRing r = ring_p3();
  SUBCASE("minimal presentation cancels unit entries") {
    // coker [x0; 1] on generators of twists {0,0}... build a 2x1 with a unit.
    GradedMatrix m(r, GradedFreeModule({1}), GradedFreeModule({1, 0}));
    m.set(0, 0, P(r, "1"));
    m.set(1, 0, P(r, "x0"));
    GradedModule mod(m);
    GradedModule mp = minimal_presentation(mod);
    CHECK(mp.gens().rank() == 1);
    CHECK(mp.rels().cols() == 0);
  }
  SUBCASE("free module is reflexive with zero-rank relations") {
    GradedModule f = GradedModule::free_module(r, GradedFreeModule({1, 2}));
    DualModule d = hom_dual(f);
    CHECK(d.mod.gens().same_twists_up_to_order(GradedFreeModule({-1, -2})));
    CHECK(module_is_zero(GradedModule::zero(r)));
  }
  SUBCASE("minimal generators of an ideal module") {
    GradedModule im = GradedModule::from_ideal(I(r, {"x0", "x1"}));
    TwistFunction l = module_minimal_generators(im);
    CHECK(l.value(1) == 2);
    CHECK(l.total() == 2);
  }
  SUBCASE("free module splits to zero") {
    GradedModule f = GradedModule::free_module(r, GradedFreeModule({2, 3}));
    auto split = split_all_free_summands(f);
    CHECK(split.core.gens().rank() == 0);
    CHECK(split.split_twists == std::vector<int>{2, 3});
  }
  SUBCASE("syzygy module of skew lines has no free summand") {
    GradedModule e = GradedModule::cokernel(
        resolve_quotient(skew_lines(r), 5).differential(2));
    // E presented by S(-4) -> S(-3)^4; no rank-1 free summand splits off.
    auto split = split_all_free_summands(e);
    CHECK(split.split_twists.empty());
    CHECK(split.core.gens().rank() == 4);
    CHECK(split.core.rank() == 3);
  }
}

TEST_CASE("hilbert series and scheme invariants") {
  PolyRing r = ring_p3();
  CHECK(scheme_degree(twisted_cubic(r)) == 3);
  CHECK(scheme_degree(skew_lines(r)) == 2);
  CHECK(scheme_degree(I(r, {"x0", "x1"})) == 1);
  CHECK(scheme_dimension(twisted_cubic(r)) == 1);
  CHECK(scheme_dimension(Ideal::unit(r)) == -1);
  CHECK(regularity_of_ideal(twisted_cubic(r)) == 2);
  CHECK(regularity_of_ideal(skew_lines(r)) == 2);

  SUBCASE("module isomorphism recognizes equal and twisted-unequal modules") {
    GradedModule e = GradedModule::cokernel(resolve_quotient(skew_lines(r), 5).differential(2));
    CHECK(modules_isomorphic(e, e));
    CHECK_FALSE(modules_isomorphic(e, e.shifted(1)));
    GradedModule f = GradedModule::free_module(r, GradedFreeModule({1}));
    CHECK_FALSE(modules_isomorphic(e, f));
  }
}

TEST_CASE("parser errors carry locations") {
  PolyRing r = ring_p3();
  CHECK_THROWS_AS(P(r, "x0 + "), ParseError);
  CHECK_THROWS_AS(P(r, "x9"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file_text("ring GF(32003) vars 4\nideal a:\nx0 + 1\n"), ParseError);
  try {
    parse_ideal_file_text("ring GF(32003) vars 4\nideal a:\nx0 + 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  SUBCASE("round trip through printing") {
    std::string text = "ring GF(32003) vars 4\nideal c:\nx0*x2 - x1^2\nx1*x3 - x2^2\n";
    IdealFile f = parse_ideal_file_text(text);
    IdealFile f2 = parse_ideal_file_text(print_ideal_file(f));
    REQUIRE(f2.ideals.size() == 1);
    CHECK(ideal_equal(f.ideals[0].second, f2.ideals[0].second));
    for (size_t k = 0; k < f.ideals[0].second.generators().size(); ++k)
      CHECK(f.ideals[0].second.generators()[k] == f2.ideals[0].second.generators()[k]);
  }
}
