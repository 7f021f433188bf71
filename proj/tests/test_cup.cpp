#include <gtest/gtest.h>

#include "hochcat/cup.hpp"
#include "hochcat/random.hpp"

using namespace hochcat;

namespace {

template <class S>
AlgebraSpec<S> find_spec(const std::string& name, S proto) {
  for (auto& s : catalog_specs<S>(proto))
    if (s.name == name) return s;
  throw std::runtime_error("no such spec");
}

template <class S>
Cochain<S> random_cochain(Rng& rng, const RingObject<S>& r, int k) {
  long dom = 1;
  for (int i = 0; i < k; ++i) dom *= r.dim();
  return make_cochain(r, k, random_mat(rng, r.dim(), (int)dom, r.inst->proto()));
}

RingObject<Fp> ring_f7(int dim_choice, long c = 1) {
  Fp proto(0, 7);
  auto specs = catalog_specs<Fp>(proto);
  // dim 2: dual numbers; dim 3: truncated polynomials
  auto spec = dim_choice == 2 ? find_spec("dual", proto) : find_spec("trunc3", proto);
  return make_ring(spec, proto, Fp(c, 7));
}

}  // namespace

TEST(InsertAt, DegreeOneIsComposition) {
  Rng rng(21);
  RingObject<Fp> r = ring_f7(2);
  Cochain<Fp> f = random_cochain(rng, r, 1), g = random_cochain(rng, r, 1);
  EXPECT_EQ(insert_at(f, g, 1).mor.mat, compose(f.mor, g.mor).mat);
}

TEST(InsertAt, IdentityCochainIsNeutral) {
  Rng rng(22);
  RingObject<Fp> r = ring_f7(3, 2);
  Cochain<Fp> one{r, 1, identity_mor(r.inst, r.atom)};
  for (int m = 1; m <= 3; ++m) {
    Cochain<Fp> f = random_cochain(rng, r, m);
    for (int i = 1; i <= m; ++i) {
      Cochain<Fp> out = insert_at(f, one, i);
      EXPECT_EQ(out.mor.mat, f.mor.mat) << "m=" << m << " i=" << i;
      EXPECT_EQ(out.mor.dom, f.mor.dom);
    }
  }
}

TEST(InsertAt, DomainIsLeftNested) {
  Rng rng(23);
  RingObject<Fp> r = ring_f7(2);
  Cochain<Fp> f = random_cochain(rng, r, 3), g = random_cochain(rng, r, 2);
  Cochain<Fp> out = insert_at(f, g, 2);
  EXPECT_EQ(out.degree, 4);
  EXPECT_EQ(out.mor.dom, left_nested(r.atom, 4));
  EXPECT_THROW(insert_at(f, g, 0), DegreeOutOfRange);
  EXPECT_THROW(insert_at(f, g, 4), DegreeOutOfRange);
  Cochain<Fp> zero_deg = make_cochain(r, 0, random_mat(rng, 2, 1, Fp(0, 7)));
  EXPECT_THROW(insert_at(f, zero_deg, 1), DegreeOutOfRange);
}

TEST(ComposeProduct, SingleTermAtDegreeOne) {
  Rng rng(24);
  RingObject<Fp> r = ring_f7(2);
  Cochain<Fp> f = random_cochain(rng, r, 1), g = random_cochain(rng, r, 3);
  EXPECT_EQ(compose_product(f, g).mor.mat, insert_at(f, g, 1).mor.mat);
  EXPECT_EQ(compose_product(f, g).degree, 3);
}

TEST(ComposeProduct, MuTimesFExpansion) {
  // mu . f = mu (f x 1) + (-1)^{m-1} mu (1 x f) a^{0,1}
  Rng rng(25);
  RingObject<Fp> r = ring_f7(3);
  for (int m = 1; m <= 3; ++m) {
    Cochain<Fp> f = random_cochain(rng, r, m);
    Cochain<Fp> lhs = compose_product(mul_cochain(r), f);
    Morphism<Fp> idr = identity_mor(r.inst, r.atom);
    Morphism<Fp> t1 = compose(r.mul, tensor_mor(f.mor, idr));
    Morphism<Fp> t2 = compose(r.mul, tensor_mor(idr, f.mor), regroup(r.inst, r.atom, 0, 1, m + 1));
    Morphism<Fp> rhs = (m - 1) % 2 == 0 ? t1 + t2 : t1 - t2;
    EXPECT_EQ(lhs.mor.mat, rhs.mat) << m;
  }
}

TEST(Cup, UnitLemmaAllDegrees) {
  Rng rng(26);
  for (long c : {1L, 3L}) {
    RingObject<Fp> r = ring_f7(2, c);
    Cochain<Fp> e{r, 0, r.unit};
    for (int n = 0; n <= 3; ++n) {
      Cochain<Fp> f = random_cochain(rng, r, n);
      EXPECT_EQ(cup(e, f).mor.mat, f.mor.mat) << "left unit, n=" << n << " c=" << c;
      EXPECT_EQ(cup(f, e).mor.mat, f.mor.mat) << "right unit, n=" << n << " c=" << c;
    }
  }
}

TEST(Cup, DegreeOnePairIsPlainProduct) {
  Rng rng(27);
  RingObject<Fp> r = ring_f7(2);
  Cochain<Fp> f = random_cochain(rng, r, 1), g = random_cochain(rng, r, 1);
  EXPECT_EQ(cup(f, g).mor.mat, compose(r.mul, tensor_mor(f.mor, g.mor)).mat);
}

TEST(Cup, ScalarsMultiplyOnTheOneDimensionalAlgebra) {
  RingObject<Rat> r = make_ring(find_spec("k", Rat()), Rat(), Rat(1));
  Mat<Rat> fa(1, 1, Rat()), fb(1, 1, Rat());
  fa.at(0, 0) = Rat(3, 2);
  fb.at(0, 0) = Rat(4, 5);
  Cochain<Rat> a = make_cochain(r, 0, fa), b = make_cochain(r, 0, fb);
  EXPECT_EQ(cup(a, b).mor.mat.at(0, 0), Rat(6, 5));
}

TEST(Cup, AssociativeAtCochainLevel) {
  Rng rng(28);
  RingObject<Fp> r = ring_f7(2, 3);
  for (int t = 0; t < 6; ++t) {
    int m = 1 + (int)draw(rng, 2), n = 1 + (int)draw(rng, 2), p = 1 + (int)draw(rng, 2);
    Cochain<Fp> f = random_cochain(rng, r, m), g = random_cochain(rng, r, n), h = random_cochain(rng, r, p);
    EXPECT_EQ(cup(cup(f, g), h).mor.mat, cup(f, cup(g, h)).mor.mat);
  }
}

TEST(Bracket, DegreeOnePairConventions) {
  Rng rng(29);
  RingObject<Fp> r = ring_f7(2);
  Cochain<Fp> f = random_cochain(rng, r, 1), g = random_cochain(rng, r, 1);
  Mat<Fp> commutator = compose(f.mor, g.mor).mat - compose(g.mor, f.mor).mat;
  Mat<Fp> anticommutator = compose(f.mor, g.mor).mat + compose(g.mor, f.mor).mat;
  EXPECT_EQ(gerstenhaber_bracket(f, g).mor.mat, commutator);
  EXPECT_EQ(gerstenhaber_bracket(f, g, SignConvention::PaperLiteral).mor.mat, anticommutator);
}

TEST(Bracket, OfCocyclesIsACocycle) {
  // brackets of derivations are derivations, across a couple of algebras
  for (auto& name : {"dual", "t2", "m2"}) {
    RingObject<Rat> r = make_ring(find_spec(name, Rat()), Rat(), Rat(1));
    auto ders = derivations(r);
    for (auto& f : ders)
      for (auto& g : ders) {
        Cochain<Rat> br = gerstenhaber_bracket(f, g);
        EXPECT_TRUE(differential(br).mor.is_zero()) << name;
      }
  }
}

TEST(PreLie, AxiomsHoldOnRandomTriples) {
  Rng rng(31);
  int checked = 0;
  for (int t = 0; t < 25; ++t) {
    RingObject<Fp> r = ring_f7(2 + (int)draw(rng, 2), 1 + (int)draw(rng, 2));
    int m = 1 + (int)draw(rng, 3), n = 1 + (int)draw(rng, 3), p = 1 + (int)draw(rng, 3);
    Cochain<Fp> f = random_cochain(rng, r, m), g = random_cochain(rng, r, n), h = random_cochain(rng, r, p);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m + n - 1; ++j) {
        Cochain<Fp> defect = verify_prelie_axioms(f, g, h, i, j);
        EXPECT_TRUE(defect.mor.is_zero()) << "m,n,p=" << m << n << p << " i=" << i << " j=" << j;
        ++checked;
      }
  }
  EXPECT_GT(checked, 100);
}

TEST(PreLie, SlotPairOutsideEveryRule) {
  Rng rng(32);
  RingObject<Fp> r = ring_f7(2);
  Cochain<Fp> f = random_cochain(rng, r, 2), g = random_cochain(rng, r, 2), h = random_cochain(rng, r, 2);
  EXPECT_THROW(verify_prelie_axioms(f, g, h, 1, 4), IndexOutOfRange);  // j > m+n-1
  EXPECT_THROW(verify_prelie_axioms(f, g, h, 0, 1), IndexOutOfRange);
  EXPECT_NO_THROW(verify_prelie_axioms(f, g, h, 2, 1));
}

TEST(PreLie, DifferenceAndSymmetryFormulas) {
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    RingObject<Fp> r = ring_f7(2 + (int)draw(rng, 2));
    int m = 1 + (int)draw(rng, 2), n = 1 + (int)draw(rng, 2), p = 1 + (int)draw(rng, 2);
    Cochain<Fp> f = random_cochain(rng, r, m), g = random_cochain(rng, r, n), h = random_cochain(rng, r, p);
    EXPECT_TRUE(prelie_difference_defect(f, g, h).mor.is_zero());
    EXPECT_TRUE(prelie_symmetry_defect(f, g, h).mor.is_zero());
  }
}

TEST(Identities, RandomPairsOverF5) {
  Rng rng(34);
  Fp proto(0, 5);
  RingObject<Fp> r = make_ring(find_spec("dual", proto), proto, Fp(1, 5));
  for (int t = 0; t < 5; ++t) {
    Cochain<Fp> f = random_cochain(rng, r, 2), g = random_cochain(rng, r, 2);
    IdentityDefects<Fp> defects = verify_identities(f, g);
    EXPECT_TRUE(defects.all_zero());
  }
  // the small degree-(1,1) instantiation of the homotopy formula
  for (int t = 0; t < 5; ++t) {
    Cochain<Fp> f = random_cochain(rng, r, 1), g = random_cochain(rng, r, 1);
    EXPECT_TRUE(verify_identities(f, g).all_zero());
  }
}

TEST(Identities, CocyclePairCommutatorFormula) {
  // degree-1 cocycles: d(f.g) = (-1)^n (g cup f - (-1)^{mn} f cup g), exactly
  RingObject<Rat> r = make_ring(find_spec("dual", Rat()), Rat(), Rat(1));
  auto ders = derivations(r);
  ASSERT_FALSE(ders.empty());
  for (auto& f : ders)
    for (auto& g : ders) {
      IdentityDefects<Rat> defects = verify_identities(f, g);
      EXPECT_TRUE(defects.cocycle_commutator.mor.is_zero());
      Cochain<Rat> lhs = differential(compose_product(f, g));
      Cochain<Rat> rhs = cup(g, f) - cup(f, g);  // m = n = 1: (-1)^n = -1, (-1)^{mn} = -1
      EXPECT_EQ(lhs.mor.mat, (-rhs).mor.mat);
    }
}

TEST(Identities, DifferentialViaInsertionsMatchesMatrixColumns) {
  for (long c : {1L, 2L}) {
    RingObject<Rat> r = make_ring(find_spec("kxk", Rat()), Rat(), Rat(c));
    for (int m = 1; m <= 3; ++m) {
      Mat<Rat> dm = differential_matrix(r, m);
      for (long j = 0; j < cochain_dim(r.dim(), m); ++j) {
        std::vector<Rat> col = differential_via_insertions(basis_cochain(r, m, j)).vec();
        for (int i = 0; i < (int)col.size(); ++i) ASSERT_EQ(dm.at(i, (int)j), col[i]);
      }
    }
  }
}

TEST(CupOnCohomology, UnitClassIsNeutral) {
  RingObject<Rat> r = make_ring(find_spec("dual", Rat()), Rat(), Rat(1));
  CochainComplex<Rat> cx(r, 4);
  Cochain<Rat> e{r, 0, r.unit};
  std::vector<Rat> e_coords = cx.class_coords(0, e.vec());
  CohomologyClass<Rat> ebar{0, e, e_coords};
  for (int k = 0; k <= 3; ++k) {
    for (auto& cls : cohomology(cx, k).basis) {
      CohomologyClass<Rat> prod = cup_on_cohomology(cx, ebar, cls);
      EXPECT_EQ(prod.coords, cls.coords) << "k=" << k;
    }
  }
}

TEST(CupOnCohomology, IdempotentTableOnProductField) {
  RingObject<Rat> r = make_ring(find_spec("kxk", Rat()), Rat(), Rat(1));
  CochainComplex<Rat> cx(r, 2);
  auto h0 = cohomology(cx, 0);
  ASSERT_EQ(h0.dim, 2);
  // representatives are the idempotent coordinates e1, e2
  auto p11 = cup_on_cohomology(cx, h0.basis[0], h0.basis[0]);
  auto p12 = cup_on_cohomology(cx, h0.basis[0], h0.basis[1]);
  EXPECT_EQ(p11.coords[0], Rat(1));
  EXPECT_EQ(p11.coords[1], Rat(0));
  EXPECT_EQ(p12.coords[0], Rat(0));
  EXPECT_EQ(p12.coords[1], Rat(0));
}

TEST(CupOnCohomology, IndependentOfRepresentative) {
  RingObject<Rat> r = make_ring(find_spec("dual", Rat()), Rat(), Rat(1));
  CochainComplex<Rat> cx(r, 4);
  auto h1 = cohomology(cx, 1);
  ASSERT_EQ(h1.dim, 1);
  auto h2 = cohomology(cx, 2);
  CohomologyClass<Rat> cls = h1.basis[0];
  // shift the representative by a coboundary d^0(v)
  std::vector<Rat> v(cx.dim_c(0), Rat());
  v[1] = Rat(7, 3);
  Mat<Rat> shift = cx.d_mat(0) * Mat<Rat>::from_columns((int)v.size(), {v}, Rat());
  std::vector<Rat> shifted = cls.representative.vec();
  for (int i = 0; i < (int)shifted.size(); ++i) shifted[i] += shift.at(i, 0);
  CohomologyClass<Rat> moved{1, cochain_from_vec(r, 1, shifted), cls.coords};
  auto a = cup_on_cohomology(cx, cls, h1.basis[0]);
  auto b = cup_on_cohomology(cx, moved, h1.basis[0]);
  EXPECT_EQ(a.coords, b.coords);
}

TEST(CupOnCohomology, GradedCommutativityOnSamples) {
  // defect g cup f - (-1)^{mn} f cup g lies in the image of d^{m+n-1}
  Fp proto(0, 2);
  RingObject<Fp> r = make_ring(find_spec("dual", proto), proto, Fp(1, 2));
  CochainComplex<Fp> cx(r, 4);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n + m <= 3; ++n) {
      auto hm = cohomology(cx, m), hn = cohomology(cx, n);
      for (auto& a : hm.basis)
        for (auto& b : hn.basis) {
          Cochain<Fp> defect = (m * n) % 2 == 0
                                   ? cup(b.representative, a.representative) - cup(a.representative, b.representative)
                                   : cup(b.representative, a.representative) + cup(a.representative, b.representative);
          int k = m + n;
          if (k == 0) {
            EXPECT_TRUE(defect.mor.is_zero());
          } else {
            auto in_im = membership(defect.vec(), cx.reduced(k - 1).image_basis, proto);
            EXPECT_TRUE(in_im.has_value()) << "m=" << m << " n=" << n;
          }
        }
    }
}
