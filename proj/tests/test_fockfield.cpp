#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/field.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace wqt;
using wqt_test::Rng;

namespace {

Monomial qts(long a, long b) { return Monomial::qt(a, b); }

GenFactor gf(Family f, long i, Monomial s = Monomial(), int e = 1) {
  return GenFactor{f, i, s, e};
}

RatFun rm(long a, long b, long c = 1) { return RatFun::monomial(a, b, Rat(c)); }

LaurentPoly lm(long a, long b, long c = 1) { return LaurentPoly::monomial(a, b, Rat(c)); }

// q^n - q^-n and t - t^-1
RatFun qd(long n) { return rm(n, 0) - rm(-n, 0); }
RatFun td() { return rm(0, 1) - rm(0, -1); }

using KMap = std::map<std::pair<long, long>, long>;

// first sum of the rank-two odd orthogonal table, term by term
struct B2Fixture {
  FieldAlgebra fa;
  ElementaryField L1, L2, L0, L2b, L1b;
  RatFun pref0;

  B2Fixture() : fa(build_algebra(Series::B, 2)) {
    L1 = fa.generator(Family::Y, 1);
    L2 = fa.product({gf(Family::Y, 2, qts(-1, 1)), gf(Family::Y, 2, qts(-3, 1)),
                     gf(Family::Y, 1, qts(-4, 2), -1)});
    pref0 = RatFun((lm(1, 0) + lm(-1, 0)) * (lm(1, -1) - lm(-1, 1)),
                   lm(2, -1) - lm(-2, 1));
    L0 = fa.product({gf(Family::Y, 2, qts(-1, 1)), gf(Family::Y, 2, qts(-5, 3), -1)});
    L0.pref = pref0;
    L2b = fa.product({gf(Family::Y, 1, qts(-2, 2)), gf(Family::Y, 2, qts(-3, 3), -1),
                      gf(Family::Y, 2, qts(-5, 3), -1)});
    L1b = fa.product({gf(Family::Y, 1, qts(-6, 4), -1)});
  }

  FieldSum t1() const {
    FieldSum T;
    T.add(L1);
    T.add(L2);
    T.add(L0);
    T.add(L2b);
    T.add(L1b);
    return T;
  }
  std::vector<std::string> labels() const { return {"L1", "L2", "L0", "L2bar", "L1bar"}; }
};

// twisted rank-one sum
struct TwFixture {
  FieldAlgebra fa;
  ElementaryField L1, L0, L1b;
  RatFun pref0;

  TwFixture() : fa(build_algebra(Series::A2twisted, 1)) {
    L1 = fa.generator(Family::Y, 1);
    pref0 = RatFun(lm(0, 0) - lm(-2, -1), lm(0, 0) - lm(2, -1));
    L0 = fa.product({gf(Family::Y, 1, qts(-2, 1)), gf(Family::Y, 1, qts(-4, 2), -1)});
    L0.pref = pref0;
    L1b = fa.product({gf(Family::Y, 1, qts(-6, 3), -1)});
    L1b.pref = rm(-4, 0);
  }

  FieldSum t1() const {
    FieldSum T;
    T.add(L1);
    T.add(L0);
    T.add(L1b);
    return T;
  }
  std::vector<std::string> labels() const { return {"L1", "L0", "L1bar"}; }
};

const ScreeningGroup* find_group(const ScreeningReport& rep, const ElementaryField& shape) {
  for (const auto& g : rep.groups)
    if (g.shape.same_shape(shape)) return &g;
  return nullptr;
}

const ScreeningContribution* find_part(const ScreeningGroup& g, const std::string& src) {
  for (const auto& p : g.parts)
    if (p.source == src) return &p;
  return nullptr;
}

}  // namespace

TEST_CASE("mode pairings match the generator brackets") {
  FieldAlgebra fa(build_algebra(Series::B, 2));  // r = (2, 1)

  SUBCASE("screening against weight generators") {
    CHECK(fa.pairing_poly(Family::Sminus, 1, Family::Y, 1).p == qd(2));
    CHECK(fa.pairing_poly(Family::Sminus, 2, Family::Y, 2).p == qd(1));
    CHECK(fa.pairing_poly(Family::Sminus, 1, Family::Y, 2).p.is_zero());
    CHECK(fa.pairing_poly(Family::Splus, 1, Family::Y, 1).p == td());
    CHECK(fa.pairing_poly(Family::Splus, 2, Family::Y, 1).p.is_zero());
    CHECK(fa.pairing_poly(Family::Y, 1, Family::Sminus, 1).p == -qd(2));
    CHECK(fa.pairing_poly(Family::Y, 2, Family::Splus, 2).p == -td());
  }

  SUBCASE("screening against root generators") {
    // (q - q^-1) B_ij and (t - t^-1) C_ij
    const FunMat& X = fa.row_transform();
    CHECK(fa.pairing_poly(Family::Sminus, 2, Family::A, 1).p ==
          qd(1) * (-(rm(1, 0) + rm(-1, 0))));
    CHECK(fa.pairing_poly(Family::Splus, 2, Family::A, 2).p ==
          td() * (rm(1, -1) + rm(-1, 1)));
    CHECK(fa.pairing_poly(Family::Splus, 1, Family::Sminus, 2).p == rm(0, 0));
    CHECK(fa.pairing_poly(Family::Sminus, 2, Family::Splus, 1).p == -X[1][0]);
    CHECK(fa.pairing_poly(Family::Splus, 2, Family::Sminus, 1).p ==
          rm(1, 0) + rm(-1, 0));
  }

  SUBCASE("weight currents") {
    CHECK(fa.pairing_poly(Family::Vplus, 1, Family::A, 1).p == td());
    CHECK(fa.pairing_poly(Family::Vplus, 1, Family::A, 2).p.is_zero());
    CHECK(fa.pairing_poly(Family::Vminus, 2, Family::A, 2).p == qd(1));
    CHECK(fa.pairing_poly(Family::Splus, 1, Family::Vminus, 1).p == -rm(0, 0));
    CHECK(fa.pairing_poly(Family::Sminus, 1, Family::Vplus, 1).p == -rm(0, 0));
    CHECK(fa.pairing_poly(Family::Vplus, 1, Family::Sminus, 1).p == -rm(0, 0));
    CHECK(fa.pairing_poly(Family::Vminus, 1, Family::Splus, 1).p == -rm(0, 0));
    CHECK(fa.pairing_poly(Family::Vplus, 2, Family::Sminus, 1).p.is_zero());
  }

  SUBCASE("rationality flags") {
    CHECK(fa.pairing_poly(Family::Y, 1, Family::Y, 1).rational);
    CHECK(fa.pairing_poly(Family::Y, 1, Family::Y, 2).rational);
    CHECK(fa.pairing_poly(Family::Y, 1, Family::Vplus, 2).rational);
    CHECK(fa.pairing_poly(Family::Sminus, 1, Family::Sminus, 1).rational);
    CHECK(fa.pairing_poly(Family::Splus, 1, Family::Splus, 2).rational);
    CHECK_FALSE(fa.pairing_poly(Family::Splus, 1, Family::Sminus, 2).rational);
    CHECK_FALSE(fa.pairing_poly(Family::A, 1, Family::A, 2).rational);
    // orthogonal screening pair: zero polynomial, not a rational pairing
    FieldAlgebra a3(build_algebra(Series::A, 3));
    Pairing p = a3.pairing_poly(Family::Splus, 1, Family::Splus, 3);
    CHECK_FALSE(p.rational);
    CHECK(p.p.is_zero());
  }

  SUBCASE("exchange symmetry under inverting both variables") {
    std::vector<Family> fams = {Family::Y,      Family::A,     Family::Splus,
                                Family::Sminus, Family::Vplus, Family::Vminus};
    for (Family f1 : fams)
      for (Family f2 : fams)
        for (long i = 1; i <= 2; ++i)
          for (long j = 1; j <= 2; ++j)
            CHECK(fa.pairing_poly(f1, i, f2, j).p ==
                  fa.pairing_poly(f2, j, f1, i).p.invert_vars());
  }

  SUBCASE("twisted brackets use the doubled node lengths") {
    FieldAlgebra tw(build_algebra(Series::A2twisted, 1));
    CHECK(tw.pairing_poly(Family::Y, 1, Family::Sminus, 1).p == -qd(2));
    CHECK(tw.pairing_poly(Family::Y, 1, Family::Splus, 1).p == -td());
    CHECK(tw.pairing_poly(Family::A, 1, Family::A, 1).p ==
          qd(1) * td() * (rm(1, 0) + rm(-1, 0)) * (rm(2, -1) - rm(0, 0) + rm(-2, 1)));
  }
}

TEST_CASE("closed contraction kernels") {
  B2Fixture fx;
  ElementaryField Sm2 = fx.fa.generator(Family::Sminus, 2);

  SUBCASE("kernels of the table fields against the down screening") {
    ContractionKernel K = fx.fa.contraction_kernel(fx.L2, Sm2);
    REQUIRE(K.closed);
    CHECK(K.prefix == qts(4, 0));
    CHECK(K.zpow == BGrad());
    CHECK(K.factors == KMap{{{0, -1}, 1}, {{4, -1}, -1}});

    ContractionKernel Kr = fx.fa.contraction_kernel(Sm2, fx.L2);
    REQUIRE(Kr.closed);
    CHECK(Kr.prefix == Monomial());
    CHECK(Kr.factors == KMap{{{0, 1}, 1}, {{-4, 1}, -1}});

    ContractionKernel K0 = fx.fa.contraction_kernel(fx.L0, Sm2);
    CHECK(K0.prefix == Monomial());
    CHECK(K0.factors ==
          KMap{{{0, -1}, 1}, {{2, -1}, -1}, {{4, -3}, -1}, {{6, -3}, 1}});

    ContractionKernel K2b = fx.fa.contraction_kernel(fx.L2b, Sm2);
    CHECK(K2b.prefix == qts(-4, 0));
    CHECK(K2b.factors == KMap{{{2, -3}, -1}, {{6, -3}, 1}});
  }

  SUBCASE("distinct nodes with no bond contract trivially") {
    ContractionKernel K = fx.fa.contraction_kernel(
        fx.fa.generator(Family::Y, 1), fx.fa.generator(Family::A, 2, Monomial(), -1));
    REQUIRE(K.closed);
    CHECK(K.factors.empty());
    CHECK(K.prefix == Monomial());
    CHECK(K.zpow == BGrad());
  }

  SUBCASE("weight against root current on one node") {
    ContractionKernel K = fx.fa.contraction_kernel(fx.fa.generator(Family::Y, 1),
                                                   fx.fa.generator(Family::A, 1));
    REQUIRE(K.closed);
    CHECK(K.factors ==
          KMap{{{2, 1}, -1}, {{2, -1}, 1}, {{-2, 1}, 1}, {{-2, -1}, -1}});
  }

  SUBCASE("fractional relative shifts are rejected") {
    ElementaryField half = fx.fa.generator(Family::Y, 1, Monomial(Rat(1, 2), Rat(0)), 1);
    CHECK_THROWS_AS(fx.fa.contraction_kernel(half, fx.fa.generator(Family::Sminus, 1)),
                    NonExpandable);
  }
}

TEST_CASE("series kernels for rational pairings") {
  FieldAlgebra fa(build_algebra(Series::A, 1), 8);
  ElementaryField Y1 = fa.generator(Family::Y, 1);
  ContractionKernel K = fa.contraction_kernel(Y1, Y1);
  REQUIRE_FALSE(K.closed);
  CHECK(K.series.lo() == 0);
  CHECK(K.series.hi() == 8);
  CHECK(K.prefix == Monomial());
  CHECK(K.zpow == BGrad());
  // independent low orders of exp(sum_n P(q^n, t^n) x^n / n)
  RatFun P(qd(1).num() * td().num(), lm(1, -1) + lm(-1, 1));
  CHECK(K.series.coeff(0) == RatFun(1));
  CHECK(K.series.coeff(1) == P);
  CHECK(K.series.coeff(2) == (P.substitute_modes(2) + P * P) / RatFun(2));
  RatFun c3 = P.substitute_modes(3) / RatFun(3) + P.substitute_modes(2) * P / RatFun(2) +
              P * P * P / RatFun(6);
  CHECK(K.series.coeff(3) == c3);
}

TEST_CASE("locality of ordered products") {
  B2Fixture fx;

  SUBCASE("weight and root currents are local against everything closed") {
    std::vector<FieldAlgebra> algebras;
    algebras.emplace_back(build_algebra(Series::B, 2));
    algebras.emplace_back(build_algebra(Series::C, 2));
    algebras.emplace_back(build_algebra(Series::A2twisted, 2));
    Rng rng(20260822u);
    for (const FieldAlgebra& fa : algebras) {
      for (int it = 0; it < 40; ++it) {
        Family ff = rng.range(0, 1) ? Family::A : Family::Y;
        std::vector<Family> gs;
        if (ff == Family::A)
          gs = {Family::Y,      Family::A,     Family::Splus,
                Family::Sminus, Family::Vplus, Family::Vminus};
        else
          gs = {Family::A, Family::Splus, Family::Sminus};
        Family gg = gs[static_cast<size_t>(rng.range(0, static_cast<long>(gs.size()) - 1))];
        ElementaryField F = fa.generator(ff, rng.range(1, 2),
                                         qts(rng.range(-2, 2), rng.range(-2, 2)),
                                         rng.range(0, 1) ? 1 : -1);
        ElementaryField G = fa.generator(gg, rng.range(1, 2),
                                         qts(rng.range(-2, 2), rng.range(-2, 2)),
                                         rng.range(0, 1) ? 1 : -1);
        CHECK(fa.kernel_locality_check(F, G));
      }
    }
  }

  SUBCASE("table fields against screenings") {
    ElementaryField Sm2 = fx.fa.generator(Family::Sminus, 2);
    CHECK(fx.fa.kernel_locality_check(fx.L2, Sm2));
    CHECK(fx.fa.kernel_locality_check(fx.L0, Sm2));
    CHECK(fx.fa.kernel_locality_check(fx.L2b, Sm2));
  }

  SUBCASE("opposite screenings on adjacent nodes can fail by a sign") {
    ElementaryField Sp1 = fx.fa.generator(Family::Splus, 1);
    ElementaryField Sp2 = fx.fa.generator(Family::Splus, 2);
    ElementaryField Sm1 = fx.fa.generator(Family::Sminus, 1);
    ElementaryField Sm2 = fx.fa.generator(Family::Sminus, 2);
    CHECK_FALSE(fx.fa.kernel_locality_check(Sp1, Sm2));
    CHECK(fx.fa.kernel_locality_check(Sp2, Sm1));
  }

  SUBCASE("rational pairs have no closed kernel to compare") {
    ElementaryField Y1 = fx.fa.generator(Family::Y, 1);
    CHECK_THROWS_AS(fx.fa.kernel_locality_check(Y1, Y1), SeriesOnlyPair);
  }
}

TEST_CASE("delta terms of table fields with the down screening") {
  B2Fixture fx;
  ElementaryField Sm2 = fx.fa.generator(Family::Sminus, 2);

  SUBCASE("single simple pole") {
    auto terms = fx.fa.commutator(fx.L2, Sm2);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].support == qts(4, -1));
    CHECK(terms[0].coeff == rm(4, 0) - RatFun(1));
    CHECK(terms[0].wpow == 0);
    CHECK(terms[0].field ==
          fx.fa.product({gf(Family::Y, 2, qts(3, 0)), gf(Family::Y, 2, qts(1, 0)),
                         gf(Family::Y, 1, qts(0, 1), -1), gf(Family::Sminus, 2)}));
  }

  SUBCASE("two poles from the middle term") {
    auto terms = fx.fa.commutator(fx.L0, Sm2);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].support == qts(2, -1));
    CHECK(terms[0].coeff == qd(2));
    CHECK(terms[0].field ==
          fx.fa.product({gf(Family::Y, 2, qts(1, 0)), gf(Family::Y, 2, qts(-3, 2), -1),
                         gf(Family::Sminus, 2)}));
    CHECK(terms[1].support == qts(4, -3));
    CHECK(terms[1].coeff == -qd(2));
    CHECK(terms[1].field ==
          fx.fa.product({gf(Family::Y, 2, qts(3, -2)), gf(Family::Y, 2, qts(-1, 0), -1),
                         gf(Family::Sminus, 2)}));
  }

  SUBCASE("pole of the reflected node") {
    auto terms = fx.fa.commutator(fx.L2b, Sm2);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].support == qts(2, -3));
    CHECK(terms[0].coeff == rm(-4, 0) - RatFun(1));
    CHECK(terms[0].field ==
          fx.fa.product({gf(Family::Y, 1, qts(0, -1)), gf(Family::Y, 2, qts(-1, 0), -1),
                         gf(Family::Y, 2, qts(-3, 0), -1), gf(Family::Sminus, 2)}));
  }

  SUBCASE("distant terms commute outright") {
    CHECK(fx.fa.commutator(fx.L1, Sm2).empty());
    CHECK(fx.fa.commutator(fx.L1b, Sm2).empty());
    FieldAlgebra a3(build_algebra(Series::A, 3));
    CHECK(a3.commutator(a3.generator(Family::Splus, 1), a3.generator(Family::Splus, 3))
              .empty());
  }

  SUBCASE("reversing the order transports every term") {
    for (const ElementaryField* T : {&fx.L2, &fx.L0, &fx.L2b}) {
      auto fwd = fx.fa.commutator(*T, Sm2);
      auto rev = fx.fa.commutator(Sm2, *T);
      REQUIRE(fwd.size() == rev.size());
      for (const auto& ft : fwd) {
        bool found = false;
        for (const auto& rt : rev) {
          if (!(rt.support == ft.support.inv())) continue;
          found = true;
          CHECK(rt.coeff == -ft.coeff);
          CHECK(rt.wpow == ft.wpow);
          CHECK(rt.field == ft.field.shifted(ft.support.inv()));
        }
        CHECK(found);
      }
    }
  }

  SUBCASE("failure modes") {
    FieldAlgebra a2(build_algebra(Series::A, 2));
    CHECK_THROWS_AS(
        a2.commutator(a2.generator(Family::Splus, 1), a2.generator(Family::Splus, 2)),
        SeriesOnlyPair);
    CHECK_THROWS_AS(
        fx.fa.commutator(fx.fa.generator(Family::Splus, 1), fx.fa.generator(Family::Sminus, 2)),
        NonLocalPair);
    FieldAlgebra a1(build_algebra(Series::A, 1));
    ElementaryField d1 = a1.product({gf(Family::Y, 1), gf(Family::Y, 1)});
    CHECK_THROWS_AS(a1.commutator(d1, a1.generator(Family::A, 1)), HigherOrderPole);
  }
}

TEST_CASE("normal ordered merge") {
  B2Fixture fx;
  ElementaryField m = fx.fa.merge_at_delta(fx.L2, fx.fa.generator(Family::Sminus, 2),
                                           qts(4, -1));
  CHECK(m == fx.fa.product({gf(Family::Y, 2, qts(3, 0)), gf(Family::Y, 2, qts(1, 0)),
                            gf(Family::Y, 1, qts(0, 1), -1), gf(Family::Sminus, 2)}));

  // prefactors multiply and inverse pairs at one slot cancel
  ElementaryField F = fx.fa.generator(Family::Y, 1, qts(-1, 0), 1);
  F.pref = rm(0, 1);
  ElementaryField G = fx.fa.generator(Family::Y, 1, Monomial(), -1);
  G.pref = qd(2);
  ElementaryField c = fx.fa.merge_at_delta(F, G, qts(1, 0));
  CHECK(c.factors.empty());
  CHECK(c.pref == rm(0, 1) * qd(2));
}

TEST_CASE("root currents expand through the deformed Cartan rows") {
  SUBCASE("rank one") {
    FieldAlgebra fa(build_algebra(Series::A, 1));
    CHECK(fa.expand_A_in_Y(1) ==
          fa.product({gf(Family::Y, 1, qts(-1, 1)), gf(Family::Y, 1, qts(1, -1))}));
  }

  SUBCASE("odd orthogonal rank two") {
    FieldAlgebra fa(build_algebra(Series::B, 2));
    CHECK(fa.expand_A_in_Y(1) ==
          fa.product({gf(Family::Y, 1, qts(-2, 1)), gf(Family::Y, 1, qts(2, -1)),
                      gf(Family::Y, 2, qts(1, 0), -1), gf(Family::Y, 2, qts(-1, 0), -1)}));
    CHECK(fa.expand_A_in_Y(2) ==
          fa.product({gf(Family::Y, 1, Monomial(), -1), gf(Family::Y, 2, qts(-1, 1)),
                      gf(Family::Y, 2, qts(1, -1))}));
  }

  SUBCASE("symplectic rank two") {
    FieldAlgebra fa(build_algebra(Series::C, 2));
    CHECK(fa.expand_A_in_Y(2) ==
          fa.product({gf(Family::Y, 1, qts(-1, 0), -1), gf(Family::Y, 1, qts(1, 0), -1),
                      gf(Family::Y, 2, qts(-2, 1)), gf(Family::Y, 2, qts(2, -1))}));
  }

  SUBCASE("twisted rows carry the middle term") {
    FieldAlgebra fa(build_algebra(Series::A2twisted, 2));
    CHECK(fa.expand_A_in_Y(2) ==
          fa.product({gf(Family::Y, 1, Monomial(), -1), gf(Family::Y, 2, qts(-2, 1)),
                      gf(Family::Y, 2, Monomial(), -1), gf(Family::Y, 2, qts(2, -1))}));
  }

  SUBCASE("expansion reproduces the closed kernels of the root current") {
    for (auto series : {Series::B, Series::C}) {
      FieldAlgebra fa(build_algebra(series, 2));
      for (long i = 1; i <= 2; ++i) {
        ElementaryField ex = fa.expand_A_in_Y(i);
        for (long j = 1; j <= 2; ++j) {
          ElementaryField Yj = fa.generator(Family::Y, j);
          ContractionKernel lhs = fa.contraction_kernel(ex, Yj);
          ContractionKernel rhs = fa.contraction_kernel(fa.generator(Family::A, i), Yj);
          REQUIRE(lhs.closed);
          REQUIRE(rhs.closed);
          CHECK(lhs.factors == rhs.factors);
          CHECK(lhs.prefix == rhs.prefix);
          CHECK(lhs.zpow == rhs.zpow);
        }
      }
    }
  }
}

TEST_CASE("quadratic difference equations hold on every implemented algebra") {
  std::vector<AlgebraSpec> specs;
  specs.push_back(build_algebra(Series::A, 1));
  specs.push_back(build_algebra(Series::A, 2));
  specs.push_back(build_algebra(Series::A, 3));
  specs.push_back(build_algebra(Series::B, 2));
  specs.push_back(build_algebra(Series::B, 3));
  specs.push_back(build_algebra(Series::C, 2));
  specs.push_back(build_algebra(Series::C, 3));
  specs.push_back(build_algebra(Series::D, 4));
  specs.push_back(build_algebra(Series::A2twisted, 1));
  specs.push_back(build_algebra(Series::A2twisted, 2));
  for (const auto& spec : specs) {
    FieldAlgebra fa(spec);
    for (long i = 1; i <= spec.rank; ++i)
      for (DiffEq kind : {DiffEq::scr1, DiffEq::scr2, DiffEq::v1, DiffEq::v2})
        CHECK(fa.difference_equation_check(kind, i));
  }

  // shifting one side breaks the oscillator match
  FieldAlgebra a1(build_algebra(Series::A, 1));
  CHECK_FALSE(a1.mode_vector(a1.generator(Family::Splus, 1, qts(-1, 0), 1)) ==
              a1.mode_vector(a1.generator(Family::Splus, 1, qts(1, 0), 1)));
}

TEST_CASE("screening commutation in rank one") {
  FieldAlgebra fa(build_algebra(Series::A, 1));
  FieldSum T;
  T.add(fa.generator(Family::Y, 1));
  T.add(fa.generator(Family::Y, 1, qts(-2, 2), -1));

  SUBCASE("down screening") {
    ScreeningReport rep = fa.screening_commutes(T, 1, -1);
    REQUIRE(rep.commutes);
    REQUIRE(rep.groups.size() == 1);
    const ScreeningGroup& g = rep.groups[0];
    CHECK(g.shape.same_shape(
        fa.product({gf(Family::Y, 1), gf(Family::Sminus, 1, qts(-1, 0))})));
    CHECK(g.total.is_zero());
    REQUIRE(g.parts.size() == 2);
    CHECK(g.parts[0].support == qts(1, 0));
    CHECK(g.parts[0].coeff == qd(1));
    CHECK(g.parts[1].support == qts(1, -2));
    CHECK(g.parts[1].coeff == -qd(1));
  }

  SUBCASE("up screening") {
    ScreeningReport rep = fa.screening_commutes(T, 1, +1);
    REQUIRE(rep.commutes);
    REQUIRE(rep.groups.size() == 1);
    const ScreeningGroup& g = rep.groups[0];
    CHECK(g.shape.same_shape(
        fa.product({gf(Family::Y, 1), gf(Family::Splus, 1, qts(0, 1))})));
    REQUIRE(g.parts.size() == 2);
    CHECK(g.parts[0].support == qts(0, -1));
    CHECK(g.parts[0].coeff == -td());
    CHECK(g.parts[1].support == qts(2, -1));
    CHECK(g.parts[1].coeff == td());
  }

  SUBCASE("a lone term does not commute") {
    FieldSum one;
    one.add(fa.generator(Family::Y, 1));
    ScreeningReport rep = fa.screening_commutes(one, 1, -1);
    CHECK_FALSE(rep.commutes);
    REQUIRE(rep.groups.size() == 1);
    CHECK(rep.groups[0].total == qd(1));
  }
}

TEST_CASE("screening commutation for the rank-two table") {
  B2Fixture fx;
  FieldSum T = fx.t1();
  std::vector<std::string> labels = fx.labels();

  SUBCASE("down screening on the short node, grouped ledger") {
    ScreeningReport rep = fx.fa.screening_commutes(T, 2, -1, &labels);
    REQUIRE(rep.commutes);
    REQUIRE(rep.groups.size() == 2);

    ElementaryField s1 = fx.fa.product(
        {gf(Family::Y, 2, qts(-1, 1)), gf(Family::Y, 2, qts(-3, 1)),
         gf(Family::Y, 1, qts(-4, 2), -1), gf(Family::Sminus, 2, qts(-4, 1))});
    const ScreeningGroup* g1 = find_group(rep, s1);
    REQUIRE(g1 != nullptr);
    CHECK(g1->total.is_zero());
    REQUIRE(g1->parts.size() == 2);
    const ScreeningContribution* p12 = find_part(*g1, "L2");
    const ScreeningContribution* p10 = find_part(*g1, "L0");
    REQUIRE(p12 != nullptr);
    REQUIRE(p10 != nullptr);
    CHECK(p12->support == qts(4, -1));
    CHECK(p12->coeff == rm(0, 1) - rm(-4, 1));
    CHECK(p10->support == qts(4, -3));
    CHECK(p10->coeff == rm(-4, 1) - rm(0, 1));

    ElementaryField s2 =
        fx.fa.product({gf(Family::Y, 2, qts(-1, 1)), gf(Family::Y, 2, qts(-5, 3), -1),
                       gf(Family::Sminus, 2, qts(-2, 1))});
    const ScreeningGroup* g2 = find_group(rep, s2);
    REQUIRE(g2 != nullptr);
    CHECK(g2->total.is_zero());
    REQUIRE(g2->parts.size() == 2);
    const ScreeningContribution* p20 = find_part(*g2, "L0");
    const ScreeningContribution* p2b = find_part(*g2, "L2bar");
    REQUIRE(p20 != nullptr);
    REQUIRE(p2b != nullptr);
    CHECK(p20->support == qts(2, -1));
    CHECK(p20->coeff == rm(0, 1) - rm(-4, 1));
    CHECK(p2b->support == qts(2, -3));
    CHECK(p2b->coeff == rm(-4, 1) - rm(0, 1));
  }

  SUBCASE("down screening on the long node needs the doubled window") {
    ScreeningReport rep = fx.fa.screening_commutes(T, 1, -1, &labels);
    REQUIRE(rep.commutes);
    REQUIRE(rep.groups.size() == 2);

    ElementaryField s1 =
        fx.fa.product({gf(Family::Y, 1), gf(Family::Sminus, 1, qts(-2, 0))});
    const ScreeningGroup* g1 = find_group(rep, s1);
    REQUIRE(g1 != nullptr);
    CHECK(g1->total.is_zero());
    const ScreeningContribution* p11 = find_part(*g1, "L1");
    const ScreeningContribution* p12 = find_part(*g1, "L2");
    REQUIRE(p11 != nullptr);
    REQUIRE(p12 != nullptr);
    CHECK(p11->support == qts(2, 0));
    CHECK(p11->coeff == rm(2, 0) - rm(-2, 0));
    CHECK(p12->support == qts(2, -2));
    CHECK(p12->coeff == rm(-2, 0) - rm(2, 0));

    const ScreeningGroup* g2 = nullptr;
    for (const auto& g : rep.groups)
      if (g.shape.factors.size() == 8) g2 = &g;
    REQUIRE(g2 != nullptr);
    CHECK(g2->total.is_zero());
    const ScreeningContribution* p2b = find_part(*g2, "L2bar");
    const ScreeningContribution* p1b = find_part(*g2, "L1bar");
    REQUIRE(p2b != nullptr);
    REQUIRE(p1b != nullptr);
    CHECK(p2b->support == qts(4, -2));
    CHECK(p2b->coeff == rm(4, 0) - RatFun(1));
    CHECK(p1b->support == qts(4, -4));
    CHECK(p1b->coeff == RatFun(1) - rm(4, 0));
  }

  SUBCASE("up screenings commute as well") {
    CHECK(fx.fa.screening_commutes(T, 1, +1).commutes);
    CHECK(fx.fa.screening_commutes(T, 2, +1).commutes);
  }
}

TEST_CASE("screening commutation in the twisted case") {
  TwFixture fx;
  FieldSum T = fx.t1();
  std::vector<std::string> labels = fx.labels();

  SUBCASE("down screening commutes with frozen ledger") {
    ScreeningReport rep = fx.fa.screening_commutes(T, 1, -1, &labels);
    REQUIRE(rep.commutes);
    REQUIRE(rep.groups.size() == 2);

    ElementaryField gx =
        fx.fa.product({gf(Family::Y, 1), gf(Family::Sminus, 1, qts(-2, 0))});
    const ScreeningGroup* g1 = find_group(rep, gx);
    REQUIRE(g1 != nullptr);
    CHECK(g1->total.is_zero());
    const ScreeningContribution* a = find_part(*g1, "L1");
    const ScreeningContribution* b = find_part(*g1, "L0");
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    CHECK(a->support == qts(2, 0));
    CHECK(a->coeff == qd(2));
    CHECK(b->support == qts(2, -2));
    CHECK(b->coeff == -qd(2));

    ElementaryField gy =
        fx.fa.product({gf(Family::Y, 1, qts(-2, 1)), gf(Family::Y, 1, qts(-4, 2), -1),
                       gf(Family::Sminus, 1, qts(-4, 1))});
    const ScreeningGroup* g2 = find_group(rep, gy);
    REQUIRE(g2 != nullptr);
    CHECK(g2->total.is_zero());
    const ScreeningContribution* c = find_part(*g2, "L0");
    const ScreeningContribution* d = find_part(*g2, "L1bar");
    REQUIRE(c != nullptr);
    REQUIRE(d != nullptr);
    CHECK(c->support == qts(4, -1));
    CHECK(c->coeff == rm(-4, 1) - rm(-8, 1));
    CHECK(d->support == qts(4, -3));
    CHECK(d->coeff == rm(-8, 1) - rm(-4, 1));
  }

  SUBCASE("up screening does not commute") {
    ScreeningReport rep = fx.fa.screening_commutes(T, 1, +1, &labels);
    CHECK_FALSE(rep.commutes);
    bool some_nonzero = false;
    for (const auto& g : rep.groups)
      if (!g.total.is_zero()) some_nonzero = true;
    CHECK(some_nonzero);
  }
}

TEST_CASE("zero modes, momenta, and scalars") {
  B2Fixture fx;

  SUBCASE("lattice charges and momenta") {
    ZeroModeRecord zm = fx.fa.zero_modes(fx.fa.generator(Family::Sminus, 2));
    CHECK(zm.root_charge == std::vector<BGrad>{BGrad(), BGrad::inv_beta(Rat(1))});
    CHECK(zm.weight_charge == std::vector<BGrad>{BGrad(), BGrad()});
    CHECK(zm.z_momentum ==
          std::vector<BGrad>{BGrad::inv_beta(Rat(-1)), BGrad::inv_beta(Rat(2))});
    CHECK(zm.q_momentum == std::vector<BGrad>{BGrad(), BGrad()});

    ZeroModeRecord zv = fx.fa.zero_modes(fx.fa.generator(Family::Vplus, 1));
    CHECK(zv.weight_charge == std::vector<BGrad>{BGrad(Rat(1, 2)), BGrad()});
    CHECK(zv.root_charge == std::vector<BGrad>{BGrad(), BGrad()});
    CHECK(zv.z_momentum == std::vector<BGrad>{BGrad(Rat(1, 2)), BGrad()});
    ZeroModeRecord zw = fx.fa.zero_modes(fx.fa.generator(Family::Vminus, 2, Monomial(), -1));
    CHECK(zw.weight_charge == std::vector<BGrad>{BGrad(), BGrad::inv_beta(Rat(1))});

    ZeroModeRecord zy = fx.fa.zero_modes(fx.fa.generator(Family::Y, 2));
    CHECK(zy.q_momentum == std::vector<BGrad>{BGrad(), BGrad(Rat(2))});
    CHECK(zy.root_charge == std::vector<BGrad>{BGrad(), BGrad()});
  }

  SUBCASE("intrinsic prefactors") {
    CHECK(fx.fa.intrinsic_prefactor(Family::Y, 1) == qts(-6, 4));
    CHECK(fx.fa.intrinsic_prefactor(Family::Y, 2) == qts(-4, 3));
    CHECK(fx.fa.intrinsic_prefactor(Family::A, 1) == qts(-4, 2));
    CHECK(fx.fa.intrinsic_prefactor(Family::A, 2) == qts(-2, 2));
    CHECK(fx.fa.intrinsic_prefactor(Family::Sminus, 1) == Monomial());
    CHECK(fx.fa.total_scalar(fx.L2) == rm(-2, 2));
    FieldAlgebra tw(build_algebra(Series::A2twisted, 2));
    CHECK(tw.intrinsic_prefactor(Family::Y, 1) == qts(-8, 4));
    CHECK(tw.intrinsic_prefactor(Family::A, 1) == qts(-4, 2));
  }

  SUBCASE("mode vectors") {
    const FunMat& X = fx.fa.row_transform();
    auto va = fx.fa.mode_vector(fx.fa.generator(Family::A, 1));
    CHECK(va == std::vector<RatFun>{X[0][0], X[0][1]});
    auto vs = fx.fa.mode_vector(fx.fa.generator(Family::Sminus, 2));
    CHECK(vs == std::vector<RatFun>{-X[1][0] / td(), -X[1][1] / td()});
    auto vv = fx.fa.mode_vector(fx.fa.generator(Family::Vplus, 2));
    CHECK(vv == std::vector<RatFun>{RatFun(0), -RatFun(1) / qd(1)});
  }
}

TEST_CASE("rendering and serialization") {
  B2Fixture fx;

  SUBCASE("normal ordered products in display form") {
    std::string s = field_to_latex(fx.L2);
    CHECK(s.find("Y_{2}\\left(zq^{-1}t\\right)") != std::string::npos);
    CHECK(s.find("Y_{1}\\left(zq^{-4}t^{2}\\right)^{-1}") != std::string::npos);
    CHECK(s.find("{:}") == 0);
    CHECK(field_to_latex(fx.fa.generator(Family::Splus, 1)).find("S^{+}_{1}") !=
          std::string::npos);
    CHECK(field_to_latex(ElementaryField()) == "1");
  }

  SUBCASE("field serialization") {
    auto j = nlohmann::json::parse(field_to_json(fx.L2, fx.fa));
    CHECK(j["schema"] == "wqt/1");
    REQUIRE(j["factors"].size() == 3);
    CHECK(j["factors"][0]["family"] == "Y");
    CHECK(j["factors"][0]["index"] == 1);
    CHECK(j["factors"][0]["sign"] == -1);
    CHECK(j["factors"][0]["qshift"] == "-4");
    CHECK(j["factors"][0]["tshift"] == "2");
    CHECK(j["zero_modes"]["root_charge"][0] == "0");
  }

  SUBCASE("delta term serialization") {
    auto terms = fx.fa.commutator(fx.L2, fx.fa.generator(Family::Sminus, 2));
    auto j = nlohmann::json::parse(delta_terms_to_json(terms));
    CHECK(j["schema"] == "wqt/1");
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["support"]["q"] == "4");
    CHECK(j["terms"][0]["support"]["t"] == "-1");
    CHECK(j["terms"][0]["field"]["factors"].size() == 4);
  }

  SUBCASE("screening report serialization") {
    FieldSum T = fx.t1();
    auto rep = fx.fa.screening_commutes(T, 2, -1);
    auto j = nlohmann::json::parse(screening_report_to_json(rep));
    CHECK(j["commutes"] == true);
    CHECK(j["groups"].size() == 2);
    for (const auto& g : j["groups"]) CHECK(g["parts"].size() == 2);
  }
}
