#include <doctest.h>

#include <random>

#include "branecalc/errors.hpp"
#include "branecalc/geometry.hpp"
#include "branecalc/registry.hpp"

using branecalc::BigInt;
using branecalc::ChargeVector;
using branecalc::CurveClass;
using branecalc::DivisorClass;
using branecalc::GepnerModel;
using branecalc::IntersectionRing;
using branecalc::Poly2;
using branecalc::Rational;

namespace {

Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

ChargeVector charges(std::array<long long, 6> v) {
  ChargeVector n;
  for (std::size_t i = 0; i < 6; ++i) n.n[i] = Rational(v[i]);
  return n;
}

const DivisorClass kH{Rational(1), Rational(0)};
const DivisorClass kL{Rational(0), Rational(1)};

}  // namespace

TEST_CASE("triple intersections on both models") {
  IntersectionRing r8 = branecalc::load_builtin_model("p11222-8").ring;
  CHECK(branecalc::triple_intersection(r8, kH, kH, kH) == rat(8));
  CHECK(branecalc::triple_intersection(r8, kH, kH, kL) == rat(4));
  CHECK(branecalc::triple_intersection(r8, kH, kL, kL) == rat(0));
  CHECK(branecalc::triple_intersection(r8, kL, kL, kL) == rat(0));
  // (H+L)^3 = 8 + 3*4 = 20
  DivisorClass hl = kH + kL;
  CHECK(branecalc::triple_intersection(r8, hl, hl, hl) == rat(20));

  IntersectionRing r12 = branecalc::load_builtin_model("p11226-12").ring;
  CHECK(branecalc::triple_intersection(r12, kH, kH, kH) == rat(4));
  CHECK(branecalc::triple_intersection(r12, kH, kH, kL) == rat(2));
}

TEST_CASE("triple intersection is symmetric") {
  IntersectionRing ring = branecalc::load_builtin_model("p11222-8").ring;
  std::mt19937_64 rng(401);
  std::uniform_int_distribution<long long> dist(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    DivisorClass a{rat(dist(rng)), rat(dist(rng))};
    DivisorClass b{rat(dist(rng)), rat(dist(rng))};
    DivisorClass c{rat(dist(rng)), rat(dist(rng))};
    Rational abc = branecalc::triple_intersection(ring, a, b, c);
    CHECK(abc == branecalc::triple_intersection(ring, b, a, c));
    CHECK(abc == branecalc::triple_intersection(ring, c, b, a));
    CHECK(abc == branecalc::triple_intersection(ring, a, c, b));
  }
}

TEST_CASE("divisor-curve pairings") {
  const CurveClass h{Rational(1), Rational(0)};
  const CurveClass l{Rational(0), Rational(1)};
  CHECK(branecalc::divisor_curve_pairing(kH, h) == rat(2));
  CHECK(branecalc::divisor_curve_pairing(kH, l) == rat(0));
  CHECK(branecalc::divisor_curve_pairing(kL, l) == rat(2));
  CHECK(branecalc::divisor_curve_pairing(kL, h) == rat(0));
  CHECK(branecalc::divisor_curve_pairing(kH + kL, h + l) == rat(4));
}

TEST_CASE("exceptional divisor basis change") {
  // H = 2L + E, so H in (L, E) coordinates is (2, 1) and E itself is H - 2L
  std::array<Rational, 2> h_le = branecalc::divisor_in_le_basis(kH);
  CHECK(h_le[0] == rat(2));
  CHECK(h_le[1] == rat(1));
  DivisorClass e{Rational(1), Rational(-2)};
  std::array<Rational, 2> e_le = branecalc::divisor_in_le_basis(e);
  CHECK(e_le[0] == rat(0));
  CHECK(e_le[1] == rat(1));
}

TEST_CASE("prepotential values") {
  IntersectionRing ring = branecalc::load_builtin_model("p11222-8").ring;
  CHECK(branecalc::prepotential(ring, rat(0), rat(0)) == rat(0));
  CHECK(branecalc::prepotential(ring, rat(0), rat(0), rat(5)) == rat(5));
  // -4/3 - 2 + 80/24 = 0
  CHECK(branecalc::prepotential(ring, rat(1), rat(1)) == rat(0));
}

TEST_CASE("period vector matches the published column as polynomials") {
  IntersectionRing ring = branecalc::load_builtin_model("p11222-8").ring;
  std::array<Poly2, 6> pi = branecalc::period_vector_poly(ring);

  Poly2 row0 = Poly2::monomial(rat(4, 3), 3, 0) +
               Poly2::monomial(rat(2), 2, 1) + Poly2::monomial(rat(7, 3), 1, 0) +
               Poly2::monomial(rat(1), 0, 1);
  Poly2 row1 = Poly2::monomial(rat(-4), 2, 0) +
               Poly2::monomial(rat(-4), 1, 1) + Poly2::constant(rat(7, 3));
  Poly2 row2 = Poly2::monomial(rat(-2), 2, 0) + Poly2::constant(rat(1));
  CHECK(pi[0] == row0);
  CHECK(pi[1] == row1);
  CHECK(pi[2] == row2);
  CHECK(pi[3] == Poly2::constant(rat(1)));
  CHECK(pi[4] == Poly2::t1());
  CHECK(pi[5] == Poly2::t2());
}

TEST_CASE("first period row is 2F - t.dF at random rational points") {
  for (const char* name : {"p11222-8", "p11226-12"}) {
    IntersectionRing ring = branecalc::load_builtin_model(name).ring;
    std::array<Poly2, 6> pi = branecalc::period_vector_poly(ring);
    std::mt19937_64 rng(409);
    std::uniform_int_distribution<long long> dist(-12, 12);
    for (int trial = 0; trial < 50; ++trial) {
      Rational t1(BigInt(dist(rng)), BigInt(7));
      Rational t2(BigInt(dist(rng)), BigInt(5));
      Rational f = branecalc::prepotential(ring, t1, t2);
      Rational f1 = pi[1].eval(t1, t2);
      Rational f2 = pi[2].eval(t1, t2);
      CHECK(pi[0].eval(t1, t2) == rat(2) * f - t1 * f1 - t2 * f2);
    }
  }
}

TEST_CASE("central charge basics") {
  IntersectionRing ring = branecalc::load_builtin_model("p11222-8").ring;
  CHECK(branecalc::central_charge(ring, charges({0, 0, 0, 1, 0, 0}), rat(3),
                                  rat(4)) == rat(1));
  CHECK(branecalc::central_charge(ring, charges({0, 0, 0, 0, 1, 0}), rat(3),
                                  rat(4)) == rat(3));
  CHECK(branecalc::central_charge(ring, charges({0, 0, 0, 0, 0, 1}), rat(3),
                                  rat(4)) == rat(4));
  // first-orbit row (0,1,0,-2,0,1) at t1 = t2 = 1: F1 - 2 + t2 = -20/3
  CHECK(branecalc::central_charge(ring, charges({0, 1, 0, -2, 0, 1}), rat(1),
                                  rat(1)) == rat(-20, 3));

  // linearity in the charge vector
  std::mt19937_64 rng(419);
  std::uniform_int_distribution<long long> dist(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<long long, 6> a{}, b{}, combo{};
    for (int i = 0; i < 6; ++i) {
      a[i] = dist(rng);
      b[i] = dist(rng);
      combo[i] = a[i] + 2 * b[i];
    }
    Rational t1 = rat(dist(rng), 3), t2 = rat(dist(rng), 2);
    CHECK(branecalc::central_charge(ring, charges(combo), t1, t2) ==
          branecalc::central_charge(ring, charges(a), t1, t2) +
              rat(2) * branecalc::central_charge(ring, charges(b), t1, t2));
  }
}

TEST_CASE("charge dictionary on the reference rows") {
  // row m2 = (0,1,0,-1,0,0): c1 = H/2 - L = E/2, ch2 = 0, ch3 = 2/3
  branecalc::ChernData m2 = branecalc::charge_to_chern(charges({0, 1, 0, -1, 0, 0}));
  CHECK(m2.rank == rat(0));
  CHECK(m2.c1 == DivisorClass{rat(1, 2), rat(-1)});
  CHECK(m2.c1_le[0] == rat(0));
  CHECK(m2.c1_le[1] == rat(1, 2));
  CHECK(m2.ch2.is_zero());
  CHECK(m2.ch3 == rat(2, 3));

  // row m1 = (0,1,0,-2,0,1): ch2 = l, ch3 = 5/3, c1 = E/2 again
  branecalc::ChernData m1 = branecalc::charge_to_chern(charges({0, 1, 0, -2, 0, 1}));
  CHECK(m1.ch2 == CurveClass{rat(0), rat(1)});
  CHECK(m1.ch3 == rat(5, 3));
  CHECK(m1.c1_le[1] == rat(1, 2));

  // zero maps to zero
  branecalc::ChernData zero = branecalc::charge_to_chern(charges({0, 0, 0, 0, 0, 0}));
  CHECK(zero.rank.is_zero());
  CHECK(zero.c1.is_zero());
  CHECK(zero.ch2.is_zero());
  CHECK(zero.ch3.is_zero());
}

TEST_CASE("dictionary is invertible") {
  std::mt19937_64 rng(421);
  std::uniform_int_distribution<long long> dist(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<long long, 6> v{};
    for (auto& c : v) c = dist(rng);
    ChargeVector n = charges(v);
    branecalc::ChernData chern = branecalc::charge_to_chern(n);
    ChargeVector back =
        branecalc::chern_to_charge(chern.rank, chern.c1, chern.ch2, chern.ch3);
    CHECK(back == n);
  }
}

TEST_CASE("pure D4 and D2 charge vectors") {
  branecalc::MukaiVector d2 =
      branecalc::d2_charge(charges({0, 0, 0, -1, 0, 1}));
  CHECK(d2.rank.is_zero());
  CHECK(d2.c1.is_zero());
  CHECK(d2.ch2 == CurveClass{rat(0), rat(1)});
  CHECK(d2.ch3 == rat(1));

  // n42 = 0 degenerate D4
  branecalc::MukaiVector d4 =
      branecalc::d4_charge(charges({0, 3, 0, -5, 2, 0}));
  CHECK(d4.c1.is_zero());
  CHECK(d4.ch2 == CurveClass{rat(2), rat(0)});
  CHECK(d4.ch3 == rat(5));

  CHECK_THROWS_AS(branecalc::d4_charge(charges({1, 0, 0, 0, 0, 0})),
                  branecalc::ConstraintError);
  CHECK_THROWS_AS(branecalc::d2_charge(charges({0, 1, 0, 0, 0, 1})),
                  branecalc::ConstraintError);
  CHECK_THROWS_AS(branecalc::d2_charge(charges({0, 0, 0, 1, 0, 0})),
                  branecalc::ConstraintError);
}

TEST_CASE("fiber pairing and Mukai vectors") {
  IntersectionRing ring = branecalc::load_builtin_model("p11222-8").ring;
  CHECK(branecalc::fiber_pairing(ring, kH, kH) == rat(4));
  CHECK(branecalc::fiber_pairing(ring, kH, kL) == rat(0));
  CHECK(branecalc::fiber_pairing(ring, kL, kL) == rat(0));
  DivisorClass e{rat(1), rat(-2)};  // E = H - 2L restricts to a (+4)-class
  CHECK(branecalc::fiber_pairing(ring, e, e) == rat(4));

  branecalc::FiberMukaiVector unit =
      branecalc::mukai_vector(ring, rat(1), DivisorClass{rat(0), rat(0)}, rat(0));
  CHECK(unit.s == rat(1));

  branecalc::FiberMukaiVector rank0 =
      branecalc::mukai_vector(ring, rat(0), kH, rat(3));
  CHECK(rank0.s == rat(1, 2) * rat(4) - rat(3));

  branecalc::FiberMukaiVector rank2 =
      branecalc::mukai_vector(ring, rat(2), kH, rat(4));
  CHECK(rank2.s == rat(0));  // 4/2 - 4 + 2
}

TEST_CASE("Mukai pairing symmetry and moduli dimensions") {
  IntersectionRing ring = branecalc::load_builtin_model("p11222-8").ring;
  std::mt19937_64 rng(431);
  std::uniform_int_distribution<long long> dist(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    branecalc::FiberMukaiVector v{rat(dist(rng)),
                                  {rat(dist(rng)), rat(dist(rng))},
                                  rat(dist(rng))};
    branecalc::FiberMukaiVector w{rat(dist(rng)),
                                  {rat(dist(rng)), rat(dist(rng))},
                                  rat(dist(rng))};
    CHECK(branecalc::mukai_pairing(ring, v, w) ==
          branecalc::mukai_pairing(ring, w, v));
    CHECK(branecalc::moduli_dimension(ring, v) ==
          branecalc::mukai_pairing(ring, v, v) + rat(2));
  }

  // <v, v> = -2 is rigid: the unit vector (1, 0, 1)
  branecalc::FiberMukaiVector rigid =
      branecalc::mukai_vector(ring, rat(1), DivisorClass{rat(0), rat(0)}, rat(0));
  CHECK(branecalc::moduli_dimension(ring, rigid) == rat(0));

  // the half-E class of the first-orbit states: dimension 1 + 2 = 3 > 0
  branecalc::FiberMukaiVector half_e{rat(0), {rat(1, 2), rat(-1)}, rat(8, 3)};
  CHECK(branecalc::moduli_dimension(ring, half_e) == rat(3));
}

TEST_CASE("slope and semistability") {
  IntersectionRing ring = branecalc::load_builtin_model("p11222-8").ring;
  // mu = H^2 . c1 / ch0 on the ambient threefold
  CHECK(branecalc::slope(ring, rat(1), kH, kH, 3) == rat(8));
  CHECK(branecalc::slope(ring, rat(2), kH, kH, 3) == rat(4));
  CHECK(branecalc::slope(ring, rat(1), kL, kH, 3) == rat(4));
  // fiber slope
  CHECK(branecalc::slope(ring, rat(2), kH, kH, 2) == rat(2));
  CHECK_THROWS_AS(branecalc::slope(ring, rat(0), kH, kH, 3),
                  branecalc::ConstraintError);
  CHECK_THROWS_AS(branecalc::slope(ring, rat(1), kH, kH, 4),
                  branecalc::ConstraintError);

  branecalc::SheafSlopeData whole{rat(2), kH};
  CHECK(branecalc::is_slope_semistable(ring, whole, whole, kH));
  // sub with strictly larger slope destabilizes
  branecalc::SheafSlopeData sub{rat(1), kH};
  CHECK_FALSE(branecalc::is_slope_semistable(ring, sub, whole, kH));
  CHECK(branecalc::is_slope_semistable(ring, whole, sub, kH));
}

TEST_CASE("BPS classification") {
  using branecalc::BpsClass;
  const CurveClass zero_curve{rat(0), rat(0)};
  const CurveClass h{rat(1), rat(0)};
  CHECK(branecalc::bps_classify(rat(1), DivisorClass{rat(-3), rat(5)},
                                CurveClass{rat(-1), rat(-1)}) == BpsClass::kBps);
  CHECK(branecalc::bps_classify(rat(0), kL, zero_curve) == BpsClass::kBps);
  CHECK(branecalc::bps_classify(rat(0), DivisorClass{rat(0), rat(0)}, h) ==
        BpsClass::kBps);
  CHECK(branecalc::bps_classify(rat(0), DivisorClass{rat(0), rat(0)},
                                zero_curve) == BpsClass::kOutside);
  CHECK(branecalc::bps_classify(rat(-1), DivisorClass{rat(0), rat(0)},
                                zero_curve) == BpsClass::kAntiBps);
  CHECK(branecalc::bps_classify(rat(0), -kL, zero_curve) == BpsClass::kAntiBps);
  // mixed-sign first Chern class at rank zero sits outside both cones
  CHECK(branecalc::bps_classify(rat(0), DivisorClass{rat(1), rat(-1)},
                                zero_curve) == BpsClass::kOutside);
}

TEST_CASE("Dirac pairing and fibration condition") {
  CHECK(branecalc::dirac_check(rat(1), rat(1)));
  CHECK_FALSE(branecalc::dirac_check(rat(1), rat(1, 2)));
  CHECK(branecalc::dirac_check(rat(2, 3), rat(3)));
  CHECK(branecalc::cy_fibration_check(-2, -2));
  CHECK_FALSE(branecalc::cy_fibration_check(-2, -1));
  for (int a = -5; a <= 3; ++a) {
    int b = -2 - a;
    CHECK(branecalc::cy_fibration_check(-2, a + b));
  }
}
