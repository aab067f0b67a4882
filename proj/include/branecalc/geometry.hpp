#pragma once

#include <array>
#include <string>

#include "branecalc/charge.hpp"
#include "branecalc/model.hpp"
#include "branecalc/poly2.hpp"

namespace branecalc {

// Divisor class a*H + b*L in the two-parameter intersection ring.
struct DivisorClass {
  Rational a;
  Rational b;

  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend DivisorClass operator-(const DivisorClass& x) { return {-x.a, -x.b}; }
  friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.a == y.a && x.b == y.b;
  }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  std::string str() const;
};

// Curve class c*h + d*l (h the fiber quartic curve, l the blown-up P1).
struct CurveClass {
  Rational c;
  Rational d;

  friend CurveClass operator+(const CurveClass& x, const CurveClass& y) {
    return {x.c + y.c, x.d + y.d};
  }
  friend CurveClass operator-(const CurveClass& x) { return {-x.c, -x.d}; }
  friend bool operator==(const CurveClass& x, const CurveClass& y) {
    return x.c == y.c && x.d == y.d;
  }
  bool is_zero() const { return c.is_zero() && d.is_zero(); }
  std::string str() const;
};

// H = 2L + E: the (L, E) coordinates of a divisor written on (H, L).
std::array<Rational, 2> divisor_in_le_basis(const DivisorClass& divisor);

// trilinear expansion on H^3 = c111, H^2 L = c112, H L^2 = L^3 = 0
Rational triple_intersection(const IntersectionRing& ring,
                             const DivisorClass& d1, const DivisorClass& d2,
                             const DivisorClass& d3);

// bilinear pairing: H.h = 2, H.l = 0, L.l = 2, L.h = 0
Rational divisor_curve_pairing(const DivisorClass& divisor,
                               const CurveClass& curve);

// classical prepotential
//   F = -(1/3!) c111 t1^3 - (1/2) c112 t1^2 t2 + (1/24)(b1 t1 + b2 t2) + const
Poly2 prepotential_poly(const IntersectionRing& ring,
                        const Rational& constant_term = Rational(0));
Rational prepotential(const IntersectionRing& ring, const Rational& t1,
                      const Rational& t2,
                      const Rational& constant_term = Rational(0));

// symplectic period vector Pi = (2F - t_i dF_i, F1, F2, 1, t1, t2),
// built from the prepotential derivatives
std::array<Poly2, 6> period_vector_poly(
    const IntersectionRing& ring, const Rational& constant_term = Rational(0));
std::array<Rational, 6> period_vector(const IntersectionRing& ring,
                                      const Rational& t1, const Rational& t2);

// Z(n) = n . Pi(t1, t2)
Rational central_charge(const IntersectionRing& ring, const ChargeVector& n,
                        const Rational& t1, const Rational& t2);

// charge -> Chern dictionary:
//   r = n6, c1 = (1/2) n41 H + (n42 - n41) L, ch2 = n21 h + n22 l,
//   ch3 = -n0 - (1/3) n41 - 2 n42
struct ChernData {
  Rational rank;
  DivisorClass c1;
  CurveClass ch2;
  Rational ch3;
  std::array<Rational, 2> c1_le;  // same c1 on the (L, E) basis
};
ChernData charge_to_chern(const ChargeVector& n);
// inverse dictionary at fixed rank
ChargeVector chern_to_charge(const Rational& rank, const DivisorClass& c1,
                             const CurveClass& ch2, const Rational& ch3);

// Brane charge vector graded H^0 + H^2 + H^4 + H^6 of the threefold.
struct MukaiVector {
  Rational rank;
  DivisorClass c1;
  CurveClass ch2;
  Rational ch3;
};

// pure D4 stack on the fiber class: requires n6 = 0
MukaiVector d4_charge(const ChargeVector& n);
// pure D2 on the base: requires n6 = n41 = n42 = 0 and n22 != 0
MukaiVector d2_charge(const ChargeVector& n);

// Three-component Mukai vector (r, c1, s) on the K3 fiber with
// s = (1/2) c1^2 - c2 + r, c1^2 taken in the fiber lattice.
struct FiberMukaiVector {
  Rational rank;
  DivisorClass c1;
  Rational s;
};

Rational fiber_pairing(const IntersectionRing& ring, const DivisorClass& d1,
                       const DivisorClass& d2);
FiberMukaiVector mukai_vector(const IntersectionRing& ring,
                              const Rational& rank, const DivisorClass& c1,
                              const Rational& c2);
// <(r,c,s),(r',c',s')> = c.c' - r s' - r' s
Rational mukai_pairing(const IntersectionRing& ring,
                       const FiberMukaiVector& v, const FiberMukaiVector& w);
// Dim M(V) = <v, v> + 2
Rational moduli_dimension(const IntersectionRing& ring,
                          const FiberMukaiVector& v);

// slope mu = (omega^{d-1} . c1) / ch0; d = 3 uses the ambient triple form,
// d = 2 the fiber pairing. Zero rank is an error.
Rational slope(const IntersectionRing& ring, const Rational& ch0,
               const DivisorClass& c1, const DivisorClass& omega, int dim);

struct SheafSlopeData {
  Rational ch0;
  DivisorClass c1;
};
bool is_slope_semistable(const IntersectionRing& ring,
                         const SheafSlopeData& sub, const SheafSlopeData& whole,
                         const DivisorClass& omega, int dim = 3);

// BPS classification by lexicographic positivity on the effective cones
// (nonnegative coefficients, not all zero).
enum class BpsClass { kBps, kAntiBps, kOutside };
std::string to_string(BpsClass c);
BpsClass bps_classify(const Rational& rank, const DivisorClass& c1,
                      const CurveClass& ch2);

// Dirac quantization: e.g integral (2 pi factored out)
bool dirac_check(const Rational& e, const Rational& g);

// c1(N_X Sigma) == K_Sigma; for the P1 base both sides are -2
bool cy_fibration_check(long long k_sigma, long long c1_normal);

}  // namespace branecalc
