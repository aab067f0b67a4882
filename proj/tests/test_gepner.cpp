#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "branecalc/errors.hpp"
#include "branecalc/gepner.hpp"
#include "branecalc/registry.hpp"
#include "oracles.hpp"

using branecalc::BigInt;
using branecalc::BoundaryState;
using branecalc::GepnerModel;
using branecalc::RingElement;

namespace {

std::map<int, long long> term_map(const RingElement& e) {
  std::map<int, long long> out;
  for (const auto& [slot, c] : e.terms()) out[slot] = c.to_int64();
  return out;
}

BoundaryState state_of(const std::array<int, 5>& l, int m, int s = 0) {
  BoundaryState out;
  out.l = l;
  out.m = m;
  out.s = s;
  return out;
}

}  // namespace

TEST_CASE("builtin model data") {
  GepnerModel m8 = branecalc::load_builtin_model("p11222-8");
  CHECK(m8.big_k == 8);
  CHECK(m8.modulus() == 16);
  std::array<int, 5> w8;
  for (int j = 0; j < 5; ++j) w8[j] = m8.factors[j].weight;
  CHECK(w8 == std::array<int, 5>{1, 1, 2, 2, 2});
  CHECK(m8.relations.has_value());
  CHECK(m8.relations->reduced_dim() == 6);

  GepnerModel m12 = branecalc::load_builtin_model("p11226-12");
  CHECK(m12.big_k == 12);
  CHECK(m12.modulus() == 24);
  std::array<int, 5> w12;
  for (int j = 0; j < 5; ++j) w12[j] = m12.factors[j].weight;
  CHECK(w12 == std::array<int, 5>{1, 1, 2, 2, 6});
  CHECK_FALSE(m12.relations.has_value());
}

TEST_CASE("excitation ladder elements") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  CHECK(branecalc::excitation_element(model, 0, 0) == RingElement::unit(16));

  // L=1 on a weight-1 factor: r^-1 + r
  std::map<int, long long> t1 = {{1, 1}, {15, 1}};
  CHECK(term_map(branecalc::excitation_element(model, 0, 1)) == t1);

  // L=2 on a weight-2 factor: g^-2 + 1 + g^2 in slots 12, 0, 4
  std::map<int, long long> t2 = {{12, 1}, {0, 1}, {4, 1}};
  CHECK(term_map(branecalc::excitation_element(model, 2, 2)) == t2);

  for (int label = 0; label <= 6; ++label) {
    CHECK(branecalc::excitation_element(model, 0, label).coefficient_sum() ==
          BigInt(label + 1));
  }
  CHECK_THROWS_AS(branecalc::excitation_element(model, 2, 3),
                  branecalc::LabelRangeError);
}

TEST_CASE("ground fusion factors") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  std::map<int, long long> w1 = {{0, 1}, {14, -1}};
  CHECK(term_map(branecalc::ground_fusion_element(model, 0)) == w1);
  std::map<int, long long> w2 = {{0, 1}, {12, -1}};
  CHECK(term_map(branecalc::ground_fusion_element(model, 2)) == w2);
  CHECK(branecalc::ground_fusion_element(model, 0).coefficient_sum().is_zero());
}

TEST_CASE("fusion band elements") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  CHECK(branecalc::fusion_element(model, 0, 0, 0) ==
        branecalc::ground_fusion_element(model, 0));
  // n_{1,0} on a weight-1 factor: g^{1/2} - g^{-3/2} = r - r^-3
  std::map<int, long long> n10 = {{1, 1}, {13, -1}};
  CHECK(term_map(branecalc::fusion_element(model, 0, 1, 0)) == n10);
}

TEST_CASE("fusion band equals ladder product on every label pair") {
  for (const char* name : {"p11222-8", "p11226-12"}) {
    GepnerModel model = branecalc::load_builtin_model(name);
    for (int j = 0; j < 5; ++j) {
      const int level = model.factors[j].level;
      RingElement n00 = branecalc::ground_fusion_element(model, j);
      for (int la = 0; la <= level; ++la) {
        for (int lb = 0; lb <= level; ++lb) {
          RingElement band = branecalc::fusion_element(model, j, la, lb);
          CHECK(band == branecalc::fusion_element(model, j, lb, la));
          RingElement product = branecalc::excitation_element(model, j, la) *
                                n00 *
                                branecalc::excitation_element(model, j, lb);
          CHECK(band == product);
        }
      }
    }
  }
}

TEST_CASE("su2 fusion rule") {
  for (int l = 0; l <= 6; ++l) CHECK(branecalc::su2_fusion(6, 0, l, l) == 1);
  CHECK(branecalc::su2_fusion(2, 1, 1, 2) == 1);
  CHECK(branecalc::su2_fusion(2, 1, 1, 1) == 0);
  CHECK(branecalc::su2_fusion(2, 2, 2, 2) == 0);  // truncated at level 2
  CHECK_THROWS_AS(branecalc::su2_fusion(2, 3, 0, 0),
                  branecalc::LabelRangeError);
}

TEST_CASE("su2 fusion matches the Verlinde oracle up to level 10") {
  for (int level = 0; level <= 10; ++level) {
    for (int l1 = 0; l1 <= level; ++l1) {
      for (int l2 = 0; l2 <= level; ++l2) {
        for (int l3 = 0; l3 <= level; ++l3) {
          CHECK(branecalc::su2_fusion(level, l1, l2, l3) ==
                oracles::verlinde_fusion(level, l1, l2, l3));
        }
      }
    }
  }
}

TEST_CASE("ground intersection of the K=8 model") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  RingElement ground = branecalc::ground_intersection(model);
  CHECK(ground.coefficient_sum().is_zero());

  // frozen from the convolution oracle: expand (1-g^-1)^2 (1-g^-2)^3 mod g^8
  std::vector<long long> u(16, 0);  // (1-g^-1)^2 in r-slots
  u[0] = 1;
  u[14] = -2;
  u[12] = 1;
  std::vector<long long> w(16, 0);  // (1-g^-2)^3 in r-slots
  w[0] = 1;
  w[12] = -3;
  w[8] = 3;
  w[4] = -1;
  std::vector<long long> expected = oracles::convolve(u, w);
  CHECK(oracles::from_element(ground) == expected);

  // g-basis coefficients 2g + 2g^2 - 6g^3 + 6g^5 - 2g^6 - 2g^7
  std::map<int, long long> g_terms = {{2, 2},  {4, 2},  {6, -6},
                                      {10, 6}, {12, -2}, {14, -2}};
  CHECK(term_map(ground) == g_terms);
}

TEST_CASE("ground intersection of the K=12 model has vanishing index") {
  GepnerModel model = branecalc::load_builtin_model("p11226-12");
  RingElement ground = branecalc::ground_intersection(model);
  CHECK(ground.coefficient_sum().is_zero());
  CHECK_FALSE(ground.is_zero());
}

TEST_CASE("intersection element basics") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  BoundaryState ground = state_of({0, 0, 0, 0, 0}, 0);
  CHECK(branecalc::intersection_index_element(model, ground, ground) ==
        branecalc::ground_intersection(model));

  // shifting M2 by 2 multiplies by r^2
  BoundaryState shifted = state_of({0, 0, 0, 0, 0}, 2);
  RingElement base = branecalc::ground_intersection(model);
  CHECK(branecalc::intersection_index_element(model, ground, shifted) ==
        base * RingElement::monomial(16, 2));

  // S dependence is the overall sign
  BoundaryState flipped = state_of({0, 0, 0, 0, 0}, 0, 2);
  CHECK(branecalc::intersection_index_element(model, ground, flipped) ==
        -base);
}

TEST_CASE("swapping states conjugates the index") {
  // I(s2, s1) = -conjugate(I(s1, s2)): the total weight equals K so the
  // monomial from flipping every band is g^K = 1
  std::mt19937_64 rng(211);
  for (const char* name : {"p11222-8", "p11226-12"}) {
    GepnerModel model = branecalc::load_builtin_model(name);
    std::uniform_int_distribution<int> mdist(0, model.modulus() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::array<int, 5> la{}, lb{};
      for (int j = 0; j < 5; ++j) {
        std::uniform_int_distribution<int> ldist(0, model.factors[j].level);
        la[j] = ldist(rng);
        lb[j] = ldist(rng);
      }
      BoundaryState s1 = state_of(la, mdist(rng));
      BoundaryState s2 = state_of(lb, mdist(rng));
      RingElement forward = branecalc::intersection_index_element(model, s1, s2);
      RingElement backward = branecalc::intersection_index_element(model, s2, s1);
      CHECK(backward == -(forward.conjugate()));
    }
  }
}

TEST_CASE("direct channel sum equals the shift-matrix method") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  BoundaryState ground = state_of({0, 0, 0, 0, 0}, 0);
  // ground-state calibration: the normalization constant is one
  CHECK(branecalc::intersection_index_direct(model, ground, ground) ==
        branecalc::intersection_index_element(model, ground, ground));

  // single excited factor against the ground state
  BoundaryState excited = state_of({1, 0, 0, 0, 0}, 1);
  CHECK(branecalc::intersection_index_direct(model, ground, excited) ==
        branecalc::intersection_index_element(model, ground, excited));

  // the direct route also equals t_1 * ground element up to the M shift
  RingElement via_ladder = branecalc::excitation_element(model, 0, 1) *
                           branecalc::ground_intersection(model) *
                           RingElement::monomial(16, 1);
  CHECK(branecalc::intersection_index_direct(model, ground, excited) ==
        via_ladder);

  // random spot checks on both models, including S flips
  std::mt19937_64 rng(223);
  for (const char* name : {"p11222-8", "p11226-12"}) {
    GepnerModel m = branecalc::load_builtin_model(name);
    std::uniform_int_distribution<int> mdist(0, m.modulus() - 1);
    std::uniform_int_distribution<int> sdist(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::array<int, 5> la{}, lb{};
      for (int j = 0; j < 5; ++j) {
        std::uniform_int_distribution<int> ldist(0, m.factors[j].level);
        la[j] = ldist(rng);
        lb[j] = ldist(rng);
      }
      BoundaryState s1 = state_of(la, mdist(rng), 2 * sdist(rng));
      BoundaryState s2 = state_of(lb, mdist(rng), 2 * sdist(rng));
      CHECK(branecalc::intersection_index_direct(m, s1, s2) ==
            branecalc::intersection_index_element(m, s1, s2));
    }
  }
}

TEST_CASE("boundary state charges") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  BoundaryState ground = state_of({0, 0, 0, 0, 0}, 0);
  std::vector<BigInt> q = branecalc::boundary_state_charge(model, ground);
  std::vector<BigInt> expected = {1, -1, 0, 0, 0, 0};
  CHECK(q == expected);

  // selection rule
  CHECK_THROWS_AS(
      branecalc::boundary_state_charge(model, state_of({0, 0, 0, 0, 0}, 1)),
      branecalc::ParityError);
  CHECK_THROWS_AS(
      branecalc::boundary_state_charge(model, state_of({1, 0, 0, 0, 0}, 0)),
      branecalc::ParityError);

  // exactly 8 admissible M values for L = (1,0,0,0,0)
  int admissible = 0;
  for (int m = 0; m < 16; ++m) {
    BoundaryState s = state_of({1, 0, 0, 0, 0}, m);
    if (!s.parity_ok()) continue;
    ++admissible;
    CHECK_NOTHROW(branecalc::boundary_state_charge(model, s));
  }
  CHECK(admissible == 8);

  GepnerModel m12 = branecalc::load_builtin_model("p11226-12");
  CHECK_THROWS_AS(
      branecalc::boundary_state_charge(m12, state_of({0, 0, 0, 0, 0}, 0)),
      branecalc::MissingRelationsError);
}

TEST_CASE("charge pipeline is linear in the M superposition") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  const std::array<int, 5> labels = {1, 0, 0, 0, 0};
  RingElement slot_a = RingElement::monomial(16, 1);
  RingElement slot_b = RingElement::monomial(16, 5);
  std::vector<BigInt> qa = branecalc::charge_from_slot_element(model, labels, slot_a);
  std::vector<BigInt> qb = branecalc::charge_from_slot_element(model, labels, slot_b);
  RingElement both = slot_a + slot_b * BigInt(3);
  std::vector<BigInt> qboth =
      branecalc::charge_from_slot_element(model, labels, both);
  for (int i = 0; i < 6; ++i) CHECK(qboth[i] == qa[i] + BigInt(3) * qb[i]);
}

TEST_CASE("charge orbit is closed under the cyclic symmetry") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  // multiplication by g shifts M by 2; the set of Gepner charges over the
  // admissible M values is a single orbit
  std::set<std::vector<std::string>> orbit, shifted_orbit;
  for (int m = 1; m < 16; m += 2) {
    auto encode = [](const std::vector<BigInt>& q) {
      std::vector<std::string> out;
      for (const BigInt& c : q) out.push_back(c.str());
      return out;
    };
    orbit.insert(encode(
        branecalc::boundary_state_charge(model, state_of({1, 0, 0, 0, 0}, m))));
    shifted_orbit.insert(encode(branecalc::boundary_state_charge(
        model, state_of({1, 0, 0, 0, 0}, (m + 2) % 16))));
  }
  CHECK(orbit == shifted_orbit);
  CHECK(orbit.size() == 8);
}

TEST_CASE("self-spectrum elements vanish at g = 1") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  std::mt19937_64 rng(227);
  std::uniform_int_distribution<int> mdist(0, 15);
  for (int trial = 0; trial < 30; ++trial) {
    std::array<int, 5> l{};
    for (int j = 0; j < 5; ++j) {
      std::uniform_int_distribution<int> ldist(0, model.factors[j].level);
      l[j] = ldist(rng);
    }
    BoundaryState s = state_of(l, mdist(rng));
    CHECK(branecalc::self_spectrum_element(model, s)
              .coefficient_sum()
              .is_zero());
  }
}

TEST_CASE("restricted self-spectrum of the weight-one pair") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  // n_{1,1} n_{0,0} = g - 2 g^-1 + g^-3 (r-slots 2, 14, 10)
  RingElement e = branecalc::subset_self_element(model, {1, 0});
  std::map<int, long long> expected = {{2, 1}, {14, -2}, {10, 1}};
  CHECK(term_map(e) == expected);
}

TEST_CASE("marginal counting under the default interpretation") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  // reduced |0,0> element is (0, 2, -1, 2, -1, 2): half abs sum 4, vac 1
  branecalc::MarginalCount pair00 = branecalc::marginal_count(model, {0, 0});
  CHECK(pair00.marginal == 3);
  CHECK(pair00.vac == 1);
  CHECK(pair00.half_exact);

  // reduced |1,0> element is (0, 3, 0, 2, 0, 3): half abs sum 4, vac 1
  branecalc::MarginalCount pair10 = branecalc::marginal_count(model, {1, 0});
  CHECK(pair10.marginal == 3);
  CHECK(pair10.vac == 1);

  // the L = k fixed point doubles the vacuum channel
  CHECK(branecalc::marginal_count(model, {6, 0}).vac == 2);
  CHECK(branecalc::marginal_count(model, {6, 0, 0, 0, 0}).vac == 2);
  CHECK(branecalc::marginal_count(model, {3, 0, 0, 0, 0}).vac == 1);

  // factor blocks are documented in the note
  CHECK(pair00.factors_note.find("factors 1,2") != std::string::npos);
}

TEST_CASE("marginal interpretations are selectable and strict") {
  GepnerModel model = branecalc::load_builtin_model("p11222-8");
  // projected (no relation reduction) |0,0>: abs of (1, -2 g^-1, g^-2) is 4
  branecalc::MarginalCount projected = branecalc::marginal_count(
      model, {0, 0}, branecalc::MarginalInterpretation::kProjectedHalfAbs);
  CHECK(projected.marginal == 1);
  CHECK(projected.vac == 1);

  branecalc::MarginalCount raw = branecalc::marginal_count(
      model, {0, 0}, branecalc::MarginalInterpretation::kElementHalfAbs);
  CHECK(raw.marginal == 1);

  CHECK_THROWS_AS(branecalc::marginal_interpretation_from_string("bogus"),
                  branecalc::LabelRangeError);
  CHECK_THROWS_AS(branecalc::marginal_count(model, {0, 0, 0, 0}),
                  branecalc::LabelRangeError);

  // default interpretation needs relations
  GepnerModel m12 = branecalc::load_builtin_model("p11226-12");
  CHECK_THROWS_AS(branecalc::marginal_count(m12, {0, 0, 0}),
                  branecalc::MissingRelationsError);
  // but the projected reading works and the vac column is still defined
  branecalc::MarginalCount fallback = branecalc::marginal_count(
      m12, {4, 0, 0}, branecalc::MarginalInterpretation::kProjectedHalfAbs);
  CHECK(fallback.vac == 2);  // L = k = 4 fixed point
  CHECK(branecalc::subset_vacuum_count(m12, {2, 0, 0}) == 1);
}
