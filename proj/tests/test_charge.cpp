/*
 * Copyright 2026 The bstab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "charge.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bstab;
using bstab::test::thrown_code;

namespace {

const NSLattice k3 = NSLattice::rank_one(2, 1);

StabilityPoint at(const Rational& b, const Rational& w) { return StabilityPoint(k3, RationalDivisor{{b}}, RationalDivisor{{w}}); }

ComplexRational c(const Rational& re, const Rational& im) { return {re, im}; }

}  // namespace

TEST_CASE("central charges on a rank one K3") {
  CHECK(central_charge(at(0, 2), make_mukai(1, {0}, 1)) == c(3, 0));
  CHECK(central_charge(at(0, 1), make_mukai(1, {0}, 1)) == c(0, 0));
  CHECK(central_charge(at(0, 1), make_mukai(0, {1}, 0)) == c(0, 2));
}

TEST_CASE("phases in (0,1]") {
  CHECK(phase_in_01(at(0, 1), make_mukai(0, {1}, 0)).phase_label() == "1/2");
  CHECK(thrown_code([] { phase_in_01(at(0, 2), make_mukai(1, {0}, 1)); }) == ErrorCode::OutsideHeartImage);
  CHECK(phase_in_01(at(0, 2), make_mukai(-1, {0}, -1)).phase_label() == "1");
  CHECK(thrown_code([] { phase_in_01(at(0, 2), make_mukai(0, {0}, 0)); }) == ErrorCode::ZeroCharge);
}

TEST_CASE("phase comparison and rays") {
  CHECK(compare_phase(PhaseRay(c(0, 1)), PhaseRay(c(-1, 0))) == std::strong_ordering::less);
  CHECK(compare_phase(PhaseRay(c(7, 7)), PhaseRay(c(1, 1))) == std::strong_ordering::equal);
  CHECK(compare_phase(PhaseRay(c(-1, 1)), PhaseRay(c(1, 1))) == std::strong_ordering::greater);
  CHECK(same_ray(c(2, 4), c(1, 2)));
  CHECK_FALSE(same_ray(c(1, 2), c(-1, -2)));
  CHECK_FALSE(same_ray(c(1, 1), c(1, 2)));
}

TEST_CASE("rotations by quarter turns") {
  CHECK(rotate_charge(c(3, 0), 1) == c(-3, 0));
  CHECK(rotate_charge(c(0, 2), Rational(1, 2)) == c(2, 0));
  CHECK(rotate_charge(c(5, -1), 0) == c(5, -1));
  CHECK(thrown_code([] { rotate_charge(c(1, 0), Rational(1, 3)); }) == ErrorCode::UnsupportedRotation);
}

TEST_CASE("abs_squared and mass bound") {
  CHECK(abs_squared(c(3, 4)) == 25);
  CHECK(abs_squared(c(0, 0)) == 0);
  CHECK(abs_squared(c(Rational(1, 2), 0)) == Rational(1, 4));
  const StabilityPoint P = at(0, 1);
  CHECK(mass_bound(P, {}) == 0);
  CHECK(mass_bound(P, {make_mukai(0, {1}, 0), make_mukai(0, {0}, -1)}) == 3);
}

TEST_CASE("validity of stability points") {
  const ValidityReport bad = validate_point(at(0, 1), 50);
  CHECK(bad.kind == ValidityReport::Kind::Invalid);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == make_mukai(1, {0}, 1));
  CHECK(bad.witness_charge->is_zero());
  CHECK(validate_point(at(0, 2), 50).kind == ValidityReport::Kind::Valid);
  CHECK(validate_point(StabilityPoint(NSLattice::rank_one(2, 0), {{Rational(1, 3)}}, {{2}}), 10).kind ==
        ValidityReport::Kind::Valid);
}

TEST_CASE("reduced Hilbert polynomials") {
  const RationalDivisor b{{0}}, w{{1}};
  CHECK(reduced_hilbert(k3, b, w, make_mukai(1, {0}, 1)).coeffs == std::vector<Rational>{2, 0, 1});
  CHECK(reduced_hilbert(k3, b, w, make_mukai(0, {1}, 1)).coeffs == std::vector<Rational>{Rational(1, 2), 1});
  CHECK(reduced_hilbert(k3, b, w, make_mukai(0, {0}, 3)).coeffs == std::vector<Rational>{3});
}

TEST_CASE("Gieseker comparison and slope") {
  const RationalDivisor b{{0}}, w{{1}};
  CHECK(gieseker_compare(k3, b, w, make_mukai(1, {0}, 1), make_mukai(1, {0}, 1)) == std::strong_ordering::equal);
  CHECK(gieseker_compare(k3, b, w, make_mukai(1, {0}, 1), make_mukai(0, {1}, 1)) == std::strong_ordering::greater);
  CHECK(gieseker_compare(k3, b, w, make_mukai(1, {0}, 0), make_mukai(1, {0}, 1)) == std::strong_ordering::less);
  CHECK(mu_slope(k3, w, make_mukai(1, {1}, 0)) == 2);
  CHECK(mu_slope(k3, w, make_mukai(2, {1}, 0)) == 1);
  CHECK(mu_slope(k3, w, make_mukai(1, {0}, 5)) == 0);
  CHECK(thrown_code([&] { mu_slope(k3, w, make_mukai(0, {1}, 0)); }) == ErrorCode::ZeroRank);
}

TEST_CASE("P-equality by two routes") {
  const RationalDivisor b{{0}}, w{{1}};
  CHECK(p_equality_test(k3, b, w, make_mukai(1, {0}, 1), make_mukai(1, {0}, 1)));
  CHECK(p_equality_test(k3, b, w, make_mukai(1, {0}, 1), make_mukai(2, {0}, 2)));
  CHECK_FALSE(p_equality_test(k3, b, w, make_mukai(1, {0}, 1), make_mukai(1, {0}, -1)));
}

TEST_CASE("property: both charge routes agree with the oracle") {
  auto g = test::rng_for("charge-routes");
  for (const NSLattice& L : {k3, NSLattice({{2, 1}, {1, -2}}, 1), NSLattice({{0, 1}, {1, 0}}, 0)}) {
    for (int k = 0; k < 300; ++k) {
      const StabilityPoint P = test::random_point(g, L);
      const MukaiVector v = test::random_class(g, L.rank(), 12);
      const ComplexRational z = test::oracle_charge(L, P.beta(), P.omega(), v);
      CHECK(central_charge_pairing(P, v) == z);
      CHECK(central_charge_explicit(P, v) == z);
    }
  }
}

TEST_CASE("property: torsion Hilbert polynomials are n - Re Z / Im Z") {
  auto g = test::rng_for("torsion");
  for (int k = 0; k < 300; ++k) {
    const StabilityPoint P = test::random_point(g, k3);
    MukaiVector v = test::random_class(g, 1, 9);
    v.r = 0;
    if (v.l[0] == 0) continue;
    const ComplexRational z = central_charge(P, v);
    const HilbertPoly h = reduced_hilbert(k3, P.beta(), P.omega(), v);
    REQUIRE(h.degree() == 1);
    CHECK(h.coeffs[1] == 1);
    CHECK(h.coeffs[0] == -z.re / z.im);
  }
}
