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

#include "doctest.h"
#include "lattice.hpp"
#include "support.hpp"

using namespace bstab;
using bstab::test::thrown_code;

namespace {

const NSLattice k3 = NSLattice::rank_one(2, 1);
const NSLattice abelian = NSLattice::rank_one(2, 0);

NSLattice rank_two() { return NSLattice({{2, 1}, {1, -2}}, 1); }

}  // namespace

TEST_CASE("ns_dot reads the gram matrix") {
  CHECK(ns_dot(k3, RationalDivisor{{1}}, RationalDivisor{{1}}) == 2);
  CHECK(ns_dot(k3, RationalDivisor{{0}}, RationalDivisor{{Rational(7, 3)}}) == 0);
  CHECK(ns_dot(rank_two(), RationalDivisor{{1, 0}}, RationalDivisor{{0, 1}}) == 1);
}

TEST_CASE("mukai pairing, square and chi on a rank one K3") {
  const auto o = make_mukai(1, {0}, 1);
  CHECK(mukai_pair(k3, o, o) == -2);
  CHECK(mukai_pair(k3, make_mukai(0, {0}, 1), make_mukai(1, {0}, 0)) == -1);
  CHECK(mukai_pair(k3, o, make_mukai(0, {0}, 0)) == 0);
  CHECK(mukai_square(k3, make_mukai(1, {0}, -1)) == 2);
  CHECK(mukai_square(k3, make_mukai(0, {1}, 0)) == 2);
  CHECK(chi(k3, o, o) == 2);
  CHECK(chi(k3, make_mukai(0, {0}, 1), make_mukai(1, {0}, 0)) == 1);
}

TEST_CASE("mukai vectors from Chern data") {
  CHECK(mukai_from_chern(k3, 1, {0}, 0) == make_mukai(1, {0}, 1));
  CHECK(mukai_from_chern(abelian, 1, {0}, 0) == make_mukai(1, {0}, 0));
  CHECK(mukai_from_chern(k3, 0, {1}, -1) == make_mukai(0, {1}, -1));
  CHECK(thrown_code([] { mukai_from_chern(k3, 1, {0}, Rational(1, 2)); }) == ErrorCode::NonIntegral);
}

TEST_CASE("lattices must be even, symmetric and hyperbolic") {
  CHECK(thrown_code([] { NSLattice({{-2}}, 1); }) == ErrorCode::NotHyperbolic);
  CHECK(thrown_code([] { NSLattice({{2, 0}, {0, 2}}, 1); }) == ErrorCode::NotHyperbolic);
  CHECK(thrown_code([] { NSLattice({{1}}, 1); }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { NSLattice({{2, 1}, {0, -2}}, 1); }) == ErrorCode::InvalidArgument);
  CHECK_FALSE(thrown_code([] { rank_two(); }));
}

TEST_CASE("mismatched dimensions are rejected") {
  CHECK(thrown_code([] { mukai_pair(k3, make_mukai(1, {0, 0}, 0), make_mukai(1, {0}, 0)); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("twisting by a line bundle preserves the pairing") {
  auto g = test::rng_for("twist");
  const NSLattice L = rank_two();
  for (int k = 0; k < 200; ++k) {
    const MukaiVector a = test::random_class(g, 2, 6), b = test::random_class(g, 2, 6);
    const std::vector<Integer> d{Integer(test::uniform(g, -3, 3)), Integer(test::uniform(g, -3, 3))};
    CHECK(mukai_pair(L, twist_by_line_bundle(L, a, d), twist_by_line_bundle(L, b, d)) == mukai_pair(L, a, b));
  }
  CHECK(twist_by_line_bundle(k3, make_mukai(1, {0}, -1), {1}) == make_mukai(1, {1}, 0));
}

TEST_CASE("property: the pairing is bilinear and symmetric") {
  auto g = test::rng_for("pairing");
  for (const NSLattice& L : {k3, rank_two()}) {
    for (int k = 0; k < 300; ++k) {
      const MukaiVector a = test::random_class(g, L.rank(), 20), b = test::random_class(g, L.rank(), 20),
                        c = test::random_class(g, L.rank(), 20);
      const Integer m = test::uniform(g, -5, 5);
      CHECK(mukai_pair(L, a, b) == mukai_pair(L, b, a));
      CHECK(chi(L, a, b) == chi(L, b, a));
      CHECK(mukai_pair(L, m * a + c, b) == m * mukai_pair(L, a, b) + mukai_pair(L, c, b));
    }
  }
}
