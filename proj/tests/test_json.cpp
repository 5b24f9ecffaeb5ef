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
#include "json_io.hpp"
#include "support.hpp"

using namespace bstab;
using bstab::test::thrown_code;

namespace {

const NSLattice k3 = NSLattice::rank_one(2, 1);
const NSLattice two = NSLattice({{Integer(2), Integer(1)}, {Integer(1), Integer(-2)}}, 0);

}  // namespace

TEST_CASE("JSON rationals") {
  CHECK(rational_to_json(Rational(-5, 2)) == Json("-5/2"));
  CHECK(rational_from_json(Json("-10/4")) == Rational(-5, 2));
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(thrown_code([] { rational_from_json(Json(0.5)); }) == ErrorCode::Parse);
  CHECK(thrown_code([] { rational_from_json(Json("3/0")); }) == ErrorCode::Parse);
  CHECK(thrown_code([] { parse_json("{\"a\": "); }) == ErrorCode::Parse);
}

TEST_CASE("JSON lattices") {
  const Json j = parse_json(R"({"rank": 1, "gram": [[2]], "epsilon": 1})");
  const NSLattice L = lattice_from_json(j);
  CHECK(L.rank() == 1);
  CHECK(L.epsilon() == 1);
  CHECK(lattice_to_json(L) == j);
  CHECK(lattice_to_json(lattice_from_json(lattice_to_json(two))) == lattice_to_json(two));
  CHECK(thrown_code([] { lattice_from_json(parse_json(R"({"rank": 2, "gram": [[2]], "epsilon": 1})")); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(thrown_code([] { lattice_from_json(parse_json(R"({"gram": [[2]]})")); }) == ErrorCode::Parse);
  CHECK(thrown_code([] { lattice_from_json(parse_json(R"({"gram": [[1, 2], [3, 1]], "epsilon": 0})")); }).has_value());
}

TEST_CASE("JSON classes, divisors and points") {
  CHECK(thrown_code([] { mukai_from_json(parse_json(R"({"r": 1, "l": [0, 1], "s": 0})"), k3); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(thrown_code([] { mukai_from_json(parse_json(R"({"r": 1, "l": [0]})"), k3); }) == ErrorCode::Parse);
  CHECK(thrown_code([] { point_from_json(parse_json(R"({"beta": ["0"], "omega": ["0"]})"), k3); }).has_value());

  auto g = test::rng_for("json-roundtrip");
  for (int k = 0; k < 200; ++k) {
    const MukaiVector v = test::random_class(g, 2, 1000);
    CHECK(mukai_from_json(mukai_to_json(v), two) == v);
    const StabilityPoint P = test::random_point(g, two);
    const StabilityPoint Q = point_from_json(point_to_json(P), two);
    CHECK(Q.beta() == P.beta());
    CHECK(Q.omega() == P.omega());
  }
}

TEST_CASE("JSON regions") {
  const SliceRegion R{RationalDivisor{{1}}, RationalDivisor{{1}}, Rational(-1, 2), 1, 1, 2};
  const SliceRegion S = region_from_json(region_to_json(R), k3);
  CHECK(S.b0 == R.b0);
  CHECK(S.b1 == R.b1);
  CHECK(S.t0 == R.t0);
  CHECK(S.t1 == R.t1);
  const SliceRegion T = region_from_string("-1/2,1,1,2", R.B0, R.W0);
  CHECK(region_to_json(T) == region_to_json(R));
  CHECK(thrown_code([&] { region_from_string("0,1,1", R.B0, R.W0); }) == ErrorCode::Parse);
}

TEST_CASE("JSON invariant tables") {
  const MukaiVector a = make_mukai(1, {0}, -1), b = make_mukai(0, {1}, 0);
  ITable t;
  t.set(a, FormalLambda::symbol(a) * (RatFunc::q() - RatFunc(1)));
  t.set(b, FormalLambda(RatFunc(Rational(3, 2))));
  const ITable u = itable_from_json(itable_to_json(t), k3);
  CHECK(u == t);
  const Json lit = parse_json(R"({"entries": [{"class": {"r": 0, "l": [1], "s": 0}, "value": "3/2"},
                                              {"class": {"r": 0, "l": [0], "s": 1}, "value": 4}]})");
  const ITable w = itable_from_json(lit, k3);
  CHECK(w.value(b) == FormalLambda(RatFunc(Rational(3, 2))));
  CHECK(w.value(make_mukai(0, {0}, 1)) == FormalLambda(RatFunc(4)));
  const Json dup = parse_json(R"({"entries": [{"class": {"r": 0, "l": [1], "s": 0}, "value": "1"},
                                              {"class": {"r": 0, "l": [1], "s": 0}, "value": "2"}]})");
  CHECK(thrown_code([&] { itable_from_json(dup, k3); }) == ErrorCode::Parse);
  CHECK(thrown_code([] { itable_from_json(parse_json(R"({"entries": {}})"), k3); }) == ErrorCode::Parse);
}
