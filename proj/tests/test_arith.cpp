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

#include <cmath>

#include "doctest.h"
#include "poly.hpp"
#include "quadext.hpp"
#include "rational.hpp"
#include "support.hpp"

using namespace bstab;
using bstab::test::thrown_code;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(thrown_code([] { parse_rational("1/0"); }) == ErrorCode::Parse);
  CHECK(thrown_code([] { parse_rational("x"); }) == ErrorCode::Parse);
  CHECK(thrown_code([] { parse_rational(""); }) == ErrorCode::Parse);
}

TEST_CASE("rounding helpers") {
  CHECK(floor_int(Rational(-3, 2)) == -2);
  CHECK(ceil_int(Rational(-3, 2)) == -1);
  CHECK(ceil_sqrt(Rational(10)) == 4);
  CHECK(ceil_sqrt(Rational(9)) == 3);
  const Rational x = simplest_between(Rational(1, 3), Rational(1, 2));
  CHECK(x == Rational(2, 5));
}

TEST_CASE("polynomial division and gcd") {
  const UPoly x = UPoly::variable();
  const UPoly p = (x - UPoly::constant(1)) * (x + UPoly::constant(2)) * (x + UPoly::constant(2));
  const UPoly q = (x + UPoly::constant(2)) * (x - UPoly::constant(5));
  auto [quo, rem] = divmod(p, q);
  CHECK(quo * q + rem == p);
  CHECK(rem.degree() < q.degree());
  CHECK(gcd(p, q) == x + UPoly::constant(2));
  CHECK(squarefree_part(p).degree() == 2);
  CHECK(thrown_code([&] { divmod(p, UPoly()); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("real root isolation") {
  const UPoly x = UPoly::variable();
  const UPoly p = x * x - UPoly::constant(2);
  auto roots = isolate_real_roots(p, -10, 10);
  REQUIRE(roots.size() == 2);
  CHECK_FALSE(roots[0].exact);
  CHECK(roots[0].hi <= roots[1].lo);
  SturmSequence s(p);
  refine_root(s, roots[1], Rational(1, 1000000));
  CHECK(std::abs(roots[1].lo.get_d() - std::sqrt(2.0)) < 1e-5);
  const UPoly lin = x * Rational(3) - UPoly::constant(2);
  auto r = isolate_real_roots(lin, 0, 1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].exact);
  CHECK(r[0].lo == Rational(2, 3));
  CHECK(s.count_open(-2, 2) == 2);
  CHECK(s.count_open(0, 1) == 0);
}

TEST_CASE("property: root counts agree with sign changes of a product of linear factors") {
  auto g = test::rng_for("roots");
  for (int k = 0; k < 100; ++k) {
    UPoly p = UPoly::constant(1);
    std::vector<Rational> rts;
    const int n = static_cast<int>(test::uniform(g, 1, 5));
    for (int i = 0; i < n; ++i) {
      const Rational r = test::random_rational(g, 20, 7);
      rts.push_back(r);
      p *= UPoly::variable() - UPoly::constant(r);
    }
    std::sort(rts.begin(), rts.end());
    rts.erase(std::unique(rts.begin(), rts.end()), rts.end());
    auto found = isolate_real_roots(p, -30, 30);
    REQUIRE(found.size() == rts.size());
    for (std::size_t i = 0; i < rts.size(); ++i) {
      CHECK(found[i].lo <= rts[i]);
      CHECK(rts[i] <= found[i].hi);
    }
    CHECK(cauchy_root_bound(p) >= abs(rts.front()));
    CHECK(cauchy_root_bound(p) >= abs(rts.back()));
  }
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadExt r2 = QuadExt::sqrt_of(2);
  CHECK(r2 * r2 == QuadExt(2));
  CHECK(QuadExt::sqrt_of(8) == QuadExt(0, 2, 2));
  CHECK(QuadExt::sqrt_of(Rational(9, 4)) == QuadExt(Rational(3, 2)));
  CHECK(sgn(r2 - QuadExt(Rational(141, 100))) > 0);
  CHECK(sgn(r2 - QuadExt(Rational(142, 100))) < 0);
  CHECK((QuadExt(1) + r2) * (QuadExt(1) - r2) == QuadExt(-1));
  CHECK(QuadExt(1) / (QuadExt(1) + r2) == r2 - QuadExt(1));
}

TEST_CASE("property: quadratic extension signs match floating point away from zero") {
  auto g = test::rng_for("quadext");
  for (int k = 0; k < 500; ++k) {
    const Rational a = test::random_rational(g, 50, 9), b = test::random_rational(g, 50, 9);
    const long d = test::uniform(g, 2, 30);
    const QuadExt x = QuadExt(a) + QuadExt(b) * QuadExt::sqrt_of(d);
    const double f = a.get_d() + b.get_d() * std::sqrt(static_cast<double>(d));
    if (std::abs(f) > 1e-9) CHECK(sgn(x) == (f > 0 ? 1 : -1));
    Rational lo, hi;
    x.bracket(Rational(1, 1000), lo, hi);
    CHECK(hi - lo <= Rational(1, 1000));
    CHECK(QuadExt(lo) <= x);
    CHECK(x <= QuadExt(hi));
  }
}
