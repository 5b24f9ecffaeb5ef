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

#include <set>

#include "doctest.h"
#include "enumeration.hpp"
#include "support.hpp"

using namespace bstab;
using bstab::test::thrown_code;

namespace {

const NSLattice k3 = NSLattice::rank_one(2, 1);

StabilityPoint at(const NSLattice& L, const Rational& b, const Rational& w) {
  return StabilityPoint(L, RationalDivisor{{b}}, RationalDivisor{{w}});
}

std::vector<MukaiVector> run(const StabilityPoint& P, const Rational& m2) {
  EnumerationBudget budget;
  budget.max_abs_squared = m2;
  return enumerate_bounded(P, budget).classes;
}

}  // namespace

TEST_CASE("bounded enumeration examples") {
  const auto small = run(at(k3, 0, 2), Rational(1, 4));
  CHECK(small == test::oracle_enumerate_rank_one(k3, 0, 2, Rational(1, 4)));
  const auto one = run(at(k3, 0, 2), 1);
  CHECK(std::count(one.begin(), one.end(), make_mukai(0, {0}, 1)) == 1);
  CHECK(std::count(one.begin(), one.end(), make_mukai(0, {0}, -1)) == 1);
  for (const auto& v : run(at(k3, 0, 1), 10)) CHECK_FALSE(v.is_zero());
}

TEST_CASE("property: bounded enumeration equals the naive box scan") {
  auto g = test::rng_for("enumerate");
  for (long h : {2L, 4L, 6L}) {
    const NSLattice L = NSLattice::rank_one(h, 1);
    for (int k = 0; k < 8; ++k) {
      const Rational b = test::random_rational(g, 6, 4);
      Rational w = test::random_rational(g, 8, 4);
      if (w <= 0) w = -w + Rational(1, 2);
      const Rational m2 = test::uniform(g, 1, 30);
      CHECK(run(at(L, b, w), m2) == test::oracle_enumerate_rank_one(L, b, w, m2));
    }
  }
}

TEST_CASE("property: enumeration output is sorted and closed under the bound") {
  auto g = test::rng_for("enumerate-sorted");
  const NSLattice L({{2, 1}, {1, -2}}, 1);
  for (int k = 0; k < 5; ++k) {
    const StabilityPoint P = test::random_point(g, L);
    const auto cls = run(P, 8);
    CHECK(std::is_sorted(cls.begin(), cls.end()));
    for (const auto& v : cls) {
      CHECK(mukai_square(L, v) >= -2);
      CHECK(abs_squared(central_charge(P, v)) <= 8);
    }
  }
}

TEST_CASE("budget overflow is reported") {
  EnumerationBudget budget;
  budget.max_abs_squared = 400;
  budget.max_classes = 10;
  CHECK(thrown_code([&] { enumerate_bounded(at(k3, 0, 2), budget); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("ray decompositions") {
  const StabilityPoint P = at(k3, 0, 2);
  const ChargeFn Z = charge_fn(P);
  const MukaiVector v0 = make_mukai(0, {0}, -1);
  const MukaiVector a = make_mukai(0, {0}, -2);
  CHECK(enumerate_ray_decompositions({a}, a, Z) == std::vector<Decomposition>{{a}});
  CHECK(enumerate_ray_decompositions({v0, a}, a, Z) == std::vector<Decomposition>{{a}, {v0, v0}});
  const auto cands = effective_candidates(P, a);
  CHECK(std::count(cands.begin(), cands.end(), v0) == 1);
  CHECK(std::count(cands.begin(), cands.end(), a) == 1);
  CHECK(thrown_code([&] { enumerate_ray_decompositions(P, make_mukai(1, {0}, 4)); }) ==
        ErrorCode::ZeroCharge);
}

TEST_CASE("property: decompositions sum to alpha and are closed under permutation") {
  auto g = test::rng_for("decompositions");
  const NSLattice L = k3;
  int nontrivial = 0;
  for (int k = 0; k < 40; ++k) {
    const StabilityPoint P = at(L, test::random_rational(g, 3, 3), Rational(test::uniform(g, 2, 8), 2));
    const MukaiVector alpha = Integer(test::uniform(g, 1, 3)) * test::random_class(g, 1, 2);
    // The output grows exponentially in |Z(alpha)| / min |Z(v)|.
    const ComplexRational za = central_charge(P, alpha);
    if (za.is_zero() || za.abs_squared() > 150) continue;
    const auto ds = enumerate_ray_decompositions(P, alpha);
    const std::set<Decomposition> all(ds.begin(), ds.end());
    CHECK(all.size() == ds.size());
    if (ds.size() > 1) ++nontrivial;
    for (const auto& d : ds) {
      MukaiVector sum = make_mukai(0, {0}, 0);
      ComplexRational z;
      for (const auto& v : d) {
        sum += v;
        CHECK_FALSE(central_charge(P, v).is_zero());
        z += central_charge(P, v);
      }
      CHECK(sum == alpha);
      CHECK(z == central_charge(P, alpha));
      // Adjacent transpositions generate every permutation.
      for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        Decomposition p = d;
        std::swap(p[i], p[i + 1]);
        CHECK(all.count(p) == 1);
      }
    }
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("property: ray candidates equal the ray closure of the full enumeration") {
  auto g = test::rng_for("ray-candidates");
  for (const NSLattice& L : {k3, NSLattice({{2, 1}, {1, -2}}, 1)}) {
    for (int k = 0; k < 25; ++k) {
      const StabilityPoint P = test::random_point(g, L);
      const MukaiVector alpha = Integer(test::uniform(g, 1, 2)) * test::random_class(g, L.rank(), 2);
      const ComplexRational z = central_charge(P, alpha);
      if (z.is_zero() || z.abs_squared() > 60) continue;
      EnumerationBudget budget;
      budget.max_abs_squared = z.abs_squared();
      const auto slow = ray_candidates(L, enumerate_bounded(P, budget).classes, alpha, charge_fn(P));
      CHECK(effective_candidates(P, alpha) == slow);
    }
  }
}
