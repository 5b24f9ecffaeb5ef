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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace bstab::test {

std::uint64_t& seed() {
  static std::uint64_t s = 20240611;
  return s;
}

std::mt19937_64 rng_for(const std::string& tag) {
  return std::mt19937_64(seed() ^ std::hash<std::string>{}(tag));
}

namespace {

Rational form(const NSLattice& L, const RationalDivisor& a, const RationalDivisor& b) {
  Rational acc = 0;
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) acc += a[i] * Rational(L.gram()[i][j]) * b[j];
  return acc;
}

}  // namespace

StabilityPoint random_point(std::mt19937_64& g, const NSLattice& L) {
  for (;;) {
    RationalDivisor omega = random_divisor(g, L.rank(), 9, 4);
    if (form(L, omega, omega) > 0) return StabilityPoint(L, random_divisor(g, L.rank(), 6, 5), omega);
  }
}

ComplexRational oracle_charge(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                              const MukaiVector& v) {
  RationalDivisor l;
  for (const auto& x : v.l) l.coeffs.push_back(Rational(x));
  const Rational r(v.r), s(v.s);
  const Rational re = form(L, l, beta) - s - r * (form(L, beta, beta) - form(L, omega, omega)) / 2;
  const Rational im = form(L, l, omega) - r * form(L, beta, omega);
  return {re, im};
}

std::vector<MukaiVector> oracle_enumerate_rank_one(const NSLattice& L, const Rational& beta, const Rational& omega,
                                                   const Rational& m2) {
  // With h = H^2, x = l - r beta and w = omega: Im Z = h x w, and for r != 0
  // Re Z = (v^2 + h r^2 w^2 - h x^2) / (2r) with v^2 >= -2. Both |Re Z| and
  // |Im Z| are at most m, which bounds |r|, then x, then s. Floating point is
  // only used for the box, padded by 2 on every side.
  const double h = L.gram()[0][0].get_d();
  const double w = omega.get_d();
  const double b = beta.get_d();
  const double m = std::sqrt(m2.get_d());
  const double xmax = m / (h * w);
  const double c = h * w * w;
  const long rmax = static_cast<long>(std::ceil((2 * m + std::sqrt(4 * m * m + 4 * c * (2 + h * xmax * xmax))) / (2 * c))) + 2;
  std::vector<MukaiVector> out;
  RationalDivisor B{{beta}}, W{{omega}};
  for (long r = -rmax; r <= rmax; ++r) {
    const long l0 = static_cast<long>(std::floor(r * b - xmax)) - 2;
    const long l1 = static_cast<long>(std::ceil(r * b + xmax)) + 2;
    for (long l = l0; l <= l1; ++l) {
      double centre;
      if (r != 0) {
        const double x = l - r * b;
        centre = (l * l * h + h * r * r * w * w - h * x * x) / (2.0 * r);
      } else {
        centre = h * l * b;
      }
      const long s0 = static_cast<long>(std::floor(centre - m)) - 2;
      const long s1 = static_cast<long>(std::ceil(centre + m)) + 2;
      for (long s = s0; s <= s1; ++s) {
        MukaiVector v = make_mukai(r, {l}, s);
        if (v.is_zero()) continue;
        const Integer sq = L.gram()[0][0] * l * l - 2 * Integer(r) * Integer(s);
        if (sq < -2) continue;
        const ComplexRational z = oracle_charge(L, B, W, v);
        if (z.re * z.re + z.im * z.im <= m2) out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bstab::test
