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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charge.hpp"
#include "errors.hpp"
#include "lattice.hpp"

namespace bstab::test {

/// Code of the bstab::Error thrown by f, or nullopt when f returns normally.
template <class F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Seed shared by every randomized test; set with --seed=N.
std::uint64_t& seed();

/// Fresh generator for one test case, derived from the global seed and a tag.
std::mt19937_64 rng_for(const std::string& tag);

inline long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

/// p/q with |p| <= pmax, 1 <= q <= qmax.
inline Rational random_rational(std::mt19937_64& g, long pmax, long qmax) {
  Rational x(uniform(g, -pmax, pmax), uniform(g, 1, qmax));
  x.canonicalize();
  return x;
}

inline RationalDivisor random_divisor(std::mt19937_64& g, int rank, long pmax, long qmax) {
  RationalDivisor d;
  for (int i = 0; i < rank; ++i) d.coeffs.push_back(random_rational(g, pmax, qmax));
  return d;
}

inline MukaiVector random_class(std::mt19937_64& g, int rank, long bound) {
  MukaiVector v;
  v.r = uniform(g, -bound, bound);
  for (int i = 0; i < rank; ++i) v.l.push_back(Integer(uniform(g, -bound, bound)));
  v.s = uniform(g, -bound, bound);
  return v;
}

/// Random omega with omega^2 > 0 and beta; the lattice must be hyperbolic.
StabilityPoint random_point(std::mt19937_64& g, const NSLattice& L);

/// Z = l.beta - s - r(beta^2 - omega^2)/2 + i (l.omega - r beta.omega), written
/// out with explicit Gram sums and no library charge code.
ComplexRational oracle_charge(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                              const MukaiVector& v);

/// Naive scan for { v != 0 : v^2 >= -2, |Z|^2 <= m2 } on a rank-one lattice,
/// over a box derived independently of the library.
std::vector<MukaiVector> oracle_enumerate_rank_one(const NSLattice& L, const Rational& beta, const Rational& omega,
                                                   const Rational& m2);

}  // namespace bstab::test
