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

#include <compare>
#include <string>
#include <vector>

#include "rational.hpp"

namespace bstab {

/// A Q-divisor class, coefficients in the lattice basis.
struct RationalDivisor {
  std::vector<Rational> coeffs;

  std::size_t size() const { return coeffs.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs[i]; }
  Rational& operator[](std::size_t i) { return coeffs[i]; }
  friend bool operator==(const RationalDivisor&, const RationalDivisor&) = default;
};

RationalDivisor operator*(const Rational& c, const RationalDivisor& d);
RationalDivisor operator+(const RationalDivisor& a, const RationalDivisor& b);
RationalDivisor operator-(const RationalDivisor& a, const RationalDivisor& b);

/// Integral class (r, l, s) in Z + NS(X) + Z.
struct MukaiVector {
  Integer r;
  std::vector<Integer> l;
  Integer s;

  bool is_zero() const;
  RationalDivisor l_divisor() const;

  MukaiVector operator-() const;
  MukaiVector& operator+=(const MukaiVector& o);
  MukaiVector& operator-=(const MukaiVector& o);
  friend MukaiVector operator+(MukaiVector a, const MukaiVector& b) { return a += b; }
  friend MukaiVector operator-(MukaiVector a, const MukaiVector& b) { return a -= b; }
  friend MukaiVector operator*(const Integer& k, const MukaiVector& v);

  friend bool operator==(const MukaiVector& a, const MukaiVector& b) {
    return a.r == b.r && a.s == b.s && a.l == b.l;
  }
  /// Lexicographic on (r, l coefficients, s).
  friend bool operator<(const MukaiVector& a, const MukaiVector& b);

  std::string to_string() const;
};

MukaiVector make_mukai(long r, std::vector<long> l, long s);

/// True when a and b are rational multiples of each other (the zero vector
/// is proportional to everything).
bool proportional(const MukaiVector& a, const MukaiVector& b);

/// The Neron-Severi lattice: an even symmetric Gram matrix of signature
/// (1, rank - 1), together with epsilon = 1 for K3 and 0 for abelian
/// surfaces.
class NSLattice {
 public:
  NSLattice(std::vector<std::vector<Integer>> gram, int epsilon);

  /// Rank one lattice Z*H with H^2 = h2.
  static NSLattice rank_one(long h2, int epsilon);

  int rank() const { return static_cast<int>(gram_.size()); }
  int epsilon() const { return epsilon_; }
  const std::vector<std::vector<Integer>>& gram() const { return gram_; }

  Rational dot(const RationalDivisor& a, const RationalDivisor& b) const;
  Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) const;
  Rational dot(const std::vector<Integer>& a, const RationalDivisor& b) const;
  /// G d, so that dot(l, d) = sum_k l_k (G d)_k.
  RationalDivisor gram_times(const RationalDivisor& d) const;

  void check_divisor(const RationalDivisor& d) const;
  void check_vector(const MukaiVector& v) const;

  friend bool operator==(const NSLattice&, const NSLattice&) = default;

 private:
  std::vector<std::vector<Integer>> gram_;
  int epsilon_;
};

/// Number of positive and negative eigenvalues of a symmetric rational
/// matrix, by congruence diagonalization.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Signature signature(std::vector<std::vector<Rational>> m);

Rational ns_dot(const NSLattice& L, const RationalDivisor& a, const RationalDivisor& b);

/// l1.l2 - r1 s2 - r2 s1
Integer mukai_pair(const NSLattice& L, const MukaiVector& v1, const MukaiVector& v2);
Integer mukai_square(const NSLattice& L, const MukaiVector& v);
/// -chi(v1, v2) is the Mukai pairing.
Integer chi(const NSLattice& L, const MukaiVector& v1, const MukaiVector& v2);

/// (r, c1, ch2 + epsilon*r); the last entry must be integral.
MukaiVector mukai_from_chern(const NSLattice& L, const Integer& r, const std::vector<Integer>& c1, const Rational& ch2);

/// Mukai vector of E tensor O(D): v * ch(O(D)).
MukaiVector twist_by_line_bundle(const NSLattice& L, const MukaiVector& v, const std::vector<Integer>& d);

}  // namespace bstab
