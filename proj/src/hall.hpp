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

#include <map>
#include <string>
#include <vector>

#include "enumeration.hpp"
#include "lambda.hpp"

namespace bstab {

/// Finite sum of basis symbols c_v with nonzero coefficients.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement basis(const MukaiVector& v, const FormalLambda& c = FormalLambda(1));

  FormalLambda coefficient(const MukaiVector& v) const;
  const std::map<MukaiVector, FormalLambda>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const MukaiVector& v, const FormalLambda& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const FormalLambda& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const FormalLambda& c) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

  /// Drops coefficient terms of degree above d in the formal symbols.
  AlgebraElement truncated(int d) const;
  std::string to_string() const;

 private:
  std::map<MukaiVector, FormalLambda> terms_;
};

/// c_a * c_b = q^(-chi(b, a)) c_(a+b), extended bilinearly.
AlgebraElement algebra_mul(const NSLattice& L, const AlgebraElement& x, const AlgebraElement& y);

/// Class-indexed values, 0 for absent classes.
class ITable {
 public:
  /// I[v] for each listed class.
  static ITable formal(const std::vector<MukaiVector>& classes);

  FormalLambda value(const MukaiVector& v) const;
  void set(const MukaiVector& v, const FormalLambda& x);
  const std::map<MukaiVector, FormalLambda>& entries() const { return entries_; }
  friend bool operator==(const ITable& a, const ITable& b) { return a.entries_ == b.entries_; }

 private:
  std::map<MukaiVector, FormalLambda> entries_;
};

/// I^alpha c_alpha.
AlgebraElement delta_bar(const ITable& itable, const MukaiVector& alpha);

/// Classes allowed as parts of decompositions on one ray, with the charge
/// deciding the ray.
struct RayScope {
  NSLattice lattice;
  ChargeFn Z;
  std::vector<MukaiVector> parts;
  /// 0 means unbounded.
  std::size_t max_parts = 0;
};

RayScope ray_scope(const StabilityPoint& P, const MukaiVector& alpha, std::size_t max_parts = 0);

/// Weight q^(-sum_{i<j} chi(a_j, a_i)) of the ordered product of the parts.
RatFunc product_twist(const NSLattice& L, const Decomposition& d);

/// sum over decompositions of (-1)^(n-1)/n delta^(a_1) * ... * delta^(a_n).
AlgebraElement delta_to_epsilon(const RayScope& scope, const ITable& itable, const MukaiVector& alpha);

/// sum over decompositions of 1/n! eps^(a_1) * ... * eps^(a_n), where etable
/// holds the c-coefficient of each eps.
AlgebraElement epsilon_to_delta(const RayScope& scope, const ITable& etable, const MukaiVector& alpha);

/// Charges off the wall (z0) and on it (z1), with the classes available for
/// decompositions and the |Z1|^2 bound under which that pool is complete.
struct PhaseContext {
  NSLattice lattice;
  ChargeFn z0, z1;
  std::vector<MukaiVector> pool;
  QuadExt pool_bound;

  /// The same wall point seen from another off-wall charge.
  PhaseContext with_off_wall(ChargeFn other) const;
};

/// Counts the conditions (a) phi0(a_i) <= phi0(a_(i+1)) and phi1(a_1+..+a_i) >
/// phi1(a_(i+1)+..+a_n), and (b) with both inequalities flipped; 0 when some
/// i meets neither, else (-1)^#(a). Phases are compared near the ray of the
/// total class, under each charge.
int s_coefficient(const Decomposition& d, const PhaseContext& ctx);

/// Classes on the z1-ray of alpha, no heavier than alpha, closed under sums.
std::vector<MukaiVector> wall_ray_classes(const PhaseContext& ctx, const MukaiVector& alpha);

/// delta-coefficients at the wall for every class on the wall ray of alpha,
/// from the off-wall table.
ITable transform_delta_across_wall(const PhaseContext& ctx, const ITable& itable, const MukaiVector& alpha,
                                   std::size_t max_parts = 0);

/// Off-wall table recovered from the wall table by inverting the transform
/// class by class in increasing mass.
ITable invert_delta_across_wall(const PhaseContext& ctx, const ITable& wall_table, const MukaiVector& alpha,
                                std::size_t max_parts = 0);

struct InvarianceReport {
  bool equal = false;
  AlgebraElement epsilon_off, epsilon_on, discrepancy;
  std::size_t decompositions_off = 0, decompositions_on = 0;
};

/// Compares eps^alpha computed off the wall with eps^alpha computed on it
/// from the transformed table. With max_parts = n > 0 both sides are cut to
/// degree n in the formal symbols.
InvarianceReport epsilon_invariance_check(const PhaseContext& ctx, const ITable& itable, const MukaiVector& alpha,
                                          std::size_t max_parts = 0);

}  // namespace bstab
