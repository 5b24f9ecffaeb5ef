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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "charge.hpp"

namespace bstab {

struct EnumerationBudget {
  /// m^2 in |Z| <= m.
  Rational max_abs_squared = 1;
  std::optional<Integer> cap_r, cap_s, cap_l;
  /// Largest result size accepted before BudgetExceeded.
  std::size_t max_classes = 2'000'000;
};

/// The family beta = b B0, omega = t W0 over a rectangle in (b, t), t0 > 0.
struct SliceRegion {
  RationalDivisor B0, W0;
  Rational b0, b1, t0, t1;
};

/// Integer box guaranteed to contain every class of the target set.
struct EnumerationBox {
  Integer r_max;  // |r| <= r_max
  /// Per-rank coordinate ranges, indexed by r + r_max.
  std::vector<std::vector<std::pair<Integer, Integer>>> l_ranges;
};

struct EnumerationResult {
  std::vector<MukaiVector> classes;  // sorted lexicographically
  bool truncated = false;
  std::string warning;
  EnumerationBox box;
};

/// Exact ranges of Re Z(v) and Im Z(v) over the region.
Interval re_range(const NSLattice& L, const SliceRegion& R, const MukaiVector& v);
Interval im_range(const NSLattice& L, const SliceRegion& R, const MukaiVector& v);

/// Lower bound for min |Z|^2 over the region; exact when the region is a point.
Rational abs_squared_lower_bound(const NSLattice& L, const SliceRegion& R, const MukaiVector& v);

/// Exact test whether min |Z(v)|^2 over the region is at most m2.
bool reaches_mass(const NSLattice& L, const SliceRegion& R, const MukaiVector& v, const Rational& m2);

/// Nonzero classes with v^2 >= -2 and |Z|^2 <= m^2 somewhere in the region.
EnumerationResult enumerate_region(const NSLattice& L, const SliceRegion& R, const EnumerationBudget& budget);

/// { v != 0 : v^2 >= -2, |Z(v)|^2 <= m^2 } at a single point.
EnumerationResult enumerate_bounded(const StabilityPoint& P, const EnumerationBudget& budget);

/// Exact charge evaluator over Q(sqrt d).
using ChargeFn = std::function<ComplexQuad(const MukaiVector&)>;

ChargeFn charge_fn(const StabilityPoint& P);

/// Charges at beta = b B0, omega = t W0 with t in Q(sqrt d).
ChargeFn slice_charge_fn(const NSLattice& L, const RationalDivisor& B0, const RationalDivisor& W0, const Rational& b,
                         const QuadExt& t);

/// Additive closure, within |Z| <= |Z(alpha)| on the ray of Z(alpha), of the
/// pool classes with v^2 >= -2 lying on that ray.
std::vector<MukaiVector> ray_candidates(const NSLattice& L, const std::vector<MukaiVector>& pool,
                                        const MukaiVector& alpha, const ChargeFn& Z);

std::vector<MukaiVector> effective_candidates(const StabilityPoint& P, const MukaiVector& alpha);

using Decomposition = std::vector<MukaiVector>;

/// Ordered tuples over the candidates summing to alpha, with at most
/// max_parts entries when max_parts > 0. Candidates are tried by decreasing
/// |Z|^2, ties by (r, l, s).
std::vector<Decomposition> enumerate_ray_decompositions(const std::vector<MukaiVector>& candidates,
                                                        const MukaiVector& alpha, const ChargeFn& Z,
                                                        std::size_t max_parts = 0);

std::vector<Decomposition> enumerate_ray_decompositions(const StabilityPoint& P, const MukaiVector& alpha);

/// Sorts by decreasing |Z|^2, ties by (r, l, s).
void sort_by_mass(std::vector<MukaiVector>& classes, const ChargeFn& Z);

}  // namespace bstab
