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

#include <string>
#include <vector>

#include "hall.hpp"
#include "walls.hpp"

namespace bstab {

struct WeightedDecomposition {
  Decomposition parts;
  FormalLambda weight;
};

struct InvariantReport {
  MukaiVector alpha;
  std::size_t decomposition_count = 0;
  FormalLambda J;
  /// Decompositions with a nonzero weight, in enumeration order.
  std::vector<WeightedDecomposition> provenance;
  /// J was recomputed as (q - 1) times the c_alpha coefficient of eps^alpha.
  bool cross_checked = false;
};

/// J^alpha over the decompositions of a ray scope. With scope.max_parts = n
/// > 0 the value is cut to degree n in the formal symbols.
InvariantReport j_alpha(const RayScope& scope, const MukaiVector& alpha, const ITable& itable);

/// J^alpha at a rational point; 0 when Z(alpha) = 0.
InvariantReport j_alpha(const StabilityPoint& P, const MukaiVector& alpha, const ITable& itable,
                        std::size_t max_parts = 0);

/// r > 0, or r = 0 with l.omega > 0, or r = l = 0 with s > 0.
bool surrogate_effective(const NSLattice& L, const RationalDivisor& omega, const MukaiVector& v);

/// Hat-J^alpha for untwisted omega-Gieseker stability: decompositions into
/// surrogate-effective classes of the universe with the reduced Hilbert
/// polynomial of alpha.
InvariantReport jhat_alpha(const NSLattice& L, const RationalDivisor& omega, const MukaiVector& alpha,
                           const ITable& ihat, const std::vector<MukaiVector>& universe);

/// Classes with |Z| <= |Z(alpha)| at (0, k omega) for the least k in 1..4
/// with Z(alpha) != 0; empty when there is none.
std::vector<MukaiVector> jhat_universe(const NSLattice& L, const RationalDivisor& omega, const MukaiVector& alpha);

/// Same chamber check between two off-wall points: equal decompositions,
/// equal J, and every pair of aligned classes proportional.
struct ChamberReport {
  bool constant = false;
  std::size_t classes = 0, decompositions = 0;
  FormalLambda j0, j1;
};

/// The points (b0, t0), (b1, t1) of the slice must share a fingerprint
/// with no zero entry; ChamberMismatch otherwise.
ChamberReport chamber_constancy_check(const NSLattice& L, const SliceRegion& R, const std::vector<Wall>& walls,
                                      const Rational& b0, const Rational& t0, const Rational& b1, const Rational& t1,
                                      const MukaiVector& alpha, const ITable& itable);

/// Off-wall contexts on both sides of a wall point, over the destabilizer
/// classes whose wall with alpha passes through that point.
struct WallContexts {
  PhaseContext left, right;
};

WallContexts wall_contexts(const NSLattice& L, const SliceRegion& R, const WallSet& walls, const MukaiVector& alpha,
                           const WallPoint& p, const SamplePair& s);

struct WallCrossReport {
  InvarianceReport epsilon;
  FormalLambda j_left, j_wall, j_right;
  ITable wall_table, right_table;
  bool j_equal = false;
  bool equal = false;
  /// Z(alpha) vanishes at the wall point.
  bool degenerate = false;
};

/// left and right share the wall charge and the pool; the right table is
/// obtained by pushing the left one to the wall and inverting from the
/// right.
WallCrossReport wall_cross_check(const PhaseContext& left, const PhaseContext& right, const MukaiVector& alpha,
                                 const ITable& itable, std::size_t max_parts = 0);

enum class TwistPolicy {
  /// Fail with HypothesisViolated when l.omega <= 0 and (r, l) != 0.
  Reject,
  /// Replace alpha by alpha (x) O(m omega), the least m >= 0 making l.omega > 0.
  TwistByOmega,
};

struct PairVerdict {
  MukaiVector vi, vj;
  /// Im(Z_k(vi) conj Z_k(vj)) as a polynomial in k, at beta = 0, omega -> k omega.
  UPoly poly;
  Rational root_bound;
  std::vector<bool> aligned, p_equal;
};

struct LargeVolumeReport {
  MukaiVector alpha, alpha_used;
  long twist = 0;
  RationalDivisor omega;
  Rational threshold;
  std::vector<Rational> samples;
  std::vector<PairVerdict> pairs;
  bool consistent = false;
};

/// Surrogate-effective classes v with v^2 >= -2 and alpha - v zero or
/// surrogate-effective, among those with |Z(v)| <= |Z(alpha)| at beta = 0.
std::vector<MukaiVector> large_volume_candidates(const NSLattice& L, const MukaiVector& alpha,
                                                 const RationalDivisor& omega);

/// N = ceiling of the largest Cauchy root bound over candidate pairs, then
/// alignment against P-equality at k = N, ..., N + 10.
LargeVolumeReport large_volume_threshold(const NSLattice& L, const MukaiVector& alpha, const RationalDivisor& omega,
                                         const std::vector<MukaiVector>& candidates,
                                         TwistPolicy policy = TwistPolicy::Reject);

struct JJhatReport {
  Rational k;
  InvariantReport j, jhat;
  bool same_decompositions = false;
  bool equal = false;
};

/// J^alpha at (0, k omega) against hat-J^alpha at omega.
JJhatReport compare_j_jhat(const NSLattice& L, const MukaiVector& alpha, const RationalDivisor& omega,
                           const ITable& itable, const ITable& ihat, const Rational& k);

}  // namespace bstab
