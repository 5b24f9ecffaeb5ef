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

#include <optional>
#include <string>
#include <vector>

#include "enumeration.hpp"

namespace bstab {

/// Locus where Z(vi) / Z(vj) is a positive real, in the slice
/// beta = b B0, omega = t W0:  W(b,t) = Im(Z(vi) conj Z(vj)) = 0 and
/// Re(Z(vi) conj Z(vj)) > 0. On the slice W = t (c0(b) + c2(b) t^2).
struct Wall {
  MukaiVector vi, vj;
  BPoly poly;
  BPoly side;
  UPoly c0, c2;
  /// side = s[0] + s[1] t^2 + s[2] t^4.
  std::vector<UPoly> side_t2;
  /// A rational b at which the wall meets the open region; for a vertical
  /// component, its b.
  Rational witness_b;
  bool witness_vertical = false;
  /// Membership could not be decided exactly and the wall was kept.
  bool conservative = false;
};

/// Wall data for a non-proportional pair; W must not vanish identically.
Wall make_wall(const NSLattice& L, const SliceRegion& R, const MukaiVector& vi, const MukaiVector& vj);

/// Exact test whether the locus meets (b0,b1) x (t0,t1); fills the witness.
bool wall_meets_region(Wall& w, const SliceRegion& R);

/// Same zero set of W (the side conditions may differ).
bool same_locus(const Wall& a, const Wall& b);

struct MassBound {
  Rational corner_sup;
  Rational used;
  bool certified = false;
};

/// Sup of |Z(alpha)|^2 over the region. The corner value is used when
/// subdivision certifies it; otherwise the bound is widened.
MassBound certified_mass_bound(const NSLattice& L, const SliceRegion& R, const MukaiVector& alpha);

struct WallOptions {
  EnumerationBudget budget;
  /// Cardinality limit for the destabilizer set.
  std::size_t max_destabilizers = 50'000;
  /// Also add walls (v_i, v_j) between aligned classes, neither proportional to alpha.
  bool all_pairs = false;
};

struct WallSet {
  std::vector<Wall> walls;
  MassBound mass;
  std::size_t destabilizer_count = 0;
  /// Classes of the destabilizer set aligned with alpha somewhere inside.
  std::vector<MukaiVector> aligned;
  /// The full destabilizer set, sorted.
  std::vector<MukaiVector> destabilizers;
  bool conservative = false;
  bool truncated = false;
};

/// Walls (v, alpha) for destabilizers v aligned with alpha inside the
/// region, and walls among those aligned classes.
WallSet compute_walls(const NSLattice& L, const SliceRegion& R, const MukaiVector& alpha, const WallOptions& opt = {});

/// Per wall: sign of W when the side condition holds, 2 otherwise.
using ChamberFingerprint = std::vector<int>;

constexpr int kInactive = 2;

ChamberFingerprint classify_point(const Rational& b, const Rational& t, const std::vector<Wall>& walls);

/// A point of a wall with t exact in Q(sqrt d). The wall equation in t at
/// fixed b is c0 + c2 t^2, so one square root always suffices.
struct WallPoint {
  Rational b;
  QuadExt t;
};

WallPoint point_on_wall(const Wall& w, const Rational& b, const SliceRegion& R);

/// W evaluated at a wall point is zero and the side condition is positive.
bool lies_on_wall(const Wall& w, const WallPoint& p);

struct SamplePair {
  Rational b_left, t_left, b_right, t_right;
};

/// Two rational points straddling the wall at p, off every wall, whose
/// joining segment meets only walls with the same locus, at p. Both points
/// lie within max_displacement of p, along t, or along b on a vertical wall.
SamplePair sample_across(const Wall& w, const WallPoint& p, const std::vector<Wall>& walls, const SliceRegion& R,
                         const Rational& max_displacement = Rational(1, 8));

/// A point of w admitting sample_across, searched over the b-range of w.
std::pair<WallPoint, SamplePair> separable_point(const Wall& w, const std::vector<Wall>& walls, const SliceRegion& R);

/// True when the closed segment meets the locus of some wall.
bool segment_crosses_walls(const Rational& b0, const Rational& t0, const Rational& b1, const Rational& t1,
                           const std::vector<Wall>& walls);

}  // namespace bstab
