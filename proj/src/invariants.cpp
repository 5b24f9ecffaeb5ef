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

#include "invariants.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace bstab {

namespace {

RatFunc q_minus_one() { return RatFunc::q() - RatFunc(1); }

FormalLambda cut(const FormalLambda& x, std::size_t max_parts) {
  return max_parts > 0 ? x.truncated(static_cast<int>(max_parts)) : x;
}

RationalDivisor zero_divisor(const NSLattice& L) {
  RationalDivisor d;
  d.coeffs.assign(static_cast<std::size_t>(L.rank()), 0);
  return d;
}

// Weighted sum over decompositions, shared by J and hat-J.
InvariantReport weighted_sum(const NSLattice& L, const MukaiVector& alpha, const std::vector<Decomposition>& decs,
                             const ITable& t, std::size_t max_parts) {
  InvariantReport rep;
  rep.alpha = alpha;
  rep.decomposition_count = decs.size();
  for (const auto& d : decs) {
    const long n = static_cast<long>(d.size());
    FormalLambda w(product_twist(L, d) * q_minus_one() * RatFunc(Rational(n % 2 == 1 ? 1 : -1, n)));
    for (const auto& a : d) w *= t.value(a);
    w = cut(w, max_parts);
    if (w.is_zero()) continue;
    rep.J += w;
    rep.provenance.push_back({d, w});
  }
  return rep;
}

}  // namespace

InvariantReport j_alpha(const RayScope& scope, const MukaiVector& alpha, const ITable& itable) {
  if (scope.Z(alpha).is_zero()) {
    InvariantReport rep;
    rep.alpha = alpha;
    return rep;
  }
  InvariantReport rep = weighted_sum(scope.lattice, alpha,
                                     enumerate_ray_decompositions(scope.parts, alpha, scope.Z, scope.max_parts), itable,
                                     scope.max_parts);
  const FormalLambda via_epsilon = cut(delta_to_epsilon(scope, itable, alpha).coefficient(alpha) * q_minus_one(),
                                       scope.max_parts);
  if (!(via_epsilon == rep.J)) fail(ErrorCode::Internal, "J by direct summation disagrees with the eps coefficient for " +
                                                             alpha.to_string());
  rep.cross_checked = true;
  return rep;
}

InvariantReport j_alpha(const StabilityPoint& P, const MukaiVector& alpha, const ITable& itable, std::size_t max_parts) {
  P.lattice().check_vector(alpha);
  if (P.charge(alpha).is_zero()) {
    InvariantReport rep;
    rep.alpha = alpha;
    return rep;
  }
  return j_alpha(ray_scope(P, alpha, max_parts), alpha, itable);
}

bool surrogate_effective(const NSLattice& L, const RationalDivisor& omega, const MukaiVector& v) {
  if (v.r > 0) return true;
  if (v.r < 0) return false;
  const Rational lw = L.dot(v.l, omega);
  if (lw != 0) return lw > 0;
  for (const auto& c : v.l)
    if (c != 0) return false;
  return v.s > 0;
}

std::vector<MukaiVector> jhat_universe(const NSLattice& L, const RationalDivisor& omega, const MukaiVector& alpha) {
  RationalDivisor zero;
  zero.coeffs.assign(static_cast<std::size_t>(L.rank()), 0);
  for (long k = 1; k <= 4; ++k) {
    const StabilityPoint P(L, zero, Rational(k) * omega);
    if (P.charge(alpha).is_zero()) continue;
    EnumerationBudget budget;
    budget.max_abs_squared = P.charge(alpha).abs_squared();
    return enumerate_bounded(P, budget).classes;
  }
  return {};
}

InvariantReport jhat_alpha(const NSLattice& L, const RationalDivisor& omega, const MukaiVector& alpha, const ITable& ihat,
                           const std::vector<MukaiVector>& universe) {
  L.check_vector(alpha);
  require(L.dot(omega, omega) > 0, ErrorCode::InvalidArgument, "omega^2 must be positive");
  InvariantReport empty;
  empty.alpha = alpha;
  if (!surrogate_effective(L, omega, alpha)) return empty;
  const RationalDivisor beta = zero_divisor(L);
  std::set<MukaiVector> parts;
  for (const auto& v : universe)
    if (!v.is_zero() && surrogate_effective(L, omega, v) && p_equality_test(L, beta, omega, v, alpha)) parts.insert(v);
  parts.insert(alpha);
  // P-equal effective classes share the ray of alpha at every scale k with
  // Z(alpha) != 0, which orders the search.
  for (long k = 1;; ++k) {
    StabilityPoint P(L, beta, Rational(k) * omega);
    ComplexRational za = P.charge(alpha);
    if (za.is_zero()) continue;
    bool ray = true;
    for (const auto& v : parts) {
      ComplexRational z = P.charge(v);
      if (z.is_zero() || !same_ray(z, za)) {
        ray = false;
        break;
      }
    }
    if (!ray) {
      require(k < 64, ErrorCode::Internal, "P-equal classes never share a ray");
      continue;
    }
    std::vector<MukaiVector> list(parts.begin(), parts.end());
    return weighted_sum(L, alpha, enumerate_ray_decompositions(list, alpha, charge_fn(P)), ihat, 0);
  }
}

ChamberReport chamber_constancy_check(const NSLattice& L, const SliceRegion& R, const std::vector<Wall>& walls,
                                      const Rational& b0, const Rational& t0, const Rational& b1, const Rational& t1,
                                      const MukaiVector& alpha, const ITable& itable) {
  const ChamberFingerprint f0 = classify_point(b0, t0, walls), f1 = classify_point(b1, t1, walls);
  require(std::count(f0.begin(), f0.end(), 0) == 0 && std::count(f1.begin(), f1.end(), 0) == 0,
          ErrorCode::InvalidArgument, "chamber points must lie off every wall");
  if (f0 != f1) fail(ErrorCode::ChamberMismatch, "the two points lie in different chambers");
  const StabilityPoint P0(L, b0 * R.B0, t0 * R.W0), P1(L, b1 * R.B0, t1 * R.W0);
  ChamberReport rep;
  const RayScope s0 = ray_scope(P0, alpha), s1 = ray_scope(P1, alpha);
  for (const auto* s : {&s0, &s1})
    for (std::size_t i = 0; i < s->parts.size(); ++i)
      for (std::size_t j = i + 1; j < s->parts.size(); ++j)
        if (!proportional(s->parts[i], s->parts[j])) fail(ErrorCode::Internal,
                "aligned classes " + s->parts[i].to_string() + " and " + s->parts[j].to_string() +
                    " are not proportional off the walls");
  auto d0 = enumerate_ray_decompositions(s0.parts, alpha, s0.Z), d1 = enumerate_ray_decompositions(s1.parts, alpha, s1.Z);
  std::sort(d0.begin(), d0.end());
  std::sort(d1.begin(), d1.end());
  rep.classes = s0.parts.size();
  rep.decompositions = d0.size();
  rep.j0 = j_alpha(s0, alpha, itable).J;
  rep.j1 = j_alpha(s1, alpha, itable).J;
  std::vector<MukaiVector> p0 = s0.parts, p1 = s1.parts;
  std::sort(p0.begin(), p0.end());
  std::sort(p1.begin(), p1.end());
  rep.constant = p0 == p1 && d0 == d1 && rep.j0 == rep.j1;
  return rep;
}

WallContexts wall_contexts(const NSLattice& L, const SliceRegion& R, const WallSet& walls, const MukaiVector& alpha,
                           const WallPoint& p, const SamplePair& s) {
  const QuadExt t2 = p.t * p.t;
  std::set<MukaiVector> pool;
  for (const auto& v : walls.destabilizers)
    if (proportional(v, alpha)) pool.insert(v);
  for (const auto& w : walls.walls)
    if (w.vj == alpha && QuadExt(w.c0(p.b)) + QuadExt(w.c2(p.b)) * t2 == QuadExt(0)) pool.insert(w.vi);
  PhaseContext left{L,
                    slice_charge_fn(L, R.B0, R.W0, s.b_left, QuadExt(s.t_left)),
                    slice_charge_fn(L, R.B0, R.W0, p.b, p.t),
                    std::vector<MukaiVector>(pool.begin(), pool.end()),
                    QuadExt(walls.mass.used)};
  PhaseContext right = left.with_off_wall(slice_charge_fn(L, R.B0, R.W0, s.b_right, QuadExt(s.t_right)));
  return {std::move(left), std::move(right)};
}

WallCrossReport wall_cross_check(const PhaseContext& left, const PhaseContext& right, const MukaiVector& alpha,
                                 const ITable& itable, std::size_t max_parts) {
  WallCrossReport rep;
  if (left.z1(alpha).is_zero()) {
    // No class of the ray carries weight: both sides must see an empty table.
    rep.degenerate = true;
    bool empty = true;
    for (const auto* ctx : {&left, &right}) {
      if (ctx->z0(alpha).is_zero()) continue;
      for (const auto& v : ray_candidates(ctx->lattice, ctx->pool, alpha, ctx->z0))
        if (!itable.value(v).is_zero()) empty = false;
    }
    rep.j_equal = empty;
    rep.equal = empty;
    rep.epsilon.equal = empty;
    return rep;
  }
  rep.epsilon = epsilon_invariance_check(left, itable, alpha, max_parts);
  rep.wall_table = transform_delta_across_wall(left, itable, alpha, max_parts);
  rep.right_table = invert_delta_across_wall(right, rep.wall_table, alpha, max_parts);
  RayScope l{left.lattice, left.z0, ray_candidates(left.lattice, left.pool, alpha, left.z0), max_parts};
  RayScope w{left.lattice, left.z1, wall_ray_classes(left, alpha), max_parts};
  RayScope r{right.lattice, right.z0, ray_candidates(right.lattice, right.pool, alpha, right.z0), max_parts};
  rep.j_left = j_alpha(l, alpha, itable).J;
  rep.j_wall = j_alpha(w, alpha, rep.wall_table).J;
  rep.j_right = j_alpha(r, alpha, rep.right_table).J;
  rep.j_equal = rep.j_left == rep.j_right && rep.j_left == rep.j_wall;
  rep.equal = rep.epsilon.equal && rep.j_equal;
  return rep;
}

namespace {

// Im(Z_k(a) conj Z_k(b)) and Re Z_k(v) at beta = 0, omega -> k omega.
UPoly pair_poly(const NSLattice& L, const RationalDivisor& omega, const MukaiVector& a, const MukaiVector& b) {
  const Rational w2 = L.dot(omega, omega);
  auto re = [&](const MukaiVector& v) { return UPoly({-Rational(v.s), 0, Rational(v.r) * w2 / 2}); };
  auto im = [&](const MukaiVector& v) { return UPoly({0, L.dot(v.l, omega)}); };
  return im(a) * re(b) - re(a) * im(b);
}

Rational root_bound(const UPoly& p) { return p.is_zero() || p.degree() == 0 ? Rational(0) : cauchy_root_bound(p); }

}  // namespace

std::vector<MukaiVector> large_volume_candidates(const NSLattice& L, const MukaiVector& alpha,
                                                 const RationalDivisor& omega) {
  const StabilityPoint P(L, zero_divisor(L), omega);
  const ComplexRational za = P.charge(alpha);
  require(!za.is_zero(), ErrorCode::ZeroCharge, "Z(alpha) = 0 at beta = 0");
  EnumerationBudget budget;
  budget.max_abs_squared = za.abs_squared();
  std::vector<MukaiVector> out;
  for (const auto& v : enumerate_bounded(P, budget).classes) {
    if (!surrogate_effective(L, omega, v)) continue;
    const MukaiVector rest = alpha - v;
    if (rest.is_zero() || surrogate_effective(L, omega, rest)) out.push_back(v);
  }
  return out;
}

LargeVolumeReport large_volume_threshold(const NSLattice& L, const MukaiVector& alpha, const RationalDivisor& omega,
                                         const std::vector<MukaiVector>& candidates, TwistPolicy policy) {
  L.check_vector(alpha);
  require(L.dot(omega, omega) > 0, ErrorCode::InvalidArgument, "omega^2 must be positive");
  LargeVolumeReport rep;
  rep.alpha = alpha;
  rep.omega = omega;
  auto positive = [&](const MukaiVector& v) {
    bool l_zero = std::all_of(v.l.begin(), v.l.end(), [](const Integer& c) { return c == 0; });
    return L.dot(v.l, omega) > 0 || (v.r == 0 && l_zero);
  };
  std::vector<Integer> step;
  if (!positive(alpha)) {
    if (policy == TwistPolicy::Reject) fail(ErrorCode::HypothesisViolated,
            "alpha = " + alpha.to_string() + " has l.omega <= 0 and (r, l) != 0");
    require(alpha.r > 0, ErrorCode::HypothesisViolated, "twisting by omega needs r > 0");
    for (const auto& c : omega.coeffs) {
      require(is_integer(c), ErrorCode::HypothesisViolated, "twisting needs an integral omega");
      step.push_back(c.get_num());
    }
  }
  auto twist = [&](MukaiVector v) {
    for (long m = 0; m < rep.twist; ++m) v = twist_by_line_bundle(L, v, step);
    return v;
  };
  rep.alpha_used = alpha;
  while (!positive(rep.alpha_used)) {
    ++rep.twist;
    rep.alpha_used = twist_by_line_bundle(L, rep.alpha_used, step);
  }
  std::vector<MukaiVector> cls;
  for (const auto& v : candidates) cls.push_back(twist(v));
  if (std::find(cls.begin(), cls.end(), rep.alpha_used) == cls.end()) cls.push_back(rep.alpha_used);
  std::sort(cls.begin(), cls.end());
  Rational n = 1;
  const Rational w2 = L.dot(omega, omega);
  for (const auto& v : cls) {
    const UPoly re({-Rational(v.s), 0, Rational(v.r) * w2 / 2});
    if (L.dot(v.l, omega) == 0 && !re.is_zero()) n = std::max(n, root_bound(re));
  }
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      PairVerdict pv{cls[i], cls[j], pair_poly(L, omega, cls[i], cls[j]), 0, {}, {}};
      pv.root_bound = root_bound(pv.poly);
      n = std::max(n, pv.root_bound);
      rep.pairs.push_back(std::move(pv));
    }
  rep.threshold = Rational(ceil_int(n));
  for (int i = 0; i <= 10; ++i) rep.samples.push_back(rep.threshold + i);
  const RationalDivisor beta = zero_divisor(L);
  rep.consistent = true;
  for (auto& pv : rep.pairs) {
    const bool peq = p_equality_test(L, beta, omega, pv.vi, pv.vj);
    for (const auto& k : rep.samples) {
      const StabilityPoint P(L, beta, k * omega);
      const ComplexRational zi = P.charge(pv.vi), zj = P.charge(pv.vj);
      const bool aligned = !zi.is_zero() && !zj.is_zero() && same_ray(zi, zj);
      pv.aligned.push_back(aligned);
      pv.p_equal.push_back(peq);
      if (aligned != peq) rep.consistent = false;
    }
  }
  return rep;
}

JJhatReport compare_j_jhat(const NSLattice& L, const MukaiVector& alpha, const RationalDivisor& omega,
                           const ITable& itable, const ITable& ihat, const Rational& k) {
  require(k > 0, ErrorCode::InvalidArgument, "k must be positive");
  JJhatReport rep;
  rep.k = k;
  const StabilityPoint P(L, zero_divisor(L), k * omega);
  rep.j = j_alpha(P, alpha, itable);
  std::vector<MukaiVector> universe;
  if (!P.charge(alpha).is_zero()) {
    EnumerationBudget budget;
    budget.max_abs_squared = P.charge(alpha).abs_squared();
    universe = enumerate_bounded(P, budget).classes;
  }
  rep.jhat = jhat_alpha(L, omega, alpha, ihat, universe);
  std::set<Decomposition> dj, dh;
  std::set<MukaiVector> scope;
  for (const auto& d : enumerate_ray_decompositions(P, alpha)) {
    if (std::all_of(d.begin(), d.end(), [&](const MukaiVector& v) { return surrogate_effective(L, omega, v); }))
      dj.insert(d);
    scope.insert(d.begin(), d.end());
  }
  for (const auto& w : rep.jhat.provenance) dh.insert(w.parts);
  for (const auto& w : rep.jhat.provenance) scope.insert(w.parts.begin(), w.parts.end());
  for (const auto& v : scope)
    if (itable.value(v) != ihat.value(v)) fail(ErrorCode::TableMismatch, "tables disagree on " + v.to_string());
  std::set<Decomposition> dj_weighted;
  for (const auto& w : rep.j.provenance) dj_weighted.insert(w.parts);
  rep.same_decompositions = dj == dh || dj_weighted == dh;
  rep.equal = rep.j.J == rep.jhat.J;
  return rep;
}

}  // namespace bstab
