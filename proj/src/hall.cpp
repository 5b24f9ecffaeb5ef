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

#include "hall.hpp"

#include <algorithm>

#include "errors.hpp"

namespace bstab {

AlgebraElement AlgebraElement::basis(const MukaiVector& v, const FormalLambda& c) {
  AlgebraElement e;
  e.add(v, c);
  return e;
}

FormalLambda AlgebraElement::coefficient(const MukaiVector& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? FormalLambda() : it->second;
}

void AlgebraElement::add(const MukaiVector& v, const FormalLambda& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(v, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [v, c] : o.terms_) add(v, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [v, c] : o.terms_) add(v, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const FormalLambda& c) {
  std::map<MukaiVector, FormalLambda> out;
  for (const auto& [v, x] : terms_) {
    FormalLambda y = x * c;
    if (!y.is_zero()) out.emplace(v, std::move(y));
  }
  terms_ = std::move(out);
  return *this;
}

AlgebraElement AlgebraElement::truncated(int d) const {
  AlgebraElement out;
  for (const auto& [v, c] : terms_) out.add(v, c.truncated(d));
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [v, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*c" + v.to_string();
  }
  return out;
}

AlgebraElement algebra_mul(const NSLattice& L, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      const long e = -chi(L, b, a).get_si();
      out.add(a + b, ca * cb * RatFunc::q_pow(e));
    }
  return out;
}

ITable ITable::formal(const std::vector<MukaiVector>& classes) {
  ITable t;
  for (const auto& v : classes) t.set(v, FormalLambda::symbol(v));
  return t;
}

FormalLambda ITable::value(const MukaiVector& v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? FormalLambda() : it->second;
}

void ITable::set(const MukaiVector& v, const FormalLambda& x) {
  if (x.is_zero())
    entries_.erase(v);
  else
    entries_[v] = x;
}

AlgebraElement delta_bar(const ITable& itable, const MukaiVector& alpha) {
  return AlgebraElement::basis(alpha, itable.value(alpha));
}

RayScope ray_scope(const StabilityPoint& P, const MukaiVector& alpha, std::size_t max_parts) {
  return {P.lattice(), charge_fn(P), effective_candidates(P, alpha), max_parts};
}

RatFunc product_twist(const NSLattice& L, const Decomposition& d) {
  Integer e = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) e -= chi(L, d[j], d[i]);
  return RatFunc::q_pow(e.get_si());
}

namespace {

Rational factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return Rational(f);
}

std::vector<Decomposition> scope_decompositions(const RayScope& scope, const MukaiVector& alpha) {
  return enumerate_ray_decompositions(scope.parts, alpha, scope.Z, scope.max_parts);
}

// Ordered product of per-class basis elements, through algebra_mul.
AlgebraElement ordered_product(const NSLattice& L, const ITable& t, const Decomposition& d) {
  AlgebraElement acc = delta_bar(t, d.front());
  for (std::size_t i = 1; i < d.size() && !acc.is_zero(); ++i) acc = algebra_mul(L, acc, delta_bar(t, d[i]));
  return acc;
}

FormalLambda weighted_product(const NSLattice& L, const ITable& t, const Decomposition& d) {
  FormalLambda x(product_twist(L, d));
  for (const auto& a : d) {
    const FormalLambda v = t.value(a);
    if (v.is_zero()) return {};
    x *= v;
  }
  return x;
}

}  // namespace

AlgebraElement delta_to_epsilon(const RayScope& scope, const ITable& itable, const MukaiVector& alpha) {
  AlgebraElement out;
  for (const auto& d : scope_decompositions(scope, alpha)) {
    const long n = static_cast<long>(d.size());
    const Rational w = Rational(n % 2 == 1 ? 1 : -1, n);
    out += ordered_product(scope.lattice, itable, d) * FormalLambda(w);
  }
  return out;
}

AlgebraElement epsilon_to_delta(const RayScope& scope, const ITable& etable, const MukaiVector& alpha) {
  AlgebraElement out;
  for (const auto& d : scope_decompositions(scope, alpha))
    out += ordered_product(scope.lattice, etable, d) * FormalLambda(1 / factorial(d.size()));
  return out;
}

PhaseContext PhaseContext::with_off_wall(ChargeFn other) const {
  PhaseContext c = *this;
  c.z0 = std::move(other);
  return c;
}

int s_coefficient(const Decomposition& d, const PhaseContext& ctx) {
  require(!d.empty(), ErrorCode::InvalidArgument, "empty decomposition");
  if (d.size() == 1) return 1;
  MukaiVector total = d.front();
  for (std::size_t i = 1; i < d.size(); ++i) total += d[i];
  const ComplexQuad ref0 = ctx.z0(total), ref1 = ctx.z1(total);
  require(!ref0.is_zero() && !ref1.is_zero(), ErrorCode::ZeroCharge, "decomposition total has zero charge");
  std::vector<ComplexQuad> p0;
  for (const auto& a : d) {
    p0.push_back(ctx.z0(a));
    require(!p0.back().is_zero(), ErrorCode::ZeroCharge, "part " + a.to_string() + " has zero charge off the wall");
  }
  int flips = 0;
  MukaiVector left = d.front();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (i > 0) left += d[i];
    const MukaiVector right = total - left;
    const ComplexQuad zl = ctx.z1(left), zr = ctx.z1(right);
    require(!zl.is_zero() && !zr.is_zero() && !ctx.z0(left).is_zero() && !ctx.z0(right).is_zero(),
            ErrorCode::ZeroCharge, "partial sum has zero charge");
    const auto c0 = compare_phase_near(p0[i], p0[i + 1], ref0);
    const auto c1 = compare_phase_near(zl, zr, ref1);
    const bool a = c0 <= 0 && c1 > 0;
    const bool b = c0 > 0 && c1 <= 0;
    if (a) ++flips;
    else if (!b) return 0;
  }
  return flips % 2 == 0 ? 1 : -1;
}

std::vector<MukaiVector> wall_ray_classes(const PhaseContext& ctx, const MukaiVector& alpha) {
  const ComplexQuad za = ctx.z1(alpha);
  require(!za.is_zero(), ErrorCode::ZeroCharge, "alpha has zero charge on the wall");
  if (!(za.abs_squared() <= ctx.pool_bound)) fail(ErrorCode::ScopeExceeded,
          "class " + alpha.to_string() + " is heavier than the decomposition pool bound");
  return ray_candidates(ctx.lattice, ctx.pool, alpha, ctx.z1);
}

ITable transform_delta_across_wall(const PhaseContext& ctx, const ITable& itable, const MukaiVector& alpha,
                                   std::size_t max_parts) {
  const std::vector<MukaiVector> classes = wall_ray_classes(ctx, alpha);
  ITable out;
  for (const auto& a : classes) {
    FormalLambda x;
    for (const auto& d : enumerate_ray_decompositions(classes, a, ctx.z1, max_parts)) {
      const int s = s_coefficient(d, ctx);
      if (s != 0) x += weighted_product(ctx.lattice, itable, d) * RatFunc(s);
    }
    out.set(a, max_parts > 0 ? x.truncated(static_cast<int>(max_parts)) : x);
  }
  return out;
}

ITable invert_delta_across_wall(const PhaseContext& ctx, const ITable& wall_table, const MukaiVector& alpha,
                                std::size_t max_parts) {
  std::vector<MukaiVector> classes = wall_ray_classes(ctx, alpha);
  sort_by_mass(classes, ctx.z1);
  std::reverse(classes.begin(), classes.end());
  ITable out;
  for (const auto& a : classes) {
    FormalLambda x = wall_table.value(a);
    for (const auto& d : enumerate_ray_decompositions(classes, a, ctx.z1, max_parts)) {
      if (d.size() == 1) continue;
      const int s = s_coefficient(d, ctx);
      if (s != 0) x -= weighted_product(ctx.lattice, out, d) * RatFunc(s);
    }
    out.set(a, max_parts > 0 ? x.truncated(static_cast<int>(max_parts)) : x);
  }
  return out;
}

InvarianceReport epsilon_invariance_check(const PhaseContext& ctx, const ITable& itable, const MukaiVector& alpha,
                                          std::size_t max_parts) {
  InvarianceReport rep;
  RayScope off{ctx.lattice, ctx.z0, ray_candidates(ctx.lattice, ctx.pool, alpha, ctx.z0), max_parts};
  RayScope on{ctx.lattice, ctx.z1, wall_ray_classes(ctx, alpha), max_parts};
  rep.decompositions_off = scope_decompositions(off, alpha).size();
  rep.decompositions_on = scope_decompositions(on, alpha).size();
  const ITable wall_table = transform_delta_across_wall(ctx, itable, alpha, max_parts);
  rep.epsilon_off = delta_to_epsilon(off, itable, alpha);
  rep.epsilon_on = delta_to_epsilon(on, wall_table, alpha);
  if (max_parts > 0) {
    rep.epsilon_off = rep.epsilon_off.truncated(static_cast<int>(max_parts));
    rep.epsilon_on = rep.epsilon_on.truncated(static_cast<int>(max_parts));
  }
  rep.discrepancy = rep.epsilon_on - rep.epsilon_off;
  rep.equal = rep.discrepancy.is_zero();
  return rep;
}

}  // namespace bstab
