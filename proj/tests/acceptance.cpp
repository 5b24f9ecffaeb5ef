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

// One line per acceptance criterion: "criterion N: PASS|FAIL (seconds) detail".
// Exit status is the number of failed criteria. Accepts --seed=N and a list
// of criterion numbers to run.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hall.hpp"
#include "invariants.hpp"
#include "support.hpp"
#include "walls.hpp"

using namespace bstab;

namespace {

const NSLattice k3 = NSLattice::rank_one(2, 1);
const NSLattice hyp({{Integer(2), Integer(1)}, {Integer(1), Integer(-2)}}, 0);
const RationalDivisor H{{1}};
const MukaiVector alpha = make_mukai(1, {0}, -1);
const SliceRegion flagship{H, H, -2, 2, 1, 3};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

StabilityPoint at(const Rational& b, const Rational& w) { return StabilityPoint(k3, RationalDivisor{{b}}, RationalDivisor{{w}}); }

const WallSet& flagship_walls() {
  static const WallSet ws = compute_walls(k3, flagship, alpha);
  return ws;
}

// ---------------------------------------------------------------------------

void dual_route(Outcome& o) {
  auto g = test::rng_for("acceptance-1");
  int n = 0;
  for (const NSLattice* L : {&k3, &hyp})
    for (int k = 0; k < 600; ++k, ++n) {
      const StabilityPoint P = test::random_point(g, *L);
      const MukaiVector v = test::random_class(g, L->rank(), 50);
      const ComplexRational a = central_charge_pairing(P, v);
      const ComplexRational b = central_charge_explicit(P, v);
      const ComplexRational c = test::oracle_charge(*L, P.beta(), P.omega(), v);
      o.expect(a == b && b == c, "routes differ at " + v.to_string());
    }
  o.detail << n << " inputs over rank 1 and rank 2";
}

void spherical_witness(Outcome& o) {
  const MukaiVector w = make_mukai(1, {0}, 1);
  o.expect(central_charge(at(0, 1), w).is_zero(), "Z(1,0,1) is not zero at omega = H");
  const ValidityReport bad = validate_point(at(0, 1), 50);
  o.expect(bad.kind == ValidityReport::Kind::Invalid, "omega = H not Invalid");
  o.expect(bad.witness && *bad.witness == w, "witness is not (1,0,1)");
  o.expect(bad.witness && mukai_square(k3, *bad.witness) == -2, "witness is not spherical");
  const ValidityReport good = validate_point(at(0, 2), 50);
  o.expect(good.kind == ValidityReport::Kind::Valid && good.by_omega_condition, "omega = 2H not Valid by omega^2 > 2");
  o.detail << "witness " << (bad.witness ? bad.witness->to_string() : "none") << ", omega = 2H "
           << to_string(good.kind);
}

void enumeration_oracle(Outcome& o) {
  const std::vector<std::pair<Rational, Rational>> points{
      {0, 1}, {Rational(1, 2), Rational(3, 2)}, {Rational(-1, 3), 2}, {Rational(7, 5), Rational(5, 4)}};
  std::size_t total = 0;
  for (const auto& [b, w] : points)
    for (long m2 : {1L, 10L, 50L}) {
      EnumerationBudget budget;
      budget.max_abs_squared = m2;
      std::vector<MukaiVector> got = enumerate_bounded(at(b, w), budget).classes;
      std::vector<MukaiVector> want = test::oracle_enumerate_rank_one(k3, b, w, Rational(m2));
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      o.expect(got == want, "mismatch at m^2 = " + std::to_string(m2));
      total += got.size();
    }
  o.detail << points.size() << " points x 3 budgets, " << total << " classes";
}

void torsion_hilbert(Outcome& o) {
  auto g = test::rng_for("acceptance-4");
  int checked = 0, pairs = 0, equal = 0;
  while (checked < 200) {
    const NSLattice& L = checked % 2 ? hyp : k3;
    const StabilityPoint P = test::random_point(g, L);
    MukaiVector v = test::random_class(g, L.rank(), 30);
    v.r = 0;
    const Rational im = P.dot_omega(v.l);
    if (im == 0) continue;
    const ComplexRational z = central_charge(P, v);
    const HilbertPoly h = reduced_hilbert(L, P.beta(), P.omega(), v);
    o.expect(h.coeffs == std::vector<Rational>{Rational(-z.re / z.im), Rational(1)}, "reduced Hilbert of " + v.to_string());
    ++checked;
  }
  for (int k = 0; k < 400; ++k) {
    const NSLattice& L = k % 2 ? hyp : k3;
    const StabilityPoint P = test::random_point(g, L);
    const MukaiVector v1 = test::random_class(g, L.rank(), 4);
    MukaiVector v2;
    switch (k % 4) {
      case 0: v2 = Integer(test::uniform(g, 1, 3)) * v1; break;
      case 1: v2 = v1 + Integer(test::uniform(g, 1, 2)) * v1; break;
      default: v2 = test::random_class(g, L.rank(), 4);
    }
    const auto undefined = [&](const MukaiVector& v) { return v.is_zero() || (v.r == 0 && P.dot_omega(v.l) == 0); };
    if (undefined(v1) || undefined(v2)) continue;
    const bool a = p_equal_by_polynomials(L, P.beta(), P.omega(), v1, v2);
    const bool b = p_equal_by_alignment(L, P.beta(), P.omega(), v1, v2);
    o.expect(a == b, "routes disagree on " + v1.to_string() + ", " + v2.to_string());
    ++pairs;
    equal += a;
  }
  o.detail << checked << " torsion classes, " << pairs << " pairs (" << equal << " P-equal)";
}

// c_a * c_b = q^(-chi(b, a)) c_(a+b), with chi written out from the Gram matrix.
using Series = std::map<MukaiVector, FormalLambda>;

long oracle_chi(const NSLattice& L, const MukaiVector& v, const MukaiVector& w) {
  Integer ll = 0;
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) ll += v.l[i] * L.gram()[i][j] * w.l[j];
  return Integer(-(ll - v.r * w.s - w.r * v.s)).get_si();
}

Series oracle_mul(const NSLattice& L, const Series& x, const Series& y, const std::function<bool(const MukaiVector&)>& keep) {
  Series out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      const MukaiVector s = a + b;
      if (!keep(s)) continue;
      out[s] += ca * cb * FormalLambda(RatFunc::q_pow(-oracle_chi(L, b, a)));
    }
  return out;
}

// Coefficient of c_target in sum_n w(n) X^n.
FormalLambda oracle_series(const NSLattice& L, const Series& x, const MukaiVector& target, const ChargeFn& Z,
                           const std::function<Rational(long)>& w) {
  const QuadExt m = Z(target).abs_squared();
  const auto keep = [&](const MukaiVector& v) { return Z(v).abs_squared() <= m; };
  FormalLambda total;
  Series power = x;
  for (long n = 1; !power.empty(); ++n) {
    if (auto it = power.find(target); it != power.end()) total += it->second * FormalLambda(w(n));
    power = oracle_mul(L, power, x, keep);
  }
  return total;
}

Rational log_weight(long n) { return Rational(n % 2 ? 1 : -1, n); }

Rational exp_weight(long n) {
  Integer f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return Rational(Integer(1), f);
}

void log_exp(Outcome& o) {
  std::set<std::pair<std::string, std::string>> rays;
  std::size_t classes = 0;
  std::map<std::size_t, std::size_t> by_size;
  const std::vector<Rational> bs{-1, Rational(-1, 3), 0, Rational(1, 2), 1};
  const std::vector<Rational> ts{Rational(3, 2), 2, Rational(5, 2)};
  for (const Rational& b : bs)
    for (const Rational& t : ts) {
      const StabilityPoint P = at(b, t);
      EnumerationBudget budget;
      budget.max_abs_squared = 40;
      for (const MukaiVector& a : enumerate_bounded(P, budget).classes) {
        const RayScope scope = ray_scope(P, a);
        if (scope.parts.size() > 4) continue;
        ++by_size[scope.parts.size()];
        ++classes;
        const ITable t0 = ITable::formal(scope.parts);
        Series x;
        for (const auto& p : scope.parts) x[p] = FormalLambda::symbol(p);
        ITable e;
        for (const auto& p : scope.parts) e.set(p, delta_to_epsilon(scope, t0, p).coefficient(p));
        o.expect(e.value(a) == oracle_series(k3, x, a, scope.Z, log_weight), "log differs from the series at " + a.to_string());
        Series y;
        for (const auto& [p, c] : e.entries()) y[p] = c;
        o.expect(oracle_series(k3, y, a, scope.Z, exp_weight) == FormalLambda::symbol(a), "series exp fails at " + a.to_string());
        for (const auto& p : scope.parts)
          o.expect(epsilon_to_delta(scope, e, p) == delta_bar(t0, p), "exp(log) is not the identity at " + p.to_string());
      }
    }
  o.detail << classes << " classes at " << bs.size() * ts.size() << " points; rays by candidate count:";
  for (const auto& [s, c] : by_size) o.detail << ' ' << s << ":" << c;
}

void flagship_crossing(Outcome& o) {
  const WallSet& ws = flagship_walls();
  std::size_t degenerate = 0;
  for (std::size_t k = 0; k < ws.walls.size(); ++k) {
    const Wall& w = ws.walls[k];
    auto [p, s] = separable_point(w, ws.walls, flagship);
    const WallContexts ctx = wall_contexts(k3, flagship, ws, alpha, p, s);
    const ITable t = ITable::formal(wall_ray_classes(ctx.left, alpha));
    const WallCrossReport rep = wall_cross_check(ctx.left, ctx.right, alpha, t, 4);
    o.expect(rep.epsilon.equal, "epsilon differs across wall " + std::to_string(k));
    o.expect(rep.j_left == rep.j_right && rep.equal, "J differs across wall " + std::to_string(k));
    degenerate += rep.degenerate;
  }
  o.detail << ws.walls.size() << " walls, depth 4";
  if (degenerate) o.detail << ", " << degenerate << " through Z(alpha) = 0";
}

ChargeFn linear_charge(const ComplexRational& zr, const ComplexRational& zl, const ComplexRational& zs) {
  return [=](const MukaiVector& v) {
    const Rational r(v.r), l(v.l[0]), s(v.s);
    return ComplexQuad{QuadExt(Rational(r * zr.re + l * zl.re + s * zs.re)),
                       QuadExt(Rational(r * zr.im + l * zl.im + s * zs.im))};
  };
}

void two_class(Outcome& o) {
  const MukaiVector a1 = make_mukai(1, {0}, 0), a2 = make_mukai(0, {0}, 1), a = make_mukai(1, {0}, 1);
  const ChargeFn z1 = linear_charge({0, 1}, {1, 0}, {0, 1});
  const ChargeFn z0 = linear_charge({Rational(-1, 10), 1}, {1, 0}, {Rational(1, 10), 1});
  const PhaseContext ctx{k3, z0, z1, {a1, a2, a}, QuadExt(4)};
  const auto mul = [](const AlgebraElement& x, const AlgebraElement& y) { return algebra_mul(k3, x, y); };
  const ITable t0 = ITable::formal({a1, a2, a});
  const ITable t1 = transform_delta_across_wall(ctx, t0, a);
  o.expect(delta_bar(t1, a) == delta_bar(t0, a) + mul(delta_bar(t0, a1), delta_bar(t0, a2)), "delta transform");
  o.expect(t1.value(a1) == t0.value(a1) && t1.value(a2) == t0.value(a2), "sub-classes changed");
  const AlgebraElement eps1 = delta_to_epsilon(RayScope{k3, z1, {a1, a2, a}}, t1, a);
  const AlgebraElement half = (mul(delta_bar(t1, a1), delta_bar(t1, a2)) + mul(delta_bar(t1, a2), delta_bar(t1, a1))) *
                              FormalLambda(Rational(1, 2));
  o.expect(eps1 == delta_bar(t1, a) - half, "epsilon on the wall");
  const AlgebraElement eps0 = delta_to_epsilon(RayScope{k3, z0, {a}}, t0, a);
  o.expect(eps0 == delta_bar(t0, a), "epsilon off the wall");
  o.expect(mul(delta_bar(t0, a1), delta_bar(t0, a2)) == mul(delta_bar(t0, a2), delta_bar(t0, a1)), "commutativity");
  o.expect(eps1 == eps0, "epsilon equality");
  o.expect(epsilon_invariance_check(ctx, t0, a).equal, "invariance check");
  o.detail << "delta(" << a.to_string() << ") on the wall = " << t1.value(a).to_string();
}

void sole_decomposition(Outcome& o) {
  const StabilityPoint P = at(Rational(65, 64), Rational(371, 128));
  const ITable t = ITable::formal(ray_scope(P, alpha).parts);
  const InvariantReport r = j_alpha(P, alpha, t);
  o.expect(r.decomposition_count == 1, "more than one decomposition");
  o.expect(r.J == FormalLambda::symbol(alpha) * (RatFunc::q() - RatFunc(1)), "J is not (q-1) I");
  o.detail << "J = " << r.J.to_string();
}

void large_volume(Outcome& o) {
  const LargeVolumeReport rep =
      large_volume_threshold(k3, alpha, H, large_volume_candidates(k3, alpha, H), TwistPolicy::TwistByOmega);
  o.expect(rep.consistent, "report not consistent");
  o.expect(rep.samples.size() == 11, "sample count");
  RationalDivisor zero{{0}};
  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    const Rational& k = rep.samples[i];
    o.expect(k >= rep.threshold, "sample below N");
    const RationalDivisor kH = k * H;
    for (const auto& p : rep.pairs) {
      const ComplexRational zi = test::oracle_charge(k3, zero, kH, p.vi), zj = test::oracle_charge(k3, zero, kH, p.vj);
      const bool aligned = !zi.is_zero() && !zj.is_zero() && p.poly(k) == 0 && zi.re * zj.re + zi.im * zj.im > 0;
      const bool eq = p_equality_test(k3, zero, kH, p.vi, p.vj);
      o.expect(aligned == eq, "alignment and P-equality differ for " + p.vi.to_string() + ", " + p.vj.to_string());
    }
  }
  const MukaiVector& a = rep.alpha_used;
  std::vector<MukaiVector> cls = ray_scope(StabilityPoint(k3, zero, rep.threshold * H), a).parts;
  for (const auto& v : jhat_universe(k3, H, a)) cls.push_back(v);
  cls.push_back(a);
  const ITable t = ITable::formal(cls);
  const JJhatReport cmp = compare_j_jhat(k3, a, H, t, t, rep.threshold);
  o.expect(cmp.equal, "J and hat-J differ");
  o.detail << "class used " << a.to_string() << " (twist " << rep.twist << "), N = " << to_string(rep.threshold) << ", "
           << rep.pairs.size() << " pairs, J = " << cmp.j.J.to_string();
}

Rational random_in(std::mt19937_64& g, const Rational& lo, const Rational& hi) {
  const long den = 1009;
  const long n = test::uniform(g, 1, den - 1);
  return Rational(lo + (hi - lo) * Rational(n, den));
}

void chambers(Outcome& o) {
  const WallSet& ws = flagship_walls();
  auto g = test::rng_for("acceptance-10");
  std::set<ChamberFingerprint> seen;
  int tries = 0;
  while (seen.size() < 5 && tries < 500) {
    ++tries;
    const Rational b0 = random_in(g, flagship.b0, flagship.b1), t0 = random_in(g, flagship.t0, flagship.t1);
    const ChamberFingerprint f = classify_point(b0, t0, ws.walls);
    if (std::count(f.begin(), f.end(), 0) || seen.count(f)) continue;
    Rational b1, t1;
    bool found = false;
    for (Rational d = (flagship.t1 - flagship.t0) / 16; d > Rational(1, 1 << 20); d /= 2) {
      b1 = b0 + d * Rational(1, 3);
      t1 = t0 + d;
      if (b1 < flagship.b1 && t1 < flagship.t1 && classify_point(b1, t1, ws.walls) == f &&
          !segment_crosses_walls(b0, t0, b1, t1, ws.walls)) {
        found = true;
        break;
      }
    }
    if (!found) continue;
    seen.insert(f);
    const ITable t = ITable::formal(ray_scope(at(b0, t0), alpha).parts);
    const ChamberReport rep = chamber_constancy_check(k3, flagship, ws.walls, b0, t0, b1, t1, alpha, t);
    o.expect(rep.constant, "J not constant near (" + to_string(b0) + ", " + to_string(t0) + ")");
    o.detail << "(" << to_string(b0) << "," << to_string(t0) << ") ";
  }
  o.expect(seen.size() == 5, "fewer than five chambers sampled");
  o.detail << "in " << seen.size() << " distinct chambers";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0)
      test::seed() = std::stoull(argv[i] + 7);
    else
      only.insert(std::stoi(argv[i]));
  }
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"dual-route central charge", dual_route},
      {"spherical zero witness", spherical_witness},
      {"enumeration oracle", enumeration_oracle},
      {"torsion Hilbert polynomials and P-equality routes", torsion_hilbert},
      {"log/exp inversion", log_exp},
      {"wall-crossing invariance, flagship region", flagship_crossing},
      {"worked two-class case", two_class},
      {"sole trivial decomposition", sole_decomposition},
      {"large-volume consistency", large_volume},
      {"chamber constancy", chambers},
  };
  std::cout << "seed " << test::seed() << std::endl;
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(n)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2)
              << secs << " s) " << criteria[i].first << ": " << o.detail.str() << std::endl;
  }
  return failed;
}
