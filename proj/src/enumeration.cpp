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

#include "enumeration.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace bstab {

namespace {

// Rational upper bound for sqrt(x), x >= 0.
Rational sqrt_upper(const Rational& x) {
  if (x <= 0) return 0;
  Integer num = x.get_num() * x.get_den();
  return Rational(ceil_sqrt(Rational(num)), x.get_den());
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    require(p < n, ErrorCode::Internal, "singular form in enumeration bounds");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational f = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= f;
      inv[c][j] /= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational g = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= g * a[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

// Diagonal of the inverse of G(x) = 2 (x.w)^2 / w^2 - x^2, positive
// definite by the Hodge index theorem.
std::vector<Rational> hodge_inverse_diagonal(const NSLattice& L, const RationalDivisor& w) {
  const int n = L.rank();
  Rational ww = L.dot(w, w);
  std::vector<Rational> gw(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gw[i] += Rational(L.gram()[i][j]) * w[j];
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = 2 * gw[i] * gw[j] / ww - Rational(L.gram()[i][j]);
  auto inv = invert(g);
  std::vector<Rational> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = inv[i][i];
    require(d[i] > 0, ErrorCode::Internal, "Hodge form is not positive definite");
  }
  return d;
}

Interval t_squared_range(const SliceRegion& R) { return {R.t0 * R.t0, R.t1 * R.t1}; }

Interval scale(const Interval& x, const Rational& c) {
  return c >= 0 ? Interval{c * x.lo, c * x.hi} : Interval{c * x.hi, c * x.lo};
}

Rational dist_to_zero(const Interval& x) {
  if (x.lo > 0) return x.lo;
  if (x.hi < 0) return -x.hi;
  return 0;
}

}  // namespace

Interval re_range(const NSLattice& L, const SliceRegion& R, const MukaiVector& v) {
  const Rational r(v.r);
  // Re = b l.B0 - r B0^2 b^2 / 2 + r W0^2 t^2 / 2 - s
  Interval bq = quadratic_range(0, L.dot(v.l, R.B0), -r * L.dot(R.B0, R.B0) / 2, R.b0, R.b1);
  Interval tq = scale(t_squared_range(R), r * L.dot(R.W0, R.W0) / 2);
  return {bq.lo + tq.lo - Rational(v.s), bq.hi + tq.hi - Rational(v.s)};
}

Interval im_range(const NSLattice& L, const SliceRegion& R, const MukaiVector& v) {
  const Rational r(v.r);
  // Im = t (l.W0 - r b B0.W0)
  Rational h0 = L.dot(v.l, R.W0), h1 = -r * L.dot(R.B0, R.W0);
  Rational a = h0 + h1 * R.b0, b = h0 + h1 * R.b1;
  Interval h{std::min(a, b), std::max(a, b)};
  Rational c[4] = {h.lo * R.t0, h.lo * R.t1, h.hi * R.t0, h.hi * R.t1};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Rational abs_squared_lower_bound(const NSLattice& L, const SliceRegion& R, const MukaiVector& v) {
  Rational x = dist_to_zero(re_range(L, R, v));
  Rational y = dist_to_zero(im_range(L, R, v));
  return x * x + y * y;
}

namespace {

// Some point of [lo, hi] has p <= 0.
bool nonpositive_somewhere(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero() || p(lo) <= 0 || p(hi) <= 0) return true;
  if (p.degree() <= 0) return false;
  return SturmSequence(p).count(lo, hi) > 0;
}

}  // namespace

namespace {

// |Z|^2 on the region as a function of b and T = t^2:
// (A(b) + D T)^2 + T h(b)^2, convex in T for fixed b.
struct MassProbe {
  UPoly A, h, h2;
  Rational D, T0, T1, m2;

  Rational value(const Rational& b, const Rational& T) const {
    Rational x = A(b) + D * T, y = h(b);
    return x * x + T * y * y;
  }

  // min over T in [T0, T1] at fixed b.
  Rational best_at(const Rational& b) const {
    if (D == 0) return value(b, T0);
    Rational a = A(b), y = h(b);
    Rational T = -(2 * a * D + y * y) / (2 * D * D);
    T = std::clamp(T, T0, T1);
    return value(b, T);
  }

  // Lower bound of |Z|^2 over [lo, hi] x [T0, T1].
  Rational cell_bound(const Rational& lo, const Rational& hi) const {
    Interval ar = quadratic_range(A.coeff(0), A.coeff(1), A.coeff(2), lo, hi);
    Rational ha = h(lo), hb = h(hi);
    Rational hmin = (ha <= 0 && hb >= 0) || (ha >= 0 && hb <= 0) ? Rational(0) : std::min(abs(ha), abs(hb));
    Rational H = hmin * hmin;
    // min over T of dist(-D T, [ar.lo, ar.hi])^2 + T H: convex, so check the
    // ends, the kinks and the stationary points of both quadratic pieces.
    std::vector<Rational> ts{T0, T1};
    if (D != 0) {
      ts.push_back(-ar.lo / D);
      ts.push_back(-ar.hi / D);
      ts.push_back(-(H / (2 * D) + ar.lo) / D);
      ts.push_back(-(H / (2 * D) + ar.hi) / D);
    }
    Rational best = -1;
    for (Rational T : ts) {
      T = std::clamp(T, T0, T1);
      Rational c = -D * T;
      Rational d = c < ar.lo ? ar.lo - c : c > ar.hi ? c - ar.hi : Rational(0);
      Rational f = d * d + T * H;
      if (best < 0 || f < best) best = f;
    }
    return best;
  }

  // Exact decision on [lo, hi] by real root isolation.
  bool exact(const Rational& lo, const Rational& hi) const {
    auto at_T = [&](const Rational& T) {
      UPoly x = A + UPoly::constant(D * T);
      return x * x + h2 * T - UPoly::constant(m2);
    };
    if (nonpositive_somewhere(at_T(T0), lo, hi)) return true;
    if (nonpositive_somewhere(at_T(T1), lo, hi)) return true;
    if (D == 0) return false;
    // Interior minimiser T* = -(2 A D + h^2) / (2 D^2), with value
    // -h^2 (4 A D + h^2) / (4 D^2).
    const UPoly u = -(A * (2 * D) + h2);
    const UPoly lower = u - UPoly::constant(2 * D * D * T0);                        // >= 0
    const UPoly upper = UPoly::constant(2 * D * D * T1) - u;                        // >= 0
    const UPoly q = -(h2 * (A * (4 * D) + h2)) - UPoly::constant(4 * D * D * m2);  // <= 0
    auto ok = [&](int sl, int su, int sq) { return sl >= 0 && su >= 0 && sq <= 0; };
    auto ok_at = [&](const Rational& x) { return ok(sgn(lower(x)), sgn(upper(x)), sgn(q(x))); };
    if (ok_at(lo) || ok_at(hi)) return true;
    UPoly prod = UPoly::constant(1);
    for (const UPoly* p : {&lower, &upper, &q})
      if (p->degree() > 0) prod *= squarefree_part(*p);
    prod = squarefree_part(prod);
    std::vector<RealRoot> roots;
    if (prod.degree() > 0) roots = isolate_real_roots(prod, lo, hi);
    Rational left = lo;
    for (const auto& rt : roots) {
      if (ok(sign_at_root(lower, prod, rt), sign_at_root(upper, prod, rt), sign_at_root(q, prod, rt))) return true;
      if (left < rt.lo && ok_at((left + rt.lo) / 2)) return true;
      left = rt.hi;
    }
    return left < hi && ok_at((left + hi) / 2);
  }

  bool search(const Rational& lo, const Rational& hi, int depth) const {
    if (cell_bound(lo, hi) > m2) return false;
    Rational mid = (lo + hi) / 2;
    if (best_at(mid) <= m2) return true;
    if (depth == 0 || lo == hi) return exact(lo, hi);
    return search(lo, mid, depth - 1) || search(mid, hi, depth - 1);
  }
};

}  // namespace

bool reaches_mass(const NSLattice& L, const SliceRegion& R, const MukaiVector& v, const Rational& m2) {
  if (abs_squared_lower_bound(L, R, v) > m2) return false;
  const Rational r(v.r);
  MassProbe p;
  p.A = UPoly({-Rational(v.s), L.dot(v.l, R.B0), -r * L.dot(R.B0, R.B0) / 2});
  p.h = UPoly({L.dot(v.l, R.W0), -r * L.dot(R.B0, R.W0)});
  p.h2 = p.h * p.h;
  p.D = r * L.dot(R.W0, R.W0) / 2;
  p.T0 = R.t0 * R.t0;
  p.T1 = R.t1 * R.t1;
  p.m2 = m2;
  if (p.best_at(R.b0) <= m2 || p.best_at(R.b1) <= m2) return true;
  return p.search(R.b0, R.b1, 8);
}

EnumerationResult enumerate_region(const NSLattice& L, const SliceRegion& R, const EnumerationBudget& budget) {
  require(budget.max_abs_squared > 0, ErrorCode::InvalidArgument, "enumeration budget must be positive");
  require(R.t0 > 0 && R.t0 <= R.t1 && R.b0 <= R.b1, ErrorCode::InvalidArgument, "empty or non-positive region");
  L.check_divisor(R.B0);
  L.check_divisor(R.W0);
  const Rational ww = L.dot(R.W0, R.W0);
  require(ww > 0, ErrorCode::InvalidArgument, "W0^2 must be positive");
  const int n = L.rank();
  const Rational M = budget.max_abs_squared;
  const Rational m = sqrt_upper(M);
  const Rational w = ww * R.t0 * R.t0;  // smallest omega^2 in the region

  EnumerationResult out;
  // v^2 = 2 r Re - r^2 w + (l - r beta)^2 and Hodge index give
  // r^2 w - 2|r| m - 2 - m^2 / w <= 0.
  Integer r_max = 0;
  while (true) {
    Rational rn(r_max + 1);
    if (rn * rn * w - 2 * rn * m - 2 - m * m / w > 0) break;
    ++r_max;
  }
  if (budget.cap_r && r_max > *budget.cap_r) {
    r_max = *budget.cap_r;
    out.truncated = true;
  }
  out.box.r_max = r_max;
  const std::vector<Rational> ginv = hodge_inverse_diagonal(L, R.W0);

  for (Integer r = -r_max; r <= r_max; ++r) {
    const Rational rq(r);
    // G(l - r beta) <= 2 m^2 / w + 2 + 2|r| m - r^2 w
    Rational c = 2 * m * m / w + 2 + 2 * abs(rq) * m - rq * rq * w;
    std::vector<std::pair<Integer, Integer>> ranges;
    if (c >= 0) {
      for (int i = 0; i < n; ++i) {
        Rational e = sqrt_upper(c * ginv[i]);
        Rational a = rq * R.b0 * R.B0[i], b = rq * R.b1 * R.B0[i];
        Integer lo = ceil_int(std::min(a, b) - e), hi = floor_int(std::max(a, b) + e);
        if (budget.cap_l) {
          if (lo < -*budget.cap_l) { lo = -*budget.cap_l; out.truncated = true; }
          if (hi > *budget.cap_l) { hi = *budget.cap_l; out.truncated = true; }
        }
        ranges.emplace_back(lo, hi);
      }
    }
    out.box.l_ranges.push_back(ranges);
    if (ranges.empty()) continue;
    if (std::any_of(ranges.begin(), ranges.end(), [](const auto& p) { return p.first > p.second; })) continue;

    MukaiVector v{r, {}, 0};
    for (const auto& p : ranges) v.l.push_back(p.first);
    while (true) {
      v.s = 0;
      Interval im = im_range(L, R, v);
      if (dist_to_zero(im) <= m) {
        // s = g - Re with g = b l.B0 - r b^2 B0^2/2 + r t^2 W0^2/2 and |Re| <= m.
        Interval g = re_range(L, R, v);
        Integer s_lo = ceil_int(g.lo - m), s_hi = floor_int(g.hi + m);
        if (budget.cap_s) {
          if (s_lo < -*budget.cap_s) { s_lo = -*budget.cap_s; out.truncated = true; }
          if (s_hi > *budget.cap_s) { s_hi = *budget.cap_s; out.truncated = true; }
        }
        const Integer l2 = L.dot(v.l, v.l);
        // The admissible s form an integer interval: the set of points with
        // |Im Z| <= m is connected, and over it s ranges over Re-discs that
        // move continuously. Locate one member, then binary search the ends.
        auto admissible = [&](const Integer& s) {
          v.s = s;
          return reaches_mass(L, R, v, M);
        };
        const Rational h0 = L.dot(v.l, R.W0), h1 = -rq * L.dot(R.B0, R.W0);
        Rational bstar = R.b0;
        if (h1 != 0) bstar = std::clamp(Rational(-h0 / h1), R.b0, R.b1);
        else if (abs(h0 + h1 * R.b1) < abs(h0 + h1 * R.b0)) bstar = R.b1;
        v.s = 0;
        StabilityPoint p(L, bstar * R.B0, R.t0 * R.W0);
        Rational g0 = p.charge(v).re;  // Re at s = 0
        Integer seed = floor_int(g0 + Rational(1, 2));
        seed = std::clamp(seed, s_lo, s_hi);
        std::optional<Integer> hit;
        if (s_lo <= s_hi) {
          if (admissible(seed)) {
            hit = seed;
          } else {
            for (Integer s = s_lo; s <= s_hi; ++s)
              if (admissible(s)) {
                hit = s;
                break;
              }
          }
        }
        if (hit) {
          Integer a = s_lo, b = *hit;  // smallest admissible in [a, b]
          while (a < b) {
            Integer mid = a + (b - a) / 2;
            if (mid < a) mid = a;
            if (admissible(mid)) b = mid;
            else a = mid + 1;
          }
          Integer first = b;
          a = *hit;
          b = s_hi;  // largest admissible in [a, b]
          while (a < b) {
            Integer mid = b - (b - a) / 2;
            if (admissible(mid)) a = mid;
            else b = mid - 1;
          }
          Integer last = a;
          for (Integer s = first; s <= last; ++s) {
            if (l2 - 2 * r * s < -2) continue;
            v.s = s;
            if (v.is_zero()) continue;
            out.classes.push_back(v);
            if (!(out.classes.size() <= budget.max_classes)) fail(ErrorCode::BudgetExceeded,
                    "enumeration exceeded " + std::to_string(budget.max_classes) + " classes");
          }
        }
      }
      int i = 0;
      while (i < n) {
        if (v.l[i] < ranges[i].second) {
          ++v.l[i];
          break;
        }
        v.l[i] = ranges[i].first;
        ++i;
      }
      if (i == n) break;
    }
  }
  std::sort(out.classes.begin(), out.classes.end());
  if (out.truncated) out.warning = "TruncationWarning: hard caps cut the derived enumeration box";
  return out;
}

EnumerationResult enumerate_bounded(const StabilityPoint& P, const EnumerationBudget& budget) {
  SliceRegion R{P.beta(), P.omega(), 1, 1, 1, 1};
  EnumerationResult out = enumerate_region(P.lattice(), R, budget);
  // At a single point the lower bound is exact; recheck with the full charge.
  std::erase_if(out.classes, [&](const MukaiVector& v) { return P.charge(v).abs_squared() > budget.max_abs_squared; });
  return out;
}

ChargeFn charge_fn(const StabilityPoint& P) {
  return [P](const MukaiVector& v) { return lift(P.charge(v)); };
}

ChargeFn slice_charge_fn(const NSLattice& L, const RationalDivisor& B0, const RationalDivisor& W0, const Rational& b,
                         const QuadExt& t) {
  const RationalDivisor beta = b * B0;
  const RationalDivisor gb = L.gram_times(beta), gw = L.gram_times(W0);
  const Rational b2 = L.dot(beta, beta), w2 = L.dot(W0, W0), bw = L.dot(beta, W0);
  const QuadExt t2 = t * t;
  const QuadExt half_re = (QuadExt(b2) - t2 * w2) / Rational(2);
  return [=](const MukaiVector& v) {
    Rational lb, lw;
    for (std::size_t k = 0; k < v.l.size(); ++k) {
      lb += Rational(v.l[k]) * gb.coeffs[k];
      lw += Rational(v.l[k]) * gw.coeffs[k];
    }
    const Rational r(v.r);
    return ComplexQuad{QuadExt(Rational(lb - Rational(v.s))) - half_re * QuadExt(r), t * QuadExt(Rational(lw - r * bw))};
  };
}

void sort_by_mass(std::vector<MukaiVector>& classes, const ChargeFn& Z) {
  std::vector<std::pair<QuadExt, MukaiVector>> keyed;
  keyed.reserve(classes.size());
  for (auto& v : classes) keyed.emplace_back(Z(v).abs_squared(), std::move(v));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    int c = sgn(a.first - b.first);
    if (c != 0) return c > 0;
    return a.second < b.second;
  });
  classes.clear();
  for (auto& [k, v] : keyed) classes.push_back(std::move(v));
}

std::vector<MukaiVector> ray_candidates(const NSLattice& L, const std::vector<MukaiVector>& pool,
                                        const MukaiVector& alpha, const ChargeFn& Z) {
  const ComplexQuad za = Z(alpha);
  require(!za.is_zero(), ErrorCode::ZeroCharge, "Z(alpha) = 0");
  const QuadExt cap = za.abs_squared();
  // On the ray, Re(Z(v) conj Z(alpha)) = |Z(v)| |Z(alpha)| is additive.
  auto dot = [&](const MukaiVector& v) {
    ComplexQuad z = Z(v);
    return z.re * za.re + z.im * za.im;
  };
  std::vector<std::pair<MukaiVector, QuadExt>> seeds;
  for (const auto& v : pool) {
    if (v.is_zero() || mukai_square(L, v) < -2) continue;
    ComplexQuad z = Z(v);
    if (z.is_zero() || !same_ray_raw(z, za)) continue;
    QuadExt d = dot(v);
    if (d > cap) continue;
    seeds.emplace_back(v, d);
  }
  std::map<MukaiVector, QuadExt> closure;
  std::vector<std::pair<MukaiVector, QuadExt>> frontier;
  for (const auto& s : seeds)
    if (closure.emplace(s.first, s.second).second) frontier.push_back(s);
  while (!frontier.empty()) {
    std::vector<std::pair<MukaiVector, QuadExt>> next;
    for (const auto& [u, du] : frontier)
      for (const auto& [w, dw] : seeds) {
        QuadExt d = du + dw;
        if (d > cap) continue;
        MukaiVector x = u + w;
        if (closure.emplace(x, d).second) next.emplace_back(x, d);
      }
    frontier = std::move(next);
  }
  std::vector<MukaiVector> out;
  for (const auto& [v, d] : closure) out.push_back(v);
  return out;
}

namespace {

// Classes v != 0 with v^2 >= -2, |Z(v)|^2 <= |Z(alpha)|^2 and Z(v) on the
// closed line through Z(alpha). Same box as enumerate_region at one point;
// the line fixes s from (r, l) unless Z(alpha) is real.
std::vector<MukaiVector> line_pool(const StabilityPoint& P, const ComplexRational& za) {
  const NSLattice& L = P.lattice();
  const int n = L.rank();
  const Rational M = za.abs_squared();
  const Rational m = sqrt_upper(M);
  const Rational w = P.omega_sq();
  Integer r_max = 0;
  while (true) {
    Rational rn(r_max + 1);
    if (rn * rn * w - 2 * rn * m - 2 - m * m / w > 0) break;
    ++r_max;
  }
  const std::vector<Rational> ginv = hodge_inverse_diagonal(L, P.omega());
  const Rational half = (P.beta_sq() - P.omega_sq()) / 2;
  std::vector<MukaiVector> out;
  auto keep = [&](const MukaiVector& v) {
    if (v.is_zero() || mukai_square(L, v) < -2) return;
    if (P.charge(v).abs_squared() <= M) out.push_back(v);
  };
  for (Integer r = -r_max; r <= r_max; ++r) {
    const Rational rq(r);
    const Rational c = 2 * m * m / w + 2 + 2 * abs(rq) * m - rq * rq * w;
    if (c < 0) continue;
    std::vector<std::pair<Integer, Integer>> ranges;
    for (int i = 0; i < n; ++i) {
      const Rational e = sqrt_upper(c * ginv[i]);
      ranges.emplace_back(ceil_int(rq * P.beta()[i] - e), floor_int(rq * P.beta()[i] + e));
    }
    if (std::any_of(ranges.begin(), ranges.end(), [](const auto& p) { return p.first > p.second; })) continue;
    MukaiVector v{r, {}, 0};
    for (const auto& p : ranges) v.l.push_back(p.first);
    while (true) {
      // Re Z = l.beta - s - r half and Im(Z(v) conj Z(alpha)) = 0.
      const Rational lb = P.dot_beta(v.l) - rq * half;
      const Rational im = P.dot_omega(v.l) - rq * P.beta_omega();
      if (za.im != 0) {
        const Rational re = im * za.re / za.im;
        const Rational sv = lb - re;
        if (is_integer(sv) && re * re + im * im <= M) {
          v.s = sv.get_num();
          keep(v);
        }
      } else if (im == 0) {
        for (Integer sv = ceil_int(lb - m); sv <= floor_int(lb + m); ++sv) {
          v.s = sv;
          keep(v);
        }
      }
      int k = 0;
      while (k < n && v.l[k] == ranges[k].second) {
        v.l[k] = ranges[k].first;
        ++k;
      }
      if (k == n) break;
      ++v.l[k];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<MukaiVector> effective_candidates(const StabilityPoint& P, const MukaiVector& alpha) {
  ComplexRational za = P.charge(alpha);
  require(!za.is_zero(), ErrorCode::ZeroCharge, "Z(alpha) = 0");
  return ray_candidates(P.lattice(), line_pool(P, za), alpha, charge_fn(P));
}

namespace {

struct DecompositionSearch {
  std::vector<MukaiVector> cands;
  std::vector<QuadExt> dots;
  std::vector<Decomposition> out;
  Decomposition path;
  std::size_t max_parts = 0;
  /// Remainder -> largest part allowance under which it has no decomposition.
  std::map<MukaiVector, std::size_t> dead;

  bool run(const MukaiVector& rem, const QuadExt& drem) {
    const std::size_t allowance = max_parts > 0 ? max_parts - path.size() : SIZE_MAX;
    auto it = dead.find(rem);
    if (it != dead.end() && it->second >= allowance) return false;
    const bool last = allowance == 1;
    bool found = false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      int c = sgn(dots[i] - drem);
      if (c > 0) continue;
      if (c == 0) {
        if (cands[i] == rem) {
          path.push_back(cands[i]);
          out.push_back(path);
          path.pop_back();
          found = true;
        }
        continue;
      }
      if (last) continue;
      path.push_back(cands[i]);
      found = run(rem - cands[i], drem - dots[i]) || found;
      path.pop_back();
    }
    if (!found) dead[rem] = std::max(dead[rem], allowance);
    return found;
  }
};

}  // namespace

std::vector<Decomposition> enumerate_ray_decompositions(const std::vector<MukaiVector>& candidates,
                                                        const MukaiVector& alpha, const ChargeFn& Z,
                                                        std::size_t max_parts) {
  const ComplexQuad za = Z(alpha);
  require(!za.is_zero(), ErrorCode::ZeroCharge, "Z(alpha) = 0");
  DecompositionSearch s;
  s.max_parts = max_parts;
  s.cands = candidates;
  sort_by_mass(s.cands, Z);
  for (const auto& v : s.cands) {
    ComplexQuad z = Z(v);
    if (!(!z.is_zero())) fail(ErrorCode::ZeroCharge, "candidate " + v.to_string() + " has zero charge");
    if (!(same_ray_raw(z, za))) fail(ErrorCode::InvalidArgument, "candidate " + v.to_string() + " is off the ray of alpha");
    s.dots.push_back(z.re * za.re + z.im * za.im);
  }
  s.run(alpha, za.abs_squared());
  return s.out;
}

std::vector<Decomposition> enumerate_ray_decompositions(const StabilityPoint& P, const MukaiVector& alpha) {
  return enumerate_ray_decompositions(effective_candidates(P, alpha), alpha, charge_fn(P));
}

}  // namespace bstab
