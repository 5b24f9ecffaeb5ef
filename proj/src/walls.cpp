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

#include "walls.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace bstab {

namespace {

// Rational sample points, one per open cell of (lo, hi) cut at the real
// roots of p (p nonzero).
std::vector<Rational> cell_samples(const UPoly& p, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  if (!(lo < hi)) return out;
  std::vector<RealRoot> roots;
  if (p.degree() > 0) roots = isolate_real_roots(p, lo, hi);
  if (!roots.empty()) {
    // Separate every isolating interval strictly from its neighbours.
    SturmSequence s(p);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = 0; k < roots.size(); ++k) {
        const Rational prev = k == 0 ? lo : roots[k - 1].hi;
        const Rational next = k + 1 == roots.size() ? hi : roots[k + 1].lo;
        if (!roots[k].exact && (roots[k].lo <= prev || roots[k].hi >= next)) {
          refine_root(s, roots[k], (roots[k].hi - roots[k].lo) / 2);
          changed = true;
        }
      }
    }
  }
  Rational left = lo;
  for (const auto& r : roots) {
    if (left < r.lo) out.push_back(simplest_between(left, r.lo));
    left = r.hi;
  }
  if (left < hi) out.push_back(simplest_between(left, hi));
  return out;
}

UPoly without_zero(const std::vector<UPoly>& ps) {
  UPoly prod = UPoly::constant(1);
  for (const auto& p : ps)
    if (!p.is_zero() && p.degree() > 0) prod *= squarefree_part(p);
  return prod;
}

bool positive_somewhere(const UPoly& u, const Rational& lo, const Rational& hi, Rational* where) {
  if (u.is_zero()) return false;
  for (const auto& x : cell_samples(u, lo, hi))
    if (u(x) > 0) {
      if (where) *where = x;
      return true;
    }
  return false;
}

BPoly d_db(const BPoly& p) {
  BPoly out;
  for (const auto& [k, c] : p.terms())
    if (k.first > 0) out += BPoly::term(c * k.first, k.first - 1, k.second);
  return out;
}

BPoly d_dt(const BPoly& p) {
  BPoly out;
  for (const auto& [k, c] : p.terms())
    if (k.second > 0) out += BPoly::term(c * k.second, k.first, k.second - 1);
  return out;
}

std::vector<UPoly> side_in_t_squared(const BPoly& side) {
  std::vector<UPoly> s;
  for (int j = 0; j <= side.degree_t(); ++j) {
    UPoly c = side.coeff_of_t(j);
    if (j % 2 == 1) {
      require(c.is_zero(), ErrorCode::Internal, "side condition is not even in t");
      continue;
    }
    s.push_back(c);
  }
  while (s.size() < 3) s.emplace_back();
  return s;
}

// Coefficients of W = t (c0 + c2 t^2) for the pair, from the slice charges
// Re = A(b) + D t^2, Im = t B(b).
std::pair<UPoly, UPoly> wall_coefficients(const NSLattice& L, const SliceRegion& R, const MukaiVector& vi,
                                          const MukaiVector& vj) {
  auto parts = [&](const MukaiVector& v) {
    const Rational r(v.r);
    UPoly a({-Rational(v.s), L.dot(v.l, R.B0), -r * L.dot(R.B0, R.B0) / 2});
    UPoly b({L.dot(v.l, R.W0), -r * L.dot(R.B0, R.W0)});
    Rational d = r * L.dot(R.W0, R.W0) / 2;
    return std::make_tuple(a, b, d);
  };
  auto [ai, bi, di] = parts(vi);
  auto [aj, bj, dj] = parts(vj);
  return {bi * aj - bj * ai, bi * dj - bj * di};
}

// False only when c0 + c2 T keeps one strict sign for all T in [T0, T1]
// over (b0, b1), and c0, c2 have no common root there.
bool may_meet_region(const UPoly& c0, const UPoly& c2, const SliceRegion& R) {
  if (c0.is_zero() && c2.is_zero()) return false;
  const UPoly f0 = c0 + c2 * (R.t0 * R.t0), f1 = c0 + c2 * (R.t1 * R.t1);
  struct Cell {
    Rational lo, hi;
    int depth;
  };
  std::vector<Cell> stack{{R.b0, R.b1, 0}};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    Interval e0 = range_enclosure(f0, c.lo, c.hi), e1 = range_enclosure(f1, c.lo, c.hi);
    if ((e0.lo > 0 && e1.lo > 0) || (e0.hi < 0 && e1.hi < 0)) continue;
    if (c.depth == 6) return true;
    Rational mid = (c.lo + c.hi) / 2;
    if (sgn(f0(mid)) * sgn(f1(mid)) < 0) return true;
    stack.push_back({c.lo, mid, c.depth + 1});
    stack.push_back({mid, c.hi, c.depth + 1});
  }
  return false;
}

}  // namespace

Wall make_wall(const NSLattice& L, const SliceRegion& R, const MukaiVector& vi, const MukaiVector& vj) {
  require(!proportional(vi, vj), ErrorCode::InvalidArgument, "wall classes are proportional");
  SliceCharge zi = slice_charge(L, R.B0, R.W0, vi);
  SliceCharge zj = slice_charge(L, R.B0, R.W0, vj);
  Wall w;
  w.vi = vi;
  w.vj = vj;
  w.poly = zi.im * zj.re - zi.re * zj.im;
  w.side = zi.re * zj.re + zi.im * zj.im;
  for (const auto& [k, c] : w.poly.terms())
    require(k.second == 1 || k.second == 3, ErrorCode::Internal, "wall polynomial is not t (c0 + c2 t^2)");
  w.c0 = w.poly.coeff_of_t(1);
  w.c2 = w.poly.coeff_of_t(3);
  w.side_t2 = side_in_t_squared(w.side);
  return w;
}

bool wall_meets_region(Wall& w, const SliceRegion& R) {
  if (w.poly.is_zero()) return false;
  // Vertical components: common roots of c0 and c2.
  UPoly g = w.c2.is_zero() ? w.c0 : gcd(w.c0, w.c2);
  if (g.degree() > 0) {
    for (const auto& r : isolate_real_roots(g, R.b0, R.b1)) {
      if (r.exact) {
        if (r.lo == R.b0 || r.lo == R.b1) continue;
        UPoly s = w.side.restrict_b(r.lo);
        if (positive_somewhere(s, R.t0, R.t1, nullptr)) {
          w.witness_b = r.lo;
          w.witness_vertical = true;
          return true;
        }
      } else {
        w.witness_b = r.lo;
        w.conservative = true;
        return true;
      }
    }
  }
  if (w.c2.is_zero()) return false;
  // Elsewhere t^2 = -c0/c2; clearing c2^2 > 0 keeps every sign.
  const UPoly& c0 = w.c0;
  const UPoly& c2 = w.c2;
  UPoly c2sq = c2 * c2;
  UPoly c0c2 = c0 * c2;
  UPoly p1 = -c0c2 - c2sq * (R.t0 * R.t0);
  UPoly p2 = c2sq * (R.t1 * R.t1) + c0c2;
  std::vector<UPoly> s = side_in_t_squared(w.side);
  UPoly sp = s[0] * c2sq - s[1] * c0c2 + s[2] * (c0 * c0);
  UPoly cut = without_zero({c2, p1, p2, sp});
  for (const auto& b : cell_samples(cut, R.b0, R.b1)) {
    if (c2(b) != 0 && p1(b) > 0 && p2(b) > 0 && sp(b) > 0) {
      w.witness_b = b;
      w.witness_vertical = false;
      return true;
    }
  }
  return false;
}

bool same_locus(const Wall& a, const Wall& b) { return (a.c0 * b.c2 - a.c2 * b.c0).is_zero(); }

MassBound certified_mass_bound(const NSLattice& L, const SliceRegion& R, const MukaiVector& alpha) {
  SliceCharge z = slice_charge(L, R.B0, R.W0, alpha);
  BPoly n = z.re * z.re + z.im * z.im;
  MassBound out;
  out.corner_sup = std::max({n(R.b0, R.t0), n(R.b0, R.t1), n(R.b1, R.t0), n(R.b1, R.t1)});
  const BPoly nb = d_db(n), nt = d_dt(n);
  Rational widened = out.corner_sup;
  struct Cell {
    Rational b0, b1, t0, t1;
    int depth;
  };
  std::deque<Cell> queue{{R.b0, R.b1, R.t0, R.t1, 0}};
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    SliceRegion cell{R.B0, R.W0, c.b0, c.b1, c.t0, c.t1};
    Interval re = re_range(L, cell, alpha), im = im_range(L, cell, alpha);
    Rational mr = std::max(abs(re.lo), abs(re.hi)), mi = std::max(abs(im.lo), abs(im.hi));
    Rational ub = mr * mr + mi * mi;
    if (ub <= out.corner_sup) continue;
    Interval gb = range_enclosure(nb, c.b0, c.b1, c.t0, c.t1);
    Interval gt = range_enclosure(nt, c.b0, c.b1, c.t0, c.t1);
    bool mono_b = gb.lo >= 0 || gb.hi <= 0, mono_t = gt.lo >= 0 || gt.hi <= 0;
    if (mono_b && mono_t) {
      // The maximum over the cell sits at a corner.
      Rational m = std::max({n(c.b0, c.t0), n(c.b0, c.t1), n(c.b1, c.t0), n(c.b1, c.t1)});
      if (m > widened) widened = m;
      continue;
    }
    if (c.depth >= 10) {
      if (ub > widened) widened = ub;
      continue;
    }
    Rational bm = (c.b0 + c.b1) / 2, tm = (c.t0 + c.t1) / 2;
    queue.push_back({c.b0, bm, c.t0, tm, c.depth + 1});
    queue.push_back({bm, c.b1, c.t0, tm, c.depth + 1});
    queue.push_back({c.b0, bm, tm, c.t1, c.depth + 1});
    queue.push_back({bm, c.b1, tm, c.t1, c.depth + 1});
  }
  out.used = widened;
  out.certified = widened == out.corner_sup;
  return out;
}

WallSet compute_walls(const NSLattice& L, const SliceRegion& R, const MukaiVector& alpha, const WallOptions& opt) {
  L.check_vector(alpha);
  require(R.t0 > 0 && R.b0 < R.b1 && R.t0 < R.t1, ErrorCode::InvalidArgument, "slice rectangle must be nonempty with t0 > 0");
  require(L.dot(R.W0, R.W0) > 0, ErrorCode::InvalidArgument, "W0^2 must be positive");
  WallSet out;
  out.mass = certified_mass_bound(L, R, alpha);
  EnumerationBudget budget = opt.budget;
  budget.max_abs_squared = out.mass.used;
  EnumerationResult d = enumerate_region(L, R, budget);
  out.truncated = d.truncated;
  out.destabilizer_count = d.classes.size();
  if (!(d.classes.size() <= opt.max_destabilizers)) fail(ErrorCode::BudgetExceeded,
          "destabilizer set has " + std::to_string(d.classes.size()) + " classes");
  for (const auto& v : d.classes) {
    if (proportional(v, alpha)) continue;
    auto [c0, c2] = wall_coefficients(L, R, v, alpha);
    if (!may_meet_region(c0, c2, R)) continue;
    Wall w = make_wall(L, R, v, alpha);
    if (!wall_meets_region(w, R)) continue;
    out.conservative = out.conservative || w.conservative;
    out.aligned.push_back(v);
    out.walls.push_back(std::move(w));
  }
  for (std::size_t i = 0; opt.all_pairs && i < out.aligned.size(); ++i)
    for (std::size_t j = i + 1; j < out.aligned.size(); ++j) {
      const auto& a = out.aligned[i];
      const auto& b = out.aligned[j];
      if (proportional(a, b)) continue;
      auto [c0, c2] = wall_coefficients(L, R, a, b);
      if (!may_meet_region(c0, c2, R)) continue;
      Wall w = make_wall(L, R, a, b);
      if (!wall_meets_region(w, R)) continue;
      out.conservative = out.conservative || w.conservative;
      out.walls.push_back(std::move(w));
    }
  std::sort(out.walls.begin(), out.walls.end(), [](const Wall& x, const Wall& y) {
    if (!(x.vj == y.vj)) return x.vj < y.vj;
    return x.vi < y.vi;
  });
  out.destabilizers = std::move(d.classes);
  return out;
}

ChamberFingerprint classify_point(const Rational& b, const Rational& t, const std::vector<Wall>& walls) {
  ChamberFingerprint f;
  f.reserve(walls.size());
  require(t > 0, ErrorCode::InvalidArgument, "classification needs t > 0");
  const Rational t2 = t * t;
  for (const auto& w : walls) {
    const Rational side = w.side_t2[0](b) + t2 * (w.side_t2[1](b) + t2 * w.side_t2[2](b));
    f.push_back(side > 0 ? sgn(w.c0(b) + w.c2(b) * t2) : kInactive);
  }
  return f;
}

WallPoint point_on_wall(const Wall& w, const Rational& b, const SliceRegion& R) {
  Rational c0 = w.c0(b), c2 = w.c2(b);
  if (c0 == 0 && c2 == 0) {
    Rational t;
    require(positive_somewhere(w.side.restrict_b(b), R.t0, R.t1, &t), ErrorCode::NoRootInRegion,
            "vertical wall component has no aligned point in the region");
    return {b, QuadExt(t)};
  }
  if (!(c2 != 0)) fail(ErrorCode::NoRootInRegion, "no wall point at b = " + to_string(b));
  Rational tau = -c0 / c2;
  if (!(tau > 0)) fail(ErrorCode::NoRootInRegion, "no wall point with t > 0 at b = " + to_string(b));
  WallPoint p{b, QuadExt::sqrt_of(tau)};
  if (!(p.t >= QuadExt(R.t0) && p.t <= QuadExt(R.t1))) fail(ErrorCode::NoRootInRegion,
          "wall point at b = " + to_string(b) + " lies outside the t-range");
  if (!(sgn(w.side.eval_t(b, p.t)) > 0)) fail(ErrorCode::NoRootInRegion,
          "charges are anti-aligned at b = " + to_string(b));
  return p;
}

bool lies_on_wall(const Wall& w, const WallPoint& p) {
  return sgn(w.poly.eval_t(p.b, p.t)) == 0 && sgn(w.side.eval_t(p.b, p.t)) > 0;
}

bool segment_crosses_walls(const Rational& b0, const Rational& t0, const Rational& b1, const Rational& t1,
                           const std::vector<Wall>& walls) {
  const Rational db = b1 - b0, dt = t1 - t0;
  for (const auto& w : walls) {
    UPoly wp = w.poly.along_segment(b0, t0, db, dt);
    UPoly sp = w.side.along_segment(b0, t0, db, dt);
    if (wp.is_zero()) {
      if (sp.is_zero()) continue;
      if (sp(0) > 0 || sp(1) > 0 || positive_somewhere(sp, 0, 1, nullptr)) return true;
      continue;
    }
    for (const auto& r : isolate_real_roots(wp, 0, 1))
      if (sign_at_root(sp, wp, r) > 0) return true;
  }
  return false;
}

namespace {

// Restrictions of W and of the side condition to the line through a wall
// point, as polynomials in u: u = t^2 at fixed b, or u = b at fixed t.
struct LineRestriction {
  UPoly w, side;
};

LineRestriction restrict_to_line(const Wall& x, bool along_b, const Rational& b, const Rational& t) {
  if (along_b) {
    const Rational t2 = t * t;
    return {x.c0 + x.c2 * t2, x.side_t2[0] + x.side_t2[1] * t2 + x.side_t2[2] * (t2 * t2)};
  }
  return {UPoly({x.c0(b), x.c2(b)}), UPoly({x.side_t2[0](b), x.side_t2[1](b), x.side_t2[2](b)})};
}

// Narrows (lower, upper) around u0 so that it avoids every root of f other
// than u0 itself.
void exclude_roots(const UPoly& f, const Rational& u0, Rational& lower, Rational& upper) {
  if (f.is_zero() || f.degree() == 0) return;
  if (f.degree() == 1) {
    const Rational r = -f.coeff(0) / f.coeff(1);
    if (r < u0 && r > lower) lower = r;
    if (r > u0 && r < upper) upper = r;
    return;
  }
  SturmSequence seq(f);
  for (auto r : isolate_real_roots(f, lower, upper)) {
    if (r.exact && r.lo == u0) continue;
    while (!r.exact && r.lo < u0 && r.hi > u0) refine_root(seq, r, (r.hi - r.lo) / 2);
    if (r.exact && r.lo == u0) continue;
    if (r.hi <= u0 && r.hi > lower) lower = r.hi;
    if (r.lo >= u0 && r.lo < upper) upper = r.lo;
  }
}

// A rational t with a < t^2 < b, for 0 <= a < b.
Rational rational_root_between(const Rational& a, const Rational& b) {
  const Rational eps = (b - a) / (8 * (1 + b));
  Rational alo, ahi, blo, bhi;
  QuadExt::sqrt_of(a).bracket(eps, alo, ahi);
  QuadExt::sqrt_of(b).bracket(eps, blo, bhi);
  return simplest_between(ahi, blo);
}

}  // namespace

SamplePair sample_across(const Wall& w, const WallPoint& p, const std::vector<Wall>& walls, const SliceRegion& R,
                         const Rational& max_displacement) {
  require(lies_on_wall(w, p), ErrorCode::InvalidArgument, "point is not on the wall");
  require(max_displacement > 0, ErrorCode::InvalidArgument, "displacement must be positive");
  const bool along_b = w.c0(p.b) == 0 && w.c2(p.b) == 0;
  require(!along_b || p.t.is_rational(), ErrorCode::Internal, "vertical wall point with irrational t");
  // Line coordinate u of p and the admissible window around it. Along t,
  // |t - t_p| <= |t^2 - t_p^2| / (2 t0).
  const Rational t_line = along_b ? p.t.rational_part() : Rational(0);
  const Rational u0 = along_b ? p.b : -w.c0(p.b) / w.c2(p.b);
  const Rational reach = along_b ? max_displacement : 2 * R.t0 * max_displacement;
  Rational lower = along_b ? R.b0 : R.t0 * R.t0;
  Rational upper = along_b ? R.b1 : R.t1 * R.t1;
  if (lower < u0 - reach) lower = u0 - reach;
  if (upper > u0 + reach) upper = u0 + reach;
  std::vector<LineRestriction> flat;
  for (const auto& x : walls) {
    LineRestriction lr = restrict_to_line(x, along_b, p.b, t_line);
    const bool through = lr.w.is_zero() || lr.w(u0) == 0;
    const bool same = through && same_locus(x, w);
    if (through && !same && sgn(x.side.eval_t(p.b, p.t)) > 0)
      fail(ErrorCode::CannotSeparate, "wall (" + x.vi.to_string() + ", " + x.vj.to_string() + ") passes through the point");
    if (lr.w.is_zero()) {
      flat.push_back(lr);
      continue;
    }
    exclude_roots(lr.w, u0, lower, upper);
    if (same) exclude_roots(lr.side, u0, lower, upper);
  }
  LineRestriction own = restrict_to_line(w, along_b, p.b, t_line);
  exclude_roots(own.w, u0, lower, upper);
  exclude_roots(own.side, u0, lower, upper);
  if (!(lower < u0 && u0 < upper)) fail(ErrorCode::CannotSeparate, "no room on either side of the wall point");
  const Rational ul = simplest_between(lower, u0), ur = simplest_between(u0, upper);
  for (const auto& lr : flat)
    if (lr.side(ul) > 0 || lr.side(ur) > 0 || positive_somewhere(lr.side, ul, ur, nullptr))
      fail(ErrorCode::CannotSeparate, "the sampling line lies on another wall");
  SamplePair s;
  if (along_b) {
    s = {ul, t_line, ur, t_line};
  } else {
    s = {p.b, rational_root_between(lower, u0), p.b, rational_root_between(u0, upper)};
  }
  ChamberFingerprint fl = classify_point(s.b_left, s.t_left, walls);
  ChamberFingerprint fr = classify_point(s.b_right, s.t_right, walls);
  if (std::count(fl.begin(), fl.end(), 0) || std::count(fr.begin(), fr.end(), 0))
    fail(ErrorCode::Internal, "sample point lies on a wall");
  const ChamberFingerprint fw = classify_point(s.b_left, s.t_left, {w});
  const ChamberFingerprint gw = classify_point(s.b_right, s.t_right, {w});
  if (fw[0] == kInactive || gw[0] != -fw[0]) fail(ErrorCode::CannotSeparate, "the wall does not change sign at the point");
  return s;
}

std::pair<WallPoint, SamplePair> separable_point(const Wall& w, const std::vector<Wall>& walls, const SliceRegion& R) {
  std::vector<Rational> candidates{w.witness_b};
  if (!w.witness_vertical) {
    // Dyadic b in the region, coarse to fine, nearest the witness first.
    for (int level = 2; level <= 6; ++level) {
      const Rational step = (R.b1 - R.b0) / (1 << level);
      std::vector<Rational> row;
      for (int k = 1; k < (1 << level); ++k) row.push_back(R.b0 + step * k);
      std::stable_sort(row.begin(), row.end(), [&](const Rational& x, const Rational& y) {
        return abs(x - w.witness_b) < abs(y - w.witness_b);
      });
      candidates.insert(candidates.end(), row.begin(), row.end());
    }
  }
  std::string last = "no candidate point";
  for (const auto& b : candidates) {
    WallPoint p;
    try {
      p = point_on_wall(w, b, R);
    } catch (const Error&) {
      continue;
    }
    try {
      return {p, sample_across(w, p, walls, R)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CannotSeparate) throw;
      last = e.what();
    }
  }
  fail(ErrorCode::CannotSeparate, "no separable point on wall (" + w.vi.to_string() + ", " + w.vj.to_string() + "): " + last);
}

}  // namespace bstab
