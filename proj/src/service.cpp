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

#include "service.hpp"

#include <random>

#include "errors.hpp"
#include "svg.hpp"

namespace bstab {

namespace {

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::Parse, std::string("request is missing \"") + key + "\"");
  return *it;
}

bool flag(const Json& j, const char* key) {
  auto it = j.find(key);
  return it != j.end() && it->is_boolean() && it->get<bool>();
}

std::size_t max_parts(const Json& j, std::size_t fallback) {
  auto it = j.find("max_parts");
  if (it == j.end()) return fallback;
  if (!it->is_number_integer() || it->get<long long>() < 0) fail(ErrorCode::Parse, "\"max_parts\" must be a nonnegative integer");
  return static_cast<std::size_t>(it->get<long long>());
}

std::optional<ITable> table(const Json& j, const char* key, const NSLattice& L) {
  auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  return itable_from_json(*it, L);
}

Json fingerprint_json(const ChamberFingerprint& f) {
  Json a = Json::array();
  for (int x : f) a.push_back(x);
  return a;
}

Json cmd_charge(const NSLattice& L, const Json& req) {
  const StabilityPoint P = point_from_json(need(req, "point"), L);
  const MukaiVector v = mukai_from_json(need(req, "class"), L);
  const ComplexRational z = central_charge(P, v);
  require(!z.is_zero(), ErrorCode::ZeroCharge, "Z" + v.to_string() + " = 0");
  Json out = charge_to_json(z);
  out["heart_phase"] = in_upper_closed(z) ? Json(PhaseRay(z).phase_label()) : Json(nullptr);
  return out;
}

Json cmd_enumerate(const NSLattice& L, const Json& req) {
  const StabilityPoint P = point_from_json(need(req, "point"), L);
  EnumerationBudget budget;
  budget.max_abs_squared = rational_from_json(need(req, "budget"));
  Json a = Json::array();
  for (const auto& v : enumerate_bounded(P, budget).classes) a.push_back(mukai_to_json(v));
  return a;
}

WallSet walls_for(const NSLattice& L, const Json& req, SliceRegion& R, MukaiVector& alpha) {
  const Json& r = need(req, "region");
  if (r.is_string()) {
    RationalDivisor e1;
    e1.coeffs.assign(static_cast<std::size_t>(L.rank()), 0);
    e1.coeffs[0] = 1;
    const Json base = req.value("base", Json::object());
    R = region_from_string(r.get<std::string>(), base.contains("B0") ? divisor_from_json(base.at("B0"), L) : e1,
                           base.contains("W0") ? divisor_from_json(base.at("W0"), L) : e1);
  } else {
    R = region_from_json(r, L);
  }
  alpha = mukai_from_json(need(req, "class"), L);
  WallOptions opt;
  opt.all_pairs = flag(req, "all_pairs");
  return compute_walls(L, R, alpha, opt);
}

Json cmd_walls(const NSLattice& L, const Json& req) {
  SliceRegion R;
  MukaiVector alpha;
  const WallSet ws = walls_for(L, req, R, alpha);
  Json a = Json::array();
  for (const auto& w : ws.walls) a.push_back(wall_to_json(w));
  return a;
}

// A rational point of the region off every wall, drawn from the seed.
std::pair<Rational, Rational> random_point(std::mt19937_64& rng, const SliceRegion& R, const std::vector<Wall>& walls) {
  std::uniform_int_distribution<long> d(1, 1023);
  for (int tries = 0; tries < 1000; ++tries) {
    const Rational b = R.b0 + (R.b1 - R.b0) * Rational(d(rng), 1024);
    const Rational t = R.t0 + (R.t1 - R.t0) * Rational(d(rng), 1024);
    const ChamberFingerprint f = classify_point(b, t, walls);
    if (std::count(f.begin(), f.end(), 0) == 0) return {b, t};
  }
  fail(ErrorCode::Internal, "no off-wall sample point found");
}

Json cmd_chamber(const NSLattice& L, const Json& req) {
  SliceRegion R;
  MukaiVector alpha;
  const WallSet ws = walls_for(L, req, R, alpha);
  Rational b0, t0, b1, t1;
  if (req.contains("points")) {
    const Json& p = req.at("points");
    if (!p.is_array() || p.size() != 2 || !p[0].is_array() || !p[1].is_array() || p[0].size() != 2 || p[1].size() != 2)
      fail(ErrorCode::Parse, "\"points\" must be [[b, t], [b, t]]");
    b0 = rational_from_json(p[0][0]);
    t0 = rational_from_json(p[0][1]);
    b1 = rational_from_json(p[1][0]);
    t1 = rational_from_json(p[1][1]);
  } else {
    std::mt19937_64 rng(req.value("seed", 0ULL));
    std::tie(b0, t0) = random_point(rng, R, ws.walls);
    const ChamberFingerprint f = classify_point(b0, t0, ws.walls);
    Rational d = (R.t1 - R.t0) / 16;
    for (;; d /= 2) {
      require(d > Rational(1, 1 << 30), ErrorCode::Internal, "no second point in the chamber");
      b1 = b0 + d * Rational(1, 3);
      t1 = t0 + d;
      if (b1 < R.b1 && t1 < R.t1 && classify_point(b1, t1, ws.walls) == f) break;
    }
  }
  const ITable it = table(req, "itable", L).value_or(ITable());
  const bool formal = !req.contains("itable");
  ITable use = it;
  if (formal) {
    const StabilityPoint P0(L, b0 * R.B0, t0 * R.W0);
    use = ITable::formal(ray_scope(P0, alpha).parts);
  }
  const ChamberReport rep = chamber_constancy_check(L, R, ws.walls, b0, t0, b1, t1, alpha, use);
  Json out{{"points", Json::array({Json::array({rational_to_json(b0), rational_to_json(t0)}),
                                   Json::array({rational_to_json(b1), rational_to_json(t1)})})},
           {"constant", rep.constant},
           {"classes", rep.classes},
           {"decompositions", rep.decompositions},
           {"j_0", rep.j0.to_string()},
           {"j_1", rep.j1.to_string()}};
  if (flag(req, "provenance")) out["fingerprint"] = fingerprint_json(classify_point(b0, t0, ws.walls));
  return out;
}

Json cmd_cross(const NSLattice& L, const Json& req) {
  SliceRegion R;
  MukaiVector alpha;
  const WallSet ws = walls_for(L, req, R, alpha);
  const std::size_t n = max_parts(req, 4);
  const std::optional<ITable> given = table(req, "itable", L);
  std::vector<std::size_t> which;
  if (req.contains("wall")) {
    const Json& w = req.at("wall");
    if (!w.is_number_integer() || w.get<long long>() < 0 || static_cast<std::size_t>(w.get<long long>()) >= ws.walls.size())
      fail(ErrorCode::InvalidArgument, "\"wall\" must index the computed wall list");
    which.push_back(static_cast<std::size_t>(w.get<long long>()));
  } else {
    for (std::size_t k = 0; k < ws.walls.size(); ++k) which.push_back(k);
  }
  const bool prov = flag(req, "provenance");
  Json per = Json::array();
  bool eps_all = true, equal_all = true;
  std::string j_left = "0", j_right = "0";
  bool reported = false;
  for (std::size_t k : which) {
    const Wall& w = ws.walls[k];
    auto [p, s] = separable_point(w, ws.walls, R);
    const WallContexts ctx = wall_contexts(L, R, ws, alpha, p, s);
    const ITable it = given ? *given : ITable::formal(wall_ray_classes(ctx.left, alpha));
    const WallCrossReport rep = wall_cross_check(ctx.left, ctx.right, alpha, it, n);
    eps_all = eps_all && rep.epsilon.equal;
    equal_all = equal_all && rep.equal;
    if (!reported || !rep.equal) {
      j_left = rep.j_left.to_string();
      j_right = rep.j_right.to_string();
      reported = !rep.equal || !reported;
    }
    if (prov)
      per.push_back(Json{{"wall", k},
                         {"vi", mukai_to_json(w.vi)},
                         {"vj", mukai_to_json(w.vj)},
                         {"b", rational_to_json(p.b)},
                         {"t", p.t.to_string()},
                         {"left", Json::array({rational_to_json(s.b_left), rational_to_json(s.t_left)})},
                         {"right", Json::array({rational_to_json(s.b_right), rational_to_json(s.t_right)})},
                         {"decompositions_on_wall", rep.epsilon.decompositions_on},
                         {"epsilon_invariant", rep.epsilon.equal},
                         {"j_left", rep.j_left.to_string()},
                         {"j_right", rep.j_right.to_string()},
                         {"degenerate", rep.degenerate},
                         {"equal", rep.equal}});
  }
  Json out{{"walls_checked", which.size()},
           {"epsilon_invariant", eps_all},
           {"j_left", j_left},
           {"j_right", j_right},
           {"equal", equal_all}};
  if (prov) out["walls"] = per;
  return out;
}

Json cmd_jalpha(const NSLattice& L, const Json& req) {
  const StabilityPoint P = point_from_json(need(req, "point"), L);
  const MukaiVector alpha = mukai_from_json(need(req, "class"), L);
  const std::size_t n = max_parts(req, 0);
  std::optional<ITable> it = table(req, "itable", L);
  if (!it) it = P.charge(alpha).is_zero() ? ITable() : ITable::formal(ray_scope(P, alpha).parts);
  return invariant_to_json(j_alpha(P, alpha, *it, n), flag(req, "provenance"));
}

Json cmd_jhat(const NSLattice& L, const Json& req) {
  const RationalDivisor omega = divisor_from_json(need(req, "omega"), L);
  const MukaiVector alpha = mukai_from_json(need(req, "class"), L);
  const std::vector<MukaiVector> universe = jhat_universe(L, omega, alpha);
  std::optional<ITable> it = table(req, "itable", L);
  if (!it) {
    std::vector<MukaiVector> cls = universe;
    cls.push_back(alpha);
    it = ITable::formal(cls);
  }
  return invariant_to_json(jhat_alpha(L, omega, alpha, *it, universe), flag(req, "provenance"));
}

Json cmd_largevolume(const NSLattice& L, const Json& req) {
  const RationalDivisor omega = divisor_from_json(need(req, "omega"), L);
  const MukaiVector alpha = mukai_from_json(need(req, "class"), L);
  const std::string twist = req.value("twist", std::string("reject"));
  TwistPolicy policy;
  if (twist == "reject")
    policy = TwistPolicy::Reject;
  else if (twist == "omega")
    policy = TwistPolicy::TwistByOmega;
  else
    fail(ErrorCode::Parse, "\"twist\" must be \"reject\" or \"omega\"");
  const LargeVolumeReport rep = large_volume_threshold(L, alpha, omega, large_volume_candidates(L, alpha, omega), policy);
  const bool prov = flag(req, "provenance");
  Json out = large_volume_to_json(rep, prov);
  const MukaiVector& a = rep.alpha_used;
  RationalDivisor zero;
  zero.coeffs.assign(static_cast<std::size_t>(L.rank()), 0);
  std::optional<ITable> it = table(req, "itable", L);
  if (!it) {
    const StabilityPoint Pk(L, zero, rep.threshold * omega);
    std::vector<MukaiVector> cls = ray_scope(Pk, a).parts;
    for (const auto& v : jhat_universe(L, omega, a)) cls.push_back(v);
    cls.push_back(a);
    it = ITable::formal(cls);
  }
  const std::optional<ITable> ihat = table(req, "ihat", L);
  const JJhatReport cmp = compare_j_jhat(L, a, omega, *it, ihat.value_or(*it), rep.threshold);
  out["comparison"] = Json{{"k", rational_to_json(cmp.k)},
                           {"J", invariant_to_json(cmp.j, prov)},
                           {"Jhat", invariant_to_json(cmp.jhat, prov)},
                           {"same_decompositions", cmp.same_decompositions},
                           {"equal", cmp.equal}};
  return out;
}

}  // namespace

Json run_command(const NSLattice& L, const std::string& command, const Json& request) {
  if (!request.is_object()) fail(ErrorCode::Parse, "a request must be a JSON object");
  if (command == "charge") return cmd_charge(L, request);
  if (command == "enumerate") return cmd_enumerate(L, request);
  if (command == "walls") return cmd_walls(L, request);
  if (command == "chamber") return cmd_chamber(L, request);
  if (command == "cross") return cmd_cross(L, request);
  if (command == "jalpha") return cmd_jalpha(L, request);
  if (command == "jhat") return cmd_jhat(L, request);
  if (command == "largevolume") return cmd_largevolume(L, request);
  fail(ErrorCode::InvalidArgument, "unknown command \"" + command + "\"");
}

std::string run_walls_svg(const NSLattice& L, const Json& request, int n) {
  SliceRegion R;
  MukaiVector alpha;
  const WallSet ws = walls_for(L, request, R, alpha);
  return render_walls_svg(ws.walls, R, n);
}

}  // namespace bstab
