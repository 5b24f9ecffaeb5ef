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

#include "json_io.hpp"

#include <sstream>

#include "errors.hpp"

namespace bstab {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Rational x = parse_rational(j.get<std::string>());
    if (!is_integer(x)) bad("expected an integer, got \"" + j.get<std::string>() + "\"");
    return x.get_num();
  }
  bad("expected an integer");
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

}  // namespace

Json rational_to_json(const Rational& x) { return Json(to_string(x)); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  bad("expected a rational string \"p/q\"");
}

Json lattice_to_json(const NSLattice& L) {
  Json gram = Json::array();
  for (const auto& row : L.gram()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(integer_to_json(x));
    gram.push_back(r);
  }
  return Json{{"rank", L.rank()}, {"gram", gram}, {"epsilon", L.epsilon()}};
}

NSLattice lattice_from_json(const Json& j) {
  const Json& g = field(j, "gram");
  if (!g.is_array()) bad("\"gram\" must be an array of rows");
  std::vector<std::vector<Integer>> gram;
  for (const auto& row : g) {
    if (!row.is_array()) bad("\"gram\" rows must be arrays");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    gram.push_back(std::move(r));
  }
  const Json& e = field(j, "epsilon");
  if (!e.is_number_integer()) bad("\"epsilon\" must be 0 or 1");
  if (j.contains("rank")) {
    const Json& rk = j.at("rank");
    if (!rk.is_number_integer()) bad("\"rank\" must be an integer");
    require(rk.get<long long>() == static_cast<long long>(gram.size()), ErrorCode::DimensionMismatch,
            "\"rank\" does not match the Gram matrix");
  }
  return NSLattice(std::move(gram), e.get<int>());
}

Json mukai_to_json(const MukaiVector& v) {
  Json l = Json::array();
  for (const auto& c : v.l) l.push_back(integer_to_json(c));
  return Json{{"r", integer_to_json(v.r)}, {"l", l}, {"s", integer_to_json(v.s)}};
}

MukaiVector mukai_from_json(const Json& j, const NSLattice& L) {
  MukaiVector v;
  v.r = integer_from_json(field(j, "r"));
  v.s = integer_from_json(field(j, "s"));
  const Json& l = field(j, "l");
  if (!l.is_array()) bad("\"l\" must be an array");
  for (const auto& x : l) v.l.push_back(integer_from_json(x));
  L.check_vector(v);
  return v;
}

Json divisor_to_json(const RationalDivisor& d) {
  Json a = Json::array();
  for (const auto& c : d.coeffs) a.push_back(rational_to_json(c));
  return a;
}

RationalDivisor divisor_from_json(const Json& j, const NSLattice& L) {
  if (!j.is_array()) bad("a divisor is an array of rationals");
  RationalDivisor d;
  for (const auto& x : j) d.coeffs.push_back(rational_from_json(x));
  L.check_divisor(d);
  return d;
}

Json point_to_json(const StabilityPoint& P) {
  return Json{{"beta", divisor_to_json(P.beta())}, {"omega", divisor_to_json(P.omega())}};
}

StabilityPoint point_from_json(const Json& j, const NSLattice& L) {
  return StabilityPoint(L, divisor_from_json(field(j, "beta"), L), divisor_from_json(field(j, "omega"), L));
}

Json charge_to_json(const ComplexRational& z) { return Json{{"re", rational_to_json(z.re)}, {"im", rational_to_json(z.im)}}; }

Json hilbert_to_json(const HilbertPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs) c.push_back(rational_to_json(x));
  return Json{{"coeffs", c}};
}

Json itable_to_json(const ITable& t) {
  Json entries = Json::array();
  for (const auto& [v, x] : t.entries()) entries.push_back(Json{{"class", mukai_to_json(v)}, {"value", x.to_string()}});
  return Json{{"entries", entries}};
}

ITable itable_from_json(const Json& j, const NSLattice& L) {
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) bad("\"entries\" must be an array");
  ITable t;
  for (const auto& e : entries) {
    MukaiVector v = mukai_from_json(field(e, "class"), L);
    const Json& value = field(e, "value");
    FormalLambda x;
    if (value.is_string())
      x = parse_lambda(value.get<std::string>(), L.rank());
    else
      x = FormalLambda(rational_from_json(value));
    if (!t.value(v).is_zero()) bad("class " + v.to_string() + " appears twice");
    t.set(v, x);
  }
  return t;
}

Json algebra_to_json(const AlgebraElement& x) {
  Json a = Json::array();
  for (const auto& [v, c] : x.terms()) a.push_back(Json{{"class", mukai_to_json(v)}, {"coeff", c.to_string()}});
  return a;
}

namespace {

Json bpoly_to_json(const BPoly& p) {
  Json o = Json::object();
  for (const auto& [k, c] : p.terms()) o[std::to_string(k.first) + "," + std::to_string(k.second)] = rational_to_json(c);
  return o;
}

}  // namespace

Json wall_to_json(const Wall& w) {
  Json j{{"vi", mukai_to_json(w.vi)},
         {"vj", mukai_to_json(w.vj)},
         {"poly", bpoly_to_json(w.poly)},
         {"side", "re_pos"},
         {"side_poly", bpoly_to_json(w.side)},
         {"witness_b", rational_to_json(w.witness_b)}};
  if (w.witness_vertical) j["vertical"] = true;
  if (w.conservative) j["conservative"] = true;
  return j;
}

Json region_to_json(const SliceRegion& R) {
  return Json{{"B0", divisor_to_json(R.B0)}, {"W0", divisor_to_json(R.W0)}, {"b0", rational_to_json(R.b0)},
              {"b1", rational_to_json(R.b1)}, {"t0", rational_to_json(R.t0)}, {"t1", rational_to_json(R.t1)}};
}

SliceRegion region_from_json(const Json& j, const NSLattice& L) {
  return {divisor_from_json(field(j, "B0"), L), divisor_from_json(field(j, "W0"), L),
          rational_from_json(field(j, "b0")), rational_from_json(field(j, "b1")),
          rational_from_json(field(j, "t0")), rational_from_json(field(j, "t1"))};
}

SliceRegion region_from_string(const std::string& text, const RationalDivisor& B0, const RationalDivisor& W0) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != 4) bad("--region expects b0,b1,t0,t1");
  return {B0, W0, v[0], v[1], v[2], v[3]};
}

Json decomposition_to_json(const Decomposition& d) {
  Json a = Json::array();
  for (const auto& v : d) a.push_back(mukai_to_json(v));
  return a;
}

Json invariant_to_json(const InvariantReport& r, bool provenance) {
  Json j{{"class", mukai_to_json(r.alpha)},
         {"J", r.J.to_string()},
         {"decompositions", r.decomposition_count},
         {"cross_checked", r.cross_checked}};
  if (provenance) {
    Json p = Json::array();
    for (const auto& w : r.provenance) p.push_back(Json{{"parts", decomposition_to_json(w.parts)}, {"weight", w.weight.to_string()}});
    j["provenance"] = p;
  }
  return j;
}

Json large_volume_to_json(const LargeVolumeReport& r, bool pairs) {
  Json samples = Json::array();
  for (const auto& k : r.samples) samples.push_back(rational_to_json(k));
  Json j{{"class", mukai_to_json(r.alpha)},     {"class_used", mukai_to_json(r.alpha_used)},
         {"twist", r.twist},                    {"omega", divisor_to_json(r.omega)},
         {"threshold", rational_to_json(r.threshold)}, {"samples", samples},
         {"pairs_checked", r.pairs.size()},     {"consistent", r.consistent}};
  if (pairs) {
    Json a = Json::array();
    for (const auto& p : r.pairs) {
      Json coeffs = Json::array();
      for (const auto& c : p.poly.coeffs()) coeffs.push_back(rational_to_json(c));
      a.push_back(Json{{"vi", mukai_to_json(p.vi)},
                       {"vj", mukai_to_json(p.vj)},
                       {"poly_in_k", Json{{"coeffs", coeffs}}},
                       {"root_bound", rational_to_json(p.root_bound)},
                       {"aligned", p.aligned},
                       {"p_equal", p.p_equal}});
    }
    j["pairs"] = a;
  }
  return j;
}

}  // namespace bstab
