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

#include <json.hpp>

#include "hall.hpp"
#include "invariants.hpp"
#include "walls.hpp"

namespace bstab {

using Json = nlohmann::json;

/// Parses JSON text; malformed input raises Parse.
Json parse_json(const std::string& text);

Json rational_to_json(const Rational& x);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);

Json lattice_to_json(const NSLattice& L);
NSLattice lattice_from_json(const Json& j);

Json mukai_to_json(const MukaiVector& v);
MukaiVector mukai_from_json(const Json& j, const NSLattice& L);

Json divisor_to_json(const RationalDivisor& d);
RationalDivisor divisor_from_json(const Json& j, const NSLattice& L);

Json point_to_json(const StabilityPoint& P);
StabilityPoint point_from_json(const Json& j, const NSLattice& L);

Json charge_to_json(const ComplexRational& z);
Json hilbert_to_json(const HilbertPoly& p);

Json itable_to_json(const ITable& t);
ITable itable_from_json(const Json& j, const NSLattice& L);

Json algebra_to_json(const AlgebraElement& x);

/// {"vi", "vj", "poly": {"i,j": coeff of b^i t^j}, "side": "re_pos", "side_poly"}.
Json wall_to_json(const Wall& w);

/// {"B0", "W0", "b0", "b1", "t0", "t1"}.
Json region_to_json(const SliceRegion& R);
SliceRegion region_from_json(const Json& j, const NSLattice& L);
/// "b0,b1,t0,t1" with slice directions B0, W0.
SliceRegion region_from_string(const std::string& text, const RationalDivisor& B0, const RationalDivisor& W0);

Json decomposition_to_json(const Decomposition& d);
Json invariant_to_json(const InvariantReport& r, bool provenance);
Json large_volume_to_json(const LargeVolumeReport& r, bool pairs);

}  // namespace bstab
