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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bstab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Rejects zero denominators and junk.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form (q > 0, gcd 1); integers print without "/1".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

int sgn(const Rational& x);

Integer floor_int(const Rational& x);
Integer ceil_int(const Rational& x);

/// Smallest integer n >= 0 with n*n >= x (x >= 0).
Integer ceil_sqrt(const Rational& x);

bool is_integer(const Rational& x);

Rational abs(const Rational& x);

/// The rational with the smallest denominator (then smallest magnitude) in
/// the open interval (lo, hi); requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

using RationalVector = std::vector<Rational>;

}  // namespace bstab
