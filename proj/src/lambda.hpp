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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "poly.hpp"

namespace bstab {

/// Reduced element num/den of Q(q): gcd(num, den) = 1, den monic, and the
/// zero element is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UPoly::constant(1)) {}
  RatFunc(const Rational& c);  // NOLINT: constants embed implicitly
  RatFunc(UPoly num, UPoly den);

  static RatFunc q() { return RatFunc(UPoly::variable(), UPoly::constant(1)); }
  /// q^k for any integer k.
  static RatFunc q_pow(long k);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(long e) const;
  /// Value at a rational q; the denominator must not vanish there.
  Rational eval(const Rational& x) const;

  /// "q^2-1", "(q+1)/(q^2)", "-1/2".
  std::string to_string() const;

 private:
  void reduce();
  UPoly num_, den_;
};

/// Sorted (class, exponent) pairs, exponents positive.
using Monomial = std::vector<std::pair<MukaiVector, int>>;

/// Polynomial over Q(q) in commuting indeterminates I[v], one per class v.
class FormalLambda {
 public:
  FormalLambda() = default;
  FormalLambda(const RatFunc& c);  // NOLINT: scalars embed implicitly
  FormalLambda(const Rational& c) : FormalLambda(RatFunc(c)) {}  // NOLINT

  static FormalLambda symbol(const MukaiVector& v);

  bool is_zero() const { return terms_.empty(); }
  /// No indeterminates occur.
  bool is_scalar() const;
  /// The scalar value; fails unless is_scalar().
  RatFunc scalar() const;
  /// Largest total degree in the indeterminates, -1 for zero.
  int degree() const;
  /// Drops every term of total degree above d.
  FormalLambda truncated(int d) const;
  const std::map<Monomial, RatFunc>& terms() const { return terms_; }

  FormalLambda operator-() const;
  FormalLambda& operator+=(const FormalLambda& o);
  FormalLambda& operator-=(const FormalLambda& o);
  FormalLambda& operator*=(const FormalLambda& o);
  FormalLambda& operator*=(const RatFunc& c);
  /// Division by a nonzero scalar.
  FormalLambda& operator/=(const RatFunc& c);
  friend FormalLambda operator+(FormalLambda a, const FormalLambda& b) { return a += b; }
  friend FormalLambda operator-(FormalLambda a, const FormalLambda& b) { return a -= b; }
  friend FormalLambda operator*(FormalLambda a, const FormalLambda& b) { return a *= b; }
  friend FormalLambda operator*(FormalLambda a, const RatFunc& c) { return a *= c; }
  friend FormalLambda operator/(FormalLambda a, const RatFunc& c) { return a /= c; }
  friend bool operator==(const FormalLambda& a, const FormalLambda& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FormalLambda& a, const FormalLambda& b) { return !(a == b); }

  /// Replaces each I[v] present in values by its value.
  FormalLambda substitute(const std::map<MukaiVector, FormalLambda>& values) const;

  /// Canonical text: terms in monomial order, "0" when empty.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const RatFunc& c);
  std::map<Monomial, RatFunc> terms_;
};

/// Parses sums, products, quotients by scalars, integer powers (negative
/// only for scalars), rationals, q and I[r,l1,...,lk,s]. The class size in
/// I[...] must equal rho + 2 when rho > 0 is given.
FormalLambda parse_lambda(std::string_view text, int rho = 0);

}  // namespace bstab
