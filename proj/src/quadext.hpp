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

#include "rational.hpp"

namespace bstab {

/// Exact element a + b*sqrt(d) of Q(sqrt d), d a square-free positive
/// integer. Rational values carry d = 1 and b = 0; arithmetic between two
/// irrational values requires equal d.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(1) {}
  QuadExt(const Rational& a) : a_(a), b_(0), d_(1) {}  // NOLINT: implicit by design of the field embedding
  QuadExt(const Rational& a, const Rational& b, const Integer& d);

  /// sqrt(x) for rational x >= 0, reduced to (f) * sqrt(squarefree part).
  static QuadExt sqrt_of(const Rational& x);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadExt conjugate() const;
  /// a^2 - d b^2, the field norm down to Q.
  Rational norm() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_); }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return sgn(x - y) < 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return sgn(x - y) > 0; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return sgn(x - y) <= 0; }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return sgn(x - y) >= 0; }

  /// Exact sign of the real number a + b*sqrt(d).
  friend int sgn(const QuadExt& x);

  /// Rational lower/upper bounds with hi - lo <= width.
  void bracket(const Rational& width, Rational& lo, Rational& hi) const;

  std::string to_string() const;

 private:
  void normalize();
  void unify(const QuadExt& o);
  Rational a_, b_;
  Integer d_;
};

}  // namespace bstab
