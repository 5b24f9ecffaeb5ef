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
#include <utility>
#include <vector>

#include "rational.hpp"

namespace bstab {

/// Dense univariate polynomial over Q, coefficients stored constant-first
/// and always trimmed (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);
  static UPoly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const { return eval(x); }

  template <class F>
  F eval(const F& x) const {
    F acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + F(*it);
    return acc;
  }

  UPoly derivative() const;
  UPoly monic() const;
  /// p(x) -> p(-x)
  UPoly reflect() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DivisionByZero when b is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

UPoly pow(const UPoly& p, unsigned e);

/// Upper bound on the absolute value of every real root.
Rational cauchy_root_bound(const UPoly& p);

class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);  // p is made squarefree first
  /// Number of distinct real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  /// Number of distinct real roots in the open interval (a, b).
  int count_open(const Rational& a, const Rational& b) const;
  const UPoly& poly() const { return seq_.front(); }

 private:
  int variations(const Rational& x) const;
  std::vector<UPoly> seq_;
};

/// A real root: either an exact rational, or the unique root of the
/// isolating polynomial inside the open interval (lo, hi).
struct RealRoot {
  Rational lo, hi;
  bool exact = false;
};

/// Distinct real roots of p in the closed interval [lo, hi], sorted.
std::vector<RealRoot> isolate_real_roots(const UPoly& p, const Rational& lo, const Rational& hi);

/// Shrinks an isolating interval of a (non-exact) root until hi - lo <= width.
void refine_root(const SturmSequence& s, RealRoot& root, const Rational& width);

/// Sparse bivariate polynomial in (b, t): term (i, j) is b^i t^j.
class BPoly {
 public:
  using Key = std::pair<int, int>;

  BPoly() = default;
  static BPoly constant(const Rational& c);
  static BPoly term(const Rational& c, int i, int j);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  int degree_t() const;
  int degree_b() const;
  int total_degree() const;

  Rational operator()(const Rational& b, const Rational& t) const;

  /// Evaluates at rational b and t taken in any ring containing Q.
  template <class F>
  F eval_t(const Rational& b, const F& t) const {
    return restrict_b(b).eval(t);
  }

  /// The univariate polynomial t -> P(b, t).
  UPoly restrict_b(const Rational& b) const;
  /// The polynomial in b multiplying t^j.
  UPoly coeff_of_t(int j) const;
  /// The univariate polynomial s -> P(b0 + s*db, t0 + s*dt).
  UPoly along_segment(const Rational& b0, const Rational& t0, const Rational& db, const Rational& dt) const;

  BPoly operator-() const;
  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  BPoly& operator*=(const BPoly& o);
  BPoly& operator*=(const Rational& c);
  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(BPoly a, const BPoly& b) { return a *= b; }
  friend BPoly operator*(BPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Key& k, const Rational& c);
  std::map<Key, Rational> terms_;
};

/// Exact sign of q at the real root of p isolated by root.
int sign_at_root(const UPoly& q, const UPoly& p, RealRoot root);

/// Closed interval [lo, hi] over Q.
struct Interval {
  Rational lo, hi;
};

/// Exact range of c0 + c1 x + c2 x^2 over [lo, hi].
Interval quadratic_range(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& lo,
                         const Rational& hi);

/// Enclosure of p over [lo, hi] by interval Horner evaluation.
Interval range_enclosure(const UPoly& p, const Rational& lo, const Rational& hi);

/// Enclosure of P over [b0, b1] x [t0, t1] by termwise interval arithmetic.
Interval range_enclosure(const BPoly& p, const Rational& b0, const Rational& b1, const Rational& t0,
                         const Rational& t1);

}  // namespace bstab
