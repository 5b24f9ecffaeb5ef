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

#include "quadext.hpp"

#include "errors.hpp"

namespace bstab {

namespace {

// n = f^2 * d with d square-free; returns {f, d}.
std::pair<Integer, Integer> split_square(Integer n) {
  Integer f = 1, d = 1;
  for (Integer p = 2; p * p * p <= n; ++p) {
    while (mpz_divisible_p(n.get_mpz_t(), Integer(p * p).get_mpz_t())) {
      n /= p * p;
      f *= p;
    }
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      d *= p;
    }
  }
  // What remains has at most two prime factors, each above the cube root.
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    f *= r;
  } else {
    d *= n;
  }
  return {f, d};
}

}  // namespace

QuadExt::QuadExt(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  require(d_ > 0, ErrorCode::InvalidArgument, "radicand must be positive");
  normalize();
}

void QuadExt::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ != 1) {
    auto [f, d] = split_square(d_);
    if (f != 1) {
      b_ *= f;
      d_ = d;
    }
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) d_ = 1;
}

QuadExt QuadExt::sqrt_of(const Rational& x) {
  require(sgn(x) >= 0, ErrorCode::InvalidArgument, "square root of a negative rational");
  if (x == 0) return QuadExt();
  Integer pq = x.get_num() * x.get_den();
  auto [f, d] = split_square(pq);
  QuadExt r;
  r.b_ = Rational(f, x.get_den());
  r.b_.canonicalize();
  r.d_ = d;
  r.normalize();
  return r;
}

void QuadExt::unify(const QuadExt& o) {
  if (o.b_ == 0 || b_ == 0 || d_ == o.d_) return;
  fail(ErrorCode::InvalidArgument, "mixed radicands sqrt(" + d_.get_str() + ") and sqrt(" + o.d_.get_str() + ")");
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  unify(o);
  if (b_ == 0) d_ = o.d_;
  a_ += o.a_;
  b_ += o.b_;
  if (b_ == 0) d_ = 1;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  unify(o);
  Integer d = (b_ == 0) ? o.d_ : d_;
  Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = (b_ == 0) ? Integer(1) : d;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  Rational n = o.norm();
  if (n == 0) fail(ErrorCode::DivisionByZero, "division by zero in Q(sqrt d)");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  if (b_ == 0) d_ = 1;
  return *this;
}

int sgn(const QuadExt& x) {
  int sa = sgn(x.a_), sb = sgn(x.b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with d b^2.
  Rational lhs = x.a_ * x.a_, rhs = Rational(x.d_) * x.b_ * x.b_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

void QuadExt::bracket(const Rational& width, Rational& lo, Rational& hi) const {
  if (b_ == 0) {
    lo = hi = a_;
    return;
  }
  // Bracket sqrt(d) by bisection on [floor, floor + 1].
  Integer s;
  mpz_sqrt(s.get_mpz_t(), d_.get_mpz_t());
  Rational rl = s, rh = s + 1;
  Rational target = width / (bstab::abs(b_) + 1);
  Rational dd = d_;
  while (rh - rl > target) {
    Rational m = (rl + rh) / 2;
    if (m * m <= dd)
      rl = m;
    else
      rh = m;
  }
  if (b_ > 0) {
    lo = a_ + b_ * rl;
    hi = a_ + b_ * rh;
  } else {
    lo = a_ + b_ * rh;
    hi = a_ + b_ * rl;
  }
}

std::string QuadExt::to_string() const {
  if (b_ == 0) return bstab::to_string(a_);
  std::string s;
  if (a_ != 0) s = bstab::to_string(a_) + (b_ > 0 ? "+" : "-");
  else if (b_ < 0) s = "-";
  Rational ab = bstab::abs(b_);
  if (ab != 1) s += bstab::to_string(ab) + "*";
  s += "sqrt(" + d_.get_str() + ")";
  return s;
}

}  // namespace bstab
