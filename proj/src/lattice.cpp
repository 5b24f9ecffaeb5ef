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

#include "lattice.hpp"

#include <sstream>

#include "errors.hpp"

namespace bstab {

RationalDivisor operator*(const Rational& c, const RationalDivisor& d) {
  RationalDivisor r = d;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

RationalDivisor operator+(const RationalDivisor& a, const RationalDivisor& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "divisor lengths differ");
  RationalDivisor r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RationalDivisor operator-(const RationalDivisor& a, const RationalDivisor& b) {
  return a + Rational(-1) * b;
}

bool MukaiVector::is_zero() const {
  if (r != 0 || s != 0) return false;
  for (const auto& x : l)
    if (x != 0) return false;
  return true;
}

RationalDivisor MukaiVector::l_divisor() const {
  RationalDivisor d;
  for (const auto& x : l) d.coeffs.emplace_back(x);
  return d;
}

MukaiVector MukaiVector::operator-() const {
  MukaiVector v = *this;
  v.r = -v.r;
  v.s = -v.s;
  for (auto& x : v.l) x = -x;
  return v;
}

MukaiVector& MukaiVector::operator+=(const MukaiVector& o) {
  require(l.size() == o.l.size(), ErrorCode::DimensionMismatch, "Mukai vectors over different lattices");
  r += o.r;
  s += o.s;
  for (std::size_t i = 0; i < l.size(); ++i) l[i] += o.l[i];
  return *this;
}

MukaiVector& MukaiVector::operator-=(const MukaiVector& o) { return *this += -o; }

MukaiVector operator*(const Integer& k, const MukaiVector& v) {
  MukaiVector w = v;
  w.r *= k;
  w.s *= k;
  for (auto& x : w.l) x *= k;
  return w;
}

bool operator<(const MukaiVector& a, const MukaiVector& b) {
  if (a.r != b.r) return a.r < b.r;
  if (a.l != b.l) return a.l < b.l;
  return a.s < b.s;
}

std::string MukaiVector::to_string() const {
  std::ostringstream os;
  os << '(' << r.get_str() << ',';
  if (l.size() == 1) {
    os << l[0].get_str();
  } else {
    os << '[';
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i].get_str();
    os << ']';
  }
  os << ',' << s.get_str() << ')';
  return os.str();
}

MukaiVector make_mukai(long r, std::vector<long> l, long s) {
  MukaiVector v{Integer(r), {}, Integer(s)};
  for (long x : l) v.l.emplace_back(x);
  return v;
}

bool proportional(const MukaiVector& a, const MukaiVector& b) {
  std::vector<Integer> x{a.r, a.s}, y{b.r, b.s};
  x.insert(x.end(), a.l.begin(), a.l.end());
  y.insert(y.end(), b.l.begin(), b.l.end());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] * y[j] != x[j] * y[i]) return false;
  return true;
}

Signature signature(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][p] == 0) ++p;
      if (p < n) {
        std::swap(m[k], m[p]);
        for (auto& row : m) std::swap(row[k], row[p]);
      } else {
        std::size_t q = k + 1;
        while (q < n && m[k][q] == 0) ++q;
        if (q == n) {
          ++sig.zero;
          continue;
        }
        // e_k -> e_k + e_q makes the pivot 2 m[k][q] != 0.
        for (std::size_t j = 0; j < n; ++j) m[k][j] += m[q][j];
        for (std::size_t i = 0; i < n; ++i) m[i][k] += m[i][q];
      }
    }
    const Rational pivot = m[k][k];
    if (pivot > 0) ++sig.positive;
    else ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      for (std::size_t j = k; j < n; ++j) m[j][i] = m[i][j];
    }
  }
  return sig;
}

NSLattice::NSLattice(std::vector<std::vector<Integer>> gram, int epsilon)
    : gram_(std::move(gram)), epsilon_(epsilon) {
  require(!gram_.empty(), ErrorCode::InvalidArgument, "lattice rank must be positive");
  require(epsilon_ == 0 || epsilon_ == 1, ErrorCode::InvalidArgument, "epsilon must be 0 or 1");
  const std::size_t n = gram_.size();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    require(gram_[i].size() == n, ErrorCode::DimensionMismatch, "gram matrix is not square");
    for (std::size_t j = 0; j < n; ++j) q[i][j] = gram_[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    require(mpz_even_p(gram_[i][i].get_mpz_t()), ErrorCode::InvalidArgument, "gram diagonal must be even");
    for (std::size_t j = 0; j < i; ++j)
      require(gram_[i][j] == gram_[j][i], ErrorCode::InvalidArgument, "gram matrix is not symmetric");
  }
  Signature sig = signature(q);
  require(sig.positive == 1 && sig.zero == 0 && sig.negative == static_cast<int>(n) - 1, ErrorCode::NotHyperbolic,
          "gram matrix must have signature (1, rank-1)");
}

NSLattice NSLattice::rank_one(long h2, int epsilon) { return NSLattice({{Integer(h2)}}, epsilon); }

RationalDivisor NSLattice::gram_times(const RationalDivisor& d) const {
  check_divisor(d);
  RationalDivisor out;
  out.coeffs.assign(gram_.size(), 0);
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < gram_.size(); ++j) out.coeffs[i] += Rational(gram_[i][j]) * d.coeffs[j];
  return out;
}

void NSLattice::check_divisor(const RationalDivisor& d) const {
  if (!(static_cast<int>(d.size()) == rank())) fail(ErrorCode::DimensionMismatch,
          "divisor has " + std::to_string(d.size()) + " coefficients, lattice rank is " + std::to_string(rank()));
}

void NSLattice::check_vector(const MukaiVector& v) const {
  if (!(static_cast<int>(v.l.size()) == rank())) fail(ErrorCode::DimensionMismatch,
          "Mukai vector has " + std::to_string(v.l.size()) + " NS coefficients, lattice rank is " + std::to_string(rank()));
}

Rational NSLattice::dot(const RationalDivisor& a, const RationalDivisor& b) const {
  check_divisor(a);
  check_divisor(b);
  Rational acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a.coeffs[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < rank(); ++j) row += Rational(gram_[i][j]) * b.coeffs[j];
    acc += a.coeffs[i] * row;
  }
  return acc;
}

Integer NSLattice::dot(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
  require(static_cast<int>(a.size()) == rank() && static_cast<int>(b.size()) == rank(), ErrorCode::DimensionMismatch,
          "NS vector length differs from lattice rank");
  Integer acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) acc += a[i] * gram_[i][j] * b[j];
  }
  return acc;
}

Rational NSLattice::dot(const std::vector<Integer>& a, const RationalDivisor& b) const {
  require(static_cast<int>(a.size()) == rank(), ErrorCode::DimensionMismatch, "NS vector length differs from lattice rank");
  check_divisor(b);
  Rational acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) acc += Rational(a[i] * gram_[i][j]) * b.coeffs[j];
  }
  return acc;
}

Rational ns_dot(const NSLattice& L, const RationalDivisor& a, const RationalDivisor& b) { return L.dot(a, b); }

Integer mukai_pair(const NSLattice& L, const MukaiVector& v1, const MukaiVector& v2) {
  L.check_vector(v1);
  L.check_vector(v2);
  return L.dot(v1.l, v2.l) - v1.r * v2.s - v2.r * v1.s;
}

Integer mukai_square(const NSLattice& L, const MukaiVector& v) { return mukai_pair(L, v, v); }

Integer chi(const NSLattice& L, const MukaiVector& v1, const MukaiVector& v2) { return -mukai_pair(L, v1, v2); }

MukaiVector mukai_from_chern(const NSLattice& L, const Integer& r, const std::vector<Integer>& c1, const Rational& ch2) {
  require(static_cast<int>(c1.size()) == L.rank(), ErrorCode::DimensionMismatch, "c1 length differs from lattice rank");
  Rational s = ch2 + Rational(L.epsilon()) * Rational(r);
  if (!(is_integer(s))) fail(ErrorCode::NonIntegral, "ch2 + epsilon*r = " + to_string(s) + " is not an integer");
  return MukaiVector{r, c1, s.get_num()};
}

MukaiVector twist_by_line_bundle(const NSLattice& L, const MukaiVector& v, const std::vector<Integer>& d) {
  L.check_vector(v);
  MukaiVector w = v;
  for (int i = 0; i < L.rank(); ++i) w.l[i] += v.r * d[i];
  Integer dd = L.dot(d, d);
  w.s += L.dot(v.l, d) + v.r * (dd / 2);
  return w;
}

}  // namespace bstab
