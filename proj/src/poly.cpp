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

#include "poly.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace bstab {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UPoly UPoly::reflect() const {
  UPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string UPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = bstab::abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    bool unit = (a == 1);
    if (i == 0) {
      os << bstab::to_string(a);
      continue;
    }
    if (!unit) os << bstab::to_string(a) << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] / lb;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

UPoly pow(const UPoly& p, unsigned e) {
  UPoly r = UPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

Rational cauchy_root_bound(const UPoly& p) {
  if (p.degree() <= 0) return 0;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, bstab::abs(p.coeff(i) / p.leading()));
  return m + 1;
}

SturmSequence::SturmSequence(const UPoly& p) {
  UPoly sq = squarefree_part(p);
  seq_.push_back(sq);
  if (sq.degree() <= 0) return;
  seq_.push_back(sq.derivative());
  while (true) {
    UPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
    if (r.is_zero()) break;
    seq_.push_back(-r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int v = 0, last = 0;
  for (const auto& p : seq_) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (seq_.front().degree() <= 0) return 0;
  return variations(a) - variations(b);
}

int SturmSequence::count_open(const Rational& a, const Rational& b) const {
  int n = count(a, b);
  if (seq_.front().degree() > 0 && seq_.front()(b) == 0) --n;
  return n;
}

namespace {

void isolate_open(const SturmSequence& s, const Rational& lo, const Rational& hi, std::vector<RealRoot>& out) {
  int n = s.count_open(lo, hi);
  if (n <= 0) return;
  if (n == 1) {
    out.push_back({lo, hi, false});
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate_open(s, lo, mid, out);
  if (s.poly()(mid) == 0) out.push_back({mid, mid, true});
  isolate_open(s, mid, hi, out);
}

}  // namespace

std::vector<RealRoot> isolate_real_roots(const UPoly& p, const Rational& lo, const Rational& hi) {
  std::vector<RealRoot> out;
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "root isolation of the zero polynomial");
  if (p.degree() == 0 || lo > hi) return out;
  SturmSequence s(p);
  if (s.poly()(lo) == 0) out.push_back({lo, lo, true});
  if (lo == hi) return out;
  isolate_open(s, lo, hi, out);
  if (s.poly()(hi) == 0) out.push_back({hi, hi, true});
  // Rational roots lie in (1/a)Z for the leading coefficient a of the
  // integral primitive form; below that width one test decides exactness.
  Integer den = 1;
  for (int i = 0; i <= s.poly().degree(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.poly().coeff(i).get_den_mpz_t());
  Integer lead = abs(Rational(s.poly().coeff(s.poly().degree()) * den).get_num());
  const Rational step(1, lead);
  for (auto& r : out) {
    if (r.exact) continue;
    refine_root(s, r, step / 2);
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), Rational(r.hi * lead).get_num_mpz_t(), Rational(r.hi * lead).get_den_mpz_t());
    Rational cand = Rational(k) / lead;
    cand.canonicalize();
    if (cand >= r.lo && s.poly()(cand) == 0) r = {cand, cand, true};
  }
  return out;
}

void refine_root(const SturmSequence& s, RealRoot& root, const Rational& width) {
  while (!root.exact && root.hi - root.lo > width) {
    Rational mid = (root.lo + root.hi) / 2;
    if (s.poly()(mid) == 0) {
      root = {mid, mid, true};
      return;
    }
    if (s.count_open(root.lo, mid) == 1)
      root.hi = mid;
    else
      root.lo = mid;
  }
}

BPoly BPoly::constant(const Rational& c) { return term(c, 0, 0); }

BPoly BPoly::term(const Rational& c, int i, int j) {
  BPoly p;
  p.add_term({i, j}, c);
  return p;
}

void BPoly::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational BPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BPoly::degree_t() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int BPoly::degree_b() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

Rational BPoly::operator()(const Rational& b, const Rational& t) const { return restrict_b(b)(t); }

UPoly BPoly::restrict_b(const Rational& b) const {
  int dt = degree_t();
  if (dt < 0) return UPoly();
  std::vector<Rational> c(static_cast<std::size_t>(dt) + 1, Rational(0));
  for (const auto& [k, v] : terms_) {
    Rational bp = 1;
    for (int e = 0; e < k.first; ++e) bp *= b;
    c[static_cast<std::size_t>(k.second)] += v * bp;
  }
  return UPoly(std::move(c));
}

UPoly BPoly::coeff_of_t(int j) const {
  std::vector<Rational> c;
  for (const auto& [k, v] : terms_) {
    if (k.second != j) continue;
    if (c.size() <= static_cast<std::size_t>(k.first)) c.resize(static_cast<std::size_t>(k.first) + 1, Rational(0));
    c[static_cast<std::size_t>(k.first)] += v;
  }
  return UPoly(std::move(c));
}

UPoly BPoly::along_segment(const Rational& b0, const Rational& t0, const Rational& db, const Rational& dt) const {
  UPoly bs({b0, db});
  UPoly ts({t0, dt});
  UPoly acc;
  for (const auto& [k, v] : terms_) acc += pow(bs, static_cast<unsigned>(k.first)) * pow(ts, static_cast<unsigned>(k.second)) * v;
  return acc;
}

BPoly BPoly::operator-() const {
  BPoly r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

BPoly& BPoly::operator+=(const BPoly& o) {
  for (const auto& [k, v] : o.terms_) add_term(k, v);
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  for (const auto& [k, v] : o.terms_) add_term(k, -v);
  return *this;
}

BPoly& BPoly::operator*=(const BPoly& o) {
  BPoly r;
  for (const auto& [k1, v1] : terms_)
    for (const auto& [k2, v2] : o.terms_) r.add_term({k1.first + k2.first, k1.second + k2.second}, v1 * v2);
  terms_ = std::move(r.terms_);
  return *this;
}

BPoly& BPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Interval quadratic_range(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& lo,
                         const Rational& hi) {
  auto f = [&](const Rational& x) -> Rational { return c0 + c1 * x + c2 * x * x; };
  Rational a = f(lo), b = f(hi);
  Interval r{std::min(a, b), std::max(a, b)};
  if (c2 != 0) {
    Rational v = -c1 / (2 * c2);
    if (v > lo && v < hi) {
      Rational fv = f(v);
      if (fv < r.lo) r.lo = fv;
      if (fv > r.hi) r.hi = fv;
    }
  }
  return r;
}

namespace {

Interval power_range(const Rational& lo, const Rational& hi, int e) {
  Rational a = 1, b = 1;
  for (int i = 0; i < e; ++i) {
    a *= lo;
    b *= hi;
  }
  Interval r{std::min(a, b), std::max(a, b)};
  if (e % 2 == 0 && e > 0 && lo < 0 && hi > 0) r.lo = 0;
  return r;
}

}  // namespace

Interval range_enclosure(const UPoly& p, const Rational& lo, const Rational& hi) {
  Interval acc{0, 0};
  for (int i = p.degree(); i >= 0; --i) {
    Rational c[4] = {acc.lo * lo, acc.lo * hi, acc.hi * lo, acc.hi * hi};
    acc.lo = *std::min_element(c, c + 4) + p.coeff(i);
    acc.hi = *std::max_element(c, c + 4) + p.coeff(i);
  }
  return acc;
}

Interval range_enclosure(const BPoly& p, const Rational& b0, const Rational& b1, const Rational& t0,
                         const Rational& t1) {
  Interval acc{0, 0};
  for (const auto& [k, c] : p.terms()) {
    Interval bi = power_range(b0, b1, k.first);
    Interval ti = power_range(t0, t1, k.second);
    Rational cands[4] = {bi.lo * ti.lo, bi.lo * ti.hi, bi.hi * ti.lo, bi.hi * ti.hi};
    Rational lo = cands[0], hi = cands[0];
    for (const auto& x : cands) {
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
    if (c > 0) {
      acc.lo += c * lo;
      acc.hi += c * hi;
    } else {
      acc.lo += c * hi;
      acc.hi += c * lo;
    }
  }
  return acc;
}

int sign_at_root(const UPoly& q, const UPoly& p, RealRoot root) {
  if (root.exact) return sgn(q(root.lo));
  if (q.is_zero()) return 0;
  UPoly ps = squarefree_part(p);
  UPoly g = gcd(ps, q);
  if (g.degree() > 0 && SturmSequence(g).count_open(root.lo, root.hi) > 0) return 0;
  SturmSequence sp(ps);
  if (q.degree() > 0) {
    SturmSequence sq(q);
    while (sq.count(root.lo, root.hi) > 0 || q(root.lo) == 0) {
      refine_root(sp, root, (root.hi - root.lo) / 2);
      if (root.exact) return sgn(q(root.lo));
    }
  }
  return sgn(q((root.lo + root.hi) / 2));
}

}  // namespace bstab
