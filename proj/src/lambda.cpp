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

#include "lambda.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace bstab {

RatFunc::RatFunc(const Rational& c) : num_(UPoly::constant(c)), den_(UPoly::constant(1)) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  reduce();
}

RatFunc RatFunc::q_pow(long k) {
  if (k >= 0) return RatFunc(UPoly::monomial(1, static_cast<int>(k)), UPoly::constant(1));
  return RatFunc(UPoly::constant(1), UPoly::monomial(1, static_cast<int>(-k)));
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = UPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rational lc = den_.leading();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero rational function");
  if (is_zero()) return *this;
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return RatFunc(1) / pow(-e);
  RatFunc out(1), base = *this;
  for (unsigned long k = static_cast<unsigned long>(e); k; k >>= 1) {
    if (k & 1) out *= base;
    if (k > 1) base *= base;
  }
  return out;
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes at q = " + bstab::to_string(x));
  return num_(x) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string('q');
  return "(" + num_.to_string('q') + ")/(" + den_.to_string('q') + ")";
}

FormalLambda::FormalLambda(const RatFunc& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

FormalLambda FormalLambda::symbol(const MukaiVector& v) {
  FormalLambda f;
  f.terms_.emplace(Monomial{{v, 1}}, RatFunc(1));
  return f;
}

bool FormalLambda::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

RatFunc FormalLambda::scalar() const {
  require(is_scalar(), ErrorCode::InvalidArgument, "value involves formal symbols");
  return terms_.empty() ? RatFunc() : terms_.begin()->second;
}

namespace {

int total_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int FormalLambda::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

FormalLambda FormalLambda::truncated(int d) const {
  FormalLambda out;
  for (const auto& [m, c] : terms_)
    if (total_degree(m) <= d) out.terms_.emplace(m, c);
  return out;
}

void FormalLambda::add_term(const Monomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FormalLambda FormalLambda::operator-() const {
  FormalLambda out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

FormalLambda& FormalLambda::operator+=(const FormalLambda& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FormalLambda& FormalLambda::operator-=(const FormalLambda& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FormalLambda& FormalLambda::operator*=(const FormalLambda& o) {
  FormalLambda out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return *this = std::move(out);
}

FormalLambda& FormalLambda::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

FormalLambda& FormalLambda::operator/=(const RatFunc& c) {
  if (c.is_zero()) fail(ErrorCode::DivisionByZero, "division of a formal value by zero");
  for (auto& [m, x] : terms_) x /= c;
  return *this;
}

FormalLambda FormalLambda::substitute(const std::map<MukaiVector, FormalLambda>& values) const {
  FormalLambda out;
  for (const auto& [m, c] : terms_) {
    FormalLambda term(c);
    Monomial kept;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      for (int k = 0; k < e; ++k) term *= it->second;
    }
    FormalLambda rest;
    rest.terms_.emplace(kept, RatFunc(1));
    out += term * rest;
  }
  return out;
}

namespace {

std::string symbol_name(const MukaiVector& v) {
  std::string s = "I[" + to_string(v.r);
  for (const auto& c : v.l) s += "," + to_string(c);
  return s + "," + to_string(v.s) + "]";
}

bool is_composite(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-' || s[i] == '/') return true;
  return false;
}

}  // namespace

std::string FormalLambda::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string t;
    if (m.empty()) {
      t = c.to_string();
    } else {
      std::string mono;
      for (const auto& [v, e] : m) {
        if (!mono.empty()) mono += "*";
        mono += symbol_name(v);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      const std::string cs = c.to_string();
      if (cs == "1")
        t = mono;
      else if (cs == "-1")
        t = "-" + mono;
      else if (is_composite(cs))
        t = "(" + cs + ")*" + mono;
      else
        t = cs + "*" + mono;
    }
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  }
  return out;
}

namespace {

class LambdaParser {
 public:
  LambdaParser(std::string_view text, int rho) : s_(text), rho_(rho) {}

  FormalLambda parse() {
    FormalLambda v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FormalLambda expr() {
    FormalLambda v;
    if (eat('-'))
      v = -term();
    else {
      eat('+');
      v = term();
    }
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  FormalLambda term() {
    FormalLambda v = power();
    for (;;) {
      if (eat('*')) {
        v *= power();
      } else if (eat('/')) {
        FormalLambda d = power();
        if (!d.is_scalar()) error("division by a formal symbol");
        if (d.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in \"" + std::string(s_) + "\"");
        v /= d.scalar();
      } else {
        return v;
      }
    }
  }

  long exponent() {
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer exponent");
    if (pos_ - start > 9) error("exponent too large");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) error("expected ')'");
    return neg ? -e : e;
  }

  FormalLambda power() {
    FormalLambda base = atom();
    if (!eat('^')) return base;
    long e = exponent();
    if (e < 0) {
      if (!base.is_scalar()) error("negative power of a formal symbol");
      return FormalLambda(base.scalar().pow(e));
    }
    FormalLambda out(1);
    for (long k = 0; k < e; ++k) out *= base;
    return out;
  }

  Integer integer() {
    skip();
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    Integer z(std::string(s_.substr(start, pos_ - start)));
    return neg ? Integer(-z) : z;
  }

  FormalLambda atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FormalLambda v = expr();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return FormalLambda(Rational(integer()));
    if (c == 'q') {
      ++pos_;
      return FormalLambda(RatFunc::q());
    }
    if (c == 'I') {
      ++pos_;
      if (!eat('[')) error("expected '[' after I");
      std::vector<Integer> parts{integer()};
      while (eat(',')) parts.push_back(integer());
      if (!eat(']')) error("expected ']'");
      if (parts.size() < 3) error("a class needs rank, at least one divisor coefficient and s");
      if (rho_ > 0 && parts.size() != static_cast<std::size_t>(rho_) + 2) error("class size does not match the lattice");
      MukaiVector v;
      v.r = parts.front();
      v.s = parts.back();
      v.l.assign(parts.begin() + 1, parts.end() - 1);
      return FormalLambda::symbol(v);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  int rho_;
  std::size_t pos_ = 0;
};

}  // namespace

FormalLambda parse_lambda(std::string_view text, int rho) { return LambdaParser(text, rho).parse(); }

}  // namespace bstab
