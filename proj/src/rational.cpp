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

#include "rational.hpp"

#include <cctype>
#include <stdexcept>

#include "errors.hpp"

namespace bstab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::ZeroCharge: return "ZeroCharge";
    case ErrorCode::OutsideHeartImage: return "OutsideHeartImage";
    case ErrorCode::UnsupportedRotation: return "UnsupportedRotation";
    case ErrorCode::ZeroRank: return "ZeroRank";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoRootInRegion: return "NoRootInRegion";
    case ErrorCode::CannotSeparate: return "CannotSeparate";
    case ErrorCode::ScopeExceeded: return "ScopeExceeded";
    case ErrorCode::ChamberMismatch: return "ChamberMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  Integer num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  } else {
    auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || den_text.empty() || den_text[0] == '-' ||
        den_text[0] == '+' || !parse_integer(den_text, den))
      fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
    if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

int sgn(const Rational& x) { return ::sgn(x); }

Integer floor_int(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_int(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_sqrt(const Rational& x) {
  if (sgn(x) <= 0) return 0;
  Integer c = ceil_int(x);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), c.get_mpz_t());
  if (r * r < c) r += 1;
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational abs(const Rational& x) { return ::abs(x); }

namespace {

// Simplest rational in (lo, hi) for 0 <= lo < hi; hi may be infinite.
Rational simplest_positive(const Rational& lo, const Rational* hi) {
  Integer n = floor_int(lo) + 1;
  if (hi == nullptr || Rational(n) < *hi) return Rational(n);
  // lo and hi share the integer part n - 1, and hi is not an integer above lo.
  Integer k = n - 1;
  Rational flo = lo - Rational(k), fhi = *hi - Rational(k);
  if (flo == 0) return Rational(k) + 1 / simplest_positive(1 / fhi, nullptr);
  Rational inv_hi = 1 / flo;
  return Rational(k) + 1 / simplest_positive(1 / fhi, &inv_hi);
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) {
    Rational nlo = -hi;
    Rational nhi = -lo;
    return -simplest_positive(nlo, &nhi);
  }
  return simplest_positive(lo, &hi);
}

}  // namespace bstab
