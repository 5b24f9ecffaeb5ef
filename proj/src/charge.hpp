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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "poly.hpp"
#include "quadext.hpp"

namespace bstab {

/// Complex number over an ordered field F (Rational, QuadExt) or over a
/// polynomial ring (BPoly) when only ring operations are used.
template <class F>
struct Complex {
  F re{}, im{};

  Complex() = default;
  Complex(F r, F i) : re(std::move(r)), im(std::move(i)) {}

  Complex conj() const { return {re, -im}; }
  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const F& c, const Complex& z) { return {c * z.re, c * z.im}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  F abs_squared() const { return re * re + im * im; }
};

using ComplexRational = Complex<Rational>;
using ComplexQuad = Complex<QuadExt>;

inline ComplexQuad lift(const ComplexRational& z) { return {QuadExt(z.re), QuadExt(z.im)}; }

/// Phase of z lies in (0,1]: im > 0, or im = 0 and re < 0.
template <class F>
bool in_upper_closed(const Complex<F>& z) {
  int si = sgn(z.im);
  return si > 0 || (si == 0 && sgn(z.re) < 0);
}

/// Exact phase comparison of two charges with phases in (0,1].
template <class F>
std::strong_ordering compare_phase_raw(const Complex<F>& a, const Complex<F>& b) {
  const bool a_one = sgn(a.im) == 0;
  const bool b_one = sgn(b.im) == 0;
  if (a_one || b_one) {
    if (a_one && b_one) return std::strong_ordering::equal;
    return a_one ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = sgn(a.im * b.re - a.re * b.im);
  return c > 0 ? std::strong_ordering::greater : c < 0 ? std::strong_ordering::less : std::strong_ordering::equal;
}

/// z1 / z2 is a positive real.
template <class F>
bool same_ray_raw(const Complex<F>& z1, const Complex<F>& z2) {
  require(!z1.is_zero() && !z2.is_zero(), ErrorCode::ZeroCharge, "same_ray on a zero charge");
  return sgn(z1.im * z2.re - z1.re * z2.im) == 0 && sgn(z1.re * z2.re + z1.im * z2.im) > 0;
}

/// Phase comparison of charges clustered around a reference ray. Each
/// charge is rotated so that the reference sits at phase 1/2; all rotated
/// charges must lie in the open upper half plane.
template <class F>
std::strong_ordering compare_phase_near(const Complex<F>& a, const Complex<F>& b, const Complex<F>& ref) {
  const Complex<F> rot{F(Rational(0)), F(Rational(1))};
  Complex<F> ra = a * ref.conj() * rot;
  Complex<F> rb = b * ref.conj() * rot;
  require(sgn(ra.im) > 0 && sgn(rb.im) > 0, ErrorCode::Internal,
          "charge lies a quarter turn or more away from the reference ray");
  return compare_phase_raw(ra, rb);
}

/// A nonzero charge with phase in (0,1].
class PhaseRay {
 public:
  explicit PhaseRay(const ComplexRational& z);
  const ComplexRational& charge() const { return z_; }
  /// "1/2", "1", "(0,1/2)" or "(1/2,1)".
  std::string phase_label() const;

 private:
  ComplexRational z_;
};

std::strong_ordering compare_phase(const PhaseRay& a, const PhaseRay& b);
bool same_ray(const ComplexRational& z1, const ComplexRational& z2);

/// z * exp(-i pi lambda) for lambda in (1/2)Z.
ComplexRational rotate_charge(const ComplexRational& z, const Rational& halfturns);

Rational abs_squared(const ComplexRational& z);

/// (beta, omega) with omega^2 > 0. Products with the Gram matrix are
/// cached so that charges cost O(rank).
class StabilityPoint {
 public:
  StabilityPoint(NSLattice lattice, RationalDivisor beta, RationalDivisor omega);

  const NSLattice& lattice() const { return lattice_; }
  const RationalDivisor& beta() const { return beta_; }
  const RationalDivisor& omega() const { return omega_; }
  const Rational& beta_sq() const { return beta_sq_; }
  const Rational& omega_sq() const { return omega_sq_; }
  const Rational& beta_omega() const { return beta_omega_; }

  Rational dot_beta(const std::vector<Integer>& l) const;
  Rational dot_omega(const std::vector<Integer>& l) const;

  /// Z(v) = l.beta - s - r(beta^2 - omega^2)/2 + i (l.omega - r beta.omega)
  ComplexRational charge(const MukaiVector& v) const;

 private:
  NSLattice lattice_;
  RationalDivisor beta_, omega_;
  RationalDivisor g_beta_, g_omega_;
  Rational beta_sq_, omega_sq_, beta_omega_;
};

/// (exp(beta + i omega), v) expanded through the Mukai pairing.
ComplexRational central_charge_pairing(const StabilityPoint& P, const MukaiVector& v);
/// Closed form: ((l^2 - 2rs) + r^2 omega^2 - (l - r beta)^2)/(2r) + i (l - r beta).omega
/// for r != 0; (-s + l.beta) + i l.omega for r = 0.
ComplexRational central_charge_explicit(const StabilityPoint& P, const MukaiVector& v);
/// Both routes; disagreement raises Internal.
ComplexRational central_charge(const StabilityPoint& P, const MukaiVector& v);

PhaseRay phase_in_01(const StabilityPoint& P, const MukaiVector& v);

/// Sum of |Re Z| + |Im Z| over the factors; m <= bound <= sqrt(2) m.
Rational mass_bound(const StabilityPoint& P, const std::vector<MukaiVector>& factors);

struct ValidityReport {
  enum class Kind { Valid, Invalid, Unknown };
  Kind kind = Kind::Unknown;
  /// Set for Invalid: a spherical class with Z in R_{<=0}.
  std::optional<MukaiVector> witness;
  std::optional<ComplexRational> witness_charge;
  /// Set for Unknown: the |Z|^2 radius that was searched.
  Rational searched_bound = 0;
  bool by_omega_condition = false;
};

const char* to_string(ValidityReport::Kind k);

/// Valid when omega^2 > 2; otherwise searches spherical classes of positive
/// rank with |Z|^2 <= search_bound for a charge in R_{<=0}.
ValidityReport validate_point(const StabilityPoint& P, const Rational& search_bound);

/// Reduced twisted Hilbert polynomial, coefficients constant-first.
/// Degree 2 for r != 0 (monic), degree 1 for r = 0 and l != 0 (monic),
/// the constant s for r = l = 0.
struct HilbertPoly {
  std::vector<Rational> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
  std::string to_string() const;
};

HilbertPoly reduced_hilbert(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                            const MukaiVector& v);

/// Eventual dominance for n >> 0: higher degree wins, then coefficients
/// from the top down.
std::strong_ordering gieseker_compare(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                                      const MukaiVector& v1, const MukaiVector& v2);

Rational mu_slope(const NSLattice& L, const RationalDivisor& omega, const MukaiVector& v);

/// Equality of reduced Hilbert polynomials with a dimension-normalized
/// constant (r = l = 0 classes all reduce to 1).
bool p_equal_by_polynomials(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                            const MukaiVector& v1, const MukaiVector& v2);

/// Im(Z_{(beta,k omega)}(v2) conj Z_{(beta,k omega)}(v1)) as a polynomial in k.
UPoly alignment_poly_in_k(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                          const MukaiVector& v1, const MukaiVector& v2);

/// Vanishing of the alignment polynomial in k, after replacing beta by
/// beta - x omega for the least x in {0,1,2} that leaves one of the two
/// imaginary parts nonzero. The shift changes P(n) to P(n + x) for every
/// class, so equality is unaffected.
bool p_equal_by_alignment(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                          const MukaiVector& v1, const MukaiVector& v2);

/// Runs both routes; disagreement raises Internal.
bool p_equality_test(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                     const MukaiVector& v1, const MukaiVector& v2);

/// Re and Im of Z on the slice beta = b B0, omega = t W0, as polynomials in (b, t).
struct SliceCharge {
  BPoly re, im;
};

SliceCharge slice_charge(const NSLattice& L, const RationalDivisor& B0, const RationalDivisor& W0,
                         const MukaiVector& v);

template <class F>
Complex<F> eval_slice(const SliceCharge& z, const Rational& b, const F& t) {
  return {z.re.eval_t(b, t), z.im.eval_t(b, t)};
}

}  // namespace bstab
