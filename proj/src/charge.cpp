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

#include "charge.hpp"

#include <algorithm>

#include "enumeration.hpp"

namespace bstab {

PhaseRay::PhaseRay(const ComplexRational& z) : z_(z) {
  require(!z.is_zero(), ErrorCode::ZeroCharge, "charge is zero");
  if (!(in_upper_closed(z))) fail(ErrorCode::OutsideHeartImage,
          "charge " + to_string(z.re) + " + " + to_string(z.im) + "i has phase outside (0,1]");
}

std::string PhaseRay::phase_label() const {
  if (z_.im == 0) return "1";
  if (z_.re == 0) return "1/2";
  return z_.re > 0 ? "(0,1/2)" : "(1/2,1)";
}

std::strong_ordering compare_phase(const PhaseRay& a, const PhaseRay& b) {
  return compare_phase_raw(a.charge(), b.charge());
}

bool same_ray(const ComplexRational& z1, const ComplexRational& z2) { return same_ray_raw(z1, z2); }

ComplexRational rotate_charge(const ComplexRational& z, const Rational& halfturns) {
  Rational twice = 2 * halfturns;
  if (!(is_integer(twice))) fail(ErrorCode::UnsupportedRotation,
          "rotation by " + to_string(halfturns) + " half-turns is not a multiple of 1/2");
  Integer k = twice.get_num() % 4;
  if (k < 0) k += 4;
  // exp(-i pi k/2) = (-i)^k
  switch (k.get_si()) {
    case 0: return z;
    case 1: return {z.im, -z.re};
    case 2: return {-z.re, -z.im};
    default: return {-z.im, z.re};
  }
}

Rational abs_squared(const ComplexRational& z) { return z.abs_squared(); }

StabilityPoint::StabilityPoint(NSLattice lattice, RationalDivisor beta, RationalDivisor omega)
    : lattice_(std::move(lattice)), beta_(std::move(beta)), omega_(std::move(omega)) {
  lattice_.check_divisor(beta_);
  lattice_.check_divisor(omega_);
  const int n = lattice_.rank();
  g_beta_.coeffs.assign(n, 0);
  g_omega_.coeffs.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g_beta_[i] += Rational(lattice_.gram()[i][j]) * beta_[j];
      g_omega_[i] += Rational(lattice_.gram()[i][j]) * omega_[j];
    }
  beta_sq_ = lattice_.dot(beta_, beta_);
  omega_sq_ = lattice_.dot(omega_, omega_);
  beta_omega_ = lattice_.dot(beta_, omega_);
  if (!(omega_sq_ > 0)) fail(ErrorCode::InvalidArgument, "omega^2 = " + to_string(omega_sq_) + " is not positive");
}

Rational StabilityPoint::dot_beta(const std::vector<Integer>& l) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < l.size(); ++i) acc += Rational(l[i]) * g_beta_[i];
  return acc;
}

Rational StabilityPoint::dot_omega(const std::vector<Integer>& l) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < l.size(); ++i) acc += Rational(l[i]) * g_omega_[i];
  return acc;
}

ComplexRational StabilityPoint::charge(const MukaiVector& v) const {
  lattice_.check_vector(v);
  Rational re = dot_beta(v.l) - Rational(v.s) - Rational(v.r) * (beta_sq_ - omega_sq_) / 2;
  Rational im = dot_omega(v.l) - Rational(v.r) * beta_omega_;
  return {re, im};
}

ComplexRational central_charge_pairing(const StabilityPoint& P, const MukaiVector& v) {
  const NSLattice& L = P.lattice();
  L.check_vector(v);
  // exp(beta + i omega) = (1, beta + i omega, (beta + i omega)^2 / 2)
  const ComplexRational e0{1, 0};
  const ComplexRational e2{(P.beta_sq() - P.omega_sq()) / 2, P.beta_omega()};
  RationalDivisor l = v.l_divisor();
  // (e, v) = e1.l - e0 s - r e2
  ComplexRational e1_dot_l{L.dot(P.beta(), l), L.dot(P.omega(), l)};
  return e1_dot_l - Rational(v.s) * e0 - Rational(v.r) * e2;
}

ComplexRational central_charge_explicit(const StabilityPoint& P, const MukaiVector& v) {
  const NSLattice& L = P.lattice();
  L.check_vector(v);
  RationalDivisor l = v.l_divisor();
  if (v.r == 0) return {-Rational(v.s) + L.dot(l, P.beta()), L.dot(l, P.omega())};
  const Rational r(v.r);
  RationalDivisor shifted = l - r * P.beta();
  Rational re = (L.dot(l, l) - 2 * r * Rational(v.s) + r * r * P.omega_sq() - L.dot(shifted, shifted)) / (2 * r);
  Rational im = L.dot(shifted, P.omega());
  return {re, im};
}

ComplexRational central_charge(const StabilityPoint& P, const MukaiVector& v) {
  ComplexRational a = central_charge_pairing(P, v);
  ComplexRational b = central_charge_explicit(P, v);
  if (!(a == b)) fail(ErrorCode::Internal, "central charge routes disagree on " + v.to_string());
  return a;
}

PhaseRay phase_in_01(const StabilityPoint& P, const MukaiVector& v) { return PhaseRay(central_charge(P, v)); }

Rational mass_bound(const StabilityPoint& P, const std::vector<MukaiVector>& factors) {
  Rational acc = 0;
  for (const auto& f : factors) {
    ComplexRational z = P.charge(f);
    acc += abs(z.re) + abs(z.im);
  }
  return acc;
}

const char* to_string(ValidityReport::Kind k) {
  switch (k) {
    case ValidityReport::Kind::Valid: return "valid";
    case ValidityReport::Kind::Invalid: return "invalid";
    default: return "unknown";
  }
}

ValidityReport validate_point(const StabilityPoint& P, const Rational& search_bound) {
  ValidityReport rep;
  if (P.omega_sq() > 2) {
    rep.kind = ValidityReport::Kind::Valid;
    rep.by_omega_condition = true;
    return rep;
  }
  EnumerationBudget budget;
  budget.max_abs_squared = search_bound;
  EnumerationResult found = enumerate_bounded(P, budget);
  for (const auto& v : found.classes) {
    if (v.r <= 0 || mukai_square(P.lattice(), v) != -2) continue;
    ComplexRational z = P.charge(v);
    if (z.im == 0 && z.re <= 0) {
      rep.kind = ValidityReport::Kind::Invalid;
      rep.witness = v;
      rep.witness_charge = z;
      return rep;
    }
  }
  rep.kind = ValidityReport::Kind::Unknown;
  rep.searched_bound = search_bound;
  return rep;
}

std::string HilbertPoly::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs[i];
    if (c == 0 && degree() > 0) continue;
    std::string mag = bstab::to_string(abs(c));
    std::string mono = i == 0 ? "" : i == 1 ? "n" : "n^" + std::to_string(i);
    std::string term = (i > 0 && abs(c) == 1) ? mono : mag + (mono.empty() ? "" : "*" + mono);
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

HilbertPoly reduced_hilbert(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                            const MukaiVector& v) {
  L.check_vector(v);
  Rational w2 = L.dot(omega, omega);
  require(w2 > 0, ErrorCode::InvalidArgument, "omega^2 must be positive");
  RationalDivisor l = v.l_divisor();
  if (v.r != 0) {
    const Rational r(v.r);
    RationalDivisor shifted = l - r * beta;
    Rational lin = 2 * L.dot(shifted, omega) / (r * w2);
    Rational c0 = -(L.dot(l, l) - 2 * r * Rational(v.s) - L.dot(shifted, shifted)) / (r * r * w2) +
                  Rational(2 * L.epsilon()) / w2;
    return {{c0, lin, 1}};
  }
  bool l_zero = std::all_of(v.l.begin(), v.l.end(), [](const Integer& x) { return x == 0; });
  if (l_zero) return {{Rational(v.s)}};
  Rational lw = L.dot(l, omega);
  require(lw != 0, ErrorCode::InvalidArgument, "l.omega = 0 for a torsion class; reduced polynomial undefined");
  return {{(Rational(v.s) - L.dot(l, beta)) / lw, 1}};
}

std::strong_ordering gieseker_compare(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                                      const MukaiVector& v1, const MukaiVector& v2) {
  HilbertPoly p1 = reduced_hilbert(L, beta, omega, v1);
  HilbertPoly p2 = reduced_hilbert(L, beta, omega, v2);
  if (p1.degree() != p2.degree()) return p1.degree() <=> p2.degree();
  for (int i = p1.degree(); i >= 0; --i) {
    int c = cmp(p1.coeffs[i], p2.coeffs[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Rational mu_slope(const NSLattice& L, const RationalDivisor& omega, const MukaiVector& v) {
  require(v.r != 0, ErrorCode::ZeroRank, "slope of a rank zero class");
  return L.dot(v.l, omega) / Rational(v.r);
}

bool p_equal_by_polynomials(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                            const MukaiVector& v1, const MukaiVector& v2) {
  HilbertPoly p1 = reduced_hilbert(L, beta, omega, v1);
  HilbertPoly p2 = reduced_hilbert(L, beta, omega, v2);
  if (p1.degree() == 0) p1.coeffs[0] = 1;
  if (p2.degree() == 0) p2.coeffs[0] = 1;
  return p1 == p2;
}

namespace {

// Z_{(beta, k omega)}(v) = (A + D k^2) + i k B
struct ChargeInK {
  Rational a, d, b;
};

ChargeInK charge_in_k(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                      const MukaiVector& v) {
  const Rational r(v.r);
  return {L.dot(v.l, beta) - Rational(v.s) - r * L.dot(beta, beta) / 2, r * L.dot(omega, omega) / 2,
          L.dot(v.l, omega) - r * L.dot(beta, omega)};
}

}  // namespace

UPoly alignment_poly_in_k(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                          const MukaiVector& v1, const MukaiVector& v2) {
  ChargeInK z1 = charge_in_k(L, beta, omega, v1);
  ChargeInK z2 = charge_in_k(L, beta, omega, v2);
  // Im(z2 conj z1) = Im2 Re1 - Re2 Im1 = k (b2 (a1 + d1 k^2) - b1 (a2 + d2 k^2))
  return UPoly({0, z2.b * z1.a - z1.b * z2.a, 0, z2.b * z1.d - z1.b * z2.d});
}

bool p_equal_by_alignment(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                          const MukaiVector& v1, const MukaiVector& v2) {
  L.check_vector(v1);
  L.check_vector(v2);
  for (int x = 0; x <= 2; ++x) {
    RationalDivisor shifted = beta - Rational(x) * omega;
    ChargeInK z1 = charge_in_k(L, shifted, omega, v1);
    ChargeInK z2 = charge_in_k(L, shifted, omega, v2);
    if (z1.b == 0 && z2.b == 0) {
      if (v1.r == 0 && v2.r == 0) {
        bool t1 = std::all_of(v1.l.begin(), v1.l.end(), [](const Integer& c) { return c == 0; });
        bool t2 = std::all_of(v2.l.begin(), v2.l.end(), [](const Integer& c) { return c == 0; });
        require(t1 && t2, ErrorCode::InvalidArgument, "l.omega = 0 for a torsion class; reduced polynomial undefined");
        return true;
      }
      continue;
    }
    return alignment_poly_in_k(L, shifted, omega, v1, v2).is_zero();
  }
  fail(ErrorCode::Internal, "no twist shift separates the imaginary parts");
}

bool p_equality_test(const NSLattice& L, const RationalDivisor& beta, const RationalDivisor& omega,
                     const MukaiVector& v1, const MukaiVector& v2) {
  bool a = p_equal_by_polynomials(L, beta, omega, v1, v2);
  bool b = p_equal_by_alignment(L, beta, omega, v1, v2);
  if (!(a == b)) fail(ErrorCode::Internal,
          "reduced polynomial and alignment routes disagree on " + v1.to_string() + ", " + v2.to_string());
  return a;
}

SliceCharge slice_charge(const NSLattice& L, const RationalDivisor& B0, const RationalDivisor& W0,
                         const MukaiVector& v) {
  L.check_vector(v);
  const Rational r(v.r);
  const Rational lb = L.dot(v.l, B0), lw = L.dot(v.l, W0);
  const Rational bb = L.dot(B0, B0), ww = L.dot(W0, W0), bw = L.dot(B0, W0);
  SliceCharge z;
  // Re = b l.B0 - s - r (b^2 B0^2 - t^2 W0^2) / 2
  z.re = BPoly::term(lb, 1, 0) + BPoly::constant(-Rational(v.s)) + BPoly::term(-r * bb / 2, 2, 0) +
         BPoly::term(r * ww / 2, 0, 2);
  // Im = t l.W0 - r b t B0.W0
  z.im = BPoly::term(lw, 0, 1) + BPoly::term(-r * bw, 1, 1);
  return z;
}

}  // namespace bstab
