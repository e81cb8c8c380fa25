#pragma once

// Dense univariate polynomials, coefficients stored lowest degree first.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dynport/arith.hpp"

namespace dynport {

template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  Polynomial(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const R& c) { return Polynomial({c}); }
  static Polynomial monomial(const R& c, std::size_t deg) {
    std::vector<R> v(deg + 1, R(0));
    v[deg] = c;
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<R>& coeffs() const { return coeffs_; }
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }
  const R& leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of zero");
    return coeffs_.back();
  }

  R operator()(const R& x) const {
    R acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<R> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      out[i - 1] = coeffs_[i] * R(static_cast<unsigned long>(i));
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<R> out(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<R> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const R& s, const Polynomial& a) {
    std::vector<R> out(a.coeffs_);
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Quotient and remainder; requires exact division of coefficients
  /// (use over a field).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& b) const {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<R> rem(coeffs_);
    if (degree() < b.degree()) return {Polynomial(), *this};
    std::vector<R> quo(coeffs_.size() - b.coeffs_.size() + 1, R(0));
    const R& lead = b.coeffs_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      R q = rem[k + b.coeffs_.size() - 1] / lead;
      quo[k] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        rem[k + j] -= q * b.coeffs_[j];
    }
    rem.resize(b.coeffs_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }
  Polynomial operator%(const Polynomial& b) const { return divmod(b).second; }
  Polynomial operator/(const Polynomial& b) const { return divmod(b).first; }

  Polynomial monic() const {
    if (is_zero()) return {};
    return (R(1) / leading()) * (*this);
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<R> coeffs_;
};

using QPoly = Polynomial<Rational>;

/// Monic gcd over Q (zero if both inputs are zero).
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Inverse of a modulo m, when gcd(a, m) = 1.
inline QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = a % m;
  QPoly s0, s1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DomainError("polynomial not invertible modulo m");
  return (Rational(1) / r0.leading()) * s0 % m;
}

/// Squarefree part over Q, monic.
inline QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

}  // namespace dynport
