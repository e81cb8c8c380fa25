#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dynport/arith.hpp"
#include "dynport/forms.hpp"
#include "dynport/projective.hpp"

namespace dynport {

/// Default cap on d^k for iterates and dynatomic forms.
inline constexpr std::size_t kDefaultDegreeCap = 4096;

/// A degree-d endomorphism [f0 : f1] of P^1 over Q, stored with primitive
/// integer coefficients (joint content 1, first nonzero coefficient of f0
/// positive). The resultant is nonzero.
class RationalMap {
 public:
  /// Validating constructor; throws DomainError on degree < 2, mismatched
  /// lengths or vanishing resultant.
  RationalMap(const BinaryForm& f0, const BinaryForm& f1)
      : RationalMap(f0, f1, Trusted{}) {
    if (degree() < 2) throw DomainError("map degree must be at least 2");
    Integer res = dynport::resultant(f0_, f1_);
    if (res == 0) throw DomainError("resultant vanishes: not a morphism of degree " +
                                    std::to_string(degree()));
    resultant_ = std::move(res);
  }

  /// Rational coefficients, X^d first; denominators and content cleared.
  static RationalMap from_rationals(const std::vector<Rational>& num,
                                    const std::vector<Rational>& den) {
    if (num.size() != den.size()) throw DomainError("numerator and denominator lengths differ");
    Integer l = 1;
    for (const auto& c : num) l = lcm(l, c.get_den());
    for (const auto& c : den) l = lcm(l, c.get_den());
    std::vector<Integer> a, b;
    for (const auto& c : num) a.push_back(Rational(c * l).get_num());
    for (const auto& c : den) b.push_back(Rational(c * l).get_num());
    return RationalMap(BinaryForm(std::move(a)), BinaryForm(std::move(b)));
  }

  /// Builds a map already known to be a morphism (iterates, conjugates).
  /// The resultant is computed on demand.
  static RationalMap trusted(const BinaryForm& f0, const BinaryForm& f1) {
    return RationalMap(f0, f1, Trusted{});
  }

  std::size_t degree() const { return f0_.degree(); }
  const BinaryForm& numerator() const { return f0_; }
  const BinaryForm& denominator() const { return f1_; }

  Integer resultant() const {
    if (resultant_) return *resultant_;
    return dynport::resultant(f0_, f1_);
  }

  ProjectivePoint operator()(const ProjectivePoint& p) const {
    return {f0_(p), f1_(p)};
  }

  friend bool operator==(const RationalMap& a, const RationalMap& b) {
    return a.f0_ == b.f0_ && a.f1_ == b.f1_;
  }

 private:
  struct Trusted {};
  RationalMap(const BinaryForm& f0, const BinaryForm& f1, Trusted) {
    if (f0.degree() != f1.degree()) throw DomainError("numerator and denominator degrees differ");
    std::vector<Integer> all(f0.coeffs());
    all.insert(all.end(), f1.coeffs().begin(), f1.coeffs().end());
    Integer g = content(all);
    if (g == 0) throw DomainError("both forms vanish identically");
    int sign = 0;
    for (const auto& c : all) {
      if (c != 0) {
        sign = sgn(c);
        break;
      }
    }
    if (sign < 0) g = -g;
    std::vector<Integer> a(f0.coeffs()), b(f1.coeffs());
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    f0_ = BinaryForm(std::move(a));
    f1_ = BinaryForm(std::move(b));
  }

  BinaryForm f0_, f1_;
  std::optional<Integer> resultant_;
};

inline ProjectivePoint evaluate(const RationalMap& f, const ProjectivePoint& p) { return f(p); }

/// Composition f o g.
inline RationalMap compose(const RationalMap& f, const RationalMap& g) {
  return RationalMap::trusted(f.numerator().compose(g.numerator(), g.denominator()),
                              f.denominator().compose(g.numerator(), g.denominator()));
}

/// k-th compositional iterate; throws DomainError if d^k exceeds the cap.
inline RationalMap iterate(const RationalMap& f, unsigned k,
                           std::size_t degree_cap = kDefaultDegreeCap) {
  if (k == 0) throw DomainError("iterate count must be positive");
  std::size_t deg = 1;
  for (unsigned i = 0; i < k; ++i) {
    deg *= f.degree();
    if (deg > degree_cap)
      throw DomainError("iterate degree exceeds cap of " + std::to_string(degree_cap));
  }
  RationalMap acc = f;
  for (unsigned i = 1; i < k; ++i) acc = compose(f, acc);
  return acc;
}

/// An invertible integer matrix [[a, b], [c, d]] acting as z -> (az+b)/(cz+d).
struct Mobius {
  Integer a, b, c, d;

  Integer det() const { return a * d - b * c; }
  ProjectivePoint operator()(const ProjectivePoint& p) const {
    return {a * p.x() + b * p.y(), c * p.x() + d * p.y()};
  }
  /// The adjugate, which acts as the inverse on P^1.
  Mobius inverse() const { return {d, -b, -c, a}; }
};

/// Candidate coordinate changes tried in a fixed order: the identity, then
/// z -> 1/z, and z -> (t z + 1)/z for t = 1, -1, 2, -2, ... .
/// The k-th candidate sends infinity to a distinct point.
inline Mobius mobius_candidate(std::size_t k) {
  if (k == 0) return {1, 0, 0, 1};
  if (k == 1) return {0, 1, 1, 0};
  long step = static_cast<long>((k - 2) / 2) + 1;
  long t = (k % 2 == 0) ? step : -step;
  return {Integer(t), 1, 1, 0};
}

/// The conjugate phi^-1 o f o phi.
inline RationalMap conjugate(const RationalMap& f, const Mobius& phi) {
  if (phi.det() == 0) throw DomainError("singular coordinate change");
  BinaryForm x({phi.a, phi.b}), y({phi.c, phi.d});
  BinaryForm g0 = f.numerator().compose(x, y);
  BinaryForm g1 = f.denominator().compose(x, y);
  Mobius inv = phi.inverse();
  return RationalMap::trusted(inv.a * g0 + inv.b * g1, inv.c * g0 + inv.d * g1);
}

}  // namespace dynport
