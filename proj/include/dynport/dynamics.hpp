#pragma once

// Local and periodic-point data of a rational map: multiplicities, the
// critical divisor, dynatomic forms, orbit types and multipliers.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "dynport/arith.hpp"
#include "dynport/forms.hpp"
#include "dynport/rational_map.hpp"

namespace dynport {

/// The degree-d form q1 f0 - q0 f1 for Q = (q0 : q1); its zeros are the
/// preimages of Q, counted with multiplicity.
inline BinaryForm fiber_form(const RationalMap& f, const ProjectivePoint& q) {
  return q.y() * f.numerator() - q.x() * f.denominator();
}

/// e_f(P): the order of vanishing at P of the fiber form through f(P).
inline unsigned multiplicity(const RationalMap& f, const ProjectivePoint& p) {
  return root_multiplicity(fiber_form(f, f(p)), p);
}

struct CriticalDivisor {
  BinaryForm wronskian;  // degree 2d - 2, primitive
  std::vector<RootWithMultiplicity> rational_roots;
};

inline BinaryForm wronskian(const RationalMap& f) {
  const BinaryForm& a = f.numerator();
  const BinaryForm& b = f.denominator();
  return (a.d_dx() * b.d_dy() - a.d_dy() * b.d_dx()).normalized();
}

inline CriticalDivisor critical_divisor(const RationalMap& f) {
  BinaryForm w = wronskian(f);
  return {w, rational_roots(w)};
}

namespace detail {

inline const BinaryForm& form_x() {
  static const BinaryForm x({Integer(1), Integer(0)});
  return x;
}
inline const BinaryForm& form_y() {
  static const BinaryForm y({Integer(0), Integer(1)});
  return y;
}

/// Y f0 - X f1 for the map [f0 : f1]; vanishes exactly at fixed points.
inline BinaryForm fixed_point_form(const RationalMap& f) {
  return form_y() * f.numerator() - form_x() * f.denominator();
}

}  // namespace detail

/// Phi*_n: the product over k | n of (Y X_k - X Y_k)^mu(n/k), where
/// [X_k : Y_k] is the k-th iterate, computed by exact division.
inline BinaryForm dynatomic_polynomial(const RationalMap& f, unsigned n,
                                       std::size_t degree_cap = kDefaultDegreeCap) {
  if (n == 0) throw DomainError("period must be positive");
  BinaryForm num({Integer(1)}), den({Integer(1)});
  for (unsigned long k : divisors(n)) {
    int mu = mobius(n / k);
    if (mu == 0) continue;
    BinaryForm factor = detail::fixed_point_form(iterate(f, static_cast<unsigned>(k), degree_cap));
    if (mu > 0)
      num = num * factor;
    else
      den = den * factor;
  }
  auto q = exact_divide(num, den);
  if (!q) throw DomainError("internal error: dynatomic quotient is not exact");
  return q->normalized();
}

/// Orbit type of a point: preperiod m and period n, or escape when no
/// point repeats within max_steps evaluations.
struct OrbitType {
  bool escapes;
  std::size_t preperiod;
  std::size_t period;
};

inline OrbitType period_of_point(const RationalMap& f, const ProjectivePoint& p,
                                 std::size_t max_steps) {
  std::map<ProjectivePoint, std::size_t> seen;
  ProjectivePoint cur = p;
  seen.emplace(cur, 0);
  for (std::size_t step = 1; step <= max_steps; ++step) {
    cur = f(cur);
    auto [it, fresh] = seen.emplace(cur, step);
    if (!fresh) return {false, it->second, step - it->second};
  }
  return {true, 0, 0};
}

/// Phi*_n(P) = 0.
inline bool formal_period(const RationalMap& f, const ProjectivePoint& p, unsigned n,
                          std::size_t degree_cap = kDefaultDegreeCap) {
  return dynatomic_polynomial(f, n, degree_cap)(p) == 0;
}

/// Derivative of the affine map z -> A(z)/B(z) at a finite point z with
/// B(z) != 0.
inline Rational affine_derivative(const RationalMap& f, const Rational& z) {
  QPoly a = f.numerator().dehomogenize();
  QPoly b = f.denominator().dehomogenize();
  Rational bz = b(z);
  if (bz == 0) throw DomainError("point maps to infinity");
  return (a.derivative()(z) * bz - a(z) * b.derivative()(z)) / (bz * bz);
}

/// Multiplier (f^n)'(P) of a point with f^n(P) = P. Points at infinity are
/// handled in the chart z -> 1/z.
inline Rational multiplier(const RationalMap& f, const ProjectivePoint& p, unsigned n = 1,
                           std::size_t degree_cap = kDefaultDegreeCap) {
  RationalMap g = n == 1 ? f : iterate(f, n, degree_cap);
  if (!(g(p) == p)) throw DomainError("point is not periodic with the given period");
  if (!p.is_infinity()) return affine_derivative(g, p.affine_value());
  const Mobius flip{0, 1, 1, 0};
  return affine_derivative(conjugate(g, flip), 0);
}

}  // namespace dynport
