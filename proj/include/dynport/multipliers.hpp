#pragma once

// Multiplier spectra of periodic points over Q, computed without splitting
// fields: the multipliers of the formal period-n points are the
// eigenvalues of multiplication by (f^n)' on Q[z] / (Phi*_n).

#include <cstddef>
#include <optional>
#include <vector>

#include "dynport/dynamics.hpp"
#include "dynport/polynomial.hpp"
#include "dynport/rational_map.hpp"

namespace dynport {

struct MultiplierData {
  unsigned n;
  QPoly poly;                               // monic, roots = multipliers
  std::vector<Rational> symmetric_functions;  // sigma_1 .. sigma_deg
};

namespace detail {

using QMatrix = std::vector<std::vector<Rational>>;

/// Characteristic polynomial det(x I - M) by reduction to Hessenberg form.
inline QPoly charpoly(QMatrix h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const Rational pivot = h[m][m - 1];
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h[r][m - 1] == 0) continue;
      Rational u = h[r][m - 1] / pivot;
      for (std::size_t c = 0; c < n; ++c) h[r][c] -= u * h[m][c];
      for (std::size_t c = 0; c < n; ++c) h[c][m] += u * h[c][r];
    }
  }
  // p_k = det of the leading k x k block of (x I - H).
  std::vector<QPoly> p{QPoly::constant(1)};
  const QPoly x = QPoly::monomial(1, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    QPoly next = (x - QPoly::constant(h[k - 1][k - 1])) * p[k - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h[k - i][k - i - 1];
      next = next - (t * h[k - i - 1][k - 1]) * p[k - i - 1];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

/// Matrix of multiplication by u on Q[z] / (m) in the basis 1, z, ...
inline QMatrix multiplication_matrix(const QPoly& u, const QPoly& m) {
  const std::size_t n = static_cast<std::size_t>(m.degree());
  QMatrix out(n, std::vector<Rational>(n, Rational(0)));
  QPoly col = u % m;
  const QPoly z = QPoly::monomial(1, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out[i][j] = col.coeff(i);
    col = (z * col) % m;
  }
  return out;
}

/// Trace of multiplication by u on Q[z] / (m): the sum of u over the
/// roots of m, with multiplicity.
inline Rational trace_mod(const QPoly& u, const QPoly& m) {
  auto mat = multiplication_matrix(u, m);
  Rational t = 0;
  for (std::size_t i = 0; i < mat.size(); ++i) t += mat[i][i];
  return t;
}

/// The period-n data after a coordinate change moving the formal period-n
/// points off infinity: the affine dynatomic polynomial and the residue
/// class of (g^n)' modulo it.
struct AffinePeriodicData {
  QPoly dynatomic;
  QPoly derivative;
};

inline AffinePeriodicData affine_periodic_data(const RationalMap& f, unsigned n,
                                               std::size_t degree_cap) {
  const BinaryForm phi = dynatomic_polynomial(f, n, degree_cap);
  for (std::size_t k = 0;; ++k) {
    const Mobius mob = mobius_candidate(k);
    if (phi(mob(ProjectivePoint::infinity())) == 0) continue;
    const RationalMap g = conjugate(f, mob);
    const RationalMap gn = n == 1 ? g : iterate(g, n, degree_cap);
    const QPoly dyn = dynatomic_polynomial(g, n, degree_cap).dehomogenize();
    const QPoly a = gn.numerator().dehomogenize();
    const QPoly b = gn.denominator().dehomogenize();
    const QPoly w = a.derivative() * b - a * b.derivative();
    const QPoly h = (w * inverse_mod(b * b, dyn)) % dyn;
    return {dyn, h};
  }
}

}  // namespace detail

/// The monic polynomial whose roots are the multipliers of the points of
/// formal period n, with multiplicity.
inline MultiplierData multiplier_polynomial(const RationalMap& f, unsigned n,
                                            std::size_t degree_cap = kDefaultDegreeCap) {
  if (n == 0) throw DomainError("period must be positive");
  auto data = detail::affine_periodic_data(f, n, degree_cap);
  QPoly poly = detail::charpoly(detail::multiplication_matrix(data.derivative, data.dynatomic));
  MultiplierData out{n, poly, {}};
  const long deg = poly.degree();
  for (long k = 1; k <= deg; ++k) {
    Rational c = poly.coeff(static_cast<std::size_t>(deg - k));
    out.symmetric_functions.push_back(k % 2 ? Rational(-c) : c);
  }
  return out;
}

/// (s1, s2): the first two elementary symmetric functions of the fixed
/// point multipliers of a quadratic map.
inline std::pair<Rational, Rational> milnor_coordinates(const RationalMap& f) {
  if (f.degree() != 2) throw DomainError("Milnor coordinates need a degree 2 map");
  auto data = multiplier_polynomial(f, 1);
  return {data.symmetric_functions.at(0), data.symmetric_functions.at(1)};
}

/// Sum over fixed points of lambda^k / (1 - lambda), k in {0, 1}; nullopt
/// when some fixed point has multiplier 1.
inline std::optional<Rational> ueda_sum(const RationalMap& f, unsigned k) {
  if (k > 1) throw DomainError("ueda_sum supports k = 0 and k = 1");
  auto data = detail::affine_periodic_data(f, 1, kDefaultDegreeCap);
  const QPoly one_minus = QPoly::constant(1) - data.derivative;
  if (gcd(one_minus, data.dynatomic).degree() > 0) return std::nullopt;
  QPoly u = inverse_mod(one_minus, data.dynatomic);
  if (k == 1) u = (u * data.derivative) % data.dynatomic;
  return detail::trace_mod(u, data.dynatomic);
}

struct CubicFamilyMember {
  RationalMap map;
  Rational resultant;  // of the forms with the given coefficients
  Rational fourth_fixed_multiplier;
};

/// f = (a z^3 + b z^2) / ((3a + 2b) z - (2a + b)), which fixes 0, 1 and
/// infinity with multiplicity 2; its fourth fixed point is 2 + b/a.
inline CubicFamilyMember example_10_3_family(const Rational& a, const Rational& b) {
  if (a == 0) throw DomainError("degenerate parameters: a = 0");
  const std::vector<Rational> num{a, b, 0, 0};
  const std::vector<Rational> den{0, 0, 3 * a + 2 * b, -(2 * a + b)};
  Integer l = 1;
  for (const auto& c : num) l = lcm(l, c.get_den());
  for (const auto& c : den) l = lcm(l, c.get_den());
  std::vector<Integer> ni, di;
  for (const auto& c : num) ni.push_back(Rational(c * l).get_num());
  for (const auto& c : den) di.push_back(Rational(c * l).get_num());
  Integer res = resultant(BinaryForm(ni), BinaryForm(di));
  if (res == 0) throw DomainError("degenerate parameters: resultant vanishes");
  Rational scaled = make_rational(res, ipow(l, 6));
  RationalMap f = RationalMap::from_rationals(num, den);
  Rational fourth = 2 + b / a;
  return {f, scaled, multiplier(f, ProjectivePoint::affine(fourth))};
}

struct SurfaceEvaluation {
  Rational surface_value;    // S(alpha, beta, gamma)
  Rational symmetric_value;  // X^2 - XY + Y^2 - YZ - 2X + 1 at (e1, e2, e3)
  bool on_surface;
  bool symmetric_vanishes;
};

/// Evaluates the surface of fixed-point triples for the doubly critical
/// 3-cycle family and its rewrite in elementary symmetric functions.
inline SurfaceEvaluation example_10_5_surface(const Rational& al, const Rational& be, const Rational& ga) {
  if (al == be || al == ga || be == ga) throw DomainError("fixed points must be distinct");
  for (const auto* t : {&al, &be, &ga})
    if (*t == 0 || *t == 1) throw DomainError("fixed points must avoid 0 and 1");
  const Rational a2 = al * al, b2 = be * be, g2 = ga * ga;
  Rational s = al * b2 * g2 + a2 * be * g2 + a2 * b2 * ga;
  s -= a2 * b2 + a2 * g2 + b2 * g2;
  s -= 2 * (a2 * be * ga + al * b2 * ga + al * be * g2);
  s += 3 * al * be * ga + a2 * be + a2 * ga + b2 * ga + al * b2 + al * g2 + be * g2;
  s -= a2 + b2 + g2;
  s -= 2 * (al * be + al * ga + be * ga);
  s += 2 * (al + be + ga) - 1;
  const Rational x = al + be + ga, y = al * be + al * ga + be * ga, z = al * be * ga;
  const Rational sym = x * x - x * y + y * y - y * z - 2 * x + 1;
  return {s, sym, s == 0, sym == 0};
}

}  // namespace dynport
