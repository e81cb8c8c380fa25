#pragma once

// Binary forms over Z: sum_i c[i] X^(D-i) Y^i, coefficient of X^D first.
// The degree D is carried explicitly, so leading zero coefficients encode
// roots at infinity.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dynport/arith.hpp"
#include "dynport/polynomial.hpp"
#include "dynport/projective.hpp"

namespace dynport {

class BinaryForm {
 public:
  BinaryForm() : coeffs_(1, Integer(0)) {}
  explicit BinaryForm(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("a binary form needs at least one coefficient");
  }
  static BinaryForm zero(std::size_t degree) {
    return BinaryForm(std::vector<Integer>(degree + 1, Integer(0)));
  }
  /// The linear form vanishing at P: y X - x Y.
  static BinaryForm linear_vanishing_at(const ProjectivePoint& p) {
    return BinaryForm({p.y(), -p.x()});
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  Integer operator()(const Integer& x, const Integer& y) const {
    // Horner in X with Y powers folded in.
    Integer acc = 0, ypow = 1;
    std::vector<Integer> ypows(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      ypows[i] = ypow;
      ypow *= y;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) acc = acc * x + coeffs_[i] * ypows[i];
    return acc;
  }
  Integer operator()(const ProjectivePoint& p) const { return (*this)(p.x(), p.y()); }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BinaryForm(std::move(out));
  }
  friend BinaryForm operator*(const Integer& s, const BinaryForm& a) {
    std::vector<Integer> out(a.coeffs_);
    for (auto& c : out) c *= s;
    return BinaryForm(std::move(out));
  }
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) throw DomainError("adding forms of different degree");
    std::vector<Integer> out(a.coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
    return BinaryForm(std::move(out));
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    return a + Integer(-1) * b;
  }

  BinaryForm pow(unsigned e) const {
    BinaryForm r({Integer(1)});
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  BinaryForm d_dx() const {
    const std::size_t D = degree();
    if (D == 0) return BinaryForm({Integer(0)});
    std::vector<Integer> out(D);
    for (std::size_t i = 0; i < D; ++i) out[i] = coeffs_[i] * static_cast<unsigned long>(D - i);
    return BinaryForm(std::move(out));
  }
  BinaryForm d_dy() const {
    const std::size_t D = degree();
    if (D == 0) return BinaryForm({Integer(0)});
    std::vector<Integer> out(D);
    for (std::size_t i = 1; i <= D; ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return BinaryForm(std::move(out));
  }

  Integer content() const { return dynport::content(coeffs_); }

  /// Divides out the content and makes the first nonzero coefficient
  /// positive. The zero form is returned unchanged.
  BinaryForm normalized() const {
    Integer g = content();
    if (g == 0) return *this;
    std::vector<Integer> out(coeffs_);
    for (auto& c : out) c /= g;
    for (const auto& c : out) {
      if (c == 0) continue;
      if (c < 0)
        for (auto& x : out) x = -x;
      break;
    }
    return BinaryForm(std::move(out));
  }

  /// Dehomogenize at Y = 1: coefficient of z^(D-i) is c[i].
  QPoly dehomogenize() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      v[coeffs_.size() - 1 - i] = Rational(coeffs_[i]);
    return QPoly(std::move(v));
  }

  /// Substitute X -> g0, Y -> g1 (forms of a common degree).
  BinaryForm compose(const BinaryForm& g0, const BinaryForm& g1) const {
    const std::size_t D = degree();
    std::vector<BinaryForm> p0(D + 1), p1(D + 1);
    p0[0] = BinaryForm({Integer(1)});
    p1[0] = BinaryForm({Integer(1)});
    for (std::size_t k = 1; k <= D; ++k) {
      p0[k] = p0[k - 1] * g0;
      p1[k] = p1[k - 1] * g1;
    }
    BinaryForm acc = BinaryForm::zero(D * g0.degree());
    for (std::size_t i = 0; i <= D; ++i) {
      if (coeffs_[i] == 0) continue;
      acc = acc + coeffs_[i] * (p0[D - i] * p1[i]);
    }
    return acc;
  }

 private:
  std::vector<Integer> coeffs_;
};

/// Exact quotient a / b over Z, or nullopt when b does not divide a.
inline std::optional<BinaryForm> exact_divide(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw DomainError("division by the zero form");
  if (b.degree() > a.degree()) {
    if (a.is_zero()) return BinaryForm::zero(0);
    return std::nullopt;
  }
  const std::size_t qdeg = a.degree() - b.degree();
  std::size_t s = 0;
  while (b[s] == 0) ++s;
  for (std::size_t i = 0; i < s; ++i)
    if (a[i] != 0) return std::nullopt;
  std::vector<Integer> q(qdeg + 1, Integer(0));
  for (std::size_t i = 0; i <= qdeg; ++i) {
    Integer acc = a[i + s];
    for (std::size_t j = 1; j <= i && s + j <= b.degree(); ++j) acc -= b[s + j] * q[i - j];
    if (!mpz_divisible_p(acc.get_mpz_t(), b[s].get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), acc.get_mpz_t(), b[s].get_mpz_t());
  }
  BinaryForm quotient(std::move(q));
  if (!(quotient * b == a)) return std::nullopt;
  return quotient;
}

/// Order of vanishing of a nonzero form at P.
inline unsigned root_multiplicity(BinaryForm a, const ProjectivePoint& p) {
  if (a.is_zero()) throw DomainError("root multiplicity of the zero form");
  const BinaryForm line = BinaryForm::linear_vanishing_at(p);
  unsigned m = 0;
  while (a.degree() > 0 && a(p) == 0) {
    auto q = exact_divide(a, line);
    if (!q) break;
    a = std::move(*q);
    ++m;
  }
  return m;
}

/// Order of vanishing of a form at P after reduction modulo a prime p.
/// Returns nullopt when the reduced form is identically zero.
inline std::optional<unsigned> root_multiplicity_mod(const BinaryForm& a,
                                                     const ProjectivePoint& pt,
                                                     const Integer& p) {
  std::vector<Integer> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(a[i], p);
  auto all_zero = [](const std::vector<Integer>& v) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  };
  if (all_zero(c)) return std::nullopt;
  // Divide by l = y X - x Y repeatedly over F_p.
  const Integer l0 = mod(pt.y(), p), l1 = mod(-pt.x(), p);
  const bool lead_nonzero = l0 != 0;
  const Integer inv = invmod(lead_nonzero ? l0 : l1, p);
  unsigned m = 0;
  while (c.size() > 1) {
    std::vector<Integer> q(c.size() - 1, Integer(0));
    std::vector<Integer> r(c);
    if (lead_nonzero) {
      for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = mod(r[i] * inv, p);
        r[i] = 0;
        r[i + 1] = mod(r[i + 1] - q[i] * l1, p);
      }
      if (r.back() != 0) break;
    } else {
      // l = l1 * Y: divisible iff the X^D coefficient vanishes.
      if (r[0] != 0) break;
      for (std::size_t i = 0; i < q.size(); ++i) q[i] = mod(r[i + 1] * inv, p);
    }
    c = std::move(q);
    ++m;
  }
  return m;
}

/// Resultant of two forms of equal degree, as the Sylvester determinant
/// with the rows of a above the rows of b.
inline Integer resultant(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw DomainError("resultant needs forms of equal degree");
  const std::size_t d = a.degree();
  if (d == 0) return 1;
  const std::size_t n = 2 * d;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= d; ++j) {
      m[i][i + j] = a[j];
      m[d + i][i + j] = b[j];
    }
  // Bareiss fraction-free elimination.
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  Integer det = m[n - 1][n - 1];
  return sign < 0 ? Integer(-det) : det;
}

namespace detail {

inline int sign_of(const Rational& q) { return sgn(q); }

class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& p) {
    seq_.push_back(p);
    seq_.push_back(p.derivative());
    while (!seq_.back().is_zero()) {
      QPoly r = seq_[seq_.size() - 2] % seq_.back();
      seq_.push_back(-r);
    }
    seq_.pop_back();
  }
  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& q : seq_) {
      int s = sign_of(q(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }
  /// Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
  }

 private:
  std::vector<QPoly> seq_;
};

/// Continued fraction convergents of x.
inline std::vector<Rational> convergents(const Rational& x) {
  std::vector<Rational> out;
  Integer h_prev = 0, h = 1, k_prev = 1, k = 0;
  Integer num = x.get_num(), den = x.get_den();
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    out.push_back(make_rational(h, k));
    Integer r = num - a * den;
    num = den;
    den = r;
  }
  return out;
}

/// Rational roots of a squarefree polynomial with rational coefficients.
inline std::vector<Rational> rational_roots_squarefree(const QPoly& s) {
  std::vector<Rational> roots;
  if (s.degree() <= 0) return roots;
  if (s.degree() == 1) {
    roots.push_back(-s.coeff(0) / s.coeff(1));
    return roots;
  }
  // Scale to a primitive integer polynomial to bound root denominators.
  Integer den_lcm = 1;
  for (const auto& c : s.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  std::vector<Integer> ints;
  for (const auto& c : s.coeffs()) ints.push_back(Rational(c * den_lcm).get_num());
  Integer cont = content(ints);
  Integer lead = abs(ints.back() / cont);

  Rational bound = 0;
  for (long i = 0; i < s.degree(); ++i) {
    Rational r = abs(s.coeff(i) / s.leading());
    if (r > bound) bound = r;
  }
  bound += 1;

  SturmSequence sturm(s);
  const Rational tolerance = make_rational(1, 2 * lead * lead);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = sturm.count(a, b);
    if (n == 0) continue;
    if (n > 1) {
      Rational mid = (a + b) / 2;
      stack.emplace_back(a, mid);
      stack.emplace_back(mid, b);
      continue;
    }
    // Exactly one root in (a, b]; refine until a rational root would be
    // a convergent of any point of the interval.
    std::optional<Rational> exact;
    while (!exact) {
      if (s(b) == 0) {
        exact = b;
        break;
      }
      if (b - a < tolerance) break;
      Rational mid = (a + b) / 2;
      if (sturm.count(a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    if (exact) {
      roots.push_back(*exact);
      continue;
    }
    for (const auto& c : convergents((a + b) / 2)) {
      if (c.get_den() > lead) break;
      if (c > a && c <= b && s(c) == 0) {
        roots.push_back(c);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

struct RootWithMultiplicity {
  ProjectivePoint point;
  unsigned multiplicity;
};

/// All roots of a nonzero form in P^1(Q), with multiplicities, sorted
/// with finite roots in increasing order followed by infinity.
inline std::vector<RootWithMultiplicity> rational_roots(const BinaryForm& a) {
  if (a.is_zero()) throw DomainError("roots of the zero form");
  std::vector<RootWithMultiplicity> out;
  QPoly finite = a.dehomogenize();
  for (const auto& r : detail::rational_roots_squarefree(squarefree_part(finite))) {
    ProjectivePoint p = ProjectivePoint::affine(r);
    out.push_back({p, root_multiplicity(a, p)});
  }
  if (a[0] == 0) {
    ProjectivePoint inf = ProjectivePoint::infinity();
    out.push_back({inf, root_multiplicity(a, inf)});
  }
  return out;
}

}  // namespace dynport
