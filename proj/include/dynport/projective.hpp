#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "dynport/arith.hpp"

namespace dynport {

/// A point of P^1(Q) in primitive integer coordinates (x : y), with y > 0,
/// or (1 : 0) for the point at infinity.
class ProjectivePoint {
 public:
  ProjectivePoint(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_ == 0 && y_ == 0) throw DomainError("(0,0) is not a projective point");
    Integer g = gcd(x_, y_);
    x_ /= g;
    y_ /= g;
    if (y_ < 0 || (y_ == 0 && x_ < 0)) {
      x_ = -x_;
      y_ = -y_;
    }
  }

  static ProjectivePoint infinity() { return {1, 0}; }
  static ProjectivePoint affine(const Rational& z) {
    return {z.get_num(), z.get_den()};
  }

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  bool is_infinity() const { return y_ == 0; }

  /// Affine coordinate x/y; throws at infinity.
  Rational affine_value() const {
    if (is_infinity()) throw DomainError("point at infinity has no affine value");
    return make_rational(x_, y_);
  }

  /// Same point after reduction modulo p (both assumed primitive).
  bool congruent_mod(const ProjectivePoint& o, const Integer& p) const {
    Integer cross = x_ * o.y_ - y_ * o.x_;
    return mod(cross, p) == 0;
  }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (auto c = cmp(a.x_, b.x_); c != 0) return c <=> 0;
    return cmp(a.y_, b.y_) <=> 0;
  }

 private:
  Integer x_, y_;
};

/// "inf", "p" or "p/q".
inline std::string to_string(const ProjectivePoint& p) {
  if (p.is_infinity()) return "inf";
  return to_string(p.affine_value());
}

inline std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
  return os << to_string(p);
}

}  // namespace dynport
