#pragma once

// Exact integer and rational arithmetic shared by every dynport module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dynport {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed textual input (rationals, points, files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's mathematical precondition does not hold.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rpow(const Rational& base, unsigned long e) {
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

/// Nonnegative residue of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer invmod(const Integer& a, const Integer& p) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainError("element not invertible modulo " + p.get_str());
  return r;
}

inline bool is_prime(const Integer& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 50) > 0;
}

/// p-adic valuation of a nonzero integer.
inline unsigned valuation(Integer a, const Integer& p) {
  if (a == 0) throw DomainError("valuation of zero");
  unsigned v = 0;
  while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
    a /= p;
    ++v;
  }
  return v;
}

/// Moebius function.
inline int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("mobius(0)");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

/// Canonical text: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

namespace detail {

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline bool has_leading_zero(std::string_view s) {
  return s.size() > 1 && s.front() == '0';
}

}  // namespace detail

/// Parses "p", "-p" or "p/q" with q > 1 in lowest terms. Anything else,
/// including "+3", "2/4", "3/1" and "-0", is rejected.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  if (!detail::is_digits(num_part) || detail::has_leading_zero(num_part))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer num{std::string(num_part)};
  if (negative && num == 0)
    throw ParseError("malformed rational '" + std::string(text) + "'");
  if (negative) num = -num;
  if (slash == std::string_view::npos) return Rational(num);
  std::string_view den_part = body.substr(slash + 1);
  if (!detail::is_digits(den_part) || detail::has_leading_zero(den_part))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer den{std::string(den_part)};
  if (den <= 1 || gcd(num, den) != 1)
    throw ParseError("rational '" + std::string(text) +
                     "' is not in lowest terms");
  return make_rational(num, den);
}

/// Parses a signed decimal integer without leading zeros.
inline Integer parse_integer(std::string_view text) {
  Rational q = parse_rational(text);
  if (q.get_den() != 1)
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  return q.get_num();
}

/// Content (nonnegative gcd) of a list of integers; 0 for the zero list.
inline Integer content(const std::vector<Integer>& coeffs) {
  Integer g = 0;
  for (const auto& c : coeffs) g = gcd(g, c);
  return g;
}

}  // namespace dynport
