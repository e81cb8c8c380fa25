#pragma once

// Periodic-point counts, realizability tests and dimension formulas for
// moduli of maps with a marked portrait.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynport/arith.hpp"
#include "dynport/morphism.hpp"
#include "dynport/portrait.hpp"

namespace dynport {

/// nu_d^N(n) = sum_{k | n} mu(n/k) sum_{j=0}^N d^(jk).
inline Integer nu(unsigned long d, unsigned long dim, unsigned long n) {
  if (d < 2 || dim < 1 || n < 1) throw DomainError("nu needs d >= 2, N >= 1, n >= 1");
  Integer total = 0;
  for (auto k : divisors(n)) {
    int mu = mobius(n / k);
    if (mu == 0) continue;
    Integer inner = 0;
    for (unsigned long j = 0; j <= dim; ++j) inner += ipow(d, j * k);
    total += mu * inner;
  }
  return total;
}

/// Number of points of preperiodic type (m, n), m >= 0.
inline Integer nu_pre(unsigned long d, unsigned long dim, unsigned long m, unsigned long n) {
  Integer base = nu(d, dim, n);
  if (m == 0) return base;
  return ipow(d, dim * (m - 1)) * (ipow(d, dim) - 1) * base;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// dim End_d^N = (N+1) binom(N+d, d) - 1.
inline Integer dim_end(unsigned long d, unsigned long dim) {
  return (dim + 1) * binomial(dim + d, d) - 1;
}

/// dim M_d^N = dim End_d^N - dim SL_{N+1}.
inline Integer dim_moduli(unsigned long d, unsigned long dim) {
  return dim_end(d, dim) - ((dim + 1) * (dim + 1) - 1);
}

/// D_P <= d^N and C_P(n) <= nu_d^N(n) for all n <= #V. For unweighted
/// portraits this is equivalent to nonemptiness in characteristic 0.
inline bool unweighted_nonempty(const Portrait& p, unsigned long d, unsigned long dim) {
  if (p.is_weighted()) throw DomainError("unweighted_nonempty needs an unweighted portrait");
  auto s = portrait_statistics(p);
  if (Integer(static_cast<unsigned long>(s.max_preimages)) > ipow(d, dim)) return false;
  for (const auto& [n, count] : s.period_counts)
    if (Integer(static_cast<unsigned long>(count)) > nu(d, dim, n)) return false;
  return true;
}

struct WeightedConditions {
  bool preimages;                     // (I)
  bool ramification;                  // (II)
  std::map<std::size_t, bool> cycles;  // (III_n), n = 1..#V
  bool overall;
};

inline WeightedConditions weighted_necessary_conditions(const Portrait& p, unsigned long d) {
  if (d < 2) throw DomainError("degree must be at least 2");
  WeightedConditions c{true, true, {}, true};
  std::vector<unsigned long long> incoming(p.size(), 0);
  unsigned long long ram = 0;
  for (Vertex v : p.domain()) {
    incoming[p.next(v)] += p.weight(v);
    ram += p.weight(v) - 1;
  }
  for (auto w : incoming)
    if (w > d) c.preimages = false;
  c.ramification = ram <= 2 * d - 2;
  auto s = portrait_statistics(p);
  for (const auto& [n, count] : s.period_counts) {
    bool ok = Integer(static_cast<unsigned long>(count)) <= nu(d, 1, n);
    c.cycles[n] = ok;
    if (!ok) c.overall = false;
  }
  c.overall = c.overall && c.preimages && c.ramification;
  return c;
}

enum class NonemptyVerdict { kEmptyCertified, kNonemptyCertified, kNecessaryConditionsHold };

inline const char* to_string(NonemptyVerdict v) {
  switch (v) {
    case NonemptyVerdict::kEmptyCertified: return "empty-certified";
    case NonemptyVerdict::kNonemptyCertified: return "nonempty-certified";
    case NonemptyVerdict::kNecessaryConditionsHold: return "necessary-conditions-hold";
  }
  return "";
}

struct DimensionReport {
  std::optional<Integer> dim_end;     // of End_d^N[P]
  std::optional<Integer> dim_moduli;  // of M_d^N[P]
  NonemptyVerdict verdict;
  std::vector<std::string> caveats;
};

inline bool is_perfect_square(unsigned long d) { return mpz_perfect_square_p(Integer(d).get_mpz_t()); }

/// Expected dimensions. Unweighted portraits (any N) get certified
/// verdicts; weighted portraits (N = 1 only) get necessary-only verdicts
/// and the non-Lattes dimension formula.
inline DimensionReport expected_dimension(const Portrait& p, unsigned long d, unsigned long dim) {
  if (d < 2 || dim < 1) throw DomainError("expected_dimension needs d >= 2, N >= 1");
  const Integer group_dim = (dim + 1) * (dim + 1) - 1;
  const Integer free_points = static_cast<unsigned long>(zeta(p));
  DimensionReport r{};
  if (!p.is_weighted()) {
    if (!unweighted_nonempty(p, d, dim)) {
      r.verdict = NonemptyVerdict::kEmptyCertified;
      return r;
    }
    r.verdict = NonemptyVerdict::kNonemptyCertified;
    r.dim_end = dim_end(d, dim) + dim * free_points;
    r.dim_moduli = *r.dim_end - group_dim;
    return r;
  }
  if (dim != 1) throw DomainError("weighted dimension formula is only available for N = 1");
  if (!weighted_necessary_conditions(p, d).overall) {
    r.verdict = NonemptyVerdict::kEmptyCertified;
    return r;
  }
  unsigned long long ram = 0;
  for (Vertex v : p.domain()) ram += p.weight(v) - 1;
  r.verdict = NonemptyVerdict::kNecessaryConditionsHold;
  r.dim_moduli = Integer(2 * d - 2) - Integer(static_cast<unsigned long>(ram)) + free_points;
  r.dim_end = *r.dim_moduli + group_dim;
  r.caveats.push_back("necessary conditions only: nonemptiness is not certified for weighted portraits");
  r.caveats.push_back("dimension refers to the non-Lattes locus");
  if (is_perfect_square(d))
    r.caveats.push_back("degree is a perfect square: flexible Lattes maps may exist and are not detected");
  return r;
}

struct FiberImageDims {
  Integer fiber_dim;
  Integer image_codim;
};

/// Fiber dimension and image codimension of the forgetful map from maps
/// marked by P to maps marked by the subportrait P'.
inline FiberImageDims fiber_image_dims(const Portrait& p_prime, const Portrait& p, unsigned long d,
                                       unsigned long dim) {
  if (p.is_weighted() || p_prime.is_weighted())
    throw DomainError("fiber dimensions need unweighted portraits");
  if (!is_subportrait(p_prime, p)) throw DomainError("P' is not a subportrait of P");
  if (!unweighted_nonempty(p, d, dim)) throw DomainError("moduli space of the larger portrait is empty");
  unsigned long meeting = 0;
  for (const auto& comp : components(p)) {
    if (component_has_cycle(p, comp)) continue;
    for (Vertex v : comp)
      if (p_prime.index(p.name(v))) {
        ++meeting;
        break;
      }
  }
  const Integer n = meeting;
  return {dim * (Integer(static_cast<unsigned long>(zeta(p))) - n),
          dim * (Integer(static_cast<unsigned long>(zeta(p_prime))) - n)};
}

}  // namespace dynport
