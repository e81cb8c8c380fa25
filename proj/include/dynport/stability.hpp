#pragma once

// Stability of marked configurations (f, P_1, ..., P_n) under SL_{N+1},
// decided from the point-count inequalities C(L) <= D_eps(L) over proper
// linear subspaces L. The sufficient (eps = 0) and necessary (eps = m_0)
// bands give three-valued verdicts.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynport/arith.hpp"
#include "dynport/projective.hpp"

namespace dynport {

/// A proper linear subspace, described by its dimension and the indices
/// (0-based) of the marked points it contains.
struct Subspace {
  unsigned dim = 0;
  std::vector<std::size_t> points;
  std::optional<ProjectivePoint> location;  // the point itself when N = 1
};

struct StabilityInstance {
  unsigned dim = 1;  // N
  unsigned degree = 2;
  std::vector<Integer> weights;  // m_0, m_1, ..., m_n
  std::optional<std::vector<ProjectivePoint>> points;  // N = 1 only
  std::vector<Subspace> subspaces;                     // abstract incidence data
  std::optional<std::vector<bool>> fixed_point_flags;  // f(P_i) = P_i

  std::size_t marked() const { return weights.empty() ? 0 : weights.size() - 1; }
  Integer m0() const { return weights.at(0); }
  Integer m_sigma() const {
    Integer s = 0;
    for (std::size_t i = 1; i < weights.size(); ++i) s += weights[i];
    return s;
  }
};

enum class Trichotomy { kCertifiedYes, kCertifiedNo, kIndeterminate };

inline const char* to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::kCertifiedYes: return "certified-yes";
    case Trichotomy::kCertifiedNo: return "certified-no";
    case Trichotomy::kIndeterminate: return "indeterminate";
  }
  return "";
}

struct Certificate {
  Trichotomy value = Trichotomy::kIndeterminate;
  std::string criterion;            // set for certified-yes
  std::optional<Subspace> witness;  // violating subspace for certified-no
};

struct StabilityVerdict {
  Certificate semistable;
  Certificate stable;
};

/// One dimension-0 candidate per distinct marked point.
inline std::vector<Subspace> subspace_candidates(const std::vector<ProjectivePoint>& points) {
  std::map<ProjectivePoint, std::vector<std::size_t>> groups;
  std::vector<ProjectivePoint> order;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [it, fresh] = groups.try_emplace(points[i]);
    if (fresh) order.push_back(points[i]);
    it->second.push_back(i);
  }
  std::vector<Subspace> out;
  for (const auto& pt : order) out.push_back({0, groups[pt], pt});
  return out;
}

inline void validate(const StabilityInstance& inst) {
  if (inst.dim < 1) throw DomainError("dimension must be at least 1");
  if (inst.degree < 2) throw DomainError("degree must be at least 2");
  if (inst.weights.empty()) throw DomainError("weights must contain m_0");
  for (const auto& w : inst.weights)
    if (w < 0) throw DomainError("weights must be nonnegative");
  const std::size_t n = inst.marked();
  if (inst.points) {
    if (inst.dim != 1) throw DomainError("explicit points are only supported on the line");
    if (!inst.subspaces.empty()) throw DomainError("give either points or subspaces, not both");
    if (inst.points->size() != n) throw DomainError("number of points does not match the weights");
  }
  for (const auto& s : inst.subspaces) {
    if (s.dim >= inst.dim) throw DomainError("subspace dimension must lie in [0, N-1]");
    for (auto i : s.points)
      if (i >= n) throw DomainError("subspace refers to an unknown marked point");
  }
  if (inst.fixed_point_flags && inst.fixed_point_flags->size() != n)
    throw DomainError("fixed_point_flags must have one entry per marked point");
}

/// C(L) and D_eps(L).
inline std::pair<Rational, Rational> cd_values(const StabilityInstance& inst, const Subspace& l,
                                               const Integer& eps) {
  if (l.dim >= inst.dim) throw DomainError("L must be a proper subspace");
  Rational c = 0;
  for (auto i : l.points) c += inst.weights.at(i + 1);
  const Integer codim = inst.dim - l.dim;
  Rational d = make_rational(inst.m_sigma() * (l.dim + 1) + inst.m0() * (inst.degree - 1) * codim,
                             inst.dim + 1) +
               eps;
  return {c, d};
}

/// All subspaces the inequalities are checked on: the marked points (or
/// the supplied incidence data) plus one empty subspace per dimension.
inline std::vector<Subspace> stability_candidates(const StabilityInstance& inst) {
  std::vector<Subspace> out =
      inst.points ? subspace_candidates(*inst.points) : inst.subspaces;
  for (unsigned k = 0; k < inst.dim; ++k) out.push_back({k, {}, std::nullopt});
  return out;
}

namespace detail {

inline bool distinct_points(const std::vector<ProjectivePoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return false;
  return true;
}

inline bool proportional_to_ones(const std::vector<Integer>& w) {
  for (const auto& x : w)
    if (x != w.front() || x == 0) return false;
  return true;
}

// First subspace where C <= D_eps (strict: C < D_eps) fails.
inline std::optional<Subspace> violation(const StabilityInstance& inst,
                                         const std::vector<Subspace>& cands, const Integer& eps,
                                         bool strict) {
  for (const auto& l : cands) {
    auto [c, d] = cd_values(inst, l, eps);
    if (strict ? !(c < d) : !(c <= d)) return l;
  }
  return std::nullopt;
}

}  // namespace detail

inline StabilityVerdict verdict(const StabilityInstance& inst) {
  validate(inst);
  const auto cands = stability_candidates(inst);
  const Integer m0 = inst.m0();
  StabilityVerdict v;

  auto decide = [&](Certificate& cert, bool strict) {
    if (!detail::violation(inst, cands, 0, strict)) {
      cert.value = Trichotomy::kCertifiedYes;
      cert.criterion = "sufficient-inequalities";
    } else if (auto bad = detail::violation(inst, cands, m0, strict)) {
      cert.value = Trichotomy::kCertifiedNo;
      cert.witness = *bad;
    }
  };
  decide(v.semistable, false);
  decide(v.stable, true);

  // Global weight criterion: m_0 (d - 1) against m_Sigma.
  const Integer lhs = m0 * (inst.degree - 1), rhs = inst.m_sigma();
  if (lhs >= rhs && v.semistable.value == Trichotomy::kCertifiedYes)
    v.semistable.criterion = "global-weight-criterion";
  if (lhs > rhs && v.stable.value == Trichotomy::kCertifiedYes)
    v.stable.criterion = "global-weight-criterion";

  // Point configurations: with m_0 = 0 the two bands coincide.
  bool mumford = m0 == 0 && inst.marked() > 0;
  for (std::size_t i = 1; i < inst.weights.size(); ++i)
    if (inst.weights[i] != 1) mumford = false;
  if (mumford) {
    if (v.semistable.value == Trichotomy::kCertifiedYes) v.semistable.criterion = "mumford-points";
    if (v.stable.value == Trichotomy::kCertifiedYes) v.stable.criterion = "mumford-points";
  }

  // Distinct points on the line with weights proportional to (1, ..., 1):
  // the only unstable case is a quadratic map with one marked fixed point.
  if (inst.dim == 1 && inst.points && detail::distinct_points(*inst.points) &&
      detail::proportional_to_ones(inst.weights) && inst.degree == 2 && inst.marked() == 1 &&
      v.stable.value == Trichotomy::kIndeterminate && inst.fixed_point_flags) {
    if ((*inst.fixed_point_flags)[0]) {
      v.stable.value = Trichotomy::kCertifiedNo;
      v.stable.witness = cands.front();
      v.stable.criterion.clear();
    } else {
      v.stable.value = Trichotomy::kCertifiedYes;
      v.stable.criterion = "quadratic-marked-point-not-fixed";
    }
  }
  return v;
}

}  // namespace dynport
