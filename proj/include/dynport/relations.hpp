#pragma once

// Critical relations phi^m(i) = phi^n(j) between critical vertices of one
// component, the minimal generating system S_P and the closure test.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "dynport/critical.hpp"
#include "dynport/portrait.hpp"

namespace dynport {

struct CriticalRelation {
  Vertex i;
  Vertex j;
  std::size_t m;
  std::size_t n;
  friend bool operator==(const CriticalRelation&, const CriticalRelation&) = default;
};

/// phi^k(v), or nullopt once the orbit leaves the domain.
inline std::optional<Vertex> iterate_vertex(const Portrait& p, Vertex v, std::size_t k) {
  for (std::size_t s = 0; s < k; ++s) {
    if (!p.in_domain(v)) return std::nullopt;
    v = p.next(v);
  }
  return v;
}

inline bool realizes(const Portrait& p, const CriticalRelation& r) {
  auto a = iterate_vertex(p, r.i, r.m);
  auto b = iterate_vertex(p, r.j, r.n);
  return a && b && *a == *b;
}

/// Critical vertices grouped by component. Components are ordered by their
/// lexicographically smallest vertex id, critical vertices by id.
inline std::vector<std::vector<Vertex>> labelled_critical_points(const Portrait& p) {
  auto by_name = [&](Vertex a, Vertex b) { return p.name(a) < p.name(b); };
  auto comps = components(p);
  std::sort(comps.begin(), comps.end(), [&](const auto& x, const auto& y) {
    return p.name(*std::min_element(x.begin(), x.end(), by_name)) <
           p.name(*std::min_element(y.begin(), y.end(), by_name));
  });
  std::vector<std::vector<Vertex>> out;
  for (const auto& comp : comps) {
    std::vector<Vertex> crit;
    for (Vertex v : comp)
      if (p.in_domain(v) && p.weight(v) >= 2) crit.push_back(v);
    std::sort(crit.begin(), crit.end(), by_name);
    out.push_back(std::move(crit));
  }
  return out;
}

/// The relation system S_P, following the labelled step-by-step
/// construction: for each component with a cycle, start at its first
/// critical point; in every component, each later critical point
/// contributes one minimal relation to an earlier (or the same) one.
inline std::vector<CriticalRelation> sp_relations(const Portrait& p) {
  if (!is_critically_generated(p)) throw DomainError("portrait is not critically generated");
  const std::size_t horizon = 2 * p.size() + 1;
  std::vector<CriticalRelation> out;
  auto comps = components(p);
  for (const auto& crit : labelled_critical_points(p)) {
    if (crit.empty()) continue;
    // Component of this critical list.
    const auto& comp = *std::find_if(comps.begin(), comps.end(), [&](const auto& c) {
      return std::find(c.begin(), c.end(), crit.front()) != c.end();
    });
    const bool has_cycle = component_has_cycle(p, comp);
    for (std::size_t idx = 0; idx < crit.size(); ++idx) {
      if (idx == 0 && !has_cycle) continue;
      const Vertex i = crit[idx];
      bool done = false;
      for (std::size_t m = 0; m <= horizon && !done; ++m) {
        auto target = iterate_vertex(p, i, m);
        if (!target) break;
        for (std::size_t jdx = 0; jdx <= idx && !done; ++jdx) {
          const Vertex j = crit[jdx];
          const std::size_t n_limit = (jdx == idx) ? m : horizon + 1;
          for (std::size_t n = 0; n < n_limit; ++n) {
            auto w = iterate_vertex(p, j, n);
            if (!w) break;
            if (*w == *target) {
              out.push_back({i, j, m, n});
              done = true;
              break;
            }
          }
        }
      }
      if (!done) throw DomainError("no critical relation found for vertex '" + p.name(i) + "'");
    }
  }
  return out;
}

/// Shift cap for the closure: the longest of (preperiod + 2 period) and
/// escaping orbit lengths, plus #V (#V + 2) so that derivations of any
/// relation with m, n <= 2 #V stay inside the window.
inline std::size_t relation_shift_bound(const Portrait& p) {
  std::size_t base = 0;
  for (Vertex v = 0; v < p.size(); ++v) {
    auto t = preperiodic_type(p, v);
    base = std::max(base, t ? t->preperiod + 2 * t->period : orbit(p, v).size());
  }
  return base + p.size() * (p.size() + 2);
}

/// ((i), m) ~_S ((j), n): union-find over (critical vertex, shift) pairs,
/// applying each relation of S at every shift that stays below the cap and
/// inside the domain. Pairs whose iterates leave the domain are never
/// determined.
inline bool relation_determined(const std::vector<CriticalRelation>& s, const CriticalRelation& r,
                                const Portrait& p) {
  const auto crit = critical_set(p);
  auto slot = [&](Vertex v) -> std::size_t {
    auto it = std::find(crit.begin(), crit.end(), v);
    if (it == crit.end()) throw DomainError("vertex '" + p.name(v) + "' is not critical");
    return static_cast<std::size_t>(it - crit.begin());
  };
  const std::size_t bound = relation_shift_bound(p);
  if (r.m > bound || r.n > bound) throw DomainError("relation exceeds the shift bound");
  slot(r.i);
  slot(r.j);
  if (!iterate_vertex(p, r.i, r.m) || !iterate_vertex(p, r.j, r.n)) return false;
  if (r.i == r.j && r.m == r.n) return true;
  const std::size_t width = bound + 1;
  std::vector<std::size_t> parent(crit.size() * width);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& rel : s) {
    const std::size_t a = slot(rel.i), b = slot(rel.j);
    for (std::size_t c = 0; rel.m + c <= bound && rel.n + c <= bound; ++c) {
      if (!iterate_vertex(p, rel.i, rel.m + c) || !iterate_vertex(p, rel.j, rel.n + c)) break;
      std::size_t x = find(a * width + rel.m + c), y = find(b * width + rel.n + c);
      if (x != y) parent[x] = y;
    }
  }
  return find(slot(r.i) * width + r.m) == find(slot(r.j) * width + r.n);
}

}  // namespace dynport
