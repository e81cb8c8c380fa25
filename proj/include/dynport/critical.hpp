#pragma once

// Critical-orbit constructions: critically generated subportraits, complete
// critical portraits of degree d and their frames.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "dynport/morphism.hpp"
#include "dynport/portrait.hpp"

namespace dynport {

/// Union of the forward orbits of the critical vertices, with the map and
/// weights restricted. Empty when P has no critical vertex.
inline Portrait critically_generated_subportrait(const Portrait& p) {
  std::vector<bool> keep(p.size(), false);
  for (Vertex c : critical_set(p))
    for (Vertex v : orbit(p, c)) keep[v] = true;
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < p.size(); ++v)
    if (keep[v]) kept.push_back(v);
  return restrict_to(p, kept);
}

inline bool is_critically_generated(const Portrait& p) {
  return critically_generated_subportrait(p) == p;
}

inline unsigned long long ramification_total(const Portrait& p) {
  unsigned long long total = 0;
  for (Vertex v : p.domain()) total += p.weight(v) - 1;
  return total;
}

inline bool is_complete_critical(const Portrait& p, unsigned d) {
  if (d < 2) throw DomainError("degree must be at least 2");
  return ramification_total(p) == 2ULL * d - 2 && is_critically_generated(p);
}

/// Every domain vertex has weight at least 2.
inline bool is_critically_primitive(const Portrait& p) {
  for (Vertex v : p.domain())
    if (p.weight(v) < 2) return false;
  return true;
}

/// The unique primitive complete critical subportrait: the critical
/// vertices with their out-arrows, plus the images of those arrows.
inline Portrait frame(const Portrait& p, unsigned d) {
  if (!is_complete_critical(p, d))
    throw DomainError("frame is only defined for complete critical portraits of degree " +
                      std::to_string(d));
  std::vector<bool> keep(p.size(), false);
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, long long>> weights;
  for (Vertex c : critical_set(p)) {
    keep[c] = keep[p.next(c)] = true;
    edges.emplace_back(p.name(c), p.name(p.next(c)));
    weights.emplace_back(p.name(c), p.weight(c));
  }
  std::vector<std::string> names;
  for (Vertex v = 0; v < p.size(); ++v)
    if (keep[v]) names.push_back(p.name(v));
  return Portrait::build(names, edges, weights);
}

namespace detail {

inline void weight_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                              std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part + 1);
    weight_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Isomorphism classes of primitive complete critical portraits of degree
/// d, for d in {2, 3}. Critical vertices are named c1, c2, ... and the
/// remaining image vertices x1, x2, ... .
inline std::vector<Portrait> enumerate_primitive_critical_portraits(unsigned d) {
  if (d < 2 || d > 3) throw DomainError("enumeration supports degree 2 or 3 only");
  std::vector<std::vector<unsigned>> weight_lists;
  std::vector<unsigned> cur;
  detail::weight_partitions(2 * d - 2, 2 * d - 2, cur, weight_lists);

  std::vector<Portrait> out;
  for (const auto& weights : weight_lists) {
    const std::size_t k = weights.size();
    // target[i] < k: critical vertex; target[i] >= k: fresh vertex x_{target-k+1}.
    std::vector<std::size_t> target(k, 0);
    while (true) {
      // Fresh vertices must first appear in order x1, x2, ...
      std::size_t fresh = 0;
      bool canonical = true;
      for (std::size_t i = 0; i < k && canonical; ++i) {
        if (target[i] < k) continue;
        std::size_t idx = target[i] - k;
        if (idx > fresh) canonical = false;
        else if (idx == fresh) ++fresh;
      }
      if (canonical) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i) names.push_back("c" + std::to_string(i + 1));
        for (std::size_t j = 0; j < fresh; ++j) names.push_back("x" + std::to_string(j + 1));
        std::vector<std::pair<std::string, std::string>> edges;
        std::vector<std::pair<std::string, long long>> ws;
        for (std::size_t i = 0; i < k; ++i) {
          edges.emplace_back(names[i], names[target[i]]);
          ws.emplace_back(names[i], weights[i]);
        }
        Portrait p = Portrait::build(names, edges, ws);
        bool seen = false;
        for (const auto& q : out)
          if (isomorphic(p, q)) {
            seen = true;
            break;
          }
        if (!seen) out.push_back(std::move(p));
      }
      std::size_t i = 0;
      while (i < k && ++target[i] == 2 * k) target[i++] = 0;
      if (i == k) break;
    }
  }
  return out;
}

}  // namespace dynport
