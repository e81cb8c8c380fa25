#pragma once

// Weighted portraits: a finite vertex set V, a partial self-map phi defined
// on the domain V° ⊆ V, and a weight eps >= 1 on each domain vertex.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dynport/arith.hpp"

namespace dynport {

/// Raised by Portrait::build for descriptions that violate the portrait
/// invariants.
class PortraitError : public DomainError {
 public:
  using DomainError::DomainError;
};

using Vertex = std::size_t;

class Portrait {
 public:
  Portrait() = default;

  /// Validates a raw description. Weights default to 1 on the domain.
  static Portrait build(const std::vector<std::string>& vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::pair<std::string, long long>>& weights = {}) {
    Portrait p;
    for (const auto& name : vertices) {
      if (!p.index_.emplace(name, p.names_.size()).second)
        throw PortraitError("duplicate vertex id '" + name + "'");
      p.names_.push_back(name);
    }
    p.next_.assign(p.names_.size(), std::nullopt);
    p.weight_.assign(p.names_.size(), 0);
    for (const auto& [from, to] : edges) {
      auto src = p.index(from);
      if (!src) throw PortraitError("map key '" + from + "' is not a vertex");
      auto dst = p.index(to);
      if (!dst) throw PortraitError("map value '" + to + "' of '" + from + "' is not a vertex");
      if (p.next_[*src]) throw PortraitError("vertex '" + from + "' has two out-arrows");
      p.next_[*src] = *dst;
      p.weight_[*src] = 1;
    }
    for (const auto& [name, w] : weights) {
      auto v = p.index(name);
      if (!v) throw PortraitError("weight on unknown vertex '" + name + "'");
      if (!p.next_[*v]) throw PortraitError("weight on vertex '" + name + "' outside the domain");
      if (w < 1) throw PortraitError("weight of '" + name + "' is below 1");
      p.weight_[*v] = static_cast<unsigned>(w);
    }
    return p;
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }
  std::optional<Vertex> index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Vertex at(const std::string& name) const {
    auto v = index(name);
    if (!v) throw PortraitError("unknown vertex '" + name + "'");
    return *v;
  }

  bool in_domain(Vertex v) const { return next_.at(v).has_value(); }
  Vertex next(Vertex v) const {
    if (!in_domain(v)) throw PortraitError("vertex '" + name(v) + "' is outside the domain");
    return *next_[v];
  }
  const std::optional<Vertex>& next_opt(Vertex v) const { return next_.at(v); }
  /// Weight of a domain vertex.
  unsigned weight(Vertex v) const {
    if (!in_domain(v)) throw PortraitError("vertex '" + name(v) + "' has no weight");
    return weight_[v];
  }

  std::vector<Vertex> domain() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
      if (in_domain(v)) out.push_back(v);
    return out;
  }
  bool is_weighted() const {
    for (Vertex v = 0; v < size(); ++v)
      if (in_domain(v) && weight_[v] > 1) return true;
    return false;
  }

  /// Edges and explicit weights keyed by name, for rebuilding or printing.
  std::vector<std::pair<std::string, std::string>> edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (Vertex v = 0; v < size(); ++v)
      if (in_domain(v)) out.emplace_back(names_[v], names_[*next_[v]]);
    return out;
  }
  std::vector<std::pair<std::string, long long>> weights() const {
    std::vector<std::pair<std::string, long long>> out;
    for (Vertex v = 0; v < size(); ++v)
      if (in_domain(v)) out.emplace_back(names_[v], weight_[v]);
    return out;
  }

  /// Equality of the underlying labelled portraits, independent of the
  /// order in which vertices were listed.
  friend bool operator==(const Portrait& a, const Portrait& b) {
    if (a.size() != b.size()) return false;
    for (Vertex v = 0; v < a.size(); ++v) {
      auto w = b.index(a.names_[v]);
      if (!w) return false;
      if (a.in_domain(v) != b.in_domain(*w)) return false;
      if (!a.in_domain(v)) continue;
      if (a.names_[a.next(v)] != b.names_[b.next(*w)]) return false;
      if (a.weight_[v] != b.weight_[*w]) return false;
    }
    return true;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Vertex> index_;
  std::vector<std::optional<Vertex>> next_;
  std::vector<unsigned> weight_;
};

/// Forward orbit of v: v, phi(v), ... stopping at the first vertex outside
/// the domain or just before the first repeated vertex.
inline std::vector<Vertex> orbit(const Portrait& p, Vertex v) {
  std::vector<Vertex> out;
  std::vector<bool> seen(p.size(), false);
  std::optional<Vertex> cur = v;
  while (cur && !seen[*cur]) {
    seen[*cur] = true;
    out.push_back(*cur);
    cur = p.next_opt(*cur);
  }
  return out;
}

/// Preperiod m and period n: v enters an n-cycle after exactly m steps.
struct PreperiodicType {
  std::size_t preperiod;
  std::size_t period;
  friend bool operator==(const PreperiodicType&, const PreperiodicType&) = default;
  friend auto operator<=>(const PreperiodicType&, const PreperiodicType&) = default;
};

/// nullopt when the orbit of v ends outside the domain.
inline std::optional<PreperiodicType> preperiodic_type(const Portrait& p, Vertex v) {
  auto orb = orbit(p, v);
  const Vertex last = orb.back();
  if (!p.in_domain(last)) return std::nullopt;
  const Vertex closing = p.next(last);
  auto pos = std::find(orb.begin(), orb.end(), closing) - orb.begin();
  return PreperiodicType{static_cast<std::size_t>(pos), orb.size() - static_cast<std::size_t>(pos)};
}

/// Exact period of a periodic vertex, nullopt otherwise.
inline std::optional<std::size_t> exact_period(const Portrait& p, Vertex v) {
  auto t = preperiodic_type(p, v);
  if (!t || t->preperiod != 0) return std::nullopt;
  return t->period;
}

inline std::vector<Vertex> critical_set(const Portrait& p) {
  std::vector<Vertex> out;
  for (Vertex v : p.domain())
    if (p.weight(v) >= 2) out.push_back(v);
  return out;
}

/// #(V \ V°).
inline std::size_t zeta(const Portrait& p) { return p.size() - p.domain().size(); }

/// Weakly connected components, each sorted by vertex index, ordered by
/// their smallest vertex index.
inline std::vector<std::vector<Vertex>> components(const Portrait& p) {
  std::vector<Vertex> parent(p.size());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex v : p.domain()) {
    Vertex a = find(v), b = find(p.next(v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<Vertex, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < p.size(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool component_has_cycle(const Portrait& p, const std::vector<Vertex>& comp) {
  for (Vertex v : comp)
    if (exact_period(p, v)) return true;
  return false;
}

struct PortraitStatistics {
  std::size_t max_preimages;                       // D_P
  std::map<std::size_t, std::size_t> period_counts;  // C_P(n), n = 1..#V
  std::size_t zeta;
  unsigned long long weight_total;
  std::vector<Vertex> critical;
};

inline PortraitStatistics portrait_statistics(const Portrait& p) {
  PortraitStatistics s{};
  std::vector<std::size_t> preimages(p.size(), 0);
  for (Vertex v : p.domain()) {
    ++preimages[p.next(v)];
    s.weight_total += p.weight(v);
  }
  s.max_preimages = preimages.empty() ? 0 : *std::max_element(preimages.begin(), preimages.end());
  for (std::size_t n = 1; n <= p.size(); ++n) s.period_counts[n] = 0;
  for (Vertex v = 0; v < p.size(); ++v)
    if (auto n = exact_period(p, v)) ++s.period_counts[*n];
  s.zeta = zeta(p);
  s.critical = critical_set(p);
  return s;
}

/// The subportrait on a vertex subset: a kept vertex stays in the domain
/// when its image is also kept. Weights are inherited.
inline Portrait restrict_to(const Portrait& p, const std::vector<Vertex>& keep) {
  std::vector<bool> kept(p.size(), false);
  for (Vertex v : keep) kept.at(v) = true;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, long long>> weights;
  for (Vertex v = 0; v < p.size(); ++v) {
    if (!kept[v]) continue;
    names.push_back(p.name(v));
    if (p.in_domain(v) && kept[p.next(v)]) {
      edges.emplace_back(p.name(v), p.name(p.next(v)));
      weights.emplace_back(p.name(v), p.weight(v));
    }
  }
  return Portrait::build(names, edges, weights);
}

}  // namespace dynport
