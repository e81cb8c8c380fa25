#pragma once

// Portrait morphisms, automorphism groups and the partial order on
// portraits sharing a vertex count.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dynport/portrait.hpp"

namespace dynport {

struct PortraitMorphism {
  std::shared_ptr<const Portrait> source;
  std::shared_ptr<const Portrait> target;
  std::vector<Vertex> map;  // indexed by source vertex

  Vertex operator()(Vertex v) const { return map.at(v); }
};

/// Checks the three morphism axioms plus injectivity.
inline bool is_morphism(const Portrait& a, const Portrait& b, const std::vector<Vertex>& map) {
  if (map.size() != a.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (Vertex v = 0; v < a.size(); ++v) {
    if (map[v] >= b.size() || used[map[v]]) return false;
    used[map[v]] = true;
  }
  for (Vertex v : a.domain()) {
    Vertex w = map[v];
    if (!b.in_domain(w)) return false;
    if (b.next(w) != map[a.next(v)]) return false;
    if (b.weight(w) < a.weight(v)) return false;
  }
  return true;
}

namespace detail {

enum class MatchMode { kMorphism, kIsomorphism };

/// Backtracking search for vertex maps a -> b. Assigning a domain vertex
/// forces the image of its successor, which is propagated immediately.
class MorphismSearch {
 public:
  MorphismSearch(const Portrait& a, const Portrait& b, MatchMode mode)
      : a_(a), b_(b), mode_(mode), map_(a.size()), used_(b.size(), false) {}

  /// Calls visit(map) for each solution; visit returns false to stop.
  template <class Visit>
  void run(Visit&& visit) {
    if (mode_ == MatchMode::kIsomorphism && a_.size() != b_.size()) return;
    if (a_.size() > b_.size()) return;
    // Visit vertices so that sinks and cycle vertices come early: a
    // reverse topological order lets propagation fix most images.
    order_.clear();
    std::vector<bool> placed(a_.size(), false);
    for (Vertex v = 0; v < a_.size(); ++v) {
      auto orb = orbit(a_, v);
      for (auto it = orb.rbegin(); it != orb.rend(); ++it)
        if (!placed[*it]) {
          placed[*it] = true;
          order_.push_back(*it);
        }
    }
    stop_ = false;
    search(0, visit);
  }

 private:
  bool compatible(Vertex v, Vertex w) const {
    if (used_[w]) return false;
    bool dv = a_.in_domain(v), dw = b_.in_domain(w);
    if (mode_ == MatchMode::kIsomorphism) {
      if (dv != dw) return false;
      if (dv && a_.weight(v) != b_.weight(w)) return false;
    } else if (dv) {
      if (!dw || b_.weight(w) < a_.weight(v)) return false;
    }
    return true;
  }

  // Assigns v -> w and follows the forced chain. Records assignments in
  // trail so they can be undone. Returns false on conflict.
  bool assign(Vertex v, Vertex w, std::vector<Vertex>& trail) {
    while (true) {
      if (map_[v]) return *map_[v] == w;
      if (!compatible(v, w)) return false;
      map_[v] = w;
      used_[w] = true;
      trail.push_back(v);
      if (!a_.in_domain(v)) return true;
      Vertex nv = a_.next(v);
      Vertex nw = b_.next(w);
      v = nv;
      w = nw;
    }
  }

  void undo(std::vector<Vertex>& trail) {
    for (Vertex v : trail) {
      used_[*map_[v]] = false;
      map_[v].reset();
    }
    trail.clear();
  }

  template <class Visit>
  void search(std::size_t pos, Visit& visit) {
    if (stop_) return;
    while (pos < order_.size() && map_[order_[pos]]) ++pos;
    if (pos == order_.size()) {
      std::vector<Vertex> out(a_.size());
      for (Vertex v = 0; v < a_.size(); ++v) out[v] = *map_[v];
      if (!visit(out)) stop_ = true;
      return;
    }
    Vertex v = order_[pos];
    for (Vertex w = 0; w < b_.size() && !stop_; ++w) {
      if (used_[w]) continue;
      std::vector<Vertex> trail;
      if (assign(v, w, trail)) search(pos + 1, visit);
      undo(trail);
    }
  }

  const Portrait& a_;
  const Portrait& b_;
  MatchMode mode_;
  std::vector<std::optional<Vertex>> map_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
  bool stop_ = false;
};

inline std::vector<PortraitMorphism> collect(const Portrait& a, const Portrait& b, MatchMode mode) {
  auto pa = std::make_shared<const Portrait>(a);
  auto pb = std::make_shared<const Portrait>(b);
  std::vector<PortraitMorphism> out;
  MorphismSearch(*pa, *pb, mode).run([&](const std::vector<Vertex>& m) {
    out.push_back({pa, pb, m});
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const PortraitMorphism& x, const PortraitMorphism& y) { return x.map < y.map; });
  return out;
}

inline bool exists(const Portrait& a, const Portrait& b, MatchMode mode) {
  bool found = false;
  MorphismSearch(a, b, mode).run([&](const std::vector<Vertex>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace detail

/// All portrait morphisms a -> b, sorted by their vertex maps.
inline std::vector<PortraitMorphism> hom(const Portrait& a, const Portrait& b) {
  return detail::collect(a, b, detail::MatchMode::kMorphism);
}

/// All portrait isomorphisms a -> b.
inline std::vector<PortraitMorphism> isomorphisms(const Portrait& a, const Portrait& b) {
  return detail::collect(a, b, detail::MatchMode::kIsomorphism);
}

inline bool isomorphic(const Portrait& a, const Portrait& b) {
  return detail::exists(a, b, detail::MatchMode::kIsomorphism);
}

/// Aut(P); always contains the identity, which comes first.
inline std::vector<PortraitMorphism> automorphism_group(const Portrait& p) {
  return isomorphisms(p, p);
}

/// g o f.
inline PortraitMorphism compose(const PortraitMorphism& g, const PortraitMorphism& f) {
  if (!(*f.target == *g.source)) throw DomainError("morphisms are not composable");
  PortraitMorphism out{f.source, g.target, std::vector<Vertex>(f.map.size())};
  for (Vertex v = 0; v < f.map.size(); ++v) out.map[v] = g.map[f.map[v]];
  return out;
}

/// Two-sided inverse of an isomorphism.
inline PortraitMorphism inverse(const PortraitMorphism& f) {
  if (f.source->size() != f.target->size()) throw DomainError("morphism is not bijective");
  PortraitMorphism out{f.target, f.source, std::vector<Vertex>(f.map.size())};
  for (Vertex v = 0; v < f.map.size(); ++v) out.map[f.map[v]] = v;
  return out;
}

/// Q is a subportrait of P, matching vertices by id: W ⊆ V, W° ⊆ V°, the
/// maps agree on W° and weights do not exceed those of P.
inline bool is_subportrait(const Portrait& q, const Portrait& p) {
  for (Vertex v = 0; v < q.size(); ++v) {
    auto w = p.index(q.name(v));
    if (!w) return false;
    if (!q.in_domain(v)) continue;
    if (!p.in_domain(*w)) return false;
    if (p.name(p.next(*w)) != q.name(q.next(v))) return false;
    if (q.weight(v) > p.weight(*w)) return false;
  }
  return true;
}

/// P' >= P: some morphism P -> P' is a bijection on vertices.
inline bool ge(const Portrait& p_prime, const Portrait& p) {
  if (p_prime.size() != p.size()) return false;
  return detail::exists(p, p_prime, detail::MatchMode::kMorphism);
}

/// Abstract structure of a finite permutation group.
struct GroupDescription {
  std::size_t order;
  bool cyclic;
  bool abelian;
  std::string name;  // "trivial", "Z/4", "Z/2 x Z/2", ...
};

namespace detail {

using Perm = std::vector<Vertex>;

inline Perm perm_mul(const Perm& g, const Perm& h) {  // g o h
  Perm out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
  return out;
}

inline std::size_t perm_order(const Perm& g) {
  Perm id(g.size());
  std::iota(id.begin(), id.end(), Vertex{0});
  Perm cur = g;
  std::size_t k = 1;
  while (cur != id) {
    cur = perm_mul(g, cur);
    ++k;
  }
  return k;
}

inline Perm perm_pow(const Perm& g, std::size_t k) {
  Perm out(g.size());
  std::iota(out.begin(), out.end(), Vertex{0});
  for (std::size_t i = 0; i < k; ++i) out = perm_mul(g, out);
  return out;
}

}  // namespace detail

/// Describes a group given as a list of permutations of {0..n-1}. Abelian
/// groups are named by their elementary divisors.
inline GroupDescription describe_group(const std::vector<std::vector<Vertex>>& elements) {
  using detail::Perm;
  GroupDescription g{elements.size(), false, true, ""};
  for (const auto& x : elements)
    for (const auto& y : elements)
      if (detail::perm_mul(x, y) != detail::perm_mul(y, x)) g.abelian = false;
  for (const auto& x : elements)
    if (detail::perm_order(x) == g.order) g.cyclic = true;
  if (g.order == 1) {
    g.name = "trivial";
  } else if (g.cyclic) {
    g.name = "Z/" + std::to_string(g.order);
  } else if (g.abelian) {
    // For each prime p, the count of factors of order >= p^i is
    // log_p #{x : x^(p^i) = 1} - log_p #{x : x^(p^(i-1)) = 1}.
    std::vector<std::size_t> factors;
    std::size_t rest = g.order;
    Perm id(elements.front().size());
    std::iota(id.begin(), id.end(), Vertex{0});
    for (std::size_t p = 2; rest > 1; ++p) {
      if (rest % p != 0) continue;
      while (rest % p == 0) rest /= p;
      std::vector<std::size_t> logs{0};
      for (std::size_t q = p;; q *= p) {
        std::size_t count = 0;
        for (const auto& x : elements)
          if (detail::perm_pow(x, q) == id) ++count;
        std::size_t lg = 0;
        while (count > 1) {
          count /= p;
          ++lg;
        }
        if (lg == logs.back()) break;
        logs.push_back(lg);
      }
      // Number of cyclic factors of order exactly p^i.
      for (std::size_t i = 1; i < logs.size(); ++i) {
        std::size_t at_least_i = logs[i] - logs[i - 1];
        std::size_t at_least_next = i + 1 < logs.size() ? logs[i + 1] - logs[i] : 0;
        std::size_t pi = 1;
        for (std::size_t t = 0; t < i; ++t) pi *= p;
        for (std::size_t c = 0; c < at_least_i - at_least_next; ++c) factors.push_back(pi);
      }
    }
    std::sort(factors.begin(), factors.end());
    for (std::size_t i = 0; i < factors.size(); ++i)
      g.name += (i ? " x Z/" : "Z/") + std::to_string(factors[i]);
  } else {
    g.name = "non-abelian of order " + std::to_string(g.order);
  }
  return g;
}

inline GroupDescription describe_group(const std::vector<PortraitMorphism>& group) {
  std::vector<std::vector<Vertex>> perms;
  for (const auto& m : group) perms.push_back(m.map);
  return describe_group(perms);
}

}  // namespace dynport
