#pragma once

// Shared helpers and independent oracles for the test suite.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dynport/dynport.hpp"

namespace testing_support {

using namespace dynport;

inline Portrait make_portrait(const std::vector<std::string>& vertices,
                              const std::vector<std::pair<std::string, std::string>>& edges,
                              const std::vector<std::pair<std::string, long long>>& weights = {}) {
  return Portrait::build(vertices, edges, weights);
}

/// Random degree-d map with integer coefficients in [-h, h] and nonzero
/// resultant.
inline RationalMap random_map(std::mt19937_64& rng, unsigned d, int h = 9) {
  std::uniform_int_distribution<int> coeff(-h, h);
  while (true) {
    std::vector<Integer> a(d + 1), b(d + 1);
    for (auto& c : a) c = coeff(rng);
    for (auto& c : b) c = coeff(rng);
    try {
      return RationalMap(BinaryForm(a), BinaryForm(b));
    } catch (const DomainError&) {
    }
  }
}

inline Rational random_rational(std::mt19937_64& rng, int h = 9) {
  std::uniform_int_distribution<int> num(-h, h), den(1, h);
  return make_rational(num(rng), den(rng));
}

/// Local degree by counting vanishing derivatives of z -> A(z) - w B(z)
/// (or B(z) when the image is infinite), after moving the point to 0 when
/// it is infinite.
inline unsigned derivative_count_multiplicity(const RationalMap& f, const ProjectivePoint& p) {
  std::vector<Integer> a = f.numerator().coeffs(), b = f.denominator().coeffs();
  Rational z0;
  if (p.is_infinity()) {
    std::reverse(a.begin(), a.end());
    std::reverse(b.begin(), b.end());
    z0 = 0;
  } else {
    z0 = p.affine_value();
  }
  // Affine polynomials in z, coefficients stored X^d first.
  auto affine = [](const std::vector<Integer>& c) {
    std::vector<Rational> low(c.rbegin(), c.rend());
    return QPoly(low);
  };
  QPoly qa = affine(a), qb = affine(b);
  const ProjectivePoint image = f(p);
  QPoly g = image.is_infinity() ? qb : qa - QPoly::constant(image.affine_value()) * qb;
  unsigned k = 0;
  while (!g.is_zero() && g(z0) == 0) {
    ++k;
    g = g.derivative();
  }
  return k;
}

/// f^n evaluated pointwise.
inline ProjectivePoint orbit_point(const RationalMap& f, ProjectivePoint p, unsigned n) {
  for (unsigned i = 0; i < n; ++i) p = f(p);
  return p;
}

/// Every relation (i, j, m, n) between critical vertices with m, n <= cap
/// that the portrait realizes.
inline std::vector<CriticalRelation> realized_relations(const Portrait& p, std::size_t cap) {
  std::vector<CriticalRelation> out;
  const auto crit = critical_set(p);
  for (Vertex i : crit)
    for (Vertex j : crit)
      for (std::size_t m = 0; m <= cap; ++m)
        for (std::size_t n = 0; n <= cap; ++n) {
          CriticalRelation r{i, j, m, n};
          if (realizes(p, r)) out.push_back(r);
        }
  return out;
}

/// Canonical form of a portrait: the lexicographically least relabelled
/// (source, target, weight) list. Isomorphisms preserve the domain, so
/// labels 0..k-1 go to domain vertices and the rest to unmapped ones.
inline std::vector<std::tuple<long, long, unsigned>> canonical_form(const Portrait& p) {
  std::vector<Vertex> mapped = p.domain(), free;
  for (Vertex v = 0; v < p.size(); ++v)
    if (!p.in_domain(v)) free.push_back(v);
  std::vector<std::tuple<long, long, unsigned>> best;
  bool first = true;
  std::vector<long> label(p.size());
  do {
    do {
      for (std::size_t i = 0; i < mapped.size(); ++i) label[mapped[i]] = static_cast<long>(i);
      for (std::size_t i = 0; i < free.size(); ++i)
        label[free[i]] = static_cast<long>(mapped.size() + i);
      std::vector<std::tuple<long, long, unsigned>> key;
      for (Vertex v : mapped) key.emplace_back(label[v], label[p.next(v)], p.weight(v));
      std::sort(key.begin(), key.end());
      key.emplace_back(static_cast<long>(p.size()), -1, 0);
      if (first || key < best) best = key;
      first = false;
    } while (std::next_permutation(free.begin(), free.end()));
  } while (std::next_permutation(mapped.begin(), mapped.end()));
  return best;
}

/// Random portrait on 1..max_vertices vertices: each vertex is mapped with
/// probability 4/5, and each mapped vertex gets weight 2 or 3 with
/// probability 1/3.
inline Portrait random_portrait(std::mt19937_64& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> size(1, max_vertices);
  const std::size_t n = size(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> die(0, 14);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, long long>> weights;
  for (std::size_t i = 0; i < n; ++i) {
    if (die(rng) < 3) continue;
    edges.emplace_back(names[i], names[pick(rng)]);
    int roll = die(rng);
    if (roll < 5) weights.emplace_back(names[i], roll < 4 ? 2 : 3);
  }
  return Portrait::build(names, edges, weights);
}

/// A random critically generated portrait with at least one critical vertex.
inline Portrait random_critically_generated(std::mt19937_64& rng, std::size_t max_vertices) {
  while (true) {
    Portrait p = random_portrait(rng, max_vertices);
    if (critical_set(p).empty()) continue;
    return critically_generated_subportrait(p);
  }
}

}  // namespace testing_support
