#pragma once

// Pointwise good-reduction predicates for a model at a prime p.

#include <cstddef>
#include <vector>

#include "dynport/dynamics.hpp"
#include "dynport/model.hpp"

namespace dynport {

struct GoodReduction {
  bool map_good = false;  // p does not divide Res(f)
  bool bullet = false;    // ... marked points stay distinct, e_f >= eps
  bool circ = false;      // ... with e_f = eps
  bool star = false;      // ... and the reduced map has e = eps as well
};

/// Reduction of a model at p. An empty portrait checks the map alone.
inline GoodReduction reduce_and_check_good_reduction(const RationalMap& f,
                                                     const std::vector<ProjectivePoint>& assignment,
                                                     const Portrait& p, const Integer& prime) {
  if (!is_prime(prime)) throw DomainError(to_string(prime) + " is not prime");
  auto check = verify_model(f, p, assignment);
  if (!check.ok()) throw DomainError("assignment is not a model of the portrait");

  GoodReduction r;
  r.map_good = mod(f.resultant(), prime) != 0;
  if (!r.map_good) return r;

  bool distinct = true;
  for (std::size_t i = 0; i < assignment.size(); ++i)
    for (std::size_t j = i + 1; j < assignment.size(); ++j)
      if (assignment[i].congruent_mod(assignment[j], prime)) distinct = false;

  bool dominates = true, equal = true, equal_mod = true;
  for (Vertex v : p.domain()) {
    const ProjectivePoint& pt = assignment[v];
    unsigned e = multiplicity(f, pt);
    if (e < p.weight(v)) dominates = false;
    if (e != p.weight(v)) equal = false;
    auto e_mod = root_multiplicity_mod(fiber_form(f, f(pt)), pt, prime);
    if (!e_mod || *e_mod != p.weight(v)) equal_mod = false;
  }
  r.bullet = distinct && dominates;
  r.circ = r.bullet && equal;
  r.star = r.circ && equal_mod;
  return r;
}

inline GoodReduction reduce_and_check_good_reduction(const Model& m, const Integer& prime) {
  return reduce_and_check_good_reduction(m.map, m.assignment, m.portrait, prime);
}

}  // namespace dynport
