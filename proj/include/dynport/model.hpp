#pragma once

// Models of portraits: a rational map with an injective assignment of
// vertices to points that realizes the portrait's map and weights.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dynport/dynamics.hpp"
#include "dynport/morphism.hpp"
#include "dynport/portrait.hpp"
#include "dynport/rational_map.hpp"

namespace dynport {

struct Model {
  RationalMap map;
  Portrait portrait;
  std::vector<ProjectivePoint> assignment;  // indexed by vertex

  const ProjectivePoint& point(const std::string& vertex) const {
    return assignment.at(portrait.at(vertex));
  }
};

struct ModelFailure {
  enum class Kind { kNonInjective, kMapMismatch, kMultiplicityTooSmall };
  Kind kind;
  std::string vertex;
  std::string other;  // second vertex for non-injectivity, image vertex for mismatches
  std::string detail;
};

inline const char* to_string(ModelFailure::Kind k) {
  switch (k) {
    case ModelFailure::Kind::kNonInjective: return "non-injective";
    case ModelFailure::Kind::kMapMismatch: return "map-mismatch";
    case ModelFailure::Kind::kMultiplicityTooSmall: return "multiplicity-too-small";
  }
  return "";
}

struct ModelCheck {
  std::optional<Model> model;
  std::vector<ModelFailure> failures;
  bool ok() const { return model.has_value(); }
};

/// Checks every clause of the model definition and reports all violations.
inline ModelCheck verify_model(const RationalMap& f, const Portrait& p,
                               const std::vector<ProjectivePoint>& assignment) {
  if (assignment.size() != p.size())
    throw DomainError("assignment must give a point for every vertex");
  ModelCheck out;
  for (Vertex v = 0; v < p.size(); ++v)
    for (Vertex w = v + 1; w < p.size(); ++w)
      if (assignment[v] == assignment[w])
        out.failures.push_back({ModelFailure::Kind::kNonInjective, p.name(v), p.name(w),
                                "both vertices sit at " + to_string(assignment[v])});
  for (Vertex v : p.domain()) {
    ProjectivePoint image = f(assignment[v]);
    const Vertex target = p.next(v);
    if (!(image == assignment[target]))
      out.failures.push_back({ModelFailure::Kind::kMapMismatch, p.name(v), p.name(target),
                              "f(" + to_string(assignment[v]) + ") = " + to_string(image) +
                                  ", expected " + to_string(assignment[target])});
    unsigned e = multiplicity(f, assignment[v]);
    if (e < p.weight(v))
      out.failures.push_back({ModelFailure::Kind::kMultiplicityTooSmall, p.name(v), "",
                              "multiplicity " + std::to_string(e) + " < weight " +
                                  std::to_string(p.weight(v))});
  }
  if (out.failures.empty()) out.model = Model{f, p, assignment};
  return out;
}

/// The portrait cut out by f on a list of distinct points: one vertex per
/// point (named by its canonical string), an arrow when the image is
/// listed, weight e_f at each mapped vertex.
inline Model extract_portrait(const RationalMap& f, const std::vector<ProjectivePoint>& points) {
  std::set<ProjectivePoint> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) throw DomainError("duplicate points");
  std::vector<std::string> names;
  for (const auto& pt : points) names.push_back(to_string(pt));
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, long long>> weights;
  for (std::size_t i = 0; i < points.size(); ++i) {
    ProjectivePoint image = f(points[i]);
    if (!distinct.count(image)) continue;
    edges.emplace_back(names[i], to_string(image));
    weights.emplace_back(names[i], multiplicity(f, points[i]));
  }
  Portrait p = Portrait::build(names, edges, weights);
  auto check = verify_model(f, p, points);
  if (!check.ok()) throw DomainError("internal error: extracted portrait is not modelled");
  return std::move(*check.model);
}

/// Pulls a model of the target of alpha back along alpha.
inline Model pullback_model(const PortraitMorphism& alpha, const Model& m) {
  if (!(*alpha.target == m.portrait))
    throw DomainError("model is not a model of the morphism target");
  const Portrait& src = *alpha.source;
  std::vector<ProjectivePoint> assignment;
  for (Vertex v = 0; v < src.size(); ++v)
    assignment.push_back(m.point(alpha.target->name(alpha(v))));
  auto check = verify_model(m.map, src, assignment);
  if (!check.ok()) throw DomainError("internal error: pulled-back assignment is not a model");
  return std::move(*check.model);
}

}  // namespace dynport
