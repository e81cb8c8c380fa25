#pragma once

// JSON formats for portraits, maps, points and stability instances.
// Requires nlohmann/json (json.hpp) on the include path.

#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "dynport/arith.hpp"
#include "dynport/portrait.hpp"
#include "dynport/projective.hpp"
#include "dynport/rational_map.hpp"
#include "dynport/stability.hpp"

namespace dynport::io {

using Json = nlohmann::json;

namespace detail {

inline void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                                const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ParseError(what + ": unknown key '" + key + "'");
}

inline const Json& require(const Json& j, const std::string& key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + ": missing key '" + key + "'");
  return *it;
}

inline long long as_int(const Json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ParseError("key '" + key + "' must be an integer");
  return j.get<long long>();
}

inline std::string as_string(const Json& j, const std::string& key) {
  if (!j.is_string()) throw ParseError("key '" + key + "' must be a string");
  return j.get<std::string>();
}

}  // namespace detail

/// Integers that fit in int64 become JSON numbers, larger ones strings.
inline Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

inline Json rational_json(const Rational& q) { return Json(to_string(q)); }

// Portraits -----------------------------------------------------------------

inline Portrait parse_portrait(const Json& j) {
  detail::reject_unknown_keys(j, {"vertices", "map", "weights"}, "portrait");
  const Json& vs = detail::require(j, "vertices", "portrait");
  if (!vs.is_array()) throw ParseError("key 'vertices' must be an array of strings");
  std::vector<std::string> vertices;
  for (const auto& v : vs) vertices.push_back(detail::as_string(v, "vertices"));
  const Json& m = detail::require(j, "map", "portrait");
  if (!m.is_object()) throw ParseError("key 'map' must be an object");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [from, to] : m.items()) edges.emplace_back(from, detail::as_string(to, "map"));
  std::vector<std::pair<std::string, long long>> weights;
  if (auto it = j.find("weights"); it != j.end()) {
    if (!it->is_object()) throw ParseError("key 'weights' must be an object");
    for (const auto& [v, w] : it->items()) weights.emplace_back(v, detail::as_int(w, "weights"));
  }
  return Portrait::build(vertices, edges, weights);
}

inline Json portrait_json(const Portrait& p) {
  Json out;
  out["vertices"] = p.names();
  out["map"] = Json::object();
  for (const auto& [from, to] : p.edges()) out["map"][from] = to;
  Json weights = Json::object();
  for (const auto& [v, w] : p.weights())
    if (w != 1) weights[v] = w;
  if (!weights.empty()) out["weights"] = weights;
  return out;
}

// Maps ----------------------------------------------------------------------

inline RationalMap parse_map(const Json& j) {
  detail::reject_unknown_keys(j, {"degree", "numerator", "denominator"}, "map");
  const long long d = detail::as_int(detail::require(j, "degree", "map"), "degree");
  if (d < 2) throw DomainError("map degree must be at least 2");
  auto coeffs = [&](const std::string& key) {
    const Json& arr = detail::require(j, key, "map");
    if (!arr.is_array()) throw ParseError("key '" + key + "' must be an array");
    if (arr.size() != static_cast<std::size_t>(d) + 1)
      throw ParseError("key '" + key + "' must have degree + 1 entries");
    std::vector<Rational> out;
    for (const auto& c : arr) out.push_back(parse_rational(detail::as_string(c, key)));
    return out;
  };
  return RationalMap::from_rationals(coeffs("numerator"), coeffs("denominator"));
}

inline Json map_json(const RationalMap& f) {
  Json out;
  out["degree"] = f.degree();
  Json num = Json::array(), den = Json::array();
  for (const auto& c : f.numerator().coeffs()) num.push_back(c.get_str());
  for (const auto& c : f.denominator().coeffs()) den.push_back(c.get_str());
  out["numerator"] = num;
  out["denominator"] = den;
  return out;
}

// Points --------------------------------------------------------------------

inline ProjectivePoint parse_point(const std::string& text) {
  if (text == "inf") return ProjectivePoint::infinity();
  return ProjectivePoint::affine(parse_rational(text));
}

inline ProjectivePoint parse_point(const Json& j) {
  if (j.is_string()) return parse_point(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    Integer x = parse_integer(detail::as_string(j[0], "point"));
    Integer y = parse_integer(detail::as_string(j[1], "point"));
    if (x == 0 && y == 0) throw ParseError("(0,0) is not a projective point");
    return {x, y};
  }
  throw ParseError("a point must be a rational string, \"inf\" or a pair of integer strings");
}

inline Json point_json(const ProjectivePoint& p) { return Json(to_string(p)); }

inline std::vector<ProjectivePoint> parse_points(const Json& j) {
  if (!j.is_array()) throw ParseError("points must be a JSON array");
  std::vector<ProjectivePoint> out;
  for (const auto& p : j) out.push_back(parse_point(p));
  return out;
}

/// An assignment of points to the vertices of p: a list in vertex order
/// or an object keyed by vertex id.
inline std::vector<ProjectivePoint> parse_assignment(const Json& j, const Portrait& p) {
  if (j.is_array()) {
    auto pts = parse_points(j);
    if (pts.size() != p.size()) throw ParseError("points list must have one entry per vertex");
    return pts;
  }
  if (!j.is_object()) throw ParseError("points must be a list or an object keyed by vertex");
  std::vector<std::optional<ProjectivePoint>> slots(p.size());
  for (const auto& [v, pt] : j.items()) {
    auto idx = p.index(v);
    if (!idx) throw ParseError("points: unknown vertex '" + v + "'");
    slots[*idx] = parse_point(pt);
  }
  std::vector<ProjectivePoint> out;
  for (Vertex v = 0; v < p.size(); ++v) {
    if (!slots[v]) throw ParseError("points: no point for vertex '" + p.name(v) + "'");
    out.push_back(*slots[v]);
  }
  return out;
}

// Stability instances -------------------------------------------------------

/// Parses a stability configuration. A "map" entry, when given with
/// explicit points, fills in missing fixed_point_flags.
inline StabilityInstance parse_stability(const Json& j) {
  detail::reject_unknown_keys(
      j, {"dim", "degree", "weights", "points", "subspaces", "fixed_point_flags", "map"},
      "stability config");
  StabilityInstance inst;
  long long dim = detail::as_int(detail::require(j, "dim", "stability config"), "dim");
  long long deg = detail::as_int(detail::require(j, "degree", "stability config"), "degree");
  if (dim < 1 || dim > std::numeric_limits<int>::max()) throw ParseError("key 'dim' out of range");
  if (deg < 2 || deg > std::numeric_limits<int>::max()) throw ParseError("key 'degree' out of range");
  inst.dim = static_cast<unsigned>(dim);
  inst.degree = static_cast<unsigned>(deg);
  const Json& w = detail::require(j, "weights", "stability config");
  if (!w.is_array() || w.empty()) throw ParseError("key 'weights' must be a nonempty array");
  for (const auto& x : w) {
    long long v = detail::as_int(x, "weights");
    if (v < 0) throw ParseError("key 'weights' entries must be nonnegative");
    inst.weights.emplace_back(static_cast<long>(v));
  }
  if (auto it = j.find("points"); it != j.end()) inst.points = parse_points(*it);
  if (auto it = j.find("subspaces"); it != j.end()) {
    if (!it->is_array()) throw ParseError("key 'subspaces' must be an array");
    for (const auto& s : *it) {
      detail::reject_unknown_keys(s, {"dim", "points"}, "subspace");
      long long sd = detail::as_int(detail::require(s, "dim", "subspace"), "dim");
      if (sd < 0) throw DomainError("subspace dimension must be nonnegative");
      Subspace sub;
      sub.dim = static_cast<unsigned>(sd);
      const Json& pts = detail::require(s, "points", "subspace");
      if (!pts.is_array()) throw ParseError("subspace key 'points' must be an array");
      for (const auto& idx : pts) {
        long long k = detail::as_int(idx, "points");
        if (k < 1) throw DomainError("subspace point indices are 1-based");
        sub.points.push_back(static_cast<std::size_t>(k - 1));
      }
      inst.subspaces.push_back(std::move(sub));
    }
  }
  if (auto it = j.find("fixed_point_flags"); it != j.end()) {
    if (!it->is_array()) throw ParseError("key 'fixed_point_flags' must be an array");
    std::vector<bool> flags;
    for (const auto& b : *it) {
      if (!b.is_boolean()) throw ParseError("key 'fixed_point_flags' entries must be booleans");
      flags.push_back(b.get<bool>());
    }
    inst.fixed_point_flags = flags;
  }
  if (auto it = j.find("map"); it != j.end()) {
    RationalMap f = parse_map(*it);
    if (f.degree() != inst.degree) throw DomainError("map degree does not match 'degree'");
    if (inst.points && !inst.fixed_point_flags) {
      std::vector<bool> flags;
      for (const auto& p : *inst.points) flags.push_back(f(p) == p);
      inst.fixed_point_flags = flags;
    }
  }
  return inst;
}

inline Json subspace_json(const Subspace& s) {
  Json out;
  out["dim"] = s.dim;
  Json pts = Json::array();
  for (auto i : s.points) pts.push_back(i + 1);
  out["points"] = pts;
  if (s.location) out["location"] = point_json(*s.location);
  return out;
}

}  // namespace dynport::io
