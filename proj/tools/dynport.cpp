// Command-line front end. Every command prints one JSON document on stdout.
// Exit status: 0 success, 1 domain failure, 2 parse or usage error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dynport/dynport.hpp"
#include "dynport/io.hpp"

namespace {

using dynport::DomainError;
using dynport::Integer;
using dynport::ParseError;
using dynport::Portrait;
using dynport::RationalMap;
using Json = nlohmann::json;
namespace io = dynport::io;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Portrait load_portrait(const std::string& path) { return io::parse_portrait(read_json(path)); }
RationalMap load_map(const std::string& path) { return io::parse_map(read_json(path)); }

unsigned checked_degree(long long d) {
  if (d < 2 || d > 1000000) throw DomainError("degree must be at least 2");
  return static_cast<unsigned>(d);
}
unsigned checked_dim(long long n) {
  if (n < 1 || n > 1000000) throw DomainError("dimension must be at least 1");
  return static_cast<unsigned>(n);
}
unsigned checked_positive(long long n, const std::string& what) {
  if (n < 1 || n > 1000000) throw DomainError(what + " must be a positive integer");
  return static_cast<unsigned>(n);
}

Json names(const Portrait& p, const std::vector<dynport::Vertex>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(p.name(v));
  return out;
}

Json form_json(const dynport::BinaryForm& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

Json certificate_json(const dynport::Certificate& c) {
  Json out;
  out["verdict"] = dynport::to_string(c.value);
  if (!c.criterion.empty()) out["criterion"] = c.criterion;
  if (c.witness) out["witness"] = io::subspace_json(*c.witness);
  return out;
}

// State shared between option parsing and the selected handler.
struct Args {
  std::string file, file2, map, points, portrait, config, point;
  long long degree = 0, dim = 0, n = 0, m = -1, k = -1;
  std::string prime;
};

using Handler = std::function<Json(const Args&)>;

Json cmd_portrait_validate(const Args& a) {
  Portrait p = load_portrait(a.file);
  return {{"valid", true}, {"portrait", io::portrait_json(p)}};
}

Json cmd_portrait_aut(const Args& a) {
  Portrait p = load_portrait(a.file);
  auto group = dynport::automorphism_group(p);
  auto desc = dynport::describe_group(group);
  Json elems = Json::array();
  for (const auto& g : group) {
    Json m = Json::object();
    for (dynport::Vertex v = 0; v < p.size(); ++v) m[p.name(v)] = p.name(g(v));
    elems.push_back(m);
  }
  return {{"order", desc.order},
          {"cyclic", desc.cyclic},
          {"abelian", desc.abelian},
          {"structure", desc.name},
          {"automorphisms", elems}};
}

Json cmd_portrait_stats(const Args& a) {
  Portrait p = load_portrait(a.file);
  auto s = dynport::portrait_statistics(p);
  Json counts = Json::object();
  for (const auto& [n, c] : s.period_counts) counts[std::to_string(n)] = c;
  return {{"D_P", s.max_preimages},
          {"C_P", counts},
          {"zeta", s.zeta},
          {"weight_total", s.weight_total},
          {"crit_set", names(p, s.critical)}};
}

Json cmd_portrait_nonempty(const Args& a) {
  Portrait p = load_portrait(a.file);
  bool ok = dynport::unweighted_nonempty(p, checked_degree(a.degree), checked_dim(a.dim));
  return {{"nonempty", ok},
          {"verdict", dynport::to_string(ok ? dynport::NonemptyVerdict::kNonemptyCertified
                                            : dynport::NonemptyVerdict::kEmptyCertified)}};
}

Json cmd_portrait_dim(const Args& a) {
  Portrait p = load_portrait(a.file);
  auto r = dynport::expected_dimension(p, checked_degree(a.degree), checked_dim(a.dim));
  Json out{{"verdict", dynport::to_string(r.verdict)}, {"caveats", r.caveats}};
  if (r.dim_end) out["dim_end"] = io::integer_json(*r.dim_end);
  if (r.dim_moduli) out["dim_moduli"] = io::integer_json(*r.dim_moduli);
  return out;
}

Json cmd_portrait_conditions(const Args& a) {
  Portrait p = load_portrait(a.file);
  auto c = dynport::weighted_necessary_conditions(p, checked_degree(a.degree));
  Json cycles = Json::object();
  for (const auto& [n, ok] : c.cycles) cycles[std::to_string(n)] = ok;
  return {{"I", c.preimages},
          {"II", c.ramification},
          {"III", cycles},
          {"overall", c.overall},
          {"verdict", dynport::to_string(c.overall ? dynport::NonemptyVerdict::kNecessaryConditionsHold
                                                   : dynport::NonemptyVerdict::kEmptyCertified)}};
}

Json cmd_portrait_sp(const Args& a) {
  Portrait p = load_portrait(a.file);
  auto rels = dynport::sp_relations(p);
  Json out = Json::array();
  for (const auto& r : rels)
    out.push_back({{"i", p.name(r.i)}, {"j", p.name(r.j)}, {"m", r.m}, {"n", r.n}});
  return {{"relations", out},
          {"count", rels.size()},
          {"T", dynport::critical_set(p).size()},
          {"zeta", dynport::zeta(p)}};
}

Json cmd_portrait_frame(const Args& a) {
  Portrait p = load_portrait(a.file);
  unsigned d = checked_degree(a.degree);
  Portrait f = dynport::frame(p, d);
  return {{"complete_critical", true},
          {"primitive", dynport::is_critically_primitive(p)},
          {"frame", io::portrait_json(f)}};
}

Json cmd_portrait_fibers(const Args& a) {
  Portrait p = load_portrait(a.file);
  Portrait q = load_portrait(a.file2);
  auto r = dynport::fiber_image_dims(q, p, checked_degree(a.degree), checked_dim(a.dim));
  return {{"fiber_dim", io::integer_json(r.fiber_dim)},
          {"image_codim", io::integer_json(r.image_codim)}};
}

Json cmd_dyn_eval(const Args& a) {
  RationalMap f = load_map(a.map);
  return {{"image", io::point_json(f(io::parse_point(a.point)))}};
}

Json cmd_dyn_multiplicity(const Args& a) {
  RationalMap f = load_map(a.map);
  return {{"multiplicity", dynport::multiplicity(f, io::parse_point(a.point))}};
}

Json cmd_dyn_crit(const Args& a) {
  RationalMap f = load_map(a.map);
  auto cd = dynport::critical_divisor(f);
  Json roots = Json::array();
  for (const auto& r : cd.rational_roots)
    roots.push_back({{"point", io::point_json(r.point)}, {"multiplicity", r.multiplicity}});
  return {{"wronskian", form_json(cd.wronskian)},
          {"degree", cd.wronskian.degree()},
          {"roots", roots}};
}

Json cmd_dyn_dynatomic(const Args& a) {
  RationalMap f = load_map(a.map);
  unsigned n = checked_positive(a.n, "period");
  auto phi = dynport::dynatomic_polynomial(f, n);
  return {{"n", n}, {"degree", phi.degree()}, {"coefficients", form_json(phi)}};
}

Json cmd_dyn_verify(const Args& a) {
  RationalMap f = load_map(a.map);
  Portrait p = load_portrait(a.portrait);
  auto pts = io::parse_assignment(read_json(a.points), p);
  auto check = dynport::verify_model(f, p, pts);
  Json failures = Json::array();
  for (const auto& fl : check.failures) {
    Json j{{"kind", dynport::to_string(fl.kind)}, {"vertex", fl.vertex}, {"detail", fl.detail}};
    if (!fl.other.empty()) j["other"] = fl.other;
    failures.push_back(j);
  }
  return {{"model", check.ok()}, {"failures", failures}};
}

Json cmd_dyn_extract(const Args& a) {
  RationalMap f = load_map(a.map);
  auto pts = io::parse_points(read_json(a.points));
  auto m = dynport::extract_portrait(f, pts);
  Json assignment = Json::object();
  for (dynport::Vertex v = 0; v < m.portrait.size(); ++v)
    assignment[m.portrait.name(v)] = io::point_json(m.assignment[v]);
  return {{"portrait", io::portrait_json(m.portrait)}, {"assignment", assignment}};
}

Json cmd_dyn_reduce(const Args& a) {
  RationalMap f = load_map(a.map);
  Integer p = dynport::parse_integer(a.prime);
  if (a.points.empty() != a.portrait.empty())
    throw ParseError("POINTS and PORTRAIT must be given together");
  Portrait portrait;
  std::vector<dynport::ProjectivePoint> pts;
  if (!a.portrait.empty()) {
    portrait = load_portrait(a.portrait);
    pts = io::parse_assignment(read_json(a.points), portrait);
  }
  auto r = dynport::reduce_and_check_good_reduction(f, pts, portrait, p);
  return {{"map_good", r.map_good}, {"bullet", r.bullet}, {"circ", r.circ}, {"star", r.star}};
}

Json cmd_mod_nu(const Args& a) {
  unsigned d = checked_degree(a.degree), dim = checked_dim(a.dim);
  unsigned n = checked_positive(a.n, "n");
  if (a.m < -1) throw DomainError("m must be nonnegative");
  Integer v = a.m >= 0 ? dynport::nu_pre(d, dim, static_cast<unsigned long>(a.m), n)
                       : dynport::nu(d, dim, n);
  return {{"nu", io::integer_json(v)}};
}

Json cmd_mod_multipliers(const Args& a) {
  RationalMap f = load_map(a.map);
  unsigned n = checked_positive(a.n, "period");
  auto data = dynport::multiplier_polynomial(f, n);
  Json coeffs = Json::array();
  const auto& c = data.poly.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) coeffs.push_back(dynport::to_string(*it));
  Json sym = Json::array();
  for (const auto& s : data.symmetric_functions) sym.push_back(dynport::to_string(s));
  return {{"n", n}, {"degree", data.poly.degree()}, {"coefficients", coeffs}, {"symmetric_functions", sym}};
}

Json cmd_mod_milnor(const Args& a) {
  RationalMap f = load_map(a.map);
  auto [s1, s2] = dynport::milnor_coordinates(f);
  return {{"s1", dynport::to_string(s1)}, {"s2", dynport::to_string(s2)}};
}

Json cmd_mod_ueda(const Args& a) {
  RationalMap f = load_map(a.map);
  if (a.k != 0 && a.k != 1) throw ParseError("-k must be 0 or 1");
  auto v = dynport::ueda_sum(f, static_cast<unsigned>(a.k));
  if (!v) throw DomainError("a fixed point has multiplier 1; the sum is undefined");
  return {{"k", a.k}, {"simple", true}, {"value", dynport::to_string(*v)}};
}

Json cmd_git_stability(const Args& a) {
  auto inst = io::parse_stability(read_json(a.config));
  auto v = dynport::verdict(inst);
  return {{"semistable", certificate_json(v.semistable)}, {"stable", certificate_json(v.stable)}};
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", message}, {"kind", kind}};
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for dynamical portraits and rational maps on P^1"};
  app.require_subcommand(1);
  Args args;
  Handler handler;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                  Handler h) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };

  CLI::App* portrait = app.add_subcommand("portrait", "Portrait combinatorics");
  portrait->require_subcommand(1);
  CLI::App* dyn = app.add_subcommand("dyn", "Rational map dynamics");
  dyn->require_subcommand(1);
  CLI::App* mod = app.add_subcommand("mod", "Counting and multiplier invariants");
  mod->require_subcommand(1);
  CLI::App* git = app.add_subcommand("git", "Stability of marked configurations");
  git->require_subcommand(1);

  auto file_arg = [&](CLI::App* s) { s->add_option("FILE", args.file, "Portrait JSON")->required(); };
  auto map_arg = [&](CLI::App* s) { s->add_option("MAP", args.map, "Map JSON")->required(); };
  auto degree = [&](CLI::App* s) { s->add_option("--degree", args.degree, "Map degree d")->required(); };
  auto dimension = [&](CLI::App* s) { s->add_option("--dim", args.dim, "Projective dimension N")->required(); };

  file_arg(leaf(portrait, "validate", "Validate a portrait", cmd_portrait_validate));
  file_arg(leaf(portrait, "aut", "Automorphism group", cmd_portrait_aut));
  file_arg(leaf(portrait, "stats", "Portrait statistics", cmd_portrait_stats));
  {
    auto s = leaf(portrait, "nonempty", "Nonemptiness of an unweighted moduli space", cmd_portrait_nonempty);
    file_arg(s); degree(s); dimension(s);
  }
  {
    auto s = leaf(portrait, "dim", "Expected dimension", cmd_portrait_dim);
    file_arg(s); degree(s); dimension(s);
  }
  {
    auto s = leaf(portrait, "conditions", "Necessary conditions for weighted portraits", cmd_portrait_conditions);
    file_arg(s); degree(s);
  }
  file_arg(leaf(portrait, "sp", "Minimal critical relation system", cmd_portrait_sp));
  {
    auto s = leaf(portrait, "frame", "Frame of a complete critical portrait", cmd_portrait_frame);
    file_arg(s); degree(s);
  }
  {
    auto s = leaf(portrait, "fibers", "Fiber and image dimensions for P' in P", cmd_portrait_fibers);
    s->add_option("PFILE", args.file, "Portrait P")->required();
    s->add_option("PPRIMEFILE", args.file2, "Subportrait P'")->required();
    degree(s); dimension(s);
  }

  {
    auto s = leaf(dyn, "eval", "Evaluate the map at a point", cmd_dyn_eval);
    map_arg(s);
    s->add_option("--point", args.point, "Point: rational, or inf")->required();
  }
  {
    auto s = leaf(dyn, "multiplicity", "Local multiplicity at a point", cmd_dyn_multiplicity);
    map_arg(s);
    s->add_option("--point", args.point, "Point: rational, or inf")->required();
  }
  map_arg(leaf(dyn, "crit", "Critical divisor", cmd_dyn_crit));
  {
    auto s = leaf(dyn, "dynatomic", "Dynatomic form", cmd_dyn_dynatomic);
    map_arg(s);
    s->add_option("-n", args.n, "Period")->required();
  }
  {
    auto s = leaf(dyn, "verify", "Check a model", cmd_dyn_verify);
    map_arg(s);
    s->add_option("POINTS", args.points, "Points JSON")->required();
    s->add_option("PORTRAIT", args.portrait, "Portrait JSON")->required();
  }
  {
    auto s = leaf(dyn, "extract", "Portrait cut out by a point list", cmd_dyn_extract);
    map_arg(s);
    s->add_option("POINTS", args.points, "Points JSON")->required();
  }
  {
    auto s = leaf(dyn, "reduce", "Good reduction at a prime", cmd_dyn_reduce);
    map_arg(s);
    s->add_option("--prime", args.prime, "Prime p")->required();
    s->add_option("POINTS", args.points, "Points JSON");
    s->add_option("PORTRAIT", args.portrait, "Portrait JSON");
  }

  {
    auto s = leaf(mod, "nu", "Periodic point count", cmd_mod_nu);
    degree(s); dimension(s);
    s->add_option("-n", args.n, "Period")->required();
    s->add_option("-m", args.m, "Preperiod");
  }
  {
    auto s = leaf(mod, "multipliers", "Multiplier polynomial", cmd_mod_multipliers);
    map_arg(s);
    s->add_option("-n", args.n, "Period")->required();
  }
  map_arg(leaf(mod, "milnor", "Milnor coordinates of a quadratic map", cmd_mod_milnor));
  {
    auto s = leaf(mod, "ueda", "Fixed point multiplier sum", cmd_mod_ueda);
    map_arg(s);
    s->add_option("-k", args.k, "Exponent, 0 or 1")->required();
  }

  {
    auto s = leaf(git, "stability", "Stability verdict for a configuration", cmd_git_stability);
    s->add_option("CONFIG", args.config, "Stability configuration JSON")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(error_json("parse", e.what()));
    return 2;
  }

  try {
    emit(handler(args));
    return 0;
  } catch (const ParseError& e) {
    emit(error_json("parse", e.what()));
    return 2;
  } catch (const DomainError& e) {
    emit(error_json("domain", e.what()));
    return 1;
  } catch (const Json::exception& e) {
    emit(error_json("parse", e.what()));
    return 2;
  }
}
