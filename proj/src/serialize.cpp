#include "coverlift/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace coverlift {

namespace {

std::string side_id(Side s) { return "t" + std::to_string(s.tri) + "." + std::to_string(s.index); }

Side parse_side(const std::string& id) {
  const auto dot = id.find('.');
  if (id.size() < 4 || id[0] != 't' || dot == std::string::npos || dot + 2 != id.size()) {
    throw std::invalid_argument("bad side identifier '" + id + "'");
  }
  const int index = id[dot + 1] - '0';
  if (index < 0 || index > 2) throw std::invalid_argument("bad side index in '" + id + "'");
  return Side{std::stoi(id.substr(1, dot - 1)), index};
}

int parse_edge(const std::string& id, int num_edges) {
  if (id.size() < 2 || id[0] != 'e') throw std::invalid_argument("bad edge identifier '" + id + "'");
  std::size_t used = 0;
  const int e = std::stoi(id.substr(1), &used);
  if (used + 1 != id.size() || e < 0 || e >= num_edges) throw std::invalid_argument("unknown edge '" + id + "'");
  return e;
}

Json surface_json(const Surface& s) { return Json{{"genus", s.genus}, {"punctures", s.punctures}}; }

void check_surface(const Triangulation& t, const Json& j) {
  if (!j.contains("surface")) return;
  const Surface s = t.surface();
  if (j["surface"].at("genus").get<int>() != s.genus || j["surface"].at("punctures").get<int>() != s.punctures) {
    throw std::invalid_argument("curve belongs to a different surface");
  }
}

}  // namespace

Json to_json(const Triangulation& t) {
  Json j = surface_json(t.surface());
  Json triangles = Json::array();
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    triangles.push_back({side_id({tri, 0}), side_id({tri, 1}), side_id({tri, 2})});
  }
  Json gluings = Json::array();
  for (int e = 0; e < t.num_edges(); ++e) {
    gluings.push_back({side_id(t.sides_of(e)[0]), side_id(t.sides_of(e)[1])});
  }
  j["triangles"] = std::move(triangles);
  j["gluings"] = std::move(gluings);
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  const Json& triangles = j.at("triangles");
  const int nt = static_cast<int>(triangles.size());
  for (int tri = 0; tri < nt; ++tri) {
    for (int k = 0; k < 3; ++k) {
      if (!(parse_side(triangles[tri].at(k).get<std::string>()) == Side{tri, k})) {
        throw std::invalid_argument("triangle " + std::to_string(tri) + " lists sides out of canonical order");
      }
    }
  }
  std::vector<std::array<Side, 2>> edges;
  for (const Json& g : j.at("gluings")) {
    edges.push_back({parse_side(g.at(0).get<std::string>()), parse_side(g.at(1).get<std::string>())});
  }
  Triangulation t(nt, std::move(edges));
  const Surface s = t.surface();
  if (j.contains("genus") && j["genus"].get<int>() != s.genus) throw TopologyError("genus does not match gluings");
  if (j.contains("punctures") && j["punctures"].get<int>() != s.punctures) {
    throw TopologyError("puncture count does not match gluings");
  }
  return t;
}

Json curve_to_json(const Triangulation& t, const Coords& w) {
  Json weights = Json::object();
  for (std::size_t e = 0; e < w.size(); ++e) weights["e" + std::to_string(e)] = w[e];
  return Json{{"surface", surface_json(t.surface())}, {"weights", std::move(weights)}};
}

Coords coords_from_json(const Triangulation& t, const Json& j) {
  check_surface(t, j);
  Coords w(t.num_edges(), 0);
  for (const auto& [key, value] : j.at("weights").items()) w[parse_edge(key, t.num_edges())] = value.get<Weight>();
  return w;
}

CurveClass curve_from_json(const Triangulation& t, const Json& j) { return CurveClass::certify(t, coords_from_json(t, j)); }

Json to_json(const Triangulation& t, const CoverSpec& spec) {
  Json perms = Json::object();
  for (int e = 0; e < t.num_edges() && e < static_cast<int>(spec.perms.size()); ++e) {
    Json p = Json::array();
    for (int x : spec.perms[e]) p.push_back(x + 1);
    perms["e" + std::to_string(e)] = std::move(p);
  }
  return Json{{"degree", spec.degree}, {"perms", std::move(perms)}};
}

CoverSpec cover_spec_from_json(const Triangulation& t, const Json& j) {
  CoverSpec spec = CoverSpec::identity(t, j.at("degree").get<int>());
  for (const auto& [key, value] : j.at("perms").items()) {
    Permutation p;
    for (const Json& x : value) p.push_back(x.get<int>() - 1);
    spec.perms[parse_edge(key, t.num_edges())] = std::move(p);
  }
  return spec;
}

Json to_json(const DistanceCertificate& c) {
  Json path = Json::array();
  for (const CurveClass& v : c.path) path.push_back(v.canonical());
  Json j{{"lower", c.lower}, {"lower_reason", to_string(c.lower_reason)}};
  j["upper"] = c.upper ? Json(*c.upper) : Json(nullptr);
  j["exact"] = c.exact();
  j["path"] = std::move(path);
  return j;
}

Json to_json(const Arrangement& arr) {
  Json chords = Json::array();
  for (const auto& c : arr.chords()) {
    chords.push_back(Json{{"triangle", c.tri}, {"curve", c.curve}, {"corner", c.corner}, {"rank", c.rank}});
  }
  Json vertices = Json::array();
  for (const auto& x : arr.crossings()) {
    vertices.push_back(Json{{"triangle", x.tri}, {"chords", {x.chord_a, x.chord_b}}});
  }
  Json faces = Json::array();
  for (const auto& f : arr.faces()) {
    Json boundaries = Json::array();
    for (std::size_t i = 0; i < f.boundaries.size(); ++i) {
      Json sides = Json::array();
      for (const Side& s : f.boundaries[i]) sides.push_back(side_id(s));
      boundaries.push_back(Json{{"vertices", f.boundary_vertices[i]}, {"sides", std::move(sides)}});
    }
    faces.push_back(Json{{"euler", f.euler}, {"punctures", f.punctures}, {"boundaries", std::move(boundaries)}});
  }
  return Json{{"vertices", std::move(vertices)},
              {"arcs", arr.num_arcs()},
              {"chords", std::move(chords)},
              {"faces", std::move(faces)},
              {"bigon_free", arr.bigon_free()},
              {"euler_consistent", arr.euler_consistent()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace coverlift
