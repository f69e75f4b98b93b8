// SPDX-License-Identifier: Apache-2.0
#include "vkg/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vkg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("instance document: " + where + ": " + what);
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const json& require_member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing required key '" + key + "'");
  return *it;
}

// Edge references in boundaries: "a" or "a^-1".
EdgeStep parse_step(const std::string& text, const std::string& where) {
  if (text.empty()) fail(where, "empty edge reference");
  if (text.size() > 3 && text.substr(text.size() - 3) == "^-1")
    return EdgeStep{text.substr(0, text.size() - 3), -1};
  return EdgeStep{text, 1};
}

std::string step_text(const EdgeStep& s) {
  return s.sign > 0 ? s.edge : s.edge + "^-1";
}

void check_id(const std::string& id, const std::string& where) {
  if (id.empty()) fail(where, "empty id");
  for (char c : id) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '-' || c == '.' || c == '@';
    if (!ok)
      fail(where, "id '" + id + "' contains '" + std::string(1, c) +
                      "'; allowed: alphanumerics and _-.@");
  }
}

Complex2 parse_complex(const json& j, const std::string& where) {
  std::vector<std::string> vertices;
  for (const auto& v : require_member(j, "vertices", where)) {
    std::string id = require_string(v, where + ".vertices");
    check_id(id, where + ".vertices");
    vertices.push_back(id);
  }
  std::vector<EdgeCell> edges;
  if (j.contains("edges")) {
    std::size_t i = 0;
    for (const auto& e : j.at("edges")) {
      std::string at = where + ".edges[" + std::to_string(i++) + "]";
      EdgeCell cell;
      cell.id = require_string(require_member(e, "id", at), at + ".id");
      check_id(cell.id, at + ".id");
      cell.src = require_string(require_member(e, "src", at), at + ".src");
      cell.dst = require_string(require_member(e, "dst", at), at + ".dst");
      edges.push_back(std::move(cell));
    }
  }
  std::vector<FaceCell> faces;
  if (j.contains("faces")) {
    std::size_t i = 0;
    for (const auto& f : j.at("faces")) {
      std::string at = where + ".faces[" + std::to_string(i++) + "]";
      FaceCell cell;
      cell.id = require_string(require_member(f, "id", at), at + ".id");
      check_id(cell.id, at + ".id");
      std::vector<EdgeStep> steps;
      for (const auto& s : require_member(f, "boundary", at))
        steps.push_back(parse_step(require_string(s, at + ".boundary"), at + ".boundary"));
      if (steps.empty()) fail(at, "face boundary must be nonempty");
      // endpoints are implied; path_at validates closedness at Complex2::make
      cell.boundary.steps = std::move(steps);
      faces.push_back(std::move(cell));
    }
  }

  // boundary endpoints need edge data; fill then validate via make
  std::map<std::string, EdgeCell> by_id;
  for (const auto& e : edges) by_id[e.id] = e;
  for (auto& f : faces) {
    const std::string& first_id = f.boundary.steps.front().edge;
    const std::string& last_id = f.boundary.steps.back().edge;
    if (!by_id.count(first_id) || !by_id.count(last_id))
      fail(where, "face '" + f.id + "' references an unknown edge");
    const EdgeCell& first = by_id.at(first_id);
    f.boundary.src = f.boundary.steps.front().sign > 0 ? first.src : first.dst;
    const EdgeCell& last = by_id.at(last_id);
    f.boundary.dst = f.boundary.steps.back().sign > 0 ? last.dst : last.src;
  }
  try {
    return Complex2::make(std::move(vertices), std::move(edges), std::move(faces));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

json complex_to_json(const Complex2& x) {
  json j;
  j["vertices"] = x.vertices();
  j["edges"] = json::array();
  for (const auto& e : x.edges())
    j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  j["faces"] = json::array();
  for (const auto& f : x.faces()) {
    json steps = json::array();
    for (const auto& s : f.boundary.steps) steps.push_back(step_text(s));
    j["faces"].push_back({{"id", f.id}, {"boundary", std::move(steps)}});
  }
  return j;
}

Subcomplex parse_piece(const json& j, const std::string& where) {
  Subcomplex u;
  u.name = require_string(require_member(j, "name", where), where + ".name");
  check_id(u.name, where + ".name");
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices")) u.vertices.insert(require_string(v, where));
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) u.edges.insert(require_string(e, where));
  if (j.contains("faces"))
    for (const auto& f : j.at("faces")) u.faces.insert(require_string(f, where));
  return u;
}

json piece_to_json(const Subcomplex& u) {
  json j;
  j["name"] = u.name;
  j["vertices"] = u.vertices;
  j["edges"] = u.edges;
  j["faces"] = u.faces;
  return j;
}

std::map<std::string, std::string> parse_string_map(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = require_string(v, where + "." + k);
  return out;
}

} // namespace

InstanceDocument parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance document: invalid JSON: ") + e.what());
  }

  InstanceDocument doc;
  doc.complex = parse_complex(require_member(j, "complex", "document"), "complex");

  const json& cover = require_member(j, "cover", "document");
  bool has_pieces = cover.contains("pieces");
  bool has_map = cover.contains("map");
  if (!has_pieces && !has_map) fail("cover", "needs either 'pieces' or 'map'");
  if (has_pieces && has_map) fail("cover", "has both 'pieces' and 'map'; pick one");

  if (has_pieces) {
    std::size_t i = 0;
    for (const auto& p : cover.at("pieces"))
      doc.pieces.push_back(parse_piece(p, "cover.pieces[" + std::to_string(i++) + "]"));
  } else {
    const json& m = cover.at("map");
    InstanceDocument::MapSpec spec;
    spec.total = parse_complex(require_member(m, "total", "cover.map"), "cover.map.total");
    spec.vertex_map = parse_string_map(require_member(m, "vertex_map", "cover.map"),
                                       "cover.map.vertex_map");
    spec.edge_map = parse_string_map(m.contains("edge_map") ? m.at("edge_map") : json::object(),
                                     "cover.map.edge_map");
    spec.face_map = parse_string_map(m.contains("face_map") ? m.at("face_map") : json::object(),
                                     "cover.map.face_map");
    if (m.contains("pieces")) {
      std::size_t i = 0;
      for (const auto& p : m.at("pieces"))
        spec.pieces.push_back(parse_piece(p, "cover.map.pieces[" + std::to_string(i++) + "]"));
    }
    if (m.contains("sections")) {
      std::size_t i = 0;
      for (const auto& s : m.at("sections")) {
        std::string at = "cover.map.sections[" + std::to_string(i++) + "]";
        InstanceDocument::SectionSpec sec;
        sec.piece = require_string(require_member(s, "piece", at), at + ".piece");
        sec.vertex_map = parse_string_map(require_member(s, "vertex_map", at), at + ".vertex_map");
        sec.edge_map = parse_string_map(s.contains("edge_map") ? s.at("edge_map") : json::object(),
                                        at + ".edge_map");
        sec.face_map = parse_string_map(s.contains("face_map") ? s.at("face_map") : json::object(),
                                        at + ".face_map");
        spec.sections.push_back(std::move(sec));
      }
    }
    if (!spec.pieces.empty() && spec.sections.size() != spec.pieces.size())
      fail("cover.map", "pieces and sections must pair up");
    if (spec.pieces.empty() && !spec.sections.empty())
      fail("cover.map", "sections given without pieces");
    doc.map = std::move(spec);
  }

  const json& base = require_member(j, "base_set", "document");
  if (base.is_string()) {
    std::string text = base.get<std::string>();
    if (text == "all") {
      doc.base_kind = InstanceDocument::BaseKind::All;
    } else {
      doc.base_kind = InstanceDocument::BaseKind::Point;
      doc.base_vertices = {text};
    }
  } else if (base.is_array()) {
    doc.base_kind = InstanceDocument::BaseKind::List;
    for (const auto& v : base) doc.base_vertices.push_back(require_string(v, "base_set"));
    if (doc.base_vertices.empty()) fail("base_set", "vertex list must be nonempty");
  } else {
    fail("base_set", "expected \"all\", a vertex, or a vertex list");
  }
  for (const auto& v : doc.base_vertices)
    if (!doc.complex.has_vertex(v)) fail("base_set", "unknown vertex '" + v + "'");
  return doc;
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const InstanceDocument& doc) {
  json j;
  j["complex"] = complex_to_json(doc.complex);
  json cover;
  if (doc.map) {
    json m;
    m["total"] = complex_to_json(doc.map->total);
    m["vertex_map"] = doc.map->vertex_map;
    m["edge_map"] = doc.map->edge_map;
    m["face_map"] = doc.map->face_map;
    if (!doc.map->pieces.empty()) {
      m["pieces"] = json::array();
      for (const auto& p : doc.map->pieces) m["pieces"].push_back(piece_to_json(p));
      m["sections"] = json::array();
      for (const auto& s : doc.map->sections)
        m["sections"].push_back({{"piece", s.piece},
                                 {"vertex_map", s.vertex_map},
                                 {"edge_map", s.edge_map},
                                 {"face_map", s.face_map}});
    }
    cover["map"] = std::move(m);
  } else {
    cover["pieces"] = json::array();
    for (const auto& p : doc.pieces) cover["pieces"].push_back(piece_to_json(p));
  }
  j["cover"] = std::move(cover);
  switch (doc.base_kind) {
    case InstanceDocument::BaseKind::All: j["base_set"] = "all"; break;
    case InstanceDocument::BaseKind::Point: j["base_set"] = doc.base_vertices.front(); break;
    case InstanceDocument::BaseKind::List: j["base_set"] = doc.base_vertices; break;
  }
  return j.dump(2) + "\n";
}

BuiltInstance build_instance(const InstanceDocument& doc) {
  BuiltInstance out;
  if (!doc.map) {
    out.cover = cover_to_map(doc.complex, doc.pieces);
  } else {
    CellMap projection;
    try {
      projection = CellMap::make(doc.map->total, doc.complex, doc.map->vertex_map,
                                 doc.map->edge_map, doc.map->face_map);
    } catch (const Error& e) {
      throw ParseError(std::string("cover.map: ") + e.what());
    }
    if (doc.map->pieces.empty()) {
      out.cover = star_cover(projection);
    } else {
      out.cover.projection = projection;
      for (std::size_t i = 0; i < doc.map->pieces.size(); ++i) {
        const Subcomplex& piece = doc.map->pieces[i];
        const InstanceDocument::SectionSpec& spec = doc.map->sections[i];
        if (spec.piece != piece.name)
          throw ParseError("cover.map.sections[" + std::to_string(i) +
                           "]: section is for piece '" + spec.piece + "', expected '" +
                           piece.name + "'");
        Complex2 part = induced_complex(doc.complex, piece);
        CellMap section;
        try {
          section = CellMap::make(part, doc.map->total, spec.vertex_map, spec.edge_map,
                                  spec.face_map);
        } catch (const Error& e) {
          throw ParseError("cover.map.sections[" + std::to_string(i) + "]: " + e.what());
        }
        out.cover.pieces.push_back(CoverPiece{piece, std::move(section)});
      }
    }
  }

  switch (doc.base_kind) {
    case InstanceDocument::BaseKind::All:
      out.base = BaseSet::all_of(doc.complex);
      break;
    case InstanceDocument::BaseKind::Point:
    case InstanceDocument::BaseKind::List:
      for (const auto& v : doc.base_vertices) out.base.vertices.insert(v);
      break;
  }
  return out;
}

} // namespace vkg
