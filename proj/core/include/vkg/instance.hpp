// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vkg/complex.hpp"
#include "vkg/cover.hpp"

namespace vkg {

// On-disk description of a cover instance: a base complex, a cover (either a
// family of named subcomplexes, or an explicit cell map with sections, or a
// map alone for the auto star cover), and a base set.
struct InstanceDocument {
  struct SectionSpec {
    std::string piece;
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
    std::map<std::string, std::string> face_map;
  };

  struct MapSpec {
    Complex2 total;
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
    std::map<std::string, std::string> face_map;
    std::vector<Subcomplex> pieces;     // may be empty: auto star cover
    std::vector<SectionSpec> sections;  // one per piece when pieces are given
  };

  Complex2 complex;
  std::vector<Subcomplex> pieces; // cover given as subcomplexes
  std::optional<MapSpec> map;     // or as an explicit map

  enum class BaseKind { List, All, Point };
  BaseKind base_kind = BaseKind::All;
  std::vector<std::string> base_vertices;
};

InstanceDocument parse_instance(const std::string& json_text);
InstanceDocument load_instance(const std::string& path);
std::string serialize_instance(const InstanceDocument& doc);

struct BuiltInstance {
  SectionedCover cover;
  BaseSet base;
};

// Resolves the document into a runnable cover: piece families through
// cover_to_map, explicit maps with their declared sections, bare maps through
// the auto star cover.
BuiltInstance build_instance(const InstanceDocument& doc);

} // namespace vkg
