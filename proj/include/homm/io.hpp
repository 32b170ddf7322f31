#pragma once

// File formats: the plain-text check-matrix format used by fixtures,
// and the JSON schemas for codes, complexes, cell maps, and gadget
// bundles that the CLI reads and writes. nlohmann::json keeps object
// keys sorted, so serialization is byte-deterministic.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "homm/complex.hpp"
#include "homm/cover.hpp"
#include "homm/css.hpp"
#include "homm/f2.hpp"
#include "homm/gadget.hpp"

namespace homm::io {

using json = nlohmann::json;

// --- matrix text format: first line "rows cols", then 0/1 strings ---

inline std::string matrix_to_text(const f2::BitMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).str() << '\n';
  return out.str();
}

inline f2::BitMatrix matrix_from_text(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw std::invalid_argument("matrix text: missing header");
  f2::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line) || line.size() != cols)
      throw std::invalid_argument("matrix text: bad row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] == '1')
        m.set(r, c);
      else if (line[c] != '0')
        throw std::invalid_argument("matrix text: expected 0/1");
    }
  }
  return m;
}

inline f2::BitMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  return matrix_from_text(in);
}

// --- JSON schemas ---

inline json code_to_json(const CssCode& code) {
  return json{{"n", code.n}, {"h_x", code.h_x.row_strings()}, {"h_z", code.h_z.row_strings()}};
}

inline CssCode code_from_json(const json& j) {
  std::size_t n = j.at("n").get<std::size_t>();
  auto parse = [n](const json& rows) {
    std::vector<std::string> strs = rows.get<std::vector<std::string>>();
    if (strs.empty()) return f2::BitMatrix(0, n);
    return f2::BitMatrix::from_rows(strs);
  };
  auto h_x = parse(j.at("h_x"));
  auto h_z = parse(j.at("h_z"));
  if (h_x.cols() != n || h_z.cols() != n)
    throw std::invalid_argument("code json: row strings disagree with n");
  return css_from_checks(h_x, h_z);
}

inline json complex_to_json(const CellComplex2& m) {
  json edges = json::array();
  for (const auto& e : m.edges) edges.push_back({e.u, e.v});
  json segments = json::object();
  for (const auto& [name, seg] : m.rough_segments)
    segments[name] = {{"outer_vertices", seg.outer_vertices},
                      {"dangling_edges", seg.dangling_edges},
                      {"gap_faces", seg.gap_faces}};
  std::vector<std::uint32_t> rough;
  for (std::uint32_t v = 0; v < m.num_vertices; ++v)
    if (m.rough[v]) rough.push_back(v);
  return json{{"vertices", m.num_vertices},
              {"edges", edges},
              {"faces", m.faces},
              {"rough_vertices", rough},
              {"rough_segments", segments}};
}

inline CellComplex2 complex_from_json(const json& j) {
  CellComplex2 m;
  m.num_vertices = j.at("vertices").get<std::size_t>();
  m.rough.assign(m.num_vertices, false);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("complex json: edge must be a vertex pair");
    m.edges.push_back({e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>()});
  }
  m.faces = j.at("faces").get<std::vector<std::vector<std::uint32_t>>>();
  for (std::uint32_t v : j.at("rough_vertices").get<std::vector<std::uint32_t>>()) {
    if (v >= m.num_vertices) throw std::invalid_argument("complex json: rough vertex range");
    m.rough[v] = true;
  }
  if (j.contains("rough_segments"))
    for (const auto& [name, seg] : j.at("rough_segments").items()) {
      RoughSegment s;
      s.outer_vertices = seg.at("outer_vertices").get<std::vector<std::uint32_t>>();
      s.dangling_edges = seg.at("dangling_edges").get<std::vector<std::uint32_t>>();
      s.gap_faces = seg.at("gap_faces").get<std::vector<std::uint32_t>>();
      m.rough_segments[name] = std::move(s);
    }
  m.validate();
  return m;
}

inline json cellmap_to_json(const CellMap& map) {
  return json{{"source", complex_to_json(map.source)},
              {"target", complex_to_json(map.target)},
              {"vertex_map", map.vertex_map},
              {"edge_map", map.edge_map},
              {"face_map", map.face_map}};
}

inline CellMap cellmap_from_json(const json& j) {
  CellMap map;
  map.source = complex_from_json(j.at("source"));
  map.target = complex_from_json(j.at("target"));
  map.vertex_map = j.at("vertex_map").get<std::vector<std::uint32_t>>();
  map.edge_map = j.at("edge_map").get<std::vector<std::uint32_t>>();
  map.face_map = j.at("face_map").get<std::vector<std::uint32_t>>();
  if (map.vertex_map.size() != map.source.num_vertices ||
      map.edge_map.size() != map.source.num_edges() ||
      map.face_map.size() != map.source.num_faces())
    throw std::invalid_argument("cellmap json: map sizes disagree with source complex");
  return map;
}

inline json bundle_to_json(const HomGadget& g) {
  json j{{"data", code_to_json(g.data)},
         {"ancilla", code_to_json(g.ancilla)},
         {"gamma", g.gamma.row_strings()},
         {"cellmap", nullptr}};
  if (g.origin) j["cellmap"] = cellmap_to_json(*g.origin);
  return j;
}

// Parses and re-validates the gadget conditions; throws
// GadgetConditionViolation when the stored gadget is not valid.
inline HomGadget bundle_from_json(const json& j) {
  auto data = code_from_json(j.at("data"));
  auto ancilla = code_from_json(j.at("ancilla"));
  auto rows = j.at("gamma").get<std::vector<std::string>>();
  f2::BitMatrix gamma =
      rows.empty() ? f2::BitMatrix(0, ancilla.n) : f2::BitMatrix::from_rows(rows);
  std::optional<CellMap> origin;
  if (j.contains("cellmap") && !j.at("cellmap").is_null())
    origin = cellmap_from_json(j.at("cellmap"));
  return validate(data, ancilla, gamma, std::move(origin));
}

// --- small file helpers ---

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace homm::io
