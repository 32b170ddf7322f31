#pragma once

// Finite 2D cellulations and the surface codes they define: torus and
// cylinder builders, planar patches with rough boundaries, walks and
// loops as logical representatives, loop composition, and exact
// distance computation via homology-labeled BFS.
//
// Rough boundaries are modeled with explicit outer vertices that carry
// no X-check ("rough" vertices); a rough boundary segment is a run of
// dangling edges ending at such vertices, with the truncated faces
// between consecutive danglers. Faces are stored as cyclically ordered
// edge lists; truncated faces are open walks whose two loose ends are
// rough vertices.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homm/css.hpp"
#include "homm/errors.hpp"
#include "homm/f2.hpp"

namespace homm {

struct RoughSegment {
  std::vector<std::uint32_t> outer_vertices;  // ordered along the boundary
  std::vector<std::uint32_t> dangling_edges;  // dangling_edges[i] is incident to outer_vertices[i]
  std::vector<std::uint32_t> gap_faces;       // truncated face between danglers i and i+1
};

struct CellComplex2 {
  struct Edge {
    std::uint32_t u = 0, v = 0;
  };

  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<std::uint32_t>> faces;
  std::vector<bool> rough;  // per vertex; rough vertices carry no X-check
  std::map<std::string, RoughSegment> rough_segments;

  std::size_t num_edges() const { return edges.size(); }
  std::size_t num_faces() const { return faces.size(); }

  bool is_rough(std::uint32_t v) const { return v < rough.size() && rough[v]; }

  std::size_t num_checked() const {
    std::size_t c = 0;
    for (std::size_t v = 0; v < num_vertices; ++v)
      if (!rough[v]) ++c;
    return c;
  }

  std::vector<std::uint32_t> checked_vertices() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < num_vertices; ++v)
      if (!rough[v]) out.push_back(v);
    return out;
  }

  // Faces bordering each edge, in face-id order.
  std::vector<std::vector<std::uint32_t>> edge_faces() const {
    std::vector<std::vector<std::uint32_t>> out(edges.size());
    for (std::uint32_t f = 0; f < faces.size(); ++f)
      for (std::uint32_t e : faces[f]) out[e].push_back(f);
    return out;
  }

  // Structural checks; throws std::invalid_argument on violation.
  void validate() const {
    if (rough.size() != num_vertices)
      throw std::invalid_argument("complex: rough flag count != vertex count");
    for (const Edge& e : edges)
      if (e.u >= num_vertices || e.v >= num_vertices)
        throw std::invalid_argument("complex: edge endpoint out of range");
    auto ef = edge_faces();
    for (const auto& fs : ef)
      if (fs.size() > 2) throw std::invalid_argument("complex: edge borders more than 2 faces");
    for (const auto& face : faces) validate_face_walk(face);
    for (const auto& [name, seg] : rough_segments) {
      if (seg.outer_vertices.size() != seg.dangling_edges.size() ||
          seg.gap_faces.size() + 1 != seg.outer_vertices.size())
        throw std::invalid_argument("complex: malformed rough segment " + name);
      for (std::uint32_t v : seg.outer_vertices)
        if (!is_rough(v)) throw std::invalid_argument("complex: segment vertex not rough");
    }
  }

 private:
  // A face must chain into a single walk that either closes or has
  // both loose ends on rough vertices.
  void validate_face_walk(const std::vector<std::uint32_t>& face) const {
    if (face.empty()) throw std::invalid_argument("complex: empty face");
    for (std::uint32_t e : face)
      if (e >= edges.size()) throw std::invalid_argument("complex: face edge out of range");
    for (int dir = 0; dir < 2; ++dir) {
      std::uint32_t start = dir == 0 ? edges[face[0]].u : edges[face[0]].v;
      std::uint32_t cur = dir == 0 ? edges[face[0]].v : edges[face[0]].u;
      bool ok = true;
      for (std::size_t i = 1; i < face.size(); ++i) {
        const Edge& e = edges[face[i]];
        if (e.u == cur) {
          cur = e.v;
        } else if (e.v == cur) {
          cur = e.u;
        } else {
          ok = false;
          break;
        }
      }
      if (ok && (cur == start || (is_rough(cur) && is_rough(start)))) return;
    }
    throw std::invalid_argument("complex: face edges do not form a walk");
  }
};

// H_X = incidence of checked vertices, H_Z rows = faces.
inline CssCode css_of_complex(const CellComplex2& m) {
  std::vector<std::int32_t> row_of(m.num_vertices, -1);
  std::int32_t next = 0;
  for (std::uint32_t v = 0; v < m.num_vertices; ++v)
    if (!m.rough[v]) row_of[v] = next++;
  f2::BitMatrix h_x(static_cast<std::size_t>(next), m.num_edges());
  for (std::uint32_t e = 0; e < m.num_edges(); ++e) {
    const auto& ed = m.edges[e];
    if (row_of[ed.u] >= 0) h_x.flip(static_cast<std::size_t>(row_of[ed.u]), e);
    if (row_of[ed.v] >= 0) h_x.flip(static_cast<std::size_t>(row_of[ed.v]), e);
  }
  f2::BitMatrix h_z(m.num_faces(), m.num_edges());
  for (std::uint32_t f = 0; f < m.num_faces(); ++f)
    for (std::uint32_t e : m.faces[f]) h_z.flip(f, e);
  return css_from_checks(h_x, h_z);
}

// ---------------------------------------------------------------------------
// Walks and loops

struct WalkStep {
  std::uint32_t edge = 0;
  bool forward = true;  // traversed u -> v
};

struct EdgePath {
  std::uint32_t start = 0;
  std::vector<WalkStep> steps;
};

inline std::uint32_t step_from(const CellComplex2& m, const WalkStep& s) {
  return s.forward ? m.edges[s.edge].u : m.edges[s.edge].v;
}

inline std::uint32_t step_to(const CellComplex2& m, const WalkStep& s) {
  return s.forward ? m.edges[s.edge].v : m.edges[s.edge].u;
}

inline void validate_path(const CellComplex2& m, const EdgePath& p) {
  std::uint32_t cur = p.start;
  for (const WalkStep& s : p.steps) {
    if (s.edge >= m.num_edges()) throw std::invalid_argument("path: edge out of range");
    if (step_from(m, s) != cur) throw std::invalid_argument("path: steps do not chain");
    cur = step_to(m, s);
  }
}

inline std::uint32_t path_end(const CellComplex2& m, const EdgePath& p) {
  return p.steps.empty() ? p.start : step_to(m, p.steps.back());
}

inline bool path_is_closed(const CellComplex2& m, const EdgePath& p) {
  return path_end(m, p) == p.start;
}

// The walk as a GF(2) edge vector; edges traversed twice cancel.
inline f2::BitVec path_edge_vector(const CellComplex2& m, const EdgePath& p) {
  f2::BitVec v(m.num_edges());
  for (const WalkStep& s : p.steps) v.flip(s.edge);
  return v;
}

inline EdgePath reverse_path(const CellComplex2& m, const EdgePath& p) {
  EdgePath r;
  r.start = path_end(m, p);
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
    r.steps.push_back(WalkStep{it->edge, !it->forward});
  return r;
}

// Rebase a closed walk at the first visit of `v`.
inline EdgePath rotate_loop(const CellComplex2& m, const EdgePath& loop, std::uint32_t v) {
  if (!path_is_closed(m, loop)) throw std::invalid_argument("rotate_loop: walk is not closed");
  std::uint32_t cur = loop.start;
  for (std::size_t i = 0; i < loop.steps.size(); ++i) {
    if (cur == v) {
      EdgePath out;
      out.start = v;
      out.steps.insert(out.steps.end(), loop.steps.begin() + i, loop.steps.end());
      out.steps.insert(out.steps.end(), loop.steps.begin(), loop.steps.begin() + i);
      return out;
    }
    cur = step_to(m, loop.steps[i]);
  }
  if (cur == v && loop.steps.empty()) return loop;
  throw std::invalid_argument("rotate_loop: vertex not on loop");
}

// l1 . p . l2 . reverse(p), based where p starts. As a GF(2) edge
// vector the result is l1 ^ l2; as a walk it is one closed loop.
inline EdgePath compose_loops(const CellComplex2& m, const EdgePath& l1, const EdgePath& p,
                              const EdgePath& l2) {
  if (!path_is_closed(m, l1) || !path_is_closed(m, l2))
    throw std::invalid_argument("compose_loops: l1 and l2 must be closed");
  validate_path(m, l1);
  validate_path(m, p);
  validate_path(m, l2);
  EdgePath a = rotate_loop(m, l1, p.start);             // throws if p.start not on l1
  EdgePath b = rotate_loop(m, l2, path_end(m, p));      // throws if p's end not on l2
  EdgePath out;
  out.start = a.start;
  out.steps = a.steps;
  out.steps.insert(out.steps.end(), p.steps.begin(), p.steps.end());
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  EdgePath back = reverse_path(m, p);
  out.steps.insert(out.steps.end(), back.steps.begin(), back.steps.end());
  validate_path(m, out);
  return out;
}

// ---------------------------------------------------------------------------
// Builders

// The d x d torus lattice with its indexing conventions kept around
// for loop presets and for lifting walks to the plane.
class TorusLattice {
 public:
  explicit TorusLattice(int d) : d_(d) {
    if (d < 2) throw std::invalid_argument("TorusLattice: d must be >= 2");
    m_.num_vertices = static_cast<std::size_t>(d) * d;
    m_.rough.assign(m_.num_vertices, false);
    m_.edges.resize(2 * m_.num_vertices);
    for (int y = 0; y < d; ++y)
      for (int x = 0; x < d; ++x) {
        m_.edges[hedge(x, y)] = {vertex(x, y), vertex(x + 1, y)};
        m_.edges[vedge(x, y)] = {vertex(x, y), vertex(x, y + 1)};
      }
    m_.faces.resize(m_.num_vertices);
    for (int y = 0; y < d; ++y)
      for (int x = 0; x < d; ++x)
        m_.faces[face(x, y)] = {hedge(x, y), vedge(x + 1, y), hedge(x, y + 1), vedge(x, y)};
    m_.validate();
  }

  int d() const { return d_; }
  const CellComplex2& complex() const { return m_; }

  std::uint32_t vertex(int x, int y) const {
    return static_cast<std::uint32_t>(wrap(y) * d_ + wrap(x));
  }
  std::uint32_t hedge(int x, int y) const { return vertex(x, y); }
  std::uint32_t vedge(int x, int y) const {
    return static_cast<std::uint32_t>(d_ * d_) + vertex(x, y);
  }
  std::uint32_t face(int x, int y) const { return vertex(x, y); }

  std::pair<int, int> vertex_xy(std::uint32_t v) const {
    return {static_cast<int>(v % d_), static_cast<int>(v / d_)};
  }

  struct EdgeGeom {
    int x = 0, y = 0;
    bool horizontal = true;  // forward displacement (+1,0), else (0,+1)
  };

  EdgeGeom edge_geom(std::uint32_t e) const {
    bool horizontal = e < static_cast<std::uint32_t>(d_ * d_);
    std::uint32_t base = horizontal ? e : e - static_cast<std::uint32_t>(d_ * d_);
    return EdgeGeom{static_cast<int>(base % d_), static_cast<int>(base / d_), horizontal};
  }

  // Horizontal loop along row y = 0, eastwards.
  EdgePath loop_z1() const {
    EdgePath p{vertex(0, 0), {}};
    for (int x = 0; x < d_; ++x) p.steps.push_back({hedge(x, 0), true});
    return p;
  }

  // Vertical loop along column x = 0, northwards.
  EdgePath loop_z2() const {
    EdgePath p{vertex(0, 0), {}};
    for (int y = 0; y < d_; ++y) p.steps.push_back({vedge(0, y), true});
    return p;
  }

  // Representative of the Z1Z2 class: the row loop followed by the
  // column loop from the shared basepoint, one self-intersecting walk
  // of length 2d whose edge vector is exactly Z1 ^ Z2.
  EdgePath loop_z1z2() const {
    EdgePath p = loop_z1();
    EdgePath col = loop_z2();
    p.steps.insert(p.steps.end(), col.steps.begin(), col.steps.end());
    return p;
  }

  // Tight diagonal staircase, the other natural (1,1) representative;
  // simple (no self-intersection), weight 2d.
  EdgePath loop_staircase() const {
    EdgePath p{vertex(0, 0), {}};
    for (int i = 0; i < d_; ++i) {
      p.steps.push_back({hedge(i, i), true});
      p.steps.push_back({vedge(i + 1, i), true});
    }
    return p;
  }

 private:
  int wrap(int a) const { return (a % d_ + d_) % d_; }

  int d_;
  CellComplex2 m_;
};

inline CellComplex2 build_torus(int d) { return TorusLattice(d).complex(); }

// Circumference c (wrapping), h rows of vertices. Two smooth boundary
// circles; h = 1 gives the 1D circle (repetition code, no faces).
inline CellComplex2 build_cylinder(int c, int h) {
  if (c < 2 || h < 1) throw std::invalid_argument("build_cylinder: need c >= 2, h >= 1");
  CellComplex2 m;
  m.num_vertices = static_cast<std::size_t>(c) * h;
  m.rough.assign(m.num_vertices, false);
  auto vid = [c](int x, int y) { return static_cast<std::uint32_t>(y * c + (x % c + c) % c); };
  auto he = [&](int x, int y) { return vid(x, y); };
  auto ve = [&, c, h](int x, int y) { return static_cast<std::uint32_t>(c * h) + vid(x, y); };
  m.edges.resize(static_cast<std::size_t>(c) * h + static_cast<std::size_t>(c) * (h - 1));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < c; ++x) m.edges[he(x, y)] = {vid(x, y), vid(x + 1, y)};
  for (int y = 0; y + 1 < h; ++y)
    for (int x = 0; x < c; ++x) m.edges[ve(x, y)] = {vid(x, y), vid(x, y + 1)};
  for (int y = 0; y + 1 < h; ++y)
    for (int x = 0; x < c; ++x)
      m.faces.push_back({he(x, y), ve(x + 1, y), he(x, y + 1), ve(x, y)});
  m.validate();
  return m;
}

// Planar patch with three rough segments: the full left side ("left")
// and the right side split in two ("right-top", "right-bottom") by a
// smooth gap row. Encodes two logical qubits; closing either right
// segment leaves the patch that measures the other logical.
inline CellComplex2 build_planar_patch(int d) {
  if (d < 2) throw std::invalid_argument("build_planar_patch: d must be >= 2");
  const int rows = 2 * d - 1, cols = d;
  CellComplex2 m;
  auto vid = [cols](int x, int y) { return static_cast<std::uint32_t>(y * cols + x); };
  std::uint32_t next_vertex = static_cast<std::uint32_t>(rows * cols);
  std::vector<std::uint32_t> hs(static_cast<std::size_t>(rows) * (cols - 1));
  std::vector<std::uint32_t> vs(static_cast<std::size_t>(rows - 1) * cols);
  auto add_edge = [&m](std::uint32_t u, std::uint32_t v) {
    m.edges.push_back({u, v});
    return static_cast<std::uint32_t>(m.edges.size() - 1);
  };
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x + 1 < cols; ++x)
      hs[static_cast<std::size_t>(y) * (cols - 1) + x] = add_edge(vid(x, y), vid(x + 1, y));
  for (int y = 0; y + 1 < rows; ++y)
    for (int x = 0; x < cols; ++x)
      vs[static_cast<std::size_t>(y) * cols + x] = add_edge(vid(x, y), vid(x, y + 1));
  auto h_at = [&](int x, int y) { return hs[static_cast<std::size_t>(y) * (cols - 1) + x]; };
  auto v_at = [&](int x, int y) { return vs[static_cast<std::size_t>(y) * cols + x]; };

  for (int y = 0; y + 1 < rows; ++y)
    for (int x = 0; x + 1 < cols; ++x)
      m.faces.push_back({h_at(x, y), v_at(x + 1, y), h_at(x, y + 1), v_at(x, y)});

  std::vector<bool> rough(next_vertex, false);
  // Dangling edge + fresh rough outer vertex per boundary row of a segment,
  // and a truncated face between each consecutive pair.
  auto add_segment = [&](const std::string& name, int x_col, const std::vector<int>& seg_rows) {
    RoughSegment seg;
    for (int y : seg_rows) {
      std::uint32_t outer = next_vertex++;
      rough.push_back(true);
      std::uint32_t dangle = x_col == 0 ? add_edge(outer, vid(0, y)) : add_edge(vid(cols - 1, y), outer);
      seg.outer_vertices.push_back(outer);
      seg.dangling_edges.push_back(dangle);
    }
    for (std::size_t i = 0; i + 1 < seg_rows.size(); ++i) {
      int x_edge = x_col == 0 ? 0 : cols - 1;
      m.faces.push_back(
          {seg.dangling_edges[i], v_at(x_edge, seg_rows[i]), seg.dangling_edges[i + 1]});
      seg.gap_faces.push_back(static_cast<std::uint32_t>(m.faces.size() - 1));
    }
    m.rough_segments[name] = seg;
  };

  std::vector<int> all_rows(rows);
  for (int y = 0; y < rows; ++y) all_rows[y] = y;
  std::vector<int> top_rows, bottom_rows;
  for (int y = 0; y < d - 1; ++y) top_rows.push_back(y);
  for (int y = d; y < rows; ++y) bottom_rows.push_back(y);
  add_segment("left", 0, all_rows);
  add_segment("right-top", cols - 1, top_rows);
  add_segment("right-bottom", cols - 1, bottom_rows);

  m.num_vertices = next_vertex;
  m.rough = rough;
  m.validate();
  return m;
}

// Converts every rough segment not named in `keep` into a smooth
// boundary: the outer vertices become checked, consecutive outer
// vertices are joined by new edges, and the truncated faces in between
// are completed with them.
inline CellComplex2 close_rough_boundaries(const CellComplex2& m,
                                           const std::set<std::string>& keep) {
  for (const auto& name : keep)
    if (!m.rough_segments.count(name))
      throw std::invalid_argument("close_rough_boundaries: unknown segment " + name);
  CellComplex2 out = m;
  for (const auto& [name, seg] : m.rough_segments) {
    if (keep.count(name)) continue;
    for (std::size_t i = 0; i + 1 < seg.outer_vertices.size(); ++i) {
      out.edges.push_back({seg.outer_vertices[i], seg.outer_vertices[i + 1]});
      out.faces[seg.gap_faces[i]].push_back(static_cast<std::uint32_t>(out.edges.size() - 1));
    }
    for (std::uint32_t v : seg.outer_vertices) out.rough[v] = false;
    out.rough_segments.erase(name);
  }
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Distance via homology-labeled BFS

namespace detail {

struct LabeledGraph {
  std::size_t num_nodes = 0;
  struct E {
    std::uint32_t a = 0, b = 0;
    std::uint32_t label = 0;  // pairing bits against the dual logical basis
    std::uint32_t qubit = 0;
  };
  std::vector<E> edges;
};

// Minimum-length closed walk with a nonzero homology label, found by
// BFS over (node, label) states from every basepoint. The support of
// the walk (a nontrivial logical representative) is returned with it.
inline std::pair<std::size_t, f2::BitVec> shortest_nontrivial_cycle(const LabeledGraph& g,
                                                                    std::size_t num_labels,
                                                                    std::size_t num_qubits) {
  const std::uint32_t masks = std::uint32_t{1} << num_labels;
  std::vector<std::vector<std::uint32_t>> incident(g.num_nodes);
  for (std::uint32_t i = 0; i < g.edges.size(); ++i) {
    incident[g.edges[i].a].push_back(i);
    if (g.edges[i].b != g.edges[i].a) incident[g.edges[i].b].push_back(i);
  }
  std::size_t best = SIZE_MAX;
  f2::BitVec best_support;
  std::vector<std::int32_t> dist(g.num_nodes * masks);
  std::vector<std::uint32_t> parent_state(g.num_nodes * masks), parent_edge(g.num_nodes * masks);
  for (std::uint32_t s = 0; s < g.num_nodes; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<std::uint32_t> queue;
    auto state = [masks](std::uint32_t node, std::uint32_t label) { return node * masks + label; };
    dist[state(s, 0)] = 0;
    queue.push_back(state(s, 0));
    std::int64_t found = -1;
    while (!queue.empty()) {
      std::uint32_t cur = queue.front();
      queue.pop_front();
      std::uint32_t node = cur / masks, label = cur % masks;
      if (node == s && label != 0) {
        found = cur;
        break;
      }
      if (best != SIZE_MAX && static_cast<std::size_t>(dist[cur]) + 1 >= best) continue;
      for (std::uint32_t ei : incident[node]) {
        const auto& e = g.edges[ei];
        std::uint32_t to = (e.a == node) ? e.b : e.a;
        std::uint32_t next = state(to, label ^ e.label);
        if (dist[next] < 0) {
          dist[next] = dist[cur] + 1;
          parent_state[next] = cur;
          parent_edge[next] = ei;
          queue.push_back(next);
        }
      }
    }
    if (found < 0) continue;
    auto length = static_cast<std::size_t>(dist[static_cast<std::size_t>(found)]);
    if (length < best) {
      best = length;
      best_support = f2::BitVec(num_qubits);
      std::uint32_t cur = static_cast<std::uint32_t>(found);
      while (dist[cur] > 0) {
        best_support.flip(g.edges[parent_edge[cur]].qubit);
        cur = parent_state[cur];
      }
    }
  }
  if (best == SIZE_MAX) throw std::logic_error("shortest_nontrivial_cycle: no cycle found");
  return {best, best_support};
}

// Representatives of ker(checks) modulo rs(stabs), one per logical class.
inline std::vector<f2::BitVec> logical_class_basis(const f2::BitMatrix& checks,
                                                   const f2::BitMatrix& stabs) {
  std::vector<f2::BitVec> reps;
  f2::Reducer acc(stabs);
  auto kernel = f2::kernel_basis(checks);
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    if (acc.insert(kernel.row(r))) reps.push_back(kernel.row(r));
  return reps;
}

inline std::uint32_t pairing_label(const std::vector<f2::BitVec>& reps, std::uint32_t qubit) {
  std::uint32_t label = 0;
  for (std::size_t j = 0; j < reps.size(); ++j)
    if (reps[j].get(qubit)) label |= std::uint32_t{1} << j;
  return label;
}

}  // namespace detail

struct SurfaceDistance {
  std::size_t d_z = 0;
  std::size_t d_x = 0;
};

// d_z: shortest homologically nontrivial cycle in the edge graph, with
// all rough vertices merged into one terminal so open strings between
// rough boundaries count as cycles through it. d_x: the same search on
// the dual graph, with the outside merged into one terminal reachable
// across boundary edges. Both results are re-verified against the
// check matrices before being returned.
inline SurfaceDistance surface_distance(const CellComplex2& m) {
  CssCode code = css_of_complex(m);
  if (code.k == 0) throw KIsZero("surface_distance: complex encodes no logical qubit");
  if (code.k > 16) throw std::invalid_argument("surface_distance: too many logical classes");

  auto verify = [](const f2::BitMatrix& checks, const f2::BitMatrix& stabs,
                   const f2::BitVec& v, std::size_t len) {
    if (v.weight() != len || !checks.mul(v).zero() || f2::rowspace_contains(stabs, v))
      throw std::logic_error("surface_distance: cycle fails logical verification");
  };

  // Primal side (Z-type logicals).
  detail::LabeledGraph gz;
  std::vector<std::uint32_t> node_of(m.num_vertices);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < m.num_vertices; ++v)
    if (!m.rough[v]) node_of[v] = next++;
  std::uint32_t rough_node = next;
  bool has_rough = false;
  for (std::uint32_t v = 0; v < m.num_vertices; ++v)
    if (m.rough[v]) {
      node_of[v] = rough_node;
      has_rough = true;
    }
  gz.num_nodes = next + (has_rough ? 1 : 0);
  auto x_reps = detail::logical_class_basis(code.h_z, code.h_x);
  for (std::uint32_t e = 0; e < m.num_edges(); ++e)
    gz.edges.push_back({node_of[m.edges[e].u], node_of[m.edges[e].v],
                        detail::pairing_label(x_reps, e), e});
  auto [dz, z_support] = detail::shortest_nontrivial_cycle(gz, x_reps.size(), m.num_edges());
  verify(code.h_x, code.h_z, z_support, dz);

  // Dual side (X-type logicals).
  detail::LabeledGraph gx;
  auto ef = m.edge_faces();
  bool has_boundary = false;
  for (const auto& fs : ef)
    if (fs.size() < 2) has_boundary = true;
  std::uint32_t outside = static_cast<std::uint32_t>(m.num_faces());
  gx.num_nodes = m.num_faces() + (has_boundary ? 1 : 0);
  auto z_reps = detail::logical_class_basis(code.h_x, code.h_z);
  for (std::uint32_t e = 0; e < m.num_edges(); ++e) {
    std::uint32_t a = ef[e].size() > 0 ? ef[e][0] : outside;
    std::uint32_t b = ef[e].size() > 1 ? ef[e][1] : outside;
    gx.edges.push_back({a, b, detail::pairing_label(z_reps, e), e});
  }
  auto [dx, x_support] = detail::shortest_nontrivial_cycle(gx, z_reps.size(), m.num_edges());
  verify(code.h_z, code.h_x, x_support, dx);

  return SurfaceDistance{dz, dx};
}

}  // namespace homm
