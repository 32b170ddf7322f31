#pragma once

// Covering-space construction of measurement ancillas for the torus:
// lift a logical loop to the plane to read off its deck transformation
// t_{r,s}, quotient the plane by <t_{r,s}> to get the cylinder where
// that loop is the unique logical class, and instantiate a finite
// ribbon neighborhood of the lifted loop together with the cell map
// down to the torus.
//
// The infinite cylinder is never materialized: cells live in plane
// coordinates reduced to a canonical orbit representative, and only
// the ribbon is instantiated.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "homm/complex.hpp"
#include "homm/css.hpp"
#include "homm/errors.hpp"
#include "homm/f2.hpp"

namespace homm {

// The translation t_{r,s}: (x,y) -> (x + d r, y + d s).
struct Deck {
  int r = 0;
  int s = 0;
  bool operator==(const Deck&) const = default;
};

// Traverses the loop from its basepoint accumulating displacement in
// the plane; a closed torus walk always displaces by a lattice-vector
// multiple of d. Contractible loops give (0,0).
inline Deck lift_deck(const TorusLattice& torus, const EdgePath& loop) {
  validate_path(torus.complex(), loop);
  if (!path_is_closed(torus.complex(), loop))
    throw std::invalid_argument("lift_deck: walk is not closed");
  long x = 0, y = 0;
  for (const WalkStep& s : loop.steps) {
    auto geom = torus.edge_geom(s.edge);
    long dx = geom.horizontal ? 1 : 0;
    long dy = geom.horizontal ? 0 : 1;
    if (!s.forward) {
      dx = -dx;
      dy = -dy;
    }
    x += dx;
    y += dy;
  }
  const int d = torus.d();
  return Deck{static_cast<int>(x / d), static_cast<int>(y / d)};
}

// A cellulation-structure-preserving map from an ancilla complex onto
// a data complex: total functions on vertices, edges, and faces.
struct CellMap {
  CellComplex2 source;  // ancilla
  CellComplex2 target;  // data
  std::vector<std::uint32_t> vertex_map;
  std::vector<std::uint32_t> edge_map;
  std::vector<std::uint32_t> face_map;

  // Matrix forms acting on the chain spaces. Vertex spaces are spanned
  // by checked vertices only; a source vertex whose image is rough
  // maps to zero.
  f2::BitMatrix gamma1() const {
    f2::BitMatrix g(target.num_edges(), source.num_edges());
    for (std::uint32_t e = 0; e < source.num_edges(); ++e) g.set(edge_map[e], e);
    return g;
  }

  f2::BitMatrix gamma2() const {
    f2::BitMatrix g(target.num_faces(), source.num_faces());
    for (std::uint32_t f = 0; f < source.num_faces(); ++f) g.set(face_map[f], f);
    return g;
  }

  f2::BitMatrix gamma0() const {
    auto s_checked = source.checked_vertices();
    std::vector<std::int32_t> t_row(target.num_vertices, -1);
    {
      std::int32_t next = 0;
      for (std::uint32_t v = 0; v < target.num_vertices; ++v)
        if (!target.rough[v]) t_row[v] = next++;
    }
    f2::BitMatrix g(target.num_checked(), s_checked.size());
    for (std::size_t j = 0; j < s_checked.size(); ++j) {
      std::int32_t row = t_row[vertex_map[s_checked[j]]];
      if (row >= 0) g.set(static_cast<std::size_t>(row), j);
    }
    return g;
  }
};

inline CellMap identity_cellmap(const CellComplex2& m) {
  CellMap map;
  map.source = m;
  map.target = m;
  map.vertex_map.resize(m.num_vertices);
  std::iota(map.vertex_map.begin(), map.vertex_map.end(), 0u);
  map.edge_map.resize(m.num_edges());
  std::iota(map.edge_map.begin(), map.edge_map.end(), 0u);
  map.face_map.resize(m.num_faces());
  std::iota(map.face_map.begin(), map.face_map.end(), 0u);
  return map;
}

// Exact check of the commutative diagram: d2 g2 = g1 d2' on faces and
// g0 d1' = d1 g1 on edges. Residuals are kept so a passing certificate
// exhibits two all-zero matrices.
struct CellMapCertificate {
  f2::BitMatrix face_residual;    // d2 g2 + g1 d2', one column per source face
  f2::BitMatrix vertex_residual;  // g0 d1' + d1 g1, one column per source edge
  std::vector<std::uint32_t> bad_faces;
  std::vector<std::uint32_t> bad_edges;

  bool ok() const { return bad_faces.empty() && bad_edges.empty(); }
};

inline CellMapCertificate verify_cellmap(const CellMap& map) {
  CssCode source = css_of_complex(map.source);
  CssCode target = css_of_complex(map.target);
  auto d2s = source.h_z.transpose();
  auto d2t = target.h_z.transpose();

  CellMapCertificate cert;
  auto face_lhs = d2t * map.gamma2();
  auto face_rhs = map.gamma1() * d2s;
  cert.face_residual = face_lhs;
  for (std::size_t r = 0; r < face_rhs.rows(); ++r)
    for (std::size_t c = 0; c < face_rhs.cols(); ++c)
      if (face_rhs.get(r, c)) cert.face_residual.flip(r, c);
  for (std::uint32_t f = 0; f < map.source.num_faces(); ++f)
    if (!cert.face_residual.col(f).zero()) cert.bad_faces.push_back(f);

  auto vert_lhs = map.gamma0() * source.h_x;
  auto vert_rhs = target.h_x * map.gamma1();
  cert.vertex_residual = vert_lhs;
  for (std::size_t r = 0; r < vert_rhs.rows(); ++r)
    for (std::size_t c = 0; c < vert_rhs.cols(); ++c)
      if (vert_rhs.get(r, c)) cert.vertex_residual.flip(r, c);
  for (std::uint32_t e = 0; e < map.source.num_edges(); ++e)
    if (!cert.vertex_residual.col(e).zero()) cert.bad_edges.push_back(e);

  return cert;
}

// Gate matrix of a cellular gadget: the matrix form of the edge map.
// Every column has weight exactly one; a data edge covered twice shows
// up as a row of weight two.
inline f2::BitMatrix gate_matrix(const CellMap& map) { return map.gamma1(); }

namespace detail {

// Square-lattice cells of the plane modulo the translation (a,b),
// identified by a canonical orbit representative of their anchor.
class QuotientLattice {
 public:
  QuotientLattice(int a, int b) : a_(a), b_(b), norm_(static_cast<long>(a) * a + static_cast<long>(b) * b) {
    if (norm_ == 0) throw std::invalid_argument("QuotientLattice: trivial translation");
  }

  std::pair<long, long> canon(long x, long y) const {
    long p = a_ * x + b_ * y;
    long k = floor_div(2 * p + norm_, 2 * norm_);
    return {x - k * a_, y - k * b_};
  }

 private:
  static long floor_div(long num, long den) {
    long q = num / den, r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
  }

  long a_, b_, norm_;
};

enum class CellKind : int { Vertex = 0, HEdge = 1, VEdge = 2, Face = 3 };

using CellKey = std::tuple<long, long, int>;  // canonical anchor + kind

inline CellKey key(const QuotientLattice& q, long x, long y, CellKind kind) {
  auto [cx, cy] = q.canon(x, y);
  return {cx, cy, static_cast<int>(kind)};
}

}  // namespace detail

struct CoveringAncilla {
  CellMap map;           // source: the ribbon ancilla, target: the torus
  EdgePath lifted_loop;  // the measured representative, on the ancilla
  Deck deck;
  int layers_pos = 0;  // face layers on the left of the directed loop
  int layers_neg = 0;  // and on its right
  bool primitive = true;  // gcd(r,s) = 1; non-primitive loops measure a composite class
};

namespace detail {

struct RibbonBuilder {
  const TorusLattice& torus;
  QuotientLattice quotient;
  Deck deck;
  // Lifted loop steps: plane anchor of the traversed edge + direction.
  struct LiftStep {
    long x, y;
    bool horizontal;
    bool forward;
  };
  std::vector<LiftStep> lift;
  long start_x = 0, start_y = 0;
  std::set<CellKey> faces;                  // included face keys
  std::vector<CellKey> frontier_pos, frontier_neg;

  RibbonBuilder(const TorusLattice& t, const EdgePath& loop, Deck g)
      : torus(t), quotient(t.d() * g.r, t.d() * g.s), deck(g) {
    auto [x0, y0] = t.vertex_xy(loop.start);
    start_x = x0;
    start_y = y0;
    long x = x0, y = y0;
    std::set<CellKey> pos_seen, neg_seen;
    for (const WalkStep& s : loop.steps) {
      auto geom = t.edge_geom(s.edge);
      LiftStep ls{0, 0, geom.horizontal, s.forward};
      long fx_pos, fy_pos, fx_neg, fy_neg;  // faces left/right of travel
      if (geom.horizontal && s.forward) {  // east
        ls.x = x;
        ls.y = y;
        fx_pos = x; fy_pos = y;
        fx_neg = x; fy_neg = y - 1;
        ++x;
      } else if (geom.horizontal) {  // west
        ls.x = x - 1;
        ls.y = y;
        fx_pos = x - 1; fy_pos = y - 1;
        fx_neg = x - 1; fy_neg = y;
        --x;
      } else if (s.forward) {  // north
        ls.x = x;
        ls.y = y;
        fx_pos = x - 1; fy_pos = y;
        fx_neg = x; fy_neg = y;
        ++y;
      } else {  // south
        ls.x = x;
        ls.y = y - 1;
        fx_pos = x; fy_pos = y - 1;
        fx_neg = x - 1; fy_neg = y - 1;
        --y;
      }
      lift.push_back(ls);
      auto kp = key(quotient, fx_pos, fy_pos, CellKind::Face);
      auto kn = key(quotient, fx_neg, fy_neg, CellKind::Face);
      if (pos_seen.insert(kp).second) frontier_pos.push_back(kp);
      if (neg_seen.insert(kn).second) frontier_neg.push_back(kn);
    }
  }

  // Adds one layer of faces adjacent to the given frontier; the new
  // faces become that side's next frontier.
  void grow(std::vector<CellKey>& frontier) {
    // First layer: the frontier faces themselves are not yet included.
    std::vector<CellKey> fresh;
    for (const CellKey& f : frontier)
      if (faces.insert(f).second) fresh.push_back(f);
    if (!fresh.empty()) {
      frontier = fresh;
      return;
    }
    std::vector<CellKey> next;
    std::set<CellKey> seen;
    for (const CellKey& f : frontier) {
      auto [x, y, kind] = f;
      const long nx[4] = {x + 1, x - 1, x, x};
      const long ny[4] = {y, y, y + 1, y - 1};
      for (int i = 0; i < 4; ++i) {
        auto k = key(quotient, nx[i], ny[i], CellKind::Face);
        if (!faces.count(k) && seen.insert(k).second) next.push_back(k);
      }
    }
    for (const CellKey& f : next) faces.insert(f);
    frontier = next;
  }

  // Instantiates the current cell set as a complex plus the map down
  // to the torus. Cells are indexed in canonical key order, so the
  // result is independent of growth history.
  CoveringAncilla finalize(int layers_pos, int layers_neg) const {
    const int d = torus.d();
    std::map<CellKey, std::uint32_t> edge_ids, vertex_ids, face_ids;
    auto touch_vertex = [&](long x, long y) {
      vertex_ids.emplace(key(quotient, x, y, CellKind::Vertex), 0);
    };
    auto touch_edge = [&](long x, long y, bool horizontal) {
      edge_ids.emplace(key(quotient, x, y, horizontal ? CellKind::HEdge : CellKind::VEdge), 0);
      touch_vertex(x, y);
      touch_vertex(horizontal ? x + 1 : x, horizontal ? y : y + 1);
    };
    for (const LiftStep& s : lift) touch_edge(s.x, s.y, s.horizontal);
    for (const CellKey& f : faces) {
      auto [x, y, kind] = f;
      face_ids.emplace(f, 0);
      touch_edge(x, y, true);
      touch_edge(x, y + 1, true);
      touch_edge(x, y, false);
      touch_edge(x + 1, y, false);
    }
    std::uint32_t next = 0;
    for (auto& [k, id] : vertex_ids) id = next++;
    next = 0;
    for (auto& [k, id] : edge_ids) id = next++;
    next = 0;
    for (auto& [k, id] : face_ids) id = next++;

    auto vertex_at = [&](long x, long y) {
      return vertex_ids.at(key(quotient, x, y, CellKind::Vertex));
    };
    auto edge_at = [&](long x, long y, bool horizontal) {
      return edge_ids.at(key(quotient, x, y, horizontal ? CellKind::HEdge : CellKind::VEdge));
    };

    CellMap map;
    map.target = torus.complex();
    map.source.num_vertices = vertex_ids.size();
    map.source.rough.assign(vertex_ids.size(), false);
    map.source.edges.resize(edge_ids.size());
    map.source.faces.resize(face_ids.size());
    map.vertex_map.resize(vertex_ids.size());
    map.edge_map.resize(edge_ids.size());
    map.face_map.resize(face_ids.size());

    auto wrap = [d](long a) { return static_cast<int>(((a % d) + d) % d); };
    for (const auto& [k, id] : vertex_ids) {
      auto [x, y, kind] = k;
      map.vertex_map[id] = torus.vertex(wrap(x), wrap(y));
    }
    for (const auto& [k, id] : edge_ids) {
      auto [x, y, kind] = k;
      bool horizontal = kind == static_cast<int>(CellKind::HEdge);
      map.source.edges[id] = {vertex_at(x, y), vertex_at(horizontal ? x + 1 : x, horizontal ? y : y + 1)};
      map.edge_map[id] =
          horizontal ? torus.hedge(wrap(x), wrap(y)) : torus.vedge(wrap(x), wrap(y));
    }
    for (const auto& [k, id] : face_ids) {
      auto [x, y, kind] = k;
      map.source.faces[id] = {edge_at(x, y, true), edge_at(x + 1, y, false),
                              edge_at(x, y + 1, true), edge_at(x, y, false)};
      map.face_map[id] = torus.face(wrap(x), wrap(y));
    }
    map.source.validate();

    CoveringAncilla out;
    out.deck = deck;
    out.layers_pos = layers_pos;
    out.layers_neg = layers_neg;
    out.primitive = std::gcd(std::abs(deck.r), std::abs(deck.s)) == 1;
    out.lifted_loop.start = vertex_at(start_x, start_y);
    for (const LiftStep& s : lift)
      out.lifted_loop.steps.push_back({edge_at(s.x, s.y, s.horizontal), s.forward});
    validate_path(map.source, out.lifted_loop);
    out.map = std::move(map);
    return out;
  }
};

}  // namespace detail

// Ribbon of fixed width: width 1 is the bare lifted loop (a repetition
// code, the cat-state gadget), width w adds w-1 face layers on each
// side. No distance guarantee; use the auto builder for d_A = d_D.
inline CoveringAncilla build_covering_ancilla(const TorusLattice& torus, const EdgePath& loop,
                                              int width) {
  if (width < 1)
    throw std::invalid_argument("build_covering_ancilla: width must be >= 1");
  Deck deck = lift_deck(torus, loop);
  if (deck == Deck{0, 0})
    throw std::invalid_argument("build_covering_ancilla: loop is contractible");
  detail::RibbonBuilder builder(torus, loop, deck);
  auto pos = builder.frontier_pos;
  auto neg = builder.frontier_neg;
  for (int layer = 1; layer < width; ++layer) {
    builder.grow(pos);
    builder.grow(neg);
  }
  return builder.finalize(width - 1, width - 1);
}

// Verify-and-grow: starting from the bare lifted loop, face layers are
// added on alternating sides until the ribbon's distance reaches the
// data distance. Since each layer changes the minimum cut by at most
// one, the result lands on d_A = d_D exactly; k' = 1 is checked at
// every step.
inline CoveringAncilla build_covering_ancilla_auto(const TorusLattice& torus,
                                                   const EdgePath& loop) {
  Deck deck = lift_deck(torus, loop);
  if (deck == Deck{0, 0})
    throw std::invalid_argument("build_covering_ancilla: loop is contractible");
  auto data_dist = surface_distance(torus.complex());
  std::size_t d_data = std::min(data_dist.d_z, data_dist.d_x);

  detail::RibbonBuilder builder(torus, loop, deck);
  auto pos = builder.frontier_pos;
  auto neg = builder.frontier_neg;
  int layers_pos = 0, layers_neg = 0;
  const int max_layers = 4 * torus.d() + 8;
  while (true) {
    auto anc = builder.finalize(layers_pos, layers_neg);
    auto code = css_of_complex(anc.map.source);
    if (code.k != 1)
      throw std::logic_error("build_covering_ancilla_auto: ribbon does not encode one qubit");
    auto dist = surface_distance(anc.map.source);
    if (std::min(dist.d_z, dist.d_x) >= d_data) return anc;
    if (layers_pos + layers_neg >= max_layers)
      throw std::logic_error("build_covering_ancilla_auto: growth did not converge");
    if (layers_pos <= layers_neg) {
      builder.grow(pos);
      ++layers_pos;
    } else {
      builder.grow(neg);
      ++layers_neg;
    }
  }
}

}  // namespace homm
