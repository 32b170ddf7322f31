#pragma once

// Matching decoders on surface-code decoding graphs. A decoding graph
// is built straight from a check matrix whose columns have weight at
// most two: checks are nodes, each qubit is an edge between the checks
// it flips, and a qubit with a single check is an edge to the virtual
// boundary. For complexes this reproduces the dual (face) graph for X
// errors and the vertex graph for Z errors, rough terminals included.
//
// Exact mode: all-pairs BFS distances plus an optimal defect pairing
// by subset DP, which is minimum-weight over all corrections. Union-
// find mode: uniform cluster growth until every cluster is valid, then
// peeling inside the grown erasure.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "homm/errors.hpp"
#include "homm/f2.hpp"

namespace homm {

struct DecodingGraph {
  static constexpr std::int32_t kBoundary = -1;

  struct Edge {
    std::int32_t a = 0;
    std::int32_t b = kBoundary;
    std::uint32_t qubit = 0;
  };

  std::size_t num_nodes = 0;
  std::size_t num_qubits = 0;
  std::vector<Edge> edges;

  bool has_boundary() const {
    for (const Edge& e : edges)
      if (e.b == kBoundary) return true;
    return false;
  }

  // Checks-as-nodes graph; requires every column weight <= 2 (the
  // matchable case). Qubits touching no check get no edge.
  static DecodingGraph from_checks(const f2::BitMatrix& checks) {
    DecodingGraph g;
    g.num_nodes = checks.rows();
    g.num_qubits = checks.cols();
    for (std::size_t q = 0; q < checks.cols(); ++q) {
      auto s = checks.col(q).support();
      if (s.size() > 2)
        throw std::invalid_argument("DecodingGraph: a qubit flips more than two checks");
      if (s.empty()) continue;
      Edge e;
      e.a = static_cast<std::int32_t>(s[0]);
      e.b = s.size() == 2 ? static_cast<std::int32_t>(s[1]) : kBoundary;
      e.qubit = static_cast<std::uint32_t>(q);
      g.edges.push_back(e);
    }
    return g;
  }
};

enum class DecoderMode { Exact, UnionFind };

class MatchingDecoder {
 public:
  explicit MatchingDecoder(DecodingGraph graph) : g_(std::move(graph)) {
    incident_.resize(g_.num_nodes);
    for (std::uint32_t i = 0; i < g_.edges.size(); ++i) {
      const auto& e = g_.edges[i];
      incident_[e.a].push_back(i);
      if (e.b != DecodingGraph::kBoundary) incident_[e.b].push_back(i);
    }
    dist_.assign(g_.num_nodes, {});
    parent_.assign(g_.num_nodes, {});
    for (std::size_t s = 0; s < g_.num_nodes; ++s) bfs_from(s);
    if (g_.has_boundary()) bfs_from_boundary();
  }

  const DecodingGraph& graph() const { return g_; }

  // defects: one bit per check node. Returns a qubit-indexed
  // correction whose syndrome equals the defects exactly.
  f2::BitVec decode(const f2::BitVec& defects, DecoderMode mode = DecoderMode::Exact) const {
    if (defects.size() != g_.num_nodes)
      throw DimensionMismatch("MatchingDecoder: defect vector length != node count");
    auto d = defects.support();
    f2::BitVec correction(g_.num_qubits);
    if (d.empty()) return correction;
    if (d.size() % 2 == 1 && boundary_dist_.empty())
      throw std::invalid_argument("MatchingDecoder: odd defect parity with no boundary");
    if (mode == DecoderMode::Exact) {
      decode_exact(d, correction);
    } else {
      decode_union_find(defects, correction);
    }
    return correction;
  }

  std::size_t node_distance(std::size_t a, std::size_t b) const { return dist_[a][b]; }

 private:
  static constexpr std::int32_t kUnreached = -1;

  void bfs_from(std::size_t s) {
    auto& dist = dist_[s];
    auto& parent = parent_[s];
    dist.assign(g_.num_nodes, kUnreached);
    parent.assign(g_.num_nodes, 0);
    std::deque<std::size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (std::uint32_t ei : incident_[u]) {
        const auto& e = g_.edges[ei];
        if (e.b == DecodingGraph::kBoundary) continue;
        auto v = static_cast<std::size_t>(e.a) == u ? static_cast<std::size_t>(e.b)
                                                    : static_cast<std::size_t>(e.a);
        if (dist[v] == kUnreached) {
          dist[v] = dist[u] + 1;
          parent[v] = ei;
          q.push_back(v);
        }
      }
    }
  }

  void bfs_from_boundary() {
    boundary_dist_.assign(g_.num_nodes, kUnreached);
    boundary_parent_.assign(g_.num_nodes, 0);
    std::deque<std::size_t> q;
    for (std::uint32_t ei = 0; ei < g_.edges.size(); ++ei) {
      const auto& e = g_.edges[ei];
      if (e.b != DecodingGraph::kBoundary) continue;
      auto v = static_cast<std::size_t>(e.a);
      if (boundary_dist_[v] == kUnreached || boundary_dist_[v] > 1) {
        boundary_dist_[v] = 1;
        boundary_parent_[v] = ei;
        q.push_back(v);
      }
    }
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (std::uint32_t ei : incident_[u]) {
        const auto& e = g_.edges[ei];
        if (e.b == DecodingGraph::kBoundary) continue;
        auto v = static_cast<std::size_t>(e.a) == u ? static_cast<std::size_t>(e.b)
                                                    : static_cast<std::size_t>(e.a);
        if (boundary_dist_[v] == kUnreached) {
          boundary_dist_[v] = boundary_dist_[u] + 1;
          boundary_parent_[v] = ei;
          q.push_back(v);
        }
      }
    }
  }

  void xor_path(std::size_t from, std::size_t to, f2::BitVec& correction) const {
    auto v = to;
    while (v != from) {
      std::uint32_t ei = parent_[from][v];
      const auto& e = g_.edges[ei];
      correction.flip(e.qubit);
      v = static_cast<std::size_t>(e.a) == v ? static_cast<std::size_t>(e.b)
                                             : static_cast<std::size_t>(e.a);
    }
  }

  void xor_boundary_path(std::size_t from, f2::BitVec& correction) const {
    auto v = from;
    while (true) {
      std::uint32_t ei = boundary_parent_[v];
      const auto& e = g_.edges[ei];
      correction.flip(e.qubit);
      if (e.b == DecodingGraph::kBoundary) return;
      v = static_cast<std::size_t>(e.a) == v ? static_cast<std::size_t>(e.b)
                                             : static_cast<std::size_t>(e.a);
    }
  }

  // Optimal pairing by DP over defect subsets; minimum-weight perfect
  // matching with an optional boundary match per defect.
  void decode_exact(const std::vector<std::size_t>& d, f2::BitVec& correction) const {
    constexpr std::size_t kMaxDefects = 20;
    if (d.size() > kMaxDefects)
      throw std::invalid_argument("MatchingDecoder: too many defects for exact mode");
    const std::size_t k = d.size();
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    const long kInf = 1L << 60;
    std::vector<long> cost(full + 1, -1);
    cost[0] = 0;
    auto pair_cost = [&](std::size_t i, std::size_t j) {
      auto dd = dist_[d[i]][d[j]];
      return dd == kUnreached ? kInf : static_cast<long>(dd);
    };
    auto boundary_cost = [&](std::size_t i) {
      if (boundary_dist_.empty() || boundary_dist_[d[i]] == kUnreached) return kInf;
      return static_cast<long>(boundary_dist_[d[i]]);
    };
    auto solve = [&](auto&& self, std::uint32_t mask) -> long {
      if (cost[mask] >= 0) return cost[mask];
      std::size_t i = static_cast<std::size_t>(__builtin_ctz(mask));
      long best = boundary_cost(i) == kInf
                      ? kInf
                      : boundary_cost(i) + self(self, mask & ~(1u << i));
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!(mask >> j & 1)) continue;
        long c = pair_cost(i, j);
        if (c == kInf) continue;
        best = std::min(best, c + self(self, mask & ~(1u << i) & ~(1u << j)));
      }
      return cost[mask] = best;
    };
    if (solve(solve, full) >= kInf)
      throw std::invalid_argument("MatchingDecoder: defects cannot be matched");
    // Reconstruct the optimal pairing by re-walking the DP.
    std::uint32_t mask = full;
    while (mask) {
      std::size_t i = static_cast<std::size_t>(__builtin_ctz(mask));
      std::uint32_t rest = mask & ~(1u << i);
      if (boundary_cost(i) != kInf && cost[mask] == boundary_cost(i) + cost[rest]) {
        xor_boundary_path(d[i], correction);
        mask = rest;
        continue;
      }
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!(mask >> j & 1)) continue;
        std::uint32_t rest2 = rest & ~(1u << j);
        if (pair_cost(i, j) != kInf && cost[mask] == pair_cost(i, j) + cost[rest2]) {
          xor_path(d[i], d[j], correction);
          mask = rest2;
          break;
        }
      }
    }
  }

  // Uniform full-edge cluster growth; a cluster is valid once its
  // defect count is even or it has absorbed the boundary. Peeling the
  // grown erasure then produces the correction.
  void decode_union_find(const f2::BitVec& defects, f2::BitVec& correction) const {
    const std::size_t n = g_.num_nodes;
    const std::size_t bnode = n;  // virtual boundary
    std::vector<std::size_t> dsu(n + 1);
    for (std::size_t i = 0; i <= n; ++i) dsu[i] = i;
    auto find = [&](std::size_t x) {
      while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
      return x;
    };
    std::vector<std::uint32_t> parity(n + 1, 0);
    std::vector<std::vector<std::size_t>> members(n + 1);
    for (std::size_t v = 0; v < n; ++v) {
      members[v] = {v};
      parity[v] = defects.get(v);
    }
    std::vector<bool> edge_in(g_.edges.size(), false);
    std::vector<std::uint32_t> erasure;
    auto unite = [&](std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a == b) return;
      if (members[a].size() < members[b].size()) std::swap(a, b);
      dsu[b] = a;
      parity[a] += parity[b];
      members[a].insert(members[a].end(), members[b].begin(), members[b].end());
      members[b].clear();
    };
    auto invalid = [&](std::size_t root) {
      return parity[root] % 2 == 1 && root != find(bnode);
    };
    while (true) {
      std::vector<std::size_t> bad;
      for (std::size_t v = 0; v <= n; ++v)
        if (find(v) == v && invalid(v)) bad.push_back(v);
      if (bad.empty()) break;
      bool grew = false;
      for (std::size_t root : bad) {
        if (!invalid(find(root))) continue;  // merged into a valid cluster this round
        auto nodes = members[find(root)];
        for (std::size_t v : nodes) {
          for (std::uint32_t ei : incident_[v]) {
            if (edge_in[ei]) continue;
            edge_in[ei] = true;
            erasure.push_back(ei);
            grew = true;
            const auto& e = g_.edges[ei];
            std::size_t other = e.b == DecodingGraph::kBoundary ? bnode
                                : static_cast<std::size_t>(e.a) == v
                                    ? static_cast<std::size_t>(e.b)
                                    : static_cast<std::size_t>(e.a);
            unite(v, other);
          }
        }
      }
      if (!grew)
        throw std::invalid_argument("MatchingDecoder: union-find cannot absorb defect parity");
    }
    // Peel: forest over the erasure, boundary-rooted trees first.
    std::vector<std::int32_t> tree_parent(n + 1, -2);  // -2 unvisited, -1 root
    std::vector<std::uint32_t> tree_edge(n + 1, 0);
    std::vector<std::size_t> order;
    std::vector<std::vector<std::uint32_t>> er_incident(n + 1);
    for (std::uint32_t ei : erasure) {
      const auto& e = g_.edges[ei];
      std::size_t a = e.a;
      std::size_t b = e.b == DecodingGraph::kBoundary ? bnode : static_cast<std::size_t>(e.b);
      er_incident[a].push_back(ei);
      er_incident[b].push_back(ei);
    }
    auto bfs_tree = [&](std::size_t root) {
      tree_parent[root] = -1;
      std::deque<std::size_t> q{root};
      while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        order.push_back(u);
        for (std::uint32_t ei : er_incident[u]) {
          const auto& e = g_.edges[ei];
          std::size_t a = e.a;
          std::size_t b = e.b == DecodingGraph::kBoundary ? bnode : static_cast<std::size_t>(e.b);
          std::size_t v = a == u ? b : a;
          if (tree_parent[v] == -2) {
            tree_parent[v] = static_cast<std::int32_t>(u);
            tree_edge[v] = ei;
            q.push_back(v);
          }
        }
      }
    };
    if (!er_incident[bnode].empty()) bfs_tree(bnode);
    for (std::uint32_t ei : erasure) {
      const auto& e = g_.edges[ei];
      if (tree_parent[e.a] == -2) bfs_tree(e.a);
    }
    std::vector<std::uint32_t> defect_left(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) defect_left[v] = defects.get(v);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      std::size_t v = *it;
      if (tree_parent[v] < 0 || !defect_left[v]) continue;
      correction.flip(g_.edges[tree_edge[v]].qubit);
      defect_left[v] = 0;
      defect_left[static_cast<std::size_t>(tree_parent[v])] ^= 1;
    }
    defect_left[bnode] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (defect_left[v]) throw std::logic_error("MatchingDecoder: peeling left a defect");
  }

  DecodingGraph g_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::vector<std::int32_t>> dist_;
  std::vector<std::vector<std::uint32_t>> parent_;
  std::vector<std::int32_t> boundary_dist_;
  std::vector<std::uint32_t> boundary_parent_;
};

// One-shot convenience wrapper.
inline f2::BitVec matching_decode(const DecodingGraph& graph, const f2::BitVec& defects,
                                  DecoderMode mode = DecoderMode::Exact) {
  return MatchingDecoder(graph).decode(defects, mode);
}

}  // namespace homm
