#pragma once

// Homomorphic measurement gadgets: an ancilla CSS code wired to a data
// CSS code by a gate matrix of CNOTs (data as control, ancilla as
// target). Validation checks the two row-space inclusions
//
//   rs(H_Z' Gamma^T) <= rs(H_Z)   and   rs(H_X Gamma) <= rs(H_X'),
//
// which are exactly what keeps the joint stabilizer group unchanged by
// the interaction; the preservation check rebuilds the four block
// matrices and verifies that equality directly. Also here: the group
// of data logicals the gadget measures, the cat-state (Shor) gadget
// constructor, and the effective X-distance enumeration that bounds
// error spreading through the CNOTs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homm/cover.hpp"
#include "homm/css.hpp"
#include "homm/errors.hpp"
#include "homm/f2.hpp"

namespace homm {

struct GadgetConditionViolation : std::runtime_error {
  GadgetConditionViolation(int which, f2::BitVec w)
      : std::runtime_error("gadget condition " + std::to_string(which) +
                           " violated; witness row " + w.str()),
        condition(which),
        witness(std::move(w)) {}

  int condition;       // 1: rs(H_Z' Gamma^T) escapes rs(H_Z); 2: rs(H_X Gamma) escapes rs(H_X')
  f2::BitVec witness;  // a row of the offending product outside the target row space
};

struct HomGadget {
  CssCode data;             // [[n,k,d]]
  CssCode ancilla;          // [[m,k',d']]
  f2::BitMatrix gamma;      // n x m
  std::optional<CellMap> origin;  // present when geometrically constructed
};

inline HomGadget validate(const CssCode& data, const CssCode& ancilla,
                          const f2::BitMatrix& gamma, std::optional<CellMap> origin = {}) {
  if (gamma.rows() != data.n || gamma.cols() != ancilla.n)
    throw DimensionMismatch("validate: gate matrix must be n x m");
  auto cond1 = ancilla.h_z * gamma.transpose();
  f2::Reducer z_stab(data.h_z);
  for (std::size_t r = 0; r < cond1.rows(); ++r)
    if (!z_stab.contains(cond1.row(r))) throw GadgetConditionViolation(1, cond1.row(r));
  auto cond2 = data.h_x * gamma;
  f2::Reducer x_stab(ancilla.h_x);
  for (std::size_t r = 0; r < cond2.rows(); ++r)
    if (!x_stab.contains(cond2.row(r))) throw GadgetConditionViolation(2, cond2.row(r));
  return HomGadget{data, ancilla, gamma, std::move(origin)};
}

namespace detail {

// [[a, b], [c, d]] over GF(2); empty blocks are fine.
inline f2::BitMatrix block2x2(const f2::BitMatrix& a, const f2::BitMatrix& b,
                              const f2::BitMatrix& c, const f2::BitMatrix& d) {
  if (a.cols() != c.cols() || b.cols() != d.cols() || a.rows() != b.rows() || c.rows() != d.rows())
    throw DimensionMismatch("block2x2: inconsistent block shapes");
  f2::BitMatrix out(a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&out](const f2::BitMatrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.get(r, c)) out.set(r0 + r, c0 + c);
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return out;
}

}  // namespace detail

// Joint stabilizer groups on the n+m qubits before and after the
// transversal interaction, compared as row spaces in both directions.
struct PreservationCertificate {
  bool z_post_in_pre = false;
  bool z_pre_in_post = false;
  bool x_post_in_pre = false;
  bool x_pre_in_post = false;

  bool z_preserved() const { return z_post_in_pre && z_pre_in_post; }
  bool x_preserved() const { return x_post_in_pre && x_pre_in_post; }
  bool ok() const { return z_preserved() && x_preserved(); }
};

inline PreservationCertificate stabilizer_preservation_check(const HomGadget& g) {
  const auto& hz = g.data.h_z;
  const auto& hx = g.data.h_x;
  const auto& hza = g.ancilla.h_z;
  const auto& hxa = g.ancilla.h_x;
  auto zero = [](std::size_t r, std::size_t c) { return f2::BitMatrix(r, c); };

  auto t_z_pre = detail::block2x2(hz, zero(hz.rows(), g.ancilla.n), zero(hza.rows(), g.data.n), hza);
  auto t_z_post = detail::block2x2(hz, zero(hz.rows(), g.ancilla.n), hza * g.gamma.transpose(), hza);
  auto t_x_pre = detail::block2x2(hx, zero(hx.rows(), g.ancilla.n), zero(hxa.rows(), g.data.n), hxa);
  auto t_x_post = detail::block2x2(hx, hx * g.gamma, zero(hxa.rows(), g.data.n), hxa);

  PreservationCertificate cert;
  cert.z_post_in_pre = f2::subspace_leq(t_z_post, t_z_pre);
  cert.z_pre_in_post = f2::subspace_leq(t_z_pre, t_z_post);
  cert.x_post_in_pre = f2::subspace_leq(t_x_post, t_x_pre);
  cert.x_pre_in_post = f2::subspace_leq(t_x_pre, t_x_post);
  return cert;
}

// The data Z-logicals the gadget reads out: Gamma(ker H_X') reduced
// modulo rs(H_Z). Kernel vectors whose image lands inside rs(H_Z) are
// stabilizer measurements (useful as parity checks, not logicals) and
// are dropped. Each kept generator pairs the data-block representative
// with the ancilla-side kernel vector that reads it out.
struct MeasuredGroup {
  f2::BitMatrix basis;       // rank x n
  f2::BitMatrix anc_kernel;  // rank x m, matching rows
  std::size_t rank = 0;
};

inline MeasuredGroup measured_group(const HomGadget& g) {
  auto kernel = f2::kernel_basis(g.ancilla.h_x);
  f2::Reducer seen(g.data.h_z);
  std::vector<f2::BitVec> reps, sources;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    auto v = kernel.row(r);
    auto image = g.gamma.mul(v);
    if (!g.data.h_x.mul(image).zero())
      throw std::logic_error("measured_group: image escapes ker(H_X); gadget is invalid");
    if (seen.insert(image)) {
      reps.push_back(image);
      sources.push_back(v);
    }
  }
  MeasuredGroup out;
  out.basis = f2::BitMatrix::from_rows(reps, g.data.n);
  out.anc_kernel = f2::BitMatrix::from_rows(sources, g.ancilla.n);
  out.rank = reps.size();
  return out;
}

// Cat-state gadget: a weight-w repetition-code ancilla (two-body
// X-checks around a circle, no Z-checks) wired qubit-by-qubit onto the
// support of the measured operator.
inline HomGadget shor_gadget(const CssCode& data, const f2::BitVec& support) {
  if (support.size() != data.n)
    throw DimensionMismatch("shor_gadget: support length != data qubit count");
  if (!data.h_x.mul(support).zero())
    throw std::invalid_argument("shor_gadget: support is not a Z-type operator");
  auto qubits = support.support();
  const std::size_t w = qubits.size();
  if (w == 0) throw std::invalid_argument("shor_gadget: empty support");
  f2::BitMatrix h_x(w >= 2 ? w : 0, w);
  if (w >= 2)
    for (std::size_t i = 0; i < w; ++i) {
      h_x.set(i, i);
      h_x.set(i, (i + 1) % w);
    }
  auto ancilla = css_from_checks(h_x, f2::BitMatrix(0, w));
  f2::BitMatrix gamma(data.n, w);
  for (std::size_t j = 0; j < w; ++j) gamma.set(qubits[j], j);
  return validate(data, ancilla, gamma);
}

namespace detail {

// Visits every face-connected edge subset of size <= max_size exactly
// once. visit(S) returning false stops extending that subset; add and
// remove hooks keep the caller's incremental state in sync.
template <typename OnAdd, typename OnRemove, typename Visit>
void for_each_connected_subset(const std::vector<std::vector<std::uint32_t>>& adj,
                               std::size_t max_size, OnAdd&& on_add, OnRemove&& on_remove,
                               Visit&& visit) {
  const std::size_t n = adj.size();
  if (max_size == 0) return;
  std::vector<bool> in_set(n, false), forbidden(n, false);
  std::vector<std::uint32_t> subset;

  // Subsets are rooted at their minimum element; candidates with
  // smaller ids are never considered, so each subset appears once.
  auto rec = [&](auto&& self, std::uint32_t root) -> void {
    if (!visit(subset) || subset.size() == max_size) return;
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t u : subset)
      for (std::uint32_t v : adj[u])
        if (v > root && !in_set[v] && !forbidden[v]) {
          candidates.push_back(v);
          forbidden[v] = true;  // marks "collected"; re-cleared below
        }
    std::sort(candidates.begin(), candidates.end());
    for (std::uint32_t c : candidates) forbidden[c] = false;
    // include/exclude: after exploring with c, forbid c in later branches
    for (std::uint32_t c : candidates) {
      in_set[c] = true;
      subset.push_back(c);
      on_add(c);
      self(self, root);
      on_remove(c);
      subset.pop_back();
      in_set[c] = false;
      forbidden[c] = true;
    }
    for (std::uint32_t c : candidates) forbidden[c] = false;
  };

  for (std::uint32_t s = 0; s < n; ++s) {
    in_set[s] = true;
    subset.push_back(s);
    on_add(s);
    rec(rec, s);
    on_remove(s);
    subset.pop_back();
    in_set[s] = false;
  }
}

inline std::size_t code_distance(const CssCode& code, const CellComplex2* geometry) {
  if (geometry) {
    auto sd = surface_distance(*geometry);
    return std::min(sd.d_z, sd.d_x);
  }
  auto dz = min_distance_z(code);
  auto dx = min_distance_x(code);
  if (!dz.exact || !dx.exact)
    throw std::invalid_argument("code_distance: exact distance unavailable");
  return std::min(dz.weight, dx.weight);
}

}  // namespace detail

struct EffectiveXDistance {
  std::size_t value = 0;
  // False when no logical was found within the weight budget; `value`
  // is then the smallest |E_D| any heavier logical could still have.
  bool found = true;
  // True when `value` is provably the minimum over all X-logicals, not
  // just those inside the weight budget.
  bool complete = false;
  std::size_t weight_budget = 0;
  std::size_t bound = 0;  // min(d_data, d_ancilla)
};

// Minimum number of distinct data edges whose X errors can spread to a
// connected ancilla X-logical through the CNOTs: enumerates connected
// (face-sharing) edge subsets of the ancilla, keeps the X-logicals,
// and minimizes the footprint |E_D| of their gate-matrix fibers.
// Throws if a logical with |E_D| < min(d_D, d_A) is found, since that
// contradicts the fault-tolerance bound the construction guarantees.
inline EffectiveXDistance effective_x_distance(const HomGadget& g,
                                               std::size_t weight_budget = 0) {
  const std::size_t m = g.ancilla.n;
  // adjacency: two ancilla qubits sharing a Z-check (a face, for
  // geometric ancillas, matching the connectivity the bound uses)
  std::vector<std::vector<std::uint32_t>> adj(m);
  for (std::size_t f = 0; f < g.ancilla.h_z.rows(); ++f) {
    auto members = g.ancilla.h_z.row(f).support();
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        adj[members[a]].push_back(static_cast<std::uint32_t>(members[b]));
        adj[members[b]].push_back(static_cast<std::uint32_t>(members[a]));
      }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  std::size_t d_data = detail::code_distance(g.data, g.origin ? &g.origin->target : nullptr);
  std::size_t d_anc = detail::code_distance(g.ancilla, g.origin ? &g.origin->source : nullptr);
  const std::size_t bound = std::min(d_data, d_anc);

  std::vector<std::vector<std::size_t>> fibers(m);  // data edges per ancilla qubit
  std::size_t max_fiber = 1;
  for (std::size_t r = 0; r < g.gamma.rows(); ++r)
    max_fiber = std::max(max_fiber, g.gamma.row(r).weight());
  for (std::size_t j = 0; j < m; ++j) fibers[j] = g.gamma.col(j).support();

  const std::size_t budget =
      weight_budget ? weight_budget : std::max(d_data + 2, max_fiber * (bound ? bound - 1 : 0));

  // incremental state: syndrome of the subset, its bit vector, and the
  // multiset of data edges it touches
  f2::BitVec syndrome(g.ancilla.h_z.rows());
  f2::BitVec subset_vec(m);
  std::vector<std::uint32_t> hit_count(g.data.n, 0);
  std::size_t footprint = 0;  // |E_D|
  std::vector<f2::BitVec> z_cols;
  z_cols.reserve(m);
  for (std::size_t j = 0; j < m; ++j) z_cols.push_back(g.ancilla.h_z.col(j));
  f2::Reducer x_stab(g.ancilla.h_x);

  std::size_t best = SIZE_MAX;
  auto on_add = [&](std::uint32_t e) {
    syndrome ^= z_cols[e];
    subset_vec.flip(e);
    for (std::size_t de : fibers[e])
      if (hit_count[de]++ == 0) ++footprint;
  };
  auto on_remove = [&](std::uint32_t e) {
    syndrome ^= z_cols[e];
    subset_vec.flip(e);
    for (std::size_t de : fibers[e])
      if (--hit_count[de] == 0) --footprint;
  };
  auto visit = [&](const std::vector<std::uint32_t>&) {
    if (footprint >= best) return false;  // extensions cannot shrink the footprint
    if (syndrome.zero() && !x_stab.contains(subset_vec)) best = footprint;
    return footprint < best;
  };

  // A cheap first pass at the minimal-logical weight seeds `best`, so
  // the full-budget pass can prune aggressively.
  for (std::size_t cap : {std::min(d_anc, budget), budget}) {
    detail::for_each_connected_subset(adj, cap, on_add, on_remove, visit);
    if (cap == budget) break;
  }

  EffectiveXDistance out;
  out.weight_budget = budget;
  out.bound = bound;
  if (best == SIZE_MAX) {
    out.found = false;
    out.complete = false;
    out.value = budget / max_fiber + 1;
  } else {
    out.found = true;
    out.value = best;
    out.complete = max_fiber * (best - 1) <= budget;
    if (best < bound)
      throw std::logic_error("effective_x_distance: found a logical below min(d_D, d_A)");
  }
  return out;
}

// Gadget induced by a verified cell map; the usual entry point for the
// covering construction.
inline HomGadget gadget_from_cellmap(const CellMap& map) {
  auto cert = verify_cellmap(map);
  if (!cert.ok()) throw std::invalid_argument("gadget_from_cellmap: cell map does not commute");
  return validate(css_of_complex(map.target), css_of_complex(map.source), gate_matrix(map), map);
}

// Steane gadget: the ancilla is a second block of the same code,
// coupled by the identity.
inline HomGadget steane_gadget(const CssCode& code, std::optional<CellMap> origin = {}) {
  return validate(code, code, f2::BitMatrix::identity(code.n), std::move(origin));
}

// X-type measurement gadget: the same CNOT pattern run with ancilla
// qubits as controls, the ancilla prepared in |+...+> and measured in
// the X basis. Swapping X and Z on both blocks turns it into an
// ordinary Z-type gadget, so validation and the measured group reuse
// the machinery above; the returned object is that mirrored gadget,
// and its measured-group rows are the X-type data operators read out.
inline HomGadget validate_x_type(const CssCode& data, const CssCode& ancilla,
                                 const f2::BitMatrix& gamma) {
  return validate(dual_code(data), dual_code(ancilla), gamma);
}

}  // namespace homm
