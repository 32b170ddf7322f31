#pragma once

// CSS codes as data: a pair of commuting check matrices with the qubit
// count and logical count cached at construction, convertible to and
// from the length-3 chain complex view, plus minimum-distance search.

#include <cstdint>
#include <vector>

#include "homm/errors.hpp"
#include "homm/f2.hpp"

namespace homm {

struct CssCode {
  f2::BitMatrix h_x;  // r_X x n
  f2::BitMatrix h_z;  // r_Z x n
  std::size_t n = 0;
  std::size_t k = 0;
};

// Validates commutation (h_x h_z^T = 0) and caches k = n - rk(h_x) - rk(h_z).
inline CssCode css_from_checks(const f2::BitMatrix& h_x, const f2::BitMatrix& h_z) {
  if (h_x.cols() != h_z.cols())
    throw DimensionMismatch("css_from_checks: check matrices disagree on qubit count");
  if (!(h_x * h_z.transpose()).is_zero())
    throw CommutationViolation("css_from_checks: H_X H_Z^T != 0");
  CssCode code;
  code.h_x = h_x;
  code.h_z = h_z;
  code.n = h_x.cols();
  code.k = code.n - f2::rank(h_x) - f2::rank(h_z);
  return code;
}

// C2 --d2--> C1 --d1--> C0 with d2 = H_Z^T and d1 = H_X.
struct ChainComplex3 {
  f2::BitMatrix d2;
  f2::BitMatrix d1;
};

inline ChainComplex3 to_chain(const CssCode& code) {
  return ChainComplex3{code.h_z.transpose(), code.h_x};
}

inline CssCode from_chain(const ChainComplex3& chain) {
  if (chain.d1.cols() != chain.d2.rows())
    throw DimensionMismatch("from_chain: d1 and d2 do not compose");
  return css_from_checks(chain.d1, chain.d2.transpose());
}

struct DistanceResult {
  std::size_t weight = 0;
  // True when the search was complete; false when `weight` is only a
  // certified upper bound (a genuine logical of that weight exists,
  // but lighter ones were not ruled out).
  bool exact = false;
};

namespace detail {

// Exhaustive minimum over the nonzero kernel-space combinations,
// walked in Gray-code order so each step is a single row XOR.
inline DistanceResult distance_by_kernel_enumeration(const f2::BitMatrix& kernel,
                                                     const f2::Reducer& stab) {
  const std::size_t dim = kernel.rows();
  std::vector<f2::BitVec> rows;
  rows.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) rows.push_back(kernel.row(i));
  f2::BitVec cur(kernel.cols());
  std::size_t best = kernel.cols() + 1;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
    cur ^= rows[static_cast<std::size_t>(__builtin_ctzll(i))];
    if (cur.weight() < best && !stab.contains(cur)) best = cur.weight();
  }
  return DistanceResult{best, true};
}

// Increasing-weight search over supports; the first hit is the exact
// minimum because all lighter supports were already rejected.
inline bool distance_by_weight_search(const CssCode& code, const f2::Reducer& stab,
                                      std::size_t max_weight, DistanceResult& out) {
  std::vector<f2::BitVec> cols;
  cols.reserve(code.n);
  for (std::size_t c = 0; c < code.n; ++c) cols.push_back(code.h_x.col(c));
  for (std::size_t w = 1; w <= max_weight && w <= code.n; ++w) {
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      f2::BitVec syndrome(code.h_x.rows());
      for (std::size_t i : idx) syndrome ^= cols[i];
      if (syndrome.zero()) {
        f2::BitVec v(code.n);
        for (std::size_t i : idx) v.set(i);
        if (!stab.contains(v)) {
          out = DistanceResult{w, true};
          return true;
        }
      }
      // next combination
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == code.n - w + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace detail

// d_Z = min{|c| : c in ker(H_X) \ rs(H_Z)}.
//
// Exhaustive over kernel-space combinations when dim ker(H_X) <= 24;
// otherwise an increasing-weight support search up to `budget`
// (still exact when it hits), falling back to a certified upper bound
// from low-complexity kernel combinations, flagged exact = false.
inline DistanceResult min_distance_z(const CssCode& code, std::size_t budget = 6) {
  if (code.k == 0) throw KIsZero("min_distance_z: code has no logical qubits");
  auto kernel = f2::kernel_basis(code.h_x);
  f2::Reducer stab(code.h_z);
  constexpr std::size_t kExhaustiveKernelDim = 24;
  if (kernel.rows() <= kExhaustiveKernelDim)
    return detail::distance_by_kernel_enumeration(kernel, stab);

  DistanceResult res;
  if (detail::distance_by_weight_search(code, stab, budget, res)) return res;

  // Upper bound only: lightest logical among kernel basis rows and
  // their pairwise sums. At least one basis row is logical (k >= 1).
  std::size_t best = code.n + 1;
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    auto vi = kernel.row(i);
    if (!stab.contains(vi)) best = std::min(best, vi.weight());
    for (std::size_t j = i + 1; j < kernel.rows(); ++j) {
      auto v = vi ^ kernel.row(j);
      if (v.weight() < best && !stab.contains(v)) best = v.weight();
    }
  }
  return DistanceResult{best, false};
}

inline CssCode dual_code(const CssCode& code) {
  CssCode d;
  d.h_x = code.h_z;
  d.h_z = code.h_x;
  d.n = code.n;
  d.k = code.k;
  return d;
}

// Mirror image of min_distance_z with X and Z swapped.
inline DistanceResult min_distance_x(const CssCode& code, std::size_t budget = 6) {
  if (code.k == 0) throw KIsZero("min_distance_x: code has no logical qubits");
  return min_distance_z(dual_code(code), budget);
}

}  // namespace homm
