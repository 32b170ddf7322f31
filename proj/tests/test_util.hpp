#pragma once

// Shared test-only helpers: small brute-force oracles the fast
// implementations are checked against, plus random generators.

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homm/css.hpp"
#include "homm/f2.hpp"

namespace homm::testutil {

inline f2::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                   double density = 0.5) {
  f2::BitMatrix m(rows, cols);
  std::bernoulli_distribution bit(density);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c);
  return m;
}

inline f2::BitVec random_vec(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
  f2::BitVec v(n);
  std::bernoulli_distribution bit(density);
  for (std::size_t i = 0; i < n; ++i)
    if (bit(rng)) v.set(i);
  return v;
}

// Every GF(2) combination of the rows of m, as bit strings.
// Usable for rows <= ~16.
inline std::set<std::string> span_set(const f2::BitMatrix& m) {
  std::set<std::string> out;
  const std::size_t r = m.rows();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    f2::BitVec v(m.cols());
    for (std::size_t i = 0; i < r; ++i)
      if ((mask >> i) & 1) v ^= m.row(i);
    out.insert(v.str());
  }
  return out;
}

// All v with m v = 0, by enumerating every vector. Usable for cols <= ~16.
inline std::set<std::string> kernel_set(const f2::BitMatrix& m) {
  std::set<std::string> out;
  const std::size_t n = m.cols();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    f2::BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) v.set(i);
    if (m.mul(v).zero()) out.insert(v.str());
  }
  return out;
}

// Toric-code check matrices written down directly from the d x d
// square lattice, independent of the cell-complex builders, so they
// can serve as an oracle for them. Vertex (x,y) has id y*d+x; the
// horizontal edge leaving (x,y) eastwards shares its id, vertical
// edges use d*d + y*d + x.
inline std::pair<f2::BitMatrix, f2::BitMatrix> toric_checks(int d) {
  auto vid = [d](int x, int y) { return ((y % d + d) % d) * d + ((x % d + d) % d); };
  auto he = [&](int x, int y) { return vid(x, y); };
  auto ve = [&](int x, int y) { return d * d + vid(x, y); };
  f2::BitMatrix h_x(d * d, 2 * d * d);  // vertex checks
  f2::BitMatrix h_z(d * d, 2 * d * d);  // face checks
  for (int y = 0; y < d; ++y) {
    for (int x = 0; x < d; ++x) {
      int v = vid(x, y);
      h_x.flip(v, he(x, y));
      h_x.flip(v, he(x - 1, y));
      h_x.flip(v, ve(x, y));
      h_x.flip(v, ve(x, y - 1));
      int f = vid(x, y);
      h_z.flip(f, he(x, y));
      h_z.flip(f, he(x, y + 1));
      h_z.flip(f, ve(x, y));
      h_z.flip(f, ve(x + 1, y));
    }
  }
  return {h_x, h_z};
}

// Random valid CSS code: h_z free, h_x rows drawn from ker(h_z).
inline CssCode random_css(std::mt19937_64& rng, std::size_t n, std::size_t r_z, std::size_t r_x) {
  while (true) {
    auto h_z = random_matrix(rng, r_z, n, 0.4);
    auto kernel = f2::kernel_basis(h_z);
    f2::BitMatrix h_x(r_x, n);
    std::bernoulli_distribution pick(0.5);
    for (std::size_t r = 0; r < r_x; ++r) {
      f2::BitVec row(n);
      for (std::size_t i = 0; i < kernel.rows(); ++i)
        if (pick(rng)) row ^= kernel.row(i);
      h_x.set_row(r, row);
    }
    auto code = css_from_checks(h_x, h_z);
    if (code.k >= 1) return code;
  }
}

// Full 2^n scan for the minimum-weight element of ker(h_x) \ rs(h_z).
// Returns SIZE_MAX when no logical exists.
inline std::size_t brute_force_distance_z(const CssCode& code) {
  f2::Reducer stab(code.h_z);
  std::size_t best = SIZE_MAX;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << code.n); ++mask) {
    f2::BitVec v(code.n);
    for (std::size_t i = 0; i < code.n; ++i)
      if ((mask >> i) & 1) v.set(i);
    if (v.weight() >= best) continue;
    if (code.h_x.mul(v).zero() && !stab.contains(v)) best = v.weight();
  }
  return best;
}

}  // namespace homm::testutil
