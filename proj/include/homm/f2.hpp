#pragma once

// Dense bit-packed linear algebra over GF(2). Everything downstream
// (code construction, gadget checks, distance enumeration) reduces to
// the handful of operations in this header, so rows are stored packed
// in 64-bit words and row operations are word-wise XOR.
//
// All operations are pure: inputs are taken by const reference and
// results are returned by value. Matrices with zero rows or zero
// columns are legal everywhere.

#include <cassert>
#include <cstdint>
#include <cstring>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "homm/errors.hpp"

namespace homm::f2 {

namespace detail {
inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }
}  // namespace detail

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_(detail::words_for(n), 0) {}

  static BitVec from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        v.set(i);
      } else if (s[i] != '0') {
        throw std::invalid_argument("BitVec::from_string: expected 0/1");
      }
    }
    return v;
  }

  static BitVec unit(std::size_t n, std::size_t i) {
    BitVec v(n);
    v.set(i);
    return v;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool value = true) {
    assert(i < n_);
    if (value) {
      w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }

  void flip(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  BitVec& operator^=(const BitVec& o) {
    if (o.n_ != n_) throw DimensionMismatch("BitVec xor: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitVec&) const = default;

  bool zero() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  std::size_t weight() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  // <a,b> over GF(2): parity of the AND of the two vectors.
  bool dot(const BitVec& o) const {
    if (o.n_ != n_) throw DimensionMismatch("BitVec dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return __builtin_parityll(acc);
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s.push_back(i);
    return s;
  }

  std::string str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(detail::words_for(cols)), w_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static BitMatrix zeros(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

  static BitMatrix from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return BitMatrix(0, 0);
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_)
        throw DimensionMismatch("BitMatrix::from_rows: ragged rows");
      for (std::size_t c = 0; c < m.cols_; ++c)
        if (rows[r][c] == '1') m.set(r, c);
    }
    return m;
  }

  static BitMatrix from_rows(const std::vector<BitVec>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
  }

  // Vertical concatenation; column counts must agree.
  static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack: column mismatch");
    BitMatrix m(a.rows_ + b.rows_, a.cols_);
    std::copy(a.w_.begin(), a.w_.end(), m.w_.begin());
    std::copy(b.w_.begin(), b.w_.end(), m.w_.begin() + a.rows_ * m.stride_);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }

  void set(std::size_t r, std::size_t c, bool value = true) {
    assert(r < rows_ && c < cols_);
    if (value) {
      w_[r * stride_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
    } else {
      w_[r * stride_ + (c >> 6)] &= ~(std::uint64_t{1} << (c & 63));
    }
  }

  void flip(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    w_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
  }

  BitVec row(std::size_t r) const {
    assert(r < rows_);
    BitVec v(cols_);
    std::copy(w_.begin() + r * stride_, w_.begin() + (r + 1) * stride_, v.words().begin());
    return v;
  }

  void set_row(std::size_t r, const BitVec& v) {
    assert(r < rows_);
    if (v.size() != cols_) throw DimensionMismatch("set_row: length mismatch");
    std::copy(v.words().begin(), v.words().end(), w_.begin() + r * stride_);
  }

  BitVec col(std::size_t c) const {
    assert(c < cols_);
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      if (get(r, c)) v.set(r);
    return v;
  }

  bool is_zero() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  // Matrix product over GF(2). Row r of the result is the XOR of the
  // rows of `o` selected by row r of *this.
  BitMatrix operator*(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product: inner dimension mismatch");
    BitMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t* dst = &out.w_[r * out.stride_];
      for (std::size_t k = 0; k < cols_; ++k) {
        if (get(r, k)) {
          const std::uint64_t* src = &o.w_[k * o.stride_];
          for (std::size_t j = 0; j < o.stride_; ++j) dst[j] ^= src[j];
        }
      }
    }
    return out;
  }

  // m * v with v a column vector of length cols().
  BitVec mul(const BitVec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("mul: vector length mismatch");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      const std::uint64_t* rw = &w_[r * stride_];
      for (std::size_t j = 0; j < stride_; ++j) acc ^= rw[j] & v.words()[j];
      if (__builtin_parityll(acc)) out.set(r);
    }
    return out;
  }

  bool operator==(const BitMatrix&) const = default;

  void xor_row_into(std::size_t src, std::size_t dst) {
    assert(src < rows_ && dst < rows_);
    const std::uint64_t* s = &w_[src * stride_];
    std::uint64_t* d = &w_[dst * stride_];
    for (std::size_t j = 0; j < stride_; ++j) d[j] ^= s[j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < stride_; ++j)
      std::swap(w_[a * stride_ + j], w_[b * stride_ + j]);
  }

  std::vector<std::string> row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r).str());
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> w_;
};

struct RrefResult {
  BitMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form by Gaussian elimination. Row space is
// preserved; nonzero rows come first.
inline RrefResult rref(const BitMatrix& m) {
  RrefResult res;
  res.reduced = m;
  BitMatrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(r, pivot);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && a.get(i, c)) a.xor_row_into(r, i);
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

// Incremental row-echelon basis. Supports cheap repeated membership
// tests and span extension; the workhorse behind the subspace
// operations below and the distance/coset enumerations elsewhere.
class Reducer {
 public:
  Reducer() = default;
  explicit Reducer(std::size_t cols) : cols_(cols) {}
  explicit Reducer(const BitMatrix& m) : cols_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r) insert(m.row(r));
  }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the stored basis in place.
  void reduce_inplace(BitVec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("Reducer: length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (v.get(lead_[i])) v ^= rows_[i];
  }

  BitVec reduce(BitVec v) const {
    reduce_inplace(v);
    return v;
  }

  bool contains(const BitVec& v) const { return reduce(v).zero(); }

  // Adds v to the span; returns false if v was already contained.
  bool insert(BitVec v) {
    reduce_inplace(v);
    if (v.zero()) return false;
    std::size_t lead = 0;
    while (!v.get(lead)) ++lead;
    // Keep stored rows mutually reduced so leads stay distinct.
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i].get(lead)) rows_[i] ^= v;
    rows_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> lead_;
};

// Basis of {v : m v = 0}, one kernel vector per returned row.
// Row count is always cols(m) - rank(m).
inline BitMatrix kernel_basis(const BitMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  BitMatrix out(m.cols() - rr.rank, m.cols());
  std::size_t row_out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    out.set(row_out, f);
    for (std::size_t i = 0; i < rr.rank; ++i)
      if (rr.reduced.get(i, f)) out.set(row_out, rr.pivot_cols[i]);
    ++row_out;
  }
  return out;
}

inline bool rowspace_contains(const BitMatrix& m, const BitVec& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("rowspace_contains: length mismatch");
  return Reducer(m).contains(v);
}

// rs(a) <= rs(b), decided by rank comparison of b against b stacked on a.
inline bool subspace_leq(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("subspace_leq: column mismatch");
  Reducer red(b);
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!red.contains(a.row(r))) return false;
  return true;
}

// dim(ker(kernel_of) / rs(rowspace_of)). Requires the pair to form a
// complex, i.e. kernel_of * rowspace_of^T = 0.
inline std::size_t quotient_dim(const BitMatrix& kernel_of, const BitMatrix& rowspace_of) {
  if (kernel_of.cols() != rowspace_of.cols())
    throw DimensionMismatch("quotient_dim: column mismatch");
  if (!(kernel_of * rowspace_of.transpose()).is_zero())
    throw std::invalid_argument("quotient_dim: rs(rowspace_of) is not inside ker(kernel_of)");
  std::size_t dim_ker = kernel_of.cols() - rank(kernel_of);
  return dim_ker - rank(rowspace_of);
}

}  // namespace homm::f2
