#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "skw/errors.hpp"
#include "skw/field.hpp"

namespace skw {

/// Dense row-major matrix. Used for the map phi (g x f) and small numeric
/// inputs; the complexes themselves use SparseMatrix.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, T fill = T{}) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<std::int64_t>;

/// Integer combination sum c_ij u_ij of the indeterminates of the generic
/// g x f matrix (1 <= i <= g, 1 <= j <= f). Terms are sorted, zero-free.
class LinearForm {
 public:
  struct Term {
    int i;
    int j;
    std::int64_t c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LinearForm() = default;
  static LinearForm variable(int i, int j, std::int64_t c = 1) {
    LinearForm f;
    if (c != 0) f.terms_.push_back({i, j, c});
    return f;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int i, int j, std::int64_t c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{i, j, 0}, [](const Term& a, const Term& b) {
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    if (it != terms_.end() && it->i == i && it->j == j) {
      it->c = checked_add(it->c, c);
      if (it->c == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {i, j, c});
    }
  }

  LinearForm& operator+=(const LinearForm& o) {
    for (const auto& t : o.terms_) add_term(t.i, t.j, t.c);
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  LinearForm scaled(std::int64_t s) const {
    LinearForm r;
    if (s == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = checked_mul(t.c, s);
    return r;
  }

  /// Value at u = phi (phi is g x f, entry (i-1, j-1) substitutes u_ij).
  std::int64_t evaluate(const IntMatrix& phi) const {
    std::int64_t v = 0;
    for (const auto& t : terms_) v = checked_add(v, checked_mul(t.c, phi(t.i - 1, t.j - 1)));
    return v;
  }
  std::uint64_t evaluate(const DenseMatrix<std::uint64_t>& phi, const PrimeField& field) const {
    std::uint64_t v = 0;
    for (const auto& t : terms_) v = field.add(v, field.mul(field.reduce(t.c), phi(t.i - 1, t.j - 1)));
    return v;
  }

  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Term> terms_;
};

inline bool is_zero_value(std::int64_t v) { return v == 0; }
inline bool is_zero_value(std::uint64_t v) { return v == 0; }
inline bool is_zero_value(const LinearForm& v) { return v.is_zero(); }

/// Sparse matrix as a column-major list of (row, col, value) triplets with
/// no explicit zeros. Values: int64 (integers), uint64 (residues mod
/// `prime()`), or LinearForm.
template <typename T>
class SparseMatrix {
 public:
  struct Entry {
    int row;
    int col;
    T value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols, std::uint64_t prime = 0) : rows_(rows), cols_(cols), prime_(prime) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  }

  /// Sorts column-major, sums duplicates (integers and linear forms only),
  /// drops zeros.
  static SparseMatrix from_entries(int rows, int cols, std::vector<Entry> entries, std::uint64_t prime = 0) {
    SparseMatrix m(rows, cols, prime);
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return std::tie(a.col, a.row) < std::tie(b.col, b.row); });
    for (auto& e : entries) {
      if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
        throw DimensionError("matrix entry out of range");
      if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
        m.entries_.back().value = m.combine(m.entries_.back().value, e.value);
      } else {
        m.entries_.push_back(std::move(e));
      }
    }
    std::erase_if(m.entries_, [](const Entry& e) { return is_zero_value(e.value); });
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t prime() const { return prime_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  T combine(const T& a, const T& b) const {
    if constexpr (std::is_same_v<T, std::uint64_t>) {
      return PrimeField(prime_).add(a, b);
    } else if constexpr (std::is_same_v<T, std::int64_t>) {
      return checked_add(a, b);
    } else {
      return a + b;
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::uint64_t prime_ = 0;
  std::vector<Entry> entries_;
};

using IntSparse = SparseMatrix<std::int64_t>;
using ModSparse = SparseMatrix<std::uint64_t>;
using FormSparse = SparseMatrix<LinearForm>;

/// Integer product a * b; throws DimensionError on mismatch.
IntSparse multiply(const IntSparse& a, const IntSparse& b);
/// Product mod the (shared) prime of a and b.
ModSparse multiply(const ModSparse& a, const ModSparse& b);
IntSparse to_sparse(const IntMatrix& m);
IntMatrix to_dense(const IntSparse& m);
IntSparse transpose(const IntSparse& m);
ModSparse reduce_mod(const IntSparse& m, std::uint64_t prime);

}  // namespace skw
