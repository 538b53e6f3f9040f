#include "skw/linalg.hpp"

#include <algorithm>

namespace skw {

EchelonResult echelon_mod_p(int ncols, const std::vector<ModRow>& rows, const PrimeField& field) {
  EchelonResult res;
  res.pivot_of_row.assign(rows.size(), -1);
  // pivot rows are stored with leading entry 1 at their pivot column
  std::vector<int> pivot_slot(ncols, -1);
  std::vector<ModRow> pivots;
  std::vector<std::uint64_t> scratch(ncols, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int lo = ncols;
    for (const auto& [c, v] : rows[r]) {
      if (v == 0) continue;
      scratch[c] = field.add(scratch[c], v);
      lo = std::min(lo, c);
    }
    int c = lo;
    for (; c < ncols; ++c) {
      const std::uint64_t v = scratch[c];
      if (v == 0) continue;
      const int slot = pivot_slot[c];
      if (slot < 0) break;
      const std::uint64_t factor = v;
      for (const auto& [pc, pv] : pivots[slot]) scratch[pc] = field.sub(scratch[pc], field.mul(factor, pv));
    }
    if (c == ncols) continue;
    const std::uint64_t inv = field.inv(scratch[c]);
    ModRow row;
    for (int k = c; k < ncols; ++k) {
      if (scratch[k] != 0) {
        row.emplace_back(k, field.mul(scratch[k], inv));
        scratch[k] = 0;
      }
    }
    pivot_slot[c] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(row));
    res.pivot_of_row[r] = c;
    ++res.rank;
  }
  return res;
}

namespace {

std::vector<ModRow> rows_of(const ModSparse& m, bool by_column) {
  // Rank is invariant under transposition; eliminate along the shorter side.
  std::vector<ModRow> out(by_column ? m.cols() : m.rows());
  for (const auto& e : m.entries()) {
    if (by_column) out[e.col].emplace_back(e.row, e.value);
    else out[e.row].emplace_back(e.col, e.value);
  }
  for (auto& r : out) std::sort(r.begin(), r.end());
  return out;
}

}  // namespace

int rank_mod_p(const ModSparse& m) {
  if (m.prime() == 0) throw Error("rank_mod_p needs a prime-field matrix");
  const bool by_column = m.cols() <= m.rows();
  const auto rows = rows_of(m, by_column);
  return echelon_mod_p(by_column ? m.rows() : m.cols(), rows, PrimeField(m.prime())).rank;
}

int rank_mod_p(const IntSparse& m, std::uint64_t prime) { return rank_mod_p(reduce_mod(m, prime)); }

std::optional<std::vector<std::uint64_t>> inverse_mod_p(std::vector<std::uint64_t> a, int n, const PrimeField& field) {
  std::vector<std::uint64_t> inv(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) inv[std::size_t(i) * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[std::size_t(r) * n + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      std::swap_ranges(a.begin() + std::size_t(piv) * n, a.begin() + std::size_t(piv + 1) * n,
                       a.begin() + std::size_t(col) * n);
      std::swap_ranges(inv.begin() + std::size_t(piv) * n, inv.begin() + std::size_t(piv + 1) * n,
                       inv.begin() + std::size_t(col) * n);
    }
    const std::uint64_t s = field.inv(a[std::size_t(col) * n + col]);
    for (int k = 0; k < n; ++k) {
      a[std::size_t(col) * n + k] = field.mul(a[std::size_t(col) * n + k], s);
      inv[std::size_t(col) * n + k] = field.mul(inv[std::size_t(col) * n + k], s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const std::uint64_t factor = a[std::size_t(r) * n + col];
      if (factor == 0) continue;
      for (int k = 0; k < n; ++k) {
        if (const auto v = a[std::size_t(col) * n + k]; v != 0)
          a[std::size_t(r) * n + k] = field.sub(a[std::size_t(r) * n + k], field.mul(factor, v));
        if (const auto v = inv[std::size_t(col) * n + k]; v != 0)
          inv[std::size_t(r) * n + k] = field.sub(inv[std::size_t(r) * n + k], field.mul(factor, v));
      }
    }
  }
  return inv;
}

std::int64_t determinant(const IntMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw DimensionError("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<__int128> a(std::size_t(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[std::size_t(r) * n + c] = m(r, c);
  auto at = [&](int r, int c) -> __int128& { return a[std::size_t(r) * n + c]; };
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int piv = k + 1;
      while (piv < n && at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(piv, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        const __int128 v = at(r, c) * at(k, k) - at(r, k) * at(k, c);
        at(r, c) = v / prev;  // exact (Bareiss)
      }
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  const __int128 det = sign * at(n - 1, n - 1);
  if (det > INT64_MAX || det < INT64_MIN) throw OverflowError("determinant exceeds int64");
  return static_cast<std::int64_t>(det);
}

IntegralSolver::IntegralSolver(const std::vector<IntVec>& basis) : basis_(basis) {
  const PrimeField field(kSolverPrime);
  const int n = static_cast<int>(basis_.size());
  int ncols = 0;
  std::vector<ModRow> rows;
  rows.reserve(n);
  for (const auto& v : basis_) {
    ModRow row;
    for (const auto& [idx, val] : v) {
      row.emplace_back(idx, field.reduce(val));
      ncols = std::max(ncols, idx + 1);
    }
    rows.push_back(std::move(row));
  }
  const auto ech = echelon_mod_p(ncols, rows, field);
  if (ech.rank != n) throw Error("IntegralSolver: basis vectors are linearly dependent");
  pivot_rows_ = ech.pivot_of_row;
  position_of_row_.assign(ncols, -1);
  for (int k = 0; k < n; ++k) position_of_row_[pivot_rows_[k]] = k;
  // square submatrix: entry (k, m) = basis_m[pivot_rows_[k]]
  std::vector<std::uint64_t> sub(std::size_t(n) * n, 0);
  for (int m = 0; m < n; ++m)
    for (const auto& [idx, val] : basis_[m])
      if (idx < ncols && position_of_row_[idx] >= 0)
        sub[std::size_t(position_of_row_[idx]) * n + m] = field.reduce(val);
  auto inv = inverse_mod_p(std::move(sub), n, field);
  if (!inv) throw Error("IntegralSolver: pivot submatrix is singular");
  inverse_ = std::move(*inv);
}

std::optional<std::vector<std::int64_t>> IntegralSolver::solve(const IntVec& target) const {
  const PrimeField field(kSolverPrime);
  const int n = static_cast<int>(basis_.size());
  std::vector<std::uint64_t> coords(n, 0);
  for (const auto& [idx, val] : target) {
    if (val == 0) continue;
    if (idx >= static_cast<int>(position_of_row_.size())) return std::nullopt;
    const int k = position_of_row_[idx];
    if (k < 0) continue;
    const std::uint64_t w = field.reduce(val);
    for (int m = 0; m < n; ++m) {
      const auto a = inverse_[std::size_t(m) * n + k];
      if (a != 0) coords[m] = field.add(coords[m], field.mul(a, w));
    }
  }
  std::vector<std::int64_t> out(n);
  // exact check: sum_m out[m] * basis_m == target
  std::vector<std::pair<int, __int128>> acc;
  for (int m = 0; m < n; ++m) {
    out[m] = field.lift(coords[m]);
    if (out[m] == 0) continue;
    for (const auto& [idx, val] : basis_[m]) acc.emplace_back(idx, static_cast<__int128>(out[m]) * val);
  }
  for (const auto& [idx, val] : target) acc.emplace_back(idx, -static_cast<__int128>(val));
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t s = 0; s < acc.size();) {
    __int128 sum = 0;
    const int idx = acc[s].first;
    for (; s < acc.size() && acc[s].first == idx; ++s) sum += acc[s].second;
    if (sum != 0) return std::nullopt;
  }
  return out;
}

}  // namespace skw
