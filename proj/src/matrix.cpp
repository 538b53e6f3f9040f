#include "skw/matrix.hpp"

#include <map>

namespace skw {

std::string LinearForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += t.c < 0 ? " - " : " + ";
    else if (t.c < 0) out += "-";
    const std::int64_t a = t.c < 0 ? -t.c : t.c;
    if (a != 1) out += std::to_string(a) + "*";
    out += "u" + std::to_string(t.i) + "_" + std::to_string(t.j);
  }
  return out;
}

namespace {

template <typename T, typename Mul, typename Add>
SparseMatrix<T> multiply_impl(const SparseMatrix<T>& a, const SparseMatrix<T>& b, Mul mul, Add add) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  // Column j of a*b = sum_k b(k, j) * a(:, k).
  std::vector<std::vector<std::pair<int, T>>> acols(a.cols());
  for (const auto& e : a.entries()) acols[e.col].emplace_back(e.row, e.value);
  std::vector<typename SparseMatrix<T>::Entry> out;
  for (std::size_t s = 0; s < b.entries().size();) {
    const int col = b.entries()[s].col;
    std::map<int, T> acc;
    for (; s < b.entries().size() && b.entries()[s].col == col; ++s) {
      const auto& be = b.entries()[s];
      for (const auto& [r, v] : acols[be.row]) {
        auto [it, fresh] = acc.try_emplace(r, mul(v, be.value));
        if (!fresh) it->second = add(it->second, mul(v, be.value));
      }
    }
    for (auto& [r, v] : acc) out.push_back({r, col, v});
  }
  return SparseMatrix<T>::from_entries(a.rows(), b.cols(), std::move(out), a.prime());
}

}  // namespace

IntSparse multiply(const IntSparse& a, const IntSparse& b) {
  return multiply_impl(a, b, checked_mul, checked_add);
}

ModSparse multiply(const ModSparse& a, const ModSparse& b) {
  if (a.prime() != b.prime()) throw DimensionError("matrix product over different primes");
  PrimeField field(a.prime());
  return multiply_impl(
      a, b, [&](std::uint64_t x, std::uint64_t y) { return field.mul(x, y); },
      [&](std::uint64_t x, std::uint64_t y) { return field.add(x, y); });
}

IntSparse to_sparse(const IntMatrix& m) {
  std::vector<IntSparse::Entry> entries;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) entries.push_back({r, c, m(r, c)});
  return IntSparse::from_entries(m.rows(), m.cols(), std::move(entries));
}

IntMatrix to_dense(const IntSparse& m) {
  IntMatrix d(m.rows(), m.cols());
  for (const auto& e : m.entries()) d(e.row, e.col) = e.value;
  return d;
}

IntSparse transpose(const IntSparse& m) {
  std::vector<IntSparse::Entry> entries;
  for (const auto& e : m.entries()) entries.push_back({e.col, e.row, e.value});
  return IntSparse::from_entries(m.cols(), m.rows(), std::move(entries));
}

ModSparse reduce_mod(const IntSparse& m, std::uint64_t prime) {
  PrimeField field(prime);
  std::vector<ModSparse::Entry> entries;
  for (const auto& e : m.entries()) entries.push_back({e.row, e.col, field.reduce(e.value)});
  return ModSparse::from_entries(m.rows(), m.cols(), std::move(entries), prime);
}

}  // namespace skw
