#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skw/errors.hpp"
#include "skw/matrix.hpp"

namespace skw {

/// Bounded chain complex C_top -> ... -> C_0 of free modules. d(n) maps
/// C_n to C_{n-1}; rows index C_{n-1}, columns index C_n.
template <typename T>
class ChainComplex {
 public:
  ChainComplex() = default;
  explicit ChainComplex(std::vector<int> ranks, std::uint64_t prime = 0)
      : ranks_(std::move(ranks)), prime_(prime), labels_(ranks_.size()) {
    for (std::size_t n = 0; n < ranks_.size(); ++n) {
      if (ranks_[n] < 0) throw DimensionError("negative component rank");
      d_.emplace_back(n == 0 ? 0 : ranks_[n - 1], ranks_[n], prime_);
    }
  }

  /// Highest degree with a slot (possibly of rank 0); -1 for no components.
  int top() const { return static_cast<int>(ranks_.size()) - 1; }
  std::uint64_t prime() const { return prime_; }
  const std::vector<int>& ranks() const { return ranks_; }
  int rank(int n) const { return n >= 0 && n <= top() ? ranks_[n] : 0; }

  const SparseMatrix<T>& d(int n) const {
    if (n < 1 || n > top()) throw DimensionError("no differential d_" + std::to_string(n));
    return d_[n];
  }
  void set_d(int n, SparseMatrix<T> m) {
    if (n < 1 || n > top()) throw DimensionError("no differential d_" + std::to_string(n));
    if (m.rows() != ranks_[n - 1] || m.cols() != ranks_[n])
      throw DimensionError("d_" + std::to_string(n) + " has the wrong shape");
    d_[n] = std::move(m);
  }

  /// Optional basis labels per degree (tableaux, monomials).
  const std::vector<std::string>& labels(int n) const { return labels_.at(n); }
  void set_labels(int n, std::vector<std::string> l) { labels_.at(n) = std::move(l); }

  /// min{n : C_n != 0} and max{n : C_n != 0}; nullopt for the zero complex.
  std::optional<int> start() const {
    for (int n = 0; n <= top(); ++n)
      if (ranks_[n] > 0) return n;
    return std::nullopt;
  }
  std::optional<int> finish() const {
    for (int n = top(); n >= 0; --n)
      if (ranks_[n] > 0) return n;
    return std::nullopt;
  }

 private:
  std::vector<int> ranks_;
  std::uint64_t prime_ = 0;
  std::vector<std::vector<std::string>> labels_;
  std::vector<SparseMatrix<T>> d_;
};

using FormComplex = ChainComplex<LinearForm>;
using IntComplex = ChainComplex<std::int64_t>;
using ModComplex = ChainComplex<std::uint64_t>;

/// Evaluates every linear form at phi (g x f).
IntComplex specialize(const FormComplex& c, const IntMatrix& phi);
/// Evaluates mod p; phi holds residues in [0, p).
ModComplex specialize(const FormComplex& c, const DenseMatrix<std::uint64_t>& phi, std::uint64_t prime);
IntSparse specialize(const FormSparse& m, const IntMatrix& phi);
ModSparse specialize(const FormSparse& m, const DenseMatrix<std::uint64_t>& phi, std::uint64_t prime);

/// Reduces an integer complex mod p.
ModComplex reduce_mod(const IntComplex& c, std::uint64_t prime);

/// Degrees n with d_{n-1} * d_n != 0 (empty for a genuine complex).
std::vector<int> square_defects(const ModComplex& c);
std::vector<int> square_defects(const IntComplex& c);

}  // namespace skw
