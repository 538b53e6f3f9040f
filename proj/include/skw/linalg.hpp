#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skw/field.hpp"
#include "skw/matrix.hpp"

namespace skw {

/// Sparse vector over the integers: (index, value) sorted by index.
using IntVec = std::vector<std::pair<int, std::int64_t>>;
/// Sparse row over Z/p.
using ModRow = std::vector<std::pair<int, std::uint64_t>>;

struct EchelonResult {
  int rank = 0;
  /// Pivot column of each input row, or -1 when the row reduced to zero.
  std::vector<int> pivot_of_row;
};

/// Row echelon form of the given sparse rows (entries in [0, p)).
EchelonResult echelon_mod_p(int ncols, const std::vector<ModRow>& rows, const PrimeField& field);

/// Rank mod p of a sparse matrix (integer entries are reduced first).
int rank_mod_p(const IntSparse& m, std::uint64_t prime);
int rank_mod_p(const ModSparse& m);

/// Expresses integer vectors as integer combinations of a fixed list of
/// linearly independent integer vectors. Coordinates are found mod 2^61-1
/// and then checked exactly over the integers, so a returned answer is
/// always an exact integral solution.
class IntegralSolver {
 public:
  /// Throws Error if the basis vectors are linearly dependent mod 2^61-1.
  explicit IntegralSolver(const std::vector<IntVec>& basis);

  std::size_t size() const { return basis_.size(); }
  /// Integral coordinates of `target`, or nullopt when `target` is not an
  /// integral combination of the basis.
  std::optional<std::vector<std::int64_t>> solve(const IntVec& target) const;

 private:
  std::vector<IntVec> basis_;
  std::vector<int> pivot_rows_;             // ambient indices, one per basis vector
  std::vector<int> position_of_row_;        // ambient index -> slot in pivot_rows_ or -1
  std::vector<std::uint64_t> inverse_;      // n x n, row-major, mod kSolverPrime
};

/// Exact determinant of a square integer matrix (fraction-free elimination).
std::int64_t determinant(const IntMatrix& m);

/// Inverse of a dense square matrix mod p; nullopt when singular.
std::optional<std::vector<std::uint64_t>> inverse_mod_p(std::vector<std::uint64_t> a, int n, const PrimeField& field);

}  // namespace skw
