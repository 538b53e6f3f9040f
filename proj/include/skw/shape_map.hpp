#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skw/partition.hpp"
#include "skw/tableau.hpp"

namespace skw {

/// Basis element of a tensor product of column monomials: the letters of
/// each column in sorted order, columns concatenated left to right.
using MonomialKey = std::string;
using KeyedVec = std::vector<std::pair<MonomialKey, std::int64_t>>;

/// Sorts by key, sums duplicates, drops zeros.
void normalize(KeyedVec& v);

/// The composition "diagonal on rows, rearrange boxes, multiply along
/// columns" for a skew shape, over labels that each carry a parity.
///
/// Row factors live in the super exterior algebra, realized inside the
/// tensor algebra: a row word expands to the signed sum of its distinct
/// rearrangements, with sign -1 for each inverted pair unless both letters
/// are odd. Odd letters may repeat (divided powers), even ones may not.
/// Column factors live in the super symmetric algebra: odd letters
/// anticommute and square to zero, even letters commute.
///
/// All-even labels give the Schur map of a free module; the Schur complex
/// uses odd labels for F and even ones for G with `koszul_rearrange` on.
/// All-odd labels with `koszul_rearrange` off give the Weyl map.
class ShapeMap {
 public:
  ShapeMap(SkewShape shape, std::vector<bool> odd, bool koszul_rearrange);

  const SkewShape& shape() const { return shape_; }
  /// Length of each nonempty column, left to right.
  const std::vector<int>& column_lengths() const { return column_lengths_; }
  bool is_odd(Letter a) const { return odd_[a]; }

  /// Appends the image of coeff * (row tensor of the given row-major
  /// filling) to `out` (unnormalized). Rows must be weakly increasing; a
  /// repeated even letter in a row gives zero.
  void image(const std::vector<Letter>& row_major, std::int64_t coeff, KeyedVec& out) const;
  KeyedVec image(const std::vector<Letter>& row_major) const;

  /// Applies the odd derivation sending letter `from` to letter `to` (all
  /// other letters to zero) to a normalized vector of monomial keys.
  /// Appends to `out` (unnormalized).
  void derivation(const KeyedVec& v, Letter from, Letter to, KeyedVec& out) const;

 private:
  /// Sorts each column segment of `seq` in place; returns the sign, or 0
  /// when an odd letter repeats within a column.
  int canonicalize_columns(std::string& seq) const;

  SkewShape shape_;
  std::vector<bool> odd_;
  bool koszul_;
  std::vector<int> row_start_;       // row-major offset of each row
  std::vector<int> row_len_;
  std::vector<int> column_major_;    // column-major position -> row-major position
  std::vector<int> column_of_pos_;   // column-major position -> column slot
  std::vector<int> column_start_;    // column slot -> first column-major position
  std::vector<int> column_lengths_;
  std::vector<std::pair<int, int>> crossings_;  // column-major pairs whose order flips
};

/// Signed distinct rearrangements of a weakly increasing word: sign -1 per
/// inverted pair unless both letters are odd.
std::vector<std::pair<std::vector<Letter>, int>> row_expansion(const std::vector<Letter>& word,
                                                               const std::vector<bool>& odd);

}  // namespace skw
