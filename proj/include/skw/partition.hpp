#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skw {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so two partitions compare equal iff they have the
/// same diagram. Part indices are 0-based in code; row i of the diagram is
/// part(i - 1) in the 1-based notation used in docs.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidShapeError on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  /// Part i (0-based); zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// Diagram containment: other[i] <= (*this)[i] for all i.
  bool contains(const Partition& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Builds a partition from per-index values that are known to be weakly
/// decreasing; used by the nu-bound formulas.
Partition partition_from_conjugate(const std::vector<int>& conj_parts);

/// All partitions of exactly `weight`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int weight);
/// All partitions contained in `outer` (including the empty one and `outer`).
std::vector<Partition> partitions_inside(const Partition& outer);

struct Cell {
  int row;  // 1-based
  int col;  // 1-based
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct NuBounds {
  Partition nu_prime;
  Partition nu_double_prime;
  int n = 0;
};

struct ShiftData {
  int s = 0;
  int t = 0;
  Partition gamma;
};

/// The skew shape lambda/mu. Construction rejects mu not contained in lambda.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition lambda, Partition mu = {});

  /// Parses "4,3,2/3,1"; a straight shape omits "/mu". Whitespace is ignored.
  static SkewShape parse(std::string_view text);

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  bool is_empty() const { return lambda_ == mu_; }
  /// |lambda| - |mu|
  int size() const { return lambda_.weight() - mu_.weight(); }
  /// Number of rows (index of the last nonempty row of lambda).
  int rows() const { return lambda_.length(); }
  int row_length(int row) const { return lambda_[row] - mu_[row]; }  // 0-based row

  /// Cells (i, j) with mu_i + 1 <= j <= lambda_i, row-major.
  std::vector<Cell> cells() const;
  /// (lambda~ / mu~)
  SkewShape conjugate() const;

  int width() const;
  int height() const;

  NuBounds nu_bounds(int n) const;
  Partition nu_prime(int n) const;
  Partition nu_double_prime(int n) const;

  /// k_1..k_W and l_1..l_H.
  std::pair<std::vector<int>, std::vector<int>> kl_sequences() const;

  /// Threshold number T(f, g). Throws EmptyShapeError when lambda == mu.
  int threshold(int f, int g) const;

  /// Shift data (s, t, gamma) when the shape is a translate of a straight
  /// shape. Throws EmptyShapeError when lambda == mu.
  std::optional<ShiftData> detect_shift() const;

  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition lambda_;
  Partition mu_;
};

/// Every skew shape mu <= lambda with |lambda| <= max_weight, in a fixed order
/// (by |lambda|, then lambda descending, then mu by weight). Includes empty
/// shapes only when `include_empty` is set.
std::vector<SkewShape> all_skew_shapes(int max_weight, bool include_empty = false);

/// Sum of k_t for t >= from (1-based, past the end counts as zero).
int sum_k_from(const std::vector<int>& k, int from);
/// Sum of l_t for t <= to.
int sum_l_upto(const std::vector<int>& l, int to);

}  // namespace skw
