#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skw/partition.hpp"

namespace skw {

/// Position of a label in the alphabet's total order.
using Letter = std::uint8_t;

/// Basis labels of F (x_1..x_f) and of G (y_1..y_g), totally ordered. The
/// default order puts every y before every x.
class Alphabet {
 public:
  enum class Order { YX, XY };

  Alphabet(int f, int g, Order order = Order::YX);
  /// Only Y labels: standard mod X means rows strict, columns weak.
  static Alphabet schur(int m) { return Alphabet(0, m); }
  /// Only X labels: rows weak, columns strict.
  static Alphabet weyl(int m) { return Alphabet(m, 0); }

  int f() const { return f_; }
  int g() const { return g_; }
  Order order() const { return order_; }
  int size() const { return f_ + g_; }

  bool is_x(Letter a) const { return order_ == Order::YX ? a >= g_ : a < f_; }
  /// 1-based index within x_* or y_*.
  int index(Letter a) const;
  Letter x(int i) const;  // 1-based
  Letter y(int i) const;  // 1-based
  std::string name(Letter a) const;
  /// "x3" / "y1"; throws UnknownLabelError.
  Letter parse(std::string_view label) const;
  std::string order_name() const { return order_ == Order::YX ? "yx" : "xy"; }

 private:
  int f_;
  int g_;
  Order order_;
};

/// A filling of the cells of a skew shape, stored in row-major cell order.
struct Tableau {
  SkewShape shape;
  std::vector<Letter> entries;

  /// Entries of each row of lambda (rows with no cells are empty).
  std::vector<std::vector<Letter>> rows() const;
  /// Number of entries that are X labels.
  int x_count(const Alphabet& a) const;
  std::vector<std::vector<std::string>> row_labels(const Alphabet& a) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Builds a tableau from per-row label names, e.g. {{"y1","y2"},{"x1"}};
/// throws UnknownLabelError or InvalidShapeError on size mismatch.
Tableau make_tableau(const SkewShape& shape, const std::vector<std::vector<std::string>>& rows,
                     const Alphabet& a);

/// Rows weakly increase with repeats only among X; columns weakly increase
/// with repeats only among Y. Throws UnknownLabelError for entries outside
/// the alphabet.
bool is_standard_mod_x(const Tableau& t, const Alphabet& a);

/// Every standard-mod-X tableau, lexicographic in the row-major entry
/// sequence. With `x_count` set, only those with exactly that many X entries.
std::vector<Tableau> enumerate_standard(const SkewShape& shape, const Alphabet& a,
                                        std::optional<int> x_count = std::nullopt);
std::int64_t count_standard(const SkewShape& shape, const Alphabet& a,
                            std::optional<int> x_count = std::nullopt);

/// Fillings whose rows are standard mod X (no column condition): these index
/// the tensor-product basis of the row factors.
std::vector<Tableau> enumerate_row_standard(const SkewShape& shape, const Alphabet& a,
                                            std::optional<int> x_count = std::nullopt);

enum class Convention { Schur, Weyl };

/// Schur: rows strict, columns weak over m letters (dim L_{lambda/mu} of a
/// rank m free module). Weyl: rows weak, columns strict (dim K_{lambda/mu}).
std::int64_t count_semistandard(const SkewShape& shape, int m, Convention convention);

}  // namespace skw
