#include "skw/tableau.hpp"

#include <charconv>

#include "skw/errors.hpp"

namespace skw {

Alphabet::Alphabet(int f, int g, Order order) : f_(f), g_(g), order_(order) {
  if (f < 0 || g < 0) throw DimensionError("alphabet ranks must be nonnegative");
  if (f + g > 255) throw DimensionError("alphabet too large");
}

int Alphabet::index(Letter a) const {
  if (a >= size()) throw UnknownLabelError("letter " + std::to_string(a) + " outside alphabet");
  if (order_ == Order::YX) return a < g_ ? a + 1 : a - g_ + 1;
  return a < f_ ? a + 1 : a - f_ + 1;
}

Letter Alphabet::x(int i) const {
  if (i < 1 || i > f_) throw UnknownLabelError("x" + std::to_string(i) + " outside alphabet");
  return static_cast<Letter>(order_ == Order::YX ? g_ + i - 1 : i - 1);
}

Letter Alphabet::y(int i) const {
  if (i < 1 || i > g_) throw UnknownLabelError("y" + std::to_string(i) + " outside alphabet");
  return static_cast<Letter>(order_ == Order::YX ? i - 1 : f_ + i - 1);
}

std::string Alphabet::name(Letter a) const {
  return (is_x(a) ? "x" : "y") + std::to_string(index(a));
}

Letter Alphabet::parse(std::string_view label) const {
  if (label.size() < 2 || (label[0] != 'x' && label[0] != 'y'))
    throw UnknownLabelError("bad label '" + std::string(label) + "'");
  int i = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), i);
  if (ec != std::errc() || ptr != label.data() + label.size())
    throw UnknownLabelError("bad label '" + std::string(label) + "'");
  return label[0] == 'x' ? x(i) : y(i);
}

std::vector<std::vector<Letter>> Tableau::rows() const {
  std::vector<std::vector<Letter>> out(shape.rows());
  std::size_t pos = 0;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.row_length(r); ++c) out[r].push_back(entries.at(pos++));
  return out;
}

int Tableau::x_count(const Alphabet& a) const {
  int n = 0;
  for (Letter e : entries) n += a.is_x(e);
  return n;
}

std::vector<std::vector<std::string>> Tableau::row_labels(const Alphabet& a) const {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : rows()) {
    auto& names = out.emplace_back();
    for (Letter e : row) names.push_back(a.name(e));
  }
  return out;
}

Tableau make_tableau(const SkewShape& shape, const std::vector<std::vector<std::string>>& rows,
                     const Alphabet& a) {
  Tableau t{shape, {}};
  if (static_cast<int>(rows.size()) > shape.rows() && !rows.back().empty())
    throw InvalidShapeError("too many rows for shape " + shape.to_string());
  for (int r = 0; r < shape.rows(); ++r) {
    const std::size_t want = shape.row_length(r);
    const std::size_t have = r < static_cast<int>(rows.size()) ? rows[r].size() : 0;
    if (want != have)
      throw InvalidShapeError("row " + std::to_string(r + 1) + " has " + std::to_string(have) +
                              " entries, shape needs " + std::to_string(want));
    for (const auto& label : rows[r]) t.entries.push_back(a.parse(label));
  }
  return t;
}

namespace {

/// Neighbor indices in row-major cell order (-1 when absent).
struct CellGraph {
  std::vector<int> left;
  std::vector<int> above;
};

CellGraph cell_graph(const SkewShape& shape, bool columns = true) {
  const auto cells = shape.cells();
  CellGraph g;
  std::vector<std::vector<int>> index(shape.rows() + 1);
  for (int r = 0; r < shape.rows(); ++r) index[r].assign(shape.lambda()[r] + 1, -1);
  for (std::size_t k = 0; k < cells.size(); ++k) index[cells[k].row - 1][cells[k].col] = static_cast<int>(k);
  for (const auto& c : cells) {
    const int r = c.row - 1;
    g.left.push_back(c.col - 1 > shape.mu()[r] ? index[r][c.col - 1] : -1);
    g.above.push_back(columns && r > 0 && c.col > shape.mu()[r - 1] ? index[r - 1][c.col] : -1);
  }
  return g;
}

// Rows: equal neighbors only among X.  Columns: equal only among Y.
struct Filler {
  const Alphabet& alphabet;
  const CellGraph& graph;
  std::optional<int> x_target;
  std::vector<Letter> cur;
  std::int64_t count = 0;
  std::vector<Tableau>* out = nullptr;
  const SkewShape* shape = nullptr;

  void run(std::size_t pos, int xs) {
    const std::size_t n = graph.left.size();
    if (x_target) {
      if (xs > *x_target) return;
      if (xs + static_cast<int>(n - pos) < *x_target) return;
    }
    if (pos == n) {
      ++count;
      if (out) out->push_back(Tableau{*shape, cur});
      return;
    }
    int lo = 0;
    if (int l = graph.left[pos]; l >= 0) lo = std::max(lo, cur[l] + (alphabet.is_x(cur[l]) ? 0 : 1));
    if (int u = graph.above[pos]; u >= 0) lo = std::max(lo, cur[u] + (alphabet.is_x(cur[u]) ? 1 : 0));
    for (int a = lo; a < alphabet.size(); ++a) {
      cur[pos] = static_cast<Letter>(a);
      run(pos + 1, xs + alphabet.is_x(cur[pos]));
    }
  }
};

}  // namespace

bool is_standard_mod_x(const Tableau& t, const Alphabet& a) {
  for (Letter e : t.entries)
    if (e >= a.size()) throw UnknownLabelError("entry " + std::to_string(e) + " outside alphabet");
  if (t.entries.size() != static_cast<std::size_t>(t.shape.size()))
    throw InvalidShapeError("tableau entry count does not match its shape");
  const auto g = cell_graph(t.shape);
  for (std::size_t k = 0; k < t.entries.size(); ++k) {
    const Letter e = t.entries[k];
    if (int l = g.left[k]; l >= 0) {
      const Letter p = t.entries[l];
      if (e < p || (e == p && !a.is_x(e))) return false;
    }
    if (int u = g.above[k]; u >= 0) {
      const Letter p = t.entries[u];
      if (e < p || (e == p && a.is_x(e))) return false;
    }
  }
  return true;
}

std::vector<Tableau> enumerate_standard(const SkewShape& shape, const Alphabet& a, std::optional<int> x_count) {
  const auto g = cell_graph(shape);
  std::vector<Tableau> out;
  Filler filler{a, g, x_count, std::vector<Letter>(g.left.size()), 0, &out, &shape};
  filler.run(0, 0);
  return out;
}

std::int64_t count_standard(const SkewShape& shape, const Alphabet& a, std::optional<int> x_count) {
  const auto g = cell_graph(shape);
  Filler filler{a, g, x_count, std::vector<Letter>(g.left.size()), 0, nullptr, &shape};
  filler.run(0, 0);
  return filler.count;
}

std::vector<Tableau> enumerate_row_standard(const SkewShape& shape, const Alphabet& a,
                                            std::optional<int> x_count) {
  const auto g = cell_graph(shape, false);
  std::vector<Tableau> out;
  Filler filler{a, g, x_count, std::vector<Letter>(g.left.size()), 0, &out, &shape};
  filler.run(0, 0);
  return out;
}

std::int64_t count_semistandard(const SkewShape& shape, int m, Convention convention) {
  if (m < 0) throw DimensionError("rank must be nonnegative");
  return count_standard(shape, convention == Convention::Schur ? Alphabet::schur(m) : Alphabet::weyl(m));
}

}  // namespace skw
