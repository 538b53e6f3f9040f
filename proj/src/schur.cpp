#include "skw/schur.hpp"

#include <algorithm>
#include <unordered_map>

#include "skw/schur_complex.hpp"

namespace skw {

namespace {

SchurMap build_map(const SkewShape& shape, int m, bool weyl) {
  if (m < 0) throw DimensionError("rank must be nonnegative");
  const Alphabet a = weyl ? Alphabet::weyl(m) : Alphabet::schur(m);
  const ShapeMap sm(shape, std::vector<bool>(a.size(), weyl), false);
  SchurMap out{shape, m, {}, enumerate_row_standard(shape, a), {}};
  std::vector<KeyedVec> images;
  images.reserve(out.domain.size());
  std::unordered_map<MonomialKey, int> index;
  for (const auto& t : out.domain) {
    images.push_back(sm.image(t.entries));
    for (const auto& [key, c] : images.back()) index.emplace(key, 0);
  }
  out.codomain.reserve(index.size());
  for (const auto& kv : index) out.codomain.push_back(kv.first);
  std::sort(out.codomain.begin(), out.codomain.end());
  for (std::size_t i = 0; i < out.codomain.size(); ++i) index[out.codomain[i]] = static_cast<int>(i);
  std::vector<IntSparse::Entry> entries;
  for (std::size_t col = 0; col < images.size(); ++col)
    for (const auto& [key, c] : images[col]) entries.push_back({index[key], static_cast<int>(col), c});
  out.matrix = IntSparse::from_entries(static_cast<int>(out.codomain.size()), static_cast<int>(out.domain.size()),
                                       std::move(entries));
  return out;
}

}  // namespace

SchurMap d_map_matrix(const SkewShape& shape, int m) { return build_map(shape, m, false); }

SchurMap weyl_d_map_matrix(const SkewShape& shape, int m) { return build_map(shape, m, true); }

ModulePresentation schur_module_presentation(const SkewShape& shape, const IntMatrix& phi) {
  const int g = phi.rows();
  const int f = phi.cols();
  if (shape.is_empty()) return {1, IntSparse(1, 0)};
  const auto c = build_generic(shape, f, g);
  const int gens = c.complex.rank(0);
  if (c.complex.top() < 1) return {gens, IntSparse(gens, 0)};
  return {gens, specialize(c.complex.d(1), phi)};
}

std::string tableau_label(const Tableau& t, const Alphabet& a) {
  std::string s;
  bool first_row = true;
  for (const auto& row : t.rows()) {
    if (!first_row) s += '|';
    first_row = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += a.name(row[i]);
    }
  }
  return s;
}

std::string key_label(const MonomialKey& key, const std::vector<int>& column_lengths, const Alphabet& a) {
  std::string s;
  std::size_t pos = 0;
  for (std::size_t c = 0; c < column_lengths.size(); ++c) {
    if (c) s += '|';
    for (int i = 0; i < column_lengths[c]; ++i) {
      if (i) s += ',';
      s += a.name(static_cast<Letter>(key.at(pos++)));
    }
  }
  return s;
}

}  // namespace skw
