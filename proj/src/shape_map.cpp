#include "skw/shape_map.hpp"

#include <algorithm>

#include "skw/errors.hpp"
#include "skw/field.hpp"

namespace skw {

void normalize(KeyedVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size();) {
    std::int64_t sum = 0;
    std::size_t s = r;
    for (; s < v.size() && v[s].first == v[r].first; ++s) sum = checked_add(sum, v[s].second);
    if (sum != 0) {
      if (w != r) v[w].first = std::move(v[r].first);
      v[w].second = sum;
      ++w;
    }
    r = s;
  }
  v.resize(w);
}

std::vector<std::pair<std::vector<Letter>, int>> row_expansion(const std::vector<Letter>& word,
                                                               const std::vector<bool>& odd) {
  std::vector<std::pair<std::vector<Letter>, int>> out;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] < word[i - 1]) throw Error("row_expansion expects a weakly increasing word");
    if (word[i] == word[i - 1] && !odd[word[i]]) return out;  // repeated even letter: zero
  }
  std::vector<Letter> perm = word;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b] && !(odd[perm[a]] && odd[perm[b]])) ++inversions;
    out.emplace_back(perm, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ShapeMap::ShapeMap(SkewShape shape, std::vector<bool> odd, bool koszul_rearrange)
    : shape_(std::move(shape)), odd_(std::move(odd)), koszul_(koszul_rearrange) {
  if (shape_.size() > 255) throw DimensionError("shape too large");
  odd_.resize(256, false);
  int pos = 0;
  for (int r = 0; r < shape_.rows(); ++r) {
    row_start_.push_back(pos);
    row_len_.push_back(shape_.row_length(r));
    pos += shape_.row_length(r);
  }
  // column-major order: columns left to right, cells top to bottom
  const int ncols = shape_.lambda().empty() ? 0 : shape_.lambda()[0];
  for (int c = 1; c <= ncols; ++c) {
    const int start = static_cast<int>(column_major_.size());
    for (int r = 0; r < shape_.rows(); ++r) {
      if (shape_.mu()[r] < c && c <= shape_.lambda()[r]) {
        column_major_.push_back(row_start_[r] + (c - shape_.mu()[r] - 1));
        column_of_pos_.push_back(static_cast<int>(column_lengths_.size()));
      }
    }
    const int len = static_cast<int>(column_major_.size()) - start;
    if (len > 0) {
      column_start_.push_back(start);
      column_lengths_.push_back(len);
    }
  }
  const int n = static_cast<int>(column_major_.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (column_major_[a] > column_major_[b]) crossings_.emplace_back(a, b);
}

int ShapeMap::canonicalize_columns(std::string& seq) const {
  int sign = 1;
  for (std::size_t c = 0; c < column_lengths_.size(); ++c) {
    const int start = column_start_[c];
    const int end = start + column_lengths_[c];
    for (int i = start + 1; i < end; ++i) {
      for (int j = i; j > start; --j) {
        const auto lo = static_cast<Letter>(seq[j - 1]);
        const auto hi = static_cast<Letter>(seq[j]);
        if (lo < hi) break;
        if (lo == hi) {
          if (odd_[lo]) return 0;
          break;
        }
        std::swap(seq[j - 1], seq[j]);
        if (odd_[lo] && odd_[hi]) sign = -sign;
      }
    }
  }
  return sign;
}

void ShapeMap::image(const std::vector<Letter>& row_major, std::int64_t coeff, KeyedVec& out) const {
  if (row_major.size() != column_major_.size()) throw DimensionError("filling does not match shape");
  std::vector<std::vector<std::pair<std::vector<Letter>, int>>> expansions;
  for (std::size_t r = 0; r < row_start_.size(); ++r) {
    std::vector<Letter> word(row_major.begin() + row_start_[r], row_major.begin() + row_start_[r] + row_len_[r]);
    expansions.push_back(row_expansion(word, odd_));
    if (expansions.back().empty()) return;
  }
  std::vector<Letter> buf(row_major.size());
  const int n = static_cast<int>(column_major_.size());
  // iterate the product of the row expansions
  std::vector<std::size_t> idx(expansions.size(), 0);
  while (true) {
    int sign = 1;
    for (std::size_t r = 0; r < expansions.size(); ++r) {
      const auto& [perm, s] = expansions[r][idx[r]];
      std::copy(perm.begin(), perm.end(), buf.begin() + row_start_[r]);
      sign *= s;
    }
    std::string seq(n, '\0');
    for (int q = 0; q < n; ++q) seq[q] = static_cast<char>(buf[column_major_[q]]);
    if (koszul_) {
      for (const auto& [a, b] : crossings_)
        if (odd_[static_cast<Letter>(seq[a])] && odd_[static_cast<Letter>(seq[b])]) sign = -sign;
    }
    const int csign = canonicalize_columns(seq);
    if (csign != 0) out.emplace_back(std::move(seq), checked_mul(coeff, sign * csign));
    std::size_t r = 0;
    for (; r < expansions.size(); ++r) {
      if (++idx[r] < expansions[r].size()) break;
      idx[r] = 0;
    }
    if (r == expansions.size()) break;
  }
}

KeyedVec ShapeMap::image(const std::vector<Letter>& row_major) const {
  KeyedVec out;
  image(row_major, 1, out);
  normalize(out);
  return out;
}

void ShapeMap::derivation(const KeyedVec& v, Letter from, Letter to, KeyedVec& out) const {
  for (const auto& [key, coeff] : v) {
    int odd_before = 0;
    for (std::size_t q = 0; q < key.size(); ++q) {
      const auto a = static_cast<Letter>(key[q]);
      if (a == from) {
        std::string next = key;
        next[q] = static_cast<char>(to);
        const int sign = canonicalize_columns(next);
        if (sign != 0) {
          const int s = odd_before % 2 ? -sign : sign;
          out.emplace_back(std::move(next), checked_mul(coeff, s));
        }
      }
      if (odd_[a]) ++odd_before;
    }
  }
}

}  // namespace skw
