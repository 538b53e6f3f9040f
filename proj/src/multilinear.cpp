#include "skw/multilinear.hpp"

#include <algorithm>

namespace skw {

namespace {

void fill_tuples(Algebra kind, int m, int degree, int lo, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == degree) {
    out.push_back(cur);
    return;
  }
  for (int a = lo; a < m; ++a) {
    cur.push_back(a);
    fill_tuples(kind, m, degree, kind == Algebra::Exterior ? a + 1 : a, cur, out);
    cur.pop_back();
  }
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Product over letters of C(mult in merged, mult in a).
std::int64_t multinomial_split(const std::vector<int>& a, const std::vector<int>& merged) {
  std::int64_t r = 1;
  for (std::size_t s = 0; s < merged.size();) {
    std::size_t e = s;
    while (e < merged.size() && merged[e] == merged[s]) ++e;
    const int in_a = static_cast<int>(std::count(a.begin(), a.end(), merged[s]));
    r = checked_mul(r, binomial(static_cast<int>(e - s), in_a));
    s = e;
  }
  return r;
}

}  // namespace

MonomialBasis::MonomialBasis(Algebra kind, int m, int degree) : kind_(kind), m_(m), degree_(degree) {
  if (m < 0) throw DimensionError("negative module rank");
  if (degree < 0) return;
  std::vector<int> cur;
  fill_tuples(kind, m, degree, 0, cur, tuples_);
  for (int i = 0; i < size(); ++i) index_.emplace(tuples_[i], i);
}

int MonomialBasis::index_of(const std::vector<int>& tuple) const {
  auto it = index_.find(tuple);
  return it == index_.end() ? -1 : it->second;
}

IntSparse structure_map(StructureKind kind, Algebra algebra, int m, int a, int b) {
  const MonomialBasis ba(algebra, m, a), bb(algebra, m, b), bt(algebra, m, a + b);
  const int pairs = ba.size() * bb.size();
  std::vector<IntSparse::Entry> entries;
  for (int i = 0; i < ba.size(); ++i) {
    for (int j = 0; j < bb.size(); ++j) {
      const auto& x = ba[i];
      const auto& y = bb[j];
      std::vector<int> merged;
      std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(merged));
      std::int64_t coeff = 1;
      if (algebra == Algebra::Exterior) {
        if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) continue;
        int inv = 0;
        for (int p : x)
          for (int q : y) inv += p > q;
        coeff = inv % 2 ? -1 : 1;
      } else {
        const bool split_weight = (algebra == Algebra::Symmetric) == (kind == StructureKind::Diagonal);
        if (split_weight) coeff = multinomial_split(x, merged);
      }
      const int t = bt.index_of(merged);
      const int pair = i * bb.size() + j;
      if (kind == StructureKind::Diagonal) entries.push_back({pair, t, coeff});
      else entries.push_back({t, pair, coeff});
    }
  }
  if (kind == StructureKind::Diagonal) return IntSparse::from_entries(pairs, bt.size(), std::move(entries));
  return IntSparse::from_entries(bt.size(), pairs, std::move(entries));
}

FormComplex koszul_strand(int t, int f, int g) {
  if (t < 0 || f < 0 || g < 0) throw DimensionError("koszul_strand needs t, f, g >= 0");
  const int top = std::min(f, t);
  std::vector<MonomialBasis> ext, sym;
  std::vector<int> ranks;
  for (int n = 0; n <= top; ++n) {
    ext.emplace_back(Algebra::Exterior, f, n);
    sym.emplace_back(Algebra::Symmetric, g, t - n);
    ranks.push_back(ext[n].size() * sym[n].size());
  }
  FormComplex c(ranks);
  for (int n = 1; n <= top; ++n) {
    std::vector<FormSparse::Entry> entries;
    for (int ia = 0; ia < ext[n].size(); ++ia) {
      const auto& wedge = ext[n][ia];
      for (int im = 0; im < sym[n].size(); ++im) {
        const int col = ia * sym[n].size() + im;
        for (int r = 0; r < n; ++r) {
          auto rest = wedge;
          rest.erase(rest.begin() + r);
          const int ja = ext[n - 1].index_of(rest);
          for (int i = 0; i < g; ++i) {
            auto mono = sym[n][im];
            mono.insert(std::upper_bound(mono.begin(), mono.end(), i), i);
            const int row = ja * sym[n - 1].size() + sym[n - 1].index_of(mono);
            entries.push_back({row, col, LinearForm::variable(i + 1, wedge[r] + 1, r % 2 ? -1 : 1)});
          }
        }
      }
    }
    c.set_d(n, FormSparse::from_entries(ranks[n - 1], ranks[n], std::move(entries)));
  }
  return c;
}

FormComplex lebelt_complex(int t, int f, int g) {
  if (t < 0 || f < 0 || g < 0) throw DimensionError("lebelt_complex needs t, f, g >= 0");
  std::vector<MonomialBasis> div, ext;
  std::vector<int> ranks;
  for (int i = 0; i <= t; ++i) {
    div.emplace_back(Algebra::Divided, f, i);
    ext.emplace_back(Algebra::Exterior, g, t - i);
    ranks.push_back(div[i].size() * ext[i].size());
  }
  FormComplex c(ranks);
  for (int n = 1; n <= t; ++n) {
    std::vector<FormSparse::Entry> entries;
    for (int ia = 0; ia < div[n].size(); ++ia) {
      const auto& power = div[n][ia];
      for (int iv = 0; iv < ext[n].size(); ++iv) {
        const int col = ia * ext[n].size() + iv;
        const auto& v = ext[n][iv];
        for (std::size_t r = 0; r < power.size(); ++r) {
          if (r > 0 && power[r] == power[r - 1]) continue;  // one term per distinct letter
          auto rest = power;
          rest.erase(rest.begin() + r);
          const int ja = div[n - 1].index_of(rest);
          for (int i = 0; i < g; ++i) {
            if (std::binary_search(v.begin(), v.end(), i)) continue;
            auto w = v;
            const auto pos = std::upper_bound(w.begin(), w.end(), i);
            const int before = static_cast<int>(pos - w.begin());
            w.insert(pos, i);
            const int row = ja * ext[n - 1].size() + ext[n - 1].index_of(w);
            entries.push_back({row, col, LinearForm::variable(i + 1, power[r] + 1, before % 2 ? -1 : 1)});
          }
        }
      }
    }
    c.set_d(n, FormSparse::from_entries(ranks[n - 1], ranks[n], std::move(entries)));
  }
  return c;
}

namespace {

FormComplex tensor_pair(const FormComplex& a, const FormComplex& b) {
  const int top = a.top() + b.top();
  // offset[n][p]: position of block (p, n - p) inside degree n
  std::vector<std::vector<int>> offset(top + 1, std::vector<int>(a.top() + 1, -1));
  std::vector<int> ranks(top + 1, 0);
  for (int n = 0; n <= top; ++n)
    for (int p = std::max(0, n - b.top()); p <= std::min(n, a.top()); ++p) {
      offset[n][p] = ranks[n];
      ranks[n] += a.rank(p) * b.rank(n - p);
    }
  FormComplex c(ranks);
  for (int n = 1; n <= top; ++n) {
    std::vector<FormSparse::Entry> entries;
    for (int p = std::max(0, n - b.top()); p <= std::min(n, a.top()); ++p) {
      const int q = n - p;
      const int rb = b.rank(q);
      // da (x) b
      if (p >= 1) {
        for (const auto& e : a.d(p).entries())
          for (int k = 0; k < rb; ++k)
            entries.push_back({offset[n - 1][p - 1] + e.row * rb + k, offset[n][p] + e.col * rb + k, e.value});
      }
      // (-1)^p a (x) db
      if (q >= 1) {
        const int rb_low = b.rank(q - 1);
        for (int k = 0; k < a.rank(p); ++k)
          for (const auto& e : b.d(q).entries())
            entries.push_back({offset[n - 1][p] + k * rb_low + e.row, offset[n][p] + k * rb + e.col,
                               p % 2 ? e.value.scaled(-1) : e.value});
      }
    }
    c.set_d(n, FormSparse::from_entries(ranks[n - 1], ranks[n], std::move(entries)));
  }
  return c;
}

}  // namespace

FormComplex tensor_complexes(const std::vector<FormComplex>& factors) {
  FormComplex acc(std::vector<int>{1});
  if (factors.empty()) return acc;
  acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor_pair(acc, factors[i]);
  return acc;
}

}  // namespace skw
