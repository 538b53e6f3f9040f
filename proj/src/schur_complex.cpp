#include "skw/schur_complex.hpp"

#include <map>
#include <unordered_map>

#include "skw/errors.hpp"
#include "skw/linalg.hpp"
#include "skw/multilinear.hpp"
#include "skw/schur.hpp"
#include "skw/shape_map.hpp"
#include "skw/verify.hpp"

namespace skw {

namespace {

/// Images v_T of one degree, indexed over their own ambient keys.
struct DegreeImages {
  std::vector<IntVec> vectors;
  std::unordered_map<MonomialKey, int> index;
};

DegreeImages collect_images(const ShapeMap& sm, const std::vector<Tableau>& tableaux) {
  DegreeImages out;
  for (const auto& t : tableaux) {
    const KeyedVec img = sm.image(t.entries);
    IntVec v;
    for (const auto& [key, c] : img) {
      auto [it, fresh] = out.index.try_emplace(key, static_cast<int>(out.index.size()));
      v.emplace_back(it->second, c);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

/// Coordinates of `v` in the solver basis; throws when not integral.
std::vector<std::int64_t> coordinates(const KeyedVec& v, const DegreeImages& target, const IntegralSolver& solver,
                                      const std::string& where) {
  IntVec iv;
  for (const auto& [key, c] : v) {
    auto it = target.index.find(key);
    if (it == target.index.end())
      throw NonIntegralCoordinatesError(where + ": image leaves the span of the standard basis");
    iv.emplace_back(it->second, c);
  }
  auto coords = solver.solve(iv);
  if (!coords) throw NonIntegralCoordinatesError(where + ": coordinates are not integral");
  return *coords;
}

}  // namespace

SchurComplex build_generic(const SkewShape& shape, int f, int g, Alphabet::Order order) {
  SchurComplex out{shape, f, g, Alphabet(f, g, order), {}, {}};
  const Alphabet& a = out.alphabet;
  const int top = shape.size();
  std::vector<bool> odd(a.size());
  for (int l = 0; l < a.size(); ++l) odd[l] = a.is_x(static_cast<Letter>(l));
  const ShapeMap sm(shape, odd, true);

  std::vector<int> ranks;
  for (int j = 0; j <= top; ++j) {
    out.components.push_back(enumerate_standard(shape, a, j));
    ranks.push_back(static_cast<int>(out.components.back().size()));
  }
  out.complex = FormComplex(ranks);
  for (int j = 0; j <= top; ++j) {
    std::vector<std::string> labels;
    for (const auto& t : out.components[j]) labels.push_back(tableau_label(t, a));
    out.complex.set_labels(j, std::move(labels));
  }

  DegreeImages lower = collect_images(sm, out.components[0]);
  for (int j = 1; j <= top; ++j) {
    DegreeImages upper = collect_images(sm, out.components[j]);
    if (ranks[j] == 0 || ranks[j - 1] == 0) {
      lower = std::move(upper);
      continue;
    }
    const IntegralSolver solver(lower.vectors);
    // Key strings of this degree, recovered from the index for the derivation.
    std::vector<MonomialKey> keys(upper.index.size());
    for (const auto& [key, idx] : upper.index) keys[idx] = key;
    std::vector<FormSparse::Entry> entries;
    const std::string where = "d_" + std::to_string(j) + " of " + shape.to_string();
    for (int col = 0; col < ranks[j]; ++col) {
      KeyedVec v;
      for (const auto& [idx, c] : upper.vectors[col]) v.emplace_back(keys[idx], c);
      for (int k = 1; k <= f; ++k) {
        for (int i = 1; i <= g; ++i) {
          KeyedVec dv;
          sm.derivation(v, a.x(k), a.y(i), dv);
          normalize(dv);
          if (dv.empty()) continue;
          const auto coords = coordinates(dv, lower, solver, where);
          for (int row = 0; row < ranks[j - 1]; ++row)
            if (coords[row] != 0) entries.push_back({row, col, LinearForm::variable(i, k, coords[row])});
        }
      }
    }
    out.complex.set_d(j, FormSparse::from_entries(ranks[j - 1], ranks[j], std::move(entries)));
    lower = std::move(upper);
  }
  return out;
}

IntMatrix epsilon_matrix(const IntMatrix& phi) {
  const int g = phi.rows();
  const int f = phi.cols();
  if (f >= g) throw DimensionError("epsilon needs f < g");
  const MonomialBasis subsets(Algebra::Exterior, g, f + 1);
  IntMatrix e(g, subsets.size());
  for (int s = 0; s < subsets.size(); ++s) {
    const auto& I = subsets[s];
    for (int p = 0; p <= f; ++p) {
      IntMatrix minor(f, f);
      int r = 0;
      for (int q = 0; q <= f; ++q) {
        if (q == p) continue;
        for (int c = 0; c < f; ++c) minor(r, c) = phi(I[q], c);
        ++r;
      }
      const std::int64_t det = determinant(minor);
      e(I[p], s) = (f - p) % 2 ? -det : det;
    }
  }
  return e;
}

IntSparse schur_functor_map(const SkewShape& shape, const IntMatrix& psi) {
  const int n_src = psi.cols();
  const int n_dst = psi.rows();
  const Alphabet src = Alphabet::schur(n_src);
  const Alphabet dst = Alphabet::schur(n_dst);
  const auto src_basis = enumerate_standard(shape, src);
  const auto dst_basis = enumerate_standard(shape, dst);
  const ShapeMap sm(shape, std::vector<bool>(std::max(n_src, n_dst), false), false);
  const DegreeImages target = collect_images(sm, dst_basis);
  if (src_basis.empty() || dst_basis.empty()) return IntSparse(static_cast<int>(dst_basis.size()),
                                                               static_cast<int>(src_basis.size()));
  const IntegralSolver solver(target.vectors);

  // wedge^k psi on a strict word: sum over strict words B of det(psi[B, A]) e_B
  std::map<std::vector<Letter>, std::vector<std::pair<std::vector<Letter>, std::int64_t>>> wedge_cache;
  auto wedge_image = [&](const std::vector<Letter>& word) -> const auto& {
    auto it = wedge_cache.find(word);
    if (it != wedge_cache.end()) return it->second;
    std::vector<std::pair<std::vector<Letter>, std::int64_t>> terms;
    const int k = static_cast<int>(word.size());
    const MonomialBasis words(Algebra::Exterior, n_dst, k);
    for (const auto& b : words.tuples()) {
      IntMatrix m(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) m(r, c) = psi(b[r], word[c]);
      const std::int64_t det = determinant(m);
      if (det != 0) terms.emplace_back(std::vector<Letter>(b.begin(), b.end()), det);
    }
    return wedge_cache.emplace(word, std::move(terms)).first->second;
  };

  std::vector<IntSparse::Entry> entries;
  for (std::size_t col = 0; col < src_basis.size(); ++col) {
    const auto rows = src_basis[col].rows();
    // expand the tensor of the row images into row-major fillings
    std::vector<std::pair<std::vector<Letter>, std::int64_t>> fillings{{{}, 1}};
    for (const auto& row : rows) {
      const auto& img = wedge_image(row);
      std::vector<std::pair<std::vector<Letter>, std::int64_t>> next;
      for (const auto& [prefix, c] : fillings)
        for (const auto& [word, d] : img) {
          auto filling = prefix;
          filling.insert(filling.end(), word.begin(), word.end());
          next.emplace_back(std::move(filling), checked_mul(c, d));
        }
      fillings = std::move(next);
    }
    KeyedVec v;
    for (const auto& [filling, c] : fillings) sm.image(filling, c, v);
    normalize(v);
    if (v.empty()) continue;
    const auto coords = coordinates(v, target, solver, "L(psi) on " + shape.to_string());
    for (std::size_t row = 0; row < coords.size(); ++row)
      if (coords[row] != 0) entries.push_back({static_cast<int>(row), static_cast<int>(col), coords[row]});
  }
  return IntSparse::from_entries(static_cast<int>(dst_basis.size()), static_cast<int>(src_basis.size()),
                                 std::move(entries));
}

IntComplex build_tilde(const SchurComplex& generic, const IntMatrix& phi) {
  if (phi.rows() != generic.g || phi.cols() != generic.f) throw DimensionError("phi does not match the complex");
  const IntMatrix eps = epsilon_matrix(phi);
  const IntSparse lift = schur_functor_map(generic.shape, eps.transpose());
  const IntComplex base = specialize(generic.complex, phi);
  std::vector<int> ranks{lift.rows()};
  for (int r : base.ranks()) ranks.push_back(r);
  IntComplex out(ranks);
  out.set_d(1, lift);
  for (int n = 1; n <= base.top(); ++n) out.set_d(n + 1, base.d(n));
  for (int n = 0; n <= base.top(); ++n) out.set_labels(n + 1, base.labels(n));
  return out;
}

IntComplex build_tilde(const SkewShape& shape, const IntMatrix& phi) {
  if (phi.cols() >= phi.rows()) throw DimensionError("tilde complex needs f < g");
  return build_tilde(build_generic(shape, phi.cols(), phi.rows()), phi);
}

SplitCheck split_decomposition_check(const SkewShape& shape, int phi1_rank, const IntMatrix& phi2) {
  if (phi1_rank < 0) throw DimensionError("negative identity rank");
  const int g2 = phi2.rows();
  const int f2 = phi2.cols();
  IntMatrix phi(g2 + phi1_rank, f2 + phi1_rank);
  for (int i = 0; i < phi1_rank; ++i) phi(i, i) = 1;
  for (int r = 0; r < g2; ++r)
    for (int c = 0; c < f2; ++c) phi(phi1_rank + r, phi1_rank + c) = phi2(r, c);
  SplitCheck out;
  out.homology_full = homology_dims(specialize(build_generic(shape, f2 + phi1_rank, g2 + phi1_rank).complex, phi));
  out.homology_small = homology_dims(specialize(build_generic(shape, f2, g2).complex, phi2));
  out.pass = out.homology_full == out.homology_small;
  return out;
}

}  // namespace skw
