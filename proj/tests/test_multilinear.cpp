#include <doctest.h>

#include "oracles.hpp"
#include "skw/chain_complex.hpp"
#include "skw/json_io.hpp"
#include "skw/multilinear.hpp"
#include "skw/verify.hpp"

using namespace skw;

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

Dense dense(const IntSparse& m) {
  Dense d(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (const auto& e : m.entries()) d[e.row][e.col] = e.value;
  return d;
}

Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense c(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

Dense kron(const Dense& a, const Dense& b) {
  const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0, br = b.size(), bc = br ? b[0].size() : 0;
  Dense c(ar * br, std::vector<std::int64_t>(ac * bc, 0));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) c[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return c;
}

Dense identity(int n) {
  Dense d(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

std::int64_t multichoose(int m, int k) { return k == 0 ? 1 : oracle::binom(m + k - 1, k); }

std::int64_t basis_size(Algebra alg, int m, int k) {
  return alg == Algebra::Exterior ? oracle::binom(m, k) : multichoose(m, k);
}

void check_square_zero(const FormComplex& c, int f, int g, std::uint64_t seed) {
  for (std::uint64_t s = 0; s < 3; ++s) {
    IntMatrix phi(g, f);
    Rng rng(seed, s);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < f; ++j) phi(i, j) = rng.between(-5, 5);
    const IntComplex n = specialize(c, phi);
    for (int k = 2; k <= n.top(); ++k) {
      const auto prod = oracle::dense_product(n.d(k - 1), n.d(k));
      CHECK_MESSAGE(prod.is_zero(), "d_" << k - 1 << " d_" << k);
    }
  }
}

}  // namespace

TEST_CASE("monomial bases") {
  for (auto alg : {Algebra::Exterior, Algebra::Symmetric, Algebra::Divided})
    for (int m = 0; m <= 5; ++m)
      for (int k = 0; k <= 5; ++k) {
        const MonomialBasis b(alg, m, k);
        CHECK(b.size() == basis_size(alg, m, k));
        for (int i = 0; i < b.size(); ++i) {
          CHECK(b.index_of(b[i]) == i);
          if (i) CHECK(b[i - 1] < b[i]);
          for (std::size_t p = 1; p < b[i].size(); ++p)
            CHECK((alg == Algebra::Exterior ? b[i][p - 1] < b[i][p] : b[i][p - 1] <= b[i][p]));
        }
      }
  CHECK(MonomialBasis(Algebra::Exterior, 3, 2).index_of({1, 0}) == -1);
}

TEST_CASE("structure map examples") {
  const IntSparse d = structure_map(StructureKind::Diagonal, Algebra::Exterior, 2, 1, 1);
  CHECK(d.rows() == 4);
  CHECK(d.cols() == 1);
  CHECK(oracle::entry(d, 1, 0) == 1);   // e1 (x) e2
  CHECK(oracle::entry(d, 2, 0) == -1);  // e2 (x) e1
  CHECK(d.entries().size() == 2);
  const IntSparse m = structure_map(StructureKind::Multiplication, Algebra::Symmetric, 1, 1, 1);
  CHECK(dense(m) == Dense{{1}});
  const IntSparse dd = structure_map(StructureKind::Diagonal, Algebra::Divided, 1, 1, 1);
  CHECK(dense(dd) == Dense{{1}});
  CHECK(dense(structure_map(StructureKind::Diagonal, Algebra::Symmetric, 1, 1, 1)) == Dense{{2}});
  CHECK(dense(structure_map(StructureKind::Multiplication, Algebra::Divided, 1, 1, 1)) == Dense{{2}});
}

TEST_CASE("coassociativity and associativity") {
  for (auto alg : {Algebra::Exterior, Algebra::Symmetric, Algebra::Divided})
    for (int m = 1; m <= 3; ++m)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
          for (int c = 0; c <= 2; ++c) {
            if (a + b + c > 3) continue;
            const auto ia = identity(basis_size(alg, m, a));
            const auto ic = identity(basis_size(alg, m, c));
            const auto dab = dense(structure_map(StructureKind::Diagonal, alg, m, a, b));
            const auto dbc = dense(structure_map(StructureKind::Diagonal, alg, m, b, c));
            const auto dab_c = dense(structure_map(StructureKind::Diagonal, alg, m, a + b, c));
            const auto da_bc = dense(structure_map(StructureKind::Diagonal, alg, m, a, b + c));
            CHECK(mul(kron(dab, ic), dab_c) == mul(kron(ia, dbc), da_bc));
            const auto mab = dense(structure_map(StructureKind::Multiplication, alg, m, a, b));
            const auto mbc = dense(structure_map(StructureKind::Multiplication, alg, m, b, c));
            const auto mab_c = dense(structure_map(StructureKind::Multiplication, alg, m, a + b, c));
            const auto ma_bc = dense(structure_map(StructureKind::Multiplication, alg, m, a, b + c));
            CHECK(mul(mab_c, kron(mab, ic)) == mul(ma_bc, kron(ia, mbc)));
          }
}

TEST_CASE("multiplication after diagonal is a binomial scalar") {
  for (auto alg : {Algebra::Exterior, Algebra::Symmetric, Algebra::Divided})
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k <= 4; ++k)
        for (int a = 0; a <= k; ++a) {
          const auto d = dense(structure_map(StructureKind::Diagonal, alg, m, a, k - a));
          const auto p = dense(structure_map(StructureKind::Multiplication, alg, m, a, k - a));
          Dense expected = identity(basis_size(alg, m, k));
          for (auto& row : expected)
            for (auto& v : row) v *= oracle::binom(k, a);
          CHECK(mul(p, d) == expected);
        }
}

TEST_CASE("koszul strand") {
  const FormComplex one = koszul_strand(1, 3, 2);
  REQUIRE(one.ranks() == std::vector<int>{2, 3});
  for (const auto& e : one.d(1).entries()) CHECK(e.value == LinearForm::variable(e.row + 1, e.col + 1));
  CHECK(one.d(1).entries().size() == 6);
  CHECK(koszul_strand(3, 4, 2).ranks() == std::vector<int>{4, 12, 12, 4});
  CHECK(koszul_strand(0, 3, 3).ranks() == std::vector<int>{1});
  for (int t = 0; t <= 6; ++t)
    for (int f = 0; f <= 4; ++f)
      for (int g = 0; g <= 4; ++g) {
        const FormComplex c = koszul_strand(t, f, g);
        for (int n = 0; n <= c.top(); ++n)
          CHECK(c.rank(n) == oracle::binom(f, n) * multichoose(g, t - n));
        if (t <= 4) check_square_zero(c, f, g, 11);
      }
}

TEST_CASE("lebelt complex") {
  CHECK(lebelt_complex(2, 1, 2).ranks() == std::vector<int>{1, 2, 1});
  CHECK(lebelt_complex(3, 2, 2).rank(0) == 0);
  const FormComplex one = lebelt_complex(1, 2, 3);
  REQUIRE(one.ranks() == std::vector<int>{3, 2});
  for (const auto& e : one.d(1).entries()) CHECK(e.value == LinearForm::variable(e.row + 1, e.col + 1));
  for (int t = 0; t <= 6; ++t)
    for (int f = 0; f <= 4; ++f)
      for (int g = 0; g <= 4; ++g) {
        const FormComplex c = lebelt_complex(t, f, g);
        for (int i = 0; i <= t; ++i) CHECK(c.rank(i) == multichoose(f, i) * oracle::binom(g, t - i));
        if (t <= 4) check_square_zero(c, f, g, 12);
      }
}

TEST_CASE("koszul and lebelt homology at full-rank maps") {
  for (int t = 1; t <= 4; ++t)
    for (int g = 1; g <= 4; ++g)
      for (int f = 0; f <= g; ++f) {
        const IntMatrix phi = random_full_rank_matrix(g, f, 5, t);
        const auto hk = homology_dims(specialize(koszul_strand(t, f, g), phi));
        const auto hl = homology_dims(specialize(lebelt_complex(t, f, g), phi));
        CHECK(hk[0] == multichoose(g - f, t));
        CHECK(hl[0] == oracle::binom(g - f, t));
        for (std::size_t n = 1; n < hk.size(); ++n) CHECK(hk[n] == 0);
        for (std::size_t n = 1; n < hl.size(); ++n) CHECK(hl[n] == 0);
      }
}

TEST_CASE("tensor products of complexes") {
  const FormComplex phi = koszul_strand(1, 1, 1);
  CHECK(tensor_complexes({phi}).ranks() == phi.ranks());
  CHECK(tensor_complexes({phi}).d(1) == phi.d(1));
  const FormComplex unit = tensor_complexes({});
  CHECK(unit.ranks() == std::vector<int>{1});
  const FormComplex with_unit = tensor_complexes({phi, unit});
  CHECK(with_unit.ranks() == phi.ranks());
  CHECK(with_unit.d(1) == phi.d(1));

  const FormComplex sq = tensor_complexes({phi, phi});
  REQUIRE(sq.ranks() == std::vector<int>{1, 2, 1});
  // degree 1 basis: (G (x) F, F (x) G); d(F (x) F) = u G (x) F - u F (x) G
  const LinearForm u = LinearForm::variable(1, 1);
  REQUIRE(sq.d(2).entries().size() == 2);
  CHECK(sq.d(2).entries()[0].value == u);
  CHECK(sq.d(2).entries()[1].value == u.scaled(-1));
  check_square_zero(sq, 1, 1, 3);

  for (int f = 1; f <= 2; ++f)
    for (int g = 1; g <= 2; ++g) {
      const FormComplex t = tensor_complexes({lebelt_complex(2, f, g), koszul_strand(2, f, g), lebelt_complex(1, f, g)});
      check_square_zero(t, f, g, 9);
    }
}

TEST_CASE("matrix json") {
  const IntSparse m = IntSparse::from_entries(2, 3, {{0, 1, 4}, {1, 2, -2}});
  const Json j = to_json(m);
  CHECK(j.dump() == R"({"rows":2,"cols":3,"coeff":"int","entries":[[0,1,4],[1,2,-2]]})");
  CHECK(to_sparse(int_matrix_from_json(j)) == m);
  const FormSparse fm = FormSparse::from_entries(1, 1, {{0, 0, LinearForm::variable(2, 1, -3)}});
  CHECK(to_json(fm).dump() == R"({"rows":1,"cols":1,"coeff":"linform","entries":[[0,0,[[2,1,-3]]]]})");
  const ModSparse mm = reduce_mod(m, 7);
  CHECK(to_json(mm)["prime"] == 7);
  // residues lift to (-p/2, p/2]: 4 mod 7 reads back as -3
  CHECK(to_sparse(int_matrix_from_json(to_json(mm))) == IntSparse::from_entries(2, 3, {{0, 1, -3}, {1, 2, -2}}));
  CHECK_THROWS_AS(int_matrix_from_json(Json::parse(R"({"rows":1})")), Error);
  CHECK_THROWS_AS(int_matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"entries":[[3,0,1]]})")), Error);
}
