#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "skw/errors.hpp"
#include "skw/partition.hpp"

using namespace skw;

namespace {

SkewShape S(const char* text) { return SkewShape::parse(text); }

std::vector<int> padded(const Partition& p, std::size_t n) {
  std::vector<int> v(n, 0);
  for (std::size_t i = 0; i < n; ++i) v[i] = p[i];
  return v;
}

}  // namespace

TEST_CASE("partition normalization and validation") {
  CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK(Partition({2, 1}) == Partition({2, 1, 0}));
  CHECK_THROWS_AS(Partition({1, 2}), InvalidShapeError);
  CHECK_THROWS_AS(Partition({2, -1}), InvalidShapeError);
  CHECK(Partition{}.weight() == 0);
}

TEST_CASE("conjugate") {
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition({4, 4, 1}).conjugate() == Partition({3, 2, 2, 2}));
  for (int w = 0; w <= 8; ++w)
    for (const auto& p : partitions_of(w)) {
      CHECK(p.conjugate().parts() == oracle::conjugate(p.parts()));
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().weight() == p.weight());
    }
}

TEST_CASE("partition enumeration counts") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int w = 0; w <= 8; ++w) CHECK(partitions_of(w).size() == counts[w]);
  CHECK(partitions_inside(Partition({2, 1})).size() == 5);
}

TEST_CASE("parse and containment") {
  const SkewShape s = S("4,3,2/3,1");
  CHECK(s.lambda() == Partition({4, 3, 2}));
  CHECK(s.mu() == Partition({3, 1}));
  CHECK(S(" 4, 4 ,1 ").mu().empty());
  CHECK(s.to_string() == "4,3,2/3,1");
  CHECK(S("3").to_string() == "3");
  CHECK_THROWS_AS(S("2,1/3"), InvalidShapeError);
  CHECK_THROWS_AS(S("1,2"), InvalidShapeError);
  CHECK_THROWS_AS(S("a,b"), InvalidShapeError);
  CHECK_THROWS_AS(S(""), InvalidShapeError);
}

TEST_CASE("skew cells") {
  const std::vector<Cell> expected{{1, 4}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  CHECK(S("4,3,2/3,1").cells() == expected);
  CHECK(S("2,1/2,1").cells().empty());
  CHECK(S("3").cells() == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}});
  for (const auto& sh : all_skew_shapes(6, true)) {
    const auto cs = sh.cells();
    const auto ref = oracle::cells(sh.lambda().parts(), sh.mu().parts());
    REQUIRE(cs.size() == ref.size());
    CHECK(static_cast<int>(cs.size()) == sh.size());
    for (std::size_t i = 0; i < cs.size(); ++i) CHECK((cs[i].row == ref[i].first && cs[i].col == ref[i].second));
  }
}

TEST_CASE("width and height") {
  CHECK(S("4,3,2/3,1").width() == 2);
  CHECK(S("4,3,2/3,1").height() == 2);
  CHECK(S("1,1,1").width() == 1);
  CHECK(S("1,1,1").height() == 3);
  CHECK(S("2,1/2,1").width() == 0);
  CHECK(S("2,1/2,1").height() == 0);
}

TEST_CASE("nu bounds") {
  const SkewShape s = S("3,2,1/2,2,1");
  CHECK(s.nu_double_prime(1) == Partition({3, 2, 1}));
  CHECK(s.nu_prime(1) == Partition({2, 2, 1}));
  for (const auto& sh : all_skew_shapes(6, true)) {
    CHECK(sh.nu_prime(0) == sh.lambda());
    CHECK(sh.nu_double_prime(0) == sh.mu());
    CHECK(sh.nu_double_prime(sh.width()) == sh.lambda());
    CHECK(sh.nu_prime(sh.height()) == sh.mu());
  }
  // The formula gives nu'((1,1,1)/(), 2) = (1): conjugate part max(0, 3 - 2).
  CHECK(S("1,1,1").nu_double_prime(2) == Partition({1, 1, 1}));
  CHECK(S("1,1,1").nu_prime(2) == Partition({1}));
}

TEST_CASE("nu bounds agree with the defining formulas and form chains") {
  for (const auto& sh : all_skew_shapes(7)) {
    const auto& lam = sh.lambda().parts();
    const auto& mu = sh.mu().parts();
    for (int n = -2; n <= sh.width() + sh.height() + 2; ++n) {
      const Partition np = sh.nu_prime(n);
      const Partition npp = sh.nu_double_prime(n);
      CHECK(padded(npp, lam.size()) == oracle::nu2(lam, mu, n));
      CHECK(np.parts() == oracle::nu1(lam, mu, n));
      CHECK(sh.lambda().contains(np));
      CHECK(np.contains(sh.mu()));
      CHECK(sh.lambda().contains(npp));
      CHECK(npp.contains(sh.mu()));
      if (n >= 1 && n <= sh.width()) CHECK(sh.nu_double_prime(n - 1).weight() < npp.weight());
      if (n >= 1 && n <= sh.height()) CHECK(sh.nu_prime(n - 1).weight() > np.weight());
    }
  }
}

TEST_CASE("k and l sequences") {
  using V = std::vector<int>;
  CHECK(S("3,2,1/2,2,1").kl_sequences() == std::pair<V, V>{V{1}, V{1}});
  CHECK(S("1,1,1").kl_sequences() == std::pair<V, V>{V{3}, V{1, 1, 1}});
  CHECK(S("3").kl_sequences() == std::pair<V, V>{V{1, 1, 1}, V{3}});
  for (const auto& sh : all_skew_shapes(7)) {
    const auto [k, l] = sh.kl_sequences();
    CHECK(static_cast<int>(k.size()) == sh.width());
    CHECK(static_cast<int>(l.size()) == sh.height());
    CHECK(std::accumulate(k.begin(), k.end(), 0) == sh.size());
    CHECK(std::accumulate(l.begin(), l.end(), 0) == sh.size());
    CHECK(std::is_sorted(k.rbegin(), k.rend()));
    CHECK(std::is_sorted(l.rbegin(), l.rend()));
    int rows_differ = 0;
    for (int i = 0; i < sh.rows(); ++i) rows_differ += sh.row_length(i) > 0;
    CHECK(k[0] == rows_differ);
    CHECK(l[0] == sh.conjugate().kl_sequences().first[0]);
    const auto [k2, l2] = sh.conjugate().kl_sequences();
    CHECK(k2 == l);
    CHECK(l2 == k);
    for (int n = 0; n <= sh.width() + 1; ++n)
      CHECK(sum_k_from(k, n + 1) == sh.lambda().weight() - sh.nu_double_prime(n).weight());
    for (int n = 0; n <= sh.height() + 1; ++n)
      CHECK(sum_l_upto(l, n) == sh.lambda().weight() - sh.nu_prime(n).weight());
  }
}

TEST_CASE("threshold examples") {
  CHECK(S("3,2,1/2,2,1").threshold(2, 2) == 1);
  CHECK(S("4,4,1").threshold(2, 4) == 0);
  CHECK(S("1,1,1").threshold(4, 2) == 1);
  CHECK_THROWS_AS(S("2/2").threshold(1, 1), EmptyShapeError);
}

TEST_CASE("threshold properties") {
  for (const auto& sh : all_skew_shapes(6)) {
    const auto& lam = sh.lambda().parts();
    const auto& mu = sh.mu().parts();
    for (int f = 0; f <= 5; ++f)
      for (int g = 0; g <= 5; ++g) {
        const int T = sh.threshold(f, g);
        CHECK(T == oracle::threshold(lam, mu, f, g));
        if (f >= 1 && g >= 1) CHECK(sh.threshold(f - 1, g - 1) == T - 1);
        CHECK(sh.width() >= g - T);
      }
    for (int g = 0; g <= 5; ++g) {
      const int T = sh.threshold(0, g);
      CHECK((T < 0 || T == g - sh.width()));
    }
    for (int f = 0; f <= 5; ++f) {
      const int T = sh.threshold(f, 0);
      CHECK((T < 0 || T == f - sh.height()));
    }
  }
}

TEST_CASE("shift detection") {
  const auto a = S("4,4,1").detect_shift();
  REQUIRE(a);
  CHECK(a->s == 0);
  CHECK(a->t == 0);
  CHECK(a->gamma == Partition({4, 4, 1}));
  const auto b = S("3,3/1,1").detect_shift();
  REQUIRE(b);
  CHECK(b->s == 0);
  CHECK(b->t == 1);
  CHECK(b->gamma == Partition({2, 2}));
  CHECK_FALSE(S("4,3,2/3,1").detect_shift());
  CHECK_THROWS_AS(S("1/1").detect_shift(), EmptyShapeError);
  const auto c = S("3,3,2/3,1,1").detect_shift();
  REQUIRE(c);
  CHECK(c->s == 1);
  CHECK(c->t == 1);
  CHECK(c->gamma == Partition({2, 1}));
}

TEST_CASE("shift data reproduces the shape") {
  for (const auto& sh : all_skew_shapes(7)) {
    const auto d = sh.detect_shift();
    // A shift is exactly a shape whose cells are a translate of a straight shape.
    const auto cs = sh.cells();
    int r0 = cs.front().row, c0 = cs.front().col;
    for (const auto& c : cs) c0 = std::min(c0, c.col);
    std::vector<int> gamma;
    bool translate = true;
    for (const auto& c : cs) {
      const int r = c.row - r0;
      if (r < 0) translate = false;
      if (r >= 0) {
        if (static_cast<int>(gamma.size()) <= r) gamma.resize(r + 1, 0);
        gamma[r]++;
      }
    }
    if (translate) {
      for (const auto& c : cs)
        if (c.col - c0 >= gamma[c.row - r0]) translate = false;
      for (std::size_t i = 0; i + 1 < gamma.size(); ++i)
        if (gamma[i] < gamma[i + 1] || gamma[i] == 0) translate = false;
    }
    CHECK_MESSAGE(d.has_value() == translate, sh.to_string());
    if (d && translate) {
      CHECK(d->s == r0 - 1);
      CHECK(d->t == c0 - 1);
      CHECK(d->gamma.parts() == gamma);
    }
  }
}

TEST_CASE("all skew shapes enumeration") {
  CHECK(all_skew_shapes(1).size() == 1);
  // (1)/(), (2)/(), (2)/(1), (1,1)/(), (1,1)/(1)
  CHECK(all_skew_shapes(2).size() == 5);
  CHECK(all_skew_shapes(2, true).size() == 9);
  for (const auto& sh : all_skew_shapes(6)) CHECK_FALSE(sh.is_empty());
}
