#include <doctest.h>

#include <random>

#include "asc/affine_weyl.hpp"

using namespace asc;

namespace {

AffinePermutation random_element(int n, int len, std::mt19937& rng) {
  AffinePermutation w = AffinePermutation::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  int steps = 0;
  while (steps < len) {
    AffinePermutation z = w.times_simple(pick(rng));
    if (z.length() > w.length()) {
      w = z;
      ++steps;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("from_window validates and computes shift") {
  AffinePermutation w = AffinePermutation::from_window({-2, 0, 1, 4, 12});
  CHECK(w.rank() == 5);
  CHECK(w.shift() == 0);
  CHECK(AffinePermutation::from_window({1, 2, 3, 4, 5}).is_identity());
  CHECK_THROWS_AS(AffinePermutation::from_window({1, 1, 3, 4, 6}),
                  NotBijection);
}

TEST_CASE("from_reduced_word") {
  AffinePermutation w =
      AffinePermutation::from_reduced_word({3, 0, 2, 3}, 4);
  CHECK(w.window() == Window{-1, 4, 5, 2});
  CHECK(AffinePermutation::from_reduced_word({}, 5).is_identity());
  CHECK(AffinePermutation::from_reduced_word({0, 0}, 3).is_identity());
  CHECK_THROWS_AS(AffinePermutation::from_reduced_word({4}, 4), BadResidue);
}

TEST_CASE("left inversion vector and length") {
  AffinePermutation w = AffinePermutation::from_window({-2, 0, 1, 4, 12});
  CHECK(w.left_inversion_vector() == Composition{3, 2, 2, 1, 0});
  CHECK(w.length() == 8);
  CHECK(AffinePermutation::identity(4).length() == 0);
  CHECK(AffinePermutation::simple(0, 3).length() == 1);
}

TEST_CASE("multiply and inverse") {
  // (R_4 v) w^{-1} for the S_7 Gromov-Witten example
  AffinePermutation v = AffinePermutation::from_window({4, 2, 5, 7, 1, 3, 6});
  AffinePermutation w = AffinePermutation::from_window({3, 1, 5, 4, 2, 6, 7});
  AffinePermutation sigma = apply_R(4, 1, v) * w.inverse();
  CHECK(sigma.window() == Window{-1, 5, 1, 4, 2, 7, 10});
  CHECK(sigma ==
        AffinePermutation::from_reduced_word({6, 2, 3, 4, 3, 1, 2, 0}, 7));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    AffinePermutation a = random_element(4, 5, rng);
    CHECK((a * a.inverse()).is_identity());
    CHECK((AffinePermutation::identity(4) * a) == a);
  }
  CHECK_THROWS_AS(
      AffinePermutation::identity(3) * AffinePermutation::identity(4),
      RankMismatch);
}

TEST_CASE("reduced word, content, missing residues") {
  AffinePermutation sigma =
      AffinePermutation::from_reduced_word({6, 2, 3, 4, 3, 1, 2, 0}, 7);
  CHECK(sigma.content() == std::set<int>{0, 1, 2, 3, 4, 6});
  CHECK(sigma.missing_residues() == std::set<int>{5});

  AffinePermutation w = AffinePermutation::from_reduced_word({3, 4, 1, 2}, 5);
  CHECK(w.missing_residues() == std::set<int>{0});

  CHECK(AffinePermutation::identity(5).reduced_word().empty());
  CHECK(AffinePermutation::identity(5).missing_residues().size() == 5);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    AffinePermutation a = random_element(5, 6, rng);
    std::vector<int> word = a.reduced_word();
    CHECK(static_cast<long long>(word.size()) == a.length());
    CHECK(AffinePermutation::from_reduced_word(word, 5) == a);
  }
}

TEST_CASE("length changes by one under right multiplication") {
  std::mt19937 rng(3);
  for (int n : {3, 4, 5}) {
    for (int trial = 0; trial < 8; ++trial) {
      AffinePermutation w = random_element(n, 5, rng);
      for (int i = 0; i < n; ++i) {
        long long diff = w.times_simple(i).length() - w.length();
        CHECK(std::abs(diff) == 1);
        CHECK((diff < 0) == w.has_right_descent(i));
      }
    }
  }
}

TEST_CASE("coxeter relations as window identities") {
  for (int n = 3; n <= 8; ++n) {
    for (int i = 0; i < n; ++i) {
      AffinePermutation si = AffinePermutation::simple(i, n);
      CHECK((si * si).is_identity());
      for (int j = 0; j < n; ++j) {
        AffinePermutation sj = AffinePermutation::simple(j, n);
        int dist = std::min((i - j + n) % n, (j - i + n) % n);
        if (dist > 1) CHECK(si * sj == sj * si);
        if (dist == 1 && n > 2)
          CHECK(si * sj * si == sj * si * sj);
      }
    }
  }
}

TEST_CASE("lc and w_lambda invert each other") {
  AffinePermutation w = AffinePermutation::from_window({-2, 0, 1, 4, 12});
  CHECK(lc(w) == Partition{4, 3, 1});
  CHECK(w_lambda(Partition{4, 3, 1}, 5) == w);
  CHECK(lc(AffinePermutation::identity(5)).empty());
  CHECK_THROWS_AS(w_lambda(Partition{5, 1}, 5), PartNotLessThanN);
  CHECK_THROWS_AS(lc(AffinePermutation::from_window({2, 1, 3, 4})),
                  NotGrassmannian);
}

TEST_CASE("R_i operators") {
  AffinePermutation v = AffinePermutation::from_window({4, 2, 5, 7, 1, 3, 6});
  CHECK(apply_R(4, 1, v).window() == Window{1, -1, 2, 4, 5, 7, 10});
  for (int n : {4, 5}) {
    for (int i = 1; i < n; ++i) {
      // R_i(id) = w_{(i^{n-i})}
      std::vector<int> rect(n - i, i);
      CHECK(apply_R(i, 1, AffinePermutation::identity(n)) ==
            w_lambda(Partition(rect), n));
      // inverse exponent
      AffinePermutation w = AffinePermutation::from_reduced_word({1, 0}, n);
      CHECK(apply_R(i, -1, apply_R(i, 1, w)) == w);
      // R_i pairwise commute
      for (int j = 1; j < n; ++j)
        CHECK(apply_R(i, 1, apply_R(j, 1, w)) ==
              apply_R(j, 1, apply_R(i, 1, w)));
    }
  }
  CHECK_THROWS_AS(apply_R(0, 1, v), IndexOutOfRange);
}

TEST_CASE("af and af_d") {
  CHECK(af(AffinePermutation::identity(4)).window() == Window{1, 6, 11, 16});
  CHECK(af(AffinePermutation::from_window({1, 4, 2, 3})).window() ==
        Window{1, 8, 10, 15});
  // d = 0 turns every R-exponent into 1
  AffinePermutation v = AffinePermutation::from_window({2, 1, 3, 4});
  AffinePermutation expect = af(v);
  for (int i = 1; i < 4; ++i) expect = apply_R(i, 1, expect);
  CHECK(af_d(v, {0, 0, 0}) == expect);
  CHECK_THROWS_AS(af(AffinePermutation::from_window({0, 2, 4})),
                  NotFinitePermutation);
}

TEST_CASE("kappa") {
  AffinePermutation w = AffinePermutation::from_reduced_word({3, 0, 2, 3}, 4);
  SkewShape s = kappa(w);
  CHECK(s.outer == Partition{3, 2, 2, 1, 1, 1, 1, 1});
  CHECK(s.inner == Partition{3, 1, 1, 1, 1, 1});
  CHECK(s.size() == w.length());

  SkewShape sid = kappa(AffinePermutation::identity(4));
  CHECK(sid.outer == sid.inner);

  // length identity and injectivity on a sample
  std::mt19937 rng(23);
  std::set<std::pair<Partition, Partition>> seen;
  for (int trial = 0; trial < 40; ++trial) {
    AffinePermutation a = random_element(4, trial % 6, rng);
    SkewShape k = kappa(a);
    CHECK(k.size() == a.length());
    seen.insert({k.outer, k.inner});
  }
}

TEST_CASE("grassmannian_shape and rect_complement") {
  AffinePermutation u =
      AffinePermutation::from_window({1, 2, 4, 7, 3, 5, 6});
  CHECK(grassmannian_shape(u, 4) == Partition{3, 1});
  CHECK(rect_complement(Partition{3, 1}, 4, 3) == Partition{3, 3, 2});
  CHECK(Partition{3, 3, 2}.conjugate() == Partition{3, 3, 2});
  CHECK_THROWS_AS(
      grassmannian_shape(AffinePermutation::from_window({2, 1, 4, 3}), 1),
      NotGrassmannianPermutation);
  CHECK_THROWS_AS(rect_complement(Partition{5}, 2, 3), ShapeTooBig);
}

TEST_CASE("partition basics") {
  Partition p{4, 3, 1};
  CHECK(p.conjugate().conjugate() == p);
  CHECK(p.size() == 8);
  CHECK(Partition{}.conjugate().empty());
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), DomainError);
  CHECK(parse_partition("4,3,1") == p);
  CHECK(parse_window("[-2,0,1,4,12]") == Window{-2, 0, 1, 4, 12});
  CHECK(parse_window("1,2,3") == Window{1, 2, 3});
}

TEST_CASE("extended elements round trip through tau decomposition") {
  // tau^r v windows: add r to every entry
  AffinePermutation v = AffinePermutation::from_reduced_word({2, 0}, 4);
  Window win = v.window();
  for (auto& e : win) e += 3;
  AffinePermutation w = AffinePermutation::from_window(win);
  CHECK(w.shift() == 3);
  CHECK(w.length() == v.length());
  CHECK(w.reduced_word() == v.reduced_word());
}
