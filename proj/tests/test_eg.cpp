#include <doctest.h>

#include <functional>

#include "asc/coefficients.hpp"
#include "asc/crystal.hpp"
#include "asc/eg.hpp"

using namespace asc;

namespace {

AffineFactorization fact(int n, std::vector<std::vector<int>> contents) {
  std::vector<CyclicFactor> fs;
  for (auto& c : contents) fs.emplace_back(n, std::move(c));
  return AffineFactorization(n, std::move(fs));
}

}  // namespace

TEST_CASE("eg_insert basics") {
  LetterOrder ord{0, 10};  // plain integer order on 1..9
  Tableau P;
  eg_insert(P, 3, ord);
  CHECK(P.rows() == std::vector<std::vector<int>>{{3}});

  // the b = a+1 special case: inserting 2 into (2,3) bumps 3 unchanged
  Tableau Q;
  eg_insert(Q, 2, ord);
  eg_insert(Q, 3, ord);
  eg_insert(Q, 2, ord);
  CHECK(Q.rows() == std::vector<std::vector<int>>{{2, 3}, {3}});
}

TEST_CASE("eg insertion cell geometry") {
  // inserting y then x > y adds the new cell strictly east; x < y strictly
  // higher
  LetterOrder ord{0, 12};
  for (int y = 2; y <= 6; ++y) {
    for (int x = 1; x <= 9; ++x) {
      if (x == y) continue;
      Tableau P;
      auto c1 = eg_insert(P, y, ord);
      auto c2 = eg_insert(P, x, ord);
      if (x > y) {
        CHECK(c2.second > c1.second);
      } else {
        CHECK(c2.first > c1.first);
      }
    }
  }
}

TEST_CASE("eg_map worked example") {
  // (1)(2)(32) for s1 s2 s3 s2 in S_4
  AffineFactorization f = fact(4, {{1}, {2}, {3, 2}});
  EgPair pq = eg_map(f, 0);
  CHECK(pq.P.rows() == std::vector<std::vector<int>>{{1, 3}, {2}, {3}});
  CHECK(pq.Q.rows() == std::vector<std::vector<int>>{{1, 1}, {2}, {3}});
  CHECK(pq.P.to_string() == "1 3/2/3");
  CHECK(column_word_of_transpose(pq.P) == std::vector<int>{3, 1, 2, 3});
  CHECK(AffinePermutation::from_reduced_word({3, 1, 2, 3}, 4) == f.product());

  EgPair empty = eg_map(AffineFactorization(4, {}), 0);
  CHECK(empty.P.empty());
  CHECK(empty.Q.empty());
}

TEST_CASE("eg_map properties across a crystal") {
  AffinePermutation w = AffinePermutation::from_reduced_word({3, 4, 1, 2}, 5);
  CrystalGraph g = build_crystal(w, 3);
  LetterOrder ord{0, 5};
  for (const AffineFactorization& f : g.vertices) {
    EgPair pq = eg_map(f, 0);
    CHECK(is_increasing_tableau(pq.P, ord));
    CHECK(is_semistandard(pq.Q));
    CHECK(pq.P.shape() == pq.Q.shape());
    // Q weight = factorization weight
    CHECK(pq.Q.weight(3) == f.weight());
    // column word of P^t is reduced for w
    std::vector<int> cw = column_word_of_transpose(pq.P);
    CHECK(static_cast<long long>(cw.size()) == w.length());
    CHECK(AffinePermutation::from_reduced_word(cw, 5) == w);
    // round trip
    AffineFactorization back = eg_unmap(pq, 0, 5, f.num_factors());
    CHECK(back == f);
  }
}

TEST_CASE("eg intertwines with the crystal operators") {
  for (auto word : std::vector<std::vector<int>>{
           {3, 4, 1, 2}, {1, 2, 1}, {2, 1, 3}, {1, 2, 3, 2, 1}}) {
    AffinePermutation w = AffinePermutation::from_reduced_word(word, 5);
    CrystalGraph g = build_crystal(w, 3);
    for (const AffineFactorization& f : g.vertices) {
      EgPair pq = eg_map(f, 0);
      SkewTableau q{Partition{}, pq.Q};
      for (int r = 1; r < 3; ++r) {
        auto ff = crystal_op(OpKind::F, r, f, 0);
        auto fq = tableau_f(q, r);
        CHECK(ff.has_value() == fq.has_value());
        if (ff) CHECK(eg_map(*ff, 0).Q == fq->rows);
        auto ee = crystal_op(OpKind::E, r, f, 0);
        auto eq = tableau_e(q, r);
        CHECK(ee.has_value() == eq.has_value());
        if (ee) CHECK(eg_map(*ee, 0).Q == eq->rows);
      }
    }
  }
}

TEST_CASE("affine eg uses the rotated order") {
  AffinePermutation sigma =
      AffinePermutation::from_reduced_word({6, 2, 3, 4, 3, 1, 2, 0}, 7);
  LetterOrder ord{5, 7};
  for (const AffineFactorization& f :
       enumerate_factorizations(sigma, {3, 3, 2})) {
    EgPair pq = eg_map(f, 5);
    CHECK(is_increasing_tableau(pq.P, ord));
    CHECK(is_semistandard(pq.Q));
    CHECK(eg_unmap(pq, 5, 7, 3) == f);
    std::vector<int> cw = column_word_of_transpose(pq.P);
    CHECK(AffinePermutation::from_reduced_word(cw, 7) == sigma);
  }
  CHECK_THROWS_AS(
      eg_map(fact(4, {{0}, {1}}), 0), NotInSxHat);
}

TEST_CASE("highest weight factorization maps to yamanouchi tableau") {
  AffinePermutation w = AffinePermutation::from_reduced_word({3, 4, 1, 2}, 5);
  for (const Partition& lam :
       std::vector<Partition>{{2, 2}, {2, 1, 1}}) {
    for (const AffineFactorization& f :
         highest_weight_factorizations(w, lam, 0, 3)) {
      EgPair pq = eg_map(f, 0);
      SkewTableau q{Partition{}, pq.Q};
      CHECK(tableau_is_highest_weight(q, 3));
      CHECK(pq.Q.shape() == lam);
    }
  }
}

TEST_CASE("skew tableau crystal matches worked bracketing example") {
  // nu/lambda = (7,5,1)/(2,1), rows bottom-first
  SkewTableau t{Partition{2, 1},
                Tableau({{1, 1, 2, 3, 3}, {1, 2, 2, 3}, {3}})};
  auto e = tableau_e(t, 2);
  REQUIRE(e.has_value());
  CHECK(e->rows.rows() ==
        std::vector<std::vector<int>>{{1, 1, 2, 2, 3}, {1, 2, 2, 3}, {3}});
  auto back = tableau_f(*e, 2);
  REQUIRE(back.has_value());
  CHECK(back->rows == t.rows);
}

TEST_CASE("skew crystal of 321-avoiding element matches factorization crystal") {
  // D(w) = (2,1)/(0): w from the cell-label map with l(nu) = 2
  // cells (bottom row) (1,1),(1,2) labels 2,3; row 2 cell (2,1) label 1
  Partition outer{2, 1}, inner{};
  int letters = 3;
  auto tabs = all_skew_tableaux(outer, inner, letters);

  // map each tableau to a factorization over labels j - i + l(nu)
  int lnu = outer.num_parts();
  int n = outer.part(1) + lnu;  // labels live in 1..n-1
  auto to_fact = [&](const SkewTableau& t) {
    std::vector<std::vector<int>> contents(letters);
    for (int r = 0; r < t.rows.num_rows(); ++r)
      for (int c = 0; c < static_cast<int>(t.rows.rows()[r].size()); ++c) {
        int label = (t.inner.part(r + 1) + c + 1) - (r + 1) + lnu;
        contents[t.rows.rows()[r][c] - 1].push_back(label);
      }
    std::vector<CyclicFactor> fs;
    for (int i = letters - 1; i >= 0; --i)
      fs.emplace_back(n, contents[i]);
    return AffineFactorization(n, std::move(fs));
  };

  REQUIRE(!tabs.empty());
  AffinePermutation w = to_fact(tabs[0]).product();
  for (const SkewTableau& t : tabs) {
    AffineFactorization f = to_fact(t);
    CHECK(f.product() == w);
    for (int r = 1; r < letters; ++r) {
      auto ft = tableau_f(t, r);
      auto ff = crystal_op(OpKind::F, r, f, 0);
      CHECK(ft.has_value() == ff.has_value());
      if (ft) CHECK(to_fact(*ft) == *ff);
    }
  }
}

namespace {

// Column-reading word of a straight-shape tableau: columns left to right,
// each read top to bottom.
std::vector<int> column_word(const Tableau& t) {
  std::vector<int> out;
  if (t.empty()) return out;
  int ncols = static_cast<int>(t.rows()[0].size());
  for (int c = 0; c < ncols; ++c)
    for (int r = t.num_rows() - 1; r >= 0; --r)
      if (c < static_cast<int>(t.rows()[r].size()))
        out.push_back(t.rows()[r][c]);
  return out;
}

}  // namespace

TEST_CASE("highest weight count matches reduced-word tableau count") {
  // a_{w,lambda} equals the number of semistandard tableaux of shape
  // lambda' (letters 1..n-1) whose column-reading word is reduced for w
  for (auto [word, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{3, 4, 1, 2}, 5}, {{1, 2, 1, 3, 2, 1}, 4}, {{2, 1, 3, 2}, 5}}) {
    AffinePermutation w = AffinePermutation::from_reduced_word(word, n);
    int d = static_cast<int>(w.length());
    for (const Partition& lam : partitions_of(d)) {
      long long hw = static_cast<long long>(
          highest_weight_factorizations(w, lam, 0).size());
      long long good = 0;
      for (const SkewTableau& t :
           all_skew_tableaux(lam.conjugate(), Partition{}, n - 1)) {
        std::vector<int> cw = column_word(t.rows);
        if (static_cast<long long>(cw.size()) == w.length() &&
            AffinePermutation::from_reduced_word(cw, n) == w)
          ++good;
      }
      CHECK(hw == good);
    }
  }
}
