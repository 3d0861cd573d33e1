// Edelman-Greene insertion on reduced words and its extension to affine
// factorizations, plus the classical crystal on (skew) semistandard tableaux
// used as the comparison oracle for the isomorphism tests.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asc/factorization.hpp"

namespace asc {

ASC_DOMAIN_ERROR(NotInSxHat);

// Rows stored bottom-first (French convention).
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows)
      : rows_(std::move(rows)) {}

  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<std::vector<int>>& rows() { return rows_; }
  bool empty() const { return rows_.empty(); }
  Partition shape() const;
  Composition weight(int num_letters) const;  // letter counts, letters >= 1

  std::string to_string() const;  // "1 3/2/3", bottom row first

  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Letters are compared through the order x-1 > ... > 0 > n-1 > ... > x+1;
// plain integer order is the x = 0 case on letters 1..n-1.
struct LetterOrder {
  int x, n;
  int key(int a) const { return order_key(a, x, n); }
  bool less(int a, int b) const { return key(a) < key(b); }
  bool is_successor(int a, int b) const {  // b = a+1 mod n
    return (a + 1) % n == b;
  }
};

// EG-inserts letter a into P bottom row up; returns the added cell
// (row, col), 0-based.
std::pair<int, int> eg_insert(Tableau& P, int a, const LetterOrder& ord);

struct EgPair {
  Tableau P;  // increasing tableau of raw residue letters
  Tableau Q;  // semistandard recording tableau over 1..l
};

// Inserts factors right to left, each factor's letters smallest to largest
// w.r.t. the order x; Q records factor indices.
EgPair eg_map(const AffineFactorization& fact, int x);

// Inverse of eg_map by reverse bumping.  num_factors pads trivial leftmost
// factors (they leave no trace in Q); -1 uses the largest letter of Q.
AffineFactorization eg_unmap(const EgPair& pq, int x, int n,
                             int num_factors = -1);

// Column-reading word of the transpose of P (raw letters); a reduced word of
// the factorized element.
std::vector<int> column_word_of_transpose(const Tableau& P);

bool is_increasing_tableau(const Tableau& P, const LetterOrder& ord);
bool is_semistandard(const Tableau& Q);

// Crystal on skew semistandard tableaux over 1..num_letters: bracket by
// scanning columns right to left, bottom to top.  Straight shapes use an
// empty inner partition.
struct SkewTableau {
  Partition inner;
  Tableau rows;  // row i holds the cells right of inner.part(i+1)

  Partition outer() const;
  Composition weight(int num_letters) const {
    return rows.weight(num_letters);
  }
  auto operator<=>(const SkewTableau&) const = default;
};

std::optional<SkewTableau> tableau_f(const SkewTableau& t, int i);
std::optional<SkewTableau> tableau_e(const SkewTableau& t, int i);
bool tableau_is_highest_weight(const SkewTableau& t, int num_letters);

std::vector<SkewTableau> all_skew_tableaux(const Partition& outer,
                                           const Partition& inner,
                                           int num_letters);

}  // namespace asc
