// Arithmetic of the (extended) affine symmetric group in window notation:
// windows, reduced words, inversion vectors, Grassmannian structure, and the
// translation/embedding maps (LC, R_i, af, af_d, kappa).
#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace asc {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ASC_DOMAIN_ERROR(Name)                  \
  struct Name : DomainError {                   \
    using DomainError::DomainError;             \
    Name() : DomainError(#Name) {}              \
  }

ASC_DOMAIN_ERROR(NotBijection);
ASC_DOMAIN_ERROR(BadResidue);
ASC_DOMAIN_ERROR(RankMismatch);
ASC_DOMAIN_ERROR(NotGrassmannian);
ASC_DOMAIN_ERROR(PartNotLessThanN);
ASC_DOMAIN_ERROR(IndexOutOfRange);
ASC_DOMAIN_ERROR(NotFinitePermutation);
ASC_DOMAIN_ERROR(NotGrassmannianPermutation);
ASC_DOMAIN_ERROR(ShapeTooBig);

using Window = std::vector<long long>;
using Composition = std::vector<int>;

inline int comp_sum(const Composition& a) {
  int s = 0;
  for (int p : a) s += p;
  return s;
}

// Partition: weakly decreasing positive parts, trailing zeros never stored.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Sorts a composition decreasingly and drops zeros.
  static Partition from_composition(const Composition& alpha);

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int size() const;  // |lambda|
  bool empty() const { return parts_.empty(); }
  int part(int i) const {  // 1-based, zero beyond the last part
    return (i >= 1 && i <= num_parts()) ? parts_[i - 1] : 0;
  }

  Partition conjugate() const;
  bool contains(const Partition& inner) const;  // cellwise
  bool fits_in_rectangle(int rows, int cols) const;

  std::string to_string() const;  // "4,3,1"; empty partition -> ""

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct SkewShape {
  Partition outer, inner;
  SkewShape(Partition outer_, Partition inner_);
  int size() const { return outer.size() - inner.size(); }
};

// Element of the extended affine symmetric group S~_{n,r}: a bijection
// w: Z -> Z with w(i+n) = w(i)+n, stored by its window [w(1),...,w(n)].
// Proper elements of S~_n are exactly those with shift() == 0.
class AffinePermutation {
 public:
  static AffinePermutation from_window(Window window);
  static AffinePermutation from_reduced_word(const std::vector<int>& word,
                                             int n);
  static AffinePermutation identity(int n);
  static AffinePermutation simple(int i, int n);  // s_i, 0 <= i < n

  int rank() const { return n_; }
  const Window& window() const { return window_; }
  long long operator()(long long i) const;  // evaluate at any integer
  long long shift() const { return shift_; }

  AffinePermutation operator*(const AffinePermutation& other) const;
  AffinePermutation inverse() const;
  bool operator==(const AffinePermutation&) const = default;
  auto operator<=>(const AffinePermutation&) const = default;

  bool is_identity() const;
  bool is_finite() const;  // shift 0 and window a permutation of 1..n
  bool is_affine_grassmannian() const;  // strictly increasing window

  Composition left_inversion_vector() const;
  long long length() const;

  bool has_left_descent(int i) const;   // l(s_i w) < l(w)
  bool has_right_descent(int i) const;  // l(w s_i) < l(w)
  AffinePermutation times_simple(int i) const;  // w * s_i

  // Canonical reduced word: repeatedly strip the smallest-index left descent.
  // For extended elements the word of the proper part tau^{-r} w is returned.
  std::vector<int> reduced_word() const;
  std::set<int> content() const;
  std::set<int> missing_residues() const;

  std::string to_string() const;  // "[-2,0,1,4,12]"

 private:
  AffinePermutation(int n, Window w, long long shift)
      : n_(n), window_(std::move(w)), shift_(shift) {}
  int n_ = 0;
  Window window_;
  long long shift_ = 0;
};

// LC: conjugated left inversion vector of an (extended) affine Grassmannian
// element; lc and w_lambda are mutually inverse on shift-0 elements.
Partition lc(const AffinePermutation& w);
AffinePermutation w_lambda(const Partition& lambda, int n);

// k-rectangle translation R_i (1 <= i < n), iterated |exponent| times;
// negative exponents apply the inverse window map.
AffinePermutation apply_R(int i, long long exponent,
                          const AffinePermutation& w);

// Embedding S_n -> S~_{n,binom(n,2)} and its d-twisted variant.
AffinePermutation af(const AffinePermutation& u);
AffinePermutation af_d(const AffinePermutation& v,
                       const std::vector<long long>& d);

// w = v~ u with u in S_n sorting the window; returns nu/lambda where
// nu = lc(v~ af(id)) and lambda = lc(af(u^{-1})).  |nu| - |lambda| = l(w).
SkewShape kappa(const AffinePermutation& w);

// Shape of a Grassmannian permutation with unique descent at r, and the
// complement of a partition in an r x c rectangle.
Partition grassmannian_shape(const AffinePermutation& u, int r);
Partition rect_complement(const Partition& lambda, int rows, int cols);

// Text formats: windows "[-2,0,1,4,12]" (brackets optional), partitions as
// comma-separated parts.
Window parse_window(const std::string& text);
Partition parse_partition(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace asc
