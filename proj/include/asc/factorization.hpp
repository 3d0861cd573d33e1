// Cyclically decreasing elements and enumeration of affine factorizations
// W_{w,alpha}.  The enumeration is the hot kernel: the default entry points
// run the recursion tree in parallel (OpenMP) over the first peeled factor;
// *_serial variants are the reference implementations used for testing.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asc/affine_weyl.hpp"

namespace asc {

ASC_DOMAIN_ERROR(XInContent);

// Position of a residue in the order x-1 > x-2 > ... > 0 > n-1 > ... > x+1;
// larger key means larger letter.  Requires a != x.
inline int order_key(int a, int x, int n) {
  int k = (a - x - 1) % n;
  return k < 0 ? k + n : k;
}

// The unique cyclically decreasing element with the given proper content.
class CyclicFactor {
 public:
  CyclicFactor(int n, std::vector<int> content);  // content need not be sorted
  static CyclicFactor trivial(int n) { return CyclicFactor(n, {}); }

  int rank() const { return n_; }
  int length() const { return static_cast<int>(content_.size()); }
  const std::vector<int>& content() const { return content_; }  // ascending
  bool contains(int residue) const;

  std::vector<int> word(int x) const;  // decreasing w.r.t. order x
  AffinePermutation permutation() const;

  CyclicFactor with_removed(int residue) const;
  CyclicFactor with_inserted(int residue) const;

  auto operator<=>(const CyclicFactor&) const = default;

 private:
  int n_;
  std::vector<int> content_;
};

// Ordered tuple (w^l, ..., w^1) of cyclically decreasing factors, leftmost
// stored first; factor index r counts from the right (w^1 is rightmost).
class AffineFactorization {
 public:
  AffineFactorization(int n, std::vector<CyclicFactor> factors_left_first);

  int rank() const { return n_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  const std::vector<CyclicFactor>& factors() const { return factors_; }
  const CyclicFactor& factor_from_right(int r) const;  // r = 1..l

  Composition weight() const;  // alpha_r = |con(w^r)|, rightmost first
  AffinePermutation product() const;

  AffineFactorization replaced_from_right(int r, CyclicFactor f) const;

  // "(26)(310)(432)": factors left to right, letters decreasing w.r.t. x;
  // single digits juxtaposed when n <= 10, comma-separated otherwise.
  std::string to_string(int x) const;

  auto operator<=>(const AffineFactorization&) const = default;

 private:
  int n_;
  std::vector<CyclicFactor> factors_;
};

bool is_cyclically_decreasing(const std::vector<int>& word, int n);

// The unique arrangement of content in decreasing order w.r.t. x.
std::vector<int> decreasing_word(const std::vector<int>& content, int x,
                                 int n);

// All (w^l,...,w^1) with |con(w^r)| = alpha_r and w^l...w^1 = w with additive
// lengths, in canonical order: lexicographic on the sequence of sorted factor
// contents, rightmost factor most significant.
std::vector<AffineFactorization> enumerate_factorizations(
    const AffinePermutation& w, const Composition& alpha);
std::vector<AffineFactorization> enumerate_factorizations_serial(
    const AffinePermutation& w, const Composition& alpha);

long long count_factorizations(const AffinePermutation& w,
                               const Composition& alpha);
long long count_factorizations_serial(const AffinePermutation& w,
                                      const Composition& alpha);

}  // namespace asc
