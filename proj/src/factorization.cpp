#include "asc/factorization.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace asc {

namespace {

int find_missing(const std::vector<int>& content, int n) {
  std::vector<bool> present(n, false);
  for (int c : content) present[c] = true;
  for (int x = 0; x < n; ++x)
    if (!present[x]) return x;
  return -1;
}

// Lexicographic successor of an ascending k-subset of {0..n-1}.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// CyclicFactor
// ---------------------------------------------------------------------------

CyclicFactor::CyclicFactor(int n, std::vector<int> content)
    : n_(n), content_(std::move(content)) {
  std::sort(content_.begin(), content_.end());
  for (size_t i = 0; i < content_.size(); ++i) {
    if (content_[i] < 0 || content_[i] >= n_) throw BadResidue();
    if (i > 0 && content_[i] == content_[i - 1])
      throw DomainError("CyclicFactor: repeated residue");
  }
  if (static_cast<int>(content_.size()) >= n_)
    throw DomainError("CyclicFactor: content must be a proper subset");
}

bool CyclicFactor::contains(int residue) const {
  return std::binary_search(content_.begin(), content_.end(), residue);
}

std::vector<int> CyclicFactor::word(int x) const {
  if (contains(x)) throw XInContent();
  return decreasing_word(content_, x, n_);
}

AffinePermutation CyclicFactor::permutation() const {
  int x = find_missing(content_, n_);
  return AffinePermutation::from_reduced_word(word(x), n_);
}

CyclicFactor CyclicFactor::with_removed(int residue) const {
  std::vector<int> c;
  c.reserve(content_.size());
  for (int v : content_)
    if (v != residue) c.push_back(v);
  return CyclicFactor(n_, std::move(c));
}

CyclicFactor CyclicFactor::with_inserted(int residue) const {
  std::vector<int> c = content_;
  c.push_back(residue);
  return CyclicFactor(n_, std::move(c));
}

// ---------------------------------------------------------------------------
// AffineFactorization
// ---------------------------------------------------------------------------

AffineFactorization::AffineFactorization(
    int n, std::vector<CyclicFactor> factors_left_first)
    : n_(n), factors_(std::move(factors_left_first)) {
  for (const CyclicFactor& f : factors_)
    if (f.rank() != n_) throw RankMismatch();
}

const CyclicFactor& AffineFactorization::factor_from_right(int r) const {
  return factors_.at(factors_.size() - r);
}

Composition AffineFactorization::weight() const {
  Composition alpha(factors_.size());
  for (int r = 1; r <= num_factors(); ++r)
    alpha[r - 1] = factor_from_right(r).length();
  return alpha;
}

AffinePermutation AffineFactorization::product() const {
  AffinePermutation w = AffinePermutation::identity(n_);
  for (const CyclicFactor& f : factors_) w = w * f.permutation();
  return w;
}

AffineFactorization AffineFactorization::replaced_from_right(
    int r, CyclicFactor f) const {
  std::vector<CyclicFactor> fs = factors_;
  fs.at(fs.size() - r) = std::move(f);
  return AffineFactorization(n_, std::move(fs));
}

std::string AffineFactorization::to_string(int x) const {
  std::string s;
  for (const CyclicFactor& f : factors_) {
    s += '(';
    std::vector<int> w = decreasing_word(f.content(), x, n_);
    for (size_t i = 0; i < w.size(); ++i) {
      if (i && n_ > 10) s += ',';
      s += std::to_string(w[i]);
    }
    s += ')';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

bool is_cyclically_decreasing(const std::vector<int>& word, int n) {
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < word.size(); ++i) {
    int a = word[i];
    if (a < 0 || a >= n) throw BadResidue();
    if (pos[a] >= 0) return false;  // repeat
    pos[a] = static_cast<int>(i);
  }
  if (static_cast<int>(word.size()) >= n) return false;  // full content
  for (int j = 0; j < n; ++j) {
    int jm1 = (j + n - 1) % n;
    if (pos[j] >= 0 && pos[jm1] >= 0 && pos[jm1] < pos[j]) return false;
  }
  return true;
}

std::vector<int> decreasing_word(const std::vector<int>& content, int x,
                                 int n) {
  for (int c : content)
    if (c == x) throw XInContent();
  std::vector<int> w = content;
  std::sort(w.begin(), w.end(), [x, n](int a, int b) {
    return order_key(a, x, n) > order_key(b, x, n);
  });
  return w;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

// Peels the rightmost factor; emits factors rightmost-first into `stack`.
void enumerate_rec(const AffinePermutation& w, const Composition& alpha,
                   size_t level, std::vector<CyclicFactor>& stack,
                   std::vector<AffineFactorization>& out) {
  int n = w.rank();
  if (level == alpha.size()) {
    if (w.is_identity()) {
      std::vector<CyclicFactor> fs(stack.rbegin(), stack.rend());
      out.emplace_back(n, std::move(fs));
    }
    return;
  }
  int k = alpha[level];
  if (k < 0 || k >= n) return;
  long long lw = w.length();
  if (k > lw) return;
  if (k == 0) {
    stack.push_back(CyclicFactor::trivial(n));
    enumerate_rec(w, alpha, level + 1, stack, out);
    stack.pop_back();
    return;
  }
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  do {
    CyclicFactor f(n, subset);
    AffinePermutation rest = w * f.permutation().inverse();
    if (rest.length() == lw - k) {
      stack.push_back(f);
      enumerate_rec(rest, alpha, level + 1, stack, out);
      stack.pop_back();
    }
  } while (next_combination(subset, n));
}

}  // namespace

std::vector<AffineFactorization> enumerate_factorizations_serial(
    const AffinePermutation& w, const Composition& alpha) {
  std::vector<AffineFactorization> out;
  if (comp_sum(alpha) != w.length()) return out;
  std::vector<CyclicFactor> stack;
  enumerate_rec(w, alpha, 0, stack, out);
  return out;
}

std::vector<AffineFactorization> enumerate_factorizations(
    const AffinePermutation& w, const Composition& alpha) {
  std::vector<AffineFactorization> out;
  if (comp_sum(alpha) != w.length()) return out;
  int n = w.rank();
  if (alpha.empty()) return enumerate_factorizations_serial(w, alpha);
  int k = alpha[0];
  if (k < 0 || k >= n) return out;
  long long lw = w.length();
  if (k > lw) return out;
  if (k == 0) return enumerate_factorizations_serial(w, alpha);

  // Collect the first-level candidates, then expand their subtrees in
  // parallel; concatenating in candidate order keeps the canonical order.
  std::vector<std::vector<int>> firsts;
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  do {
    firsts.push_back(subset);
  } while (next_combination(subset, n));

  std::vector<std::vector<AffineFactorization>> chunks(firsts.size());
  Composition rest_alpha(alpha.begin() + 1, alpha.end());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (size_t i = 0; i < firsts.size(); ++i) {
    CyclicFactor f(n, firsts[i]);
    AffinePermutation rest = w * f.permutation().inverse();
    if (rest.length() != lw - k) continue;
    std::vector<CyclicFactor> stack{f};
    enumerate_rec(rest, rest_alpha, 0, stack, chunks[i]);
  }
  size_t total = 0;
  for (const auto& c : chunks) total += c.size();
  out.reserve(total);
  for (auto& c : chunks)
    out.insert(out.end(), std::make_move_iterator(c.begin()),
               std::make_move_iterator(c.end()));
  return out;
}

long long count_factorizations_serial(const AffinePermutation& w,
                                      const Composition& alpha) {
  return static_cast<long long>(enumerate_factorizations_serial(w, alpha).size());
}

long long count_factorizations(const AffinePermutation& w,
                               const Composition& alpha) {
  return static_cast<long long>(enumerate_factorizations(w, alpha).size());
}

}  // namespace asc
