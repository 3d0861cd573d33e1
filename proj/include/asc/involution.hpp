// Sign-reversing involution theta on pairs (sigma, factorization) and the
// cancellation identity equating the signed sum with the highest weight
// count.
#pragma once

#include <vector>

#include "asc/crystal.hpp"

namespace asc {

struct SignedPair {
  std::vector<int> sigma;   // permutation of {0..m-1}, sigma[i] = image of i
  Composition beta;         // sigma(mu+rho) - rho
  AffineFactorization fact; // weight beta, m factors

  int sign() const;  // +1 / -1
};

// theta(p): identity on pairs with X = union_i L_i empty; otherwise
// (s_r sigma, s~_r e~_r(fact)) for r = max{ i : max(X) in L_i }, the max of
// X taken in the order x.  min_variant picks r = min{...} instead.
SignedPair theta(const SignedPair& p, int x, bool min_variant = false);

// Enumerates all pairs (sigma, w^beta) with beta = sigma(mu+rho)-rho >= 0
// and w^beta in W_{w,beta}, for sigma in S_m.
std::vector<SignedPair> enumerate_signed_pairs(const AffinePermutation& w,
                                               const Partition& mu, int m);

struct CancellationResult {
  long long signed_sum = 0;
  long long hw_count = 0;
  bool match() const { return signed_sum == hw_count; }
};

CancellationResult verify_cancellation(const AffinePermutation& w,
                                       const Partition& mu, int x, int m);

}  // namespace asc
