#include "asc/involution.hpp"

#include <algorithm>
#include <numeric>

namespace asc {

int SignedPair::sign() const {
  int m = static_cast<int>(sigma.size());
  int s = 1;
  std::vector<bool> seen(m, false);
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int j = i, c = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = sigma[j];
      ++c;
    }
    if (c % 2 == 0) s = -s;
  }
  return s;
}

SignedPair theta(const SignedPair& p, int x, bool min_variant) {
  int ell = p.fact.num_factors();
  int n = p.fact.rank();
  bool two_factor = (ell == 2) && p.fact.product().missing_residues().empty();

  auto left_set = [&](int r) {
    if (two_factor) {
      // reduced L_1 of the per-vertex context
      const CyclicFactor& u = p.fact.factor_from_right(2);
      const CyclicFactor& v = p.fact.factor_from_right(1);
      OpContext ctx = two_factor_context(u, v);
      std::vector<int> cu, cv;
      for (int c : u.content())
        if (!(ctx.has_frozen && c == ctx.frozen_u)) cu.push_back(c);
      for (int c : v.content())
        if (!(ctx.has_frozen && c == ctx.frozen_v)) cv.push_back(c);
      PairingResult pr = pair_factors(CyclicFactor(n, cu),
                                      CyclicFactor(n, cv), ctx.x);
      return std::make_pair(pr.left_unpaired, ctx.x);
    }
    PairingResult pr = pair_factors(p.fact.factor_from_right(r + 1),
                                    p.fact.factor_from_right(r), x);
    return std::make_pair(pr.left_unpaired, x);
  };

  // X = union of the L_r; track which r contain the order-x maximum.
  int best_key = -1, best_letter = -1;
  std::vector<int> holders;
  for (int r = 1; r < ell; ++r) {
    auto [L, ctx_x] = left_set(r);
    for (int b : L) {
      int k = order_key(b, ctx_x, n);
      if (k > best_key) {
        best_key = k;
        best_letter = b;
        holders.assign(1, r);
      } else if (k == best_key && b == best_letter) {
        holders.push_back(r);
      }
    }
  }
  if (holders.empty()) return p;  // fixed point

  int r = min_variant ? *std::min_element(holders.begin(), holders.end())
                      : *std::max_element(holders.begin(), holders.end());

  std::optional<AffineFactorization> img;
  if (two_factor) {
    img = crystal_op_two_factor(OpKind::E, p.fact);
    img = crystal_op_two_factor(OpKind::S, *img);
  } else {
    img = crystal_op(OpKind::E, r, p.fact, x);
    img = crystal_op(OpKind::S, r, *img, x);
  }

  SignedPair out{p.sigma, img->weight(), *img};
  // s_r sigma swaps the values r, r+1 (0-based r-1, r) wherever they occur.
  for (int& v : out.sigma) {
    if (v == r - 1)
      v = r;
    else if (v == r)
      v = r - 1;
  }
  return out;
}

std::vector<SignedPair> enumerate_signed_pairs(const AffinePermutation& w,
                                               const Partition& mu, int m) {
  if (m < mu.num_parts()) throw DomainError("m smaller than parts of mu");
  std::vector<SignedPair> out;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // beta_j = (mu+rho)_{sigma^{-1}(j)} - rho_j with rho_i = m-i (1-based)
    std::vector<int> sigma_inv(m);
    for (int i = 0; i < m; ++i) sigma_inv[perm[i]] = i;
    Composition beta(m);
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      int i = sigma_inv[j];
      int b = mu.part(i + 1) + (m - 1 - i) - (m - 1 - j);
      if (b < 0) ok = false;
      beta[j] = b;
    }
    if (!ok) continue;
    // factorization weight is read rightmost-first: alpha_r = beta_r
    for (AffineFactorization& f : enumerate_factorizations(w, beta))
      out.push_back(SignedPair{perm, beta, std::move(f)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CancellationResult verify_cancellation(const AffinePermutation& w,
                                       const Partition& mu, int x, int m) {
  CancellationResult res;
  for (const SignedPair& p : enumerate_signed_pairs(w, mu, m))
    res.signed_sum += p.sign();
  res.hw_count =
      static_cast<long long>(highest_weight_factorizations(w, mu, x).size());
  return res;
}

}  // namespace asc
