// Coefficient engines: Stanley/dual-k-Schur expansions, inverse Kostka
// numbers, the iterated k-Pieri oracle, affine Littlewood-Richardson
// coefficients, flag Gromov-Witten invariants, fusion coefficients, and
// positroid Schubert decompositions.  Everything is exact integer.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "asc/crystal.hpp"

namespace asc {

ASC_DOMAIN_ERROR(MTooSmall);
ASC_DOMAIN_ERROR(DegreeMismatch);
ASC_DOMAIN_ERROR(HypothesisNotMet);
ASC_DOMAIN_ERROR(ShapeOutOfRange);
ASC_DOMAIN_ERROR(NotDivisible);
ASC_DOMAIN_ERROR(NotBounded);

enum class Basis { Schur, H, M, KSchur };
enum class Method { Crystal, Alternating, Oracle, Auto };

std::string basis_name(Basis b);
std::string method_name(Method m);

struct SchurExpansion {
  Basis basis = Basis::Schur;
  std::map<Partition, long long> terms;  // no zero coefficients stored
  Method method = Method::Crystal;
  bool hypotheses_met = true;

  long long coefficient(const Partition& p) const;
  bool all_nonnegative() const;
};

struct CoeffResult {
  long long value = 0;
  Method method = Method::Crystal;
  bool hypotheses_met = true;
};

// Kbar_{alpha,mu}: signed sum over sigma in S_m with sigma(mu+rho)-rho a
// rearrangement of alpha, rho = (m-1,...,1,0).  m defaults to
// max(len(alpha), len(mu)); the value is independent of larger m.
long long inverse_kostka(const Partition& alpha, const Partition& mu, int m);
long long inverse_kostka(const Partition& alpha, const Partition& mu);

// Classical Kostka number by semistandard tableau counting (test oracle).
long long kostka_number(const Partition& lambda, const Composition& alpha);

// Partitions of d; optionally bounded parts / number of parts.
std::vector<Partition> partitions_of(int d, int max_part = -1,
                                     int max_parts = -1);

// Coefficient of m_mu is K_{w,mu}, for partitions mu with at most `parts`
// parts; also the monomial expansion of the dual k-Schur F_{kappa(w)}.
SchurExpansion stanley_monomial_expansion(const AffinePermutation& w,
                                          int parts);

// Schur expansion of F_w.  Crystal method counts highest weight
// factorizations (requires a missing residue); the alternating method sums
// K_{w,alpha} Kbar_{alpha,lambda} and works for any w.
SchurExpansion stanley_schur_expansion(const AffinePermutation& w,
                                       Method method);

// All vu with v cyclically decreasing of length r, l(vu) = r + l(u), vu
// affine Grassmannian: the k-Pieri rule h_r s^(k)_u = sum s^(k)_{vu}.
std::vector<AffinePermutation> k_pieri(int r, const AffinePermutation& u);

// Expansion of h_alpha * s^(k)_w over affine Grassmannian elements by
// iterated k-Pieri; the independent oracle route.
std::map<AffinePermutation, long long> iterated_k_pieri(
    const Composition& alpha, const AffinePermutation& w);

// h-expansion of s^(k)_w by inverting the unitriangular K-matrix block of
// degree l(w).
SchurExpansion kschur_h_expansion(const AffinePermutation& w,
                                  int degree_bound);

// c_{R w_mu, w}^{R v, k}: crystal method counts highest weight
// factorizations of v w^{-1} of weight mu; oracle method goes through
// inverse Kostka + iterated k-Pieri.  R (a list of (i, exponent) rectangle
// operators) is stripped from v before either computation.
CoeffResult affine_lr(const Partition& mu, const AffinePermutation& w,
                      const AffinePermutation& v,
                      const std::vector<std::pair<int, long long>>& R = {},
                      Method method = Method::Auto);

struct GwResult {
  long long value = 0;
  Method method = Method::Crystal;
  bool hypotheses_met = true;
  Partition mu;                                      // weight used
  AffinePermutation z = AffinePermutation::identity(1);  // (Rv) w^{-1}
  int descent = 0;                                   // r
};

// <u,w,w_0 v>_d for u Grassmannian with a unique descent; u, w, v given as
// finite permutations of the same rank, d with n-1 nonnegative entries.
GwResult gw_invariant(const AffinePermutation& u, const AffinePermutation& w,
                      const AffinePermutation& v,
                      const std::vector<long long>& d,
                      Method method = Method::Auto);

// Fusion coefficient N_{lambda,mu}^{nu} of su(ell) at the given level
// (n = ell + level), via the affine LR coefficient with hat(nu).
CoeffResult fusion_coefficient(const Partition& lambda, const Partition& mu,
                               const Partition& nu, int ell, int level,
                               Method method = Method::Auto);

// Schur decomposition of the positroid class of w in Bound(r,n), truncated
// to shapes inside the (n-r) x r rectangle.
SchurExpansion positroid_schubert_decomposition(const AffinePermutation& w,
                                                int r, int n);

// Number of reduced words, by descent recursion (test oracle).
long long count_reduced_words(const AffinePermutation& w);

}  // namespace asc
