// Pairing process and crystal operators e~_r, f~_r, s~_r on affine
// factorizations; crystal graph construction, highest-weight extraction,
// the two-factor normalization, and the Stembridge axiom verifier.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asc/factorization.hpp"

namespace asc {

ASC_DOMAIN_ERROR(XInvalid);
ASC_DOMAIN_ERROR(NotTwoFactors);
ASC_DOMAIN_ERROR(NoMissingResidue);
ASC_DOMAIN_ERROR(UndecoratedGraph);

struct PairingResult {
  std::vector<std::pair<int, int>> pairs;  // (b in con(u), a in con(v))
  std::vector<int> left_unpaired;          // L_1, ascending residues
  std::vector<int> right_unpaired;         // R_1, ascending residues
};

PairingResult pair_factors(const CyclicFactor& u, const CyclicFactor& v,
                           int x);

enum class OpKind { E, F, S };

// Pairing context: the order residue x, plus the frozen (b-1, b) pair of the
// two-factor normalization when the contents cover all residues.
struct OpContext {
  int x = -1;
  bool has_frozen = false;
  int frozen_u = -1;  // b-1, removed from con(u) before pairing
  int frozen_v = -1;  // b = x, removed from con(v) before pairing
};

// e~/f~/s~ acting on factors r and r+1 (from the right); null = annihilated.
std::optional<AffineFactorization> crystal_op(OpKind kind, int r,
                                              const AffineFactorization& fact,
                                              int x);

// (eps_r, phi_r) = (|L_r|, |R_r|).
std::pair<int, int> string_lengths(int r, const AffineFactorization& fact,
                                   int x);

// Two-factor case: the residue x produced by the initial bracket algorithm
// (the smallest missing residue when one exists).
int two_factor_x(const CyclicFactor& u, const CyclicFactor& v);
OpContext two_factor_context(const CyclicFactor& u, const CyclicFactor& v);

// Operator on a two-factor factorization of arbitrary w in S~_n.
std::optional<AffineFactorization> crystal_op_two_factor(
    OpKind kind, const AffineFactorization& fact);
std::pair<int, int> string_lengths_two_factor(const AffineFactorization& fact);

struct CrystalGraph {
  int n = 0;
  int num_factors = 0;
  AffinePermutation element = AffinePermutation::identity(1);
  int x = -1;  // -1: per-vertex two-factor contexts
  std::vector<AffineFactorization> vertices;  // canonical order
  struct Edge {
    int src, color, dst;
  };
  std::vector<Edge> edges;  // sorted by (src, color)
  std::vector<Composition> weights;
  std::vector<std::vector<int>> eps, phi;  // [vertex][color-1]

  std::optional<int> f_image(int vertex, int color) const;
  std::optional<int> e_image(int vertex, int color) const;
  bool is_highest_weight(int vertex) const;
  std::vector<int> highest_weight_vertices() const;
  std::map<Partition, long long> highest_weight_multiplicities() const;
  int num_components() const;

 private:
  friend CrystalGraph build_crystal(const AffinePermutation&, int, int);
  std::vector<std::vector<int>> out_, in_;  // [vertex][color-1] -> index or -1
};

// Vertices are all l-factor factorizations of w; edges are f~_r.  x = -1
// picks the smallest missing residue (two-factor normalization for l = 2
// with full content; NoMissingResidue for l > 2 with full content).
CrystalGraph build_crystal(const AffinePermutation& w, int num_factors,
                           int x = -1);

// All factorizations of weight mu with L_r empty for every r.  num_factors
// defaults to the number of parts of mu; larger values pad with trivial
// factors on the left.
std::vector<AffineFactorization> highest_weight_factorizations(
    const AffinePermutation& w, const Partition& mu, int x = -1,
    int num_factors = 0);

struct AxiomCheck {
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  AxiomCheck p1, p2, p3, p4, p5, p6, p5_dual, p6_dual;
  bool all_pass() const;
};

AxiomReport verify_stembridge(const CrystalGraph& g);

std::string to_dot(const CrystalGraph& g);
std::string to_json_string(const CrystalGraph& g);

// Order-reversing duality *: i -> 2x-i on contents, factors reversed;
// intertwines e~_r with f~_{l-r} (used by the property suite).
AffineFactorization star_dual(const AffineFactorization& fact, int x);

}  // namespace asc
