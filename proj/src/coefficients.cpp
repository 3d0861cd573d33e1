#include "asc/coefficients.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace asc {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Schur: return "schur";
    case Basis::H: return "h";
    case Basis::M: return "m";
    case Basis::KSchur: return "kschur";
  }
  return "?";
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Crystal: return "crystal";
    case Method::Alternating: return "alternating";
    case Method::Oracle: return "oracle";
    case Method::Auto: return "auto";
  }
  return "?";
}

long long SchurExpansion::coefficient(const Partition& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? 0 : it->second;
}

bool SchurExpansion::all_nonnegative() const {
  for (const auto& [p, c] : terms)
    if (c < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Partitions and Kostka matrices
// ---------------------------------------------------------------------------

std::vector<Partition> partitions_of(int d, int max_part, int max_parts) {
  if (max_part < 0) max_part = d;
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int bound) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
    for (int p = std::min(rem, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(d, max_part);
  return out;
}

long long kostka_number(const Partition& lambda, const Composition& alpha) {
  // peel the last letter of alpha as a horizontal strip
  static std::map<std::pair<Partition, Composition>, long long> memo;
  static std::mutex mx;
  Composition a = alpha;
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.empty()) return lambda.empty() ? 1 : 0;
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find({lambda, a});
    if (it != memo.end()) return it->second;
  }
  int k = a.back();
  Composition head(a.begin(), a.end() - 1);
  long long total = 0;
  int nr = lambda.num_parts();
  std::vector<int> mu(nr);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == nr) {
      if (rem == 0) {
        std::vector<int> m;
        for (int p : mu)
          if (p) m.push_back(p);
        total += kostka_number(Partition(std::move(m)), head);
      }
      return;
    }
    int lo = lambda.part(i + 2);  // next row down in the strip order
    for (int v = lo; v <= lambda.part(i + 1); ++v) {
      int used = lambda.part(i + 1) - v;
      if (used > rem) continue;
      mu[i] = v;
      rec(i + 1, rem - used);
    }
  };
  rec(0, k);
  std::lock_guard<std::mutex> lk(mx);
  memo[{lambda, a}] = total;
  return total;
}

namespace {

// All signed rearrangement classes sigma(mu+rho)-rho for one (mu, m):
// map from the sorted positive part vector to the signed count.
const std::map<Partition, long long>& inverse_kostka_column(
    const Partition& mu, int m) {
  static std::map<std::pair<Partition, int>, std::map<Partition, long long>>
      cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lk(mx);
  auto it = cache.find({mu, m});
  if (it != cache.end()) return it->second;

  std::map<Partition, long long> col;
  std::vector<long long> v(m);
  for (int i = 0; i < m; ++i) v[i] = mu.part(i + 1) + (m - 1 - i);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> beta(m);
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      long long b = v[perm[j]] - (m - 1 - j);
      if (b < 0) ok = false;
      beta[j] = static_cast<int>(b);
    }
    if (!ok) continue;
    // sign of perm
    int sign = 1;
    std::vector<bool> seen(m, false);
    for (int i = 0; i < m; ++i) {
      if (seen[i]) continue;
      int j = i, c = 0;
      while (!seen[j]) {
        seen[j] = true;
        j = perm[j];
        ++c;
      }
      if (c % 2 == 0) sign = -sign;
    }
    col[Partition::from_composition(beta)] += sign;
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto [pos, _] = cache.emplace(std::make_pair(mu, m), std::move(col));
  return pos->second;
}

}  // namespace

long long inverse_kostka(const Partition& alpha, const Partition& mu, int m) {
  if (m < std::max(alpha.num_parts(), mu.num_parts())) throw MTooSmall();
  const auto& col = inverse_kostka_column(mu, m);
  auto it = col.find(alpha);
  return it == col.end() ? 0 : it->second;
}

long long inverse_kostka(const Partition& alpha, const Partition& mu) {
  return inverse_kostka(alpha, mu,
                        std::max({alpha.num_parts(), mu.num_parts(), 1}));
}

// ---------------------------------------------------------------------------
// Stanley expansions
// ---------------------------------------------------------------------------

SchurExpansion stanley_monomial_expansion(const AffinePermutation& w,
                                          int parts) {
  SchurExpansion out;
  out.basis = Basis::M;
  out.method = Method::Crystal;
  int d = static_cast<int>(w.length());
  for (const Partition& mu : partitions_of(d, w.rank() - 1, parts)) {
    long long c = count_factorizations(w, Composition(mu.parts().begin(),
                                                      mu.parts().end()));
    if (c) out.terms[mu] = c;
  }
  return out;
}

SchurExpansion stanley_schur_expansion(const AffinePermutation& w,
                                       Method method) {
  int d = static_cast<int>(w.length());
  SchurExpansion out;
  out.basis = Basis::Schur;
  if (method == Method::Auto)
    method = w.missing_residues().empty() ? Method::Alternating
                                          : Method::Crystal;
  out.method = method;

  if (method == Method::Crystal) {
    std::set<int> miss = w.missing_residues();
    if (miss.empty()) throw NoMissingResidue();
    int x = *miss.begin();
    for (const Partition& lam : partitions_of(d)) {
      long long c = static_cast<long long>(
          highest_weight_factorizations(w, lam, x).size());
      if (c) out.terms[lam] = c;
    }
    return out;
  }

  // alternating: a_{w,lam} = sum_alpha K_{w,alpha} Kbar_{alpha,lam}
  out.hypotheses_met = !w.missing_residues().empty();
  std::vector<Partition> alphas = partitions_of(d, w.rank() - 1);
  std::map<Partition, long long> K;
  for (const Partition& a : alphas) {
    long long c = count_factorizations(
        w, Composition(a.parts().begin(), a.parts().end()));
    if (c) K[a] = c;
  }
  for (const Partition& lam : partitions_of(d)) {
    long long c = 0;
    for (const auto& [a, k] : K) {
      int m = std::max(a.num_parts(), lam.num_parts());
      c += k * inverse_kostka(a, lam, m);
    }
    if (c) out.terms[lam] = c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// k-Pieri and the h-basis
// ---------------------------------------------------------------------------

std::vector<AffinePermutation> k_pieri(int r, const AffinePermutation& u) {
  int n = u.rank();
  if (r < 1 || r >= n) throw IndexOutOfRange();
  if (u.shift() != 0 || !u.is_affine_grassmannian()) throw NotGrassmannian();
  long long lu = u.length();
  std::vector<AffinePermutation> out;
  std::vector<int> subset(r);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    CyclicFactor f(n, subset);
    AffinePermutation vu = f.permutation() * u;
    if (vu.length() == lu + r && vu.is_affine_grassmannian())
      out.push_back(std::move(vu));
    // next combination
    int k = r;
    int i = k - 1;
    for (; i >= 0; --i) {
      if (subset[i] < n - k + i) {
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        break;
      }
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<AffinePermutation, long long> iterated_k_pieri(
    const Composition& alpha, const AffinePermutation& w) {
  std::map<AffinePermutation, long long> cur{{w, 1}};
  for (int part : alpha) {
    if (part == 0) continue;
    std::map<AffinePermutation, long long> nxt;
    for (const auto& [u, c] : cur)
      for (const AffinePermutation& vu : k_pieri(part, u)) nxt[vu] += c;
    cur = std::move(nxt);
  }
  return cur;
}

SchurExpansion kschur_h_expansion(const AffinePermutation& w,
                                  int degree_bound) {
  if (w.shift() != 0 || !w.is_affine_grassmannian()) throw NotGrassmannian();
  int n = w.rank();
  int d = static_cast<int>(w.length());
  if (d > degree_bound) throw DegreeMismatch();

  std::vector<Partition> ps = partitions_of(d, n - 1);
  std::sort(ps.begin(), ps.end(),
            [](const Partition& a, const Partition& b) { return b < a; });
  int m = static_cast<int>(ps.size());
  Partition target = lc(w);
  int t = -1;
  for (int i = 0; i < m; ++i)
    if (ps[i] == target) t = i;
  if (t < 0) throw DegreeMismatch();

  // K[i][j] = K_{w_{ps[i]}, ps[j]}; upper unitriangular in this order.
  std::vector<std::vector<long long>> K(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i) {
    AffinePermutation wl = w_lambda(ps[i], n);
    for (int j = 0; j < m; ++j)
      K[i][j] = count_factorizations(
          wl, Composition(ps[j].parts().begin(), ps[j].parts().end()));
    if (K[i][i] != 1)
      throw DomainError("kschur_h_expansion: K matrix not unitriangular");
    for (int j = 0; j < i; ++j)
      if (K[i][j] != 0)
        throw DomainError("kschur_h_expansion: K matrix not unitriangular");
  }

  // Solve K c = e_t by back substitution; c_i = Kbar_{ps[i], w}.
  std::vector<long long> c(m, 0);
  for (int i = m - 1; i >= 0; --i) {
    long long rhs = (i == t) ? 1 : 0;
    for (int j = i + 1; j < m; ++j) rhs -= K[i][j] * c[j];
    c[i] = rhs;
  }

  SchurExpansion out;
  out.basis = Basis::H;
  out.method = Method::Oracle;
  for (int i = 0; i < m; ++i)
    if (c[i]) out.terms[ps[i]] = c[i];
  return out;
}

// ---------------------------------------------------------------------------
// Affine LR, Gromov-Witten, fusion, positroids
// ---------------------------------------------------------------------------

namespace {

long long hw_count(const AffinePermutation& z, const Partition& mu) {
  return static_cast<long long>(highest_weight_factorizations(z, mu).size());
}

bool crystal_hypotheses(const AffinePermutation& z, const Partition& mu) {
  return mu.num_parts() <= 2 || !z.missing_residues().empty();
}

// Alternating-sum oracle a_{z,mu} = sum_alpha K_{z,alpha} Kbar_{alpha,mu}.
long long alternating_coefficient(const AffinePermutation& z,
                                  const Partition& mu) {
  if (z.length() != mu.size()) return 0;
  long long total = 0;
  for (const Partition& a : partitions_of(mu.size(), z.rank() - 1)) {
    long long k = count_factorizations(
        z, Composition(a.parts().begin(), a.parts().end()));
    if (!k) continue;
    total += k * inverse_kostka(a, mu,
                                std::max(a.num_parts(), mu.num_parts()));
  }
  return total;
}

}  // namespace

CoeffResult affine_lr(const Partition& mu, const AffinePermutation& w,
                      const AffinePermutation& v,
                      const std::vector<std::pair<int, long long>>& R,
                      Method method) {
  int n = w.rank();
  if (v.rank() != n) throw RankMismatch();
  if (mu.num_parts() + (mu.empty() ? 0 : mu.parts()[0]) > n)
    throw ShapeOutOfRange();

  AffinePermutation vs = v;
  for (const auto& [i, e] : R) vs = apply_R(i, -e, vs);
  if (w.shift() != 0 || !w.is_affine_grassmannian()) throw NotGrassmannian();
  if (vs.shift() != 0 || !vs.is_affine_grassmannian())
    throw NotGrassmannian();

  CoeffResult res;
  if (vs.length() - w.length() != mu.size()) {
    res.value = 0;
    res.method = method == Method::Oracle ? Method::Oracle : Method::Crystal;
    return res;
  }
  AffinePermutation z = vs * w.inverse();
  res.hypotheses_met = crystal_hypotheses(z, mu);

  if (method == Method::Crystal || method == Method::Auto) {
    if (res.hypotheses_met) {
      res.value = hw_count(z, mu);
      res.method = Method::Crystal;
      return res;
    }
    if (method == Method::Crystal) throw HypothesisNotMet();
  }

  // oracle: sum_alpha Kbar_{alpha,mu} [s^(k)_vs] (h_alpha s^(k)_w)
  long long total = 0;
  for (const Partition& a : partitions_of(mu.size(), n - 1)) {
    long long kb =
        inverse_kostka(a, mu, std::max(a.num_parts(), mu.num_parts()));
    if (!kb) continue;
    auto exp = iterated_k_pieri(
        Composition(a.parts().begin(), a.parts().end()), w);
    auto it = exp.find(vs);
    if (it != exp.end()) total += kb * it->second;
  }
  res.value = total;
  res.method = Method::Oracle;
  return res;
}

GwResult gw_invariant(const AffinePermutation& u, const AffinePermutation& w,
                      const AffinePermutation& v,
                      const std::vector<long long>& d, Method method) {
  int n = u.rank();
  if (w.rank() != n || v.rank() != n) throw RankMismatch();
  if (!u.is_finite() || !w.is_finite() || !v.is_finite())
    throw NotFinitePermutation();
  if (static_cast<int>(d.size()) != n - 1)
    throw DomainError("gw_invariant: d must have n-1 entries");
  for (long long di : d)
    if (di < 0) throw DomainError("gw_invariant: d entries must be >= 0");

  int r = -1;
  for (int i = 1; i < n; ++i) {
    if (u.window()[i - 1] > u.window()[i]) {
      if (r >= 0) throw NotGrassmannianPermutation();
      r = i;
    }
  }
  if (r < 0) throw NotGrassmannianPermutation();

  GwResult res;
  res.descent = r;
  Partition mu_prime = rect_complement(grassmannian_shape(u, r), r, n - r);
  res.mu = mu_prime.conjugate();

  long long dsum = std::accumulate(d.begin(), d.end(), 0LL);
  if (v.length() != u.length() + w.length() - 2 * dsum) {
    res.value = 0;
    res.z = AffinePermutation::identity(n);
    return res;
  }

  AffinePermutation rv = v;
  for (int i = 1; i < n; ++i) {
    long long dm = (i >= 2) ? d[i - 2] : 0;
    long long dp = (i <= n - 2) ? d[i] : 0;
    long long e = dm + dp - 2 * d[i - 1] + (i == r ? 1 : 0);
    rv = apply_R(i, e, rv);
  }
  AffinePermutation z = rv * w.inverse();
  res.z = z;
  res.hypotheses_met = crystal_hypotheses(z, res.mu);

  if (method == Method::Crystal || method == Method::Auto) {
    if (res.hypotheses_met) {
      res.value = hw_count(z, res.mu);
      res.method = Method::Crystal;
      return res;
    }
    if (method == Method::Crystal) throw HypothesisNotMet();
  }
  res.value = alternating_coefficient(z, res.mu);
  res.method = Method::Oracle;
  return res;
}

CoeffResult fusion_coefficient(const Partition& lambda, const Partition& mu,
                               const Partition& nu, int ell, int level,
                               Method method) {
  if (ell < 1 || level < 1) throw DomainError("fusion: need ell,level >= 1");
  int n = ell + level;
  for (const Partition* p : {&lambda, &mu, &nu})
    if (!p->fits_in_rectangle(ell - 1, level)) throw ShapeOutOfRange();
  int t = lambda.size() + mu.size() - nu.size();
  if (t < 0 || t % ell != 0) throw NotDivisible();

  std::vector<int> hat(t / ell, ell);
  Partition nu_conj = nu.conjugate();
  for (int p : nu_conj.parts()) hat.push_back(p);
  Partition nu_hat(std::move(hat));

  AffinePermutation wl = w_lambda(lambda.conjugate(), n);
  AffinePermutation wnu = w_lambda(nu_hat, n);
  return affine_lr(mu.conjugate(), wl, wnu, {}, method);
}

SchurExpansion positroid_schubert_decomposition(const AffinePermutation& w,
                                                int r, int n) {
  if (w.rank() != n) throw RankMismatch();
  if (w.shift() != r) throw NotBounded();
  for (int i = 1; i <= n; ++i) {
    long long wi = w.window()[i - 1];
    if (wi < i || wi > i + n) throw NotBounded();
  }
  Window win = w.window();
  for (auto& x : win) x -= r;  // tau^{-r} w, the proper part
  AffinePermutation v = AffinePermutation::from_window(std::move(win));

  SchurExpansion full = stanley_schur_expansion(v, Method::Auto);
  SchurExpansion out;
  out.basis = Basis::Schur;
  out.method = full.method;
  out.hypotheses_met = full.method == Method::Crystal;
  for (const auto& [lam, c] : full.terms)
    if (lam.fits_in_rectangle(r, n - r)) out.terms[lam] = c;
  return out;
}

long long count_reduced_words(const AffinePermutation& w) {
  static std::map<AffinePermutation, long long> memo;
  static std::mutex mx;
  if (w.length() == 0) return 1;
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }
  long long total = 0;
  for (int i = 0; i < w.rank(); ++i)
    if (w.has_right_descent(i)) total += count_reduced_words(w.times_simple(i));
  std::lock_guard<std::mutex> lk(mx);
  memo[w] = total;
  return total;
}

}  // namespace asc
