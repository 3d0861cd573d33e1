#include "asc/eg.hpp"

#include <algorithm>
#include <map>

namespace asc {

// ---------------------------------------------------------------------------
// Tableau
// ---------------------------------------------------------------------------

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return Partition(std::move(p));
}

Composition Tableau::weight(int num_letters) const {
  Composition w(num_letters, 0);
  for (const auto& r : rows_)
    for (int v : r)
      if (v >= 1 && v <= num_letters) ++w[v - 1];
  return w;
}

std::string Tableau::to_string() const {
  std::string s;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '/';
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ' ';
      s += std::to_string(rows_[r][c]);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// EG insertion
// ---------------------------------------------------------------------------

std::pair<int, int> eg_insert(Tableau& P, int a, const LetterOrder& ord) {
  int r = 0;
  while (true) {
    if (r == P.num_rows()) {
      P.rows().push_back({a});
      return {r, 0};
    }
    std::vector<int>& row = P.rows()[r];
    size_t pos = row.size();
    for (size_t i = 0; i < row.size(); ++i) {
      if (ord.less(a, row[i])) {
        pos = i;
        break;
      }
    }
    if (pos == row.size()) {
      row.push_back(a);
      return {r, static_cast<int>(row.size()) - 1};
    }
    int b = row[pos];
    if (ord.is_successor(a, b) &&
        std::find(row.begin(), row.end(), a) != row.end()) {
      a = b;  // row unchanged, bump a+1 into the next row
    } else {
      row[pos] = a;
      a = b;
    }
    ++r;
  }
}

EgPair eg_map(const AffineFactorization& fact, int x) {
  int n = fact.rank();
  LetterOrder ord{x, n};
  for (const CyclicFactor& f : fact.factors())
    if (f.contains(x)) throw NotInSxHat();
  EgPair pq;
  for (int i = 1; i <= fact.num_factors(); ++i) {
    std::vector<int> letters = fact.factor_from_right(i).content();
    std::sort(letters.begin(), letters.end(),
              [&](int a, int b) { return ord.less(a, b); });
    for (int a : letters) {
      auto [r, c] = eg_insert(pq.P, a, ord);
      if (r == pq.Q.num_rows())
        pq.Q.rows().push_back({i});
      else
        pq.Q.rows()[r].push_back(i);
      (void)c;
    }
  }
  return pq;
}

AffineFactorization eg_unmap(const EgPair& pq, int x, int n,
                             int num_factors) {
  LetterOrder ord{x, n};
  Tableau P = pq.P;
  int num_letters = 0;
  for (const auto& row : pq.Q.rows())
    for (int v : row) num_letters = std::max(num_letters, v);
  num_letters = std::max(num_letters, num_factors);

  std::vector<CyclicFactor> factors;  // leftmost factor emerges first
  for (int letter = num_letters; letter >= 1; --letter) {
    // Cells of Q carrying this letter form a horizontal strip; reverse-bump
    // right to left.
    std::vector<std::pair<int, int>> cells;  // (row, col)
    for (int r = 0; r < pq.Q.num_rows(); ++r)
      for (int c = 0; c < static_cast<int>(pq.Q.rows()[r].size()); ++c)
        if (pq.Q.rows()[r][c] == letter) cells.emplace_back(r, c);
    std::sort(cells.begin(), cells.end(),
              [](auto& a, auto& b) { return a.second > b.second; });
    std::vector<int> content;
    for (auto [r, c] : cells) {
      int y = P.rows()[r].back();
      P.rows()[r].pop_back();
      if (P.rows()[r].empty() && r == P.num_rows() - 1) P.rows().pop_back();
      for (int q = r - 1; q >= 0; --q) {
        std::vector<int>& row = P.rows()[q];
        bool y_in_row = std::find(row.begin(), row.end(), y) != row.end();
        if (y_in_row) {
          // forward case was b = a+1 with a present: row unchanged
          y = (y + n - 1) % n;
        } else {
          // largest entry smaller than y
          int best = -1;
          size_t best_i = 0;
          for (size_t i = 0; i < row.size(); ++i) {
            if (ord.less(row[i], y) &&
                (best < 0 || ord.less(best, row[i]))) {
              best = row[i];
              best_i = i;
            }
          }
          row[best_i] = y;
          y = best;
        }
      }
      content.push_back(y);
    }
    factors.emplace_back(n, std::move(content));
  }
  return AffineFactorization(n, std::move(factors));
}

std::vector<int> column_word_of_transpose(const Tableau& P) {
  std::vector<int> out;
  if (P.empty()) return out;
  // transpose: row r of P^t = column r of P; then read each column of P^t
  // (= row of P) top to bottom, columns left to right
  size_t ncols_t = P.rows()[0].size();  // rows of P^t
  (void)ncols_t;
  // columns of P^t are indexed by rows of P; entries of column c of P^t are
  // P[c][*]; read top to bottom means reversed row order of P^t, i.e. for
  // column c: P[c][k] for k descending over... equivalently:
  for (int c = 0; c < P.num_rows(); ++c) {
    const std::vector<int>& row = P.rows()[c];
    for (auto it = row.rbegin(); it != row.rend(); ++it) out.push_back(*it);
  }
  return out;
}

bool is_increasing_tableau(const Tableau& P, const LetterOrder& ord) {
  for (int r = 0; r < P.num_rows(); ++r) {
    const auto& row = P.rows()[r];
    if (r > 0 && row.size() > P.rows()[r - 1].size()) return false;
    for (size_t c = 0; c + 1 < row.size(); ++c)
      if (!ord.less(row[c], row[c + 1])) return false;
    if (r > 0)
      for (size_t c = 0; c < row.size(); ++c)
        if (!ord.less(P.rows()[r - 1][c], row[c])) return false;
  }
  return true;
}

bool is_semistandard(const Tableau& Q) {
  for (int r = 0; r < Q.num_rows(); ++r) {
    const auto& row = Q.rows()[r];
    if (r > 0 && row.size() > Q.rows()[r - 1].size()) return false;
    for (size_t c = 0; c + 1 < row.size(); ++c)
      if (row[c] > row[c + 1]) return false;
    if (r > 0)
      for (size_t c = 0; c < row.size(); ++c)
        if (Q.rows()[r - 1][c] >= row[c]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Skew tableau crystal (classical bracketing)
// ---------------------------------------------------------------------------

Partition SkewTableau::outer() const {
  std::vector<int> p;
  for (int r = 0; r < rows.num_rows(); ++r)
    p.push_back(inner.part(r + 1) +
                static_cast<int>(rows.rows()[r].size()));
  // rows of a skew tableau may end flush: strip empty trailing rows
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Partition(std::move(p));
}

namespace {

struct Cell {
  int row, col;  // col absolute (inner offset applied)
};

// Scan order: columns right to left, bottom to top within a column; pair
// each i+1 with the most recently scanned unpaired i.
void bracket(const SkewTableau& t, int i, std::vector<Cell>& unpaired_i,
             std::vector<Cell>& unpaired_ip1) {
  int maxcol = 0;
  for (int r = 0; r < t.rows.num_rows(); ++r)
    maxcol = std::max(
        maxcol, t.inner.part(r + 1) +
                    static_cast<int>(t.rows.rows()[r].size()));
  for (int c = maxcol - 1; c >= 0; --c) {
    for (int r = 0; r < t.rows.num_rows(); ++r) {
      int off = t.inner.part(r + 1);
      int width = static_cast<int>(t.rows.rows()[r].size());
      if (c < off || c >= off + width) continue;
      int v = t.rows.rows()[r][c - off];
      if (v == i) {
        unpaired_i.push_back({r, c});
      } else if (v == i + 1) {
        if (!unpaired_i.empty())
          unpaired_i.pop_back();
        else
          unpaired_ip1.push_back({r, c});
      }
    }
  }
}

}  // namespace

std::optional<SkewTableau> tableau_f(const SkewTableau& t, int i) {
  std::vector<Cell> ui, uip1;
  bracket(t, i, ui, uip1);
  if (ui.empty()) return std::nullopt;
  // rightmost unpaired i
  Cell target = ui.front();
  for (const Cell& c : ui)
    if (c.col > target.col) target = c;
  SkewTableau out = t;
  out.rows.rows()[target.row][target.col - t.inner.part(target.row + 1)] =
      i + 1;
  return out;
}

std::optional<SkewTableau> tableau_e(const SkewTableau& t, int i) {
  std::vector<Cell> ui, uip1;
  bracket(t, i, ui, uip1);
  if (uip1.empty()) return std::nullopt;
  // leftmost unpaired i+1
  Cell target = uip1.front();
  for (const Cell& c : uip1)
    if (c.col < target.col) target = c;
  SkewTableau out = t;
  out.rows.rows()[target.row][target.col - t.inner.part(target.row + 1)] = i;
  return out;
}

bool tableau_is_highest_weight(const SkewTableau& t, int num_letters) {
  for (int i = 1; i < num_letters; ++i)
    if (tableau_e(t, i)) return false;
  return true;
}

std::vector<SkewTableau> all_skew_tableaux(const Partition& outer,
                                           const Partition& inner,
                                           int num_letters) {
  std::vector<SkewTableau> out;
  int nrows = outer.num_parts();
  std::vector<std::vector<int>> rows(nrows);
  for (int r = 0; r < nrows; ++r)
    rows[r].assign(outer.part(r + 1) - inner.part(r + 1), 0);

  // fill cells row-major bottom-up, enforcing semistandardness as we go
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c)
      cells.emplace_back(r, c);

  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      out.push_back(SkewTableau{inner, Tableau(rows)});
      return;
    }
    auto [r, c] = cells[k];
    int off = inner.part(r + 1);
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);  // weak rows
    if (r > 0) {
      int below_off = inner.part(r);
      int abs = off + c;
      if (abs >= below_off &&
          abs - below_off < static_cast<int>(rows[r - 1].size()))
        lo = std::max(lo, rows[r - 1][abs - below_off] + 1);  // strict cols
    }
    for (int v = lo; v <= num_letters; ++v) {
      rows[r][c] = v;
      rec(k + 1);
    }
    rows[r][c] = 0;
  };
  rec(0);
  return out;
}

}  // namespace asc
