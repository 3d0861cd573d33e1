#include "asc/affine_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace asc {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw DomainError("Partition parts must be weakly decreasing positive");
  }
}

Partition Partition::from_composition(const Composition& alpha) {
  std::vector<int> p(alpha.begin(), alpha.end());
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(std::move(p));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(parts_[0]);
  for (int j = 0; j < parts_[0]; ++j)
    c[j] = static_cast<int>(std::count_if(
        parts_.begin(), parts_.end(), [j](int p) { return p >= j + 1; }));
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.num_parts() > num_parts()) return false;
  for (int i = 1; i <= inner.num_parts(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

bool Partition::fits_in_rectangle(int rows, int cols) const {
  return num_parts() <= rows && (parts_.empty() || parts_[0] <= cols);
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner))
    throw DomainError("SkewShape: inner shape not contained in outer");
}

// ---------------------------------------------------------------------------
// AffinePermutation
// ---------------------------------------------------------------------------

AffinePermutation AffinePermutation::from_window(Window window) {
  int n = static_cast<int>(window.size());
  if (n == 0) throw DomainError("empty window");
  std::vector<bool> seen(n, false);
  long long sum = 0;
  for (long long v : window) {
    int r = mod(v, n);
    if (seen[r]) throw NotBijection();
    seen[r] = true;
    sum += v;
  }
  long long shift = (sum - static_cast<long long>(n) * (n + 1) / 2);
  // Distinct residues force the window sum to be Sum(i) mod n.
  if (shift % n != 0) throw NotBijection();
  return AffinePermutation(n, std::move(window), shift / n);
}

AffinePermutation AffinePermutation::identity(int n) {
  Window w(n);
  std::iota(w.begin(), w.end(), 1LL);
  return AffinePermutation(n, std::move(w), 0);
}

AffinePermutation AffinePermutation::simple(int i, int n) {
  if (i < 0 || i >= n) throw BadResidue();
  Window w(n);
  std::iota(w.begin(), w.end(), 1LL);
  if (i == 0) {
    w[0] = 0;
    w[n - 1] = n + 1;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return AffinePermutation(n, std::move(w), 0);
}

AffinePermutation AffinePermutation::from_reduced_word(
    const std::vector<int>& word, int n) {
  AffinePermutation w = identity(n);
  for (int i : word) {
    if (i < 0 || i >= n) throw BadResidue();
    w = w.times_simple(i);
  }
  return w;
}

long long AffinePermutation::operator()(long long i) const {
  long long q = floordiv(i - 1, n_);
  return window_[i - 1 - q * n_] + q * n_;
}

AffinePermutation AffinePermutation::operator*(
    const AffinePermutation& other) const {
  if (n_ != other.n_) throw RankMismatch();
  Window w(n_);
  for (int i = 1; i <= n_; ++i) w[i - 1] = (*this)(other.window_[i - 1]);
  return AffinePermutation(n_, std::move(w), shift_ + other.shift_);
}

AffinePermutation AffinePermutation::inverse() const {
  Window w(n_);
  for (int j = 0; j < n_; ++j) {
    long long v = window_[j];
    long long q = floordiv(v - 1, n_);
    w[v - 1 - q * n_] = (j + 1) - q * n_;
  }
  return AffinePermutation(n_, std::move(w), -shift_);
}

bool AffinePermutation::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (window_[i - 1] != i) return false;
  return true;
}

bool AffinePermutation::is_finite() const {
  if (shift_ != 0) return false;
  for (long long v : window_)
    if (v < 1 || v > n_) return false;
  return true;
}

bool AffinePermutation::is_affine_grassmannian() const {
  return std::is_sorted(window_.begin(), window_.end(),
                        std::less_equal<long long>());
}

Composition AffinePermutation::left_inversion_vector() const {
  // alpha_i = #{ j < i : w(j) > w(i) }; per residue class c the positions
  // j = c + t*n with t <= floor((i-c-1)/n) contribute when
  // window[c] + t*n > window[i], i.e. t >= floor((w_i - w_c)/n) + 1.
  Composition alpha(n_);
  for (int i = 1; i <= n_; ++i) {
    long long cnt = 0;
    for (int c = 1; c <= n_; ++c) {
      long long tmax = floordiv(i - c - 1, n_);
      long long tlow = floordiv(window_[i - 1] - window_[c - 1], n_) + 1;
      if (tmax >= tlow) cnt += tmax - tlow + 1;
    }
    alpha[i - 1] = static_cast<int>(cnt);
  }
  return alpha;
}

long long AffinePermutation::length() const {
  Composition a = left_inversion_vector();
  return std::accumulate(a.begin(), a.end(), 0LL);
}

bool AffinePermutation::has_right_descent(int i) const {
  if (i < 0 || i >= n_) throw BadResidue();
  // w(i) > w(i+1); i = 0 reads positions 0 and 1.
  long long a = (i == 0) ? window_[n_ - 1] - n_ : window_[i - 1];
  long long b = window_[i];
  return a > b;
}

bool AffinePermutation::has_left_descent(int i) const {
  if (i < 0 || i >= n_) throw BadResidue();
  AffinePermutation inv = inverse();
  return inv(i) > inv(i + 1);
}

AffinePermutation AffinePermutation::times_simple(int i) const {
  Window w = window_;
  if (i == 0) {
    w[0] = window_[n_ - 1] - n_;
    w[n_ - 1] = window_[0] + n_;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return AffinePermutation(n_, std::move(w), shift_);
}

std::vector<int> AffinePermutation::reduced_word() const {
  Window win = window_;
  if (shift_ != 0)
    for (auto& v : win) v -= shift_;
  AffinePermutation w = from_window(std::move(win));
  std::vector<int> word;
  long long len = w.length();
  word.reserve(static_cast<size_t>(len));
  while (len > 0) {
    AffinePermutation inv = w.inverse();
    int d = -1;
    for (int i = 0; i < w.n_; ++i) {
      if (inv(i) > inv(i + 1)) {
        d = i;
        break;
      }
    }
    word.push_back(d);
    w = simple(d, w.n_) * w;
    --len;
  }
  return word;
}

std::set<int> AffinePermutation::content() const {
  std::vector<int> word = reduced_word();
  return std::set<int>(word.begin(), word.end());
}

std::set<int> AffinePermutation::missing_residues() const {
  std::set<int> con = content();
  std::set<int> out;
  for (int i = 0; i < n_; ++i)
    if (!con.count(i)) out.insert(i);
  return out;
}

std::string AffinePermutation::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string(window_[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// LC / w_lambda / R_i / af / kappa
// ---------------------------------------------------------------------------

Partition lc(const AffinePermutation& w) {
  if (!w.is_affine_grassmannian()) throw NotGrassmannian();
  Composition a = w.left_inversion_vector();
  std::vector<int> p(a.begin(), a.end());
  // increasing window makes linv weakly decreasing with last entry zero
  return Partition(std::move(p)).conjugate();
}

AffinePermutation w_lambda(const Partition& lambda, int n) {
  if (!lambda.empty() && lambda.parts()[0] >= n) throw PartNotLessThanN();
  // Residue reading word of the diagram: rows bottom to top, each row right
  // to left, cell (i,j) carrying residue (j-i) mod n.
  std::vector<int> word;
  for (int i = lambda.num_parts(); i >= 1; --i)
    for (int j = lambda.part(i); j >= 1; --j) word.push_back(mod(j - i, n));
  return AffinePermutation::from_reduced_word(word, n);
}

AffinePermutation apply_R(int i, long long exponent,
                          const AffinePermutation& w) {
  int n = w.rank();
  if (i < 1 || i >= n) throw IndexOutOfRange();
  Window win = w.window();
  long long steps = exponent >= 0 ? exponent : -exponent;
  for (long long s = 0; s < steps; ++s) {
    for (int j = 0; j < n; ++j) {
      if (j < i)
        win[j] += (exponent >= 0) ? -(n - i) : (n - i);
      else
        win[j] += (exponent >= 0) ? i : -i;
    }
  }
  return AffinePermutation::from_window(std::move(win));
}

AffinePermutation af(const AffinePermutation& u) {
  if (!u.is_finite()) throw NotFinitePermutation();
  int n = u.rank();
  Window w(n);
  for (int i = 0; i < n; ++i)
    w[i] = u.window()[i] + static_cast<long long>(i) * n;
  return AffinePermutation::from_window(std::move(w));
}

AffinePermutation af_d(const AffinePermutation& v,
                       const std::vector<long long>& d) {
  int n = v.rank();
  if (static_cast<int>(d.size()) != n - 1)
    throw DomainError("af_d: d must have n-1 entries");
  AffinePermutation out = af(v);
  for (int i = 1; i < n; ++i) {
    long long dm = (i >= 2) ? d[i - 2] : 0;       // d_{i-1}, with d_0 = 0
    long long dp = (i <= n - 2) ? d[i] : 0;       // d_{i+1}, with d_n = 0
    long long e = dm + dp - 2 * d[i - 1] + 1;
    out = apply_R(i, e, out);
  }
  return out;
}

SkewShape kappa(const AffinePermutation& w) {
  if (w.shift() != 0) throw DomainError("kappa: element must have shift 0");
  int n = w.rank();
  Window sorted = w.window();
  std::sort(sorted.begin(), sorted.end());
  // u rearranges the window into increasing order: w = v~ u.
  Window uw(n);
  for (int i = 0; i < n; ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), w.window()[i]);
    uw[i] = (it - sorted.begin()) + 1;
  }
  AffinePermutation u = AffinePermutation::from_window(std::move(uw));
  AffinePermutation vt = AffinePermutation::from_window(std::move(sorted));
  Partition nu = lc(vt * af(AffinePermutation::identity(n)));
  Partition lambda = lc(af(u.inverse()));
  return SkewShape(std::move(nu), std::move(lambda));
}

Partition grassmannian_shape(const AffinePermutation& u, int r) {
  if (!u.is_finite()) throw NotFinitePermutation();
  int n = u.rank();
  if (r < 1 || r >= n) throw IndexOutOfRange();
  for (int i = 1; i < n; ++i)
    if (u.window()[i - 1] > u.window()[i] && i != r)
      throw NotGrassmannianPermutation();
  std::vector<int> lam(r, 0);
  for (int i = 1; i <= r; ++i)
    for (int j = r + 1; j <= n; ++j)
      if (u.window()[r - i] > u.window()[j - 1]) ++lam[i - 1];
  return Partition(std::move(lam));
}

Partition rect_complement(const Partition& lambda, int rows, int cols) {
  if (!lambda.fits_in_rectangle(rows, cols)) throw ShapeTooBig();
  std::vector<int> out;
  for (int i = rows; i >= 1; --i) out.push_back(cols - lambda.part(i));
  return Partition(std::move(out));
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string body = text;
  if (!body.empty() && body.front() == '[') body = body.substr(1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoi(item));
  return out;
}

Window parse_window(const std::string& text) {
  std::vector<int> v = parse_int_list(text);
  return Window(v.begin(), v.end());
}

Partition parse_partition(const std::string& text) {
  return Partition(parse_int_list(text));
}

}  // namespace asc
