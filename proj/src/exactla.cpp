#include "sl2chow/exactla.hpp"

#include <algorithm>

namespace sl2chow {

Rational rat(long num, long den) {
  if (den == 0) fail(Errc::bad_argument, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) fail(Errc::bad_argument, "bad rational literal: " + text);
  if (r.get_den() == 0) fail(Errc::bad_argument, "rational with zero denominator: " + text);
  r.canonicalize();
  return r;
}

Rational factorial(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Rational pow_rat(const Rational& base, long e) {
  if (e == 0) return 1;
  if (base == 0 && e < 0) fail(Errc::bad_argument, "negative power of zero");
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), a);
  Rational r = (e > 0) ? Rational(num) / Rational(den) : Rational(den) / Rational(num);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

void fail(Errc code, const std::string& message) { throw Error(code, message); }

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void LinearMap::set(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) fail(Errc::bad_argument, "entry out of range");
  if (value == 0)
    entries_.erase({row, col});
  else
    entries_[{row, col}] = value;
}

void LinearMap::add_to(std::size_t row, std::size_t col, const Rational& value) {
  if (value == 0) return;
  auto key = std::make_pair(row, col);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    set(row, col, value);
  } else {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational LinearMap::entry(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

Vec LinearMap::apply(const Vec& v) const {
  if (v.size() != cols_) fail(Errc::bad_argument, "vector/domain dimension mismatch");
  Vec out(rows_, Rational(0));
  for (const auto& [rc, val] : entries_) {
    if (v[rc.second] != 0) out[rc.first] += val * v[rc.second];
  }
  return out;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(cols_, rows_);
  for (const auto& [rc, val] : entries_) t.set(rc.second, rc.first, val);
  return t;
}

LinearMap LinearMap::scaled(const Rational& c) const {
  LinearMap s(rows_, cols_);
  if (c == 0) return s;
  for (const auto& [rc, val] : entries_) s.set(rc.first, rc.second, val * c);
  return s;
}

LinearMap LinearMap::power(unsigned long e) const {
  if (!is_square()) fail(Errc::bad_argument, "power of non-square map");
  LinearMap acc = identity(rows_);
  for (unsigned long i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.cols_ != b.rows_) fail(Errc::bad_argument, "composition dimension mismatch");
  LinearMap c(a.rows_, b.cols_);
  // Entries of b are sorted by row, so the inner scan per a-entry is a
  // contiguous range.
  for (const auto& [rc, av] : a.entries_) {
    auto lo = b.entries_.lower_bound({rc.second, 0});
    auto hi = b.entries_.upper_bound({rc.second, b.cols_});
    for (auto it = lo; it != hi; ++it) c.add_to(rc.first, it->first.second, av * it->second);
  }
  return c;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::bad_argument, "sum dimension mismatch");
  LinearMap c = a;
  for (const auto& [rc, val] : b.entries_) c.add_to(rc.first, rc.second, val);
  return c;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  return a + b.scaled(-1);
}

bool LinearMap::operator==(const LinearMap& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

namespace {

using BigInt = mpz_class;

struct Echelon {
  std::vector<std::vector<BigInt>> mat;  // row echelon, fraction-free
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

// Fraction-free Bareiss elimination. Rows are pre-scaled to integers; the
// one-step division is exact by construction.
Echelon eliminate(const LinearMap& m, const Vec* augment) {
  std::size_t rows = m.codomain_dim();
  std::size_t cols = m.domain_dim() + (augment ? 1 : 0);
  std::vector<std::vector<Rational>> work(rows, std::vector<Rational>(cols, Rational(0)));
  for (const auto& [rc, val] : m.entries()) work[rc.first][rc.second] = val;
  if (augment) {
    for (std::size_t i = 0; i < rows; ++i) work[i][cols - 1] = (*augment)[i];
  }

  Echelon e;
  e.mat.assign(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      if (work[i][j] != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), work[i][j].get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (work[i][j] != 0) {
        Rational scaled = work[i][j] * Rational(lcm);
        scaled.canonicalize();
        e.mat[i][j] = scaled.get_num();
      }
    }
  }

  BigInt prev = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && e.mat[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) std::swap(e.mat[sel], e.mat[pivot_row]);
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt t = e.mat[i][j] * e.mat[pivot_row][col] - e.mat[i][col] * e.mat[pivot_row][j];
        mpz_divexact(e.mat[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.mat[i][col] = 0;
    }
    prev = e.mat[pivot_row][col];
    e.pivots.emplace_back(pivot_row, col);
    ++pivot_row;
  }
  return e;
}

}  // namespace

std::size_t rank(const LinearMap& m) {
  return eliminate(m, nullptr).pivots.size();
}

std::vector<Vec> kernel_basis(const LinearMap& m) {
  std::size_t n = m.domain_dim();
  Echelon e = eliminate(m, nullptr);
  std::vector<bool> is_pivot_col(n, false);
  for (auto [r, c] : e.pivots) is_pivot_col[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    Vec v(n, Rational(0));
    v[free_col] = 1;
    // Back-substitute pivot rows bottom-up.
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
      auto [r, c] = *it;
      Rational acc(0);
      for (std::size_t j = c + 1; j < n; ++j) {
        if (e.mat[r][j] != 0 && v[j] != 0) acc += Rational(e.mat[r][j]) * v[j];
      }
      Rational val = -acc / Rational(e.mat[r][c]);
      val.canonicalize();
      v[c] = val;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Vec>> eigenspace_split(const LinearMap& m,
                                               const std::vector<Rational>& eigenvalues) {
  if (!m.is_square()) fail(Errc::bad_argument, "eigenspace split of non-square map");
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
      if (eigenvalues[i] == eigenvalues[j]) fail(Errc::bad_argument, "repeated eigenvalue");

  std::size_t n = m.domain_dim();
  std::vector<std::vector<Vec>> spaces;
  std::size_t total = 0;
  for (const Rational& lambda : eigenvalues) {
    LinearMap shifted = m - LinearMap::identity(n).scaled(lambda);
    spaces.push_back(kernel_basis(shifted));
    total += spaces.back().size();
  }
  if (total != n)
    fail(Errc::not_diagonalizable,
         "eigenspaces span dimension " + std::to_string(total) + " of " + std::to_string(n));
  return spaces;
}

std::optional<Vec> solve(const LinearMap& a, const Vec& b) {
  if (b.size() != a.codomain_dim()) fail(Errc::bad_argument, "rhs dimension mismatch");
  std::size_t n = a.domain_dim();
  Echelon e = eliminate(a, &b);
  for (auto [r, c] : e.pivots) {
    if (c == n) return std::nullopt;  // pivot in augmented column
  }
  Vec v(n, Rational(0));
  for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
    auto [r, c] = *it;
    Rational acc = Rational(e.mat[r][n]);
    for (std::size_t j = c + 1; j < n; ++j) {
      if (e.mat[r][j] != 0 && v[j] != 0) acc -= Rational(e.mat[r][j]) * v[j];
    }
    Rational val = acc / Rational(e.mat[r][c]);
    val.canonicalize();
    v[c] = val;
  }
  return v;
}

LinearMap inverse(const LinearMap& m) {
  if (!m.is_square()) fail(Errc::not_invertible, "inverse of non-square map");
  std::size_t n = m.domain_dim();
  // Gauss-Jordan on [m | I] in one pass.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (const auto& [rc, val] : m.entries()) a[rc.first][rc.second] = val;
  for (std::size_t i = 0; i < n; ++i) a[i][n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) fail(Errc::not_invertible, "singular map");
    if (sel != col) std::swap(a[sel], a[col]);
    Rational pivot = a[col][col];
    for (std::size_t j = col; j < 2 * n; ++j) {
      if (a[col][j] != 0) {
        a[col][j] /= pivot;
        a[col][j].canonicalize();
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < 2 * n; ++j) {
        if (a[col][j] != 0) a[i][j] -= f * a[col][j];
      }
    }
  }
  LinearMap inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][n + j] != 0) inv.set(i, j, a[i][n + j]);
  return inv;
}

LinearMap adjoint_wrt_pairing(const LinearMap& m, const LinearMap& pairing_domain,
                              const LinearMap& pairing_codomain) {
  std::size_t dv = m.domain_dim();
  std::size_t dw = m.codomain_dim();
  if (pairing_domain.domain_dim() != dv || pairing_domain.codomain_dim() != dv ||
      pairing_codomain.domain_dim() != dw || pairing_codomain.codomain_dim() != dw)
    fail(Errc::bad_argument, "pairing dimension mismatch");
  // <a(w), v>_dom = <w, m(v)>_cod  forces  P_dom^T a = m^T P_cod^T.
  LinearMap lhs = pairing_domain.transpose();
  LinearMap rhs = m.transpose() * pairing_codomain.transpose();
  LinearMap adj(dv, dw);
  for (std::size_t j = 0; j < dw; ++j) {
    Vec col(dv, Rational(0));
    for (std::size_t i = 0; i < dv; ++i) col[i] = rhs.entry(i, j);
    auto x = solve(lhs, col);
    if (!x) fail(Errc::degenerate_pairing, "singular pairing matrix");
    for (std::size_t i = 0; i < dv; ++i) adj.set(i, j, (*x)[i]);
  }
  // A degenerate pairing admits a solution for special right-hand sides;
  // reject it regardless.
  if (rank(pairing_domain) != dv || rank(pairing_codomain) != dw)
    fail(Errc::degenerate_pairing, "singular pairing matrix");
  return adj;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec scaled_vec(const Vec& v, const Rational& c) {
  Vec out(v.size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

Vec add_vec(const Vec& a, const Vec& b) {
  Vec out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub_vec(const Vec& a, const Vec& b) {
  Vec out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace sl2chow
