#include "cubic4/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cf {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>> &rs,
                               std::size_t cols) {
  IntMatrix m(rs.size(), cols);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rs[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix &x, const IntMatrix &y) {
  if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch");
  IntMatrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

BigInt determinant(const IntMatrix &m0) {
  if (m0.rows != m0.cols) throw std::invalid_argument("not square");
  std::size_t n = m0.rows;
  if (n == 0) return 1;
  IntMatrix m = m0;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SnfDecomposition::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(S.rows, S.cols); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

BigInt floordiv(const BigInt &a, const BigInt &b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

struct Work {
  IntMatrix A, U, V;
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols; ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows; ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
  }
  // row_i -= q * row_j
  void addmul_row(std::size_t i, std::size_t j, const BigInt &q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < A.cols; ++c) A(i, c) -= q * A(j, c);
    for (std::size_t c = 0; c < U.cols; ++c) U(i, c) -= q * U(j, c);
  }
  void addmul_col(std::size_t i, std::size_t j, const BigInt &q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < A.rows; ++r) A(r, i) -= q * A(r, j);
    for (std::size_t r = 0; r < V.rows; ++r) V(r, i) -= q * V(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols; ++c) A(i, c) = -A(i, c);
    for (std::size_t c = 0; c < U.cols; ++c) U(i, c) = -U(i, c);
  }
};

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix &M) {
  Work w{M, IntMatrix::identity(M.rows), IntMatrix::identity(M.cols)};
  std::size_t m = M.rows, n = M.cols;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto pick = [&](bool whole) {
      // smallest nonzero |a| in the trailing block (or in row/column t)
      std::size_t bi = m, bj = n;
      BigInt best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (!whole && i != t && j != t) continue;
          const BigInt &x = w.A(i, j);
          if (x == 0) continue;
          BigInt ax = abs(x);
          if (bi == m || ax < best) best = ax, bi = i, bj = j;
        }
      if (bi == m) return false;
      w.swap_rows(t, bi);
      w.swap_cols(t, bj);
      return true;
    };
    if (!pick(true)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.A(i, t) == 0) continue;
        w.addmul_row(i, t, floordiv(w.A(i, t), w.A(t, t)));
        if (w.A(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.A(t, j) == 0) continue;
        w.addmul_col(j, t, floordiv(w.A(t, j), w.A(t, t)));
        if (w.A(t, j) != 0) dirty = true;
      }
      if (dirty) {
        pick(false);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.A(i, j) % w.A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      w.addmul_row(t, bad, -1);
    }
    if (w.A(t, t) < 0) w.negate_row(t);
  }
  return {std::move(w.U), std::move(w.A), std::move(w.V)};
}

BigInt AbelianGroupStructure::order() const {
  if (free_rank) throw std::domain_error("infinite group");
  BigInt o = 1;
  for (auto d : invariant_factors) o *= d;
  return o;
}

std::int64_t AbelianGroupStructure::exponent() const {
  if (free_rank) throw std::domain_error("infinite group");
  return invariant_factors.empty() ? 1 : invariant_factors.back();
}

std::string AbelianGroupStructure::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    os << (i ? "," : "") << invariant_factors[i];
  os << ']';
  if (free_rank) os << "+Z^" << free_rank;
  return os.str();
}

AbelianGroupStructure cokernel_structure(const IntMatrix &M,
                                         std::size_t ambient_rank) {
  if (M.cols != ambient_rank) throw std::invalid_argument("column count");
  auto snf = smith_normal_form(M);
  AbelianGroupStructure g;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(M.rows, M.cols); ++i) {
    const BigInt &d = snf.S(i, i);
    if (d == 0) continue;
    ++rank;
    if (d == 1) continue;
    auto di = d.convert_to<std::int64_t>();
    g.invariant_factors.push_back(di);
    std::vector<BigInt> col(ambient_rank);
    for (std::size_t r = 0; r < ambient_rank; ++r) {
      col[r] = snf.V(r, i) % d;
      if (col[r] < 0) col[r] += d;
    }
    // unit rescaling: first nonzero coordinate becomes the least positive residue
    for (std::size_t r = 0; r < ambient_rank; ++r) {
      if (col[r] == 0) continue;
      std::int64_t c = col[r].convert_to<std::int64_t>(), bu = 1, bv = c;
      for (std::int64_t u = 1; u < di; ++u) {
        if (std::gcd(u, di) != 1) continue;
        std::int64_t v = (u * c) % di;
        if (v < bv) bv = v, bu = u;
      }
      for (auto &x : col) x = (x * bu) % d;
      break;
    }
    g.generators.push_back(std::move(col));
  }
  g.free_rank = ambient_rank - rank;
  return g;
}

IntMatrix hermite_normal_form(const IntMatrix &L) {
  IntMatrix A = L;
  std::size_t m = A.rows, n = A.cols, r = 0;
  auto row_op = [&](std::size_t i, std::size_t j, const BigInt &q) {
    for (std::size_t c = 0; c < n; ++c) A(i, c) -= q * A(j, c);
  };
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // gcd-eliminate column c below row r
    for (;;) {
      std::size_t bi = m;
      for (std::size_t i = r; i < m; ++i)
        if (A(i, c) != 0 && (bi == m || abs(A(i, c)) < abs(A(bi, c)))) bi = i;
      if (bi == m) break;
      if (bi != r)
        for (std::size_t k = 0; k < n; ++k) std::swap(A(r, k), A(bi, k));
      bool more = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (A(i, c) == 0) continue;
        row_op(i, r, floordiv(A(i, c), A(r, c)));
        if (A(i, c) != 0) more = true;
      }
      if (!more) break;
    }
    if (A(r, c) == 0) continue;
    if (A(r, c) < 0)
      for (std::size_t k = 0; k < n; ++k) A(r, k) = -A(r, k);
    for (std::size_t i = 0; i < r; ++i) row_op(i, r, floordiv(A(i, c), A(r, c)));
    ++r;
  }
  IntMatrix H(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) H(i, j) = A(i, j);
  return H;
}

bool lattice_contains(const IntMatrix &L, const std::vector<BigInt> &v0) {
  if (v0.size() != L.cols) throw std::invalid_argument("dimension mismatch");
  IntMatrix H = hermite_normal_form(L);
  std::vector<BigInt> v = v0;
  for (std::size_t i = 0; i < H.rows; ++i) {
    std::size_t c = 0;
    while (H(i, c) == 0) ++c;
    if (v[c] % H(i, c) != 0) return false;
    BigInt q = v[c] / H(i, c);
    for (std::size_t k = c; k < H.cols; ++k) v[k] -= q * H(i, k);
  }
  return std::all_of(v.begin(), v.end(), [](const BigInt &x) { return x == 0; });
}

bool lattice_contains(const IntMatrix &L, const std::vector<std::int64_t> &v) {
  return lattice_contains(L, std::vector<BigInt>(v.begin(), v.end()));
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

namespace {

// prime -> exponents sorted descending
std::map<std::int64_t, std::vector<int>> pparts(const std::vector<std::int64_t> &fs) {
  std::map<std::int64_t, std::vector<int>> m;
  for (auto d : fs)
    for (auto [p, e] : factorize(d)) m[p].push_back(e);
  for (auto &[p, v] : m) std::sort(v.rbegin(), v.rend());
  return m;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

} // namespace

AbelianGroupStructure canonical_group(const std::vector<std::int64_t> &factors) {
  for (auto d : factors)
    if (d < 1) throw std::invalid_argument("factor < 1");
  auto pp = pparts(factors);
  std::size_t len = 0;
  for (auto &[p, v] : pp) len = std::max(len, v.size());
  std::vector<std::int64_t> inv(len, 1);
  // largest powers go into the last factor
  for (auto &[p, v] : pp)
    for (std::size_t k = 0; k < v.size(); ++k) inv[len - 1 - k] *= ipow(p, v[k]);
  AbelianGroupStructure g;
  g.invariant_factors = inv;
  return g;
}

std::vector<std::int64_t> primary_factors(const AbelianGroupStructure &g) {
  std::vector<std::int64_t> out;
  for (auto &[p, v] : pparts(g.invariant_factors))
    for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(ipow(p, *it));
  return out;
}

std::string primary_str(const AbelianGroupStructure &g) {
  auto pf = primary_factors(g);
  if (pf.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < pf.size(); ++i) os << (i ? "+" : "") << "Z/" << pf[i];
  return os.str();
}

bool embeds(const AbelianGroupStructure &G, const AbelianGroupStructure &H) {
  if (!G.finite() || !H.finite()) throw std::domain_error("infinite group");
  auto pg = pparts(G.invariant_factors), ph = pparts(H.invariant_factors);
  for (auto &[p, gv] : pg) {
    auto it = ph.find(p);
    if (it == ph.end() || it->second.size() < gv.size()) return false;
    for (std::size_t k = 0; k < gv.size(); ++k)
      if (gv[k] > it->second[k]) return false;
  }
  return true;
}

} // namespace cf
