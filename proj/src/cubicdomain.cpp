#include "cubic4/cubicdomain.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cf {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

std::string Monomial::str() const {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

Monomial mono(std::initializer_list<int> idx, std::size_t vars) {
  Monomial m(std::vector<int>(vars, 0));
  for (int i : idx) m.e.at(i)++;
  return m;
}

MonomialSet::MonomialSet(std::vector<Monomial> ms) : items(std::move(ms)) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

bool MonomialSet::contains(const Monomial &m) const {
  return std::binary_search(items.begin(), items.end(), m);
}

void MonomialSet::insert(const Monomial &m) {
  auto it = std::lower_bound(items.begin(), items.end(), m);
  if (it == items.end() || !(*it == m)) items.insert(it, m);
}

std::string MonomialSet::str() const {
  std::string s;
  for (auto &m : items) s += (s.empty() ? "" : ", ") + m.str();
  return s;
}

MonomialSet set_union(const MonomialSet &a, const MonomialSet &b) {
  std::vector<Monomial> v = a.items;
  v.insert(v.end(), b.items.begin(), b.items.end());
  return MonomialSet(std::move(v));
}

bool is_subset(const MonomialSet &a, const MonomialSet &b) {
  return std::includes(b.items.begin(), b.items.end(), a.items.begin(), a.items.end());
}

std::string Signature::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ") mod " << modulus;
  return os.str();
}

MonomialSet all_monomials(std::size_t vars, int degree) {
  if (vars < 1 || degree < 1) throw std::invalid_argument("vars, degree >= 1");
  std::vector<Monomial> out;
  std::vector<int> e(vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == vars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return MonomialSet(std::move(out));
}

std::int64_t weight(const Signature &f, const Monomial &m) {
  if (f.c.size() != m.e.size()) throw std::invalid_argument("signature length");
  std::int64_t w = 0;
  for (std::size_t i = 0; i < m.e.size(); ++i) w = (w + m.e[i] * f.c[i]) % f.modulus;
  return (w + f.modulus) % f.modulus;
}

namespace {

Monomial sq(std::size_t n, int i, int j) {
  Monomial m(std::vector<int>(n, 0));
  m.e[i] += 2;
  m.e[j] += 1;
  return m;
}

Monomial tri(std::size_t n, int i, int j, int k) {
  Monomial m(std::vector<int>(n, 0));
  m.e[i]++, m.e[j]++, m.e[k]++;
  return m;
}

std::size_t nvars(const MonomialSet &A) { return A.empty() ? 6 : A.items[0].vars(); }

bool is_cube(const MonomialSet &A, int i) { return A.contains(sq(nvars(A), i, i)); }

// literal transcription of the pair/triple conditions
bool pair_defect(const MonomialSet &A, int i, int j) {
  std::size_t n = nvars(A);
  if (is_cube(A, i) || is_cube(A, j)) return false;
  if (A.contains(sq(n, i, j)) || A.contains(sq(n, j, i))) return false;
  int hits = 0;
  for (std::size_t p = 0; p < n; ++p)
    if (A.contains(sq(n, i, p)) || A.contains(sq(n, j, p)) || A.contains(tri(n, i, j, p)))
      ++hits;
  return hits <= 1;
}

bool triple_defect(const MonomialSet &A, int i, int j, int l) {
  std::size_t n = nvars(A);
  if (is_cube(A, i) || is_cube(A, j) || is_cube(A, l)) return false;
  for (auto &m : {tri(n, i, j, l), sq(n, i, j), sq(n, j, i), sq(n, i, l), sq(n, l, i),
                  sq(n, j, l), sq(n, l, j)})
    if (A.contains(m)) return false;
  int hits = 0;
  for (std::size_t p = 0; p < n; ++p)
    if (A.contains(sq(n, i, p)) || A.contains(sq(n, j, p)) || A.contains(sq(n, l, p)) ||
        A.contains(tri(n, i, j, p)) || A.contains(tri(n, i, l, p)) ||
        A.contains(tri(n, l, j, p)))
      ++hits;
  return hits <= 2;
}

void check_cubic(const MonomialSet &A) {
  for (auto &m : A)
    if (m.degree() != 3) throw std::invalid_argument("cubic monomials expected");
}

} // namespace

CoverResult covers(const MonomialSet &A) {
  check_cubic(A);
  std::size_t n = nvars(A);
  CoverResult r;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = false;
    for (std::size_t j = 0; j < n && !ok; ++j) ok = A.contains(sq(n, i, j));
    if (!ok) r.uncovered.push_back(int(i));
  }
  r.ok = r.uncovered.empty();
  return r;
}

std::vector<std::pair<int, int>> singular_pairs(const MonomialSet &A) {
  check_cubic(A);
  int n = int(nvars(A));
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pair_defect(A, i, j)) out.push_back({i, j});
  return out;
}

std::vector<std::array<int, 3>> singular_triples(const MonomialSet &A) {
  check_cubic(A);
  int n = int(nvars(A));
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        if (triple_defect(A, i, j, l)) out.push_back({i, j, l});
  return out;
}

bool has_defect(const MonomialSet &A, const Defect &d) {
  if (d.size() == 2) return pair_defect(A, d[0], d[1]);
  if (d.size() == 3) return triple_defect(A, d[0], d[1], d[2]);
  throw std::invalid_argument("defect must be a pair or a triple");
}

std::vector<Monomial> resolution_menu(const MonomialSet &A, const Defect &d) {
  if (!has_defect(A, d)) throw std::invalid_argument("defect not present");
  std::vector<Monomial> out;
  for (auto &m : all_monomials(nvars(A), 3)) {
    if (A.contains(m)) continue;
    MonomialSet B = A;
    B.insert(m);
    if (!has_defect(B, d)) out.push_back(m);
  }
  return out;
}

StructureProfile structure_profile(const MonomialSet &A) {
  check_cubic(A);
  int n = int(nvars(A));
  StructureProfile p;
  std::vector<bool> cube(n);
  for (int i = 0; i < n; ++i) p.cube_count += (cube[i] = is_cube(A, i));
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      adj[i][j] = i != j && !cube[i] && !cube[j] && A.contains(sq(n, i, j));
  std::vector<int> path;
  std::vector<bool> on(n), support(n);
  // simple cycles whose least vertex is the start
  std::function<void(int)> dfs = [&](int v) {
    for (int w = 0; w < n; ++w) {
      if (!adj[v][w]) continue;
      if (w == path[0]) {
        int len = int(path.size());
        if (len > p.longest_cycle) {
          p.longest_cycle = len;
          std::fill(support.begin(), support.end(), false);
        }
        if (len == p.longest_cycle)
          for (int u : path) support[u] = true;
      } else if (w > path[0] && !on[w]) {
        on[w] = true;
        path.push_back(w);
        dfs(w);
        path.pop_back();
        on[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[s] = true;
    dfs(s);
    on[s] = false;
  }
  for (int i = 0; i < n; ++i)
    if (support[i]) p.cycle_support.push_back(i);
  return p;
}

MonomialSet apply_permutation(const MonomialSet &A, const std::vector<int> &perm) {
  std::vector<Monomial> out;
  for (auto &m : A) {
    Monomial r(std::vector<int>(m.vars(), 0));
    for (std::size_t i = 0; i < m.vars(); ++i) r.e[perm[i]] += m.e[i];
    out.push_back(std::move(r));
  }
  return MonomialSet(std::move(out));
}

std::pair<MonomialSet, std::vector<int>> canonical_under_permutation(const MonomialSet &A) {
  std::size_t n = nvars(A);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MonomialSet best = A;
  std::vector<int> bestp = perm;
  do {
    MonomialSet B = apply_permutation(A, perm);
    if (std::lexicographical_compare(B.items.begin(), B.items.end(), best.items.begin(),
                                     best.items.end()))
      best = std::move(B), bestp = perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, bestp};
}

namespace {

std::string trim(const std::string &s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

} // namespace

std::optional<Monomial> parse_monomial(const std::string &s, ParseError *err,
                                       std::size_t vars, int degree) {
  auto fail = [&](std::size_t pos, std::string msg) -> std::optional<Monomial> {
    if (err) *err = {pos, std::move(msg)};
    return std::nullopt;
  };
  Monomial m(std::vector<int>(vars, 0));
  std::size_t i = 0, n = s.size();
  auto skip = [&] {
    while (i < n && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  auto number = [&](long &out) {
    std::size_t st = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) return false;
    out = std::stol(s.substr(st, i - st));
    return true;
  };
  skip();
  if (i == n) return fail(i, "empty monomial");
  for (;;) {
    skip();
    if (i >= n || s[i] != 'x') return fail(i, "expected 'x'");
    ++i;
    std::size_t at = i;
    long v, e = 1;
    if (!number(v)) return fail(i, "expected variable index");
    if (v < 0 || std::size_t(v) >= vars) return fail(at, "variable index out of range");
    skip();
    if (i < n && s[i] == '^') {
      ++i;
      skip();
      if (!number(e)) return fail(i, "expected exponent");
    }
    m.e[v] += int(e);
    skip();
    if (i == n) break;
    if (s[i] != '*') return fail(i, "expected '*'");
    ++i;
  }
  if (m.degree() != degree) return fail(0, "degree must be " + std::to_string(degree));
  return m;
}

std::optional<MonomialSet> parse_set(const std::string &s, ParseError *err,
                                     std::size_t vars, int degree) {
  std::vector<Monomial> out;
  std::size_t start = 0;
  if (trim(s).empty()) return MonomialSet();
  for (;;) {
    std::size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                 : comma - start);
    ParseError e;
    auto m = parse_monomial(tok, &e, vars, degree);
    if (!m) {
      if (err) *err = {start + e.pos, e.msg};
      return std::nullopt;
    }
    out.push_back(*m);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return MonomialSet(std::move(out));
}

namespace fast {

namespace {

struct Tables {
  std::vector<Monomial> mons;
  int code[6][6][6];
  std::vector<std::array<int, 6>> perms;
  std::vector<std::array<std::uint8_t, kCount>> pimg; // monomial index images
  Mask cube = 0;
  Mask pair_menu[6][6][6];     // {x_i^2x_p, x_j^2x_p, x_ix_jx_p}
  Mask triple_menu[6][6][6][6];

  Tables() {
    mons = all_monomials(6, 3).items;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) {
          Monomial m(std::vector<int>(6, 0));
          m.e[i]++, m.e[j]++, m.e[k]++;
          code[i][j][k] = int(std::lower_bound(mons.begin(), mons.end(), m) - mons.begin());
        }
    for (int i = 0; i < 6; ++i) cube |= Mask(1) << code[i][i][i];
    std::array<int, 6> p{0, 1, 2, 3, 4, 5};
    do {
      perms.push_back(p);
      std::array<std::uint8_t, kCount> img{};
      for (int t = 0; t < kCount; ++t) {
        Monomial r(std::vector<int>(6, 0));
        for (int v = 0; v < 6; ++v) r.e[p[v]] += mons[t].e[v];
        img[t] = std::uint8_t(std::lower_bound(mons.begin(), mons.end(), r) - mons.begin());
      }
      pimg.push_back(img);
    } while (std::next_permutation(p.begin(), p.end()));
    auto b = [&](int i, int j, int k) { return Mask(1) << code[i][j][k]; };
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int q = 0; q < 6; ++q) {
          pair_menu[i][j][q] = b(i, i, q) | b(j, j, q) | b(i, j, q);
          for (int l = 0; l < 6; ++l)
            triple_menu[i][j][l][q] = b(i, i, q) | b(j, j, q) | b(l, l, q) | b(i, j, q) |
                                      b(i, l, q) | b(l, j, q);
        }
  }
};

const Tables &T() {
  static const Tables t;
  return t;
}

bool cube_var(Mask m, int i) { return m >> T().code[i][i][i] & 1; }
bool has(Mask m, int i, int j, int k) { return m >> T().code[i][j][k] & 1; }

bool pair_bad(Mask m, int i, int j) {
  const auto &t = T();
  if (cube_var(m, i) || cube_var(m, j) || has(m, i, i, j) || has(m, j, j, i)) return false;
  int hits = 0;
  for (int p = 0; p < 6; ++p) hits += (m & t.pair_menu[i][j][p]) != 0;
  return hits <= 1;
}

bool triple_bad(Mask m, int i, int j, int l) {
  const auto &t = T();
  if (cube_var(m, i) || cube_var(m, j) || cube_var(m, l)) return false;
  if (has(m, i, j, l) || has(m, i, i, j) || has(m, j, j, i) || has(m, i, i, l) ||
      has(m, l, l, i) || has(m, j, j, l) || has(m, l, l, j))
    return false;
  int hits = 0;
  for (int p = 0; p < 6; ++p) hits += (m & t.triple_menu[i][j][l][p]) != 0;
  return hits <= 2;
}

} // namespace

const std::vector<Monomial> &cubics() { return T().mons; }

int index_of(const Monomial &m) {
  if (m.vars() != 6 || m.degree() != 3) return -1;
  const auto &v = T().mons;
  auto it = std::lower_bound(v.begin(), v.end(), m);
  return it != v.end() && *it == m ? int(it - v.begin()) : -1;
}

int idx(int i, int j, int k) { return T().code[i][j][k]; }

Mask to_mask(const MonomialSet &A) {
  Mask r = 0;
  for (auto &m : A) {
    int k = index_of(m);
    if (k < 0) throw std::invalid_argument("not a cubic monomial in 6 variables");
    r |= Mask(1) << k;
  }
  return r;
}

MonomialSet from_mask(Mask m) {
  std::vector<Monomial> out;
  for (int k = 0; k < kCount; ++k)
    if (m >> k & 1) out.push_back(T().mons[k]);
  return MonomialSet(std::move(out));
}

const std::vector<std::array<int, 6>> &permutations() { return T().perms; }

Mask permute(Mask m, std::size_t pi) {
  const auto &img = T().pimg[pi];
  Mask r = 0;
  while (m) {
    int k = __builtin_ctzll(m);
    m &= m - 1;
    r |= Mask(1) << img[k];
  }
  return r;
}

// a precedes b iff the lowest differing bit is set in a
static bool mask_less(Mask a, Mask b) {
  Mask d = a ^ b;
  return d && (a & d & (~d + 1));
}

std::pair<Mask, std::size_t> canonical(Mask m) {
  Mask best = m;
  std::size_t bp = 0;
  for (std::size_t p = 0; p < T().perms.size(); ++p) {
    Mask q = permute(m, p);
    if (mask_less(q, best)) best = q, bp = p;
  }
  return {best, bp};
}

bool covers(Mask m) {
  for (int i = 0; i < 6; ++i) {
    bool ok = false;
    for (int j = 0; j < 6 && !ok; ++j) ok = has(m, i, i, j);
    if (!ok) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> singular_pairs(Mask m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (pair_bad(m, i, j)) out.push_back({i, j});
  return out;
}

std::vector<std::array<int, 3>> singular_triples(Mask m) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int l = j + 1; l < 6; ++l)
        if (triple_bad(m, i, j, l)) out.push_back({i, j, l});
  return out;
}

std::optional<Defect> first_defect(Mask m) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (pair_bad(m, i, j)) return Defect{i, j};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int l = j + 1; l < 6; ++l)
        if (triple_bad(m, i, j, l)) return Defect{i, j, l};
  return std::nullopt;
}

bool has_defect(Mask m, const Defect &d) {
  if (d.size() == 2) return pair_bad(m, d[0], d[1]);
  if (d.size() == 3) return triple_bad(m, d[0], d[1], d[2]);
  throw std::invalid_argument("defect must be a pair or a triple");
}

std::vector<int> resolution_menu(Mask m, const Defect &d) {
  if (!has_defect(m, d)) throw std::invalid_argument("defect not present");
  std::vector<int> out;
  for (int k = 0; k < kCount; ++k)
    if (!(m >> k & 1) && !has_defect(m | Mask(1) << k, d)) out.push_back(k);
  return out;
}

} // namespace fast

} // namespace cf
