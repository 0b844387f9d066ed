#pragma once
// Independent brute-force oracles shared by the unit tests and the acceptance binary.

#include "cubic4/cubicdomain.hpp"
#include "cubic4/lattice.hpp"
#include "cubic4/pauli.hpp"
#include "cubic4/smoothcert.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace oracle {

using namespace cf;

// number of c in (Z/e)^6 with c_0 = 0 giving all monomials of A one weight
inline std::uint64_t brute_force_group_order(const MonomialSet &A, std::int64_t e) {
  std::vector<std::vector<int>> ms;
  for (auto &m : A) ms.push_back(m.e);
  std::uint64_t count = 0;
  std::array<std::int64_t, 6> c{};
  std::uint64_t total = 1;
  for (int i = 0; i < 5; ++i) total *= std::uint64_t(e);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto x = code;
    for (int i = 1; i < 6; ++i) c[i] = std::int64_t(x % e), x /= e;
    std::int64_t w0 = -1;
    bool ok = true;
    for (auto &m : ms) {
      std::int64_t w = 0;
      for (int i = 0; i < 6; ++i) w += m[i] * c[i];
      w %= e;
      if (w0 < 0)
        w0 = w;
      else if (w != w0) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

// element-order profile of Z/d_1 + ... + Z/d_r; determines a finite abelian group
using Profile = std::map<std::int64_t, std::int64_t>;

struct SmallAbelian {
  std::vector<std::int64_t> d;
  std::int64_t order() const {
    return std::accumulate(d.begin(), d.end(), std::int64_t(1), std::multiplies<>());
  }
  std::vector<std::int64_t> digits(std::int64_t x) const {
    std::vector<std::int64_t> v;
    for (auto di : d) v.push_back(x % di), x /= di;
    return v;
  }
  std::int64_t index(const std::vector<std::int64_t> &v) const {
    std::int64_t x = 0, mul = 1;
    for (std::size_t i = 0; i < d.size(); ++i) x += v[i] * mul, mul *= d[i];
    return x;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    auto va = digits(a), vb = digits(b);
    for (std::size_t i = 0; i < d.size(); ++i) va[i] = (va[i] + vb[i]) % d[i];
    return index(va);
  }
  std::int64_t elem_order(std::int64_t a) const {
    std::int64_t o = 1;
    auto v = digits(a);
    for (std::size_t i = 0; i < d.size(); ++i) o = std::lcm(o, d[i] / std::gcd(v[i], d[i]));
    return o;
  }
};

inline Profile profile_of_subset(const SmallAbelian &H, std::uint64_t mask) {
  Profile p;
  for (std::int64_t a = 0; a < H.order(); ++a)
    if (mask >> a & 1) ++p[H.elem_order(a)];
  return p;
}

inline Profile profile(const std::vector<std::int64_t> &d) {
  SmallAbelian G{d};
  Profile p;
  for (std::int64_t a = 0; a < G.order(); ++a) ++p[G.elem_order(a)];
  return p;
}

// order-profiles of all subgroups of H (|H| <= 64), by closure under adding one element
inline std::set<Profile> subgroup_profiles(const std::vector<std::int64_t> &d) {
  SmallAbelian H{d};
  auto n = H.order();
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> todo{1};
  while (!todo.empty()) {
    auto S = todo.back();
    todo.pop_back();
    for (std::int64_t h = 0; h < n; ++h) {
      if (S >> h & 1) continue;
      std::uint64_t T = 0;
      std::int64_t kh = 0;
      do {
        for (std::int64_t s = 0; s < n; ++s)
          if (S >> s & 1) T |= std::uint64_t(1) << H.add(s, kh);
        kh = H.add(kh, h);
      } while (kh != 0);
      if (seen.insert(T).second) todo.push_back(T);
    }
  }
  std::set<Profile> out;
  for (auto S : seen) out.insert(profile_of_subset(H, S));
  return out;
}

// all finite abelian groups of order <= n, as invariant factor lists
inline std::vector<std::vector<std::int64_t>> abelian_groups_up_to(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::function<void(std::int64_t, std::int64_t, std::vector<std::int64_t> &)> rec;
  std::set<std::vector<std::int64_t>> uniq;
  rec = [&](std::int64_t order, std::int64_t last, std::vector<std::int64_t> &cur) {
    // cur is a chain d_1 | d_2 | ... built from the largest factor down
    uniq.insert(std::vector<std::int64_t>(cur.rbegin(), cur.rend()));
    for (std::int64_t d = 2; d <= last && order * d <= n; ++d) {
      if (last % d) continue;
      cur.push_back(d);
      rec(order * d, d, cur);
      cur.pop_back();
    }
  };
  for (std::int64_t top = 1; top <= n; ++top) {
    std::vector<std::int64_t> cur;
    if (top > 1) cur.push_back(top);
    rec(top, top, cur);
  }
  for (auto &v : uniq) out.push_back(v);
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
  std::size_t r = std::size_t(dim(rng)), c = std::size_t(dim(rng));
  std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
  for (auto &row : rows)
    for (auto &x : row) x = val(rng);
  return IntMatrix::from_rows(rows, c);
}

inline bool snf_identity_holds(const IntMatrix &M) {
  auto d = smith_normal_form(M);
  if (!(d.U * M * d.V == d.S)) return false;
  auto du = determinant(d.U), dv = determinant(d.V);
  if (abs(du) != 1 || abs(dv) != 1) return false;
  BigInt prev = 1;
  for (std::size_t i = 0; i < d.S.rows; ++i)
    for (std::size_t j = 0; j < d.S.cols; ++j) {
      if (i != j && d.S(i, j) != 0) return false;
    }
  bool zero_seen = false;
  for (std::size_t i = 0; i < std::min(d.S.rows, d.S.cols); ++i) {
    BigInt x = d.S(i, i);
    if (x < 0) return false;
    if (x == 0) {
      zero_seen = true;
      continue;
    }
    if (zero_seen || x % prev != 0) return false;
    prev = x;
  }
  return true;
}

inline fast::Mask random_mask(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> k(3, 16), pick(0, fast::kCount - 1);
  fast::Mask m = 0;
  for (int i = k(rng); i > 0; --i) m |= fast::Mask(1) << pick(rng);
  return m;
}

// optimized mask predicates against the literal set-level predicates
inline bool mask_predicates_agree(fast::Mask m) {
  auto A = fast::from_mask(m);
  if (fast::covers(m) != covers(A).ok) return false;
  auto p1 = fast::singular_pairs(m);
  auto p2 = singular_pairs(A);
  if (p1 != p2) return false;
  auto t1 = fast::singular_triples(m);
  auto t2 = singular_triples(A);
  if (t1 != t2) return false;
  std::vector<Defect> ds;
  for (auto [i, j] : p2) ds.push_back({i, j});
  for (auto t : t2) ds.push_back({t[0], t[1], t[2]});
  for (auto &d : ds) {
    if (fast::has_defect(m, d) != has_defect(A, d)) return false;
    std::vector<Monomial> a;
    for (int k : fast::resolution_menu(m, d)) a.push_back(fast::cubics()[k]);
    std::sort(a.begin(), a.end());
    auto b = resolution_menu(A, d);
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

inline MonomialMatrix random_pauli_word(std::mt19937_64 &rng, std::size_t n) {
  auto [P, W] = pauli_generators(n);
  std::uniform_int_distribution<int> len(1, 6), e(-5, 5), which(0, 1);
  auto g = MonomialMatrix::identity(n);
  for (int i = len(rng); i > 0; --i) g = compose(g, power(which(rng) ? P : W, e(rng)));
  return g;
}

// g h and h g agree up to a global phase
inline bool centrality_holds(const MonomialMatrix &g, const MonomialMatrix &h) {
  auto gh = compose(g, h), hg = compose(h, g);
  auto q = compose(gh, inverse(hg));
  return is_scalar(q) && projectively_equal(gh, hg);
}

} // namespace oracle
