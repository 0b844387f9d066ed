#include "cubic4/pauli.hpp"
#include "cubic4/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace cf {

namespace {

std::int64_t md(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  b %= q;
  for (; e; e >>= 1, b = b * b % q)
    if (e & 1) r = r * b % q;
  return r;
}

std::pair<MonomialMatrix, MonomialMatrix> common(const MonomialMatrix &a, const MonomialMatrix &b) {
  if (a.size() != b.size()) throw PauliError("size mismatch");
  auto N = std::lcm(a.order, b.order);
  return {a.with_order(N), b.with_order(N)};
}

// normalized projective key: permutation and phases relative to phase[0]
std::vector<std::int64_t> proj_key(const MonomialMatrix &g) {
  std::vector<std::int64_t> k(g.perm.begin(), g.perm.end());
  for (auto e : g.phase) k.push_back(md(e - g.phase[0], g.order));
  return k;
}

} // namespace

MonomialMatrix MonomialMatrix::identity(std::size_t n, std::int64_t N) {
  MonomialMatrix g;
  g.perm.resize(n);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  g.phase.assign(n, 0);
  g.order = N;
  return g;
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<std::int64_t> phase, std::int64_t N) {
  if (N < 1) throw PauliError("root order < 1");
  auto g = identity(phase.size(), N);
  for (std::size_t i = 0; i < phase.size(); ++i) g.phase[i] = md(phase[i], N);
  return g;
}

MonomialMatrix MonomialMatrix::with_order(std::int64_t N) const {
  if (N % order) throw PauliError("root order must be a multiple");
  MonomialMatrix g = *this;
  for (auto &e : g.phase) e = md(e * (N / order), N);
  g.order = N;
  return g;
}

std::string MonomialMatrix::str() const {
  std::ostringstream os;
  os << "perm(";
  for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i];
  os << ") phase(";
  for (std::size_t i = 0; i < phase.size(); ++i) os << (i ? "," : "") << phase[i];
  os << ") mod " << order;
  return os.str();
}

std::pair<MonomialMatrix, MonomialMatrix> pauli_generators(std::size_t n) {
  if (n < 2) throw PauliError("n < 2");
  auto P = MonomialMatrix::identity(n, 1);
  for (std::size_t i = 0; i < n; ++i) P.perm[i] = int((i + 1) % n);
  auto W = MonomialMatrix::identity(n, std::int64_t(n));
  for (std::size_t i = 0; i < n; ++i) W.phase[i] = std::int64_t(i);
  return {P, W};
}

MonomialMatrix compose(const MonomialMatrix &a0, const MonomialMatrix &b0) {
  auto [a, b] = common(a0, b0);
  MonomialMatrix r = MonomialMatrix::identity(a.size(), a.order);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.perm[i] = a.perm[b.perm[i]];
    r.phase[i] = md(b.phase[i] + a.phase[b.perm[i]], a.order);
  }
  return r;
}

MonomialMatrix inverse(const MonomialMatrix &g) {
  MonomialMatrix r = MonomialMatrix::identity(g.size(), g.order);
  for (std::size_t i = 0; i < g.size(); ++i) {
    r.perm[g.perm[i]] = int(i);
    r.phase[g.perm[i]] = md(-g.phase[i], g.order);
  }
  return r;
}

MonomialMatrix power(const MonomialMatrix &g, std::int64_t k) {
  MonomialMatrix base = k < 0 ? inverse(g) : g;
  MonomialMatrix r = MonomialMatrix::identity(g.size(), g.order);
  for (auto e = k < 0 ? -k : k; e; e >>= 1, base = compose(base, base))
    if (e & 1) r = compose(r, base);
  return r;
}

bool is_scalar(const MonomialMatrix &g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.perm[i] != int(i) || g.phase[i] != g.phase[0]) return false;
  return true;
}

bool projectively_equal(const MonomialMatrix &a0, const MonomialMatrix &b0) {
  auto [a, b] = common(a0, b0);
  return proj_key(a) == proj_key(b);
}

std::int64_t projective_order(const MonomialMatrix &g) {
  auto h = g;
  for (std::int64_t k = 1; k <= 1000000; ++k, h = compose(h, g))
    if (is_scalar(h)) return k;
  throw PauliError("element of infinite projective order");
}

MonomialMatrix tensor_embed(const MonomialMatrix &a0, const MonomialMatrix &b0,
                            TensorConvention conv) {
  auto N = std::lcm(a0.order, b0.order);
  auto a = a0.with_order(N), b = b0.with_order(N);
  std::size_t m = a.size(), k = b.size();
  auto z = [&](std::size_t i, std::size_t j) {
    return conv == TensorConvention::XFastest ? i + m * j : j + k * i;
  };
  auto r = MonomialMatrix::identity(m * k, N);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      r.perm[z(i, j)] = int(z(a.perm[i], b.perm[j]));
      r.phase[z(i, j)] = md(a.phase[i] + b.phase[j], N);
    }
  return r;
}

std::pair<Monomial, std::int64_t> act_on_monomial(const MonomialMatrix &g, const Monomial &m) {
  if (m.vars() != g.size()) throw PauliError("size mismatch");
  std::vector<int> e(m.vars(), 0);
  std::int64_t ph = 0;
  for (std::size_t i = 0; i < m.vars(); ++i) {
    e[g.perm[i]] += m.e[i];
    ph += m.e[i] * g.phase[i];
  }
  return {Monomial(std::move(e)), md(ph, g.order)};
}

MonomialMatrix parse_element(const std::string &s) {
  std::size_t pos = 0;
  auto fail = [&](const std::string &msg) -> PauliError {
    return PauliError("at " + std::to_string(pos) + ": " + msg);
  };
  auto skip = [&] {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  };
  auto number = [&]() -> std::int64_t {
    skip();
    std::size_t st = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == st || !std::isdigit((unsigned char)s[pos - 1])) throw fail("expected integer");
    return std::stoll(s.substr(st, pos - st));
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= s.size() || s[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };

  std::optional<MonomialMatrix> diag;
  skip();
  if (s.compare(pos, 5, "diag(") == 0) {
    pos += 5;
    std::vector<std::int64_t> c{number()};
    skip();
    while (pos < s.size() && s[pos] == ',') ++pos, c.push_back(number());
    expect('/');
    auto N = number();
    if (N < 1) throw fail("root order < 1");
    expect(')');
    expect('@');
    diag = MonomialMatrix::diagonal(c, N);
  }
  std::optional<MonomialMatrix> word;
  while (true) {
    skip();
    if (pos >= s.size()) throw fail("expected P, W or I");
    char kind = s[pos];
    if (kind != 'P' && kind != 'W' && kind != 'I') throw fail("expected P, W or I");
    ++pos;
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) throw fail("expected size");
    auto n = number();
    if (n < 2 && kind != 'I') throw fail("size < 2");
    if (n < 1) throw fail("size < 1");
    std::int64_t k = 1;
    skip();
    if (pos < s.size() && s[pos] == '^') ++pos, k = number();
    MonomialMatrix f = MonomialMatrix::identity(std::size_t(n));
    if (kind != 'I') {
      auto [P, W] = pauli_generators(std::size_t(n));
      f = power(kind == 'P' ? P : W, k);
    }
    if (word && word->size() != f.size()) throw fail("size mismatch");
    word = word ? compose(*word, f) : f;
    skip();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      continue;
    }
    break;
  }
  skip();
  if (pos != s.size()) throw fail("trailing input");
  return diag ? tensor_embed(*diag, *word, TensorConvention::XFastest) : *word;
}

ProjectiveGroup generate_group(const std::vector<MonomialMatrix> &gens0) {
  if (gens0.empty()) throw PauliError("no generators");
  std::int64_t N = 1;
  for (auto &g : gens0) {
    if (g.size() != gens0[0].size()) throw PauliError("size mismatch");
    N = std::lcm(N, g.order);
  }
  std::vector<MonomialMatrix> gens;
  for (auto &g : gens0) gens.push_back(g.with_order(N));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!projectively_equal(compose(gens[i], gens[j]), compose(gens[j], gens[i])))
        throw PauliError("generators do not commute modulo scalars");

  ProjectiveGroup G;
  std::set<std::vector<std::int64_t>> seen;
  std::deque<MonomialMatrix> q{MonomialMatrix::identity(gens[0].size(), N)};
  seen.insert(proj_key(q.front()));
  while (!q.empty()) {
    auto g = q.front();
    q.pop_front();
    G.elements.push_back(g);
    for (auto &h : gens) {
      auto gh = compose(h, g);
      if (seen.insert(proj_key(gh)).second) q.push_back(gh);
    }
  }
  // |G[p^k]| = p^{sum_i min(k, a_i)} determines the p-primary part
  std::map<std::int64_t, int> ord_count;
  for (auto &g : G.elements) ++ord_count[projective_order(g)];
  std::vector<std::int64_t> factors;
  for (auto [p, e] : factorize(std::int64_t(G.elements.size()))) {
    std::vector<int> logc{0};
    for (int k = 1; k <= e; ++k) {
      std::int64_t pk = 1;
      for (int t = 0; t < k; ++t) pk *= p;
      std::int64_t c = 0;
      for (auto [o, n] : ord_count)
        if (pk % o == 0) c += n;
      int l = 0;
      while (c > 1) c /= p, ++l;
      logc.push_back(l);
    }
    // number of cyclic factors with exponent >= k is logc[k] - logc[k-1]
    for (int k = 1; k <= e; ++k) {
      int ge_k = logc[k] - logc[k - 1];
      int ge_k1 = k < e ? logc[k + 1] - logc[k] : 0;
      std::int64_t pk = 1;
      for (int t = 0; t < k; ++t) pk *= p;
      for (int t = 0; t < ge_k - ge_k1; ++t) factors.push_back(pk);
    }
  }
  G.structure = canonical_group(factors);
  return G;
}

MonomialSet InvariantFamily::support() const {
  MonomialSet s;
  for (auto &o : orbits)
    for (auto &m : o.monomials) s.insert(m);
  return s;
}

std::vector<InvariantFamily> invariant_cubics(const std::vector<MonomialMatrix> &gens0) {
  generate_group(gens0); // commutation check
  std::int64_t N = 1, E = 1;
  for (auto &g : gens0) N = std::lcm(N, g.order);
  std::vector<MonomialMatrix> gens;
  std::vector<std::int64_t> k, s;
  for (auto &g : gens0) {
    gens.push_back(g.with_order(N));
    k.push_back(projective_order(gens.back()));
    s.push_back(power(gens.back(), k.back()).phase[0]);
    E = std::lcm(E, k.back());
  }
  const std::int64_t R = N * E;

  const auto &cs = all_monomials(gens[0].size(), 3).items;
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < cs.size(); ++i) index[cs[i]] = i;
  // edges[g][m] = (image, phase in units of zeta_R)
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> edges(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (auto &m : cs) {
      auto [img, ph] = act_on_monomial(gens[g], m);
      edges[g].push_back({index.at(img), ph * E});
    }

  // lambda_g * k_g = 3 s_g E (mod R): k_g solutions spaced R / k_g apart
  std::vector<std::vector<std::int64_t>> choices(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::int64_t t = 0; t < k[g]; ++t)
      choices[g].push_back(md(3 * s[g] * E / k[g] + t * (R / k[g]), R));

  std::vector<InvariantFamily> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<std::int64_t> lam(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) lam[g] = choices[g][pick[g]];

    InvariantFamily fam;
    fam.generators = gens0;
    fam.character = lam;
    fam.root_order = R;
    std::vector<std::int64_t> b(cs.size(), -1);
    for (std::size_t start = 0; start < cs.size(); ++start) {
      if (b[start] >= 0) continue;
      std::vector<std::size_t> orbit{start};
      b[start] = 0;
      bool consistent = true;
      for (std::size_t h = 0; h < orbit.size(); ++h) {
        auto m = orbit[h];
        for (std::size_t g = 0; g < gens.size(); ++g) {
          auto [img, ph] = edges[g][m];
          auto want = md(b[m] + ph - lam[g], R);
          if (b[img] < 0) {
            b[img] = want;
            orbit.push_back(img);
          } else if (b[img] != want) {
            consistent = false;
          }
        }
      }
      if (!consistent) continue;
      FamilyOrbit o;
      std::sort(orbit.begin(), orbit.end());
      auto shift = b[orbit[0]];
      for (auto i : orbit) {
        o.monomials.push_back(cs[i]);
        o.phase.push_back(md(b[i] - shift, R));
      }
      fam.orbits.push_back(std::move(o));
    }
    if (!fam.orbits.empty()) out.push_back(std::move(fam));

    std::size_t g = 0;
    while (g < gens.size() && ++pick[g] == choices[g].size()) pick[g++] = 0;
    if (g == gens.size()) break;
  }
  return out;
}

std::vector<std::uint32_t> primes_with_roots(std::int64_t R, std::size_t count, std::uint32_t from) {
  std::vector<std::uint32_t> out;
  std::uint64_t q = (from / std::uint64_t(R)) * R + 1;
  if (q < from) q += R;
  for (; out.size() < count; q += R)
    if (q > 3 && is_prime(q)) out.push_back(std::uint32_t(q));
  return out;
}

std::uint64_t root_of_unity_mod(std::int64_t R, std::uint32_t q) {
  if ((q - 1) % R) throw PauliError("no primitive root of that order");
  auto ps = factorize(R);
  for (std::uint64_t x = 2; x < q; ++x) {
    auto z = powmod(x, (q - 1) / R, q);
    bool primitive = true;
    for (auto [p, e] : ps)
      if (powmod(z, R / p, q) == 1) primitive = false;
    if (primitive) return z;
  }
  return 1;
}

SparsePolynomial family_member(const InvariantFamily &fam, std::uint32_t q, std::uint64_t seed) {
  auto z = root_of_unity_mod(fam.root_order, q);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(1, q - 1);
  std::vector<Term> ts;
  std::size_t n = 6;
  for (auto &o : fam.orbits) {
    auto c = coef(rng);
    n = o.monomials[0].vars();
    for (std::size_t j = 0; j < o.monomials.size(); ++j)
      ts.push_back({o.monomials[j].e, BigRational(c * powmod(z, o.phase[j], q) % q)});
  }
  return SparsePolynomial::from_terms(std::move(ts), n, q);
}

SparsePolynomial apply_to_polynomial(const MonomialMatrix &g, const SparsePolynomial &F,
                                     std::int64_t R) {
  if (F.p == 0) throw PauliError("prime field polynomial required");
  if (R % g.order) throw PauliError("root order mismatch");
  auto z = root_of_unity_mod(R, F.p);
  std::vector<Term> ts;
  for (auto &t : F.terms) {
    auto [img, ph] = act_on_monomial(g, Monomial(t.e));
    ts.push_back({img.e, t.c * BigRational(powmod(z, ph * (R / g.order), F.p))});
  }
  return SparsePolynomial::from_terms(std::move(ts), F.nvars, F.p);
}

SmoothnessVerdict certify_family(const InvariantFamily &fam, std::uint64_t seed, int draws) {
  SmoothnessVerdict v;
  v.primes = primes_with_roots(fam.root_order, 2);
  if (fam.orbits.empty()) return v;
  for (auto q : v.primes)
    for (int d = 0; d < draws; ++d) {
      auto F = family_member(fam, q, seed * 1000003ULL + d * 7919ULL + q);
      v.dimension = jacobian_dimension_mod_p(F, q);
      if (v.dimension <= 0) {
        v.status = SmoothStatus::CertifiedSmooth;
        v.primes = {q};
        return v;
      }
    }
  return v;
}

std::string to_string(ReductionCase c) {
  switch (c) {
  case ReductionCase::Diagonalizable: return "Diagonalizable";
  case ReductionCase::TensorD2P3: return "TensorD2P3";
  case ReductionCase::TensorD3P2: return "TensorD3P2";
  case ReductionCase::PauliCore: return "PauliCore";
  }
  return "?";
}

ReductionCase reduction_case(const std::vector<MonomialMatrix> &G) {
  std::vector<std::pair<int, int>> ab;
  for (auto g0 : G) {
    if (g0.size() != 6) throw PauliError("generator outside P6");
    auto g = g0.with_order(std::lcm(g0.order, std::int64_t(6)));
    int a = g.perm[0];
    auto unit = g.order / 6;
    auto b = md(g.phase[1] - g.phase[0], g.order);
    if (b % unit) throw PauliError("generator outside P6");
    for (int i = 0; i < 6; ++i)
      if (g.perm[i] != (i + a) % 6 || md(g.phase[i] - g.phase[0] - i * b, g.order) != 0)
        throw PauliError("generator outside P6");
    ab.push_back({a, int(b / unit)});
  }
  std::set<std::pair<int, int>> H{{0, 0}};
  std::deque<std::pair<int, int>> q{{0, 0}};
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop_front();
    for (auto [a, b] : ab) {
      std::pair<int, int> n{(x + a) % 6, (y + b) % 6};
      if (H.insert(n).second) q.push_back(n);
    }
  }
  bool two = false, three = false;
  for (auto [a, b] : H) {
    if (a == 1 || a == 5) return ReductionCase::PauliCore;
    if (a == 2 || a == 4) two = true;
    if (a == 3) three = true;
  }
  if (two) return ReductionCase::TensorD2P3;
  if (three) return ReductionCase::TensorD3P2;
  return ReductionCase::Diagonalizable;
}

std::vector<int> x_shadow(const Monomial &m) {
  std::vector<int> x(2, 0);
  for (std::size_t z = 0; z < m.vars(); ++z) x[z % 2] += m.e[z];
  return x;
}

std::vector<int> y_shadow(const Monomial &m) {
  std::vector<int> y(3, 0);
  for (std::size_t z = 0; z < m.vars(); ++z) y[z / 2] += m.e[z];
  return y;
}

int y_shadow_class(const std::vector<int> &y) { return int(md(y[1] + 2 * y[2], 3)); }

std::vector<CaseFixture> load_case_fixtures(const std::string &path) {
  std::vector<CaseFixture> out;
  for (auto &line : read_form_lines(path)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, '|')) {
      auto a = tok.find_first_not_of(" \t"), b = tok.find_last_not_of(" \t");
      f.push_back(a == std::string::npos ? "" : tok.substr(a, b - a + 1));
    }
    if (f.size() < 4) throw std::runtime_error("bad case record: " + line);
    CaseFixture c;
    c.name = f[0];
    c.label = f[1];
    c.expected = canonical_group(parse_int_list(f[2]));
    std::stringstream gs(f[3]);
    while (std::getline(gs, tok, ';')) {
      auto a = tok.find_first_not_of(" \t"), b = tok.find_last_not_of(" \t");
      if (a != std::string::npos) c.generators.push_back(tok.substr(a, b - a + 1));
    }
    if (f.size() > 4 && !f[4].empty()) c.pattern = std::stoi(f[4]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<InvariantFamily> case_families(const CaseFixture &c,
                                           const std::vector<InvariantFamily> &fams) {
  auto is_cube = [](const Monomial &m) {
    return std::any_of(m.e.begin(), m.e.end(), [](int e) { return e == 3; });
  };
  auto has_square = [](const std::vector<int> &y) {
    return std::any_of(y.begin(), y.end(), [](int e) { return e >= 2; });
  };
  char kind = c.name.empty() ? '?' : c.name[0];
  int cls = c.name.size() > 1 ? c.name[1] - '1' : 0;

  auto allowed = [&](const Monomial &m) {
    auto x = x_shadow(m);
    auto y = y_shadow(m);
    switch (kind) {
    case 'A':
      return !(x[0] == 3 && y_shadow_class(y) != cls);
    case 'B':
      if ((x[0] == 3 || x[1] == 3) && has_square(y)) return false;
      return !(x[0] == 2 && x[1] == 1 && y_shadow_class(y) != cls);
    case 'D':
      return !is_cube(m);
    default:
      return true;
    }
  };
  auto required = [&](const Monomial &m) {
    switch (kind) {
    case 'A': {
      auto x = x_shadow(m);
      return x[0] == 3 && has_square(y_shadow(m));
    }
    case 'B': {
      auto x = x_shadow(m);
      return x[0] == 2 && x[1] == 1;
    }
    case 'C':
      return is_cube(m);
    case 'D': {
      std::vector<int> e(6, 0);
      e[0] += 2;
      e[c.pattern % 6] += 1;
      return m.e == e;
    }
    default:
      return true;
    }
  };

  std::vector<InvariantFamily> out;
  for (auto &f : fams) {
    InvariantFamily r = f;
    r.orbits.clear();
    bool found = false;
    for (auto &o : f.orbits) {
      if (!std::all_of(o.monomials.begin(), o.monomials.end(), allowed)) continue;
      found = found || std::any_of(o.monomials.begin(), o.monomials.end(), required);
      r.orbits.push_back(o);
    }
    if (found) out.push_back(std::move(r));
  }
  return out;
}

CaseResult verify_case(const CaseFixture &c, std::uint64_t seed) {
  CaseResult r;
  r.fixture = c;
  std::vector<MonomialMatrix> gens;
  for (auto &g : c.generators) gens.push_back(parse_element(g));
  r.group = generate_group(gens).structure;
  r.group_ok = r.group.isomorphic(c.expected);
  auto fams = case_families(c, invariant_cubics(gens));
  r.families = fams.size();
  for (auto &f : fams) {
    auto v = certify_family(f, seed);
    if (r.family_dimension == 0 || v.status == SmoothStatus::CertifiedSmooth) {
      r.family_dimension = f.dimension();
      r.smooth = v;
    }
    if (v.status == SmoothStatus::CertifiedSmooth) break;
  }
  return r;
}

bool Section3Report::ok() const {
  return !cases.empty() && negative_families == 0 &&
         std::all_of(cases.begin(), cases.end(), [](auto &c) { return c.ok(); });
}

Section3Report verify_section3(const std::string &selector, std::uint64_t seed) {
  static const std::set<std::string> valid{"A1", "A2", "A3", "B1", "B2", "B3", "C", "D", "all"};
  if (!valid.count(selector)) throw PauliError("unknown case selector '" + selector + "'");
  Section3Report rep;
  for (auto &c : load_case_fixtures(data_path("pauli_cases.txt")))
    if (selector == "all" || c.name == selector) rep.cases.push_back(verify_case(c, seed));
  auto [P, W] = pauli_generators(6);
  rep.negative_families = invariant_cubics({P, W}).size();
  return rep;
}

} // namespace cf
