#include "cubic4/smoothcert.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cf {

bool degrevlex_greater(const std::vector<int> &a, const std::vector<int> &b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

using Key = std::uint64_t;

// Packed monomial: the total degree in the top byte, then 255 - e_v for the
// variables from last to first. Integer order on keys is degrevlex.
struct Ring {
  int n;
  Key C = 0;
  explicit Ring(int nv) : n(nv) {
    if (n < 1 || n > 7) throw std::invalid_argument("1..7 variables supported");
    for (int v = 0; v < n; ++v) C |= Key(255) << sh(v);
  }
  int sh(int v) const { return 8 * (v + 7 - n); }
  int exp(Key k, int v) const { return 255 - int(k >> sh(v) & 255); }
  int deg(Key k) const { return int(k >> 56); }
  Key key(const std::vector<int> &e) const {
    Key k = 0;
    int d = 0;
    for (int v = 0; v < n; ++v) {
      if (e[v] < 0 || e[v] > 255) throw std::invalid_argument("exponent out of range");
      k |= Key(255 - e[v]) << sh(v);
      d += e[v];
    }
    if (d > 255) throw std::invalid_argument("degree out of range");
    return k | Key(d) << 56;
  }
  std::vector<int> exps(Key k) const {
    std::vector<int> e(n);
    for (int v = 0; v < n; ++v) e[v] = exp(k, v);
    return e;
  }
  Key mul(Key a, Key b) const { return a + b - C; }
  Key div(Key a, Key b) const { return a - b + C; }
  bool divides(Key a, Key b) const {
    for (int v = 0; v < n; ++v)
      if ((a >> sh(v) & 255) < (b >> sh(v) & 255)) return false;
    return true;
  }
  Key lcm(Key a, Key b) const {
    Key r = 0;
    int d = 0;
    for (int v = 0; v < n; ++v) {
      Key x = std::min(a >> sh(v) & 255, b >> sh(v) & 255);
      r |= x << sh(v);
      d += 255 - int(x);
    }
    return r | Key(d) << 56;
  }
  std::uint8_t support(Key k) const {
    std::uint8_t m = 0;
    for (int v = 0; v < n; ++v)
      if ((k >> sh(v) & 255) != 255) m |= std::uint8_t(1u << v);
    return m;
  }
};

struct FpField {
  std::uint32_t p;
  using T = std::uint32_t;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return T((std::uint64_t(a) + b) % p); }
  T sub(T a, T b) const { return T((std::uint64_t(a) + p - b) % p); }
  T mul(T a, T b) const { return T(std::uint64_t(a) * b % p); }
  T inv(T a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return T(r);
  }
  T from(const BigRational &q) const {
    BigInt num = numerator(q) % p, den = denominator(q) % p;
    if (num < 0) num += p;
    if (den == 0) throw std::domain_error("denominator divisible by p");
    return mul(num.convert_to<T>(), inv(den.convert_to<T>()));
  }
  BigRational to(T a) const { return BigRational(a); }
};

struct QField {
  using T = BigRational;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T &a) const { return a == 0; }
  T add(const T &a, const T &b) const { return a + b; }
  T sub(const T &a, const T &b) const { return a - b; }
  T mul(const T &a, const T &b) const { return a * b; }
  T inv(const T &a) const { return 1 / a; }
  T from(const BigRational &q) const { return q; }
  BigRational to(const T &a) const { return a; }
};

template <class F> struct Engine {
  using T = typename F::T;
  using P = std::vector<std::pair<Key, T>>;
  F fld;
  Ring R;

  Engine(F f, int n) : fld(f), R(n) {}

  // f - c * m * g, with the first term of g skipped when skip is set
  P sub_mul(const P &f, std::size_t f0, const T &c, Key m, const P &g, bool skip) const {
    P r;
    r.reserve(f.size() - f0 + g.size());
    std::size_t i = f0, j = skip ? 1 : 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        r.push_back(f[i++]);
        continue;
      }
      Key gk = R.mul(m, g[j].first);
      if (i == f.size() || gk > f[i].first) {
        r.push_back({gk, fld.sub(fld.zero(), fld.mul(c, g[j].second))});
        ++j;
      } else if (gk < f[i].first) {
        r.push_back(f[i++]);
      } else {
        T v = fld.sub(f[i].second, fld.mul(c, g[j].second));
        if (!fld.is_zero(v)) r.push_back({gk, v});
        ++i, ++j;
      }
    }
    return r;
  }

  void monic(P &p) const {
    if (p.empty()) return;
    T iv = fld.inv(p[0].second);
    for (auto &t : p) t.second = fld.mul(t.second, iv);
  }

  std::vector<P> polys;
  std::vector<Key> lead;
  std::vector<std::uint8_t> lsup;

  int find_divisor(Key t, const std::vector<int> &G) const {
    std::uint8_t ts = R.support(t);
    for (int g : G)
      if ((lsup[g] & ~ts) == 0 && R.divides(lead[g], t)) return g;
    return -1;
  }

  // full reduction of f by the monic polynomials G
  P reduce(P f, const std::vector<int> &G) const {
    P r;
    std::size_t pos = 0;
    while (pos < f.size()) {
      Key t = f[pos].first;
      int g = find_divisor(t, G);
      if (g < 0) {
        r.push_back(f[pos++]);
        continue;
      }
      f = sub_mul(f, pos + 1, f[pos].second, R.div(t, lead[g]), polys[g], true);
      pos = 0;
    }
    return r;
  }

  int add(P p) {
    monic(p);
    polys.push_back(std::move(p));
    lead.push_back(polys.back()[0].first);
    lsup.push_back(R.support(lead.back()));
    return int(polys.size()) - 1;
  }

  struct Pair {
    int i, j;
    Key l;
  };

  std::vector<int> G;
  std::vector<Pair> B;

  bool coprime(Key a, Key b) const { return (R.support(a) & R.support(b)) == 0; }

  void update(int h) {
    Key H = lead[h];
    std::vector<Pair> C, D;
    for (int g : G) C.push_back({g, h, R.lcm(H, lead[g])});
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Pair &p = C[k];
      bool keep = coprime(H, lead[p.i]);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < C.size() && keep; ++q)
          if (R.divides(C[q].l, p.l)) keep = false;
        for (std::size_t q = 0; q < D.size() && keep; ++q)
          if (R.divides(D[q].l, p.l)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> nb;
    for (auto &p : B) {
      bool drop = R.divides(H, p.l) && R.lcm(H, lead[p.i]) != p.l &&
                  R.lcm(H, lead[p.j]) != p.l;
      if (!drop) nb.push_back(p);
    }
    for (auto &p : D)
      if (!coprime(H, lead[p.i])) nb.push_back(p);
    B = std::move(nb);
    std::vector<int> ng;
    for (int g : G)
      if (!R.divides(H, lead[g])) ng.push_back(g);
    ng.push_back(h);
    G = std::move(ng);
  }

  P spoly(int i, int j) const {
    Key L = R.lcm(lead[i], lead[j]);
    P a;
    for (auto &t : polys[i]) a.push_back({R.mul(R.div(L, lead[i]), t.first), t.second});
    return sub_mul(a, 0, fld.one(), R.div(L, lead[j]), polys[j], false);
  }

  std::vector<P> run(std::vector<P> in) {
    for (auto &f : in)
      if (!f.empty()) update(add(std::move(f)));
    while (!B.empty()) {
      auto it = std::min_element(B.begin(), B.end(), [&](const Pair &a, const Pair &b) {
        return a.l < b.l; // degree sits in the top byte
      });
      Pair pr = *it;
      B.erase(it);
      P h = reduce(spoly(pr.i, pr.j), G);
      if (h.empty()) continue;
      int id = add(std::move(h));
      if (R.deg(lead[id]) == 0) {
        G = {id};
        B.clear();
        break;
      }
      update(id);
    }
    // minimalize, then interreduce
    std::vector<int> mins;
    for (int g : G) {
      bool red = false;
      for (int o : G)
        if (o != g && R.divides(lead[o], lead[g]) && (lead[o] != lead[g] || o < g)) red = true;
      if (!red) mins.push_back(g);
    }
    std::sort(mins.begin(), mins.end(), [&](int a, int b) { return lead[a] < lead[b]; });
    std::vector<P> out;
    for (int g : mins) {
      std::vector<int> others;
      for (int o : mins)
        if (o != g) others.push_back(o);
      P t = reduce(polys[g], others);
      monic(t);
      out.push_back(std::move(t));
    }
    return out;
  }

  P from_public(const SparsePolynomial &f) const {
    P r;
    for (auto &t : f.terms) {
      T c = fld.from(t.c);
      if (!fld.is_zero(c)) r.push_back({R.key(t.e), c});
    }
    std::sort(r.begin(), r.end(), [](auto &a, auto &b) { return a.first > b.first; });
    return r;
  }

  SparsePolynomial to_public(const P &f, std::uint32_t p) const {
    SparsePolynomial s;
    s.p = p;
    s.nvars = std::size_t(R.n);
    for (auto &t : f) s.terms.push_back({R.exps(t.first), fld.to(t.second)});
    return s;
  }
};

void check_field(const std::vector<SparsePolynomial> &gens) {
  for (auto &g : gens)
    if (g.p != gens[0].p || g.nvars != gens[0].nvars)
      throw std::invalid_argument("mixed coefficient domains");
}

BigRational canon(const BigRational &c, std::uint32_t p) {
  if (!p) return c;
  BigInt num = numerator(c) % p, den = denominator(c) % p;
  if (num < 0) num += p;
  FpField f{p};
  return BigRational(f.mul(num.convert_to<std::uint32_t>(), f.inv(den.convert_to<std::uint32_t>())));
}

} // namespace

SparsePolynomial SparsePolynomial::from_terms(std::vector<Term> ts, std::size_t nvars,
                                              std::uint32_t p) {
  std::sort(ts.begin(), ts.end(), [](const Term &a, const Term &b) {
    return degrevlex_greater(a.e, b.e);
  });
  SparsePolynomial r;
  r.p = p;
  r.nvars = nvars;
  for (auto &t : ts) {
    if (t.e.size() != nvars) throw std::invalid_argument("exponent length");
    BigRational c = canon(t.c, p);
    if (!r.terms.empty() && r.terms.back().e == t.e) {
      r.terms.back().c = canon(r.terms.back().c + c, p);
      if (r.terms.back().c == 0) r.terms.pop_back();
    } else if (c != 0) {
      r.terms.push_back({t.e, c});
    }
  }
  return r;
}

bool SparsePolynomial::is_homogeneous() const {
  for (auto &t : terms)
    if (std::accumulate(t.e.begin(), t.e.end(), 0) != degree()) return false;
  return true;
}

int SparsePolynomial::degree() const {
  if (terms.empty()) return -1;
  return std::accumulate(terms[0].e.begin(), terms[0].e.end(), 0);
}

SparsePolynomial SparsePolynomial::reduce_mod(std::uint32_t q) const {
  if (p) throw std::invalid_argument("already over a prime field");
  return from_terms(terms, nvars, q);
}

BigRational SparsePolynomial::eval(const std::vector<BigRational> &x) const {
  BigRational s = 0;
  for (auto &t : terms) {
    BigRational v = t.c;
    for (std::size_t i = 0; i < nvars; ++i)
      for (int k = 0; k < t.e[i]; ++k) v *= x[i];
    s += v;
  }
  return canon(s, p);
}

std::string SparsePolynomial::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (auto &t : terms) {
    BigRational c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    Monomial m(t.e);
    bool constant = m.degree() == 0;
    if (c != 1 || constant) s += c.str() + (constant ? "" : "*");
    if (!constant) s += m.str();
  }
  return s;
}

bool SparsePolynomial::operator==(const SparsePolynomial &o) const {
  if (p != o.p || nvars != o.nvars || terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].e != o.terms[i].e || terms[i].c != o.terms[i].c) return false;
  return true;
}

std::optional<SparsePolynomial> parse_polynomial(const std::string &s, ParseError *err,
                                                 std::size_t nvars) {
  std::size_t i = 0, n = s.size();
  auto fail = [&](std::string msg) -> std::optional<SparsePolynomial> {
    if (err) *err = {i, std::move(msg)};
    return std::nullopt;
  };
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto number = [&](BigInt &out) {
    std::size_t st = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) return false;
    out = BigInt(s.substr(st, i - st));
    return true;
  };
  std::vector<Term> ts;
  skip();
  if (i == n) return fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (i == n) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      return fail("expected '+' or '-'");
    }
    first = false;
    BigRational c = sign;
    std::vector<int> e(nvars, 0);
    bool any = false;
    while (true) {
      skip();
      if (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
        BigInt v;
        number(v);
        c *= BigRational(v);
      } else if (i < n && s[i] == 'x') {
        ++i;
        BigInt v;
        std::size_t at = i;
        if (!number(v)) return fail("expected variable index");
        if (v >= nvars) {
          i = at;
          return fail("variable index out of range");
        }
        skip();
        int ex = 1;
        if (i < n && s[i] == '^') {
          ++i;
          skip();
          BigInt ev;
          if (!number(ev)) return fail("expected exponent");
          ex = ev.convert_to<int>();
        }
        e[v.convert_to<std::size_t>()] += ex;
      } else {
        return fail("expected coefficient or variable");
      }
      any = true;
      skip();
      if (i < n && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) return fail("empty term");
    ts.push_back({e, c});
  }
  return SparsePolynomial::from_terms(std::move(ts), nvars);
}

SparsePolynomial poly_add(const SparsePolynomial &a, const SparsePolynomial &b) {
  if (a.p != b.p || a.nvars != b.nvars) throw std::invalid_argument("domain mismatch");
  std::vector<Term> ts = a.terms;
  ts.insert(ts.end(), b.terms.begin(), b.terms.end());
  return SparsePolynomial::from_terms(std::move(ts), a.nvars, a.p);
}

SparsePolynomial poly_mul(const SparsePolynomial &a, const SparsePolynomial &b) {
  if (a.p != b.p || a.nvars != b.nvars) throw std::invalid_argument("domain mismatch");
  std::vector<Term> ts;
  for (auto &x : a.terms)
    for (auto &y : b.terms) {
      std::vector<int> e(a.nvars);
      for (std::size_t i = 0; i < a.nvars; ++i) e[i] = x.e[i] + y.e[i];
      ts.push_back({e, x.c * y.c});
    }
  return SparsePolynomial::from_terms(std::move(ts), a.nvars, a.p);
}

SparsePolynomial poly_scale(const SparsePolynomial &a, const BigRational &c) {
  std::vector<Term> ts = a.terms;
  for (auto &t : ts) t.c *= c;
  return SparsePolynomial::from_terms(std::move(ts), a.nvars, a.p);
}

SparsePolynomial poly_var(std::size_t i, std::size_t nvars, std::uint32_t p) {
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  return SparsePolynomial::from_terms({{e, 1}}, nvars, p);
}

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators[0].degree() == 0;
}

std::vector<SparsePolynomial> partials(const SparsePolynomial &F) {
  std::vector<SparsePolynomial> out;
  for (std::size_t v = 0; v < F.nvars; ++v) {
    std::vector<Term> ts;
    for (auto &t : F.terms) {
      if (!t.e[v]) continue;
      Term d = t;
      d.c *= t.e[v];
      d.e[v]--;
      ts.push_back(std::move(d));
    }
    out.push_back(SparsePolynomial::from_terms(std::move(ts), F.nvars, F.p));
  }
  return out;
}

template <class F>
static GroebnerBasis run_engine(F fld, const std::vector<SparsePolynomial> &gens) {
  Engine<F> eng(fld, int(gens[0].nvars));
  std::vector<typename Engine<F>::P> in;
  for (auto &g : gens) in.push_back(eng.from_public(g));
  GroebnerBasis B;
  for (auto &p : eng.run(std::move(in))) B.generators.push_back(eng.to_public(p, gens[0].p));
  return B;
}

GroebnerBasis groebner(const std::vector<SparsePolynomial> &gens) {
  if (gens.empty()) return {};
  check_field(gens);
  if (gens[0].p) return run_engine(FpField{gens[0].p}, gens);
  return run_engine(QField{}, gens);
}

template <class F>
static SparsePolynomial nf_engine(F fld, const SparsePolynomial &f, const GroebnerBasis &B) {
  Engine<F> eng(fld, int(f.nvars));
  std::vector<int> G;
  for (auto &g : B.generators) {
    if (g.is_zero()) continue;
    G.push_back(eng.add(eng.from_public(g)));
  }
  return eng.to_public(eng.reduce(eng.from_public(f), G), f.p);
}

SparsePolynomial normal_form(const SparsePolynomial &f, const GroebnerBasis &B) {
  for (auto &g : B.generators)
    if (g.p != f.p || g.nvars != f.nvars) throw std::invalid_argument("domain mismatch");
  if (f.p) return nf_engine(FpField{f.p}, f, B);
  return nf_engine(QField{}, f, B);
}

SparsePolynomial s_polynomial(const SparsePolynomial &f, const SparsePolynomial &g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<int> L(f.nvars), a(f.nvars), b(f.nvars);
  for (std::size_t i = 0; i < f.nvars; ++i) {
    L[i] = std::max(f.terms[0].e[i], g.terms[0].e[i]);
    a[i] = L[i] - f.terms[0].e[i];
    b[i] = L[i] - g.terms[0].e[i];
  }
  auto ma = SparsePolynomial::from_terms({{a, 1 / f.terms[0].c}}, f.nvars, f.p);
  auto mb = SparsePolynomial::from_terms({{b, -1 / g.terms[0].c}}, f.nvars, f.p);
  return poly_add(poly_mul(ma, f), poly_mul(mb, g));
}

bool satisfies_buchberger(const GroebnerBasis &B) {
  auto &G = B.generators;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(s_polynomial(G[i], G[j]), B).is_zero()) return false;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      bool div = true;
      for (std::size_t v = 0; v < G[i].nvars; ++v)
        div = div && G[i].terms[0].e[v] <= G[j].terms[0].e[v];
      if (div) return false;
    }
  return true;
}

static int dimension_from_leads(const std::vector<std::uint8_t> &supports, int n) {
  int best = -1;
  for (unsigned S = 0; S < (1u << n); ++S) {
    bool ok = true;
    for (auto s : supports)
      if ((s & ~S) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(S));
  }
  return best;
}

int affine_dimension(const GroebnerBasis &B) {
  if (B.generators.empty()) return -2; // zero ideal handled below
  int n = int(B.generators[0].nvars);
  std::vector<std::uint8_t> sup;
  for (auto &g : B.generators) {
    std::uint8_t m = 0;
    for (int v = 0; v < n; ++v)
      if (g.terms[0].e[v]) m |= std::uint8_t(1u << v);
    sup.push_back(m);
  }
  return dimension_from_leads(sup, n);
}

std::string to_string(SmoothStatus s) {
  switch (s) {
  case SmoothStatus::CertifiedSmooth: return "CertifiedSmooth";
  case SmoothStatus::SingularModulo: return "SingularModulo";
  default: return "Inconclusive";
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const std::vector<std::uint32_t> &default_primes() {
  static const std::vector<std::uint32_t> v{5, 7, 11, 101, 1009};
  return v;
}

int jacobian_dimension_mod_p(const SparsePolynomial &F0, std::uint32_t p) {
  SparsePolynomial F = F0.p == p ? F0 : F0.reduce_mod(p);
  std::vector<SparsePolynomial> gens{F};
  for (auto &d : partials(F)) gens.push_back(d);
  Engine<FpField> eng(FpField{p}, int(F.nvars));
  std::vector<Engine<FpField>::P> in;
  for (auto &g : gens) in.push_back(eng.from_public(g));
  auto basis = eng.run(std::move(in));
  std::vector<std::uint8_t> sup;
  for (auto &b : basis) sup.push_back(eng.R.support(b[0].first));
  return dimension_from_leads(sup, int(F.nvars));
}

std::vector<std::vector<std::int64_t>> singular_points_bruteforce(const SparsePolynomial &F0,
                                                                  std::uint32_t p) {
  if (p > 7 || !is_prime(p)) throw std::invalid_argument("brute force needs a prime p <= 7");
  SparsePolynomial F = F0.p == p ? F0 : F0.reduce_mod(p);
  if (F.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<SparsePolynomial> sys{F};
  for (auto &d : partials(F)) sys.push_back(d);
  std::size_t n = F.nvars;
  struct T {
    std::vector<int> e;
    std::uint32_t c;
  };
  std::vector<std::vector<T>> ev;
  for (auto &f : sys) {
    std::vector<T> ts;
    for (auto &t : f.terms) ts.push_back({t.e, numerator(t.c).convert_to<std::uint32_t>()});
    ev.push_back(std::move(ts));
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n);
  std::vector<std::vector<std::uint32_t>> pw(n, std::vector<std::uint32_t>(8));
  // projective points: first nonzero coordinate is 1
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::size_t tail = n - lead - 1, total = 1;
    for (std::size_t k = 0; k < tail; ++k) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
      std::fill(x.begin(), x.end(), 0);
      x[lead] = 1;
      std::size_t c = code;
      for (std::size_t k = lead + 1; k < n; ++k) x[k] = std::int64_t(c % p), c /= p;
      for (std::size_t v = 0; v < n; ++v) {
        pw[v][0] = 1;
        for (int k = 1; k < 8; ++k) pw[v][k] = std::uint32_t(pw[v][k - 1] * x[v] % p);
      }
      bool all = true;
      for (auto &f : ev) {
        std::uint64_t s = 0;
        for (auto &t : f) {
          std::uint64_t v = t.c;
          for (std::size_t i = 0; i < n; ++i)
            if (t.e[i]) v = v * pw[i][t.e[i]] % p;
          s += v;
        }
        if (s % p) {
          all = false;
          break;
        }
      }
      if (all) out.push_back(x);
    }
  }
  return out;
}

SmoothnessVerdict is_smooth_mod_p(const SparsePolynomial &F0, std::uint32_t p) {
  if (!is_prime(p) || p == 2 || p == 3) throw std::invalid_argument("bad prime");
  SparsePolynomial F = F0.p == p ? F0 : F0.reduce_mod(p);
  if (F.is_zero()) throw std::invalid_argument("zero polynomial");
  SmoothnessVerdict v;
  v.dimension = jacobian_dimension_mod_p(F, p);
  v.primes = {p};
  if (v.dimension <= 0) {
    v.status = SmoothStatus::CertifiedSmooth;
    return v;
  }
  v.status = SmoothStatus::SingularModulo;
  if (p <= 7) {
    auto pts = singular_points_bruteforce(F, p);
    if (!pts.empty()) v.witness = pts[0];
  }
  return v;
}

static bool singular_over_Q(const SparsePolynomial &F, const std::vector<std::int64_t> &x) {
  std::vector<BigRational> q(x.begin(), x.end());
  if (F.eval(q) != 0) return false;
  for (auto &d : partials(F))
    if (d.eval(q) != 0) return false;
  return std::any_of(x.begin(), x.end(), [](std::int64_t t) { return t != 0; });
}

SmoothnessVerdict certify_over_Q(const SparsePolynomial &F,
                                 const std::vector<std::uint32_t> &primes) {
  if (primes.empty()) throw std::invalid_argument("empty prime list");
  if (F.p) throw std::invalid_argument("integer form expected");
  for (auto &t : F.terms)
    if (denominator(t.c) != 1) throw std::invalid_argument("integer coefficients expected");
  SmoothnessVerdict out;
  std::vector<std::vector<std::int64_t>> cands;
  for (auto p : primes) {
    out.primes.push_back(p);
    if (F.reduce_mod(p).is_zero()) continue;
    auto v = is_smooth_mod_p(F, p);
    out.dimension = v.dimension;
    if (v.status == SmoothStatus::CertifiedSmooth) {
      v.primes = {p};
      return v;
    }
    if (v.witness) {
      auto w = *v.witness;
      cands.push_back(w);
      for (auto &c : w)
        if (c > std::int64_t(p) / 2) c -= p;
      cands.push_back(w);
    }
  }
  // small integer points as extra candidates
  std::size_t n = F.nvars;
  std::vector<std::int64_t> x(n);
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t k = 0; k < n; ++k) x[k] = std::int64_t(c % 3) - 1, c /= 3;
    cands.push_back(x);
  }
  for (auto &w : cands)
    if (singular_over_Q(F, w)) {
      out.status = SmoothStatus::SingularModulo;
      out.witness = w;
      return out;
    }
  out.status = SmoothStatus::Inconclusive;
  return out;
}

SparsePolynomial generic_member(const MonomialSet &S, std::uint32_t p, std::uint64_t seed) {
  if (S.empty()) throw std::invalid_argument("empty monomial set");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1, p - 1);
  std::vector<Term> ts;
  for (auto &m : S) ts.push_back({m.e, BigRational(dist(rng))});
  return SparsePolynomial::from_terms(std::move(ts), S.items[0].vars(), p);
}

} // namespace cf
