#pragma once

#include "cubic4/cubicdomain.hpp"
#include "cubic4/lattice.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <optional>

namespace cf {

using BigRational = boost::multiprecision::mpq_rational;

struct Term {
  std::vector<int> e;
  BigRational c;
};

// Coefficients live in F_p (stored as residues 0..p-1) when p > 0, else in Q.
// Terms are sorted by degrevlex, largest first; no zero coefficients.
struct SparsePolynomial {
  std::uint32_t p = 0;
  std::size_t nvars = 6;
  std::vector<Term> terms;

  static SparsePolynomial from_terms(std::vector<Term> ts, std::size_t nvars,
                                     std::uint32_t p = 0);
  bool is_zero() const { return terms.empty(); }
  bool is_homogeneous() const;
  int degree() const;
  SparsePolynomial reduce_mod(std::uint32_t q) const; // Q with integer coeffs -> F_q
  BigRational eval(const std::vector<BigRational> &x) const;
  std::string str() const;
  bool operator==(const SparsePolynomial &o) const;
};

// true iff a precedes b in graded reverse lexicographic order (x0 > x1 > ...)
bool degrevlex_greater(const std::vector<int> &a, const std::vector<int> &b);

std::optional<SparsePolynomial> parse_polynomial(const std::string &s,
                                                 ParseError *err = nullptr,
                                                 std::size_t nvars = 6);

SparsePolynomial poly_add(const SparsePolynomial &a, const SparsePolynomial &b);
SparsePolynomial poly_mul(const SparsePolynomial &a, const SparsePolynomial &b);
SparsePolynomial poly_scale(const SparsePolynomial &a, const BigRational &c);
SparsePolynomial poly_var(std::size_t i, std::size_t nvars, std::uint32_t p = 0);

struct GroebnerBasis {
  std::vector<SparsePolynomial> generators; // monic, reduced, sorted by leading term
  std::string order = "degrevlex";
  bool is_unit() const;
};

std::vector<SparsePolynomial> partials(const SparsePolynomial &F);
GroebnerBasis groebner(const std::vector<SparsePolynomial> &gens);
SparsePolynomial normal_form(const SparsePolynomial &f, const GroebnerBasis &B);
SparsePolynomial s_polynomial(const SparsePolynomial &f, const SparsePolynomial &g);
bool satisfies_buchberger(const GroebnerBasis &B);
int affine_dimension(const GroebnerBasis &B);

enum class SmoothStatus { CertifiedSmooth, SingularModulo, Inconclusive };
std::string to_string(SmoothStatus s);

struct SmoothnessVerdict {
  SmoothStatus status = SmoothStatus::Inconclusive;
  std::vector<std::uint32_t> primes; // certifying prime, or all primes tried
  std::optional<std::vector<std::int64_t>> witness;
  int dimension = -2;                // affine dimension of the last computation
};

bool is_prime(std::uint64_t n);
SmoothnessVerdict is_smooth_mod_p(const SparsePolynomial &F, std::uint32_t p);
SmoothnessVerdict certify_over_Q(const SparsePolynomial &F,
                                 const std::vector<std::uint32_t> &primes);
SparsePolynomial generic_member(const MonomialSet &S, std::uint32_t p, std::uint64_t seed);
std::vector<std::vector<std::int64_t>> singular_points_bruteforce(const SparsePolynomial &F,
                                                                  std::uint32_t p);

// Dimension of the singular cone of F mod p; fast path used by the enumerator
int jacobian_dimension_mod_p(const SparsePolynomial &F, std::uint32_t p);

const std::vector<std::uint32_t> &default_primes(); // 5, 7, 11, 101, 1009

} // namespace cf
