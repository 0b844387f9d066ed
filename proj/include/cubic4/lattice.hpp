#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace cf {

using BigInt = boost::multiprecision::mpz_int;

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>> &rs,
                             std::size_t cols);

  BigInt &operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const BigInt &operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
  bool operator==(const IntMatrix &) const = default;
};

IntMatrix operator*(const IntMatrix &x, const IntMatrix &y);
BigInt determinant(const IntMatrix &m); // Bareiss, square only

struct SnfDecomposition {
  IntMatrix U, S, V;
  std::vector<BigInt> diagonal() const;
};

// U*M*V = S, S diagonal with d_1 | d_2 | ... (zeros last)
SnfDecomposition smith_normal_form(const IntMatrix &M);

struct AbelianGroupStructure {
  std::vector<std::int64_t> invariant_factors; // each >= 2, d_i | d_{i+1}
  std::size_t free_rank = 0;
  // integer lifts of the cyclic generators (one per invariant factor)
  std::vector<std::vector<BigInt>> generators;

  bool finite() const { return free_rank == 0; }
  BigInt order() const;
  std::int64_t exponent() const;
  std::string str() const; // "[3,3,9]" or "[2]+Z^1"
  bool isomorphic(const AbelianGroupStructure &o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
};

AbelianGroupStructure cokernel_structure(const IntMatrix &M,
                                         std::size_t ambient_rank);

// Row-style Hermite normal form: rows of the result are a basis of rowspan(L)
IntMatrix hermite_normal_form(const IntMatrix &L);
bool lattice_contains(const IntMatrix &L, const std::vector<BigInt> &v);
bool lattice_contains(const IntMatrix &L, const std::vector<std::int64_t> &v);

AbelianGroupStructure canonical_group(const std::vector<std::int64_t> &factors);
// prime-power decomposition, sorted by prime then exponent
std::vector<std::int64_t> primary_factors(const AbelianGroupStructure &g);
std::string primary_str(const AbelianGroupStructure &g); // "Z/3+Z/7"
bool embeds(const AbelianGroupStructure &G, const AbelianGroupStructure &H);

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

} // namespace cf
