#pragma once

#include "cubic4/cubicdomain.hpp"
#include "cubic4/lattice.hpp"
#include "cubic4/smoothcert.hpp"

#include <stdexcept>

namespace cf {

// Substitution z_i -> zeta_N^{phase[i]} z_{perm[i]}: the matrix with entry
// zeta^{phase[i]} at row perm[i], column i.
struct MonomialMatrix {
  std::vector<int> perm;
  std::vector<std::int64_t> phase;
  std::int64_t order = 1; // N

  std::size_t size() const { return perm.size(); }
  static MonomialMatrix identity(std::size_t n, std::int64_t N = 1);
  static MonomialMatrix diagonal(std::vector<std::int64_t> phase, std::int64_t N);
  MonomialMatrix with_order(std::int64_t N) const; // N must be a multiple of order
  std::string str() const;
  bool operator==(const MonomialMatrix &) const = default;
};

struct PauliError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::pair<MonomialMatrix, MonomialMatrix> pauli_generators(std::size_t n);
MonomialMatrix compose(const MonomialMatrix &a, const MonomialMatrix &b); // a after b
MonomialMatrix power(const MonomialMatrix &g, std::int64_t k);
MonomialMatrix inverse(const MonomialMatrix &g);
bool is_scalar(const MonomialMatrix &g);
bool projectively_equal(const MonomialMatrix &a, const MonomialMatrix &b);
std::int64_t projective_order(const MonomialMatrix &g);

// z index of x_a (x) y_b: XFastest z = a + m*b, YFastest z = b + k*a
enum class TensorConvention { XFastest, YFastest };
MonomialMatrix tensor_embed(const MonomialMatrix &a, const MonomialMatrix &b,
                            TensorConvention conv = TensorConvention::XFastest);

std::pair<Monomial, std::int64_t> act_on_monomial(const MonomialMatrix &g, const Monomial &m);

// Word grammar: [diag(c_0,...,c_{m-1}/N)@]factor{*factor}, factor = (P|W|I)<n>[^k];
// "diag(0,1/9)@P3" is (1,w_9) (x) P_3 under XFastest.
MonomialMatrix parse_element(const std::string &s); // throws PauliError

// Projective group generated by gens; error if two generators do not commute up to scalars
struct ProjectiveGroup {
  std::vector<MonomialMatrix> elements; // one normalized lift per class
  AbelianGroupStructure structure;
};
ProjectiveGroup generate_group(const std::vector<MonomialMatrix> &gens);

struct FamilyOrbit {
  std::vector<Monomial> monomials;
  std::vector<std::int64_t> phase; // coefficient of monomials[j] is c * zeta_R^{phase[j]}
};

struct InvariantFamily {
  std::vector<MonomialMatrix> generators;
  std::vector<std::int64_t> character; // g(F) = zeta_R^{character[g]} F
  std::int64_t root_order = 1;         // R
  std::vector<FamilyOrbit> orbits;     // free orbits; dimension = orbits.size()
  std::size_t dimension() const { return orbits.size(); }
  MonomialSet support() const;
};

std::vector<InvariantFamily> invariant_cubics(const std::vector<MonomialMatrix> &gens);

// primes q = 1 mod R, smallest first, at least `from`
std::vector<std::uint32_t> primes_with_roots(std::int64_t R, std::size_t count,
                                             std::uint32_t from = 100);
std::uint64_t root_of_unity_mod(std::int64_t R, std::uint32_t q); // primitive R-th root in F_q
SparsePolynomial family_member(const InvariantFamily &fam, std::uint32_t q, std::uint64_t seed);
SparsePolynomial apply_to_polynomial(const MonomialMatrix &g, const SparsePolynomial &F,
                                     std::int64_t R);
SmoothnessVerdict certify_family(const InvariantFamily &fam, std::uint64_t seed,
                                 int draws = 6);

enum class ReductionCase { Diagonalizable, TensorD2P3, TensorD3P2, PauliCore };
std::string to_string(ReductionCase c);
ReductionCase reduction_case(const std::vector<MonomialMatrix> &G);

// shadows of a z-monomial under D_2 (x) P_3, XFastest
std::vector<int> x_shadow(const Monomial &m); // exponents of (x0, x1)
std::vector<int> y_shadow(const Monomial &m); // exponents of (y1, y2, y3)
int y_shadow_class(const std::vector<int> &y); // (i2 + 2 i3) mod 3

struct CaseFixture {
  std::string name;     // "A1", ..., "C", "D"
  std::string label;    // subcase tag
  std::vector<std::string> generators;
  AbelianGroupStructure expected;
  int pattern = 0;      // D-case: index s of z_0^2 z_s
};
std::vector<CaseFixture> load_case_fixtures(const std::string &path);

struct CaseResult {
  CaseFixture fixture;
  AbelianGroupStructure group;
  bool group_ok = false;
  std::size_t families = 0;
  std::size_t family_dimension = 0; // of the family used for certification
  SmoothnessVerdict smooth;
  bool ok() const {
    return group_ok && family_dimension > 0 && smooth.status == SmoothStatus::CertifiedSmooth;
  }
};

struct Section3Report {
  std::vector<CaseResult> cases;
  std::size_t negative_families = 0; // for the full Pauli group, must be 0
  bool ok() const;
};

// families restricted to the monomial constraints of the named case
std::vector<InvariantFamily> case_families(const CaseFixture &c,
                                           const std::vector<InvariantFamily> &fams);
CaseResult verify_case(const CaseFixture &c, std::uint64_t seed = 1);
Section3Report verify_section3(const std::string &selector = "all", std::uint64_t seed = 1);

} // namespace cf
