#pragma once

#include "cubic4/cubicdomain.hpp"
#include "cubic4/lattice.hpp"

#include <map>

namespace cf {

struct DiagonalSymmetryGroup {
  AbelianGroupStructure structure;
  std::vector<Signature> generator_signatures;
  Monomial base_monomial;
  IntMatrix difference_lattice; // rows m - m0, then the row e_0
  bool continuous() const { return structure.free_rank > 0; }
};

DiagonalSymmetryGroup symmetry_group(const MonomialSet &A);
MonomialSet closure(const MonomialSet &A);
MonomialSet closure(const DiagonalSymmetryGroup &G);

struct GeneratorMatrix {
  std::int64_t root_order;
  std::vector<std::int64_t> exponents; // diag(w^c_0, ..., w^c_5)
};
std::vector<GeneratorMatrix> generator_matrices(const DiagonalSymmetryGroup &G);

// joint weight vector -> monomials of M carrying it
using WeightClasses = std::map<std::vector<std::int64_t>, MonomialSet>;
WeightClasses eigencharacter_partition(const DiagonalSymmetryGroup &G);
std::vector<std::int64_t> joint_weight(const DiagonalSymmetryGroup &G, const Monomial &m);

} // namespace cf
