#include "cubic4/diaggroup.hpp"

#include <stdexcept>

namespace cf {

DiagonalSymmetryGroup symmetry_group(const MonomialSet &A) {
  if (A.empty()) throw std::invalid_argument("empty monomial set");
  std::size_t n = A.items[0].vars();
  DiagonalSymmetryGroup G;
  G.base_monomial = A.items[0];
  IntMatrix L(A.size(), n);
  for (std::size_t r = 1; r < A.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) L(r - 1, j) = A.items[r].e[j] - G.base_monomial.e[j];
  L(A.size() - 1, 0) = 1;
  G.difference_lattice = std::move(L);
  G.structure = cokernel_structure(G.difference_lattice, n);
  for (std::size_t i = 0; i < G.structure.invariant_factors.size(); ++i) {
    Signature s;
    s.modulus = G.structure.invariant_factors[i];
    for (auto &x : G.structure.generators[i]) s.c.push_back(x.convert_to<std::int64_t>());
    G.generator_signatures.push_back(std::move(s));
  }
  return G;
}

MonomialSet closure(const DiagonalSymmetryGroup &G) {
  const Monomial &m0 = G.base_monomial;
  IntMatrix H = hermite_normal_form(G.difference_lattice);
  std::vector<Monomial> out;
  for (auto &m : all_monomials(m0.vars(), m0.degree())) {
    std::vector<std::int64_t> v(m0.vars());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = m.e[j] - m0.e[j];
    if (lattice_contains(H, v)) out.push_back(m);
  }
  return MonomialSet(std::move(out));
}

MonomialSet closure(const MonomialSet &A) { return closure(symmetry_group(A)); }

std::vector<GeneratorMatrix> generator_matrices(const DiagonalSymmetryGroup &G) {
  if (G.continuous()) throw std::domain_error("group has a continuous part");
  std::vector<GeneratorMatrix> out;
  for (auto &s : G.generator_signatures) out.push_back({s.modulus, s.c});
  return out;
}

std::vector<std::int64_t> joint_weight(const DiagonalSymmetryGroup &G, const Monomial &m) {
  std::vector<std::int64_t> w;
  for (auto &s : G.generator_signatures) w.push_back(weight(s, m));
  return w;
}

WeightClasses eigencharacter_partition(const DiagonalSymmetryGroup &G) {
  if (G.continuous()) throw std::domain_error("group has a continuous part");
  WeightClasses cls;
  const Monomial &m0 = G.base_monomial;
  for (auto &m : all_monomials(m0.vars(), m0.degree())) cls[joint_weight(G, m)].insert(m);
  return cls;
}

} // namespace cf
