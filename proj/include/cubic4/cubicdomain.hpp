#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cf {

struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  int degree() const;
  std::size_t vars() const { return e.size(); }
  std::string str() const; // "x0^2*x3"
  // canonical order: descending lex on exponents, so x0^3 comes first
  bool operator<(const Monomial &o) const { return e > o.e; }
  bool operator==(const Monomial &o) const = default;
};

Monomial mono(std::initializer_list<int> idx, std::size_t vars = 6); // mono({0,0,3}) = x0^2*x3

struct MonomialSet {
  std::vector<Monomial> items; // sorted, unique

  MonomialSet() = default;
  explicit MonomialSet(std::vector<Monomial> ms);
  bool contains(const Monomial &m) const;
  void insert(const Monomial &m);
  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
  std::string str() const; // comma separated
  bool operator==(const MonomialSet &o) const = default;
  auto begin() const { return items.begin(); }
  auto end() const { return items.end(); }
};

MonomialSet set_union(const MonomialSet &a, const MonomialSet &b);
bool is_subset(const MonomialSet &a, const MonomialSet &b);

struct Signature {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> c;
  std::string str() const;
  bool operator==(const Signature &) const = default;
};

struct StructureProfile {
  int cube_count = 0;
  int longest_cycle = 0;
  std::vector<int> cycle_support; // vertices on some longest cycle
  bool operator==(const StructureProfile &) const = default;
};

// a singular pair has size 2, a triple size 3
using Defect = std::vector<int>;

struct CoverResult {
  bool ok = false;
  std::vector<int> uncovered;
};

MonomialSet all_monomials(std::size_t vars, int degree);
std::int64_t weight(const Signature &f, const Monomial &m);

CoverResult covers(const MonomialSet &A);
std::vector<std::pair<int, int>> singular_pairs(const MonomialSet &A);
std::vector<std::array<int, 3>> singular_triples(const MonomialSet &A);
bool has_defect(const MonomialSet &A, const Defect &d);
std::vector<Monomial> resolution_menu(const MonomialSet &A, const Defect &d);
StructureProfile structure_profile(const MonomialSet &A);

MonomialSet apply_permutation(const MonomialSet &A, const std::vector<int> &perm);
std::pair<MonomialSet, std::vector<int>> canonical_under_permutation(const MonomialSet &A);

// text grammar: x<i>^<e> factors joined by '*'; sets comma separated
struct ParseError {
  std::size_t pos;
  std::string msg;
};
std::optional<Monomial> parse_monomial(const std::string &s, ParseError *err = nullptr,
                                       std::size_t vars = 6, int degree = 3);
std::optional<MonomialSet> parse_set(const std::string &s, ParseError *err = nullptr,
                                     std::size_t vars = 6, int degree = 3);

// Fast (6,3) layer: a monomial set as a bitmask over the 56 cubic monomials
namespace fast {

constexpr int kVars = 6;
constexpr int kCount = 56;
using Mask = std::uint64_t;

const std::vector<Monomial> &cubics();          // canonical order
int index_of(const Monomial &m);                 // -1 if not a (6,3) monomial
int idx(int i, int j, int k);                    // x_i*x_j*x_k
Mask to_mask(const MonomialSet &A);
MonomialSet from_mask(Mask m);
const std::vector<std::array<int, 6>> &permutations(); // all 720
Mask permute(Mask m, std::size_t perm_index);
std::pair<Mask, std::size_t> canonical(Mask m);  // least image and its permutation

bool covers(Mask m);
std::vector<std::pair<int, int>> singular_pairs(Mask m);
std::vector<std::array<int, 3>> singular_triples(Mask m);
std::optional<Defect> first_defect(Mask m);
bool has_defect(Mask m, const Defect &d);
std::vector<int> resolution_menu(Mask m, const Defect &d);

} // namespace fast

} // namespace cf
