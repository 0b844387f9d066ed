#include "cubic4/diaggroup.hpp"
#include "cubic4/fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cf;

namespace {
MonomialSet S(const std::string &s) {
  auto r = parse_set(s);
  REQUIRE(r.has_value());
  return *r;
}
} // namespace

TEST_CASE("fermat") {
  auto G = symmetry_group(S("x0^3,x1^3,x2^3,x3^3,x4^3,x5^3"));
  CHECK(G.structure.invariant_factors == std::vector<std::int64_t>{3, 3, 3, 3, 3});
  CHECK(closure(G) == S("x0^3,x1^3,x2^3,x3^3,x4^3,x5^3"));
  CHECK(G.base_monomial.str() == "x0^3");
}

TEST_CASE("six cycle and five chain") {
  auto cyc = symmetry_group(S("x0^2*x1,x1^2*x2,x2^2*x3,x3^2*x4,x4^2*x5,x5^2*x0"));
  CHECK(cyc.structure.str() == "[21]");
  REQUIRE(cyc.generator_signatures.size() == 1);
  CHECK(cyc.generator_signatures[0].c == std::vector<std::int64_t>{0, 1, 20, 3, 16, 11});

  auto chain = symmetry_group(S("x0^3,x1^2*x0,x2^2*x1,x3^2*x2,x4^2*x3,x5^2*x4"));
  CHECK(chain.structure.str() == "[32]");
}

TEST_CASE("continuous symmetry") {
  auto G = symmetry_group(S("x0^3,x1^3,x2^3"));
  CHECK(G.continuous());
}

TEST_CASE("in-text fixtures") {
  auto fx = load_diag_fixtures(data_path("diagonal_fixtures.txt"));
  CHECK(fx.size() >= 25);
  for (auto &f : fx) {
    auto G = symmetry_group(f.set);
    CHECK_MESSAGE(G.structure.isomorphic(f.group), "line " << f.line);
    if (!f.closure.empty()) CHECK_MESSAGE(closure(G) == f.closure, "line " << f.line);
  }
}

TEST_CASE("closure properties") {
  for (auto &f : load_diag_fixtures(data_path("diagonal_fixtures.txt"))) {
    auto G = symmetry_group(f.set);
    auto cl = closure(G);
    CHECK(is_subset(f.set, cl));
    CHECK(closure(cl) == cl);
    CHECK(symmetry_group(cl).structure.isomorphic(G.structure));
    // the class of the base monomial is the closure
    CHECK(eigencharacter_partition(G).at(joint_weight(G, G.base_monomial)) == cl);
  }
}

TEST_CASE("signatures give equal weights on the set") {
  for (auto &f : load_diag_fixtures(data_path("diagonal_fixtures.txt"))) {
    auto G = symmetry_group(f.set);
    for (auto &s : G.generator_signatures) {
      CHECK(s.c[0] == 0);
      auto w = weight(s, f.set.items[0]);
      for (auto &m : f.set) CHECK(weight(s, m) == w);
    }
    auto mats = generator_matrices(G);
    CHECK(mats.size() == G.generator_signatures.size());
  }
}

TEST_CASE("group order against brute force signature count") {
  for (auto &f : load_diag_fixtures(data_path("diagonal_fixtures.txt"))) {
    auto G = symmetry_group(f.set);
    auto e = G.structure.exponent();
    if (e > 12) continue; // the acceptance binary covers the larger exponents
    CHECK_MESSAGE(BigInt(oracle::brute_force_group_order(f.set, e)) == G.structure.order(),
                  "line " << f.line);
  }
}

TEST_CASE("eigencharacter partition of the order six group") {
  auto A = S("x4^2*x2,x0^2*x2,x5^2*x0,x1^2*x0,x2^2*x1,x3^2*x1,x1*x4*x5,x0*x3*x4,x2*x3*x5");
  auto G = symmetry_group(A);
  CHECK(G.structure.str() == "[6]");
  CHECK(closure(G) == A);
  auto B = S("x0^3,x1^3,x2^3,x4^2*x0,x3^2*x2,x5^2*x1,x0*x1*x2,x0*x3*x5,x1*x3*x4,x2*x4*x5");
  auto parts = eigencharacter_partition(G);
  CHECK(parts.size() == 6);
  bool found = false;
  std::size_t total = 0;
  for (auto &[w, cls] : parts) {
    found = found || cls == B;
    total += cls.size();
  }
  CHECK(found);
  CHECK(total == 56);
  Signature f{6, {0, 2, -2, 1, 3, -1}};
  for (auto &m : B) CHECK(weight(f, m) == 0);
}
