#include "cubic4/fixtures.hpp"
#include "cubic4/pauli.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace cf;

namespace {
MonomialMatrix E(const std::string &s) { return parse_element(s); }
Monomial M(const std::string &s) { return parse_monomial(s).value(); }
} // namespace

TEST_CASE("pauli generators") {
  auto [P2, W2] = pauli_generators(2);
  CHECK(P2.perm == std::vector<int>{1, 0});
  CHECK(W2.phase == std::vector<std::int64_t>{0, 1});
  CHECK(W2.order == 2);
  auto [P6, W6] = pauli_generators(6);
  CHECK(P6.perm == std::vector<int>{1, 2, 3, 4, 5, 0});
  CHECK(W6.phase == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(pauli_generators(1), PauliError);
}

TEST_CASE("composition") {
  auto [P6, W6] = pauli_generators(6);
  CHECK(is_scalar(power(P6, 6)));
  CHECK_FALSE(is_scalar(power(P6, 3)));
  CHECK(compose(P6, MonomialMatrix::identity(6)) == P6);
  auto [P3, W3] = pauli_generators(3);
  auto wp = compose(W3, P3), pw = compose(P3, W3);
  CHECK_FALSE(wp == pw);
  CHECK(projectively_equal(wp, pw));
  auto q = compose(wp, inverse(pw));
  CHECK(is_scalar(q));
  CHECK(q.phase[0] != 0);
  CHECK(compose(power(P6, 2), power(P6, -2)) == MonomialMatrix::identity(6));
  CHECK_THROWS_AS(compose(P6, P3), PauliError);
}

TEST_CASE("projective orders") {
  auto [P6, W6] = pauli_generators(6);
  CHECK(projective_order(P6) == 6);
  CHECK(projective_order(power(W6, 2)) == 3);
  auto s3 = compose(pauli_generators(2).first, pauli_generators(2).second);
  CHECK(projective_order(s3) == 2);
  CHECK(projective_order(E("P6*W6")) == 6);
}

TEST_CASE("tensor embeddings") {
  auto [P6, W6] = pauli_generators(6);
  auto [P3, W3] = pauli_generators(3);
  auto [P2, W2] = pauli_generators(2);
  CHECK(tensor_embed(MonomialMatrix::identity(2), P3) == power(P6, 2).with_order(1));
  CHECK(projectively_equal(tensor_embed(MonomialMatrix::diagonal({0, 1}, 6), W3), W6));
  CHECK(projectively_equal(tensor_embed(MonomialMatrix::identity(3), P2), power(P6, 3)));
  // the other index convention gives a conjugate but different matrix
  CHECK_FALSE(projectively_equal(
      tensor_embed(MonomialMatrix::identity(2), P3, TensorConvention::YFastest), power(P6, 2)));
  CHECK(E("diag(0,1/6)@W3") == tensor_embed(MonomialMatrix::diagonal({0, 1}, 6), W3));
}

TEST_CASE("action on monomials") {
  auto [P6, W6] = pauli_generators(6);
  auto [m1, ph1] = act_on_monomial(W6, M("x1^3"));
  CHECK(m1 == M("x1^3"));
  CHECK(ph1 == 3);
  auto [m2, ph2] = act_on_monomial(P6, M("x5^2*x0"));
  CHECK(m2 == M("x0^2*x1"));
  CHECK(ph2 == 0);
  auto W2 = power(W6, 2);
  for (auto &m : all_monomials(6, 3)) {
    int s = 0;
    for (int i = 0; i < 6; ++i) s += i * m.e[i];
    CHECK(act_on_monomial(W2, m).second == (2 * s) % 6);
    CHECK((act_on_monomial(W2, m).second == 0) == (s % 3 == 0));
  }
}

TEST_CASE("phases are additive under composition") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_pauli_word(rng, 6), h = oracle::random_pauli_word(rng, 6);
    auto gh = compose(g, h);
    for (auto &m : all_monomials(6, 3)) {
      auto [hm, ph] = act_on_monomial(h.with_order(gh.order), m);
      auto [ghm, pg] = act_on_monomial(g.with_order(gh.order), hm);
      auto [direct, pd] = act_on_monomial(gh, m);
      CHECK(direct == ghm);
      CHECK(direct.degree() == 3);
      CHECK(pd == (ph + pg) % gh.order);
    }
  }
}

TEST_CASE("pauli words commute up to a global phase") {
  std::mt19937_64 rng(8);
  for (std::size_t n : {2, 3, 6})
    for (int t = 0; t < 300; ++t)
      CHECK(oracle::centrality_holds(oracle::random_pauli_word(rng, n),
                                     oracle::random_pauli_word(rng, n)));
}

TEST_CASE("element grammar") {
  CHECK(E("P6*W6^2") == compose(pauli_generators(6).first, power(pauli_generators(6).second, 2)));
  CHECK(E("I6") == MonomialMatrix::identity(6));
  CHECK_THROWS_AS(E("Q6"), PauliError);
  CHECK_THROWS_AS(E("P6*W3"), PauliError);
  CHECK_THROWS_AS(E("diag(0,1/0)@P3"), PauliError);
  CHECK_THROWS_AS(E("P6 junk"), PauliError);
}

TEST_CASE("group structure") {
  CHECK(generate_group({E("P2"), E("W2")}).structure.str() == "[2,2]");
  CHECK(generate_group({E("P3"), E("W3")}).structure.str() == "[3,3]");
  CHECK(generate_group({E("P6"), E("W6")}).structure.str() == "[6,6]");
  CHECK(generate_group({E("P6*W6"), E("W6^2")}).structure.str() == "[3,6]");
  CHECK(generate_group({E("diag(0,1/9)@P3"), E("diag(0,0/1)@W3")}).structure.str() == "[3,9]");
  auto sigma = MonomialMatrix{{1, 0}, {0, 0}, 1};
  auto diag = MonomialMatrix::diagonal({0, 1}, 3);
  CHECK_THROWS_AS(generate_group({sigma, diag}), PauliError);
}

TEST_CASE("invariant families are semi-invariant") {
  std::vector<std::vector<std::string>> cases{{"P6", "W6^2"},
                                              {"P6*W6", "W6^2"},
                                              {"diag(0,1/9)@P3", "diag(0,0/1)@W3"},
                                              {"diag(0,1/2)@I3", "diag(0,2/6)@P3", "diag(0,0/1)@W3"}};
  for (auto &c : cases) {
    std::vector<MonomialMatrix> gens;
    for (auto &s : c) gens.push_back(E(s));
    auto fams = invariant_cubics(gens);
    CHECK_FALSE(fams.empty());
    for (auto &f : fams) {
      auto q = primes_with_roots(f.root_order, 1)[0];
      auto z = root_of_unity_mod(f.root_order, q);
      auto F = family_member(f, q, 5);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto lhs = apply_to_polynomial(gens[g], F, f.root_order);
        std::uint64_t chi = 1;
        for (std::int64_t k = 0; k < f.character[g]; ++k) chi = chi * z % q;
        CHECK(lhs == poly_scale(F, BigRational(chi)));
      }
    }
  }
}

TEST_CASE("family dimensions do not depend on the presentation") {
  auto a = E("P6*W6"), b = E("W6^2");
  auto dims = [](const std::vector<MonomialMatrix> &gens) {
    std::multiset<std::size_t> d;
    for (auto &f : invariant_cubics(gens)) d.insert(f.dimension());
    return d;
  };
  auto base = dims({a, b});
  CHECK(dims({compose(a, b), b}) == base);
  CHECK(dims({a, compose(power(a, 2), b), b}) == base);
  CHECK(dims({b, a}) == base);
}

TEST_CASE("cube coefficients form a phase chain") {
  for (int i : {0, 1}) {
    auto fams = invariant_cubics({E("P6*W6^" + std::to_string(i)), E("W6^2")});
    int with_cubes = 0;
    for (auto &f : fams)
      for (auto &o : f.orbits) {
        std::map<int, std::int64_t> ph; // variable -> phase of its cube
        for (std::size_t j = 0; j < o.monomials.size(); ++j)
          for (int v = 0; v < 6; ++v)
            if (o.monomials[j].e[v] == 3) ph[v] = o.phase[j];
        if (ph.empty()) continue;
        ++with_cubes;
        REQUIRE(ph.size() == 6);
        auto R = f.root_order, mu = f.character[0];
        // g(z_k^3) = w^{3ik} z_{k+1}^3 and g(F) = mu F
        for (int k = 0; k < 6; ++k) {
          auto lhs = ph[k] + 3 * i * k * (R / 6) - mu - ph[(k + 1) % 6];
          CHECK(((lhs % R) + R) % R == 0);
        }
        CHECK((6 * mu - i * (R / 2)) % R == 0);
      }
    CHECK(with_cubes >= 1);
  }
}

TEST_CASE("full pauli group admits no semi-invariant cubic") {
  auto [P6, W6] = pauli_generators(6);
  CHECK(invariant_cubics({P6, W6}).empty());
}

TEST_CASE("reduction cases") {
  CHECK(reduction_case({E("W6")}) == ReductionCase::Diagonalizable);
  CHECK(reduction_case({E("P6^2"), E("W6")}) == ReductionCase::TensorD2P3);
  CHECK(reduction_case({E("P6^3"), E("W6")}) == ReductionCase::TensorD3P2);
  CHECK(reduction_case({E("P6")}) == ReductionCase::PauliCore);
  CHECK(reduction_case({E("P6^2*W6"), E("P6^3")}) == ReductionCase::PauliCore);
  CHECK_THROWS_AS(reduction_case({E("diag(0,1/9)@P3")}), PauliError);
}

TEST_CASE("D3 (x) P2 with surjective projection has no smooth invariant cubic") {
  // z = a + 3b, generators (1,w^c1,w^c2) (x) sigma_1 and (1,w^d1,w^d2) (x) sigma_2
  auto [P2, W2] = pauli_generators(2);
  int smooth = 0, checked = 0;
  for (int c1 = 0; c1 < 6; ++c1)
    for (int c2 = 0; c2 < 6; ++c2)
      for (int d1 = 0; d1 < 6; ++d1)
        for (int d2 = 0; d2 < 6; ++d2) {
          auto f1 = tensor_embed(MonomialMatrix::diagonal({0, c1, c2}, 6), P2);
          auto f2 = tensor_embed(MonomialMatrix::diagonal({0, d1, d2}, 6), W2);
          for (auto &fam : invariant_cubics({f1, f2})) {
            ++checked;
            auto mask = fast::to_mask(fam.support());
            if (!fast::covers(mask) || fast::first_defect(mask)) continue;
            smooth += certify_family(fam, 3, 2).status == SmoothStatus::CertifiedSmooth;
          }
        }
  CHECK(smooth == 0);
  // the commutator of the two lifts is -1, which no cubic semi-invariant tolerates
  CHECK(checked == 0);
  auto control = invariant_cubics({tensor_embed(MonomialMatrix::diagonal({0, 1, 2}, 6), P2)});
  CHECK_FALSE(control.empty());
}

TEST_CASE("y-shadow classes of D2 (x) P3 families") {
  // W3 semi-invariance puts every x0^3 and every x0^2 x1 shadow into one residue class
  for (int c = 0; c < 18; ++c)
    for (int d = 0; d < 18; d += 3) {
      auto f1 = tensor_embed(MonomialMatrix::diagonal({0, c}, 18), pauli_generators(3).first);
      auto f2 = tensor_embed(MonomialMatrix::diagonal({0, d}, 18), pauli_generators(3).second);
      for (auto &fam : invariant_cubics({f1, f2})) {
        std::set<int> a, b;
        for (auto &m : fam.support()) {
          auto x = x_shadow(m);
          if (x[0] == 3) a.insert(y_shadow_class(y_shadow(m)));
          if (x[0] == 2 && x[1] == 1) b.insert(y_shadow_class(y_shadow(m)));
        }
        CHECK(a.size() <= 1);
        CHECK(b.size() <= 1);
      }
    }
}

TEST_CASE("case fixtures") {
  auto cs = load_case_fixtures(data_path("pauli_cases.txt"));
  std::map<std::string, int> count;
  for (auto &c : cs) ++count[c.name];
  CHECK(count["A1"] == 18);
  CHECK(count["A2"] == 15);
  CHECK(count["A3"] == 15);
  CHECK(count["C"] == 2);
  CHECK(count["D"] == 10);
  for (auto &c : cs) {
    auto r = verify_case(c);
    CHECK_MESSAGE(r.ok(), c.name << " " << c.label << " " << r.group.str());
  }
}

TEST_CASE("section verification selectors") {
  auto rep = verify_section3("C");
  CHECK(rep.cases.size() == 2);
  for (auto &c : rep.cases) CHECK(c.group.str() == "[3,6]");
  CHECK(rep.negative_families == 0);
  CHECK(rep.ok());
  CHECK_THROWS_AS(verify_section3("E"), PauliError);
}
