#include "cubic4/fixtures.hpp"
#include "cubic4/smoothcert.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cf;

namespace {
SparsePolynomial F(const std::string &s, std::uint32_t p = 0) {
  auto r = parse_polynomial(s);
  REQUIRE(r.has_value());
  return p ? r->reduce_mod(p) : *r;
}
} // namespace

TEST_CASE("polynomial parsing and arithmetic") {
  auto f = F("x0^3 + 2*x1^2*x0 - x5^3");
  CHECK(f.terms.size() == 3);
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 3);
  CHECK(F(f.str()) == f);
  auto g = poly_mul(poly_var(0, 6), poly_var(1, 6));
  CHECK(g.str() == "x0*x1");
  CHECK(poly_add(f, poly_scale(f, -1)).is_zero());
  CHECK(F("3*x0^3", 7).terms[0].c == 3);
  CHECK(F("-x0^3", 7).terms[0].c == 6);
  ParseError err{};
  CHECK_FALSE(parse_polynomial("x0^3 + + x1^3", &err).has_value());
}

TEST_CASE("degrevlex order") {
  CHECK(degrevlex_greater({1, 1, 0}, {1, 0, 1}));
  CHECK(degrevlex_greater({0, 2, 0}, {1, 0, 1}));
  CHECK(degrevlex_greater({3, 0, 0}, {2, 1, 0}));
  CHECK_FALSE(degrevlex_greater({1, 0, 0}, {1, 1, 0}));
}

TEST_CASE("partials and euler identity") {
  auto f = F("x0^3 + 5*x0*x1*x2 + x3^2*x4 + 7*x5^2*x1");
  auto d = partials(f);
  REQUIRE(d.size() == 6);
  auto euler = SparsePolynomial::from_terms({}, 6);
  for (std::size_t i = 0; i < 6; ++i) euler = poly_add(euler, poly_mul(poly_var(i, 6), d[i]));
  CHECK(euler == poly_scale(f, 3));
}

TEST_CASE("groebner bases satisfy the buchberger criterion") {
  std::vector<std::string> forms;
  for (auto &l : read_form_lines(data_path("agreement_forms.txt"))) forms.push_back(l);
  for (std::uint32_t p : {5u, 7u, 101u}) {
    for (auto &s : forms) {
      auto f = F(s, p);
      std::vector<SparsePolynomial> gens{f};
      for (auto &d : partials(f))
        if (!d.is_zero()) gens.push_back(d);
      auto B = groebner(gens);
      CHECK(satisfies_buchberger(B));
      for (auto &g : gens) CHECK(normal_form(g, B).is_zero());
      CHECK(affine_dimension(B) == jacobian_dimension_mod_p(f, p));
    }
  }
}

TEST_CASE("groebner over the rationals") {
  auto f = F("x0^2 - 2*x1*x2");
  auto B = groebner({f, F("x1^2 - x2^2")});
  CHECK(satisfies_buchberger(B));
  CHECK(B.generators.front().p == 0);
  CHECK(groebner({F("x0"), F("x0 + 1")}).is_unit());
}

TEST_CASE("smoothness verdicts") {
  auto fermat = F("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3");
  CHECK(is_smooth_mod_p(fermat, 5).status == SmoothStatus::CertifiedSmooth);
  CHECK_THROWS(is_smooth_mod_p(fermat, 3));
  CHECK_THROWS(is_smooth_mod_p(fermat, 2));
  auto v = certify_over_Q(fermat, default_primes());
  CHECK(v.status == SmoothStatus::CertifiedSmooth);
  CHECK(v.primes == std::vector<std::uint32_t>{5});

  auto missing = F("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x0*x1*x4");
  auto w = certify_over_Q(missing, default_primes());
  CHECK(w.status == SmoothStatus::SingularModulo);
  REQUIRE(w.witness.has_value());
  CHECK(*w.witness == std::vector<std::int64_t>{0, 0, 0, 0, 0, 1});
}

TEST_CASE("special coefficient choices certify smooth") {
  for (auto &l : read_form_lines(data_path("special_forms.txt")))
    CHECK(certify_over_Q(F(l), default_primes()).status == SmoothStatus::CertifiedSmooth);
}

TEST_CASE("brute force and groebner agree over F_5 and F_7") {
  auto lines = read_form_lines(data_path("agreement_forms.txt"));
  CHECK(lines.size() >= 20);
  for (auto &l : lines)
    for (std::uint32_t p : {5u, 7u}) {
      auto f = F(l, p);
      bool brute_smooth = singular_points_bruteforce(f, p).empty();
      bool gb_smooth = jacobian_dimension_mod_p(f, p) <= 0;
      CHECK_MESSAGE(brute_smooth == gb_smooth, l << " mod " << p);
    }
}

TEST_CASE("a rational singular point forces positive dimension") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(0, 4);
  auto all = all_monomials(6, 3);
  int singular = 0;
  for (int t = 0; t < 60; ++t) {
    std::vector<Term> ts;
    for (auto &m : all)
      if (c(rng) == 0) ts.push_back({m.e, BigRational(c(rng) + 1)});
    auto f = SparsePolynomial::from_terms(ts, 6, 5);
    if (f.is_zero()) continue;
    auto pts = singular_points_bruteforce(f, 5);
    if (!pts.empty()) {
      ++singular;
      CHECK(jacobian_dimension_mod_p(f, 5) > 0);
    }
  }
  CHECK(singular > 0);
}

TEST_CASE("generic members") {
  auto S = *parse_set("x0^3,x1^3,x2^3,x3^3,x4^3,x5^3");
  auto a = generic_member(S, 101, 42), b = generic_member(S, 101, 42);
  CHECK(a == b);
  CHECK(a.terms.size() == 6);
  for (auto &t : a.terms) CHECK(t.c != 0);
}
