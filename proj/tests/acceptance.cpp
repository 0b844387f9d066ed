#include "cubic4/enumerator.hpp"
#include "cubic4/fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sys/wait.h>

using namespace cf;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string &args) {
  std::string cmd = std::string(CUBIC4_CLI) + " " + args + " 2>&1";
  Run r;
  FILE *p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string last_line(const std::string &s) {
  auto t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  auto k = t.rfind('\n');
  return k == std::string::npos ? t : t.substr(k + 1);
}

Outcome fixtures() {
  auto r = verify_fixture_table(data_path("diagonal_fixtures.txt"));
  auto fx = load_diag_fixtures(data_path("diagonal_fixtures.txt"));
  std::size_t closures = 0;
  for (auto &f : fx) {
    if (f.closure.empty()) continue;
    ++closures;
    if (closure(symmetry_group(f.set)) != f.closure) return {false, "closure mismatch line " + std::to_string(f.line)};
  }
  return {r.ok() && r.total >= 25,
          std::to_string(r.total) + " sets, " + std::to_string(closures) + " closures, " +
              std::to_string(r.mismatches.size()) + " mismatches"};
}

Outcome brute_force_orders() {
  std::size_t checked = 0, bad = 0;
  for (auto &f : load_diag_fixtures(data_path("diagonal_fixtures.txt"))) {
    auto G = symmetry_group(f.set);
    if (!G.structure.finite()) continue;
    auto e = G.structure.exponent();
    if (BigInt(e) * e * e * e * e > BigInt(40000000)) continue;
    ++checked;
    bad += BigInt(oracle::brute_force_group_order(f.set, e)) != G.structure.order();
  }
  return {checked > 0 && bad == 0,
          std::to_string(checked) + " fixtures enumerated, " + std::to_string(bad) + " mismatches"};
}

Outcome smoothness_suite(std::vector<GroebnerBasis> &bases) {
  auto sample = read_form_lines(data_path("appendix_sample.txt"));
  std::size_t sing = 0;
  for (auto &l : sample)
    sing += certify_over_Q(*parse_polynomial(l), default_primes()).status !=
            SmoothStatus::CertifiedSmooth;
  auto agree_forms = read_form_lines(data_path("agreement_forms.txt"));
  std::size_t disagree = 0;
  for (auto &l : agree_forms)
    for (std::uint32_t p : {5u, 7u}) {
      auto f = parse_polynomial(l)->reduce_mod(p);
      std::vector<SparsePolynomial> gens{f};
      for (auto &d : partials(f))
        if (!d.is_zero()) gens.push_back(d);
      bases.push_back(groebner(gens));
      bool gb = affine_dimension(bases.back()) <= 0;
      disagree += gb != singular_points_bruteforce(f, p).empty();
    }
  return {sample.size() >= 50 && sing == 0 && agree_forms.size() >= 20 && disagree == 0,
          std::to_string(sample.size()) + " forms, TotalSing = " + std::to_string(sing) + "; " +
              std::to_string(agree_forms.size()) + " forms x {5,7}, " +
              std::to_string(disagree) + " disagreements"};
}

Outcome special_checks() {
  auto special = read_form_lines(data_path("special_forms.txt"));
  std::size_t smooth = 0;
  for (auto &l : special)
    smooth += certify_over_Q(*parse_polynomial(l), default_primes()).status ==
              SmoothStatus::CertifiedSmooth;
  auto A = *parse_set("x4^2*x2,x0^2*x2,x5^2*x0,x1^2*x0,x2^2*x1,x3^2*x1,x1*x4*x5,x0*x3*x4,x2*x3*x5");
  auto B = *parse_set("x0^3,x1^3,x2^3,x4^2*x0,x3^2*x2,x5^2*x1,x0*x1*x2,x0*x3*x5,x1*x3*x4,x2*x4*x5");
  auto G = symmetry_group(A);
  bool found = false;
  for (auto &[w, cls] : eigencharacter_partition(G)) found = found || cls == B;
  bool z6 = G.structure.str() == "[6]";
  return {special.size() == 2 && smooth == 2 && found && z6,
          std::to_string(smooth) + "/" + std::to_string(special.size()) +
              " special forms smooth; order-6 class " + (found ? "recovered" : "missing")};
}

Outcome theorem() {
  auto dir = fs::temp_directory_path() / ("cubic4_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto out = dir / "classification.json";
  auto e = cli("enumerate -o '" + out.string() + "'");
  if (e.code != 0) return {false, "enumerate exited " + std::to_string(e.code)};
  auto t = cli("theorem '" + out.string() + "'");
  fs::remove_all(dir);
  std::size_t maximal = 0;
  for (std::size_t k = 0; (k = t.out.find("maximal ", k)) != std::string::npos; ++k) ++maximal;
  return {t.code == 0 && last_line(t.out) == "PASS",
          std::to_string(maximal) + " maximal groups, verdict " + last_line(t.out)};
}

Outcome pauli_cases() {
  auto r = cli("pauli all");
  auto rep = verify_section3("all");
  std::set<std::string> names;
  std::size_t ok = 0;
  for (auto &c : rep.cases) names.insert(c.fixture.name), ok += c.ok();
  bool all_names = names == std::set<std::string>{"A1", "A2", "A3", "B1", "B2", "B3", "C", "D"};
  return {r.code == 0 && last_line(r.out) == "PASS" && rep.ok() && all_names,
          std::to_string(ok) + "/" + std::to_string(rep.cases.size()) +
              " subcases certified, full P6 families " + std::to_string(rep.negative_families)};
}

Outcome properties(const std::vector<GroebnerBasis> &bases) {
  std::size_t gb_bad = 0;
  for (auto &B : bases) gb_bad += !satisfies_buchberger(B);

  std::mt19937_64 rng(20240601);
  std::size_t snf_bad = 0;
  for (int t = 0; t < 1000; ++t) snf_bad += !oracle::snf_identity_holds(oracle::random_matrix(rng));

  auto groups = oracle::abelian_groups_up_to(64);
  std::map<std::vector<std::int64_t>, std::set<oracle::Profile>> subs;
  for (auto &h : groups) subs[h] = oracle::subgroup_profiles(h);
  std::size_t emb_bad = 0;
  for (auto &g : groups)
    for (auto &h : groups)
      emb_bad += embeds(canonical_group(g), canonical_group(h)) != (subs[h].count(oracle::profile(g)) > 0);

  std::size_t mask_bad = 0;
  for (int t = 0; t < 1000; ++t) mask_bad += !oracle::mask_predicates_agree(oracle::random_mask(rng));

  std::size_t central_bad = 0, pairs = 0;
  for (std::size_t n : {2, 3, 6})
    for (int t = 0; t < 500; ++t, ++pairs)
      central_bad += !oracle::centrality_holds(oracle::random_pauli_word(rng, n),
                                               oracle::random_pauli_word(rng, n));

  bool pass = gb_bad + snf_bad + emb_bad + mask_bad + central_bad == 0 && !bases.empty();
  return {pass, std::to_string(bases.size()) + " bases, 1000 SNF, " +
                    std::to_string(groups.size() * groups.size()) + " embeds pairs, 1000 mask sets, " +
                    std::to_string(pairs) + " Pauli pairs; failures " +
                    std::to_string(gb_bad + snf_bad + emb_bad + mask_bad + central_bad)};
}

} // namespace

int main() {
  std::vector<GroebnerBasis> bases;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture regression", fixtures},
      {"exhaustive group oracle", brute_force_orders},
      {"smoothness suite", [&] { return smoothness_suite(bases); }},
      {"special forms and order-6 class", special_checks},
      {"maximal group list", theorem},
      {"non-diagonal cases", pauli_cases},
      {"property suites", [&] { return properties(bases); }},
  };
  int failed = 0, k = 0;
  for (auto &[name, fn] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", ++k, name.c_str(),
                o.detail.c_str(), s);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
