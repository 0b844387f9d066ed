#include "cubic4/enumerator.hpp"
#include "cubic4/fixtures.hpp"
#include "cubic4/pauli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace cf;

namespace {

enum Exit { Ok = 0, Fail = 1, Usage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json strings(const MonomialSet &s) {
  json a = json::array();
  for (auto &m : s) a.push_back(m.str());
  return a;
}

json group_json(const AbelianGroupStructure &g) {
  json j;
  j["invariant_factors"] = g.invariant_factors;
  j["free_rank"] = g.free_rank;
  if (g.finite()) j["primary"] = primary_str(g);
  return j;
}

json verdict_json(const SmoothnessVerdict &v) {
  json j;
  j["status"] = to_string(v.status);
  j["primes"] = v.primes;
  j["dimension"] = v.dimension;
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

MonomialSet parse_set_or_throw(const std::string &text) {
  ParseError err{};
  auto s = parse_set(text, &err);
  if (!s) throw UsageError("parse error at " + std::to_string(err.pos) + ": " + err.msg);
  return *s;
}

std::vector<std::uint32_t> parse_primes(const std::string &text) {
  std::vector<std::uint32_t> out;
  try {
    for (auto v : parse_int_list(text)) {
      if (v < 5 || !is_prime(std::uint64_t(v))) throw UsageError("not a usable prime: " + std::to_string(v));
      out.push_back(std::uint32_t(v));
    }
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  if (out.empty()) throw UsageError("empty prime list");
  return out;
}

int cmd_group(const std::string &text, bool as_json, bool closure_only) {
  auto A = parse_set_or_throw(text);
  if (A.empty()) throw UsageError("empty monomial set");
  auto G = symmetry_group(A);
  auto cl = G.continuous() ? MonomialSet{} : closure(G);
  if (as_json) {
    json j;
    j["set"] = strings(A);
    if (!closure_only) {
      j["group"] = group_json(G.structure);
      json gens = json::array();
      for (auto &s : G.generator_signatures) gens.push_back({{"modulus", s.modulus}, {"c", s.c}});
      j["generators"] = gens;
      j["base_monomial"] = G.base_monomial.str();
    }
    if (G.continuous())
      j["closure"] = nullptr;
    else
      j["closure"] = strings(cl);
    std::cout << j.dump(2) << "\n";
    return Ok;
  }
  if (!closure_only) {
    std::cout << "group " << G.structure.str();
    if (G.structure.finite()) std::cout << " = " << primary_str(G.structure);
    std::cout << "\n";
    for (auto &s : G.generator_signatures) std::cout << "generator " << s.str() << "\n";
  }
  if (G.continuous())
    std::cout << "closure undefined (continuous symmetry)\n";
  else
    std::cout << "closure " << cl.str() << "\n";
  return Ok;
}

int cmd_smooth(const std::string &path, const std::vector<std::uint32_t> &primes, bool as_json) {
  std::vector<std::string> lines;
  try {
    lines = read_form_lines(path);
  } catch (const std::exception &e) {
    throw UsageError(e.what());
  }
  json rows = json::array();
  std::size_t total_sing = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    ParseError err{};
    auto F = parse_polynomial(lines[i], &err);
    if (!F)
      throw UsageError("form " + std::to_string(i + 1) + ": parse error at " +
                       std::to_string(err.pos) + ": " + err.msg);
    auto v = certify_over_Q(*F, primes);
    if (v.status != SmoothStatus::CertifiedSmooth) ++total_sing;
    if (as_json) {
      json r = verdict_json(v);
      r["form"] = lines[i];
      rows.push_back(r);
    } else {
      std::cout << lines[i] << " : " << to_string(v.status);
      if (v.status == SmoothStatus::CertifiedSmooth) std::cout << " (p=" << v.primes[0] << ")";
      if (v.witness) {
        std::cout << " witness (";
        for (std::size_t k = 0; k < v.witness->size(); ++k)
          std::cout << (k ? "," : "") << (*v.witness)[k];
        std::cout << ")";
      }
      std::cout << "\n";
    }
  }
  if (lines.empty()) std::cerr << "warning: no forms in " << path << "\n";
  if (as_json)
    std::cout << json{{"forms", rows}, {"total_sing", total_sing}}.dump(2) << "\n";
  else
    std::cout << "TotalSing = " << total_sing << "\n";
  return total_sing == 0 ? Ok : Fail;
}

json classification_json(const std::vector<ClassificationEntry> &es, const ClassifyConfig &cfg,
                         const ClassifyStats &st, const SubsumptionLog *log) {
  json doc;
  doc["config"] = {{"max_added", cfg.max_added},
                   {"primes", cfg.primes},
                   {"seeds_per_set", cfg.seeds_per_set},
                   {"seed", cfg.seed}};
  doc["stats"] = {{"skeletons", st.skeletons},   {"emitted", st.emitted},
                  {"distinct_sets", st.distinct_sets}, {"continuous", st.continuous},
                  {"keys", st.keys},             {"not_certified", st.not_certified}};
  json entries = json::array();
  for (auto &e : es) {
    json j;
    j["key"] = e.key;
    j["representative"] = strings(e.representative);
    j["closure"] = strings(e.closure);
    j["group"] = group_json(e.group);
    j["certification"] = verdict_json(e.certification);
    entries.push_back(j);
  }
  doc["entries"] = entries;
  json maxi = json::array();
  for (auto &g : maximal_groups(es)) maxi.push_back(group_json(g));
  doc["maximal"] = maxi;
  if (log) {
    json rm = json::array();
    for (auto &[a, b] : log->removed) rm.push_back({{"removed", a}, {"kept", b}});
    doc["subsumed"] = rm;
  }
  return doc;
}

int cmd_enumerate(const ClassifyConfig &cfg, const std::string &out, bool compact) {
  ClassifyStats st;
  auto es = classify(cfg, &st);
  std::vector<ClassificationEntry> kept;
  for (auto &e : es)
    if (e.certification.status == SmoothStatus::CertifiedSmooth) kept.push_back(e);
  SubsumptionLog log;
  if (compact) kept = compact_table(kept, &log);
  auto doc = classification_json(kept, cfg, st, compact ? &log : nullptr);
  std::cerr << "skeleton classes " << st.skeletons << ", admissible sets " << st.distinct_sets
            << ", families " << st.keys << ", uncertified " << st.not_certified << "\n";
  std::cerr << "maximal groups:";
  for (auto &g : doc["maximal"]) std::cerr << " " << g["primary"].get<std::string>();
  std::cerr << "\n";
  if (out.empty() || out == "-") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << doc.dump(2) << "\n";
  }
  return Ok;
}

int cmd_theorem(const std::string &path, const std::string &reference, bool as_json) {
  json doc;
  {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
      in >> doc;
    } catch (const json::exception &e) {
      throw UsageError(std::string("invalid JSON: ") + e.what());
    }
  }
  std::vector<AbelianGroupStructure> groups;
  try {
    for (auto &e : doc.at("entries")) {
      if (e.at("certification").at("status").get<std::string>() != "CertifiedSmooth") continue;
      auto &g = e.at("group");
      if (g.at("free_rank").get<std::size_t>() != 0) continue;
      groups.push_back(canonical_group(g.at("invariant_factors").get<std::vector<std::int64_t>>()));
    }
  } catch (const json::exception &e) {
    throw UsageError(std::string("schema mismatch: ") + e.what());
  }
  auto maxi = maximal_groups(groups);
  auto v = check_theorem(maxi, load_theorem_groups(reference));
  if (as_json) {
    json j;
    j["verdict"] = v.pass ? "PASS" : "FAIL";
    json m = json::array();
    for (auto &g : maxi) m.push_back(group_json(g));
    j["maximal"] = m;
    j["missing"] = v.missing;
    j["unexpected"] = v.unexpected;
    j["non_embedding"] = v.non_embedding;
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto &g : maxi) std::cout << "maximal " << g.str() << " = " << primary_str(g) << "\n";
    for (auto &s : v.missing) std::cout << "missing " << s << "\n";
    for (auto &s : v.unexpected) std::cout << "unexpected " << s << "\n";
    for (auto &s : v.non_embedding) std::cout << "non-embedding " << s << "\n";
    std::cout << (v.pass ? "PASS" : "FAIL") << "\n";
  }
  return v.pass ? Ok : Fail;
}

int cmd_pauli(const std::string &selector, std::uint64_t seed, bool as_json) {
  Section3Report rep;
  try {
    rep = verify_section3(selector, seed);
  } catch (const PauliError &e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    json cases = json::array();
    for (auto &c : rep.cases) {
      json j;
      j["case"] = c.fixture.name;
      j["label"] = c.fixture.label;
      j["generators"] = c.fixture.generators;
      j["group"] = group_json(c.group);
      j["expected"] = group_json(c.fixture.expected);
      j["families"] = c.families;
      j["family_dimension"] = c.family_dimension;
      j["certification"] = verdict_json(c.smooth);
      j["ok"] = c.ok();
      cases.push_back(j);
    }
    std::cout << json{{"cases", cases},
                      {"full_pauli_families", rep.negative_families},
                      {"verdict", rep.ok() ? "PASS" : "FAIL"}}
                     .dump(2)
              << "\n";
  } else {
    for (auto &c : rep.cases)
      std::cout << c.fixture.name << " " << c.fixture.label << " " << primary_str(c.group)
                << (c.group_ok ? "" : " (expected " + primary_str(c.fixture.expected) + ")")
                << " families " << c.families << " dim " << c.family_dimension << " "
                << to_string(c.smooth.status) << (c.ok() ? "" : " FAIL") << "\n";
    std::cout << "full P6 families " << rep.negative_families << "\n";
    std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
  }
  return rep.ok() ? Ok : Fail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"cubic4: symmetry groups of smooth cubic fourfolds"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string primes_text;
  std::uint64_t seed = ClassifyConfig{}.seed;
  int max_added = ClassifyConfig{}.max_added;
  int jobs = int(std::max(1u, std::thread::hardware_concurrency()));
  app.add_flag("--json", as_json, "emit JSON");
  app.add_option("--primes", primes_text, "comma separated primes");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--max-added", max_added, "resolution depth")->check(CLI::Range(0, 12));
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string set_text, path, output, reference, selector;
  bool compact = false;
  auto *group = app.add_subcommand("group", "diagonal symmetry group of a monomial set");
  group->add_option("set", set_text, "comma separated monomials")->required();
  auto *clos = app.add_subcommand("closure", "closure of a monomial set");
  clos->add_option("set", set_text, "comma separated monomials")->required();
  auto *smooth = app.add_subcommand("smooth", "certify smoothness of forms in a file");
  smooth->add_option("file", path, "one form per line")->required();
  auto *enumerate = app.add_subcommand("enumerate", "classify admissible monomial sets");
  enumerate->add_option("-o,--output", output, "JSON output file");
  enumerate->add_flag("--compact", compact, "apply table subsumption");
  auto *theorem = app.add_subcommand("theorem", "check a classification against the group list");
  theorem->add_option("file", path, "classification JSON")->required();
  theorem->add_option("--reference", reference, "reference group list");
  auto *pauli = app.add_subcommand("pauli", "verify the non-diagonal cases");
  pauli->add_option("case", selector, "A1, A2, A3, B1, B2, B3, C, D or all")->required();

  for (auto *s : {group, clos, smooth, enumerate, theorem, pauli}) {
    s->add_flag("--json", as_json, "emit JSON");
    s->add_option("--primes", primes_text, "comma separated primes");
    s->add_option("--seed", seed, "random seed");
    s->add_option("--max-added", max_added, "resolution depth")->check(CLI::Range(0, 12));
    s->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? Ok : Usage;
  }

  try {
    if (*group) return cmd_group(set_text, as_json, false);
    if (*clos) return cmd_group(set_text, as_json, true);
    if (*smooth)
      return cmd_smooth(path, primes_text.empty() ? default_primes() : parse_primes(primes_text),
                        as_json);
    if (*enumerate) {
      ClassifyConfig cfg;
      cfg.max_added = max_added;
      cfg.seed = seed;
      cfg.jobs = jobs;
      if (!primes_text.empty()) cfg.primes = parse_primes(primes_text);
      return cmd_enumerate(cfg, output, compact);
    }
    if (*theorem)
      return cmd_theorem(path, reference.empty() ? data_path("theorem_groups.txt") : reference,
                         as_json);
    if (*pauli) return cmd_pauli(selector, seed, as_json);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Fail;
  }
  return Usage;
}
