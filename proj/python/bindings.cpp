#include "cubic4/enumerator.hpp"
#include "cubic4/pauli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cf;

namespace {

MonomialSet parse_or_raise(const std::string &text) {
  ParseError err{};
  auto s = parse_set(text, &err);
  if (!s) throw py::value_error("parse error at " + std::to_string(err.pos) + ": " + err.msg);
  return *s;
}

std::vector<std::string> strings(const MonomialSet &s) {
  std::vector<std::string> out;
  for (auto &m : s) out.push_back(m.str());
  return out;
}

py::dict group(const std::string &text) {
  auto G = symmetry_group(parse_or_raise(text));
  py::dict d;
  d["invariant_factors"] = G.structure.invariant_factors;
  d["free_rank"] = G.structure.free_rank;
  d["primary"] = G.structure.finite() ? py::object(py::str(primary_str(G.structure))) : py::none();
  d["closure"] = G.continuous() ? py::object(py::none()) : py::object(py::cast(strings(closure(G))));
  return d;
}

py::dict certify(const std::string &form, std::vector<std::uint32_t> primes) {
  ParseError err{};
  auto F = parse_polynomial(form, &err);
  if (!F) throw py::value_error("parse error at " + std::to_string(err.pos) + ": " + err.msg);
  auto v = certify_over_Q(*F, primes.empty() ? default_primes() : primes);
  py::dict d;
  d["status"] = to_string(v.status);
  d["primes"] = v.primes;
  d["dimension"] = v.dimension;
  d["witness"] = v.witness ? py::cast(*v.witness) : py::none();
  return d;
}

py::dict pauli(const std::string &selector) {
  Section3Report rep;
  try {
    rep = verify_section3(selector);
  } catch (const PauliError &e) {
    throw py::value_error(e.what());
  }
  py::list cases;
  for (auto &c : rep.cases) {
    py::dict d;
    d["case"] = c.fixture.name;
    d["label"] = c.fixture.label;
    d["invariant_factors"] = c.group.invariant_factors;
    d["family_dimension"] = c.family_dimension;
    d["ok"] = c.ok();
    cases.append(d);
  }
  py::dict d;
  d["cases"] = cases;
  d["full_pauli_families"] = rep.negative_families;
  d["ok"] = rep.ok();
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.def("group", &group, py::arg("monomials"));
  m.def("certify", &certify, py::arg("form"), py::arg("primes") = std::vector<std::uint32_t>{});
  m.def("pauli", &pauli, py::arg("selector") = "all");
  m.def("embeds", [](std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
    return embeds(canonical_group(a), canonical_group(b));
  });
  m.def("maximal_groups", [](std::vector<std::vector<std::int64_t>> gs) {
    std::vector<AbelianGroupStructure> in;
    for (auto &g : gs) in.push_back(canonical_group(g));
    std::vector<std::vector<std::int64_t>> out;
    for (auto &g : maximal_groups(in)) out.push_back(g.invariant_factors);
    return out;
  });
}
