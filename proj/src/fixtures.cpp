#include "cubic4/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cf {

#ifndef CUBIC4_DATA_DIR
#define CUBIC4_DATA_DIR "data"
#endif

std::string data_path(const std::string &name) {
  const char *env = std::getenv("CUBIC4_DATA");
  return std::string(env && *env ? env : CUBIC4_DATA_DIR) + "/" + name;
}

static std::string strip(const std::string &s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

std::vector<std::int64_t> parse_int_list(const std::string &s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = strip(tok);
    if (tok.empty()) continue;
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<DiagFixture> load_diag_fixtures(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  std::vector<DiagFixture> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    line = strip(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto a = line.find('|'), b = line.find('|', a + 1);
    if (a == std::string::npos || b == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(no) + ": expected SET | GROUP | CLOSURE");
    ParseError e;
    auto s = parse_set(line.substr(0, a), &e);
    auto c = parse_set(line.substr(b + 1), &e);
    if (!s || !c)
      throw std::runtime_error(path + ":" + std::to_string(no) + ": " + e.msg);
    DiagFixture f;
    f.set = *s;
    f.closure = *c;
    f.group = canonical_group(parse_int_list(line.substr(a + 1, b - a - 1)));
    f.line = no;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::string> read_form_lines(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line.substr(0, line.find('#')));
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

} // namespace cf
