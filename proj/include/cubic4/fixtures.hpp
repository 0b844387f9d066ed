#pragma once

#include "cubic4/cubicdomain.hpp"
#include "cubic4/lattice.hpp"

#include <string>

namespace cf {

// $CUBIC4_DATA if set, else the source tree's data/ directory
std::string data_path(const std::string &name);

struct DiagFixture {
  MonomialSet set;
  AbelianGroupStructure group;
  MonomialSet closure;
  std::size_t line = 0;
};

// one record per line: SET | GROUP | CLOSURE, '#' starts a comment
std::vector<DiagFixture> load_diag_fixtures(const std::string &path);

// lines of a forms file with comments and blanks removed
std::vector<std::string> read_form_lines(const std::string &path);

std::vector<std::int64_t> parse_int_list(const std::string &s);

} // namespace cf
