#pragma once

#include "cubic4/cubicdomain.hpp"
#include "cubic4/diaggroup.hpp"
#include "cubic4/smoothcert.hpp"

#include <functional>

namespace cf {

struct ClassificationEntry {
  MonomialSet representative;
  MonomialSet closure;
  AbelianGroupStructure group;
  SmoothnessVerdict certification;
  std::string key; // canonical closure + invariant factors
};

struct ClassifyConfig {
  int max_added = 4;
  std::vector<std::uint32_t> primes{101, 1009};
  int seeds_per_set = 8;
  std::uint64_t seed = 20240601;
  int jobs = 1;
};

struct ClassifyStats {
  std::size_t skeletons = 0;
  std::size_t emitted = 0;          // admissible sets, with repeats across skeletons
  std::size_t distinct_sets = 0;    // up to permutation
  std::size_t continuous = 0;       // free_rank > 0, discarded
  std::size_t keys = 0;             // distinct (closure, group) keys
  std::size_t not_certified = 0;    // keys whose generic member never certified
};

// canonical representatives of the functional maps j: x_i^2 x_{j(i)}
std::vector<fast::Mask> coverage_skeletons();
std::size_t raw_skeleton_count(); // 6^6
std::size_t burnside_functional_graph_count(int n = 6);

void complete_to_admissible(fast::Mask skeleton, int max_added,
                            const std::function<void(fast::Mask)> &emit);
std::vector<MonomialSet> complete_to_admissible(const MonomialSet &skeleton, int max_added);

std::vector<ClassificationEntry> classify(const ClassifyConfig &cfg,
                                          ClassifyStats *stats = nullptr);
ClassificationEntry classify_set(const MonomialSet &A, const ClassifyConfig &cfg);

std::vector<AbelianGroupStructure> maximal_groups(const std::vector<AbelianGroupStructure> &gs);
std::vector<AbelianGroupStructure> maximal_groups(const std::vector<ClassificationEntry> &es);

struct SubsumptionLog {
  std::vector<std::pair<std::string, std::string>> removed; // (removed key, kept key)
};
std::vector<ClassificationEntry> compact_table(const std::vector<ClassificationEntry> &es,
                                               SubsumptionLog *log = nullptr);

struct FixtureReport {
  std::size_t total = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return total > 0 && mismatches.empty(); }
};
FixtureReport verify_fixture_table(const std::string &path);

std::vector<AbelianGroupStructure> load_theorem_groups(const std::string &path);

struct TheoremVerdict {
  bool pass = false;
  std::vector<std::string> missing;       // reference groups not realized as maximal
  std::vector<std::string> unexpected;    // computed maximal groups outside the reference list
  std::vector<std::string> non_embedding; // the unexpected ones embedding into no reference group
};
TheoremVerdict check_theorem(const std::vector<AbelianGroupStructure> &computed_maximal,
                             const std::vector<AbelianGroupStructure> &reference);

} // namespace cf
