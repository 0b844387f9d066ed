#include "cubic4/enumerator.hpp"
#include "cubic4/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace cf {

using fast::Mask;

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string hex(Mask m) {
  std::ostringstream os;
  os << std::hex << m;
  return os.str();
}

Mask skeleton_of(const std::array<int, 6> &j) {
  Mask m = 0;
  for (int i = 0; i < 6; ++i) m |= Mask(1) << fast::idx(i, i, j[i]);
  return m;
}

template <class F> void parallel_for(std::size_t n, int jobs, F &&f) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i, 0);
    return;
  }
  std::vector<std::thread> ts;
  for (int t = 0; t < jobs; ++t)
    ts.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += jobs) f(i, t);
    });
  for (auto &t : ts) t.join();
}

struct Analysis {
  DiagonalSymmetryGroup G;
  Mask closure = 0;
};

// closure through generator weights; agrees with the lattice closure for finite groups
Analysis analyse(Mask m) {
  Analysis a;
  a.G = symmetry_group(fast::from_mask(m));
  if (a.G.continuous()) return a;
  auto w0 = joint_weight(a.G, a.G.base_monomial);
  const auto &cs = fast::cubics();
  for (int k = 0; k < fast::kCount; ++k)
    if (joint_weight(a.G, cs[k]) == w0) a.closure |= Mask(1) << k;
  return a;
}

SmoothnessVerdict certify_family(Mask closure, const ClassifyConfig &cfg) {
  SmoothnessVerdict v;
  MonomialSet S = fast::from_mask(closure);
  for (auto p : cfg.primes) {
    for (int s = 0; s < cfg.seeds_per_set; ++s) {
      auto F = generic_member(S, p, mix(cfg.seed ^ mix(closure) ^ mix(s * 1315423911ULL + p)));
      int d = jacobian_dimension_mod_p(F, p);
      v.dimension = d;
      if (d <= 0) {
        v.status = SmoothStatus::CertifiedSmooth;
        v.primes = {p};
        return v;
      }
    }
  }
  v.status = SmoothStatus::Inconclusive;
  v.primes = cfg.primes;
  return v;
}

std::vector<Mask> partition_masks(const DiagonalSymmetryGroup &G) {
  std::map<std::vector<std::int64_t>, Mask> cls;
  const auto &cs = fast::cubics();
  for (int k = 0; k < fast::kCount; ++k) cls[joint_weight(G, cs[k])] |= Mask(1) << k;
  std::vector<Mask> out;
  for (auto &[w, m] : cls) out.push_back(m);
  return out;
}

} // namespace

std::size_t raw_skeleton_count() { return 46656; }

std::vector<Mask> coverage_skeletons() {
  std::set<Mask> reps;
  std::array<int, 6> j{};
  for (int code = 0; code < 46656; ++code) {
    int c = code;
    for (int i = 0; i < 6; ++i) j[i] = c % 6, c /= 6;
    reps.insert(fast::canonical(skeleton_of(j)).first);
  }
  return {reps.begin(), reps.end()};
}

std::size_t burnside_functional_graph_count(int n) {
  // maps commuting with a permutation of cycle type m: prod over cycles of length c of sum_{d|c} d*m_d
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0, count = 0;
  do {
    std::vector<int> seen(n, 0), m(n + 1, 0), lens;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int k = i; !seen[k]; k = perm[k]) seen[k] = 1, ++len;
      ++m[len];
      lens.push_back(len);
    }
    std::uint64_t fix = 1;
    for (int c : lens) {
      std::uint64_t s = 0;
      for (int d = 1; d <= c; ++d)
        if (c % d == 0) s += std::uint64_t(d) * m[d];
      fix *= s;
    }
    total += fix;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / count;
}

void complete_to_admissible(Mask skeleton, int max_added, const std::function<void(Mask)> &emit) {
  std::unordered_set<Mask> visited;
  std::function<void(Mask, int)> dfs = [&](Mask m, int added) {
    if (!visited.insert(m).second) return;
    auto d = fast::first_defect(m);
    if (!d) {
      emit(m);
      return;
    }
    if (added >= max_added) return;
    for (int k : fast::resolution_menu(m, *d)) dfs(m | (Mask(1) << k), added + 1);
  };
  dfs(skeleton, 0);
}

std::vector<MonomialSet> complete_to_admissible(const MonomialSet &skeleton, int max_added) {
  std::set<Mask> out;
  complete_to_admissible(fast::to_mask(skeleton), max_added, [&](Mask m) { out.insert(m); });
  std::vector<MonomialSet> res;
  for (Mask m : out) res.push_back(fast::from_mask(m));
  return res;
}

ClassificationEntry classify_set(const MonomialSet &A, const ClassifyConfig &cfg) {
  ClassificationEntry e;
  Mask m = fast::to_mask(A);
  auto a = analyse(m);
  e.representative = A;
  e.group = a.G.structure;
  if (a.G.continuous()) {
    e.certification.status = SmoothStatus::Inconclusive;
    return e;
  }
  Mask cc = fast::canonical(a.closure).first;
  e.closure = fast::from_mask(a.closure);
  e.key = hex(cc) + "|" + e.group.str();
  e.certification = certify_family(cc, cfg);
  return e;
}

std::vector<ClassificationEntry> classify(const ClassifyConfig &cfg, ClassifyStats *stats) {
  ClassifyStats st;
  auto skels = coverage_skeletons();
  st.skeletons = skels.size();

  int jobs = std::max(1, cfg.jobs);
  std::vector<std::unordered_set<Mask>> local(jobs);
  std::vector<std::size_t> emitted(jobs, 0);
  parallel_for(skels.size(), jobs, [&](std::size_t i, int t) {
    complete_to_admissible(skels[i], cfg.max_added, [&](Mask m) {
      ++emitted[t];
      local[t].insert(fast::canonical(m).first);
    });
  });
  std::set<Mask> sets;
  for (auto &l : local) sets.insert(l.begin(), l.end());
  st.emitted = std::accumulate(emitted.begin(), emitted.end(), std::size_t(0));
  st.distinct_sets = sets.size();

  std::vector<Mask> order(sets.begin(), sets.end());
  std::vector<Analysis> an(order.size());
  parallel_for(order.size(), jobs, [&](std::size_t i, int) { an[i] = analyse(order[i]); });

  struct Slot {
    Mask rep, closure_canon;
    std::size_t idx;
  };
  std::map<std::string, Slot> keyed;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (an[i].G.continuous()) {
      ++st.continuous;
      continue;
    }
    Mask cc = fast::canonical(an[i].closure).first;
    std::string key = hex(cc) + "|" + an[i].G.structure.str();
    auto it = keyed.find(key);
    if (it == keyed.end()) keyed.emplace(key, Slot{order[i], cc, i});
    // order is ascending, so the first representative is the least one
  }
  st.keys = keyed.size();

  std::vector<std::pair<std::string, Slot>> todo(keyed.begin(), keyed.end());
  std::vector<ClassificationEntry> out(todo.size());
  parallel_for(todo.size(), jobs, [&](std::size_t i, int) {
    auto &[key, s] = todo[i];
    auto &e = out[i];
    e.representative = fast::from_mask(s.rep);
    e.group = an[s.idx].G.structure;
    e.closure = fast::from_mask(an[s.idx].closure);
    e.key = key;
    e.certification = certify_family(s.closure_canon, cfg);
  });
  for (auto &e : out)
    if (e.certification.status != SmoothStatus::CertifiedSmooth) ++st.not_certified;
  if (stats) *stats = st;
  return out;
}

std::vector<AbelianGroupStructure> maximal_groups(const std::vector<AbelianGroupStructure> &gs) {
  std::map<std::string, AbelianGroupStructure> uniq;
  for (auto &g : gs)
    if (g.finite()) uniq.emplace(g.str(), canonical_group(g.invariant_factors));
  std::vector<AbelianGroupStructure> all;
  for (auto &[k, g] : uniq) all.push_back(g);
  std::vector<AbelianGroupStructure> out;
  for (auto &g : all) {
    bool dominated = false;
    for (auto &h : all)
      if (!g.isomorphic(h) && embeds(g, h)) dominated = true;
    if (!dominated) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](auto &a, auto &b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.invariant_factors < b.invariant_factors;
  });
  return out;
}

std::vector<AbelianGroupStructure> maximal_groups(const std::vector<ClassificationEntry> &es) {
  std::vector<AbelianGroupStructure> gs;
  for (auto &e : es)
    if (e.certification.status == SmoothStatus::CertifiedSmooth) gs.push_back(e.group);
  return maximal_groups(gs);
}

std::vector<ClassificationEntry> compact_table(const std::vector<ClassificationEntry> &es,
                                               SubsumptionLog *log) {
  std::vector<std::size_t> idx(es.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](auto a, auto b) { return es[a].group.order() > es[b].group.order(); });
  std::vector<std::vector<Mask>> parts(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    parts[i] = partition_masks(symmetry_group(es[i].representative));

  auto coarsens = [&](const std::vector<Mask> &coarse, const std::vector<Mask> &fine) {
    for (std::size_t p = 0; p < fast::permutations().size(); ++p) {
      bool ok = true;
      for (Mask f : fine) {
        Mask g = fast::permute(f, p);
        bool inside = false;
        for (Mask c : coarse)
          if ((g & ~c) == 0) {
            inside = true;
            break;
          }
        if (!inside) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };

  std::vector<std::size_t> kept;
  for (auto i : idx) {
    const auto &e = es[i];
    std::optional<std::size_t> by;
    for (auto k : kept) {
      const auto &f = es[k];
      if (e.group.order() < f.group.order() && embeds(e.group, f.group) &&
          parts[i].size() <= parts[k].size() && coarsens(parts[i], parts[k])) {
        by = k;
        break;
      }
    }
    if (by) {
      if (log) log->removed.emplace_back(e.key, es[*by].key);
    } else {
      kept.push_back(i);
    }
  }
  std::sort(kept.begin(), kept.end());
  std::vector<ClassificationEntry> out;
  for (auto k : kept) out.push_back(es[k]);
  return out;
}

FixtureReport verify_fixture_table(const std::string &path) {
  FixtureReport r;
  for (auto &f : load_diag_fixtures(path)) {
    ++r.total;
    auto G = symmetry_group(f.set);
    std::string where = "line " + std::to_string(f.line) + ": ";
    if (!G.structure.isomorphic(f.group))
      r.mismatches.push_back(where + "group " + G.structure.str() + " expected " + f.group.str());
    else if (!f.closure.empty() && !(closure(G) == f.closure))
      r.mismatches.push_back(where + "closure " + closure(G).str());
  }
  return r;
}

std::vector<AbelianGroupStructure> load_theorem_groups(const std::string &path) {
  std::vector<AbelianGroupStructure> out;
  for (auto line : read_form_lines(path)) {
    line.erase(std::remove_if(line.begin(), line.end(),
                              [](char c) { return c == '[' || c == ']'; }),
               line.end());
    out.push_back(canonical_group(parse_int_list(line)));
  }
  return out;
}

TheoremVerdict check_theorem(const std::vector<AbelianGroupStructure> &computed,
                             const std::vector<AbelianGroupStructure> &reference) {
  TheoremVerdict v;
  for (auto &r : reference) {
    bool found = std::any_of(computed.begin(), computed.end(),
                             [&](auto &c) { return c.isomorphic(r); });
    if (!found) v.missing.push_back(r.str());
  }
  for (auto &c : computed) {
    if (std::any_of(reference.begin(), reference.end(), [&](auto &r) { return c.isomorphic(r); }))
      continue;
    v.unexpected.push_back(c.str());
    if (std::none_of(reference.begin(), reference.end(), [&](auto &r) { return embeds(c, r); }))
      v.non_embedding.push_back(c.str());
  }
  v.pass = v.missing.empty() && v.unexpected.empty() && !computed.empty();
  return v;
}

} // namespace cf
