#pragma once

#include "gtop/census.hpp"
#include "gtop/docs.hpp"
#include "gtop/topgroup.hpp"
#include "oracle.hpp"

namespace fixtures {

using namespace gtop;

inline SetFamily family_of_sets(int n,
                                const std::vector<std::vector<int>>& sets) {
  return SetFamily::from_sets(n, sets);
}

/// {∅, {0,1}, {1,2}, {0,1,2}} on three points; the running example for
/// interior/closure edge cases.
inline GenTopology chain3() {
  return validate_topology(
      family_of_sets(3, {{}, {0, 1}, {1, 2}, {0, 1, 2}}), 3);
}

/// Union closure of the six 2-element subsets of a 4-point carrier: the
/// cosets of the three order-2 subgroups of the Klein group. 12 members.
inline GenTopology klein_pair_topology() {
  return union_closure(
      family_of_sets(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}}), 4);
}

inline GTopGroup klein_pair_instance() {
  Diagnosis d = check_gtop_group(catalog("klein4"), klein_pair_topology());
  if (!d.certified()) throw Error("fixture failed to certify");
  return *d.instance;
}

/// Family converters between the library types and the oracle containers.
inline oracle::Family to_oracle(const GenTopology& t) {
  oracle::Family fam;
  for (word_t w : t.words()) {
    oracle::Set s;
    for (int x : Subset(w, t.carrier()).elements()) s.insert(x);
    fam.insert(std::move(s));
  }
  return fam;
}

inline GenTopology from_oracle(const oracle::Family& fam, int n) {
  std::vector<std::vector<int>> sets;
  for (const oracle::Set& s : fam) sets.emplace_back(s.begin(), s.end());
  return validate_topology(SetFamily::from_sets(n, sets), n);
}

inline word_t word_of(const oracle::Set& s) {
  word_t w = 0;
  for (int x : s) w |= word_t{1} << x;
  return w;
}

/// Every map between the given carriers as an image table.
inline std::vector<GTMap> all_maps(int dom, int cod) {
  std::vector<GTMap> out;
  std::vector<int> images(static_cast<std::size_t>(dom), 0);
  while (true) {
    out.emplace_back(dom, cod, images);
    int i = 0;
    for (; i < dom; ++i) {
      if (++images[static_cast<std::size_t>(i)] < cod) break;
      images[static_cast<std::size_t>(i)] = 0;
    }
    if (i == dom) break;
  }
  return out;
}

/// All topologies on carrier n as GenTopology values (test-local oracle
/// enumeration; practical to n = 4).
inline std::vector<GenTopology> oracle_topologies(int n) {
  std::vector<GenTopology> out;
  for (const oracle::Family& fam : oracle::all_topologies(n))
    out.push_back(from_oracle(fam, n));
  return out;
}

}  // namespace fixtures
