#include "gtop/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "gtop/parallel.hpp"

namespace gtop::census {
namespace {

bool family_index_union_closed(std::uint32_t members, int subset_count) {
  // members is a bitmask over subset words 0..subset_count-1 (bit w set means
  // the subset with word w belongs to the family).
  for (int i = 0; i < subset_count; ++i) {
    if (!((members >> i) & 1)) continue;
    for (int j = i + 1; j < subset_count; ++j) {
      if (!((members >> j) & 1)) continue;
      if (!((members >> (i | j)) & 1)) return false;
    }
  }
  return true;
}

// Base members separate points iff the generated topology is T2: any
// separating open contains a base member around its point.
bool base_separates_points(const SetFamily& base, int n) {
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      bool found = false;
      for (word_t u : base.words()) {
        if (!((u >> p) & 1)) continue;
        for (word_t v : base.words())
          if (((v >> q) & 1) && (u & v) == 0) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

// Candidate bases generated sequentially up to the budget; certification is
// what costs, so it runs across the worker pool with results kept in
// candidate order.
struct CandidateSet {
  std::vector<SetFamily> bases;
  bool exhausted = false;  // generation stopped because the budget ran out
};

std::optional<GTopGroup> certify_base(const FiniteGroup& g,
                                      const SetFamily& base) {
  const int n = g.order();
  // T2 fails on the closure iff it fails on the base: any separating open
  // contains a base member around its point. Cheap reject before closing.
  if (n > 1 && !base_separates_points(base, n)) return std::nullopt;
  Diagnosis d = check_gtop_group(g, union_closure(base, n));
  if (!d.certified()) return std::nullopt;
  return d.instance;
}

std::vector<std::vector<word_t>> translation_orbits(const FiniteGroup& g) {
  const int n = g.order();
  std::set<std::vector<word_t>> orbits;
  const word_t mask = carrier_mask(n);
  for (word_t block = 1; block <= mask; ++block) {
    std::set<word_t> orbit;
    for (int a = 0; a < n; ++a)
      orbit.insert(
          product_set(g, Subset::single(a, n), Subset(block, n)).bits());
    orbits.emplace(orbit.begin(), orbit.end());
  }
  return {orbits.begin(), orbits.end()};
}

// Enumerates k-subsets of [0, m) in lexicographic order, calling fn with each
// until fn returns false.
template <typename Fn>
bool for_each_combination(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!fn(idx)) return false;
    if (k == 0) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

CandidateSet coset_orbit_candidates(const FiniteGroup& g,
                                    std::uint64_t budget) {
  const int n = g.order();
  if (n > kConnectivityCarrierCap)
    throw CapacityExceeded("coset-orbit block enumeration capped at order " +
                           std::to_string(kConnectivityCarrierCap));
  CandidateSet out;
  const auto orbits = translation_orbits(g);
  const std::size_t m = orbits.size();
  for (std::size_t k = 1; k <= m; ++k) {
    const bool finished =
        for_each_combination(m, k, [&](const std::vector<std::size_t>& idx) {
          if (out.bases.size() >= budget) return false;
          std::vector<word_t> words;
          for (std::size_t i : idx)
            words.insert(words.end(), orbits[i].begin(), orbits[i].end());
          out.bases.push_back(SetFamily::from_words(n, std::move(words)));
          return true;
        });
    if (!finished) {
      out.exhausted = true;
      return out;
    }
  }
  return out;
}

CandidateSet random_base_candidates(const FiniteGroup& g, std::uint64_t budget,
                                    std::uint64_t seed) {
  const int n = g.order();
  const word_t mask = carrier_mask(n);
  std::mt19937_64 rng(seed);
  CandidateSet out;

  // deterministic warm start: the all-singleton base (discrete instance)
  if (out.bases.size() < budget) {
    std::vector<word_t> singles;
    for (int x = 0; x < n; ++x) singles.push_back(word_t{1} << x);
    out.bases.push_back(SetFamily::from_words(n, std::move(singles)));
  }
  while (out.bases.size() < budget) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % (2 * n));
    std::set<word_t> words;
    for (std::size_t i = 0; i < k; ++i) words.insert(1 + rng() % mask);
    out.bases.push_back(SetFamily::from_words(n, {words.begin(), words.end()}));
  }
  out.exhausted = true;
  return out;
}

}  // namespace

std::vector<GenTopology> enumerate_topologies(int n, TopologyFilter filter) {
  check_carrier_size(n);
  if (n > kExhaustiveCarrierCap)
    throw CapacityExceeded("exhaustive topology enumeration capped at n = " +
                           std::to_string(kExhaustiveCarrierCap));
  const int subset_count = 1 << n;
  const word_t full = carrier_mask(n);
  std::vector<GenTopology> out;
  // Candidate families: the empty set plus any subfamily of the nonempty
  // subsets; the family bitmask always has bit 0 (the empty word) set.
  const std::uint32_t top = std::uint32_t{1} << (subset_count - 1);
  for (std::uint32_t choice = 0; choice < top; ++choice) {
    const std::uint32_t members = (choice << 1) | 1u;
    if (!family_index_union_closed(members, subset_count)) continue;
    std::vector<word_t> words;
    for (int w = 0; w < subset_count; ++w)
      if ((members >> w) & 1) words.push_back(static_cast<word_t>(w));
    GenTopology t =
        GenTopology::from_union_closed(SetFamily::from_words(n, words));
    if (filter == TopologyFilter::Strong && !t.is_open(full)) continue;
    if (filter == TopologyFilter::T2 && !is_t2(GTSpace(t))) continue;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<GenTopology> enumerate_topologies_by_generation(int n) {
  check_carrier_size(n);
  if (n > kExhaustiveCarrierCap)
    throw CapacityExceeded("exhaustive topology enumeration capped at n = " +
                           std::to_string(kExhaustiveCarrierCap));
  const int subset_count = 1 << n;
  std::set<std::vector<word_t>> seen;
  const std::uint32_t top = std::uint32_t{1} << (subset_count - 1);
  for (std::uint32_t choice = 0; choice < top; ++choice) {
    std::vector<word_t> base;
    for (int w = 1; w < subset_count; ++w)
      if ((choice >> (w - 1)) & 1) base.push_back(static_cast<word_t>(w));
    GenTopology t = union_closure(SetFamily::from_words(n, base), n);
    seen.insert(t.words());
  }
  std::vector<GenTopology> out;
  for (const auto& words : seen)
    out.push_back(
        GenTopology::from_union_closed(SetFamily::from_words(n, words)));
  return out;
}

std::string strategy_name(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::Exhaustive:
      return "exhaustive";
    case SearchStrategy::CosetOrbit:
      return "coset-orbit";
    case SearchStrategy::RandomBase:
      return "random-base";
  }
  return "?";
}

SearchStrategy strategy_from_name(const std::string& name) {
  if (name == "exhaustive") return SearchStrategy::Exhaustive;
  if (name == "coset-orbit") return SearchStrategy::CosetOrbit;
  if (name == "random-base") return SearchStrategy::RandomBase;
  throw UnknownName("unknown search strategy: " + name);
}

InstanceStream search_compatible(const FiniteGroup& g, SearchStrategy strategy,
                                 std::uint64_t budget, std::uint64_t seed) {
  StreamStats stats;
  std::vector<std::optional<GTopGroup>> results;

  if (strategy == SearchStrategy::Exhaustive) {
    if (g.order() > kExhaustiveCarrierCap)
      throw CapacityExceeded("exhaustive search needs order <= " +
                             std::to_string(kExhaustiveCarrierCap));
    std::vector<GenTopology> tops = enumerate_topologies(g.order());
    if (tops.size() > budget) {
      tops.erase(tops.begin() + static_cast<std::ptrdiff_t>(budget),
                 tops.end());
      stats.budget_exhausted = true;
    }
    results.resize(tops.size());
    parallel_for(tops.size(), [&](std::size_t i) {
      Diagnosis d = check_gtop_group(g, tops[i]);
      if (d.certified()) results[i] = d.instance;
    });
    stats.candidates = tops.size();
  } else {
    CandidateSet candidates =
        strategy == SearchStrategy::CosetOrbit
            ? coset_orbit_candidates(g, budget)
            : random_base_candidates(g, budget, seed);
    stats.budget_exhausted = candidates.exhausted;
    stats.candidates = candidates.bases.size();
    results.resize(candidates.bases.size());
    parallel_for(candidates.bases.size(), [&](std::size_t i) {
      results[i] = certify_base(g, candidates.bases[i]);
    });
  }

  // ordered dedup by topology
  std::set<std::vector<word_t>> seen;
  std::vector<GTopGroup> yielded;
  for (const auto& r : results) {
    if (!r) continue;
    if (!seen.insert(r->topology().words()).second) continue;
    yielded.push_back(*r);
  }
  stats.yielded = yielded.size();
  StreamDescriptor desc{"search", strategy_name(strategy), budget, seed};
  return InstanceStream(std::move(yielded), std::move(desc), stats);
}

std::size_t canonical_count(const std::vector<GenTopology>& tops,
                            bool up_to_relabeling) {
  std::set<std::vector<word_t>> distinct;
  if (!up_to_relabeling) {
    for (const auto& t : tops) distinct.insert(t.words());
    return distinct.size();
  }
  for (const auto& t : tops) {
    const int n = t.carrier();
    if (n > kRelabelCarrierCap)
      throw CapacityExceeded("relabeling dedup capped at carrier " +
                             std::to_string(kRelabelCarrierCap));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<word_t> best;
    do {
      std::vector<word_t> relabeled;
      relabeled.reserve(t.size());
      for (word_t w : t.words()) {
        word_t img = 0;
        for (int x = 0; x < n; ++x)
          if ((w >> x) & 1)
            img |= word_t{1} << perm[static_cast<std::size_t>(x)];
        relabeled.push_back(img);
      }
      std::sort(relabeled.begin(), relabeled.end());
      if (best.empty() || relabeled < best) best = std::move(relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    distinct.insert(best);
  }
  return distinct.size();
}

}  // namespace gtop::census
