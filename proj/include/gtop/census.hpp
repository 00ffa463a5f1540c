#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gtop/topgroup.hpp"

namespace gtop::census {

enum class TopologyFilter { All, Strong, T2 };

inline constexpr int kExhaustiveCarrierCap = 3;

/// Every generalized topology on carrier n, each exactly once, in ascending
/// order of the candidate-family index. Exhaustive mode only; capped carrier.
std::vector<GenTopology> enumerate_topologies(
    int n, TopologyFilter filter = TopologyFilter::All);

/// Independent cross-check route: generate union closures of every subfamily
/// of nonempty subsets and deduplicate. Must produce the same set as
/// enumerate_topologies.
std::vector<GenTopology> enumerate_topologies_by_generation(int n);

enum class SearchStrategy { Exhaustive, CosetOrbit, RandomBase };

std::string strategy_name(SearchStrategy s);
SearchStrategy strategy_from_name(const std::string& name);

struct StreamDescriptor {
  std::string source;  // e.g. "search:klein4"
  std::string strategy;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
};

struct StreamStats {
  std::uint64_t candidates = 0;  // candidate topologies examined
  std::uint64_t yielded = 0;     // distinct certified instances
  bool budget_exhausted = false;
};

/// Deterministic, resumable stream of certified instances. The sequence is a
/// function of (strategy, budget, seed) alone; duplicates (same topology
/// reached by different candidates) are dropped.
class InstanceStream {
 public:
  InstanceStream(std::vector<GTopGroup> instances, StreamDescriptor desc,
                 StreamStats stats)
      : instances_(std::move(instances)),
        desc_(std::move(desc)),
        stats_(stats) {}

  std::optional<GTopGroup> next() {
    if (cursor_ >= instances_.size()) return std::nullopt;
    return instances_[cursor_++];
  }

  const std::vector<GTopGroup>& all() const { return instances_; }
  const StreamDescriptor& descriptor() const { return desc_; }
  const StreamStats& stats() const { return stats_; }

 private:
  std::vector<GTopGroup> instances_;
  StreamDescriptor desc_;
  StreamStats stats_;
  std::size_t cursor_ = 0;
};

/// Searches for topologies turning g into a certified instance.
///
/// exhaustive   — every topology on the carrier (carrier <= 3);
/// coset-orbit  — candidate bases are unions of left-translation orbits of
///                seed blocks, enumerated by orbit-subset size; translation
///                invariance of the base is necessary for the translation
///                maps to be homeomorphisms, so this prunes hard;
/// random-base  — seeded random base families, preceded by the all-singleton
///                base so the discrete instance always appears.
InstanceStream search_compatible(const FiniteGroup& g, SearchStrategy strategy,
                                 std::uint64_t budget, std::uint64_t seed);

inline constexpr int kRelabelCarrierCap = 6;

/// Number of distinct topologies, optionally up to carrier relabeling
/// (brute permutation action; capped carrier).
std::size_t canonical_count(const std::vector<GenTopology>& tops,
                            bool up_to_relabeling);

}  // namespace gtop::census
