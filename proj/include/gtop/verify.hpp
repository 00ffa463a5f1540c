#pragma once

#include <variant>

#include <json.hpp>

#include "gtop/census.hpp"

namespace gtop::verify {

enum class TheoremClass { Proven, Conjecture };

/// What a theorem checker consumes.
enum class InstanceKind { Space, MapPair, Group, MorphismPair };

struct TheoremEntry {
  std::string id;
  std::string statement;
  TheoremClass cls;
  InstanceKind kind;
};

/// All 28 registered theorems, T01..T28, each exactly once.
const std::vector<TheoremEntry>& registry();

/// Throws UnknownTheorem for an unregistered id.
const TheoremEntry& lookup(const std::string& id);

struct SpaceInstance {
  GTSpace space;
  std::string label;
};

struct MapPairInstance {
  GTSpace dom;
  GTSpace cod;
  GTMap f;
  std::string label;
};

struct GroupInstance {
  GTopGroup g;
  std::string label;
};

struct MorphismPairInstance {
  GTopGroup a;
  GTopGroup b;
  GTMap f;
  std::string label;
};

using Instance =
    std::variant<SpaceInstance, MapPairInstance, GroupInstance,
                 MorphismPairInstance>;

std::string instance_label(const Instance& inst);

enum class VerdictKind { Holds, Fails, Skipped };

struct Verdict {
  VerdictKind kind = VerdictKind::Holds;
  std::string summary;
  nlohmann::json witness;  // structured failure evidence
  std::vector<std::string> notes;

  static Verdict holds() { return Verdict{}; }
  static Verdict fails(std::string summary, nlohmann::json witness) {
    return Verdict{VerdictKind::Fails, std::move(summary), std::move(witness),
                   {}};
  }
  static Verdict skipped(std::string reason) {
    return Verdict{VerdictKind::Skipped, std::move(reason), {}, {}};
  }
};

struct RunOptions {
  std::uint64_t seed = 0;
  /// Extra hypothesis for T12/T13: only consider instances whose identity
  /// neighborhoods are closed under intersection locally at e.
  bool require_local_intersection_base = false;
  /// Subset quantifiers are exhaustive up to this carrier size, deterministic
  /// samples beyond it (noted in the verdict).
  int exhaustive_subset_limit = 8;
};

/// Runs one theorem checker. The instance kind must match the registry entry
/// (KindMismatch otherwise). A failing verdict is only returned after its
/// witness reproduces on the independent definitional path; an irreproducible
/// witness raises an error, since it means the harness itself is broken.
Verdict run(const std::string& theorem_id, const Instance& instance,
            const RunOptions& opts = {});

/// Re-derives a recorded failure from raw definitions on the second code
/// path. True means the failure is genuine.
bool revalidate(const std::string& theorem_id, const Instance& instance,
                const nlohmann::json& witness);

/// Self-maps fed to map-pair theorems: identity, inversion, translations,
/// conjugations, a constant map, and every endomorphism.
std::vector<MapPairInstance> derive_map_pairs(const GroupInstance& gi);

/// Endomorphism morphism-pairs of one instance.
std::vector<MorphismPairInstance> derive_endo_morphisms(const GroupInstance& gi);

/// Homomorphism pairs between two instances.
std::vector<MorphismPairInstance> derive_cross_morphisms(
    const GroupInstance& a, const GroupInstance& b);

struct TheoremTally {
  std::string id;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t skipped = 0;
  std::vector<nlohmann::json> witnesses;
  std::vector<std::string> notes;
};

struct Report {
  std::vector<std::string> theorem_ids;
  census::StreamDescriptor stream;
  census::StreamStats stats;
  std::vector<TheoremTally> tallies;
  std::uint64_t seed = 0;
  std::uint64_t instances = 0;
  std::uint64_t checks = 0;
  bool proven_failure = false;
  bool conjecture_failure = false;
  double runtime_seconds = 0;  // serialized only on request
};

/// Number of ordered cross-instance pairs whose homomorphisms feed the
/// morphism-pair theorems (endomorphisms always run per instance).
inline constexpr std::size_t kCrossPairInstanceCap = 4;

/// Runs the given theorems over every instance, expanding each instance to
/// the kinds the theorems need. Deterministic for fixed inputs and options;
/// instances are checked in parallel and merged back in order.
Report sweep(const std::vector<std::string>& theorem_ids,
             const std::vector<GroupInstance>& instances,
             const census::StreamDescriptor& desc,
             const census::StreamStats& stats, const RunOptions& opts = {});

/// 0 all hold, 1 a proven theorem failed, 3 a conjecture found a
/// counterexample.
int exit_code(const Report& report);

nlohmann::json report_to_json(const Report& report,
                              bool include_runtime = false);

/// Labels every stream element "<prefix>#<index>".
std::vector<GroupInstance> label_stream(census::InstanceStream& stream,
                                        const std::string& prefix);

/// Theorem id sets: all, proven only, conjectures only.
std::vector<std::string> all_theorem_ids();
std::vector<std::string> proven_theorem_ids();
std::vector<std::string> conjecture_theorem_ids();

}  // namespace gtop::verify
