#pragma once

#include <optional>

#include "gtop/space.hpp"

namespace gtop {

/// Evidence that a set splits into two separated halves.
struct SeparationWitness {
  Subset u, v;
  Subset closure_u, closure_v;
};

struct ConnectivityVerdict {
  bool connected;
  std::optional<SeparationWitness> witness;
};

/// True iff Cl(u) misses v and Cl(v) misses u.
bool are_separated(const GTSpace& x, const Subset& u, const Subset& v);

inline constexpr int kConnectivityCarrierCap = 20;
inline constexpr int kComponentCap = 16;

/// Scans every bipartition of the carrier into two nonempty parts; false with
/// the first separated pair found (ascending order, point 0 in u).
ConnectivityVerdict is_connected(const GTSpace& x);

/// Connectivity of a nonempty subset under its subspace topology.
bool is_connected_subset(const GTSpace& x, const Subset& a);

/// Union of every connected subset of a containing p, computed by scanning
/// all subsets of a with memoized connectivity. The result is re-checked to
/// be connected.
Subset component_of(const GTSpace& x, const Subset& a, int p,
                    int cap = kComponentCap);

/// Distinct components of a (one per point), ascending by bit pattern.
std::vector<Subset> components_of(const GTSpace& x, const Subset& a,
                                  int cap = kComponentCap);

/// Per-space handle into the process-wide connectivity memo. Values are
/// idempotent, so concurrent recomputation is harmless.
class SpaceConnectivity {
 public:
  explicit SpaceConnectivity(const GTSpace& x);
  bool connected(word_t a) const;
  const GTSpace& space() const { return x_; }

 private:
  GTSpace x_;
  void* entry_;  // memo slot owned by the global table
};

}  // namespace gtop
