#pragma once

#include "gtop/mapping.hpp"
#include "gtop/topology.hpp"

namespace gtop {

/// A carrier with a generalized topology on it.
struct GTSpace {
  GenTopology t;

  explicit GTSpace(GenTopology topology) : t(std::move(topology)) {}
  int n() const { return t.carrier(); }
  bool operator==(const GTSpace& o) const { return t == o.t; }
};

GTSpace discrete_space(int n);

struct SubspaceResult {
  GTSpace space;
  /// embedding[i] = original index of subspace point i (ascending).
  std::vector<int> embedding;
};

/// Carrier re-indexed to |y| points; opens are the traces of the ambient
/// opens.
SubspaceResult subspace(const GTSpace& x, const Subset& y);

/// Compresses an ambient subset to subspace coordinates (w must be within y).
word_t compress_to_subspace(word_t w, word_t y);

/// Expands a subspace-coordinate subset back to ambient coordinates.
word_t expand_from_subspace(word_t w, word_t y);

/// Product space on carrier a.n * b.n with (x, y) encoded as x * b.n + y.
/// The topology is the union closure of all open rectangles. Results are
/// memoized per factor pair.
GTSpace product(const GTSpace& a, const GTSpace& b);

/// The rectangle u x v in product encoding.
word_t rectangle_word(word_t u, word_t v, int bn);

bool is_continuous(const GTMap& f, const GTSpace& x, const GTSpace& y);

/// Neighborhood continuity at p. When no open contains p but some open
/// contains f(p), the requirement is unsatisfiable and the result is false.
bool is_pointwise_continuous_at(const GTMap& f, const GTSpace& x,
                                const GTSpace& y, int p);

bool is_homeomorphism(const GTMap& f, const GTSpace& x, const GTSpace& y);

bool is_open_map(const GTMap& f, const GTSpace& x, const GTSpace& y);

bool is_t2(const GTSpace& x);

bool is_regular(const GTSpace& x);

inline constexpr int kHomogeneityCap = 8;

/// True iff every ordered pair of points is connected by a self-
/// homeomorphism. Searches all carrier bijections, so the carrier is capped.
bool is_homogeneous(const GTSpace& x, int cap = kHomogeneityCap);

/// True iff every member of gamma is open and their union is the carrier.
bool is_open_covering(const GTSpace& x, const SetFamily& gamma);

}  // namespace gtop
