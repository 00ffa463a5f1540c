#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include "gtop/set_family.hpp"

namespace gtop {

/// A validated union-closed family containing the empty set.
///
/// Instances are immutable and share their data, so copies are cheap and any
/// value may be used from several threads at once. Construction goes through
/// validate_topology / union_closure (or, for families that are union-closed
/// by construction such as traces and products, from_union_closed).
class GenTopology {
 public:
  const SetFamily& family() const { return d_->family; }
  int carrier() const { return d_->family.carrier(); }
  bool strong() const { return d_->strong; }
  std::size_t size() const { return d_->family.size(); }

  bool is_open(word_t w) const { return d_->members.count(w) != 0; }
  bool is_open(const Subset& s) const {
    if (s.carrier() != carrier()) throw CarrierMismatch();
    return is_open(s.bits());
  }
  bool is_closed(word_t w) const {
    return is_open(~w & carrier_mask(carrier()));
  }
  bool is_closed(const Subset& s) const { return is_open(s.complement()); }

  const std::vector<word_t>& words() const { return d_->family.words(); }

  /// Union of every member; equals the full carrier iff an open covering
  /// exists.
  word_t union_of_all() const { return d_->union_all; }

  /// Inclusion-minimal members containing x. Every open containing x has one
  /// of these below it, which is what makes neighborhood and separation
  /// checks cheap.
  const std::vector<word_t>& minimal_opens_at(int x) const {
    if (x < 0 || x >= carrier()) throw CarrierMismatch();
    return d_->minimal_at[static_cast<std::size_t>(x)];
  }

  std::vector<word_t> opens_containing(int x) const {
    if (x < 0 || x >= carrier()) throw CarrierMismatch();
    std::vector<word_t> out;
    for (word_t w : words())
      if ((w >> x) & 1) out.push_back(w);
    return out;
  }

  /// Identity of the shared payload; stable key for caches.
  const void* key() const { return d_.get(); }

  bool operator==(const GenTopology& o) const {
    return d_ == o.d_ || d_->family == o.d_->family;
  }

  /// Wraps a family that is union-closed and contains the empty set by
  /// construction (traces, products, generated closures). Not validated.
  static GenTopology from_union_closed(SetFamily family);

 private:
  struct Data {
    SetFamily family;
    bool strong = false;
    word_t union_all = 0;
    std::unordered_set<word_t> members;
    std::vector<std::vector<word_t>> minimal_at;
    explicit Data(SetFamily f) : family(std::move(f)) {}
  };

  explicit GenTopology(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

/// Growth guard for generated closures (products of near-discrete factors
/// explode combinatorially). Large enough for the product of two discrete
/// four-point factors.
inline constexpr std::size_t kMaxTopologyMembers = std::size_t{1} << 17;

/// Certifies that `family` is a generalized topology over carrier n.
/// Throws MissingEmptySet or NotUnionClosed (with the offending pair).
GenTopology validate_topology(const SetFamily& family, int n);

/// Smallest generalized topology containing every member of `base`.
GenTopology union_closure(const SetFamily& base, int n);

/// Union of all members contained in a.
Subset interior(const GenTopology& t, const Subset& a);

/// Intersection of all closed sets containing a.
Subset closure(const GenTopology& t, const Subset& a);

/// True iff every open containing x intersects a.
bool is_closure_point(const GenTopology& t, const Subset& a, int x);

/// Materializes the neighborhood family at x: all V that contain some open
/// O with x in O. Carrier is capped because the family can have 2^n members.
SetFamily neighborhoods(const GenTopology& t, int x);

inline constexpr int kNeighborhoodCarrierCap = 20;

/// True iff every nonempty member of t is a union of members of b.
/// Throws NotSubfamily when b is not contained in t.
bool is_base(const GenTopology& t, const SetFamily& b);

/// The subfamily of b whose members contain x.
SetFamily base_at_point(const SetFamily& b, int x);

/// The members that are not unions of strictly smaller members. This is the
/// smallest base: it is contained in every base of t.
SetFamily canonical_base(const GenTopology& t);

/// Lazy view over the neighborhood systems of a topology.
class NeighborhoodSystem {
 public:
  explicit NeighborhoodSystem(GenTopology t) : t_(std::move(t)) {}

  bool contains(int x, const Subset& v) const {
    if (v.carrier() != t_.carrier()) throw CarrierMismatch();
    for (word_t m : t_.minimal_opens_at(x))
      if ((m & ~v.bits()) == 0) return true;
    return false;
  }

  const std::vector<word_t>& minimal_at(int x) const {
    return t_.minimal_opens_at(x);
  }

  const GenTopology& topology() const { return t_; }

 private:
  GenTopology t_;
};

}  // namespace gtop
