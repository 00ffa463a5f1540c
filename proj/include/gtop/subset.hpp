#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gtop/error.hpp"

namespace gtop {

/// Membership word over carrier indices. Bit i set means element i present.
using word_t = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

/// All-ones word over the first n carrier indices.
constexpr word_t carrier_mask(int n) {
  return n >= kMaxCarrier ? ~word_t{0} : (word_t{1} << n) - 1;
}

inline void check_carrier_size(int n) {
  if (n < 1 || n > kMaxCarrier)
    throw CapacityExceeded("carrier size " + std::to_string(n) +
                           " outside [1, 64]");
}

/// A subset of the carrier {0..n-1}, stored as a machine word.
class Subset {
 public:
  Subset() = default;

  Subset(word_t bits, int n) : bits_(bits), n_(n) {
    check_carrier_size(n);
    if ((bits & ~carrier_mask(n)) != 0)
      throw Error("subset has bits outside its carrier");
  }

  static Subset empty(int n) { return Subset(0, n); }
  static Subset full(int n) { return Subset(carrier_mask(n), n); }

  static Subset single(int x, int n) {
    if (x < 0 || x >= n) throw CarrierMismatch();
    return Subset(word_t{1} << x, n);
  }

  static Subset of(std::initializer_list<int> xs, int n) {
    word_t w = 0;
    for (int x : xs) {
      if (x < 0 || x >= n) throw CarrierMismatch();
      w |= word_t{1} << x;
    }
    return Subset(w, n);
  }

  static Subset of(const std::vector<int>& xs, int n) {
    word_t w = 0;
    for (int x : xs) {
      if (x < 0 || x >= n) throw CarrierMismatch();
      w |= word_t{1} << x;
    }
    return Subset(w, n);
  }

  word_t bits() const { return bits_; }
  int carrier() const { return n_; }
  int size() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == carrier_mask(n_); }
  bool contains(int x) const { return x >= 0 && x < n_ && ((bits_ >> x) & 1); }

  Subset complement() const { return Subset(~bits_ & carrier_mask(n_), n_); }

  bool subset_of(const Subset& o) const {
    check_same(o);
    return (bits_ & ~o.bits_) == 0;
  }
  bool intersects(const Subset& o) const {
    check_same(o);
    return (bits_ & o.bits_) != 0;
  }

  friend Subset operator|(const Subset& a, const Subset& b) {
    a.check_same(b);
    return Subset(a.bits_ | b.bits_, a.n_);
  }
  friend Subset operator&(const Subset& a, const Subset& b) {
    a.check_same(b);
    return Subset(a.bits_ & b.bits_, a.n_);
  }
  friend Subset operator-(const Subset& a, const Subset& b) {
    a.check_same(b);
    return Subset(a.bits_ & ~b.bits_, a.n_);
  }

  bool operator==(const Subset&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (word_t w = bits_; w != 0; w &= w - 1)
      out.push_back(std::countr_zero(w));
    return out;
  }

  /// "{0,2}" style rendering, "{}" for the empty set.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int x : elements()) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    s += "}";
    return s;
  }

 private:
  void check_same(const Subset& o) const {
    if (n_ != o.n_) throw CarrierMismatch();
  }

  word_t bits_ = 0;
  int n_ = 1;
};

inline std::string format_set(word_t bits, int n) {
  return Subset(bits, n).to_string();
}

}  // namespace gtop
