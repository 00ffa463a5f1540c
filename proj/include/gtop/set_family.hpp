#pragma once

#include <algorithm>
#include <vector>

#include "gtop/subset.hpp"

namespace gtop {

/// A duplicate-free family of subsets over one carrier, kept strictly
/// ascending by bit pattern. Two families are equal iff their word lists are.
class SetFamily {
 public:
  explicit SetFamily(int n) : n_(n) { check_carrier_size(n); }

  /// Canonicalizing factory: sorts and deduplicates.
  static SetFamily from_words(int n, std::vector<word_t> words) {
    check_carrier_size(n);
    const word_t mask = carrier_mask(n);
    for (word_t w : words)
      if ((w & ~mask) != 0) throw Error("family member outside carrier");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    SetFamily f(n);
    f.words_ = std::move(words);
    return f;
  }

  static SetFamily from_sets(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<word_t> words;
    words.reserve(sets.size());
    for (const auto& s : sets) words.push_back(Subset::of(s, n).bits());
    return from_words(n, std::move(words));
  }

  int carrier() const { return n_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::vector<word_t>& words() const { return words_; }

  bool contains(word_t w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }
  bool contains(const Subset& s) const {
    if (s.carrier() != n_) throw CarrierMismatch();
    return contains(s.bits());
  }

  Subset at(std::size_t i) const { return Subset(words_[i], n_); }

  std::vector<Subset> subsets() const {
    std::vector<Subset> out;
    out.reserve(words_.size());
    for (word_t w : words_) out.emplace_back(w, n_);
    return out;
  }

  bool operator==(const SetFamily&) const = default;

 private:
  int n_;
  std::vector<word_t> words_;
};

}  // namespace gtop
