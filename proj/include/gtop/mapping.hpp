#pragma once

#include <vector>

#include "gtop/subset.hpp"

namespace gtop {

/// A total function between carriers, given as an image table.
class GTMap {
 public:
  GTMap(int dom, int cod, std::vector<int> images)
      : dom_(dom), cod_(cod), images_(std::move(images)) {
    check_carrier_size(dom);
    check_carrier_size(cod);
    if (static_cast<int>(images_.size()) != dom)
      throw Error("image table length does not match domain carrier");
    for (int y : images_)
      if (y < 0 || y >= cod) throw Error("image entry outside codomain");
  }

  static GTMap identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
    return GTMap(n, n, std::move(im));
  }

  static GTMap constant(int dom, int cod, int value) {
    return GTMap(dom, cod, std::vector<int>(static_cast<std::size_t>(dom), value));
  }

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  word_t image_word(word_t w) const {
    word_t out = 0;
    for (word_t rest = w; rest != 0; rest &= rest - 1)
      out |= word_t{1} << images_[static_cast<std::size_t>(
                 std::countr_zero(rest))];
    return out;
  }

  word_t preimage_word(word_t w) const {
    word_t out = 0;
    for (int x = 0; x < dom_; ++x)
      if ((w >> images_[static_cast<std::size_t>(x)]) & 1)
        out |= word_t{1} << x;
    return out;
  }

  Subset image(const Subset& s) const {
    if (s.carrier() != dom_) throw CarrierMismatch();
    return Subset(image_word(s.bits()), cod_);
  }

  Subset preimage(const Subset& s) const {
    if (s.carrier() != cod_) throw CarrierMismatch();
    return Subset(preimage_word(s.bits()), dom_);
  }

  bool injective() const {
    word_t seen = 0;
    for (int y : images_) {
      const word_t b = word_t{1} << y;
      if (seen & b) return false;
      seen |= b;
    }
    return true;
  }

  bool surjective() const {
    return image_word(carrier_mask(dom_)) == carrier_mask(cod_);
  }

  bool bijective() const { return dom_ == cod_ && injective(); }

  GTMap inverse() const {
    if (!bijective()) throw Error("map is not bijective");
    std::vector<int> inv(static_cast<std::size_t>(dom_));
    for (int x = 0; x < dom_; ++x)
      inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
    return GTMap(cod_, dom_, std::move(inv));
  }

  /// outer after inner.
  static GTMap compose(const GTMap& outer, const GTMap& inner) {
    if (inner.cod_ != outer.dom_) throw CarrierMismatch();
    std::vector<int> im(static_cast<std::size_t>(inner.dom_));
    for (int x = 0; x < inner.dom_; ++x)
      im[static_cast<std::size_t>(x)] = outer(inner(x));
    return GTMap(inner.dom_, outer.cod_, std::move(im));
  }

  bool operator==(const GTMap&) const = default;

 private:
  int dom_;
  int cod_;
  std::vector<int> images_;
};

}  // namespace gtop
