#include "gtop/space.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

namespace gtop {

GTSpace discrete_space(int n) {
  check_carrier_size(n);
  if (n > 20) throw CapacityExceeded("discrete space materialization capped");
  std::vector<word_t> words(std::size_t{1} << n);
  std::iota(words.begin(), words.end(), word_t{0});
  return GTSpace(GenTopology::from_union_closed(
      SetFamily::from_words(n, std::move(words))));
}

word_t compress_to_subspace(word_t w, word_t y) {
  word_t out = 0;
  int i = 0;
  for (word_t rest = y; rest != 0; rest &= rest - 1, ++i)
    if ((w >> std::countr_zero(rest)) & 1) out |= word_t{1} << i;
  return out;
}

word_t expand_from_subspace(word_t w, word_t y) {
  word_t out = 0;
  int i = 0;
  for (word_t rest = y; rest != 0; rest &= rest - 1, ++i)
    if ((w >> i) & 1) out |= word_t{1} << std::countr_zero(rest);
  return out;
}

SubspaceResult subspace(const GTSpace& x, const Subset& y) {
  if (y.carrier() != x.n()) throw CarrierMismatch();
  if (y.is_empty()) throw EmptySubspace();
  const int m = y.size();
  std::vector<word_t> traces;
  traces.reserve(x.t.size());
  for (word_t w : x.t.words())
    traces.push_back(compress_to_subspace(w & y.bits(), y.bits()));
  return SubspaceResult{
      GTSpace(GenTopology::from_union_closed(
          SetFamily::from_words(m, std::move(traces)))),
      y.elements()};
}

word_t rectangle_word(word_t u, word_t v, int bn) {
  word_t out = 0;
  for (word_t rest = u; rest != 0; rest &= rest - 1)
    out |= v << (std::countr_zero(rest) * bn);
  return out;
}

GTSpace product(const GTSpace& a, const GTSpace& b) {
  const int pn = a.n() * b.n();
  if (pn > kMaxCarrier)
    throw CapacityExceeded("product carrier exceeds 64 points");

  static std::mutex memo_mu;
  static std::map<std::pair<const void*, const void*>, GenTopology> memo;
  const auto key = std::make_pair(a.t.key(), b.t.key());
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    auto it = memo.find(key);
    if (it != memo.end()) return GTSpace(it->second);
  }

  std::vector<word_t> rects;
  rects.reserve(a.t.size() * b.t.size());
  for (word_t u : a.t.words())
    for (word_t v : b.t.words()) rects.push_back(rectangle_word(u, v, b.n()));
  GenTopology t = union_closure(SetFamily::from_words(pn, std::move(rects)), pn);

  std::lock_guard<std::mutex> lock(memo_mu);
  memo.emplace(key, t);
  return GTSpace(std::move(t));
}

bool is_continuous(const GTMap& f, const GTSpace& x, const GTSpace& y) {
  if (f.dom() != x.n() || f.cod() != y.n()) throw CarrierMismatch();
  for (word_t w : y.t.words())
    if (!x.t.is_open(f.preimage_word(w))) return false;
  return true;
}

bool is_pointwise_continuous_at(const GTMap& f, const GTSpace& x,
                                const GTSpace& y, int p) {
  if (f.dom() != x.n() || f.cod() != y.n()) throw CarrierMismatch();
  if (p < 0 || p >= x.n()) throw CarrierMismatch();
  const auto& target_mins = y.t.minimal_opens_at(f(p));
  if (target_mins.empty()) return true;
  const auto& source_mins = x.t.minimal_opens_at(p);
  if (source_mins.empty()) return false;
  // Minimal neighborhoods on both sides decide the full quantification:
  // shrinking V makes the requirement harder, shrinking U keeps any witness.
  for (word_t v : target_mins) {
    bool found = false;
    for (word_t u : source_mins)
      if ((f.image_word(u) & ~v) == 0) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool is_homeomorphism(const GTMap& f, const GTSpace& x, const GTSpace& y) {
  if (f.dom() != x.n() || f.cod() != y.n()) throw CarrierMismatch();
  if (!f.bijective()) return false;
  return is_continuous(f, x, y) && is_continuous(f.inverse(), y, x);
}

bool is_open_map(const GTMap& f, const GTSpace& x, const GTSpace& y) {
  if (f.dom() != x.n() || f.cod() != y.n()) throw CarrierMismatch();
  for (word_t w : x.t.words())
    if (!y.t.is_open(f.image_word(w))) return false;
  return true;
}

bool is_t2(const GTSpace& x) {
  const int n = x.n();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      bool separated = false;
      for (word_t u : x.t.minimal_opens_at(p)) {
        for (word_t v : x.t.minimal_opens_at(q))
          if ((u & v) == 0) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

bool is_regular(const GTSpace& x) {
  const int n = x.n();
  const word_t mask = carrier_mask(n);
  for (word_t open_w : x.t.words()) {
    const word_t f = ~open_w & mask;  // closed sets are complements of opens
    for (int p = 0; p < n; ++p) {
      if ((f >> p) & 1) continue;
      bool ok = false;
      for (word_t u : x.t.minimal_opens_at(p)) {
        if ((u & f) != 0) continue;
        if (x.t.is_open(f)) {  // F itself as the separating open
          ok = true;
          break;
        }
        for (word_t v : x.t.words())
          if ((f & ~v) == 0 && (u & v) == 0) {
            ok = true;
            break;
          }
        if (ok) break;
      }
      if (!ok) return false;
    }
  }
  return true;
}

bool is_homogeneous(const GTSpace& x, int cap) {
  const int n = x.n();
  if (n > cap)
    throw CapacityExceeded("homogeneity search capped at carrier " +
                           std::to_string(cap));
  std::vector<std::vector<bool>> reached(
      static_cast<std::size_t>(n),
      std::vector<bool>(static_cast<std::size_t>(n), false));
  int remaining = n * n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool stabilizes = true;
    for (word_t w : x.t.words()) {
      word_t img = 0;
      for (word_t rest = w; rest != 0; rest &= rest - 1)
        img |= word_t{1}
               << perm[static_cast<std::size_t>(std::countr_zero(rest))];
      if (!x.t.is_open(img)) {
        stabilizes = false;
        break;
      }
    }
    if (!stabilizes) continue;
    for (int p = 0; p < n; ++p) {
      auto cell = reached[static_cast<std::size_t>(p)]
                         [static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
      if (!cell) {
        cell = true;
        if (--remaining == 0) return true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return remaining == 0;
}

bool is_open_covering(const GTSpace& x, const SetFamily& gamma) {
  if (gamma.carrier() != x.n()) throw CarrierMismatch();
  word_t covered = 0;
  for (word_t w : gamma.words()) {
    if (!x.t.is_open(w)) return false;
    covered |= w;
  }
  return covered == carrier_mask(x.n());
}

}  // namespace gtop
