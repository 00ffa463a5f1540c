#include "gtop/topology.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace gtop {
namespace {

// Minimal members containing each point. Members are visited in ascending
// (popcount, word) order so the running result stays an antichain and each
// candidate needs one subset test per minimum found so far.
std::vector<std::vector<word_t>> compute_minimal_at(const SetFamily& fam) {
  const int n = fam.carrier();
  std::vector<word_t> order(fam.words());
  std::stable_sort(order.begin(), order.end(), [](word_t a, word_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<std::vector<word_t>> mins(static_cast<std::size_t>(n));
  for (word_t m : order) {
    for (word_t w = m; w != 0; w &= w - 1) {
      const int x = std::countr_zero(w);
      auto& mx = mins[static_cast<std::size_t>(x)];
      bool covered = false;
      for (word_t s : mx)
        if ((s & ~m) == 0) {
          covered = true;
          break;
        }
      if (!covered) mx.push_back(m);
    }
  }
  for (auto& mx : mins) std::sort(mx.begin(), mx.end());
  return mins;
}

}  // namespace

GenTopology GenTopology::from_union_closed(SetFamily family) {
  auto d = std::make_shared<Data>(std::move(family));
  const int n = d->family.carrier();
  d->members.reserve(d->family.size() * 2);
  for (word_t w : d->family.words()) {
    d->members.insert(w);
    d->union_all |= w;
  }
  d->strong = d->members.count(carrier_mask(n)) != 0;
  d->minimal_at = compute_minimal_at(d->family);
  return GenTopology(std::move(d));
}

GenTopology validate_topology(const SetFamily& family, int n) {
  if (family.carrier() != n) throw CarrierMismatch();
  if (!family.contains(word_t{0})) throw MissingEmptySet();
  std::unordered_set<word_t> members(family.words().begin(),
                                     family.words().end());
  const auto& ws = family.words();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      const word_t u = ws[i] | ws[j];
      if (members.count(u) == 0)
        throw NotUnionClosed("family is not union-closed: " +
                                 format_set(ws[i], n) + " \\/ " +
                                 format_set(ws[j], n) + " = " +
                                 format_set(u, n) + " is missing",
                             ws[i], ws[j]);
    }
  return GenTopology::from_union_closed(family);
}

GenTopology union_closure(const SetFamily& base, int n) {
  check_carrier_size(n);
  if (base.carrier() != n) throw CarrierMismatch();
  std::unordered_set<word_t> closed;
  closed.insert(0);
  std::vector<word_t> snapshot;
  for (word_t b : base.words()) {
    if (closed.count(b)) continue;
    // closed is union-closed, so adding {b | c : c in closed} and b keeps it
    // union-closed.
    snapshot.assign(closed.begin(), closed.end());
    for (word_t c : snapshot) closed.insert(b | c);
    closed.insert(b);
    if (closed.size() > kMaxTopologyMembers)
      throw CapacityExceeded("generated topology exceeds " +
                             std::to_string(kMaxTopologyMembers) + " members");
  }
  std::vector<word_t> words(closed.begin(), closed.end());
  return GenTopology::from_union_closed(SetFamily::from_words(n, words));
}

Subset interior(const GenTopology& t, const Subset& a) {
  if (a.carrier() != t.carrier()) throw CarrierMismatch();
  word_t res = 0;
  for (word_t m : t.words())
    if ((m & ~a.bits()) == 0) res |= m;
  return Subset(res, t.carrier());
}

Subset closure(const GenTopology& t, const Subset& a) {
  if (a.carrier() != t.carrier()) throw CarrierMismatch();
  const word_t mask = carrier_mask(t.carrier());
  word_t res = mask;  // the full carrier is closed since the empty set is open
  for (word_t m : t.words()) {
    const word_t closed_set = ~m & mask;
    if ((a.bits() & ~closed_set) == 0) res &= closed_set;
  }
  return Subset(res, t.carrier());
}

bool is_closure_point(const GenTopology& t, const Subset& a, int x) {
  if (a.carrier() != t.carrier()) throw CarrierMismatch();
  if (x < 0 || x >= t.carrier()) throw CarrierMismatch();
  for (word_t m : t.words())
    if (((m >> x) & 1) && (m & a.bits()) == 0) return false;
  return true;
}

SetFamily neighborhoods(const GenTopology& t, int x) {
  const int n = t.carrier();
  if (x < 0 || x >= n) throw CarrierMismatch();
  if (n > kNeighborhoodCarrierCap)
    throw CapacityExceeded(
        "materializing a neighborhood family needs carrier <= " +
        std::to_string(kNeighborhoodCarrierCap));
  const word_t mask = carrier_mask(n);
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (word_t m : t.minimal_opens_at(x)) {
    const word_t comp = ~m & mask;
    word_t sub = 0;
    while (true) {  // supersets of m = m union subsets of its complement
      seen[static_cast<std::size_t>(m | sub)] = true;
      if (sub == comp) break;
      sub = (sub - comp) & comp;
    }
  }
  std::vector<word_t> words;
  for (word_t w = 0; w <= mask; ++w)
    if (seen[static_cast<std::size_t>(w)]) words.push_back(w);
  return SetFamily::from_words(n, std::move(words));
}

bool is_base(const GenTopology& t, const SetFamily& b) {
  if (b.carrier() != t.carrier()) throw CarrierMismatch();
  for (word_t w : b.words())
    if (!t.is_open(w))
      throw NotSubfamily("candidate base member " +
                         format_set(w, t.carrier()) +
                         " is not open");
  for (word_t m : t.words()) {
    if (m == 0) continue;
    word_t covered = 0;
    for (word_t w : b.words())
      if ((w & ~m) == 0) covered |= w;
    if (covered != m) return false;
  }
  return true;
}

SetFamily base_at_point(const SetFamily& b, int x) {
  if (x < 0 || x >= b.carrier()) throw CarrierMismatch();
  std::vector<word_t> words;
  for (word_t w : b.words())
    if ((w >> x) & 1) words.push_back(w);
  return SetFamily::from_words(b.carrier(), std::move(words));
}

SetFamily canonical_base(const GenTopology& t) {
  std::vector<word_t> irreducible;
  for (word_t m : t.words()) {
    if (m == 0) continue;
    word_t covered = 0;
    for (word_t w : t.words())
      if (w != m && (w & ~m) == 0) covered |= w;
    if (covered != m) irreducible.push_back(m);
  }
  return SetFamily::from_words(t.carrier(), std::move(irreducible));
}

}  // namespace gtop
