#include "gtop/connect.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <unordered_map>

namespace gtop {
namespace {

word_t closure_word(const GenTopology& t, word_t a) {
  const word_t mask = carrier_mask(t.carrier());
  word_t res = mask;
  for (word_t m : t.words()) {
    const word_t closed_set = ~m & mask;
    if ((a & ~closed_set) == 0) res &= closed_set;
  }
  return res;
}

bool separated_words(const GenTopology& t, word_t u, word_t v) {
  return (closure_word(t, u) & v) == 0 && (closure_word(t, v) & u) == 0;
}

// Connectivity of a subset via separations inside it. Closures taken in the
// ambient space agree with subspace closures on traces (the subspace closed
// sets are exactly the traces of ambient closed sets), which the test suite
// pins against the literal subspace construction.
bool connected_words(const GenTopology& t, word_t a) {
  if (std::popcount(a) <= 1) return true;
  const word_t low = a & (~a + 1);
  // u ranges over proper subsets of a holding a's lowest element.
  for (word_t u = low;; u = ((u | ~a) + 1) & a) {
    if (u == a) break;
    if ((u & low) == 0) continue;
    const word_t v = a & ~u;
    if (separated_words(t, u, v)) return false;
  }
  return true;
}

struct MemoEntry {
  std::mutex mu;
  std::unordered_map<word_t, bool> known;
};

struct MemoTable {
  std::mutex mu;
  // Keyed by topology payload identity; the GenTopology copy keeps it alive.
  std::unordered_map<const void*, std::pair<GenTopology, MemoEntry*>> entries;
  ~MemoTable() {
    for (auto& [k, v] : entries) delete v.second;
  }
};

MemoTable& memo_table() {
  static MemoTable table;
  return table;
}

MemoEntry* entry_for(const GTSpace& x) {
  MemoTable& table = memo_table();
  std::lock_guard<std::mutex> lock(table.mu);
  auto it = table.entries.find(x.t.key());
  if (it != table.entries.end()) return it->second.second;
  auto* e = new MemoEntry();
  table.entries.emplace(x.t.key(), std::make_pair(x.t, e));
  return e;
}

}  // namespace

SpaceConnectivity::SpaceConnectivity(const GTSpace& x)
    : x_(x), entry_(entry_for(x)) {}

bool SpaceConnectivity::connected(word_t a) const {
  auto* e = static_cast<MemoEntry*>(entry_);
  {
    std::lock_guard<std::mutex> lock(e->mu);
    auto it = e->known.find(a);
    if (it != e->known.end()) return it->second;
  }
  const bool value = connected_words(x_.t, a);
  std::lock_guard<std::mutex> lock(e->mu);
  e->known[a] = value;
  return value;
}

bool are_separated(const GTSpace& x, const Subset& u, const Subset& v) {
  if (u.carrier() != x.n() || v.carrier() != x.n()) throw CarrierMismatch();
  return separated_words(x.t, u.bits(), v.bits());
}

ConnectivityVerdict is_connected(const GTSpace& x) {
  const int n = x.n();
  if (n > kConnectivityCarrierCap)
    throw CapacityExceeded("bipartition scan capped at carrier " +
                           std::to_string(kConnectivityCarrierCap));
  if (n <= 1) return {true, std::nullopt};
  const word_t full = carrier_mask(n);
  for (word_t u = 1; u != full; u += 2) {
    const word_t v = full & ~u;
    if (separated_words(x.t, u, v)) {
      SeparationWitness w{Subset(u, n), Subset(v, n),
                          Subset(closure_word(x.t, u), n),
                          Subset(closure_word(x.t, v), n)};
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

bool is_connected_subset(const GTSpace& x, const Subset& a) {
  if (a.carrier() != x.n()) throw CarrierMismatch();
  if (a.is_empty()) throw EmptySubspace();
  return SpaceConnectivity(x).connected(a.bits());
}

Subset component_of(const GTSpace& x, const Subset& a, int p, int cap) {
  if (a.carrier() != x.n()) throw CarrierMismatch();
  if (!a.contains(p)) throw PointNotInSet();
  if (a.size() > cap)
    throw CapacityExceeded("component scan capped at " + std::to_string(cap) +
                           " points");
  const SpaceConnectivity conn(x);
  const word_t pbit = word_t{1} << p;
  word_t acc = 0;
  for (word_t s = a.bits();; s = (s - 1) & a.bits()) {
    if ((s & pbit) && conn.connected(s)) acc |= s;
    if (s == 0) break;
  }
  if (!conn.connected(acc))
    throw PostconditionViolation(
        "component union is not connected at point " + std::to_string(p));
  return Subset(acc, x.n());
}

std::vector<Subset> components_of(const GTSpace& x, const Subset& a, int cap) {
  std::vector<word_t> seen;
  std::vector<Subset> out;
  for (int p : a.elements()) {
    bool covered = false;
    for (word_t w : seen)
      if ((w >> p) & 1) {
        covered = true;
        break;
      }
    if (covered) continue;
    Subset c = component_of(x, a, p, cap);
    seen.push_back(c.bits());
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Subset& l, const Subset& r) { return l.bits() < r.bits(); });
  return out;
}

}  // namespace gtop
