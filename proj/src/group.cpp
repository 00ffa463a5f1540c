#include "gtop/group.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gtop {

std::vector<std::vector<int>> FiniteGroup::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    auto& row = out[static_cast<std::size_t>(x)];
    row.assign(table_.begin() + x * n_, table_.begin() + (x + 1) * n_);
  }
  return out;
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  check_carrier_size(n);
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw Error("table entry outside carrier");
      flat.push_back(v);
    }
  }
  auto op = [&](int x, int y) {
    return flat[static_cast<std::size_t>(x * n + y)];
  };

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = op(e, x) == x && op(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NoIdentity();

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (op(op(x, y), z) != op(x, op(y, z)))
          throw NotAssociative("not associative at (" + std::to_string(x) +
                                   "," + std::to_string(y) + "," +
                                   std::to_string(z) + ")",
                               x, y, z);

  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (op(x, y) == identity && op(y, x) == identity) {
        inverse[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (inverse[static_cast<std::size_t>(x)] < 0)
      throw NoInverse("element " + std::to_string(x) + " has no inverse", x);
  }
  return FiniteGroup(n, std::move(flat), identity, std::move(inverse));
}

Subset product_set(const FiniteGroup& g, const Subset& a, const Subset& b) {
  if (a.carrier() != g.order() || b.carrier() != g.order())
    throw CarrierMismatch();
  word_t out = 0;
  for (word_t wa = a.bits(); wa != 0; wa &= wa - 1) {
    const int x = std::countr_zero(wa);
    for (word_t wb = b.bits(); wb != 0; wb &= wb - 1)
      out |= word_t{1} << g.op(x, std::countr_zero(wb));
  }
  return Subset(out, g.order());
}

Subset inverse_set(const FiniteGroup& g, const Subset& a) {
  if (a.carrier() != g.order()) throw CarrierMismatch();
  word_t out = 0;
  for (word_t w = a.bits(); w != 0; w &= w - 1)
    out |= word_t{1} << g.inverse(std::countr_zero(w));
  return Subset(out, g.order());
}

Subset power_set(const FiniteGroup& g, const Subset& a, int k) {
  if (a.carrier() != g.order()) throw CarrierMismatch();
  if (k < 1) throw Error("setwise power needs k >= 1");
  Subset acc = a;
  for (int i = 1; i < k; ++i) acc = product_set(g, acc, a);
  return acc;
}

Subset conjugate_set(const FiniteGroup& g, int x, const Subset& a) {
  if (a.carrier() != g.order() || x < 0 || x >= g.order())
    throw CarrierMismatch();
  word_t out = 0;
  for (word_t w = a.bits(); w != 0; w &= w - 1)
    out |= word_t{1} << g.op(g.op(x, std::countr_zero(w)), g.inverse(x));
  return Subset(out, g.order());
}

bool is_subgroup(const FiniteGroup& g, const Subset& h) {
  if (h.carrier() != g.order()) throw CarrierMismatch();
  if (h.is_empty()) return false;
  return product_set(g, h, inverse_set(g, h)).subset_of(h);
}

bool is_normal(const FiniteGroup& g, const Subset& h) {
  if (!is_subgroup(g, h)) return false;
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_set(g, x, h) != h) return false;
  return true;
}

Subset generated_subgroup(const FiniteGroup& g, const Subset& gens) {
  if (gens.carrier() != g.order()) throw CarrierMismatch();
  word_t elems = word_t{1} << g.identity();
  elems |= gens.bits();
  bool grew = true;
  while (grew) {
    grew = false;
    word_t next = elems;
    for (word_t wa = elems; wa != 0; wa &= wa - 1) {
      const int x = std::countr_zero(wa);
      for (word_t wb = elems; wb != 0; wb &= wb - 1)
        next |= word_t{1} << g.op(x, std::countr_zero(wb));
    }
    if (next != elems) {
      elems = next;
      grew = true;
    }
  }
  return Subset(elems, g.order());
}

std::vector<Subset> subgroups(const FiniteGroup& g, int cap) {
  if (g.order() > cap)
    throw CapacityExceeded("subgroup enumeration capped at order " +
                           std::to_string(cap));
  std::set<word_t> found;
  found.insert(word_t{1} << g.identity());
  std::vector<word_t> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<word_t> next;
    for (word_t h : frontier)
      for (int x = 0; x < g.order(); ++x) {
        if ((h >> x) & 1) continue;
        const word_t grown =
            generated_subgroup(g, Subset(h | (word_t{1} << x), g.order()))
                .bits();
        if (found.insert(grown).second) next.push_back(grown);
      }
    frontier = std::move(next);
  }
  std::vector<Subset> out;
  out.reserve(found.size());
  for (word_t w : found) out.emplace_back(w, g.order());
  return out;
}

std::vector<Subset> left_cosets(const FiniteGroup& g, const Subset& h) {
  if (!is_subgroup(g, h)) throw NotASubgroup();
  std::vector<Subset> out;
  word_t covered = 0;
  for (int x = 0; x < g.order(); ++x) {
    if ((covered >> x) & 1) continue;
    Subset coset = product_set(g, Subset::single(x, g.order()), h);
    covered |= coset.bits();
    out.push_back(coset);
  }
  return out;
}

bool is_homomorphism(const GTMap& f, const FiniteGroup& g1,
                     const FiniteGroup& g2) {
  if (f.dom() != g1.order() || f.cod() != g2.order()) throw CarrierMismatch();
  for (int x = 0; x < g1.order(); ++x)
    for (int y = 0; y < g1.order(); ++y)
      if (f(g1.op(x, y)) != g2.op(f(x), f(y))) return false;
  return true;
}

Subset kernel(const GTMap& f, const FiniteGroup& g1, const FiniteGroup& g2) {
  if (f.dom() != g1.order() || f.cod() != g2.order()) throw CarrierMismatch();
  word_t out = 0;
  for (int x = 0; x < g1.order(); ++x)
    if (f(x) == g2.identity()) out |= word_t{1} << x;
  return Subset(out, g1.order());
}

std::vector<GTMap> homomorphisms(const FiniteGroup& g1,
                                 const FiniteGroup& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();

  // Greedy generating set; assignments of generator images are then
  // propagated by multiplication and verified on the full table.
  std::vector<int> gens;
  Subset closed = generated_subgroup(g1, Subset::empty(n1));
  for (int x = 0; x < n1; ++x)
    if (!closed.contains(x)) {
      gens.push_back(x);
      word_t w = closed.bits() | (word_t{1} << x);
      closed = generated_subgroup(g1, Subset(w, n1));
    }

  std::vector<GTMap> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    std::vector<int> img(static_cast<std::size_t>(n1), -1);
    img[static_cast<std::size_t>(g1.identity())] = g2.identity();
    for (std::size_t i = 0; i < gens.size(); ++i)
      img[static_cast<std::size_t>(gens[i])] = choice[i];
    bool consistent = true;
    bool progressed = true;
    while (progressed && consistent) {
      progressed = false;
      for (int x = 0; x < n1 && consistent; ++x) {
        if (img[static_cast<std::size_t>(x)] < 0) continue;
        for (int y = 0; y < n1; ++y) {
          if (img[static_cast<std::size_t>(y)] < 0) continue;
          const int xy = g1.op(x, y);
          const int v = g2.op(img[static_cast<std::size_t>(x)],
                              img[static_cast<std::size_t>(y)]);
          if (img[static_cast<std::size_t>(xy)] < 0) {
            img[static_cast<std::size_t>(xy)] = v;
            progressed = true;
          } else if (img[static_cast<std::size_t>(xy)] != v) {
            consistent = false;
            break;
          }
        }
      }
    }
    if (consistent &&
        std::none_of(img.begin(), img.end(), [](int v) { return v < 0; })) {
      GTMap f(n1, n2, img);
      if (is_homomorphism(f, g1, g2)) out.push_back(std::move(f));
    }
    // next assignment
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < n2) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  return out;
}

bool is_abelian(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.op(x, y) != g.op(y, x)) return false;
  return true;
}

namespace {

FiniteGroup from_permutations(std::vector<std::vector<int>> perms) {
  std::sort(perms.begin(), perms.end());
  const int n = static_cast<int>(perms.size());
  const int deg = static_cast<int>(perms.front().size());
  auto index_of = [&](const std::vector<int>& p) {
    const auto it = std::lower_bound(perms.begin(), perms.end(), p);
    return static_cast<int>(it - perms.begin());
  };
  std::vector<std::vector<int>> table(
      static_cast<std::size_t>(n),
      std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(static_cast<std::size_t>(deg));
      for (int i = 0; i < deg; ++i)
        comp[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(
                    i)])];
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          index_of(comp);
    }
  return validate_group(table);
}

std::vector<std::vector<int>> permutation_closure(
    std::vector<std::vector<int>> gens) {
  std::set<std::vector<int>> seen(gens.begin(), gens.end());
  const std::size_t deg = gens.front().size();
  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  seen.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(seen.begin(), seen.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        std::vector<int> comp(deg);
        for (std::size_t i = 0; i < deg; ++i)
          comp[i] = a[static_cast<std::size_t>(b[i])];
        if (seen.insert(comp).second) grew = true;
      }
  }
  return {seen.begin(), seen.end()};
}

FiniteGroup cyclic_group(int k) {
  std::vector<std::vector<int>> table(
      static_cast<std::size_t>(k),
      std::vector<int>(static_cast<std::size_t>(k)));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          (x + y) % k;
  return validate_group(table);
}

FiniteGroup klein_group() {
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = x ^ y;
  return validate_group(table);
}

FiniteGroup symmetric3_group() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(perms);
}

FiniteGroup dihedral4_group() {
  // symmetries of the square on vertices 0..3
  std::vector<std::vector<int>> gens = {{1, 2, 3, 0}, {3, 2, 1, 0}};
  return from_permutations(permutation_closure(gens));
}

FiniteGroup quaternion_group() {
  // index 2u+s encodes (-1)^s * basis[u] with basis 1, i, j, k
  auto mul = [](int a, int b) {
    const int sa = a & 1, ua = a >> 1;
    const int sb = b & 1, ub = b >> 1;
    int sign = sa ^ sb;
    int axis;
    if (ua == 0) {
      axis = ub;
    } else if (ub == 0) {
      axis = ua;
    } else if (ua == ub) {
      axis = 0;
      sign ^= 1;  // i*i = j*j = k*k = -1
    } else {
      axis = 6 - ua - ub;
      const bool fwd = (ua == 1 && ub == 2) || (ua == 2 && ub == 3) ||
                       (ua == 3 && ub == 1);
      if (!fwd) sign ^= 1;
    }
    return 2 * axis + sign;
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          mul(a, b);
  return validate_group(table);
}

}  // namespace

FiniteGroup catalog(const std::string& name) {
  if (name == "klein4") return klein_group();
  if (name == "s3") return symmetric3_group();
  if (name == "d4") return dihedral4_group();
  if (name == "q8") return quaternion_group();
  if (name.rfind("cyclic(", 0) == 0 && name.back() == ')') {
    const std::string arg = name.substr(7, name.size() - 8);
    int k = 0;
    try {
      k = std::stoi(arg);
    } catch (const std::exception&) {
      throw UnknownName("unknown group name: " + name);
    }
    if (k < 1 || k > 12)
      throw UnknownName("cyclic(k) supports 1 <= k <= 12, got " + arg);
    return cyclic_group(k);
  }
  throw UnknownName("unknown group name: " + name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (int k = 1; k <= 12; ++k)
    out.push_back("cyclic(" + std::to_string(k) + ")");
  out.push_back("klein4");
  out.push_back("s3");
  out.push_back("d4");
  out.push_back("q8");
  return out;
}

}  // namespace gtop
