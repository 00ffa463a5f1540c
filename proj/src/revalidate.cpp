#include <algorithm>

#include "gtop/naive.hpp"
#include "gtop/verify.hpp"

// Witness re-validation. Everything here re-derives the recorded failure
// from raw definitions through the gtop::naive containers; nothing touches
// the word-based checkers, their minimal-open caches, or the connectivity
// memo. A `true` return confirms the counterexample.

namespace gtop::verify {

using naive::Family;
using naive::Set;
using naive::Table;
using nlohmann::json;

namespace {

Set set_from_json(const json& a) {
  Set out;
  for (const auto& v : a) out.insert(v.get<int>());
  return out;
}

std::vector<int> images_from_json(const json& m) {
  return m.at("images").get<std::vector<int>>();
}

Set full_set(int n) { return naive::complement_in(Set{}, n); }

// All opens containing a point.
std::vector<Set> opens_around(const Family& fam, int x) {
  std::vector<Set> out;
  for (const Set& o : fam)
    if (o.count(x)) out.push_back(o);
  return out;
}

bool pointwise_continuous_at(const std::vector<int>& f, const Family& tx,
                             const Family& ty, int p) {
  // Open targets decide the neighborhood quantification.
  const int fp = f[static_cast<std::size_t>(p)];
  for (const Set& w : opens_around(ty, fp)) {
    bool found = false;
    for (const Set& u : opens_around(tx, p))
      if (naive::subset_of(naive::image(f, u), w)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Subgroup carriers re-indexed to 0..m-1.
struct SmallInstance {
  Table table;
  Family fam;
  int n;
};

SmallInstance restrict_naive(const GTopGroup& G, const Set& h) {
  const std::vector<int> emb(h.begin(), h.end());
  const int m = static_cast<int>(emb.size());
  std::vector<int> back(static_cast<std::size_t>(G.order()), -1);
  for (int i = 0; i < m; ++i)
    back[static_cast<std::size_t>(emb[static_cast<std::size_t>(i)])] = i;
  Table table(static_cast<std::size_t>(m),
              std::vector<int>(static_cast<std::size_t>(m)));
  const auto rows = G.group().rows();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          back[static_cast<std::size_t>(
              rows[static_cast<std::size_t>(emb[static_cast<std::size_t>(i)])]
                  [static_cast<std::size_t>(emb[static_cast<std::size_t>(j)])])];
  Family fam;
  for (const Set& o : naive::family_of(G.topology())) {
    Set trace;
    for (int x : o)
      if (back[static_cast<std::size_t>(x)] >= 0)
        trace.insert(back[static_cast<std::size_t>(x)]);
    if (!naive::is_member(fam, trace)) fam.push_back(std::move(trace));
  }
  return SmallInstance{std::move(table), std::move(fam), m};
}

bool naive_mult_violated_at(const SmallInstance& si, int x, int y,
                            const Set& open) {
  for (const Set& u : opens_around(si.fam, x))
    for (const Set& v : opens_around(si.fam, y))
      if (naive::subset_of(naive::set_product(si.table, u, v), open))
        return false;
  return true;
}

bool naive_instance_certifies(const SmallInstance& si) {
  if (!naive::t2(si.fam, si.n)) return false;
  for (const Set& o : si.fam) {
    if (!naive::is_member(si.fam, naive::set_inverse(si.table, o)))
      return false;
    for (int x = 0; x < si.n; ++x)
      for (int y = 0; y < si.n; ++y)
        if (o.count(naive::group_op(si.table, x, y)) &&
            naive_mult_violated_at(si, x, y, o))
          return false;
  }
  return true;
}

Set naive_component(const Family& fam, const Set& a, int p) {
  const std::vector<int> pts(a.begin(), a.end());
  const std::size_t k = pts.size();
  Set acc{p};
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    Set s;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) s.insert(pts[i]);
    if (!s.count(p)) continue;
    if (naive::connected_on(fam, s)) acc = naive::unite(acc, s);
  }
  return acc;
}

Family naive_union_closure(const std::vector<Set>& base) {
  Family closed{Set{}};
  for (const Set& b : base) {
    if (naive::is_member(closed, b)) continue;
    Family grown;
    for (const Set& c : closed) {
      Set u = naive::unite(b, c);
      if (!naive::is_member(closed, u) && !naive::is_member(grown, u))
        grown.push_back(std::move(u));
    }
    for (Set& g : grown) closed.push_back(std::move(g));
  }
  return closed;
}

}  // namespace

bool revalidate(const std::string& theorem_id, const Instance& instance,
                const json& witness) {
  // --- space-kind theorems -------------------------------------------------
  if (const auto* si = std::get_if<SpaceInstance>(&instance)) {
    const Family fam = naive::family_of(si->space.t);
    const int n = si->space.n();
    if (theorem_id == "T01") {
      const Set y = set_from_json(witness.at("subspace"));
      return naive::t2(fam, n) && !naive::t2_on(fam, y);
    }
    if (theorem_id == "T09") {
      Set covered;
      for (const Set& o : fam) covered = naive::unite(covered, o);
      return covered == full_set(n) && !naive::is_member(fam, full_set(n));
    }
    if (theorem_id == "T14") {
      const int p = witness.at("point").get<int>();
      return naive::t2(fam, n) &&
             !naive::is_member(fam, naive::complement_in(Set{p}, n));
    }
    if (theorem_id == "T25") {
      const Set a = set_from_json(witness.at("closed"));
      const Set comp = set_from_json(witness.at("component"));
      if (!naive::is_member(fam, naive::complement_in(a, n))) return false;
      if (comp.empty()) return false;
      const Set recomputed = naive_component(fam, a, *comp.begin());
      if (recomputed != comp) return false;
      return !naive::is_member(fam, naive::complement_in(comp, n));
    }
    return false;
  }

  // --- map-pair theorems ---------------------------------------------------
  if (const auto* mi = std::get_if<MapPairInstance>(&instance)) {
    const Family tx = naive::family_of(mi->dom.t);
    const Family ty = naive::family_of(mi->cod.t);
    const int nx = mi->dom.n();
    const int ny = mi->cod.n();
    const std::vector<int>& f = mi->f.images();
    if (theorem_id == "T02") {
      const Set y = set_from_json(witness.at("subspace"));
      const Set o = set_from_json(witness.at("open"));
      if (!naive::continuous(f, tx, nx, ty)) return false;
      if (!naive::is_member(ty, o)) return false;
      const Set pre_in_y = naive::intersect(naive::preimage(f, o, nx), y);
      return !naive::is_member(naive::traces(tx, y), pre_in_y);
    }
    if (theorem_id == "T16") {
      const bool cont = naive::continuous(f, tx, nx, ty);
      if (witness.at("continuous").get<bool>() != cont) return false;
      if (witness.contains("set_in_codomain")) {
        const Set b = set_from_json(witness.at("set_in_codomain"));
        const Set lhs = naive::closure(tx, nx, naive::preimage(f, b, nx));
        const Set rhs =
            naive::preimage(f, naive::closure(ty, ny, b), nx);
        if (!naive::subset_of(lhs, rhs)) return true;
      }
      if (witness.contains("set_in_domain")) {
        const Set a = set_from_json(witness.at("set_in_domain"));
        const Set lhs = naive::image(f, naive::closure(tx, nx, a));
        const Set rhs = naive::closure(ty, ny, naive::image(f, a));
        if (!naive::subset_of(lhs, rhs)) return true;
      }
      return false;
    }
    if (theorem_id == "T23") {
      if (!naive::continuous(f, tx, nx, ty)) return false;
      if (!naive::connected_on(tx, full_set(nx))) return false;
      const Set img = naive::image(f, full_set(nx));
      return !naive::connected_on(ty, img);
    }
    if (theorem_id == "T24") {
      const Set s = set_from_json(witness.at("set"));
      std::set<int> distinct(f.begin(), f.end());
      if (distinct.size() != f.size()) return false;
      if (!naive::open_map(f, tx, ty)) return false;
      return naive::connected_on(ty, naive::image(f, s)) &&
             !naive::connected_on(tx, s);
    }
    return false;
  }

  // --- morphism-pair theorems ----------------------------------------------
  if (const auto* mp = std::get_if<MorphismPairInstance>(&instance)) {
    const Table t1 = mp->a.group().rows();
    const Table t2 = mp->b.group().rows();
    const Family fam1 = naive::family_of(mp->a.topology());
    const Family fam2 = naive::family_of(mp->b.topology());
    const int n1 = mp->a.order();
    const std::vector<int>& f = mp->f.images();
    if (theorem_id == "T07") {
      if (!naive::homomorphism(f, t1, t2)) return false;
      const int e1 = naive::group_identity(t1);
      if (!pointwise_continuous_at(f, fam1, fam2, e1)) return false;
      const Set o = set_from_json(witness.at("open"));
      return naive::is_member(fam2, o) &&
             !naive::is_member(fam1, naive::preimage(f, o, n1));
    }
    if (theorem_id == "T15") {
      if (!naive::homomorphism(f, t1, t2)) return false;
      if (!naive::continuous(f, fam1, n1, fam2)) return false;
      const int e2 = naive::group_identity(t2);
      Set k;
      for (int x = 0; x < n1; ++x)
        if (f[static_cast<std::size_t>(x)] == e2) k.insert(x);
      const std::string clause = witness.at("clause").get<std::string>();
      if (clause == "subgroup") return !naive::is_subgroup(t1, k);
      if (clause == "normal")
        return naive::is_subgroup(t1, k) && !naive::is_normal_subgroup(t1, k);
      if (clause == "closed")
        return !naive::is_member(fam1, naive::complement_in(k, n1));
      if (clause == "certify")
        return !naive_instance_certifies(restrict_naive(mp->a, k));
      return false;
    }
    if (theorem_id == "T28") {
      if (!naive::homomorphism(f, t1, t2)) return false;
      if (!naive::continuous(f, fam1, n1, fam2)) return false;
      if (!witness.contains("second")) {
        // identity-not-isomorphism case
        std::vector<int> id(static_cast<std::size_t>(n1));
        for (int i = 0; i < n1; ++i) id[static_cast<std::size_t>(i)] = i;
        return !(naive::homomorphism(id, t1, t1) &&
                 naive::continuous(id, fam1, n1, fam1));
      }
      const std::vector<int> h = images_from_json(witness.at("second"));
      const int n2 = mp->b.order();
      if (!naive::homomorphism(h, t2, t2)) return false;
      if (!naive::continuous(h, fam2, n2, fam2)) return false;
      std::vector<int> comp(static_cast<std::size_t>(n1));
      for (int x = 0; x < n1; ++x)
        comp[static_cast<std::size_t>(x)] =
            h[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])];
      return !(naive::homomorphism(comp, t1, t2) &&
               naive::continuous(comp, fam1, n1, fam2));
    }
    return false;
  }

  // --- group-kind theorems -------------------------------------------------
  const auto* gi = std::get_if<GroupInstance>(&instance);
  if (!gi) return false;
  const GTopGroup& G = gi->g;
  const Table tb = G.group().rows();
  const Family fam = naive::family_of(G.topology());
  const int n = G.order();
  const int e = naive::group_identity(tb);

  if (theorem_id == "T03") {
    const Set h = set_from_json(witness.at("subgroup"));
    if (!naive::is_subgroup(tb, h)) return false;
    return !naive_instance_certifies(restrict_naive(G, h));
  }
  if (theorem_id == "T04") {
    const int g = witness.at("element").get<int>();
    std::vector<int> m(static_cast<std::size_t>(n));
    if (witness.contains("map")) {
      const std::string which = witness.at("map").get<std::string>();
      for (int x = 0; x < n; ++x) {
        int v;
        if (which == "left") v = naive::group_op(tb, g, x);
        else if (which == "right") v = naive::group_op(tb, x, g);
        else if (which == "conjugation")
          v = naive::group_op(tb, naive::group_op(tb, g, x),
                              naive::group_inverse(tb, g));
        else v = naive::group_inverse(tb, x);
        m[static_cast<std::size_t>(x)] = v;
      }
      const bool fwd = naive::continuous(m, fam, n, fam);
      const bool bwd = naive::open_map(m, fam, fam);
      std::set<int> distinct(m.begin(), m.end());
      return distinct.size() != m.size() || !fwd || !bwd;
    }
    // slice failure: i_g(x) = (g, x) into the product family
    std::vector<Set> rects;
    for (const Set& u : fam)
      for (const Set& v : fam) {
        Set r;
        for (int x : u)
          for (int y : v) r.insert(x * n + y);
        rects.push_back(std::move(r));
      }
    const Family prod = naive_union_closure(rects);
    std::vector<int> slice(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) slice[static_cast<std::size_t>(x)] = g * n + x;
    return !naive::continuous(slice, fam, n, prod);
  }
  if (theorem_id == "T05") {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<bool>> reached(
        static_cast<std::size_t>(n),
        std::vector<bool>(static_cast<std::size_t>(n), false));
    do {
      bool stable = true;
      for (const Set& o : fam)
        if (!naive::is_member(fam, naive::image(perm, o))) {
          stable = false;
          break;
        }
      if (!stable) continue;
      for (int p = 0; p < n; ++p)
        reached[static_cast<std::size_t>(p)][static_cast<std::size_t>(
            perm[static_cast<std::size_t>(p)])] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& row : reached)
      for (bool cell : row)
        if (!cell) return true;  // some pair unreachable: failure confirmed
    return false;
  }
  if (theorem_id == "T06") {
    const int g = witness.at("element").get<int>();
    const Set w = set_from_json(witness.at("open"));
    if (!naive::is_member(fam, w) || !w.count(g)) return false;
    for (const Set& o : opens_around(fam, e)) {
      Set translated;
      for (int x : o) translated.insert(naive::group_op(tb, g, x));
      if (naive::subset_of(translated, w)) return false;
    }
    return true;
  }
  if (theorem_id == "T08") {
    const Set h = set_from_json(witness.at("subgroup"));
    if (!naive::is_subgroup(tb, h)) return false;
    bool has_inner_open = false;
    for (const Set& o : fam)
      if (!o.empty() && naive::subset_of(o, h)) {
        has_inner_open = true;
        break;
      }
    return has_inner_open && !naive::is_member(fam, h);
  }
  if (theorem_id == "T10") {
    const Set h = set_from_json(witness.at("subgroup"));
    return naive::is_subgroup(tb, h) && naive::is_member(fam, h) &&
           !naive::is_member(fam, naive::complement_in(h, n));
  }
  if (theorem_id == "T11" || theorem_id == "T12") {
    const Set o = set_from_json(witness.at("open"));
    if (!naive::is_member(fam, o) || !o.count(e)) return false;
    const std::string part =
        theorem_id == "T12" ? "square" : witness.at("part").get<std::string>();
    for (const Set& v : opens_around(fam, e)) {
      Set candidate;
      if (part == "inverse") candidate = naive::set_inverse(tb, v);
      else if (part == "square") candidate = naive::set_product(tb, v, v);
      else if (part == "right-translate")
        candidate = naive::set_product(tb, v, Set{witness.at("element").get<int>()});
      else {
        const int x = witness.at("element").get<int>();
        candidate = naive::set_product(
            tb, naive::set_product(tb, Set{x}, v),
            Set{naive::group_inverse(tb, x)});
      }
      if (naive::subset_of(candidate, o)) return false;
    }
    return true;
  }
  if (theorem_id == "T13") {
    // hypothesis: every identity neighborhood holds a symmetric open one
    for (const Set& o : opens_around(fam, e)) {
      bool found = false;
      for (const Set& v : opens_around(fam, e))
        if (naive::subset_of(v, o) && naive::set_inverse(tb, v) == v) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    const int p = witness.at("point").get<int>();
    const Set f = set_from_json(witness.at("closed"));
    if (!naive::is_member(fam, naive::complement_in(f, n)) || f.count(p))
      return false;
    for (const Set& u : opens_around(fam, p))
      for (const Set& v : fam)
        if (naive::subset_of(f, v) && naive::disjoint(u, v)) return false;
    return true;
  }
  if (theorem_id == "T17") {
    const Set h = set_from_json(witness.at("subgroup"));
    if (!naive::is_subgroup(tb, h)) return false;
    const Set c = naive::closure(fam, n, h);
    const std::string clause = witness.at("clause").get<std::string>();
    if (clause == "subgroup") return !naive::is_subgroup(tb, c);
    return naive::is_normal_subgroup(tb, h) &&
           !naive::is_normal_subgroup(tb, c);
  }
  if (theorem_id == "T18") {
    const Set a = set_from_json(witness.at("set"));
    const Set u = set_from_json(witness.at("open"));
    if (!naive::is_member(fam, u) || a.empty()) return false;
    const Set prod = witness.at("side").get<std::string>() == "right"
                         ? naive::set_product(tb, a, u)
                         : naive::set_product(tb, u, a);
    return !naive::is_member(fam, prod);
  }
  if (theorem_id == "T19") {
    const Set a = set_from_json(witness.at("set"));
    const Set u = set_from_json(witness.at("open"));
    if (!naive::is_member(fam, u) || !u.count(e)) return false;
    const std::string clause = witness.at("clause").get<std::string>();
    const Set cl = naive::closure(fam, n, a);
    if (clause == "containment")
      return !naive::subset_of(a, naive::set_product(tb, a, u)) ||
             !naive::subset_of(a, naive::set_product(tb, u, a));
    if (clause == "closure-right")
      return !naive::subset_of(cl, naive::set_product(tb, a, u));
    return !naive::subset_of(cl, naive::set_product(tb, u, a));
  }
  if (theorem_id == "T20") {
    const Set a = set_from_json(witness.at("set"));
    const Set cl = naive::closure(fam, n, a);
    Set inter = full_set(n);
    for (const Set& u : opens_around(fam, e))
      inter = naive::intersect(inter, naive::set_product(tb, a, u));
    return inter != cl;
  }
  if (theorem_id == "T21") {
    const Set a = set_from_json(witness.at("set"));
    if (naive::set_inverse(tb, a) != a) return false;
    const Set cl = naive::closure(fam, n, a);
    return naive::set_inverse(tb, cl) != cl;
  }
  if (theorem_id == "T22") {
    const Set h = set_from_json(witness.at("subgroup"));
    if (!naive::is_subgroup(tb, h) || !naive::is_member(fam, h)) return false;
    if (h == full_set(n)) return false;
    return naive::connected_on(fam, full_set(n));
  }
  if (theorem_id == "T26") {
    const Set comp = set_from_json(witness.at("component"));
    const Set recomputed = naive_component(fam, full_set(n), e);
    if (recomputed != comp) return false;
    const std::string clause = witness.at("clause").get<std::string>();
    if (clause == "closed")
      return !naive::is_member(fam, naive::complement_in(comp, n));
    if (clause == "subgroup") return !naive::is_subgroup(tb, comp);
    return naive::is_subgroup(tb, comp) &&
           !naive::is_normal_subgroup(tb, comp);
  }
  if (theorem_id == "T27") {
    const Set u = set_from_json(witness.at("open"));
    if (!naive::is_member(fam, u) || !u.count(e)) return false;
    if (!naive::connected_on(fam, full_set(n))) return false;
    bool symmetric_inside = false;
    for (const Set& v : opens_around(fam, e))
      if (naive::subset_of(v, u) && naive::set_inverse(tb, v) == v) {
        symmetric_inside = true;
        break;
      }
    if (!symmetric_inside) return false;
    Set acc = u;
    while (true) {
      const Set next = naive::set_product(tb, acc, u);
      if (next == acc) break;
      acc = next;
    }
    return acc != full_set(n);
  }
  return false;
}

}  // namespace gtop::verify
