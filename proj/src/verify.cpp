#include "gtop/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gtop/naive.hpp"
#include "gtop/parallel.hpp"

namespace gtop::verify {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

const std::vector<TheoremEntry>& registry_table() {
  static const std::vector<TheoremEntry> table = {
      {"T01", "subspaces of a T2 space are T2", TheoremClass::Proven,
       InstanceKind::Space},
      {"T02", "restrictions of continuous maps to subspaces are continuous",
       TheoremClass::Proven, InstanceKind::MapPair},
      {"T03", "subgroups certify as topological groups under the induced "
              "structure",
       TheoremClass::Proven, InstanceKind::Group},
      {"T04", "translations, conjugations and inversion are homeomorphisms",
       TheoremClass::Proven, InstanceKind::Group},
      {"T05", "certified groups are topologically homogeneous",
       TheoremClass::Proven, InstanceKind::Group},
      {"T06", "translated identity neighborhoods form local bases",
       TheoremClass::Proven, InstanceKind::Group},
      {"T07", "homomorphisms continuous at the identity are continuous",
       TheoremClass::Proven, InstanceKind::MorphismPair},
      {"T08", "a subgroup with nonempty interior is open",
       TheoremClass::Proven, InstanceKind::Group},
      {"T09", "a space with an open covering is strong", TheoremClass::Proven,
       InstanceKind::Space},
      {"T10", "open subgroups are closed", TheoremClass::Proven,
       InstanceKind::Group},
      {"T11", "identity neighborhoods shrink under inverses, right "
              "translates and conjugates",
       TheoremClass::Proven, InstanceKind::Group},
      {"T12", "identity neighborhoods admit square shrinking",
       TheoremClass::Conjecture, InstanceKind::Group},
      {"T13", "a symmetric local base at the identity forces regularity",
       TheoremClass::Conjecture, InstanceKind::Group},
      {"T14", "singletons are closed in T2 spaces", TheoremClass::Proven,
       InstanceKind::Space},
      {"T15", "kernels of morphisms are closed normal certified subgroups",
       TheoremClass::Proven, InstanceKind::MorphismPair},
      {"T16", "continuity is equivalent to both closure inclusions",
       TheoremClass::Proven, InstanceKind::MapPair},
      {"T17", "the closure of a (normal) subgroup is a (normal) subgroup",
       TheoremClass::Proven, InstanceKind::Group},
      {"T18", "setwise products with an open set are open",
       TheoremClass::Proven, InstanceKind::Group},
      {"T19", "closures land inside products with identity neighborhoods",
       TheoremClass::Proven, InstanceKind::Group},
      {"T20", "the closure equals the intersection of the translated set "
              "over identity base members",
       TheoremClass::Proven, InstanceKind::Group},
      {"T21", "closures of symmetric sets are symmetric",
       TheoremClass::Proven, InstanceKind::Group},
      {"T22", "a proper open subgroup disconnects the group",
       TheoremClass::Proven, InstanceKind::Group},
      {"T23", "continuous images of connected spaces are connected",
       TheoremClass::Proven, InstanceKind::MapPair},
      {"T24", "open injective maps reflect connectedness",
       TheoremClass::Proven, InstanceKind::MapPair},
      {"T25", "maximal components of closed sets are closed",
       TheoremClass::Proven, InstanceKind::Space},
      {"T26", "the identity component is a closed normal subgroup",
       TheoremClass::Proven, InstanceKind::Group},
      {"T27", "a connected group is exhausted by powers of any identity "
              "neighborhood around a symmetric one",
       TheoremClass::Proven, InstanceKind::Group},
      {"T28", "morphisms compose and the identity is an isomorphism",
       TheoremClass::Proven, InstanceKind::MorphismPair},
  };
  return table;
}

// ---------------------------------------------------------------------------
// small helpers
// ---------------------------------------------------------------------------

json set_json(const Subset& s) {
  json a = json::array();
  for (int x : s.elements()) a.push_back(x);
  return a;
}

json word_json(word_t w, int n) { return set_json(Subset(w, n)); }

json map_json(const GTMap& f) {
  return json{{"dom", f.dom()}, {"cod", f.cod()}, {"images", f.images()}};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct SubsetSample {
  std::vector<word_t> words;
  bool exhaustive;
};

SubsetSample sampled_subsets(int n, const RunOptions& opts,
                             const std::string& salt,
                             std::vector<word_t> extras = {}) {
  const word_t mask = carrier_mask(n);
  if (n <= opts.exhaustive_subset_limit) {
    std::vector<word_t> all(std::size_t{1} << n);
    std::iota(all.begin(), all.end(), word_t{0});
    return {std::move(all), true};
  }
  std::vector<word_t> out{0, mask};
  for (int i = 0; i < n; ++i) out.push_back(word_t{1} << i);
  if (extras.size() > 64) extras.resize(64);
  out.insert(out.end(), extras.begin(), extras.end());
  std::mt19937_64 rng(opts.seed ^ fnv1a(salt));
  for (int i = 0; i < 32; ++i) out.push_back(rng() & mask);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return {std::move(out), false};
}

void note_sampled(Verdict& v, const SubsetSample& sample) {
  if (!sample.exhaustive)
    v.notes.push_back("subset quantifier sampled (carrier above limit)");
}

int subgroup_cap_for(const FiniteGroup& g) {
  return std::max(kSubgroupEnumerationCap, g.order());
}

// Restricted (re-indexed) table and trace topology for a subgroup carrier.
struct RestrictedInstance {
  FiniteGroup group;
  GTSpace space;
  std::vector<int> embedding;
};

RestrictedInstance restrict_to_subgroup(const GTopGroup& G, const Subset& h) {
  SubspaceResult sub = subspace(G.space(), h);
  const auto& emb = sub.embedding;
  const int m = static_cast<int>(emb.size());
  std::vector<int> back(static_cast<std::size_t>(G.order()), -1);
  for (int i = 0; i < m; ++i)
    back[static_cast<std::size_t>(emb[static_cast<std::size_t>(i)])] = i;
  std::vector<std::vector<int>> table(
      static_cast<std::size_t>(m),
      std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          back[static_cast<std::size_t>(
              G.group().op(emb[static_cast<std::size_t>(i)],
                           emb[static_cast<std::size_t>(j)]))];
  return RestrictedInstance{validate_group(table), sub.space, emb};
}

bool has_symmetric_open_within(const GTopGroup& G, word_t outer) {
  const int n = G.order();
  const int e = G.identity();
  for (word_t v : G.topology().opens_containing(e)) {
    if ((v & ~outer) != 0) continue;
    if (inverse_set(G.group(), Subset(v, n)).bits() == v) return true;
  }
  return false;
}

bool local_intersection_base_at_identity(const GTopGroup& G) {
  const auto& mins = G.topology().minimal_opens_at(G.identity());
  for (word_t a : mins)
    for (word_t b : mins) {
      const word_t cap = a & b;
      bool found = false;
      for (word_t w : mins)
        if ((w & ~cap) == 0) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// checkers
// ---------------------------------------------------------------------------

Verdict check_t01(const SpaceInstance& si, const RunOptions& opts) {
  if (!is_t2(si.space)) return Verdict::holds();
  Verdict v = Verdict::holds();
  const int n = si.space.n();
  SubsetSample sample = sampled_subsets(n, opts, "T01:" + si.label);
  note_sampled(v, sample);
  for (word_t y : sample.words) {
    if (y == 0) continue;
    if (!is_t2(subspace(si.space, Subset(y, n)).space))
      return Verdict::fails("subspace is not T2",
                            json{{"subspace", word_json(y, n)}});
  }
  return v;
}

Verdict check_t02(const MapPairInstance& mi, const RunOptions& opts) {
  if (!is_continuous(mi.f, mi.dom, mi.cod)) return Verdict::holds();
  Verdict v = Verdict::holds();
  const int n = mi.dom.n();
  SubsetSample sample = sampled_subsets(n, opts, "T02:" + mi.label);
  note_sampled(v, sample);
  for (word_t y : sample.words) {
    if (y == 0) continue;
    SubspaceResult sub = subspace(mi.dom, Subset(y, n));
    std::vector<int> restricted;
    restricted.reserve(sub.embedding.size());
    for (int orig : sub.embedding) restricted.push_back(mi.f(orig));
    GTMap fy(static_cast<int>(restricted.size()), mi.cod.n(), restricted);
    if (!is_continuous(fy, sub.space, mi.cod)) {
      word_t bad = 0;
      for (word_t o : mi.cod.t.words())
        if (!sub.space.t.is_open(fy.preimage_word(o))) {
          bad = o;
          break;
        }
      return Verdict::fails(
          "restriction to a subspace lost continuity",
          json{{"subspace", word_json(y, n)},
               {"open", word_json(bad, mi.cod.n())}});
    }
  }
  return v;
}

Verdict check_t03(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  for (const Subset& h : subgroups(G.group(), subgroup_cap_for(G.group()))) {
    RestrictedInstance r = restrict_to_subgroup(G, h);
    Diagnosis d = check_gtop_group(r.group, r.space.t);
    if (!d.certified()) {
      json w{{"subgroup", set_json(h)},
             {"t2", d.t2},
             {"mult_continuous", d.mult_continuous},
             {"inv_continuous", d.inv_continuous}};
      return Verdict::fails("subgroup instance failed to certify", w);
    }
  }
  return Verdict::holds();
}

Verdict check_t04(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  Verdict v = Verdict::holds();
  const GTSpace space = G.space();
  std::optional<GTSpace> prod;
  if (G.order() * G.order() <= kMaxCarrier) {
    try {
      prod = product(space, space);
    } catch (const CapacityExceeded&) {
      v.notes.push_back("product too large; slice continuity not checked");
    }
  } else {
    v.notes.push_back("product carrier above 64; slice continuity not "
                      "checked");
  }
  for (int g = 0; g < G.order(); ++g) {
    TranslationBundle b = translations(G, g);
    const char* failing = nullptr;
    if (!b.left_homeo) failing = "left";
    else if (!b.right_homeo) failing = "right";
    else if (!b.conjugation_homeo) failing = "conjugation";
    else if (!b.inversion_homeo) failing = "inversion";
    if (failing)
      return Verdict::fails("translation map is not a homeomorphism",
                            json{{"element", g}, {"map", failing}});
    if (b.slice.has_value() && prod.has_value() &&
        !is_continuous(*b.slice, space, *prod))
      return Verdict::fails("slice map into the product is not continuous",
                            json{{"element", g}});
  }
  return v;
}

Verdict check_t05(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  if (G.order() > kHomogeneityCap)
    return Verdict::skipped("homogeneity search capped at carrier " +
                            std::to_string(kHomogeneityCap));
  if (!is_homogeneous(G.space()))
    return Verdict::fails("space is not topologically homogeneous", json{});
  return Verdict::holds();
}

Verdict check_t06(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  const int n = G.order();
  const int e = G.identity();
  const GenTopology& t = G.topology();
  Verdict v = Verdict::holds();
  for (int g = 0; g < n; ++g) {
    for (word_t w : t.minimal_opens_at(g)) {
      bool found = false;
      for (word_t o : t.minimal_opens_at(e)) {
        const word_t translated =
            product_set(G.group(), Subset::single(g, n), Subset(o, n)).bits();
        if ((translated & ~w) == 0) {
          found = true;
          break;
        }
      }
      if (!found)
        return Verdict::fails(
            "no translated identity neighborhood fits inside an open around "
            "the element",
            json{{"element", g}, {"open", word_json(w, n)}});
    }
  }
  // Set equality between the translated identity base and the membership
  // base at g depends on the base chosen; mismatches are informational only.
  const SetFamily base = canonical_base(t);
  const SetFamily be = base_at_point(base, e);
  for (int g = 0; g < n; ++g) {
    SetFamily translated = translated_base(G, g, be);
    if (!(translated == base_at_point(base, g))) {
      v.notes.push_back(
          "translated identity base differs from the membership base at some "
          "elements (set equality is base-dependent)");
      break;
    }
  }
  return v;
}

Verdict check_t07(const MorphismPairInstance& mi, const RunOptions&) {
  if (!is_homomorphism(mi.f, mi.a.group(), mi.b.group()))
    return Verdict::skipped("map is not a homomorphism");
  const GTSpace dom = mi.a.space();
  const GTSpace cod = mi.b.space();
  if (!is_pointwise_continuous_at(mi.f, dom, cod, mi.a.identity()))
    return Verdict::holds();  // hypothesis not met
  if (!is_continuous(mi.f, dom, cod)) {
    word_t bad = 0;
    for (word_t o : cod.t.words())
      if (!dom.t.is_open(mi.f.preimage_word(o))) {
        bad = o;
        break;
      }
    return Verdict::fails(
        "homomorphism continuous at the identity but not globally",
        json{{"map", map_json(mi.f)}, {"open", word_json(bad, cod.n())}});
  }
  return Verdict::holds();
}

Verdict check_t08(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  for (const Subset& h : subgroups(G.group(), subgroup_cap_for(G.group()))) {
    if (interior(G.topology(), h).is_empty()) continue;
    if (!G.topology().is_open(h))
      return Verdict::fails("subgroup with nonempty interior is not open",
                            json{{"subgroup", set_json(h)}});
  }
  return Verdict::holds();
}

Verdict check_t09(const SpaceInstance& si, const RunOptions&) {
  const word_t full = carrier_mask(si.space.n());
  if (si.space.t.union_of_all() == full && !si.space.t.is_open(full))
    return Verdict::fails("covered space is not strong", json{});
  return Verdict::holds();
}

Verdict check_t10(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  for (const Subset& h : subgroups(G.group(), subgroup_cap_for(G.group()))) {
    if (!G.topology().is_open(h)) continue;
    if (!G.topology().is_closed(h))
      return Verdict::fails("open subgroup is not closed",
                            json{{"subgroup", set_json(h)}});
  }
  return Verdict::holds();
}

Verdict check_t11(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  const FiniteGroup& g = G.group();
  const GenTopology& t = G.topology();
  const int n = G.order();
  const int e = G.identity();
  const auto& mins_e = t.minimal_opens_at(e);

  // Shrinking V only helps, so the existential side searches the minimal
  // identity neighborhoods; they belong to every base.
  for (word_t o : mins_e) {
    bool found = false;
    for (word_t v : mins_e)
      if ((inverse_set(g, Subset(v, n)).bits() & ~o) == 0) {
        found = true;
        break;
      }
    if (!found)
      return Verdict::fails("no inverse-shrinking neighborhood",
                            json{{"part", "inverse"}, {"open", word_json(o, n)}});
  }
  for (word_t o : t.opens_containing(e)) {
    for (word_t rest = o; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      bool found = false;
      for (word_t v : mins_e)
        if ((product_set(g, Subset(v, n), Subset::single(x, n)).bits() & ~o) ==
            0) {
          found = true;
          break;
        }
      if (!found)
        return Verdict::fails("no right-translate-shrinking neighborhood",
                              json{{"part", "right-translate"},
                                   {"open", word_json(o, n)},
                                   {"element", x}});
    }
  }
  for (word_t o : mins_e) {
    for (int x = 0; x < n; ++x) {
      bool found = false;
      for (word_t v : mins_e)
        if ((conjugate_set(g, x, Subset(v, n)).bits() & ~o) == 0) {
          found = true;
          break;
        }
      if (!found)
        return Verdict::fails("no conjugation-shrinking neighborhood",
                              json{{"part", "conjugate"},
                                   {"open", word_json(o, n)},
                                   {"element", x}});
    }
  }
  return Verdict::holds();
}

Verdict check_t12(const GroupInstance& gi, const RunOptions& opts) {
  const GTopGroup& G = gi.g;
  if (opts.require_local_intersection_base &&
      !local_intersection_base_at_identity(G))
    return Verdict::skipped(
        "identity neighborhoods not locally intersection-closed");
  const int n = G.order();
  const auto& mins_e = G.topology().minimal_opens_at(G.identity());
  for (word_t o : mins_e) {
    bool found = false;
    for (word_t v : mins_e) {
      const Subset vs(v, n);
      if ((product_set(G.group(), vs, vs).bits() & ~o) == 0) {
        found = true;
        break;
      }
    }
    if (!found)
      return Verdict::fails("no square-shrinking neighborhood",
                            json{{"open", word_json(o, n)}});
  }
  return Verdict::holds();
}

Verdict check_t13(const GroupInstance& gi, const RunOptions& opts) {
  const GTopGroup& G = gi.g;
  if (opts.require_local_intersection_base &&
      !local_intersection_base_at_identity(G))
    return Verdict::skipped(
        "identity neighborhoods not locally intersection-closed");
  for (word_t o : G.topology().minimal_opens_at(G.identity()))
    if (!has_symmetric_open_within(G, o))
      return Verdict::skipped("no symmetric local base at the identity");
  const GTSpace space = G.space();
  if (is_regular(space)) return Verdict::holds();
  // locate a concrete (point, closed set) pair for the witness
  const int n = G.order();
  const word_t mask = carrier_mask(n);
  for (word_t open_w : space.t.words()) {
    const word_t f = ~open_w & mask;
    for (int p = 0; p < n; ++p) {
      if ((f >> p) & 1) continue;
      bool ok = false;
      for (word_t u : space.t.words()) {
        if (!((u >> p) & 1)) continue;
        for (word_t v : space.t.words())
          if ((f & ~v) == 0 && (u & v) == 0) {
            ok = true;
            break;
          }
        if (ok) break;
      }
      if (!ok)
        return Verdict::fails(
            "symmetric local base but the space is not regular",
            json{{"point", p}, {"closed", word_json(f, n)}});
    }
  }
  throw Error("internal: regularity witness scan disagrees with is_regular");
}

Verdict check_t14(const SpaceInstance& si, const RunOptions&) {
  if (!is_t2(si.space)) return Verdict::holds();
  const int n = si.space.n();
  for (int x = 0; x < n; ++x)
    if (!si.space.t.is_closed(Subset::single(x, n)))
      return Verdict::fails("singleton not closed in a T2 space",
                            json{{"point", x}});
  return Verdict::holds();
}

Verdict check_t15(const MorphismPairInstance& mi, const RunOptions&) {
  if (!is_homomorphism(mi.f, mi.a.group(), mi.b.group()))
    return Verdict::skipped("map is not a homomorphism");
  if (!is_continuous(mi.f, mi.a.space(), mi.b.space()))
    return Verdict::skipped("map is not a morphism (not continuous)");
  const Subset k = kernel(mi.f, mi.a.group(), mi.b.group());
  json w{{"map", map_json(mi.f)}, {"kernel", set_json(k)}};
  if (!is_subgroup(mi.a.group(), k)) {
    w["clause"] = "subgroup";
    return Verdict::fails("kernel is not a subgroup", w);
  }
  if (!is_normal(mi.a.group(), k)) {
    w["clause"] = "normal";
    return Verdict::fails("kernel is not normal", w);
  }
  if (!mi.a.topology().is_closed(k)) {
    w["clause"] = "closed";
    return Verdict::fails("kernel is not closed", w);
  }
  RestrictedInstance r = restrict_to_subgroup(mi.a, k);
  if (!check_gtop_group(r.group, r.space.t).certified()) {
    w["clause"] = "certify";
    return Verdict::fails("kernel instance failed to certify", w);
  }
  return Verdict::holds();
}

Verdict check_t16(const MapPairInstance& mi, const RunOptions& opts) {
  const GTSpace& X = mi.dom;
  const GTSpace& Y = mi.cod;
  const int nx = X.n();
  const int ny = Y.n();
  Verdict v = Verdict::holds();

  const bool cont = is_continuous(mi.f, X, Y);

  SubsetSample bs = sampled_subsets(ny, opts, "T16B:" + mi.label);
  SubsetSample as = sampled_subsets(nx, opts, "T16A:" + mi.label);
  note_sampled(v, bs);

  std::vector<word_t> b_words = bs.words;
  std::vector<word_t> a_words = as.words;
  if (!cont) {
    // A violating set always exists among complements of the opens with a
    // non-open preimage; pin it so sampling cannot miss the equivalence.
    for (word_t o : Y.t.words())
      if (!X.t.is_open(mi.f.preimage_word(o))) {
        b_words.push_back(~o & carrier_mask(ny));
        a_words.push_back(mi.f.preimage_word(~o & carrier_mask(ny)));
        break;
      }
  }

  bool p1 = true;
  word_t p1_witness = 0;
  for (word_t b : b_words) {
    const Subset bset(b, ny);
    const word_t lhs = closure(X.t, mi.f.preimage(bset)).bits();
    const word_t rhs = mi.f.preimage_word(closure(Y.t, bset).bits());
    if ((lhs & ~rhs) != 0) {
      p1 = false;
      p1_witness = b;
      break;
    }
  }
  bool p2 = true;
  word_t p2_witness = 0;
  for (word_t a : a_words) {
    const Subset aset(a, nx);
    const word_t lhs = mi.f.image_word(closure(X.t, aset).bits());
    const word_t rhs = closure(Y.t, mi.f.image(aset)).bits();
    if ((lhs & ~rhs) != 0) {
      p2 = false;
      p2_witness = a;
      break;
    }
  }
  if (cont == p1 && p1 == p2) return v;
  json w{{"map", map_json(mi.f)},
         {"continuous", cont},
         {"preimage_closure_condition", p1},
         {"image_closure_condition", p2}};
  if (!p1) w["set_in_codomain"] = word_json(p1_witness, ny);
  if (!p2) w["set_in_domain"] = word_json(p2_witness, nx);
  return Verdict::fails("three-way continuity equivalence broke", w);
}

Verdict check_t17(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  for (const Subset& h : subgroups(G.group(), subgroup_cap_for(G.group()))) {
    const Subset c = closure(G.topology(), h);
    if (!is_subgroup(G.group(), c))
      return Verdict::fails(
          "closure of a subgroup is not a subgroup",
          json{{"subgroup", set_json(h)}, {"closure", set_json(c)},
               {"clause", "subgroup"}});
    if (is_normal(G.group(), h) && !is_normal(G.group(), c))
      return Verdict::fails(
          "closure of a normal subgroup is not normal",
          json{{"subgroup", set_json(h)}, {"closure", set_json(c)},
               {"clause", "normal"}});
  }
  return Verdict::holds();
}

Verdict check_t18(const GroupInstance& gi, const RunOptions& opts) {
  const GTopGroup& G = gi.g;
  const FiniteGroup& g = G.group();
  const GenTopology& t = G.topology();
  const int n = G.order();
  Verdict v = Verdict::holds();
  SubsetSample sample = sampled_subsets(n, opts, "T18:" + gi.label);
  note_sampled(v, sample);
  std::vector<word_t> left(static_cast<std::size_t>(n));
  std::vector<word_t> right(static_cast<std::size_t>(n));
  for (word_t u : t.words()) {
    const Subset us(u, n);
    for (int a = 0; a < n; ++a) {
      left[static_cast<std::size_t>(a)] =
          product_set(g, Subset::single(a, n), us).bits();
      right[static_cast<std::size_t>(a)] =
          product_set(g, us, Subset::single(a, n)).bits();
    }
    for (word_t a : sample.words) {
      if (a == 0) continue;
      word_t au = 0, ua = 0;
      for (word_t rest = a; rest != 0; rest &= rest - 1) {
        au |= left[static_cast<std::size_t>(std::countr_zero(rest))];
        ua |= right[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      if (!t.is_open(au))
        return Verdict::fails("AU is not open", json{{"set", word_json(a, n)},
                                                     {"open", word_json(u, n)},
                                                     {"side", "right"}});
      if (!t.is_open(ua))
        return Verdict::fails("UA is not open", json{{"set", word_json(a, n)},
                                                     {"open", word_json(u, n)},
                                                     {"side", "left"}});
    }
  }
  return v;
}

Verdict check_t19(const GroupInstance& gi, const RunOptions& opts) {
  const GTopGroup& G = gi.g;
  const FiniteGroup& g = G.group();
  const GenTopology& t = G.topology();
  const int n = G.order();
  Verdict v = Verdict::holds();
  SubsetSample sample = sampled_subsets(n, opts, "T19:" + gi.label);
  note_sampled(v, sample);
  // Minimal identity neighborhoods suffice: AU grows with U.
  const auto& mins_e = t.minimal_opens_at(G.identity());
  for (word_t a : sample.words) {
    const Subset aset(a, n);
    const word_t cl = closure(t, aset).bits();
    for (word_t u : mins_e) {
      const Subset us(u, n);
      const word_t au = product_set(g, aset, us).bits();
      const word_t ua = product_set(g, us, aset).bits();
      if ((a & ~au) != 0 || (a & ~ua) != 0)
        return Verdict::fails("the set escapes its own translate",
                              json{{"set", word_json(a, n)},
                                   {"open", word_json(u, n)},
                                   {"clause", "containment"}});
      if ((cl & ~au) != 0)
        return Verdict::fails("closure escapes AU",
                              json{{"set", word_json(a, n)},
                                   {"open", word_json(u, n)},
                                   {"clause", "closure-right"}});
      if ((cl & ~ua) != 0)
        return Verdict::fails("closure escapes UA",
                              json{{"set", word_json(a, n)},
                                   {"open", word_json(u, n)},
                                   {"clause", "closure-left"}});
    }
  }
  return v;
}

Verdict check_t20(const GroupInstance& gi, const RunOptions& opts) {
  const GTopGroup& G = gi.g;
  const GenTopology& t = G.topology();
  const int n = G.order();
  const word_t mask = carrier_mask(n);
  Verdict v = Verdict::holds();
  SubsetSample sample = sampled_subsets(n, opts, "T20:" + gi.label);
  note_sampled(v, sample);
  const auto& mins_e = t.minimal_opens_at(G.identity());
  for (word_t a : sample.words) {
    const Subset aset(a, n);
    const word_t cl = closure(t, aset).bits();
    word_t inter = mask;
    for (word_t u : mins_e)
      inter &= product_set(G.group(), aset, Subset(u, n)).bits();
    if (inter != cl)
      return Verdict::fails(
          "closure differs from the intersection of translates",
          json{{"set", word_json(a, n)},
               {"closure", word_json(cl, n)},
               {"intersection", word_json(inter, n)}});
  }
  return v;
}

Verdict check_t21(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  const FiniteGroup& g = G.group();
  const int n = G.order();
  // Symmetric sets are exactly the unions of {x, x^-1} orbits, so they can
  // be enumerated exhaustively.
  std::vector<word_t> orbits;
  word_t seen = 0;
  for (int x = 0; x < n; ++x) {
    if ((seen >> x) & 1) continue;
    const word_t orbit =
        (word_t{1} << x) | (word_t{1} << g.inverse(x));
    orbits.push_back(orbit);
    seen |= orbit;
  }
  const std::size_t m = orbits.size();
  for (std::size_t pick = 0; pick < (std::size_t{1} << m); ++pick) {
    word_t a = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((pick >> i) & 1) a |= orbits[i];
    const Subset aset(a, n);
    const Subset cl = closure(G.topology(), aset);
    if (inverse_set(g, cl) != cl)
      return Verdict::fails("closure of a symmetric set is not symmetric",
                            json{{"set", word_json(a, n)},
                                 {"closure", set_json(cl)}});
  }
  return Verdict::holds();
}

Verdict check_t22(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  const word_t full = carrier_mask(G.order());
  bool has_proper_open_subgroup = false;
  Subset witness_h = Subset::empty(G.order());
  for (const Subset& h : subgroups(G.group(), subgroup_cap_for(G.group()))) {
    if (h.bits() == full) continue;  // the whole group never separates
    if (G.topology().is_open(h)) {
      has_proper_open_subgroup = true;
      witness_h = h;
      break;
    }
  }
  if (!has_proper_open_subgroup) return Verdict::holds();
  if (is_connected(G.space()).connected)
    return Verdict::fails(
        "group with a proper open subgroup is still connected",
        json{{"subgroup", set_json(witness_h)}});
  return Verdict::holds();
}

Verdict check_t23(const MapPairInstance& mi, const RunOptions&) {
  if (!is_continuous(mi.f, mi.dom, mi.cod)) return Verdict::holds();
  if (!is_connected(mi.dom).connected) return Verdict::holds();
  const Subset img = mi.f.image(Subset::full(mi.dom.n()));
  if (!is_connected_subset(mi.cod, img))
    return Verdict::fails("continuous image of a connected space is "
                          "disconnected",
                          json{{"map", map_json(mi.f)},
                               {"image", set_json(img)}});
  return Verdict::holds();
}

Verdict check_t24(const MapPairInstance& mi, const RunOptions& opts) {
  if (!mi.f.injective()) return Verdict::holds();
  if (!is_open_map(mi.f, mi.dom, mi.cod)) return Verdict::holds();
  Verdict v = Verdict::holds();
  SubsetSample sample = sampled_subsets(mi.dom.n(), opts, "T24:" + mi.label);
  note_sampled(v, sample);
  for (word_t s : sample.words) {
    if (s == 0) continue;
    const Subset sset(s, mi.dom.n());
    if (!is_connected_subset(mi.cod, mi.f.image(sset))) continue;
    if (!is_connected_subset(mi.dom, sset))
      return Verdict::fails(
          "open injective map failed to reflect connectedness",
          json{{"map", map_json(mi.f)}, {"set", word_json(s, mi.dom.n())}});
  }
  return v;
}

Verdict check_t25(const SpaceInstance& si, const RunOptions&) {
  const GTSpace& x = si.space;
  const int n = x.n();
  const word_t mask = carrier_mask(n);
  Verdict v = Verdict::holds();
  for (word_t open_w : x.t.words()) {
    const word_t a = ~open_w & mask;
    if (a == 0) continue;
    const Subset aset(a, n);
    if (aset.size() > kComponentCap) {
      v.notes.push_back("closed sets above the component cap were skipped");
      continue;
    }
    for (const Subset& comp : components_of(x, aset)) {
      // Distinct components are disjoint, hence each is maximal.
      if (!x.t.is_closed(comp))
        return Verdict::fails("maximal component of a closed set is not "
                              "closed",
                              json{{"closed", word_json(a, n)},
                                   {"component", set_json(comp)}});
    }
  }
  return v;
}

Verdict check_t26(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  const Subset comp =
      component_of(G.space(), Subset::full(G.order()), G.identity());
  json w{{"component", set_json(comp)}};
  if (!G.topology().is_closed(comp)) {
    w["clause"] = "closed";
    return Verdict::fails("identity component is not closed", w);
  }
  if (!is_subgroup(G.group(), comp)) {
    w["clause"] = "subgroup";
    return Verdict::fails("identity component is not a subgroup", w);
  }
  if (!is_normal(G.group(), comp)) {
    w["clause"] = "normal";
    return Verdict::fails("identity component is not normal", w);
  }
  return Verdict::holds();
}

Verdict check_t27(const GroupInstance& gi, const RunOptions&) {
  const GTopGroup& G = gi.g;
  if (!is_connected(G.space()).connected)
    return Verdict::skipped("group is not connected");
  const int n = G.order();
  const word_t full = carrier_mask(n);
  for (word_t u : G.topology().opens_containing(G.identity())) {
    if (!has_symmetric_open_within(G, u)) continue;
    ExpansionResult r = word_expansion(G, Subset(u, n));
    if (r.reached.bits() != full)
      return Verdict::fails("powers of the neighborhood never exhaust the "
                            "group",
                            json{{"open", word_json(u, n)},
                                 {"reached", set_json(r.reached)},
                                 {"steps", r.steps}});
  }
  return Verdict::holds();
}

Verdict check_t28(const MorphismPairInstance& mi, const RunOptions&) {
  if (!is_g_morphism(mi.f, mi.a, mi.b))
    return Verdict::skipped("map is not a morphism");
  if (!is_g_isomorphism(GTMap::identity(mi.a.order()), mi.a, mi.a))
    return Verdict::fails("identity map is not an isomorphism", json{});
  for (const GTMap& h : homomorphisms(mi.b.group(), mi.b.group())) {
    if (!is_g_morphism(h, mi.b, mi.b)) continue;
    if (!is_g_morphism(GTMap::compose(h, mi.f), mi.a, mi.b))
      return Verdict::fails("composition of morphisms is not a morphism",
                            json{{"first", map_json(mi.f)},
                                 {"second", map_json(h)}});
  }
  return Verdict::holds();
}

}  // namespace

// ---------------------------------------------------------------------------
// registry API
// ---------------------------------------------------------------------------

const std::vector<TheoremEntry>& registry() { return registry_table(); }

const TheoremEntry& lookup(const std::string& id) {
  for (const TheoremEntry& e : registry_table())
    if (e.id == id) return e;
  throw UnknownTheorem("unknown theorem id: " + id);
}

std::vector<std::string> all_theorem_ids() {
  std::vector<std::string> out;
  for (const auto& e : registry_table()) out.push_back(e.id);
  return out;
}

std::vector<std::string> proven_theorem_ids() {
  std::vector<std::string> out;
  for (const auto& e : registry_table())
    if (e.cls == TheoremClass::Proven) out.push_back(e.id);
  return out;
}

std::vector<std::string> conjecture_theorem_ids() {
  std::vector<std::string> out;
  for (const auto& e : registry_table())
    if (e.cls == TheoremClass::Conjecture) out.push_back(e.id);
  return out;
}

std::string instance_label(const Instance& inst) {
  return std::visit([](const auto& i) { return i.label; }, inst);
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

namespace {

Verdict dispatch(const std::string& id, const Instance& inst,
                 const RunOptions& opts) {
  const TheoremEntry& entry = lookup(id);
  auto wrong_kind = [&]() -> KindMismatch {
    return KindMismatch("theorem " + id + " expects a different instance kind");
  };
  switch (entry.kind) {
    case InstanceKind::Space: {
      const auto* si = std::get_if<SpaceInstance>(&inst);
      if (!si) throw wrong_kind();
      if (id == "T01") return check_t01(*si, opts);
      if (id == "T09") return check_t09(*si, opts);
      if (id == "T14") return check_t14(*si, opts);
      if (id == "T25") return check_t25(*si, opts);
      break;
    }
    case InstanceKind::MapPair: {
      const auto* mi = std::get_if<MapPairInstance>(&inst);
      if (!mi) throw wrong_kind();
      if (id == "T02") return check_t02(*mi, opts);
      if (id == "T16") return check_t16(*mi, opts);
      if (id == "T23") return check_t23(*mi, opts);
      if (id == "T24") return check_t24(*mi, opts);
      break;
    }
    case InstanceKind::Group: {
      const auto* gi = std::get_if<GroupInstance>(&inst);
      if (!gi) throw wrong_kind();
      if (id == "T03") return check_t03(*gi, opts);
      if (id == "T04") return check_t04(*gi, opts);
      if (id == "T05") return check_t05(*gi, opts);
      if (id == "T06") return check_t06(*gi, opts);
      if (id == "T08") return check_t08(*gi, opts);
      if (id == "T10") return check_t10(*gi, opts);
      if (id == "T11") return check_t11(*gi, opts);
      if (id == "T12") return check_t12(*gi, opts);
      if (id == "T13") return check_t13(*gi, opts);
      if (id == "T17") return check_t17(*gi, opts);
      if (id == "T18") return check_t18(*gi, opts);
      if (id == "T19") return check_t19(*gi, opts);
      if (id == "T20") return check_t20(*gi, opts);
      if (id == "T21") return check_t21(*gi, opts);
      if (id == "T22") return check_t22(*gi, opts);
      if (id == "T26") return check_t26(*gi, opts);
      if (id == "T27") return check_t27(*gi, opts);
      break;
    }
    case InstanceKind::MorphismPair: {
      const auto* mi = std::get_if<MorphismPairInstance>(&inst);
      if (!mi) throw wrong_kind();
      if (id == "T07") return check_t07(*mi, opts);
      if (id == "T15") return check_t15(*mi, opts);
      if (id == "T28") return check_t28(*mi, opts);
      break;
    }
  }
  throw UnknownTheorem("no checker registered for " + id);
}

}  // namespace

Verdict run(const std::string& theorem_id, const Instance& instance,
            const RunOptions& opts) {
  Verdict v = dispatch(theorem_id, instance, opts);
  if (v.kind == VerdictKind::Fails) {
    v.witness["theorem"] = theorem_id;
    v.witness["instance"] = instance_label(instance);
    v.witness["summary"] = v.summary;
    if (!revalidate(theorem_id, instance, v.witness))
      throw Error("internal: witness for " + theorem_id + " on " +
                  instance_label(instance) +
                  " did not reproduce on the definitional path");
    v.witness["revalidated"] = true;
  }
  return v;
}

// ---------------------------------------------------------------------------
// derived instances
// ---------------------------------------------------------------------------

std::vector<MapPairInstance> derive_map_pairs(const GroupInstance& gi) {
  const GTopGroup& G = gi.g;
  const FiniteGroup& g = G.group();
  const int n = G.order();
  const GTSpace space = G.space();

  std::set<std::vector<int>> seen;
  std::vector<GTMap> maps;
  auto add = [&](GTMap m) {
    if (seen.insert(m.images()).second) maps.push_back(std::move(m));
  };
  add(GTMap::identity(n));
  {
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(x)] = g.inverse(x);
    add(GTMap(n, n, std::move(inv)));
  }
  add(GTMap::constant(n, n, g.identity()));
  for (int a = 0; a < n; ++a) {
    std::vector<int> left(static_cast<std::size_t>(n));
    std::vector<int> right(static_cast<std::size_t>(n));
    std::vector<int> conj(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      left[static_cast<std::size_t>(x)] = g.op(a, x);
      right[static_cast<std::size_t>(x)] = g.op(x, a);
      conj[static_cast<std::size_t>(x)] = g.op(g.op(a, x), g.inverse(a));
    }
    add(GTMap(n, n, std::move(left)));
    add(GTMap(n, n, std::move(right)));
    add(GTMap(n, n, std::move(conj)));
  }
  for (const GTMap& f : homomorphisms(g, g)) add(f);

  std::vector<MapPairInstance> out;
  out.reserve(maps.size());
  int i = 0;
  for (GTMap& m : maps)
    out.push_back(MapPairInstance{space, space, std::move(m),
                                  gi.label + "#map" + std::to_string(i++)});
  return out;
}

std::vector<MorphismPairInstance> derive_endo_morphisms(
    const GroupInstance& gi) {
  std::vector<MorphismPairInstance> out;
  int i = 0;
  for (const GTMap& f : homomorphisms(gi.g.group(), gi.g.group()))
    out.push_back(MorphismPairInstance{
        gi.g, gi.g, f, gi.label + "#endo" + std::to_string(i++)});
  return out;
}

std::vector<MorphismPairInstance> derive_cross_morphisms(
    const GroupInstance& a, const GroupInstance& b) {
  std::vector<MorphismPairInstance> out;
  int i = 0;
  for (const GTMap& f : homomorphisms(a.g.group(), b.g.group()))
    out.push_back(MorphismPairInstance{
        a.g, b.g, f,
        a.label + "->" + b.label + "#hom" + std::to_string(i++)});
  return out;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

namespace {

struct CheckOutcome {
  std::uint64_t holds = 0, fails = 0, skipped = 0, checks = 0;
  std::vector<json> witnesses;
  std::vector<std::string> notes;
};

constexpr std::size_t kWitnessCapPerTheorem = 8;

void fold(CheckOutcome& agg, const Verdict& v) {
  ++agg.checks;
  switch (v.kind) {
    case VerdictKind::Holds:
      break;
    case VerdictKind::Fails:
      if (agg.witnesses.size() < kWitnessCapPerTheorem)
        agg.witnesses.push_back(v.witness);
      break;
    case VerdictKind::Skipped:
      agg.notes.push_back("skipped: " + v.summary);
      break;
  }
  for (const auto& n : v.notes) agg.notes.push_back(n);
}

// One verdict per (instance, theorem): failing sub-checks dominate; a
// theorem whose sub-checks were all skipped counts as skipped.
void finalize(CheckOutcome& agg, std::uint64_t fails_found,
              std::uint64_t holds_found, std::uint64_t skip_found) {
  agg.fails = fails_found > 0 ? 1 : 0;
  agg.holds = (fails_found == 0 && holds_found > 0) ? 1 : 0;
  agg.skipped = (fails_found == 0 && holds_found == 0 && skip_found > 0) ? 1 : 0;
}

struct InstanceResult {
  // theorem id -> outcome
  std::map<std::string, CheckOutcome> outcomes;
};

InstanceResult check_instance(const GroupInstance& gi,
                              const std::vector<std::string>& ids,
                              const RunOptions& opts) {
  InstanceResult res;

  std::vector<MapPairInstance> map_pairs;
  std::vector<MorphismPairInstance> endos;
  bool map_pairs_built = false;
  bool endos_built = false;

  for (const std::string& id : ids) {
    const TheoremEntry& entry = lookup(id);
    CheckOutcome& agg = res.outcomes[id];
    std::uint64_t f = 0, h = 0, s = 0;
    auto tally = [&](const Verdict& v) {
      fold(agg, v);
      if (v.kind == VerdictKind::Fails) ++f;
      else if (v.kind == VerdictKind::Holds) ++h;
      else ++s;
    };
    switch (entry.kind) {
      case InstanceKind::Group:
        tally(run(id, Instance{gi}, opts));
        break;
      case InstanceKind::Space:
        tally(run(id, Instance{SpaceInstance{gi.g.space(), gi.label}}, opts));
        break;
      case InstanceKind::MapPair: {
        if (!map_pairs_built) {
          map_pairs = derive_map_pairs(gi);
          map_pairs_built = true;
        }
        for (const auto& mp : map_pairs) tally(run(id, Instance{mp}, opts));
        break;
      }
      case InstanceKind::MorphismPair: {
        if (!endos_built) {
          endos = derive_endo_morphisms(gi);
          endos_built = true;
        }
        for (const auto& mp : endos) tally(run(id, Instance{mp}, opts));
        break;
      }
    }
    finalize(agg, f, h, s);
  }
  return res;
}

}  // namespace

Report sweep(const std::vector<std::string>& theorem_ids,
             const std::vector<GroupInstance>& instances,
             const census::StreamDescriptor& desc,
             const census::StreamStats& stats, const RunOptions& opts) {
  for (const std::string& id : theorem_ids) lookup(id);  // validate early

  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.theorem_ids = theorem_ids;
  report.stream = desc;
  report.stats = stats;
  report.seed = opts.seed;
  report.instances = instances.size();
  for (const std::string& id : theorem_ids)
    report.tallies.push_back(TheoremTally{id, 0, 0, 0, {}, {}});

  std::vector<InstanceResult> results(instances.size());
  parallel_for(instances.size(), [&](std::size_t i) {
    results[i] = check_instance(instances[i], theorem_ids, opts);
  });

  auto merge = [&](const InstanceResult& r) {
    for (TheoremTally& tally : report.tallies) {
      auto it = r.outcomes.find(tally.id);
      if (it == r.outcomes.end()) continue;
      const CheckOutcome& o = it->second;
      tally.holds += o.holds;
      tally.fails += o.fails;
      tally.skipped += o.skipped;
      report.checks += o.checks;
      for (const auto& w : o.witnesses)
        if (tally.witnesses.size() < kWitnessCapPerTheorem)
          tally.witnesses.push_back(w);
      for (const auto& n : o.notes) tally.notes.push_back(n);
    }
  };
  for (const InstanceResult& r : results) merge(r);

  // Cross-instance morphism pairs among the first few instances.
  std::vector<std::string> morphism_ids;
  for (const std::string& id : theorem_ids)
    if (lookup(id).kind == InstanceKind::MorphismPair) morphism_ids.push_back(id);
  if (!morphism_ids.empty() && instances.size() > 1) {
    const std::size_t cap = std::min(instances.size(), kCrossPairInstanceCap);
    for (std::size_t i = 0; i < cap; ++i)
      for (std::size_t j = 0; j < cap; ++j) {
        if (i == j) continue;
        const auto pairs = derive_cross_morphisms(instances[i], instances[j]);
        for (const std::string& id : morphism_ids) {
          CheckOutcome agg;
          std::uint64_t f = 0, h = 0, s = 0;
          for (const auto& mp : pairs) {
            const Verdict v = run(id, Instance{mp}, opts);
            fold(agg, v);
            if (v.kind == VerdictKind::Fails) ++f;
            else if (v.kind == VerdictKind::Holds) ++h;
            else ++s;
          }
          if (pairs.empty()) continue;
          finalize(agg, f, h, s);
          for (TheoremTally& tally : report.tallies) {
            if (tally.id != id) continue;
            tally.holds += agg.holds;
            tally.fails += agg.fails;
            tally.skipped += agg.skipped;
            report.checks += agg.checks;
            for (const auto& w : agg.witnesses)
              if (tally.witnesses.size() < kWitnessCapPerTheorem)
                tally.witnesses.push_back(w);
            for (const auto& n : agg.notes) tally.notes.push_back(n);
          }
        }
      }
  }

  for (TheoremTally& tally : report.tallies) {
    std::sort(tally.notes.begin(), tally.notes.end());
    tally.notes.erase(std::unique(tally.notes.begin(), tally.notes.end()),
                      tally.notes.end());
    if (tally.fails > 0) {
      if (lookup(tally.id).cls == TheoremClass::Proven)
        report.proven_failure = true;
      else
        report.conjecture_failure = true;
    }
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

int exit_code(const Report& report) {
  if (report.proven_failure) return 1;
  if (report.conjecture_failure) return 3;
  return 0;
}

nlohmann::json report_to_json(const Report& report, bool include_runtime) {
  json verdicts = json::array();
  std::uint64_t holds = 0, fails = 0, skipped = 0;
  for (const TheoremTally& t : report.tallies) {
    holds += t.holds;
    fails += t.fails;
    skipped += t.skipped;
    json wit = json::array();
    for (const auto& w : t.witnesses) wit.push_back(w);
    json notes = json::array();
    for (const auto& n : t.notes) notes.push_back(n);
    verdicts.push_back(json{{"id", t.id},
                            {"holds", t.holds},
                            {"fails", t.fails},
                            {"skipped", t.skipped},
                            {"witnesses", wit},
                            {"notes", notes}});
  }
  json out{
      {"theorems", report.theorem_ids},
      {"stream",
       json{{"source", report.stream.source},
            {"strategy", report.stream.strategy},
            {"budget", report.stream.budget},
            {"seed", report.stream.seed},
            {"candidates", report.stats.candidates},
            {"instances_yielded", report.stats.yielded},
            {"budget_exhausted", report.stats.budget_exhausted}}},
      {"verdicts", verdicts},
      {"counts", json{{"instances", report.instances},
                      {"checks", report.checks},
                      {"holds", holds},
                      {"fails", fails},
                      {"skipped", skipped}}},
      {"seed", report.seed},
      {"exit_code", exit_code(report)}};
  if (include_runtime) out["runtime_seconds"] = report.runtime_seconds;
  return out;
}

std::vector<GroupInstance> label_stream(census::InstanceStream& stream,
                                        const std::string& prefix) {
  std::vector<GroupInstance> out;
  std::size_t i = 0;
  while (auto g = stream.next())
    out.push_back(GroupInstance{*g, prefix + "#" + std::to_string(i++)});
  return out;
}

}  // namespace gtop::verify
