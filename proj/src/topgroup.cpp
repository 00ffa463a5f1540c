#include "gtop/topgroup.hpp"

#include <bit>

namespace gtop {
namespace {

GTMap left_translation(const FiniteGroup& g, int a) {
  std::vector<int> im(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    im[static_cast<std::size_t>(x)] = g.op(a, x);
  return GTMap(g.order(), g.order(), std::move(im));
}

GTMap right_translation(const FiniteGroup& g, int a) {
  std::vector<int> im(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    im[static_cast<std::size_t>(x)] = g.op(x, a);
  return GTMap(g.order(), g.order(), std::move(im));
}

GTMap inversion_map(const FiniteGroup& g) {
  std::vector<int> im(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    im[static_cast<std::size_t>(x)] = g.inverse(x);
  return GTMap(g.order(), g.order(), std::move(im));
}

}  // namespace

Diagnosis check_gtop_group(const FiniteGroup& g, const GenTopology& t) {
  if (g.order() != t.carrier()) throw CarrierMismatch();
  const int n = g.order();
  Diagnosis d;
  const GTSpace space{t};
  d.t2 = is_t2(space);

  // Rectangle criterion over minimal neighborhoods: shrinking U or V keeps a
  // witness and every open around x*y sits above a minimal one.
  d.mult_continuous = true;
  for (int x = 0; x < n && d.mult_continuous; ++x)
    for (int y = 0; y < n && d.mult_continuous; ++y) {
      const int z = g.op(x, y);
      for (word_t o : t.minimal_opens_at(z)) {
        bool found = false;
        for (word_t u : t.minimal_opens_at(x)) {
          for (word_t v : t.minimal_opens_at(y)) {
            if ((product_set(g, Subset(u, n), Subset(v, n)).bits() & ~o) ==
                0) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found) {
          d.mult_continuous = false;
          d.mult_witness = MultWitness{x, y, Subset(o, n)};
          break;
        }
      }
    }

  d.inv_continuous = true;
  for (word_t o : t.words()) {
    // preimage of O under inversion is the elementwise inverse of O
    if (!t.is_open(inverse_set(g, Subset(o, n)).bits())) {
      d.inv_continuous = false;
      d.inv_witness = Subset(o, n);
      break;
    }
  }

  if (d.t2 && d.mult_continuous && d.inv_continuous)
    d.instance = GTopGroup(g, t, Certificate{true, true, true});
  return d;
}

GTopGroup discrete_instance(const FiniteGroup& g) {
  Diagnosis d = check_gtop_group(g, discrete_space(g.order()).t);
  if (!d.certified())
    throw PostconditionViolation("discrete instance failed to certify");
  return *d.instance;
}

TranslationBundle translations(const GTopGroup& G, int g) {
  const FiniteGroup& grp = G.group();
  if (g < 0 || g >= grp.order()) throw CarrierMismatch();
  const GTSpace space = G.space();
  GTMap left = left_translation(grp, g);
  GTMap right = right_translation(grp, g);
  GTMap conj = GTMap::compose(left_translation(grp, g),
                              right_translation(grp, grp.inverse(g)));
  GTMap inv = inversion_map(grp);

  TranslationBundle b{left, right, conj, inv};
  b.left_homeo = is_homeomorphism(left, space, space);
  b.right_homeo = is_homeomorphism(right, space, space);
  b.conjugation_homeo = is_homeomorphism(conj, space, space);
  b.inversion_homeo = is_homeomorphism(inv, space, space);

  const int n = grp.order();
  if (n * n <= kMaxCarrier) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      im[static_cast<std::size_t>(x)] = g * n + x;
    b.slice = GTMap(n, n * n, std::move(im));
  }
  return b;
}

SetFamily base_at_identity(const GTopGroup& G, const SetFamily& b) {
  try {
    if (!is_base(G.topology(), b)) throw NotABase();
  } catch (const NotSubfamily& e) {
    throw NotABase(e.what());
  }
  return base_at_point(b, G.identity());
}

SetFamily translated_base(const GTopGroup& G, int g, const SetFamily& be) {
  const FiniteGroup& grp = G.group();
  if (be.carrier() != grp.order()) throw CarrierMismatch();
  if (g < 0 || g >= grp.order()) throw CarrierMismatch();
  std::vector<word_t> words;
  words.reserve(be.size());
  const Subset gs = Subset::single(g, grp.order());
  for (word_t w : be.words())
    words.push_back(product_set(grp, gs, Subset(w, grp.order())).bits());
  return SetFamily::from_words(grp.order(), std::move(words));
}

Subset closure_subgroup(const GTopGroup& G, const Subset& h) {
  if (!is_subgroup(G.group(), h)) throw NotASubgroup();
  Subset c = closure(G.topology(), h);
  if (!is_subgroup(G.group(), c))
    throw PostconditionViolation("closure of subgroup " + h.to_string() +
                                 " is not a subgroup");
  if (is_normal(G.group(), h) && !is_normal(G.group(), c))
    throw PostconditionViolation("closure of normal subgroup " +
                                 h.to_string() + " is not normal");
  return c;
}

Subset identity_component(const GTopGroup& G, int cap) {
  const GTSpace space = G.space();
  Subset comp =
      component_of(space, Subset::full(G.order()), G.identity(), cap);
  if (!G.topology().is_closed(comp))
    throw PostconditionViolation("identity component is not closed");
  if (!is_subgroup(G.group(), comp))
    throw PostconditionViolation("identity component is not a subgroup");
  if (!is_normal(G.group(), comp))
    throw PostconditionViolation("identity component is not normal");
  return comp;
}

ExpansionResult word_expansion(const GTopGroup& G, const Subset& u) {
  if (u.carrier() != G.order()) throw CarrierMismatch();
  if (!u.contains(G.identity())) throw IdentityNotInSet();
  // e in u makes u^k increasing, so the accumulated union is just u^k.
  Subset acc = u;
  int steps = 1;
  while (true) {
    Subset next = product_set(G.group(), acc, u);
    if (next == acc) break;
    acc = next;
    ++steps;
  }
  return ExpansionResult{acc, steps};
}

bool is_g_morphism(const GTMap& f, const GTopGroup& a, const GTopGroup& b) {
  if (f.dom() != a.order() || f.cod() != b.order()) throw CarrierMismatch();
  return is_homomorphism(f, a.group(), b.group()) &&
         is_continuous(f, a.space(), b.space());
}

bool is_g_isomorphism(const GTMap& f, const GTopGroup& a, const GTopGroup& b) {
  if (f.dom() != a.order() || f.cod() != b.order()) throw CarrierMismatch();
  return is_homomorphism(f, a.group(), b.group()) &&
         is_homeomorphism(f, a.space(), b.space());
}

SubgroupInstance subgroup_gtopgroup(const GTopGroup& G, const Subset& h) {
  if (!is_subgroup(G.group(), h)) throw NotASubgroup();
  SubspaceResult sub = subspace(G.space(), h);
  const auto& emb = sub.embedding;
  const int m = static_cast<int>(emb.size());
  std::vector<int> back(static_cast<std::size_t>(G.order()), -1);
  for (int i = 0; i < m; ++i)
    back[static_cast<std::size_t>(emb[static_cast<std::size_t>(i)])] = i;
  std::vector<std::vector<int>> table(
      static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          back[static_cast<std::size_t>(
              G.group().op(emb[static_cast<std::size_t>(i)],
                           emb[static_cast<std::size_t>(j)]))];
  FiniteGroup restricted = validate_group(table);
  Diagnosis d = check_gtop_group(restricted, sub.space.t);
  if (!d.certified())
    throw PostconditionViolation("subgroup " + h.to_string() +
                                 " failed to re-certify");
  return SubgroupInstance{*d.instance, emb};
}

}  // namespace gtop
