#pragma once

#include <optional>

#include "gtop/connect.hpp"
#include "gtop/group.hpp"
#include "gtop/space.hpp"

namespace gtop {

struct Certificate {
  bool t2 = false;
  bool mult_continuous = false;
  bool inv_continuous = false;
  bool ok() const { return t2 && mult_continuous && inv_continuous; }
};

class GTopGroup;
struct Diagnosis;

/// Checks the three certification clauses. Multiplication continuity uses the
/// pointwise rectangle criterion: for every open O and x*y in O there are
/// opens U around x and V around y with UV inside O. Its equivalence with
/// preimage-openness in the materialized product topology is a tested
/// property.
Diagnosis check_gtop_group(const FiniteGroup& g, const GenTopology& t);

/// A finite group together with a T2 generalized topology on the same
/// carrier under which multiplication and inversion are continuous.
/// Values only exist certified; check_gtop_group is the sole constructor.
class GTopGroup {
 public:
  const FiniteGroup& group() const { return grp_; }
  const GenTopology& topology() const { return top_; }
  const Certificate& certificate() const { return cert_; }
  GTSpace space() const { return GTSpace(top_); }
  int order() const { return grp_.order(); }
  int identity() const { return grp_.identity(); }

  bool is_discrete() const {
    for (int x = 0; x < grp_.order(); ++x)
      if (!top_.is_open(word_t{1} << x)) return false;
    return true;  // all singletons open: unions give every subset
  }

 private:
  friend Diagnosis check_gtop_group(const FiniteGroup& g,
                                    const GenTopology& t);
  GTopGroup(FiniteGroup g, GenTopology t, Certificate c)
      : grp_(std::move(g)), top_(std::move(t)), cert_(c) {}

  FiniteGroup grp_;
  GenTopology top_;
  Certificate cert_;
};

/// Failing pair and open set for the multiplication-continuity check.
struct MultWitness {
  int x, y;
  Subset open_set;
};

struct Diagnosis {
  bool t2 = false;
  bool mult_continuous = false;
  bool inv_continuous = false;
  std::optional<MultWitness> mult_witness;
  std::optional<Subset> inv_witness;
  std::optional<GTopGroup> instance;  // present iff certified

  bool certified() const { return instance.has_value(); }
};

/// Convenience: group + discrete topology (always certifies).
GTopGroup discrete_instance(const FiniteGroup& g);

/// Translation maps by one element, each checked for being a homeomorphism.
/// slice is x -> (g, x) into the product carrier when that carrier fits,
/// otherwise absent.
struct TranslationBundle {
  GTMap left, right, conjugation, inversion;
  bool left_homeo = false, right_homeo = false;
  bool conjugation_homeo = false, inversion_homeo = false;
  std::optional<GTMap> slice;
  bool all_homeomorphisms() const {
    return left_homeo && right_homeo && conjugation_homeo && inversion_homeo;
  }
};

TranslationBundle translations(const GTopGroup& G, int g);

/// Members of base b that contain the identity. Throws NotABase when b is
/// not a base of the topology.
SetFamily base_at_identity(const GTopGroup& G, const SetFamily& b);

/// { gO : O in be }.
SetFamily translated_base(const GTopGroup& G, int g, const SetFamily& be);

/// Closure of a subgroup; checked to be a subgroup (normal when h is).
Subset closure_subgroup(const GTopGroup& G, const Subset& h);

/// Component of the identity in the whole carrier; checked to be a closed
/// normal subgroup.
Subset identity_component(const GTopGroup& G, int cap = kComponentCap);

struct ExpansionResult {
  Subset reached;
  int steps;
};

/// Least fixpoint of accumulated setwise powers of u (e must lie in u, so the
/// powers increase and stabilize within the group order).
ExpansionResult word_expansion(const GTopGroup& G, const Subset& u);

/// Group homomorphism + continuity.
bool is_g_morphism(const GTMap& f, const GTopGroup& a, const GTopGroup& b);

/// Group homomorphism + homeomorphism.
bool is_g_isomorphism(const GTMap& f, const GTopGroup& a, const GTopGroup& b);

struct SubgroupInstance {
  GTopGroup instance;
  std::vector<int> embedding;
};

/// Subgroup with the induced table and trace topology, re-certified.
SubgroupInstance subgroup_gtopgroup(const GTopGroup& G, const Subset& h);

}  // namespace gtop
