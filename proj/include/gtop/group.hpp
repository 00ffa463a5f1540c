#pragma once

#include <string>
#include <vector>

#include "gtop/mapping.hpp"
#include "gtop/subset.hpp"

namespace gtop {

/// A finite group as a full Cayley table with identity and inverse table.
class FiniteGroup {
 public:
  int order() const { return n_; }
  int identity() const { return identity_; }
  int op(int x, int y) const {
    return table_[static_cast<std::size_t>(x * n_ + y)];
  }
  int inverse(int x) const { return inverse_[static_cast<std::size_t>(x)]; }

  std::vector<std::vector<int>> rows() const;

  bool operator==(const FiniteGroup& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

 private:
  friend FiniteGroup validate_group(const std::vector<std::vector<int>>&);
  FiniteGroup(int n, std::vector<int> table, int identity,
              std::vector<int> inverse)
      : n_(n),
        table_(std::move(table)),
        identity_(identity),
        inverse_(std::move(inverse)) {}

  int n_;
  std::vector<int> table_;  // n*n, row-major: table[x*n+y] = x*y
  int identity_;
  std::vector<int> inverse_;
};

/// Certifies a square table as a group: discovers the identity, checks
/// associativity (NotAssociative with a witness triple) and inverses
/// (NoInverse with the witness element).
FiniteGroup validate_group(const std::vector<std::vector<int>>& table);

/// { x*y : x in a, y in b }
Subset product_set(const FiniteGroup& g, const Subset& a, const Subset& b);

/// Elementwise inverses.
Subset inverse_set(const FiniteGroup& g, const Subset& a);

/// k-fold setwise product of a with itself, k >= 1.
Subset power_set(const FiniteGroup& g, const Subset& a, int k);

/// x a x^-1
Subset conjugate_set(const FiniteGroup& g, int x, const Subset& a);

bool is_subgroup(const FiniteGroup& g, const Subset& h);

bool is_normal(const FiniteGroup& g, const Subset& h);

/// Smallest subgroup containing gens.
Subset generated_subgroup(const FiniteGroup& g, const Subset& gens);

inline constexpr int kSubgroupEnumerationCap = 10;

/// All subgroups, found as closures of generated subsets (each known
/// subgroup extended by one element until stable). The default cap keeps
/// blind calls cheap; sweeps pass the instance order explicitly.
std::vector<Subset> subgroups(const FiniteGroup& g,
                              int cap = kSubgroupEnumerationCap);

/// Left cosets of h, in ascending order of their smallest element.
std::vector<Subset> left_cosets(const FiniteGroup& g, const Subset& h);

bool is_homomorphism(const GTMap& f, const FiniteGroup& g1,
                     const FiniteGroup& g2);

/// Preimage of the codomain identity.
Subset kernel(const GTMap& f, const FiniteGroup& g1, const FiniteGroup& g2);

/// All group homomorphisms g1 -> g2, deterministically ordered.
std::vector<GTMap> homomorphisms(const FiniteGroup& g1, const FiniteGroup& g2);

bool is_abelian(const FiniteGroup& g);

/// Named tables: cyclic(k) for k <= 12, klein4, s3, d4, q8.
FiniteGroup catalog(const std::string& name);

/// Every catalog name, orders 1 through 12.
std::vector<std::string> catalog_names();

}  // namespace gtop
