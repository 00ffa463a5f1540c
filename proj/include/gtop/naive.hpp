#pragma once

#include <set>
#include <vector>

#include "gtop/group.hpp"
#include "gtop/topology.hpp"

namespace gtop::naive {

/// Second code path for re-validating counterexamples: plain std::set
/// containers and literal definitional scans, sharing nothing with the
/// word-based implementation (no membership hashes, no minimal-open caches,
/// no connectivity memo).

using Set = std::set<int>;
using Family = std::vector<Set>;
using Table = std::vector<std::vector<int>>;

Set set_of(const Subset& s);
Family family_of(const GenTopology& t);
Set unite(const Set& a, const Set& b);
Set intersect(const Set& a, const Set& b);
Set complement_in(const Set& a, int n);
Set complement_in(const Set& a, const Set& universe);
bool subset_of(const Set& a, const Set& b);
bool disjoint(const Set& a, const Set& b);

bool is_member(const Family& fam, const Set& s);
bool has_empty(const Family& fam);
bool union_closed(const Family& fam);

Set interior(const Family& fam, int n, const Set& a);
Set closure(const Family& fam, int n, const Set& a);

bool t2(const Family& fam, int n);
bool regular(const Family& fam, int n);

Set image(const std::vector<int>& f, const Set& a);
Set preimage(const std::vector<int>& f, const Set& b, int dom);
bool continuous(const std::vector<int>& f, const Family& tx, int nx,
                const Family& ty);
bool open_map(const std::vector<int>& f, const Family& tx, const Family& ty);

/// Trace family of a subspace, kept over the original point labels.
Family traces(const Family& fam, const Set& y);
/// T2 of the subspace on y (original labels).
bool t2_on(const Family& fam, const Set& y);
/// Closure within the subspace on y.
Set closure_on(const Family& fam, const Set& y, const Set& a);
bool separated_on(const Family& fam, const Set& y, const Set& u, const Set& v);
/// Connectivity of y under its subspace topology, by bipartition scan.
bool connected_on(const Family& fam, const Set& y);

int group_op(const Table& table, int x, int y);
int group_identity(const Table& table);
int group_inverse(const Table& table, int x);
Set set_product(const Table& table, const Set& a, const Set& b);
Set set_inverse(const Table& table, const Set& a);
bool is_subgroup(const Table& table, const Set& h);
bool is_normal_subgroup(const Table& table, const Set& h);
bool homomorphism(const std::vector<int>& f, const Table& t1, const Table& t2);

}  // namespace gtop::naive
