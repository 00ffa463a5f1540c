#include "gtop/naive.hpp"

#include <algorithm>

namespace gtop::naive {

Set set_of(const Subset& s) {
  const auto es = s.elements();
  return Set(es.begin(), es.end());
}

Family family_of(const GenTopology& t) {
  Family fam;
  fam.reserve(t.size());
  for (word_t w : t.words()) fam.push_back(set_of(Subset(w, t.carrier())));
  return fam;
}

Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Set intersect(const Set& a, const Set& b) {
  Set out;
  for (int x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

Set complement_in(const Set& a, int n) {
  Set out;
  for (int x = 0; x < n; ++x)
    if (!a.count(x)) out.insert(x);
  return out;
}

Set complement_in(const Set& a, const Set& universe) {
  Set out;
  for (int x : universe)
    if (!a.count(x)) out.insert(x);
  return out;
}

bool subset_of(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const Set& a, const Set& b) { return intersect(a, b).empty(); }

bool is_member(const Family& fam, const Set& s) {
  return std::find(fam.begin(), fam.end(), s) != fam.end();
}

bool has_empty(const Family& fam) { return is_member(fam, Set{}); }

bool union_closed(const Family& fam) {
  for (const Set& a : fam)
    for (const Set& b : fam)
      if (!is_member(fam, unite(a, b))) return false;
  return true;
}

Set interior(const Family& fam, int /*n*/, const Set& a) {
  Set out;
  for (const Set& o : fam)
    if (subset_of(o, a)) out = unite(out, o);
  return out;
}

Set closure(const Family& fam, int n, const Set& a) {
  Set out = complement_in(Set{}, n);
  for (const Set& o : fam) {
    const Set closed = complement_in(o, n);
    if (subset_of(a, closed)) out = intersect(out, closed);
  }
  return out;
}

bool t2(const Family& fam, int n) {
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      bool found = false;
      for (const Set& u : fam) {
        if (!u.count(p)) continue;
        for (const Set& v : fam)
          if (v.count(q) && disjoint(u, v)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

bool regular(const Family& fam, int n) {
  for (const Set& o : fam) {
    const Set f = complement_in(o, n);
    for (int p = 0; p < n; ++p) {
      if (f.count(p)) continue;
      bool found = false;
      for (const Set& u : fam) {
        if (!u.count(p)) continue;
        for (const Set& v : fam)
          if (subset_of(f, v) && disjoint(u, v)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

Set image(const std::vector<int>& f, const Set& a) {
  Set out;
  for (int x : a) out.insert(f[static_cast<std::size_t>(x)]);
  return out;
}

Set preimage(const std::vector<int>& f, const Set& b, int dom) {
  Set out;
  for (int x = 0; x < dom; ++x)
    if (b.count(f[static_cast<std::size_t>(x)])) out.insert(x);
  return out;
}

bool continuous(const std::vector<int>& f, const Family& tx, int nx,
                const Family& ty) {
  for (const Set& o : ty)
    if (!is_member(tx, preimage(f, o, nx))) return false;
  return true;
}

bool open_map(const std::vector<int>& f, const Family& tx, const Family& ty) {
  for (const Set& o : tx)
    if (!is_member(ty, image(f, o))) return false;
  return true;
}

Family traces(const Family& fam, const Set& y) {
  Family out;
  for (const Set& o : fam) {
    Set t = intersect(o, y);
    if (!is_member(out, t)) out.push_back(std::move(t));
  }
  return out;
}

bool t2_on(const Family& fam, const Set& y) {
  const Family sub = traces(fam, y);
  for (int p : y)
    for (int q : y) {
      if (p >= q) continue;
      bool found = false;
      for (const Set& u : sub) {
        if (!u.count(p)) continue;
        for (const Set& v : sub)
          if (v.count(q) && disjoint(u, v)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

Set closure_on(const Family& fam, const Set& y, const Set& a) {
  Set out = y;
  for (const Set& o : traces(fam, y)) {
    const Set closed = complement_in(o, y);
    if (subset_of(a, closed)) out = intersect(out, closed);
  }
  return out;
}

bool separated_on(const Family& fam, const Set& y, const Set& u,
                  const Set& v) {
  return disjoint(closure_on(fam, y, u), v) &&
         disjoint(closure_on(fam, y, v), u);
}

bool connected_on(const Family& fam, const Set& y) {
  if (y.size() <= 1) return true;
  const std::vector<int> pts(y.begin(), y.end());
  const std::size_t k = pts.size();
  for (std::size_t split = 1; split + 1 < (std::size_t{1} << k); split += 2) {
    Set u, v;
    for (std::size_t i = 0; i < k; ++i)
      ((split >> i) & 1 ? u : v).insert(pts[i]);
    if (separated_on(fam, y, u, v)) return false;
  }
  return true;
}

int group_op(const Table& table, int x, int y) {
  return table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

int group_identity(const Table& table) {
  const int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = group_op(table, e, x) == x && group_op(table, x, e) == x;
    if (ok) return e;
  }
  return -1;
}

int group_inverse(const Table& table, int x) {
  const int e = group_identity(table);
  const int n = static_cast<int>(table.size());
  for (int y = 0; y < n; ++y)
    if (group_op(table, x, y) == e && group_op(table, y, x) == e) return y;
  return -1;
}

Set set_product(const Table& table, const Set& a, const Set& b) {
  Set out;
  for (int x : a)
    for (int y : b) out.insert(group_op(table, x, y));
  return out;
}

Set set_inverse(const Table& table, const Set& a) {
  Set out;
  for (int x : a) out.insert(group_inverse(table, x));
  return out;
}

bool is_subgroup(const Table& table, const Set& h) {
  if (h.empty()) return false;
  for (int x : h)
    for (int y : h)
      if (!h.count(group_op(table, x, group_inverse(table, y)))) return false;
  return true;
}

bool is_normal_subgroup(const Table& table, const Set& h) {
  if (!is_subgroup(table, h)) return false;
  const int n = static_cast<int>(table.size());
  for (int g = 0; g < n; ++g)
    for (int x : h)
      if (!h.count(group_op(table, group_op(table, g, x),
                            group_inverse(table, g))))
        return false;
  return true;
}

bool homomorphism(const std::vector<int>& f, const Table& t1,
                  const Table& t2) {
  const int n = static_cast<int>(t1.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f[static_cast<std::size_t>(group_op(t1, x, y))] !=
          group_op(t2, f[static_cast<std::size_t>(x)],
                   f[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

}  // namespace gtop::naive
