// Finite groups given by Cayley tables: catalog, spec parser, conjugacy
// classes, centralizers, subgroup enumeration.
//
// Elements are dense indices 0..n-1 with 0 the identity.  Catalog orderings:
//   Z<n>       k is the residue k mod n
//   Z<a>xZ<b>  i*b + j is the pair (i, j)
//   S<n>, A<n> permutations of {0..n-1} sorted by image tuple; the product
//              (s*t)(x) = s(t(x)) applies t first
//   D<n>       order 2n, k + n*f is r^k s^f with s r s = r^-1
//   Q8         1, -1, i, -i, j, -j, k, -k

#ifndef HOPFCAT_GROUP_HPP_
#define HOPFCAT_GROUP_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "errors.hpp"

namespace hopfcat {

class Group {
public:
  Group() : Group(1, {0}, "Z1") {}

  // Validates the group axioms; throws NotAGroup.
  Group(int n, std::vector<int> table, std::string name = "")
    : n_(n), table_(std::move(table)), name_(std::move(name)) {
    if (n_ < 1 || table_.size() != static_cast<std::size_t>(n_) * n_)
      throw NotAGroup("table size does not match order");
    for (int x : table_)
      if (x < 0 || x >= n_)
        throw NotAGroup("table entry out of range");
    for (int i = 0; i < n_; ++i)
      if (mul(0, i) != i || mul(i, 0) != i)
        throw NotAGroup("element 0 is not the identity");
    inv_.assign(n_, -1);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (mul(i, j) == 0) {
          if (mul(j, i) != 0)
            throw NotAGroup("left and right inverses differ");
          inv_[i] = j;
          break;
        }
    for (int i = 0; i < n_; ++i)
      if (inv_[i] < 0)
        throw NotAGroup("element " + std::to_string(i) + " has no inverse");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          if (mul(mul(i, j), k) != mul(i, mul(j, k)))
            throw NotAGroup("multiplication is not associative");
  }

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // g a g^-1
  int conj(int g, int a) const { return mul(mul(g, a), inv_[g]); }
  const std::vector<int>& table() const { return table_; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  int power(int a, long long k) const {
    int ord = element_order(a);
    long long e = ((k % ord) + ord) % ord;
    int r = 0;
    for (long long i = 0; i < e; ++i)
      r = mul(r, a);
    return r;
  }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a))
      ++k;
    return k;
  }

  int exponent() const {
    int e = 1;
    for (int a = 0; a < n_; ++a)
      e = std::lcm(e, element_order(a));
    return e;
  }

  bool is_abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

private:
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string name_;
};

struct Subgroup {
  std::vector<int> members;  // sorted, contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  }
};

struct ConjClassG {
  int representative;
  std::vector<int> members;  // sorted
  int size() const { return static_cast<int>(members.size()); }
};

// Subgroup generated by gens.
inline Subgroup closure(const Group& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> list{0};
  in[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (int s : gens) {
      int y = g.mul(list[i], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return Subgroup{list};
}

inline Subgroup trivial_subgroup() { return Subgroup{{0}}; }

inline Subgroup whole_group(const Group& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{all};
}

inline bool is_subgroup(const Group& g, const std::vector<int>& set) {
  if (set.empty() || !std::binary_search(set.begin(), set.end(), 0))
    return false;
  for (int a : set)
    for (int b : set)
      if (!std::binary_search(set.begin(), set.end(), g.mul(a, g.inv(b))))
        return false;
  return true;
}

// Greedy generating set: members in index order that are not yet generated.
inline std::vector<int> generators(const Group& g, const Subgroup& h) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup();
  for (int x : h.members)
    if (!cur.contains(x)) {
      gens.push_back(x);
      cur = closure(g, gens);
    }
  return gens;
}

inline std::vector<ConjClassG> conjugacy_classes(const Group& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<ConjClassG> out;
  for (int a = 0; a < g.order(); ++a) {
    if (cls[a] >= 0)
      continue;
    std::set<int> orbit;
    for (int x = 0; x < g.order(); ++x)
      orbit.insert(g.conj(x, a));
    ConjClassG c{a, std::vector<int>(orbit.begin(), orbit.end())};
    for (int m : c.members)
      cls[m] = static_cast<int>(out.size());
    out.push_back(std::move(c));
  }
  return out;  // identity first; ordered by smallest member by construction
}

// Index of the class of each element.
inline std::vector<int> class_index(const Group& g, const std::vector<ConjClassG>& classes) {
  std::vector<int> idx(g.order(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int m : classes[c].members)
      idx[m] = static_cast<int>(c);
  return idx;
}

inline Subgroup centralizer_subgroup(const Group& g, int a) {
  std::vector<int> m;
  for (int x = 0; x < g.order(); ++x)
    if (g.mul(x, a) == g.mul(a, x))
      m.push_back(x);
  return Subgroup{m};
}

inline bool is_normal(const Group& g, const Subgroup& h) {
  for (int x = 0; x < g.order(); ++x)
    for (int m : h.members)
      if (!h.contains(g.conj(x, m)))
        return false;
  return true;
}

inline bool commute_elementwise(const Group& g, const Subgroup& m, const Subgroup& h) {
  for (int a : m.members)
    for (int b : h.members)
      if (g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> r;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(r));
  return Subgroup{r};
}

inline Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens = a.members;
  gens.insert(gens.end(), b.members.begin(), b.members.end());
  return closure(g, gens);
}

constexpr int kDefaultGroupBound = 24;

// All normal subgroups, sorted by (order, members).  Every normal subgroup is
// a join of normal closures of single classes, so closing {e} under "join
// with one more class" reaches each class-closed subgroup exactly.
inline std::vector<Subgroup> normal_subgroups(const Group& g, int bound = kDefaultGroupBound) {
  if (g.order() > bound)
    throw BoundExceeded("normal_subgroups: |G| = " + std::to_string(g.order()) +
                        " exceeds bound " + std::to_string(bound));
  auto classes = conjugacy_classes(g);
  std::set<Subgroup> found{trivial_subgroup()};
  std::vector<Subgroup> queue{trivial_subgroup()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const ConjClassG& c : classes) {
      if (queue[i].contains(c.representative))
        continue;
      std::vector<int> gens = queue[i].members;
      gens.insert(gens.end(), c.members.begin(), c.members.end());
      Subgroup n = closure(g, gens);
      if (found.insert(n).second)
        queue.push_back(n);
    }
  return std::vector<Subgroup>(found.begin(), found.end());
}

// All subgroups (joins of cyclic subgroups), sorted by (order, members).
inline std::vector<Subgroup> all_subgroups(const Group& g) {
  std::set<Subgroup> cyclic;
  for (int a = 0; a < g.order(); ++a)
    cyclic.insert(closure(g, {a}));
  std::set<Subgroup> found(cyclic.begin(), cyclic.end());
  std::vector<Subgroup> queue(found.begin(), found.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Subgroup& c : cyclic) {
      Subgroup j = join(g, queue[i], c);
      if (found.insert(j).second)
        queue.push_back(j);
    }
  return std::vector<Subgroup>(found.begin(), found.end());
}

// ---------------------------------------------------------------------------
// catalog

namespace impl {

inline Group group_from_mul(int n, const std::string& name, auto&& mul) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i) * n + j] = mul(i, j);
  return Group(n, std::move(t), name);
}

// Permutation group on the given permutations (images of 0..d-1); the element
// list is sorted by image tuple so the identity comes first.
inline Group permutation_group(std::vector<std::vector<int>> perms, const std::string& name) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index[perms[i]] = static_cast<int>(i);
  int n = static_cast<int>(perms.size());
  std::size_t d = perms.empty() ? 0 : perms[0].size();
  return group_from_mul(n, name, [&](int a, int b) {
    std::vector<int> p(d);
    for (std::size_t x = 0; x < d; ++x)
      p[x] = perms[a][perms[b][x]];
    auto it = index.find(p);
    if (it == index.end())
      throw NotAGroup("permutation set not closed");
    return it->second;
  });
}

inline std::vector<std::vector<int>> perm_closure(const std::vector<std::vector<int>>& gens, std::size_t d) {
  std::vector<int> id(d);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> list{id};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto& s : gens) {
      std::vector<int> p(d);
      for (std::size_t x = 0; x < d; ++x)
        p[x] = s[list[i][x]];
      if (seen.insert(p).second)
        list.push_back(p);
    }
  return list;
}

inline int parity(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        ++inversions;
  return inversions % 2;
}

} // namespace impl

inline Group cyclic_group(int n) {
  if (n < 1)
    throw PreconditionViolated("cyclic group order must be positive");
  return impl::group_from_mul(n, "Z" + std::to_string(n), [n](int a, int b) { return (a + b) % n; });
}

inline Group cyclic_product(int a, int b) {
  if (a < 1 || b < 1)
    throw PreconditionViolated("cyclic factor order must be positive");
  return impl::group_from_mul(a * b, "Z" + std::to_string(a) + "xZ" + std::to_string(b),
                              [a, b](int x, int y) {
                                return ((x / b + y / b) % a) * b + (x % b + y % b) % b;
                              });
}

inline Group symmetric_group(int n, bool alternating = false) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    if (!alternating || impl::parity(p) == 0)
      perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return impl::permutation_group(perms, (alternating ? "A" : "S") + std::to_string(n));
}

inline Group dihedral_group(int n) {
  return impl::group_from_mul(2 * n, "D" + std::to_string(n), [n](int x, int y) {
    int k = x % n, f = x / n, l = y % n, g = y / n;
    int r = f == 0 ? (k + l) % n : ((k - l) % n + n) % n;
    return r + n * ((f + g) % 2);
  });
}

inline Group quaternion_group() {
  // unit u in {1, i, j, k} with sign s: index 2*u + (s < 0)
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return impl::group_from_mul(8, "Q8", [](int x, int y) {
    int u = x / 2, v = y / 2;
    int s = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * unit_sign[u][v];
    return 2 * unit_mul[u][v] + (s < 0 ? 1 : 0);
  });
}

// Serialized Cayley table, the "cayley:" file format.
inline nlohmann::json group_to_json(const Group& g) {
  nlohmann::json table = nlohmann::json::array();
  for (int i = 0; i < g.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < g.order(); ++j)
      row.push_back(g.mul(i, j));
    table.push_back(row);
  }
  return {{"n", g.order()}, {"table", table}};
}

inline Group group_from_json(const nlohmann::json& j, const std::string& name = "") {
  if (!j.is_object() || !j.contains("n") || !j.contains("table"))
    throw NotAGroup("cayley JSON must be an object with \"n\" and \"table\"");
  int n = j.at("n").get<int>();
  const auto& rows = j.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw NotAGroup("cayley table must have n rows");
  std::vector<int> t;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw NotAGroup("cayley table rows must have n entries");
    for (const auto& x : row)
      t.push_back(x.get<int>());
  }
  return Group(n, std::move(t), name);
}

namespace impl {

struct SpecCursor {
  const std::string& s;
  std::size_t pos;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  int number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos)
      fail("expected a number");
    if (pos - start > 6)
      throw ParseError("number too large", start);
    return std::stoi(s.substr(start, pos - start));
  }
};

inline Group parse_perm_spec(const std::string& text, std::size_t start) {
  SpecCursor c{text, start};
  std::vector<std::vector<std::vector<int>>> gens;  // generator -> cycles
  std::set<int> points;
  for (;;) {
    std::vector<std::vector<int>> cycles;
    c.skip_ws();
    if (c.peek() != '(')
      c.fail("expected '(' starting a cycle");
    while (c.peek() == '(') {
      ++c.pos;
      std::vector<int> cyc;
      c.skip_ws();
      while (c.peek() != ')') {
        if (c.at_end())
          c.fail("unterminated cycle");
        std::size_t at = c.pos;
        int p = c.number();
        if (std::find(cyc.begin(), cyc.end(), p) != cyc.end())
          throw ParseError("point repeated inside a cycle", at);
        cyc.push_back(p);
        points.insert(p);
        c.skip_ws();
      }
      ++c.pos;
      if (cyc.empty())
        c.fail("empty cycle");
      cycles.push_back(cyc);
      c.skip_ws();
    }
    gens.push_back(cycles);
    if (c.at_end())
      break;
    if (c.peek() != ',')
      c.fail("expected ',' between generators");
    ++c.pos;
  }
  std::vector<int> pts(points.begin(), points.end());
  std::map<int, int> local;
  for (std::size_t i = 0; i < pts.size(); ++i)
    local[pts[i]] = static_cast<int>(i);
  std::size_t d = pts.size();
  std::vector<std::vector<int>> perms;
  for (const auto& cycles : gens) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    // cycles compose right to left, matching the group product
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      std::vector<int> cyc(d);
      std::iota(cyc.begin(), cyc.end(), 0);
      for (std::size_t k = 0; k < it->size(); ++k)
        cyc[local[(*it)[k]]] = local[(*it)[(k + 1) % it->size()]];
      std::vector<int> q(d);
      for (std::size_t x = 0; x < d; ++x)
        q[x] = cyc[p[x]];
      p = q;
    }
    perms.push_back(p);
  }
  return permutation_group(perm_closure(perms, d), text);
}

} // namespace impl

// spec := NAME | "perm:" cycles ("," cycles)* | "cayley:" path
inline Group parse_group_spec(const std::string& text) {
  if (text.rfind("perm:", 0) == 0)
    return impl::parse_perm_spec(text, 5);
  if (text.rfind("cayley:", 0) == 0) {
    std::string path = text.substr(7);
    if (path.empty())
      throw ParseError("missing path after 'cayley:'", 7);
    std::ifstream in(path);
    if (!in)
      throw ParseError("cannot open cayley file '" + path + "'", 7);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON in cayley file: ") + e.what(), 7);
    }
    return group_from_json(j, text);
  }
  impl::SpecCursor c{text, 0};
  if (text.empty())
    c.fail("empty group spec");
  char kind = text[0];
  if (!std::isalpha(static_cast<unsigned char>(kind)))
    c.fail("expected a group name, 'perm:' or 'cayley:'");
  ++c.pos;
  if (kind == 'Q' && text == "Q8")
    return quaternion_group();
  if (kind != 'Z' && kind != 'S' && kind != 'A' && kind != 'D')
    throw UnknownName("unknown group '" + text + "'");
  if (c.at_end() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw UnknownName("unknown group '" + text + "'");
  int a = c.number();
  if (kind == 'Z' && c.peek() == 'x') {
    ++c.pos;
    if (c.peek() != 'Z')
      c.fail("expected 'Z' after 'x'");
    ++c.pos;
    int b = c.number();
    if (!c.at_end())
      c.fail("trailing characters");
    if (a < 1 || b < 1)
      throw UnknownName("cyclic factors must have positive order");
    return cyclic_product(a, b);
  }
  if (!c.at_end())
    throw UnknownName("unknown group '" + text + "'");
  switch (kind) {
    case 'Z':
      if (a < 1)
        throw UnknownName("Z0 is not a group");
      return cyclic_group(a);
    case 'S':
      if (a < 1 || a > 4)
        throw UnknownName("symmetric groups are catalogued for n <= 4");
      return symmetric_group(a);
    case 'A':
      if (a < 1 || a > 4)
        throw UnknownName("alternating groups are catalogued for n <= 4");
      return symmetric_group(a, true);
    case 'D':
      if (a < 1 || a > 6)
        throw UnknownName("dihedral groups are catalogued for n <= 6");
      return dihedral_group(a);
  }
  throw UnknownName("unknown group '" + text + "'");
}

} // namespace hopfcat

#endif
