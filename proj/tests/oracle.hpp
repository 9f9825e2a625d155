#pragma once

// Naive reference implementations for the test suite. Everything here works
// on plain std::set tables copied out of a structure and shares no code with
// the library beyond reading those tables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shr/semihyperring.hpp"

namespace oracle {

using Set = std::set<int>;

struct Table {
  int n = 0;
  int zero = 0;
  std::optional<int> unity;
  std::vector<std::vector<Set>> add;
  std::vector<std::vector<int>> mul;

  Set sum(const Set& a, const Set& b) const {
    Set out;
    for (int x : a)
      for (int y : b) out.insert(add[x][y].begin(), add[x][y].end());
    return out;
  }
  Set all() const {
    Set out;
    for (int i = 0; i < n; ++i) out.insert(i);
    return out;
  }
};

inline Table table_of(const shr::Semihyperring& s) {
  Table t;
  t.n = static_cast<int>(s.order());
  t.zero = static_cast<int>(s.zero());
  if (s.unity()) t.unity = static_cast<int>(*s.unity());
  t.add.assign(t.n, std::vector<Set>(t.n));
  t.mul.assign(t.n, std::vector<int>(t.n));
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      for (shr::Element e : s.add(x, y)) t.add[x][y].insert(static_cast<int>(e));
      t.mul[x][y] = static_cast<int>(s.mul(x, y));
    }
  return t;
}

inline Set to_set(shr::Subset s) {
  Set out;
  for (shr::Element e : s) out.insert(static_cast<int>(e));
  return out;
}

inline shr::Subset to_subset(const Set& s) {
  shr::Subset out;
  for (int e : s) out.insert(static_cast<shr::Element>(e));
  return out;
}

inline bool includes(const Set& big, const Set& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

/// The lexicographically first tuple breaking one law, or nothing. Laws are
/// named as in the axiom report.
inline std::optional<std::vector<int>> first_violation(const Table& t,
                                                       const std::string& law) {
  const int n = t.n;
  auto dist_left = [&](int x, int y, int z) {
    Set lhs;
    for (int w : t.add[y][z]) lhs.insert(t.mul[x][w]);
    return lhs == t.add[t.mul[x][y]][t.mul[x][z]];
  };
  auto dist_right = [&](int x, int y, int z) {
    Set lhs;
    for (int w : t.add[x][y]) lhs.insert(t.mul[w][z]);
    return lhs == t.add[t.mul[x][z]][t.mul[y][z]];
  };
  for (int x = 0; x < n; ++x) {
    if (law == "add-identity" &&
        (t.add[t.zero][x] != Set{x} || t.add[x][t.zero] != Set{x}))
      return std::vector{x};
    if (law == "zero-absorbing" && (t.mul[x][t.zero] != t.zero || t.mul[t.zero][x] != t.zero))
      return std::vector{x};
    if (law == "unity" && t.unity && (t.mul[*t.unity][x] != x || t.mul[x][*t.unity] != x))
      return std::vector{x};
    for (int y = 0; y < n; ++y) {
      if (law == "add-commutativity" && y > x && t.add[x][y] != t.add[y][x])
        return std::vector{x, y};
      for (int z = 0; z < n; ++z) {
        const bool broken =
            (law == "add-associativity" && t.sum(t.add[x][y], {z}) != t.sum({x}, t.add[y][z])) ||
            (law == "mul-associativity" && t.mul[t.mul[x][y]][z] != t.mul[x][t.mul[y][z]]) ||
            (law == "left-distributivity" && !dist_left(x, y, z)) ||
            (law == "right-distributivity" && !dist_right(x, y, z));
        if (broken) return std::vector{x, y, z};
      }
    }
  }
  return std::nullopt;
}

/// Every semihyperring law, checked literally over all triples.
inline bool axioms_hold(const Table& t) {
  for (int x = 0; x < t.n; ++x) {
    if (t.add[t.zero][x] != Set{x} || t.add[x][t.zero] != Set{x}) return false;
    if (t.mul[x][t.zero] != t.zero || t.mul[t.zero][x] != t.zero) return false;
    if (t.unity && (t.mul[*t.unity][x] != x || t.mul[x][*t.unity] != x)) return false;
    for (int y = 0; y < t.n; ++y) {
      if (t.add[x][y].empty() || t.add[x][y] != t.add[y][x]) return false;
      for (int z = 0; z < t.n; ++z) {
        if (t.sum(t.add[x][y], {z}) != t.sum({x}, t.add[y][z])) return false;
        if (t.mul[t.mul[x][y]][z] != t.mul[x][t.mul[y][z]]) return false;
        Set left, right;
        for (int w : t.add[y][z]) left.insert(t.mul[x][w]);
        for (int w : t.add[x][y]) right.insert(t.mul[w][z]);
        if (left != t.add[t.mul[x][y]][t.mul[x][z]]) return false;
        if (right != t.add[t.mul[x][z]][t.mul[y][z]]) return false;
      }
    }
  }
  return true;
}

inline bool is_ideal(const Table& t, const Set& i) {
  if (i.empty()) return false;
  for (int a : i) {
    for (int b : i)
      if (!includes(i, t.add[a][b])) return false;
    for (int r = 0; r < t.n; ++r)
      if (!i.count(t.mul[r][a]) || !i.count(t.mul[a][r])) return false;
  }
  return true;
}

/// All hyperideals, by scanning every nonempty subset.
inline std::vector<Set> ideals(const Table& t) {
  std::vector<Set> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << t.n); ++m) {
    Set s;
    for (int i = 0; i < t.n; ++i)
      if (m >> i & 1) s.insert(i);
    if (is_ideal(t, s)) out.push_back(s);
  }
  return out;
}

/// The intersection of every hyperideal containing X.
inline Set generated_ideal(const Table& t, const Set& x) {
  Set out = t.all();
  for (const Set& i : ideals(t))
    if (includes(i, x)) out = meet(out, i);
  return out;
}

/// Elements of sums of at most `depth` terms from P.
inline Set finite_sums(const Table& t, const Set& p, int depth) {
  Set level = p, out = p;
  for (int d = 2; d <= depth; ++d) {
    level = t.sum(level, p);
    out.insert(level.begin(), level.end());
  }
  return out;
}

/// Finite sums, doubling the depth until nothing new appears.
inline Set finite_sums_stable(const Table& t, const Set& p) {
  int depth = 1;
  Set current = finite_sums(t, p, depth);
  while (true) {
    depth *= 2;
    Set next = finite_sums(t, p, depth);
    if (next == current) return current;
    current = next;
  }
}

/// (R,+) is an abelian canonical hypergroup and the ring laws hold.
inline bool hyperring(const Table& t) {
  if (!axioms_hold(t)) return false;
  std::vector<int> inverse(t.n, -1);
  for (int x = 0; x < t.n; ++x) {
    int found = 0;
    for (int y = 0; y < t.n; ++y)
      if (t.add[x][y].count(t.zero) && t.add[y][x].count(t.zero)) {
        inverse[x] = y;
        ++found;
      }
    if (found != 1) return false;
  }
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      for (int z : t.add[x][y]) {
        if (!t.add[z][inverse[y]].count(x)) return false;
        if (!t.add[inverse[x]][z].count(y)) return false;
      }
  return true;
}

/// Finite sums of products a·b with a ∈ A, b ∈ B.
inline Set product(const Table& t, const Set& a, const Set& b) {
  Set p;
  for (int x : a)
    for (int y : b) p.insert(t.mul[x][y]);
  return finite_sums_stable(t, p);
}

struct Flags {
  bool prime = false;
  bool semiprime = false;
  bool irreducible = false;
  bool strongly_irreducible = false;
  bool maximal = false;
};

/// The classification flags of a proper ideal, straight from the definitions.
inline Flags classify(const Table& t, const Set& i) {
  const auto all = ideals(t);
  Flags f;
  f.prime = f.semiprime = f.irreducible = f.strongly_irreducible = f.maximal = true;
  for (const Set& h : all) {
    if (includes(i, product(t, h, h)) && !includes(i, h)) f.semiprime = false;
    if (i != h && includes(h, i) && h != t.all()) f.maximal = false;
    for (const Set& k : all) {
      if (includes(i, product(t, h, k)) && !includes(i, h) && !includes(i, k))
        f.prime = false;
      if (meet(h, k) == i && h != i && k != i) f.irreducible = false;
      if (includes(i, meet(h, k)) && !includes(i, h) && !includes(i, k))
        f.strongly_irreducible = false;
    }
  }
  return f;
}

/// Proper ideals that are irreducible.
inline std::vector<Set> spectrum(const Table& t) {
  std::vector<Set> out;
  for (const Set& i : ideals(t))
    if (i != t.all() && classify(t, i).irreducible) out.push_back(i);
  return out;
}

/// Θ_I as the list of points not containing I.
inline std::vector<Set> theta(const Table& t, const Set& i) {
  std::vector<Set> out;
  for (const Set& p : spectrum(t))
    if (!includes(p, i)) out.push_back(p);
  return out;
}

/// Valid tables of the given order up to relabelling fixing zero, counted by
/// trying every table whose zero row and column are forced by the identity
/// and absorbing laws.
inline std::size_t catalog_count(int n) {
  const int cells = (n - 1) * (n - 1);
  const int subsets = (1 << n) - 1;
  std::vector<int> add_digit(cells, 0), mul_digit(cells, 0);
  std::set<std::string> seen;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  auto build = [&]() {
    Table t;
    t.n = n;
    t.add.assign(n, std::vector<Set>(n));
    t.mul.assign(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x) t.add[0][x] = t.add[x][0] = {x};
    for (int c = 0; c < cells; ++c) {
      const int x = c / (n - 1) + 1, y = c % (n - 1) + 1;
      for (int b = 0; b < n; ++b)
        if ((add_digit[c] + 1) >> b & 1) t.add[x][y].insert(b);
      t.mul[x][y] = mul_digit[c];
    }
    return t;
  };
  auto encode = [&](const Table& t, const std::vector<int>& p) {
    // p maps old index to new index.
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[p[i]] = i;
    std::string key;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Set cell;
        for (int e : t.add[inv[x]][inv[y]]) cell.insert(p[e]);
        for (int e : cell) key += char('a' + e);
        key += '|';
        key += char('0' + p[t.mul[inv[x]][inv[y]]]);
        key += ';';
      }
    return key;
  };
  std::function<void(int)> mul_loop, add_loop;
  mul_loop = [&](int c) {
    if (c == cells) {
      const Table t = build();
      if (!axioms_hold(t)) return;
      std::string best;
      std::vector<int> p = perm;
      do {
        const std::string key = encode(t, p);
        if (best.empty() || key < best) best = key;
      } while (std::next_permutation(p.begin() + 1, p.end()));
      seen.insert(best);
      return;
    }
    for (int v = 0; v < n; ++v) {
      mul_digit[c] = v;
      mul_loop(c + 1);
    }
  };
  add_loop = [&](int c) {
    if (c == cells) {
      mul_loop(0);
      return;
    }
    for (int v = 0; v < subsets; ++v) {
      add_digit[c] = v;
      add_loop(c + 1);
    }
  };
  add_loop(0);
  return seen.size();
}

}  // namespace oracle
