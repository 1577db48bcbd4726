#pragma once
// Brute-force reference implementations for cross-checking the library.
// Everything here works on raw line lists and image vectors and shares no
// code with the library.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Line = std::vector<int>;
using Lines = std::vector<Line>;

// AG(2,p) as the set of point rows {P + t(Q - P)}, one per distinct pair.
inline Lines affine_plane(int p) {
  std::set<Line> seen;
  const int n = p * p;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int ax = a / p, ay = a % p, dx = (b / p - ax + p) % p, dy = (b % p - ay + p) % p;
      Line l;
      for (int t = 0; t < p; ++t) l.push_back(((ax + t * dx) % p) * p + (ay + t * dy) % p);
      std::sort(l.begin(), l.end());
      seen.insert(l);
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool contains(const Line& l, int x) { return std::binary_search(l.begin(), l.end(), x); }

inline bool parallel(const Line& a, const Line& b) {
  if (a == b) return true;
  for (int x : a) {
    if (contains(b, x)) return false;
  }
  return true;
}

// Every line through both points.
inline Lines joins(const Lines& lines, int a, int b) {
  Lines out;
  for (const auto& l : lines) {
    if (contains(l, a) && contains(l, b)) out.push_back(l);
  }
  return out;
}

inline Line image(const Line& l, const Perm& f) {
  Line out;
  for (int x : l) out.push_back(f[x]);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_collineation(const Lines& lines, const Perm& f) {
  const std::set<Line> all(lines.begin(), lines.end());
  return std::all_of(lines.begin(), lines.end(), [&](const Line& l) { return all.count(image(l, f)) > 0; });
}

inline bool is_dilation(const Lines& lines, const Perm& f) {
  if (!is_collineation(lines, f)) return false;
  const int n = static_cast<int>(f.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const auto before = joins(lines, a, b), after = joins(lines, f[a], f[b]);
      if (before.size() != 1 || after.size() != 1 || !parallel(before[0], after[0])) return false;
    }
  }
  return true;
}

inline bool fixes_nothing(const Perm& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == static_cast<int>(i)) return false;
  }
  return true;
}

inline Perm identity(int n) {
  Perm f(n);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

inline bool is_translation(const Lines& lines, const Perm& f) {
  return f == identity(static_cast<int>(f.size())) || (is_dilation(lines, f) && fixes_nothing(f));
}

// All permutations passing `keep`, in lexicographic order.
template <class Pred>
std::vector<Perm> all_permutations(int n, Pred keep) {
  std::vector<Perm> out;
  Perm f = identity(n);
  do {
    if (keep(f)) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

// (f o g)(x) = f(g(x))
inline Perm compose(const Perm& f, const Perm& g) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

inline Perm inverse(const Perm& f) {
  Perm out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[f[i]] = static_cast<int>(i);
  return out;
}

inline Perm power(const Perm& f, int k) {
  Perm out = identity(static_cast<int>(f.size()));
  for (int i = 0; i < k; ++i) out = compose(f, out);
  return out;
}

// Trace lines of a translation; empty for the identity.
inline Lines traces(const Lines& lines, const Perm& f) {
  Lines out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == static_cast<int>(i)) continue;
    out.push_back(joins(lines, static_cast<int>(i), f[i]).at(0));
  }
  return out;
}

inline bool same_direction(const Lines& lines, const Perm& f, const Perm& g) {
  const auto a = traces(lines, f), b = traces(lines, g);
  return !a.empty() && !b.empty() && parallel(a[0], b[0]);
}

// Multiplication table of a list of permutations, -1 where the composite is
// outside the list. Row i, column j is list[i] o list[j].
inline std::vector<std::vector<int>> cayley(const std::vector<Perm>& list) {
  std::vector<std::vector<int>> t(list.size(), std::vector<int>(list.size(), -1));
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      const auto c = compose(list[i], list[j]);
      const auto it = std::find(list.begin(), list.end(), c);
      if (it != list.end()) t[i][j] = static_cast<int>(it - list.begin());
    }
  }
  return t;
}

inline bool is_homomorphism(const std::vector<std::vector<int>>& t, const std::vector<int>& a) {
  if (a[0] != 0) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (a[t[i][j]] != t[a[i]][a[j]]) return false;
    }
  }
  return true;
}

// Every self-map of an n-element group satisfying the homomorphism law,
// by running through all n^n tables. Lexicographic order.
inline std::vector<std::vector<int>> brute_endomorphisms(const std::vector<std::vector<int>>& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  while (true) {
    if (is_homomorphism(t, a)) out.push_back(a);
    std::size_t k = n;
    while (k > 0 && a[k - 1] == static_cast<int>(n) - 1) a[--k] = 0;
    if (k == 0) break;
    ++a[k - 1];
  }
  return out;
}

// Endomorphisms of the translation group of AG(2,p) via the coordinate
// description: with u, v the translations by (1,0) and (0,1), every element
// is u^i v^j, and an endomorphism is fixed by arbitrary images of u and v.
inline std::vector<std::vector<int>> coordinate_endomorphisms(int p, const std::vector<Perm>& list) {
  const int n = p * p;
  auto index_of = [&](const Perm& f) {
    return static_cast<int>(std::find(list.begin(), list.end(), f) - list.begin());
  };
  // coordinates of each element as a shift
  std::vector<std::pair<int, int>> coord(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) coord[k] = {list[k][0] / p, list[k][0] % p};

  std::vector<std::vector<int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Perm u = list[a], v = list[b];
      std::vector<int> table(list.size());
      for (std::size_t k = 0; k < list.size(); ++k) {
        const auto [i, j] = coord[k];
        table[k] = index_of(compose(power(u, i), power(v, j)));
      }
      out.push_back(table);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oracle
