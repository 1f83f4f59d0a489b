// triangulation.hpp
//
// Triangulations of a labeled convex n-gon (vertices 0..n-1 in cyclic
// order), their exhaustive enumeration, uniform sampling, and the
// Conway-Coxeter map onto positive-integer friezes: the first row counts
// the triangles incident to each vertex.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "frieze/detail/rng.hpp"
#include "frieze/errors.hpp"
#include "frieze/pattern.hpp"
#include "frieze/rational.hpp"

namespace frieze {

class Triangulation {
 public:
  using Diagonal = std::pair<int, int>;

  // Validates vertex range, diagonal count (n-3), no repeated or boundary
  // chords, and pairwise non-crossing. Diagonals are stored sorted with
  // p < q, so equality is set equality.
  Triangulation(int n, std::vector<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    if (n_ < 3) throw IndexOutOfRange("polygon needs at least 3 vertices");
    for (auto& [p, q] : diagonals_) {
      if (p > q) std::swap(p, q);
      if (p < 0 || q >= n_ || p == q) throw IndexOutOfRange("diagonal vertex out of range");
      if (q - p == 1 || (p == 0 && q == n_ - 1))
        throw IndexOutOfRange("polygon side listed as a diagonal");
    }
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
      throw IndexOutOfRange("repeated diagonal");
    if (static_cast<int>(diagonals_.size()) != n_ - 3)
      throw IndexOutOfRange("a triangulation of an n-gon has n-3 diagonals, got " +
                            std::to_string(diagonals_.size()));
    for (std::size_t s = 0; s < diagonals_.size(); ++s)
      for (std::size_t t = s + 1; t < diagonals_.size(); ++t)
        if (crosses(diagonals_[s], diagonals_[t]))
          throw IndexOutOfRange("diagonals cross inside the polygon");
  }

  int polygon_size() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  // a_i = number of triangles incident to vertex i. In a full triangulation
  // the edges at a vertex fan out over its triangles, so the count is
  // (incident diagonals) + 1.
  std::vector<int> vertex_triangle_counts() const {
    std::vector<int> count(n_, 1);
    for (const auto& [p, q] : diagonals_) {
      ++count[p];
      ++count[q];
    }
    return count;
  }

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.n_ == b.n_ && a.diagonals_ == b.diagonals_;
  }
  friend bool operator<(const Triangulation& a, const Triangulation& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.diagonals_ < b.diagonals_;
  }

 private:
  // Strict interior crossing on the convex polygon: exactly one endpoint of
  // d2 lies strictly between the endpoints of d1 (cyclically).
  static bool crosses(const Diagonal& d1, const Diagonal& d2) {
    auto strictly_between = [](int lo, int hi, int x) { return lo < x && x < hi; };
    const bool c_in = strictly_between(d1.first, d1.second, d2.first);
    const bool d_in = strictly_between(d1.first, d1.second, d2.second);
    if (d1.first == d2.first || d1.first == d2.second || d1.second == d2.first ||
        d1.second == d2.second)
      return false;  // shared endpoint never crosses
    return c_in != d_in;
  }

  int n_;
  std::vector<Diagonal> diagonals_;
};

// (2m)! / (m! (m+1)!) without factorials: C_0 = 1, C_{m+1} = C_m 2(2m+1)/(m+2).
inline Integer catalan(int m) {
  if (m < 0) throw IndexOutOfRange("catalan of negative index");
  Integer c = 1;
  for (int j = 0; j < m; ++j) {
    c *= 2 * (2 * j + 1);
    c /= j + 2;
  }
  return c;
}

namespace detail {

template <class Visit>
bool enumerate_arcs(int n, std::vector<std::pair<int, int>>& arcs,
                    std::vector<Triangulation::Diagonal>& diags, const Visit& visit) {
  if (arcs.empty()) {
    return visit(Triangulation(n, diags));
  }
  const auto [lo, hi] = arcs.back();
  arcs.pop_back();
  bool keep_going = true;
  if (hi - lo < 2) {
    keep_going = enumerate_arcs(n, arcs, diags, visit);
  } else {
    // Apex of the triangle resting on the arc's base edge (lo, hi).
    for (int m = lo + 1; m < hi && keep_going; ++m) {
      std::size_t pushed = 0;
      auto push_diag = [&](int p, int q) {
        p %= n;
        q %= n;
        if (p > q) std::swap(p, q);
        diags.emplace_back(p, q);
        ++pushed;
      };
      if (m - lo >= 2) push_diag(lo, m);
      if (hi - m >= 2) push_diag(m, hi);
      const std::size_t arc_mark = arcs.size();
      if (m - lo >= 2) arcs.emplace_back(lo, m);
      if (hi - m >= 2) arcs.emplace_back(m, hi);
      keep_going = enumerate_arcs(n, arcs, diags, visit);
      arcs.resize(arc_mark);
      diags.resize(diags.size() - pushed);
    }
  }
  arcs.emplace_back(lo, hi);
  return keep_going;
}

}  // namespace detail

inline constexpr int kEnumerationCap = 14;

// Visits every triangulation of the labeled n-gon exactly once in a
// deterministic order (recursing on the apex of the triangle that contains
// edge (0,1), apexes ascending). The visitor returns false to stop early.
inline void enumerate_triangulations(int n, const std::function<bool(const Triangulation&)>& visit,
                                     int cap = kEnumerationCap) {
  if (n < 3) throw IndexOutOfRange("polygon needs at least 3 vertices");
  if (n > cap)
    throw CapExceeded("enumeration of " + std::to_string(n) +
                      "-gons exceeds the configured cap " + std::to_string(cap));
  std::vector<std::pair<int, int>> arcs{{1, n}};  // vertex n is vertex 0
  std::vector<Triangulation::Diagonal> diags;
  detail::enumerate_arcs(n, arcs, diags, visit);
}

inline std::vector<Triangulation> all_triangulations(int n, int cap = kEnumerationCap) {
  std::vector<Triangulation> out;
  enumerate_triangulations(
      n,
      [&](const Triangulation& t) {
        out.push_back(t);
        return true;
      },
      cap);
  return out;
}

// Uniformly random triangulation via Remy's algorithm: grow a uniform
// binary tree with n-1 leaves, then read triangles off its internal nodes
// (leaves are polygon sides (j, j+1), the root edge is (0, n-1)).
inline Triangulation random_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw IndexOutOfRange("polygon needs at least 3 vertices");
  if (n == 3) return Triangulation(3, {});

  detail::Rng rng(seed);
  struct Node {
    int left = -1, right = -1;  // -1 children mean leaf
  };
  std::vector<Node> nodes;
  nodes.reserve(2 * n);
  nodes.push_back({});  // the initial single leaf
  int root = 0;
  std::vector<int> parent{-1};

  const int internal_target = n - 2;
  for (int step = 0; step < internal_target; ++step) {
    const int pick = static_cast<int>(rng.uniform_index(nodes.size()));
    const bool new_leaf_left = (rng.next_u64() & 1) != 0;
    const int fresh_leaf = static_cast<int>(nodes.size());
    nodes.push_back({});
    parent.push_back(-1);
    const int fresh_internal = static_cast<int>(nodes.size());
    nodes.push_back(new_leaf_left ? Node{fresh_leaf, pick} : Node{pick, fresh_leaf});
    parent.push_back(parent[pick]);
    const int up = parent[pick];
    if (up == -1) {
      root = fresh_internal;
    } else if (nodes[up].left == pick) {
      nodes[up].left = fresh_internal;
    } else {
      nodes[up].right = fresh_internal;
    }
    parent[pick] = fresh_internal;
    parent[fresh_leaf] = fresh_internal;
  }

  // Leaf j in left-to-right order is polygon side (j, j+1); an internal
  // node spanning leaves [l..r] is the diagonal (l, r+1).
  std::vector<Triangulation::Diagonal> diags;
  int next_leaf = 0;
  std::function<std::pair<int, int>(int)> span = [&](int v) -> std::pair<int, int> {
    if (nodes[v].left == -1) {
      const int j = next_leaf++;
      return {j, j};
    }
    const auto left = span(nodes[v].left);
    const auto right = span(nodes[v].right);
    const std::pair<int, int> s{left.first, right.second};
    const int p = s.first;
    const int q = s.second + 1;
    if (v != root && q - p >= 2) diags.emplace_back(p, q);
    return s;
  };
  span(root);
  return Triangulation(n, std::move(diags));
}

// Conway-Coxeter map: the triangle-count row closes into a positive-integer
// frieze for every triangulation; a failure here is a library bug.
inline FriezeQ triangulation_to_frieze(const Triangulation& t) {
  if (t.polygon_size() < 4)
    throw IndexOutOfRange("friezes need polygon size >= 4");
  const std::vector<int> counts = t.vertex_triangle_counts();
  std::vector<Rational> a(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) a[i] = Rational(counts[i]);
  try {
    return FriezeQ::build_from_first_row(a);
  } catch (const Error& e) {
    throw InternalError(std::string("triangulation first row failed to close: ") + e.what());
  }
}

}  // namespace frieze
