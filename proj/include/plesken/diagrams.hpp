#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plesken {

namespace detail {

inline std::string join_set(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(xs[k]);
  }
  return out + "}";
}

/// All k-element subsets of {1..n}, each sorted, in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Planar rook diagrams

/// Planar rook diagram on n+n nodes. Planarity forces the k-th top endpoint
/// to connect to the k-th bottom endpoint, so the two sorted endpoint sets
/// determine the diagram.
struct PlanarRookDiagram {
  std::vector<int> top;
  std::vector<int> bottom;

  std::size_t arcs() const { return top.size(); }
  PlanarRookDiagram flipped() const { return {bottom, top}; }
  std::string label() const { return detail::join_set(top) + "|" + detail::join_set(bottom); }

  friend auto operator<=>(const PlanarRookDiagram&, const PlanarRookDiagram&) = default;
  friend bool operator==(const PlanarRookDiagram&, const PlanarRookDiagram&) = default;
};

/// All planar rook diagrams on n nodes, sorted lexicographically by (top, bottom).
inline std::vector<PlanarRookDiagram> enumerate_planar_rook(int n) {
  if (n < 0) throw std::invalid_argument("planar rook: negative n");
  std::vector<PlanarRookDiagram> out;
  for (int k = 0; k <= n; ++k) {
    auto sets = detail::subsets(n, k);
    for (const auto& t : sets)
      for (const auto& b : sets) out.push_back({t, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Stacks `upper` on top of `lower`; an arc survives when the upper diagram's
/// bottom endpoint meets a top endpoint of the lower diagram.
inline PlanarRookDiagram compose(const PlanarRookDiagram& upper, const PlanarRookDiagram& lower) {
  PlanarRookDiagram out;
  std::size_t m = 0;
  for (std::size_t k = 0; k < upper.bottom.size(); ++k) {
    while (m < lower.top.size() && lower.top[m] < upper.bottom[k]) ++m;
    if (m < lower.top.size() && lower.top[m] == upper.bottom[k]) {
      out.top.push_back(upper.top[k]);
      out.bottom.push_back(lower.bottom[m]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Temperley-Lieb diagrams

/// Perfect matching on 2n points: top nodes 1..n and bottom nodes n+1..2n,
/// both numbered left to right. Pairs are stored (min, max) and sorted.
struct TLDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  static TLDiagram from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
    for (auto& p : pairs)
      if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(pairs.begin(), pairs.end());
    return {n, std::move(pairs)};
  }

  std::size_t through_strands() const {
    std::size_t k = 0;
    for (const auto& [a, b] : pairs)
      if ((a <= n) != (b <= n)) ++k;
    return k;
  }

  TLDiagram flipped() const {
    auto swap_row = [this](int x) { return x <= n ? x + n : x - n; };
    std::vector<std::pair<int, int>> out;
    for (const auto& [a, b] : pairs) out.emplace_back(swap_row(a), swap_row(b));
    return from_pairs(n, std::move(out));
  }

  std::string label() const {
    std::string out;
    for (const auto& [a, b] : pairs) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return out;
  }

  /// Position of a node on the boundary circle: top row left to right, then
  /// bottom row right to left.
  int boundary_position(int node) const { return node <= n ? node - 1 : 3 * n - node; }

  /// Every node matched exactly once and no two arcs interleave.
  bool is_valid() const {
    if (static_cast<int>(pairs.size()) != n) return false;
    std::vector<int> seen(2 * n + 1, 0);
    for (const auto& [a, b] : pairs) {
      if (a < 1 || b > 2 * n || a == b) return false;
      if (seen[a]++ || seen[b]++) return false;
    }
    for (std::size_t x = 0; x < pairs.size(); ++x)
      for (std::size_t y = x + 1; y < pairs.size(); ++y) {
        auto [a, b] = std::minmax(boundary_position(pairs[x].first), boundary_position(pairs[x].second));
        auto [c, d] = std::minmax(boundary_position(pairs[y].first), boundary_position(pairs[y].second));
        if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
      }
    return true;
  }

  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;
  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;
};

/// All Temperley-Lieb diagrams on n+n nodes, sorted lexicographically by pair list.
inline std::vector<TLDiagram> enumerate_temperley_lieb(int n) {
  if (n < 0) throw std::invalid_argument("temperley-lieb: negative n");
  const int points = 2 * n;
  auto node_at = [n](int pos) { return pos < n ? pos + 1 : 3 * n - pos; };

  std::vector<TLDiagram> out;
  std::vector<std::pair<int, int>> cur;
  // Noncrossing perfect matchings of the boundary positions in [lo, hi).
  std::function<void(std::vector<std::pair<int, int>>&, std::vector<std::pair<int, int>>)> rec;
  rec = [&](std::vector<std::pair<int, int>>& acc, std::vector<std::pair<int, int>> intervals) {
    while (!intervals.empty() && intervals.back().first >= intervals.back().second) intervals.pop_back();
    if (intervals.empty()) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& [p, q] : acc) pairs.emplace_back(node_at(p), node_at(q));
      out.push_back(TLDiagram::from_pairs(n, std::move(pairs)));
      return;
    }
    auto [lo, hi] = intervals.back();
    intervals.pop_back();
    for (int k = lo + 1; k < hi; k += 2) {
      acc.emplace_back(lo, k);
      auto next = intervals;
      next.emplace_back(k + 1, hi);
      next.emplace_back(lo + 1, k);
      rec(acc, std::move(next));
      acc.pop_back();
    }
  };
  rec(cur, {{0, points}});
  std::sort(out.begin(), out.end());
  return out;
}

struct TLProduct {
  std::size_t loops = 0;
  TLDiagram diagram;
};

/// Stacks `upper` on top of `lower` by union-find over the 3n nodes of the
/// stacked picture; components made only of middle nodes are closed loops.
inline TLProduct compose(const TLDiagram& upper, const TLDiagram& lower) {
  const int n = upper.n;
  if (lower.n != n) throw std::invalid_argument("temperley-lieb: composing diagrams of different size");
  detail::UnionFind uf(3 * static_cast<std::size_t>(n));
  // Upper diagram occupies rows top/middle, lower diagram rows middle/bottom.
  auto upper_id = [](int node) { return static_cast<std::size_t>(node - 1); };
  auto lower_id = [n](int node) { return static_cast<std::size_t>(n + node - 1); };
  for (const auto& [a, b] : upper.pairs) uf.unite(upper_id(a), upper_id(b));
  for (const auto& [a, b] : lower.pairs) uf.unite(lower_id(a), lower_id(b));

  const std::size_t total = 3 * static_cast<std::size_t>(n);
  std::vector<int> first_outer(total, 0);
  std::vector<std::pair<int, int>> pairs;
  auto outer_node = [n](std::size_t id) {
    return id < static_cast<std::size_t>(n) ? static_cast<int>(id) + 1 : static_cast<int>(id) - n + 1;
  };
  std::vector<bool> has_outer(total, false);
  for (std::size_t id = 0; id < total; ++id) {
    bool outer = id < static_cast<std::size_t>(n) || id >= 2 * static_cast<std::size_t>(n);
    if (!outer) continue;
    std::size_t root = uf.find(id);
    has_outer[root] = true;
    if (first_outer[root] == 0)
      first_outer[root] = outer_node(id);
    else
      pairs.emplace_back(first_outer[root], outer_node(id));
  }
  TLProduct out;
  std::vector<bool> counted(total, false);
  for (std::size_t id = static_cast<std::size_t>(n); id < 2 * static_cast<std::size_t>(n); ++id) {
    std::size_t root = uf.find(id);
    if (!has_outer[root] && !counted[root]) {
      counted[root] = true;
      ++out.loops;
    }
  }
  out.diagram = TLDiagram::from_pairs(n, std::move(pairs));
  return out;
}

/// Half diagram on n points: '(' and ')' mark cup endpoints, '|' a defect.
/// Defects never sit inside a cup.
struct HalfDiagram {
  std::string shape;

  std::size_t defects() const { return static_cast<std::size_t>(std::count(shape.begin(), shape.end(), '|')); }

  /// Cups as 1-based (left, right) endpoints, and defect positions, in order.
  std::pair<std::vector<std::pair<int, int>>, std::vector<int>> decompose() const {
    std::vector<std::pair<int, int>> cups;
    std::vector<int> defect_nodes, stack;
    for (int k = 0; k < static_cast<int>(shape.size()); ++k) {
      if (shape[k] == '(')
        stack.push_back(k + 1);
      else if (shape[k] == ')') {
        cups.emplace_back(stack.back(), k + 1);
        stack.pop_back();
      } else {
        defect_nodes.push_back(k + 1);
      }
    }
    return {cups, defect_nodes};
  }

  friend auto operator<=>(const HalfDiagram&, const HalfDiagram&) = default;
  friend bool operator==(const HalfDiagram&, const HalfDiagram&) = default;
};

/// Half diagrams on n points with exactly `defects` defects, in lexicographic order.
inline std::vector<HalfDiagram> enumerate_half_diagrams(int n, int defects) {
  std::vector<HalfDiagram> out;
  if (defects < 0 || defects > n || (n - defects) % 2 != 0) return out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int open, int defects_left) {
    int remaining = n - static_cast<int>(cur.size());
    if (remaining == 0) {
      if (open == 0 && defects_left == 0) out.push_back({cur});
      return;
    }
    if (open + defects_left > remaining) return;
    cur.push_back('(');
    rec(open + 1, defects_left);
    cur.pop_back();
    if (open > 0) {
      cur.push_back(')');
      rec(open - 1, defects_left);
      cur.pop_back();
    }
    if (open == 0 && defects_left > 0) {
      cur.push_back('|');
      rec(open, defects_left - 1);
      cur.pop_back();
    }
  };
  rec(0, defects);
  std::sort(out.begin(), out.end());
  return out;
}

/// Glues top half `s` to bottom half `t` joining their defects in order.
inline TLDiagram glue(const HalfDiagram& top, const HalfDiagram& bottom) {
  const int n = static_cast<int>(top.shape.size());
  if (static_cast<int>(bottom.shape.size()) != n || top.defects() != bottom.defects())
    throw std::invalid_argument("glue: incompatible half diagrams");
  auto [top_cups, top_defects] = top.decompose();
  auto [bottom_cups, bottom_defects] = bottom.decompose();
  std::vector<std::pair<int, int>> pairs = top_cups;
  for (const auto& [a, b] : bottom_cups) pairs.emplace_back(a + n, b + n);
  for (std::size_t k = 0; k < top_defects.size(); ++k) pairs.emplace_back(top_defects[k], bottom_defects[k] + n);
  return TLDiagram::from_pairs(n, std::move(pairs));
}

}  // namespace plesken
