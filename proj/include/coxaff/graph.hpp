#pragma once

// Decorated Coxeter graphs: vertices, labelled edges, a rooted spanning tree,
// and parameter bindings. A missing edge means the two generators commute
// (label 2, zero Cartan entries); every written label is >= 3 and finite, so
// all rank-2 subgroups are finite.
//
// Tree edges are oriented away from the root and contribute the Cartan pair
// (-alpha, -1); the remaining ("bold") edges carry a free pair (-l, -m) with
// l*m = alpha.

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "coxaff/field.hpp"

namespace coxaff {

struct GraphEdge {
  int u = 0, v = 0;  // 0-based vertex indices, as written
  int label = 3;
  FieldElement alpha;
  bool in_tree = false;
  std::optional<FieldElement> l, m;  // bold edges only: c_uv = -l, c_vu = -m

  friend bool operator==(const GraphEdge& a, const GraphEdge& b) {
    return a.u == b.u && a.v == b.v && a.label == b.label && a.alpha == b.alpha &&
           a.in_tree == b.in_tree && a.l == b.l && a.m == b.m;
  }
};

struct DecoratedGraph {
  int n = 0;
  int root = 0;
  std::vector<std::string> names;  // size n; defaults "s1".."sn"
  std::vector<GraphEdge> edges;
  FieldRef field;

  bool has_edge(int a, int b) const {
    for (const auto& e : edges)
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
    return false;
  }
  const GraphEdge* find_edge(int a, int b) const {
    for (const auto& e : edges)
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return &e;
    return nullptr;
  }
  int degree(int a) const {
    int d = 0;
    for (const auto& e : edges) d += (e.u == a || e.v == a);
    return d;
  }

  // parent[v] in the tree rooted at `root`; parent[root] = -1.
  // Throws unless the tree edges form a spanning tree.
  std::vector<int> tree_parents() const {
    std::vector<std::vector<int>> adj(n);
    int tree_count = 0;
    for (const auto& e : edges)
      if (e.in_tree) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
        ++tree_count;
      }
    if (tree_count != n - 1) throw error("tree edges do not form a spanning tree (need n-1)");
    std::vector<int> parent(n, -2);
    std::queue<int> q;
    parent[root] = -1;
    q.push(root);
    int seen = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      ++seen;
      for (int y : adj[x])
        if (parent[y] == -2) {
          parent[y] = x;
          q.push(y);
        }
    }
    if (seen != n) throw error("tree edges do not span the graph (cycle or disconnection)");
    return parent;
  }

  // product of edge alphas on the tree path from the root to v
  FieldElement tree_path_product(int v) const {
    std::vector<int> parent = tree_parents();
    FieldElement prod(1);
    while (parent[v] >= 0) {
      const GraphEdge* e = find_edge(v, parent[v]);
      prod *= e->alpha;
      v = parent[v];
    }
    return prod;
  }

  void validate() const {
    if (n < 1) throw error("graph needs at least one vertex");
    if (!field) throw error("graph has no session field");
    if (root < 0 || root >= n) throw error("root vertex out of range");
    for (const auto& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw error("edge endpoint out of range");
      if (e.u == e.v) throw error("self-loops are not allowed");
      if (e.label < 3) throw error("edge labels must be >= 3 (label 2 means no edge)");
      if (e.alpha.is_zero()) throw error("edge parameter alpha must be nonzero");
      if (e.label <= 6 && !is_edge_root(e.label, e.alpha))
        throw error("alpha is not a root of the label-" + std::to_string(e.label) +
                    " parameter polynomial");
      if (e.in_tree) {
        if (e.l || e.m) throw error("tree edges do not carry l/m parameters");
      } else {
        if (!e.l || !e.m) throw error("non-tree (bold) edges need both l and m");
        if (!(*e.l * *e.m == e.alpha)) throw error("bold edge violates l*m = alpha");
        if (e.l->is_zero()) throw error("bold edge parameter l must be nonzero");
      }
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const auto &a = edges[i], &b = edges[j];
        if ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u))
          throw error("duplicate edge");
      }
    // connectivity over all edges
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<bool> vis(n, false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    int cnt = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      ++cnt;
      for (int y : adj[x])
        if (!vis[y]) {
          vis[y] = true;
          q.push(y);
        }
    }
    if (cnt != n) throw error("graph is not connected");
    (void)tree_parents();
  }

  friend bool operator==(const DecoratedGraph& a, const DecoratedGraph& b) {
    return a.n == b.n && a.root == b.root && a.names == b.names && a.edges == b.edges &&
           a.field && b.field && *a.field == *b.field;
  }
};

// Convenience builder: labelled edge list, first-BFS spanning tree from the
// root unless edges are pre-marked. Bold parameters must then be bound by the
// caller before validation.
inline DecoratedGraph make_graph(int n, int root, std::vector<GraphEdge> edges, FieldRef field) {
  DecoratedGraph g;
  g.n = n;
  g.root = root;
  g.field = std::move(field);
  g.names.resize(n);
  for (int i = 0; i < n; ++i) g.names[i] = "s" + std::to_string(i + 1);
  bool any_tree = false;
  for (const auto& e : edges) any_tree |= e.in_tree;
  if (!any_tree && !edges.empty()) {
    // first BFS tree from the root
    std::vector<bool> vis(n, false);
    vis[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto& e : edges) {
        int other = e.u == x ? e.v : (e.v == x ? e.u : -1);
        if (other >= 0 && !vis[other]) {
          vis[other] = true;
          e.in_tree = true;
          q.push(other);
        }
      }
    }
  }
  g.edges = std::move(edges);
  return g;
}

// ---- the six shapes of connected graphs on four vertices ------------------

enum class Family {
  PathI,
  StarII,
  CircuitIII,  // one circuit which is not a square: triangle plus a pendant
  SquareIV,
  TwoCircuitsV,  // complete graph minus one edge
  CompleteVI,
  Unclassified
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::PathI: return "I path";
    case Family::StarII: return "II star";
    case Family::CircuitIII: return "III one non-square circuit";
    case Family::SquareIV: return "IV square";
    case Family::TwoCircuitsV: return "V two circuits";
    case Family::CompleteVI: return "VI complete";
    default: return "unclassified";
  }
}

inline Family classify_family(const DecoratedGraph& g) {
  if (g.n != 4) return Family::Unclassified;
  const std::size_t e = g.edges.size();
  auto has_triangle = [&g] {
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int c = b + 1; c < 4; ++c)
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return true;
    return false;
  };
  switch (e) {
    case 3: {
      for (int v = 0; v < 4; ++v)
        if (g.degree(v) == 3) return Family::StarII;
      return Family::PathI;
    }
    case 4: return has_triangle() ? Family::CircuitIII : Family::SquareIV;
    case 5: return Family::TwoCircuitsV;
    case 6: return Family::CompleteVI;
    default: return Family::Unclassified;
  }
}

}  // namespace coxaff
