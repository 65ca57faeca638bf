#pragma once

// Cartan matrices of decorated graphs and the rank bookkeeping around them:
// discriminant, closed-form discriminants per four-vertex family, the choice
// of an invertible principal block S1, and the block-compatibility condition
// that characterizes dim H = n0.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxaff/graph.hpp"
#include "coxaff/matrix.hpp"

namespace coxaff {

struct CartanMatrix {
  Matrix<FieldElement> entries;
  DecoratedGraph graph;  // provenance; also keeps the field context alive

  std::size_t size() const { return entries.rows(); }
};

// Row convention: s_i(a_k) = a_k - c_{ik} a_i. Tree edges are oriented away
// from the root: the parent side gets -alpha, the child side -1. Bold edges
// carry (-l, -m) in the orientation they were written.
inline CartanMatrix build_cartan(const DecoratedGraph& g) {
  g.validate();
  const std::size_t n = static_cast<std::size_t>(g.n);
  Matrix<FieldElement> c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = FieldElement(2);
  std::vector<int> parent = g.tree_parents();
  for (const auto& e : g.edges) {
    if (e.in_tree) {
      int par = parent[e.v] == e.u ? e.u : e.v;
      int chi = par == e.u ? e.v : e.u;
      c(par, chi) = -e.alpha;
      c(chi, par) = FieldElement(-1);
    } else {
      c(e.u, e.v) = -*e.l;
      c(e.v, e.u) = -*e.m;
    }
  }
  return CartanMatrix{std::move(c), g};
}

inline FieldElement discriminant(const CartanMatrix& c) { return det(c.entries); }

// ---- closed-form discriminants, canonical vertex numbering ----------------

inline FieldElement delta_family_I(const FieldElement& a1, const FieldElement& a2,
                                   const FieldElement& a3) {
  return FieldElement(16) - FieldElement(4) * (a1 + a2 + a3) + a1 * a3;
}
inline FieldElement delta_family_II(const FieldElement& a1, const FieldElement& a2,
                                    const FieldElement& a3) {
  return FieldElement(4) * (FieldElement(4) - a1 - a2 - a3);
}
inline FieldElement delta_family_III(const FieldElement& a1, const FieldElement& a2,
                                     const FieldElement& a4, const FieldElement& l,
                                     const FieldElement& m) {
  FieldElement a3 = l * m;
  return FieldElement(4) * (FieldElement(4) - a1 - a2 - a3 - a4) + a3 * a4 -
         FieldElement(2) * (a1 * l + a2 * m);
}
inline FieldElement delta_family_IV(const FieldElement& a1, const FieldElement& a3,
                                    const FieldElement& a4, const FieldElement& l,
                                    const FieldElement& m) {
  FieldElement a2 = l * m;
  return FieldElement(4) * (FieldElement(4) - a1 - a2 - a3 - a4) + a1 * a3 + a2 * a4 -
         (a1 * l + a3 * a4 * m);
}
inline FieldElement delta_family_V(const FieldElement& a1, const FieldElement& a2,
                                   const FieldElement& a3, const FieldElement& l1,
                                   const FieldElement& m1, const FieldElement& l2,
                                   const FieldElement& m2) {
  FieldElement a4 = l1 * m1, a5 = l2 * m2;
  return FieldElement(4) * (FieldElement(4) - a1 - a2 - a3 - a4 - a5) + a1 * a5 + a3 * a4 -
         FieldElement(2) * (a1 * l1 + a2 * l2 + a2 * m1 + a3 * m2) -
         (a1 * l1 * l2 + a3 * m1 * m2);
}
inline FieldElement delta_family_VI(const FieldElement& a1, const FieldElement& a2,
                                    const FieldElement& a3, const FieldElement& l4,
                                    const FieldElement& m4, const FieldElement& l5,
                                    const FieldElement& m5, const FieldElement& l6,
                                    const FieldElement& m6) {
  FieldElement a4 = l4 * m4, a5 = l5 * m5, a6 = l6 * m6;
  // the leading sum runs over all six edge parameters
  return FieldElement(4) * (FieldElement(4) - a1 - a2 - a3 - a4 - a5 - a6) +
         (a1 * a5 + a3 * a4 + a2 * a6) - FieldElement(2) * (l4 * l5 * l6 + m4 * m5 * m6) -
         a1 * (FieldElement(2) * l4 + FieldElement(2) * m6 + l4 * l5 + m5 * m6) -
         a2 * (FieldElement(2) * l5 + FieldElement(2) * m4 + l5 * l6 + m6 * m4) -
         a3 * (FieldElement(2) * l6 + FieldElement(2) * m5 + l6 * l4 + m4 * m5);
}
inline FieldElement delta_path5(const FieldElement& a1, const FieldElement& a2,
                                const FieldElement& a3, const FieldElement& a4) {
  return FieldElement(2) *
         ((FieldElement(4) - a1) * (FieldElement(4) - a4) - a3 * (FieldElement(4) - a1) -
          a2 * (FieldElement(4) - a4));
}

namespace detail {

// (l, m) of a bold edge read so that c_{uv} = -l
inline std::pair<FieldElement, FieldElement> bold_pair(const GraphEdge& e, int u) {
  return e.u == u ? std::pair{*e.l, *e.m} : std::pair{*e.m, *e.l};
}

inline const GraphEdge& need_edge(const DecoratedGraph& g, int u, int v, bool tree) {
  const GraphEdge* e = g.find_edge(u, v);
  if (!e || e->in_tree != tree)
    throw error("graph is not in the canonical numbering of its family");
  return *e;
}

}  // namespace detail

// Closed-form discriminant for a graph in the canonical numbering of its
// family (the numbering used by the per-family displays); throws otherwise.
inline FieldElement family_discriminant(const DecoratedGraph& g) {
  using detail::bold_pair;
  using detail::need_edge;
  if (g.n == 5) {
    for (int i = 0; i + 1 < 5; ++i) need_edge(g, i, i + 1, true);
    if (g.edges.size() != 4) throw error("n=5 closed form covers only the path");
    return delta_path5(need_edge(g, 0, 1, true).alpha, need_edge(g, 1, 2, true).alpha,
                       need_edge(g, 2, 3, true).alpha, need_edge(g, 3, 4, true).alpha);
  }
  switch (classify_family(g)) {
    case Family::PathI:
      return delta_family_I(need_edge(g, 0, 1, true).alpha, need_edge(g, 1, 2, true).alpha,
                            need_edge(g, 2, 3, true).alpha);
    case Family::StarII:
      return delta_family_II(need_edge(g, 0, 1, true).alpha, need_edge(g, 0, 2, true).alpha,
                             need_edge(g, 0, 3, true).alpha);
    case Family::CircuitIII: {
      auto [l, m] = bold_pair(need_edge(g, 1, 2, false), 1);
      return delta_family_III(need_edge(g, 0, 1, true).alpha, need_edge(g, 0, 2, true).alpha,
                              need_edge(g, 0, 3, true).alpha, l, m);
    }
    case Family::SquareIV: {
      auto [l, m] = bold_pair(need_edge(g, 1, 2, false), 1);
      return delta_family_IV(need_edge(g, 0, 1, true).alpha, need_edge(g, 2, 3, true).alpha,
                             need_edge(g, 0, 3, true).alpha, l, m);
    }
    case Family::TwoCircuitsV: {
      auto [l1, m1] = bold_pair(need_edge(g, 1, 2, false), 1);
      auto [l2, m2] = bold_pair(need_edge(g, 2, 3, false), 2);
      return delta_family_V(need_edge(g, 0, 1, true).alpha, need_edge(g, 0, 2, true).alpha,
                            need_edge(g, 0, 3, true).alpha, l1, m1, l2, m2);
    }
    case Family::CompleteVI: {
      auto [l4, m4] = bold_pair(need_edge(g, 1, 2, false), 1);
      auto [l5, m5] = bold_pair(need_edge(g, 2, 3, false), 2);
      auto [l6, m6] = bold_pair(need_edge(g, 3, 1, false), 3);
      return delta_family_VI(need_edge(g, 0, 1, true).alpha, need_edge(g, 0, 2, true).alpha,
                             need_edge(g, 0, 3, true).alpha, l4, m4, l5, m5, l6, m6);
    }
    default: throw error("no closed-form discriminant for this graph");
  }
}

// ---- the S0 | S1 split -----------------------------------------------------

struct SubsystemSplit {
  std::vector<std::size_t> s0, s1;  // 0-based, ascending

  std::size_t n0() const { return s0.size(); }
  std::size_t n1() const { return s1.size(); }
};

inline Matrix<FieldElement> principal_block(const CartanMatrix& c,
                                            const std::vector<std::size_t>& idx) {
  return c.entries.submatrix(idx, idx);
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline SubsystemSplit split_from_s0(const CartanMatrix& c, std::vector<std::size_t> s0) {
  const std::size_t n = c.size();
  std::vector<bool> in0(n, false);
  for (std::size_t i : s0) {
    if (i >= n) throw error("split: S0 index out of range");
    if (in0[i]) throw error("split: duplicate S0 index");
    in0[i] = true;
  }
  SubsystemSplit sp;
  sp.s0 = std::move(s0);
  for (std::size_t i = 0; i < n; ++i)
    if (!in0[i]) sp.s1.push_back(i);
  if (det(principal_block(c, sp.s1)).is_zero())
    throw error("requested split has a singular S1 block");
  return sp;
}

// n1 = rank Car(G); S0 is the lexicographically first complement whose S1
// block is invertible. n0 <= n1 is a theorem for reflection representations;
// inputs violating it are rejected.
inline SubsystemSplit choose_S1(const CartanMatrix& c) {
  const std::size_t n = c.size();
  const std::size_t n1 = rank(c.entries);
  const std::size_t n0 = n - n1;
  if (n0 > n1)
    throw error("n0 > n1: the Cartan matrix does not come from a reflection representation");
  if (n0 == 0) {
    SubsystemSplit sp;
    for (std::size_t i = 0; i < n; ++i) sp.s1.push_back(i);
    return sp;
  }
  std::vector<std::size_t> s0(n0);
  for (std::size_t i = 0; i < n0; ++i) s0[i] = i;
  do {
    try {
      return split_from_s0(c, s0);
    } catch (const error&) {
    }
  } while (detail::next_combination(s0, n));
  throw error("no invertible principal block of rank size exists");
}

// C_{S0,S1} Car(G1)^{-1} C_{S1,S0} == Car(G0), the exact condition for
// dim H = n0.
inline bool schur_complement_vanishes(const CartanMatrix& c, const SubsystemSplit& sp) {
  Matrix<FieldElement> c01 = c.entries.submatrix(sp.s0, sp.s1);
  Matrix<FieldElement> c10 = c.entries.submatrix(sp.s1, sp.s0);
  Matrix<FieldElement> g1 = principal_block(c, sp.s1);
  Matrix<FieldElement> g0 = principal_block(c, sp.s0);
  return c01 * inverse(g1) * c10 == g0;
}

// Every principal submatrix larger than n1 x n1 must be singular; returns the
// index sets that are not (expected empty).
inline std::vector<std::vector<std::size_t>> principal_submatrix_violations(
    const CartanMatrix& c) {
  const std::size_t n = c.size();
  const std::size_t n1 = rank(c.entries);
  std::vector<std::vector<std::size_t>> bad;
  for (std::size_t k = n1 + 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      if (!det(c.entries.submatrix(idx, idx)).is_zero()) bad.push_back(idx);
    } while (detail::next_combination(idx, n));
  }
  return bad;
}

}  // namespace coxaff
