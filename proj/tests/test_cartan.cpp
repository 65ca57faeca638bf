#include <random>

#include "doctest.h"

#include "coxaff/cartan.hpp"
#include "coxaff/graph_io.hpp"

using namespace coxaff;

namespace {

DecoratedGraph c3tilde() {
  return parse_graph(
      "n=4 field=[-1,1]\n"
      "edge 1 2 p=4 tree\nedge 2 3 p=3 tree\nedge 3 4 p=4 tree\nroot 1\n");
}

// square with the n0=2 parameters: all labels 4, l=-2, m=-1
DecoratedGraph square_n02() {
  return parse_graph(
      "n=4 field=[-1,1]\n"
      "edge 1 2 p=4 tree\nedge 1 4 p=4 tree\nedge 4 3 p=4 tree\n"
      "edge 2 3 p=4 alpha=2 l=-2 m=-1\nroot 1\n");
}

FieldElement rnd_q(std::mt19937_64& rng) {
  long long n = static_cast<long long>(rng() % 17) + 1;
  long long d = 1 + static_cast<long long>(rng() % 4);
  FieldElement x{Rational(BigInt(n), BigInt(d))};
  return rng() % 2 ? x : -x;
}

// labelled graph with arbitrary rational parameters (labels picked outside
// the built-in table so alpha is free)
GraphEdge free_edge(int u, int v, FieldElement alpha, bool tree) {
  GraphEdge e;
  e.u = u;
  e.v = v;
  e.label = 7;
  e.alpha = std::move(alpha);
  e.in_tree = tree;
  return e;
}

}  // namespace

TEST_CASE("Cartan matrix of the 4,3,4 path") {
  CartanMatrix c = build_cartan(c3tilde());
  long long want[4][4] = {{2, -2, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {0, 0, -1, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c.entries(i, j) == FieldElement(want[i][j]));
  CHECK(discriminant(c).is_zero());
}

TEST_CASE("single vertex and bold entries") {
  DecoratedGraph one = parse_graph("n=1 field=[-1,1]\nroot 1\n");
  CartanMatrix c1 = build_cartan(one);
  CHECK(c1.entries(0, 0) == FieldElement(2));
  CHECK(discriminant(c1) == FieldElement(2));

  DecoratedGraph g3 = parse_graph(
      "n=4 field=[-1,1]\n"
      "edge 1 2 p=3 tree\nedge 1 3 p=3 tree\nedge 1 4 p=6 tree\n"
      "edge 2 3 p=4 alpha=2 l=-1 m=-2\nroot 1\n");
  CartanMatrix c = build_cartan(g3);
  CHECK(c.entries(1, 2) == FieldElement(1));   // -l
  CHECK(c.entries(2, 1) == FieldElement(2));   // -m
  CHECK(c.entries(0, 3) == FieldElement(-3));  // tree edge, parent side
  CHECK(c.entries(3, 0) == FieldElement(-1));
}

TEST_CASE("closed-form discriminants match the determinant") {
  std::mt19937_64 rng(101);
  FieldRef K = make_rational_field();
  for (int trial = 0; trial < 25; ++trial) {
    FieldElement a1 = rnd_q(rng), a2 = rnd_q(rng), a3 = rnd_q(rng), a4 = rnd_q(rng);
    FieldElement l1 = rnd_q(rng), l2 = rnd_q(rng), l4 = rnd_q(rng), l5 = rnd_q(rng),
                 l6 = rnd_q(rng);
    FieldElement m1 = rnd_q(rng), m2 = rnd_q(rng), m4 = rnd_q(rng), m5 = rnd_q(rng),
                 m6 = rnd_q(rng);

    {  // I: path
      DecoratedGraph g = make_graph(
          4, 0, {free_edge(0, 1, a1, true), free_edge(1, 2, a2, true), free_edge(2, 3, a3, true)},
          K);
      CHECK(discriminant(build_cartan(g)) == delta_family_I(a1, a2, a3));
      CHECK(family_discriminant(g) == delta_family_I(a1, a2, a3));
    }
    {  // II: star
      DecoratedGraph g = make_graph(
          4, 0, {free_edge(0, 1, a1, true), free_edge(0, 2, a2, true), free_edge(0, 3, a3, true)},
          K);
      CHECK(discriminant(build_cartan(g)) == delta_family_II(a1, a2, a3));
      CHECK(family_discriminant(g) == delta_family_II(a1, a2, a3));
    }
    {  // III: triangle plus pendant
      GraphEdge bold = free_edge(1, 2, l1 * m1, false);
      bold.l = l1;
      bold.m = m1;
      DecoratedGraph g =
          make_graph(4, 0,
                     {free_edge(0, 1, a1, true), free_edge(0, 2, a2, true),
                      free_edge(0, 3, a4, true), bold},
                     K);
      CHECK(discriminant(build_cartan(g)) == delta_family_III(a1, a2, a4, l1, m1));
      CHECK(family_discriminant(g) == delta_family_III(a1, a2, a4, l1, m1));
    }
    {  // IV: square, tree 2<-1->4->3, bold 2-3
      GraphEdge bold = free_edge(1, 2, l1 * m1, false);
      bold.l = l1;
      bold.m = m1;
      DecoratedGraph g =
          make_graph(4, 0,
                     {free_edge(0, 1, a1, true), free_edge(0, 3, a4, true),
                      free_edge(3, 2, a3, true), bold},
                     K);
      CHECK(discriminant(build_cartan(g)) == delta_family_IV(a1, a3, a4, l1, m1));
      CHECK(family_discriminant(g) == delta_family_IV(a1, a3, a4, l1, m1));
    }
    {  // V: star plus bolds 2-3 and 3-4
      GraphEdge b1 = free_edge(1, 2, l1 * m1, false);
      b1.l = l1;
      b1.m = m1;
      GraphEdge b2 = free_edge(2, 3, l2 * m2, false);
      b2.l = l2;
      b2.m = m2;
      DecoratedGraph g =
          make_graph(4, 0,
                     {free_edge(0, 1, a1, true), free_edge(0, 2, a2, true),
                      free_edge(0, 3, a3, true), b1, b2},
                     K);
      CHECK(discriminant(build_cartan(g)) == delta_family_V(a1, a2, a3, l1, m1, l2, m2));
      CHECK(family_discriminant(g) == delta_family_V(a1, a2, a3, l1, m1, l2, m2));
    }
    {  // VI: complete
      GraphEdge b4 = free_edge(1, 2, l4 * m4, false);
      b4.l = l4;
      b4.m = m4;
      GraphEdge b5 = free_edge(2, 3, l5 * m5, false);
      b5.l = l5;
      b5.m = m5;
      GraphEdge b6 = free_edge(3, 1, l6 * m6, false);
      b6.l = l6;
      b6.m = m6;
      DecoratedGraph g =
          make_graph(4, 0,
                     {free_edge(0, 1, a1, true), free_edge(0, 2, a2, true),
                      free_edge(0, 3, a3, true), b4, b5, b6},
                     K);
      CHECK(discriminant(build_cartan(g)) ==
            delta_family_VI(a1, a2, a3, l4, m4, l5, m5, l6, m6));
      CHECK(family_discriminant(g) == delta_family_VI(a1, a2, a3, l4, m4, l5, m5, l6, m6));
    }
    {  // n=5 path
      DecoratedGraph g = make_graph(5, 0,
                                    {free_edge(0, 1, a1, true), free_edge(1, 2, a2, true),
                                     free_edge(2, 3, a3, true), free_edge(3, 4, a4, true)},
                                    K);
      CHECK(discriminant(build_cartan(g)) == delta_path5(a1, a2, a3, a4));
      CHECK(family_discriminant(g) == delta_path5(a1, a2, a3, a4));
    }
  }
}

TEST_CASE("known degenerate parameter points") {
  // star: alphas summing to 4
  CHECK(delta_family_II(FieldElement(1), FieldElement(1), FieldElement(2)).is_zero());
  // path5 at the three catalog points
  CHECK(delta_path5(FieldElement(2), FieldElement(1), FieldElement(1), FieldElement(2))
            .is_zero());
  FieldRef K = make_field(MinimalPolynomial::from_ints({1, -3, 1}));
  FieldElement tau = FieldElement::theta(*K);
  CHECK(delta_path5(FieldElement(1), tau, FieldElement(3) - tau, FieldElement(1)).is_zero());
  CHECK(delta_path5(tau, FieldElement(1), FieldElement(1), FieldElement(3) - tau).is_zero());
}

TEST_CASE("choose_S1 picks the first valid complement") {
  CartanMatrix c = build_cartan(c3tilde());
  SubsystemSplit sp = choose_S1(c);
  CHECK(sp.s0 == std::vector<std::size_t>{0});
  CHECK(sp.s1 == std::vector<std::size_t>{1, 2, 3});
  CHECK(schur_complement_vanishes(c, sp));

  // invertible Cartan: S1 is everything
  DecoratedGraph fin = parse_graph(
      "n=4 field=[-1,1]\nedge 1 2 p=3 tree\nedge 2 3 p=3 tree\nedge 3 4 p=3 tree\nroot 1\n");
  CartanMatrix cf = build_cartan(fin);
  CHECK(discriminant(cf) == FieldElement(5));
  SubsystemSplit spf = choose_S1(cf);
  CHECK(spf.n0() == 0);
  CHECK(schur_complement_vanishes(cf, spf));  // vacuous

  // the square with n0=2: rank drops to 2
  CartanMatrix cs = build_cartan(square_n02());
  SubsystemSplit sps = choose_S1(cs);
  CHECK(sps.n0() == 2);
  // any invertible complement is acceptable; the catalog pins {1,3} explicitly
  SubsystemSplit pinned = split_from_s0(cs, {0, 2});
  CHECK(pinned.s1 == std::vector<std::size_t>{1, 3});
  CHECK(schur_complement_vanishes(cs, pinned));
  CHECK(schur_complement_vanishes(cs, sps));
}

TEST_CASE("explicit splits are validated") {
  CartanMatrix c = build_cartan(c3tilde());
  // anchoring at the other end also works: {0,1,2} is an invertible block
  SubsystemSplit sp = split_from_s0(c, {3});
  CHECK(schur_complement_vanishes(c, sp));
  // an empty S0 makes S1 the whole (singular) matrix
  CHECK_THROWS_WITH_AS(split_from_s0(c, {}), doctest::Contains("singular"), error);
}

TEST_CASE("principal submatrices above the rank are singular") {
  CartanMatrix c = build_cartan(c3tilde());
  CHECK(principal_submatrix_violations(c).empty());
  CartanMatrix cs = build_cartan(square_n02());
  CHECK(principal_submatrix_violations(cs).empty());
  DecoratedGraph fin = parse_graph(
      "n=3 field=[-1,1]\nedge 1 2 p=3 tree\nedge 2 3 p=3 tree\nroot 1\n");
  CHECK(principal_submatrix_violations(build_cartan(fin)).empty());  // vacuous
}

TEST_CASE("n0 > n1 is a hard error") {
  // custom labels with alpha = 4 drive the rank down to 1 on three vertices
  GraphEdge e1 = free_edge(0, 1, FieldElement(4), true);
  GraphEdge e2 = free_edge(0, 2, FieldElement(4), true);
  GraphEdge b = free_edge(1, 2, FieldElement(4), false);
  b.l = FieldElement(-2);
  b.m = FieldElement(-2);
  DecoratedGraph g = make_graph(3, 0, {e1, e2, b}, make_rational_field());
  CartanMatrix c = build_cartan(g);
  CHECK(rank(c.entries) == 1);
  CHECK_THROWS_WITH_AS(choose_S1(c), doctest::Contains("n0 > n1"), error);
}

TEST_CASE("split indices are range-checked") {
  CartanMatrix c = build_cartan(c3tilde());
  CHECK_THROWS_WITH_AS(split_from_s0(c, {7}), doctest::Contains("out of range"), error);
  CHECK_THROWS_WITH_AS(split_from_s0(c, {0, 0}), doctest::Contains("duplicate"), error);
}
