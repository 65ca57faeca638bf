#include <random>

#include "doctest.h"

#include "coxaff/graph_io.hpp"
#include "coxaff/reflection.hpp"

using namespace coxaff;

namespace {

CartanMatrix c3tilde() {
  return build_cartan(parse_graph(
      "n=4 field=[-1,1]\n"
      "edge 1 2 p=4 tree\nedge 2 3 p=3 tree\nedge 3 4 p=4 tree\nroot 1\n"));
}
CartanMatrix b3tilde() {
  return build_cartan(parse_graph(
      "n=4 field=[-1,1]\n"
      "edge 1 2 p=3 tree\nedge 1 3 p=3 tree\nedge 1 4 p=4 tree\nroot 1\n"));
}

Word random_word(std::mt19937_64& rng, std::size_t n, int len) {
  Word w(len);
  for (auto& x : w) x = static_cast<int>(rng() % n);
  return w;
}

}  // namespace

TEST_CASE("generator matrices are involutions with trace n-2") {
  CartanMatrix c = c3tilde();
  for (int i = 0; i < 4; ++i) {
    Matrix<FieldElement> s = generator_matrix(c, i);
    CHECK(s * s == Matrix<FieldElement>::identity(4));
    CHECK(det(s) == FieldElement(-1));
    FieldElement tr(0);
    for (int k = 0; k < 4; ++k) tr += s(k, k);
    CHECK(tr == FieldElement(2));  // n - 2
  }
  // s1(a2) = a2 + 2 a1 since c_{12} = -2
  CHECK(generator_matrix(c, 0)(0, 1) == FieldElement(2));
}

TEST_CASE("fixed space bases") {
  auto h = fixed_space(c3tilde());
  REQUIRE(h.size() == 1);
  CHECK(h[0] == std::vector<FieldElement>{FieldElement(1), FieldElement(1), FieldElement(1),
                                          FieldElement(Rational(BigInt(1), BigInt(2)))});
  auto hb = fixed_space(b3tilde());
  FieldElement half{Rational(BigInt(1), BigInt(2))};
  REQUIRE(hb.size() == 1);
  CHECK(hb[0] == std::vector<FieldElement>{FieldElement(1), half, half, half});
  // finite case: empty
  CartanMatrix fin = build_cartan(parse_graph(
      "n=4 field=[-1,1]\nedge 1 2 p=3 tree\nedge 2 3 p=3 tree\nedge 3 4 p=3 tree\nroot 1\n"));
  CHECK(fixed_space(fin).empty());
}

TEST_CASE("kernel vectors are fixed by every generator") {
  for (CartanMatrix c : {c3tilde(), b3tilde()}) {
    auto h = fixed_space(c);
    for (int i = 0; i < 4; ++i) {
      Matrix<FieldElement> s = generator_matrix(c, i);
      for (const auto& b : h) {
        for (int r = 0; r < 4; ++r) {
          FieldElement img(0);
          for (int k = 0; k < 4; ++k) img += s(r, k) * b[k];
          CHECK(img == b[r]);
        }
      }
    }
  }
}

TEST_CASE("adapted basis of the 4,3,4 path") {
  CartanMatrix c = c3tilde();
  AdaptedBasis ab = adapted_basis(c, choose_S1(c));
  FieldElement half{Rational(BigInt(1), BigInt(2))};
  CHECK(ab.rho == [] {
    Matrix<FieldElement> r(1, 3);
    r(0, 0) = FieldElement(1);
    r(0, 1) = FieldElement(1);
    r(0, 2) = FieldElement(Rational(BigInt(1), BigInt(2)));
    return r;
  }());
  CHECK(ab.b_vectors[0] ==
        std::vector<FieldElement>{FieldElement(1), FieldElement(1), FieldElement(1), half});
  CHECK(ab.b_vectors[0] == fixed_space(c)[0]);
}

TEST_CASE("block structure of the generators") {
  CartanMatrix c = c3tilde();
  AdaptedBasis ab = adapted_basis(c, choose_S1(c));
  // S1 generators: A = 0, P = I + T with T a single row of -c entries
  for (std::size_t k = 0; k < 3; ++k) {
    int gen = static_cast<int>(ab.split.s1[k]);
    BlockForm bf = block_decompose(generator_matrix(c, gen), ab);
    CHECK(bf.a.is_zero());
    Matrix<FieldElement> t = bf.p - Matrix<FieldElement>::identity(3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t col = 0; col < 3; ++col) {
        FieldElement want =
            r == k ? -c.entries(gen, ab.split.s1[col]) : FieldElement(0);
        CHECK(t(r, col) == want);
      }
  }
  // S0 generator: single nonzero row in A, and A + A P = 0
  int j0 = static_cast<int>(ab.split.s0[0]);
  BlockForm bj = block_decompose(generator_matrix(c, j0), ab);
  for (std::size_t col = 0; col < 3; ++col)
    CHECK(bj.a(0, col) == -c.entries(j0, ab.split.s1[col]));
  CHECK((bj.a + bj.a * bj.p).is_zero());
  // identity element
  BlockForm bi = block_decompose(Matrix<FieldElement>::identity(4), ab);
  CHECK(bi.a.is_zero());
  CHECK(bi.p == Matrix<FieldElement>::identity(3));
}

TEST_CASE("block reassembly and product rules on random words") {
  std::mt19937_64 rng(77);
  CartanMatrix c = c3tilde();
  AdaptedBasis ab = adapted_basis(c, choose_S1(c));
  for (int t = 0; t < 50; ++t) {
    Word w1 = random_word(rng, 4, 1 + static_cast<int>(rng() % 11));
    Word w2 = random_word(rng, 4, 1 + static_cast<int>(rng() % 11));
    GroupElement g = evaluate_word(c, w1), h = evaluate_word(c, w2);
    BlockForm bg = block_decompose(g, ab), bh = block_decompose(h, ab);
    BlockForm bgh = block_decompose(g * h, ab);
    // determinant sign = word parity
    FieldElement dg = det(g.mat);
    CHECK(dg == (w1.size() % 2 ? FieldElement(-1) : FieldElement(1)));
    // reassembly: T^-1 g T equals [[I, A],[0, P]]
    Matrix<FieldElement> blocks(4, 4);
    blocks(0, 0) = FieldElement(1);
    for (int col = 0; col < 3; ++col) blocks(0, col + 1) = bg.a(0, col);
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) blocks(r + 1, col + 1) = bg.p(r, col);
    CHECK(ab.to_adapted * blocks * ab.from_adapted == g.mat);
    // A(gg') = A(g') + A(g) P(g'), P multiplicative
    CHECK(bgh.a == bh.a + bg.a * bh.p);
    CHECK(bgh.p == bg.p * bh.p);
  }
}

TEST_CASE("quotient orders reproduce the edge labels") {
  CartanMatrix c = c3tilde();
  AdaptedBasis ab = adapted_basis(c, choose_S1(c));
  auto p_of = [&](const Word& w) { return block_decompose(evaluate_word(c, w), ab).p; };
  CHECK(quotient_order(p_of({0, 1})) == 4);
  CHECK(quotient_order(p_of({1, 2})) == 3);
  CHECK(quotient_order(p_of({2, 3})) == 4);
  CHECK(quotient_order(p_of({0, 2})) == 2);  // non-adjacent pair
  CHECK(quotient_order(p_of({})) == 1);
  CHECK(quotient_order(p_of({0, 1}), 3) == std::nullopt);  // bound too small
}

TEST_CASE("lambda coefficients") {
  CartanMatrix c = c3tilde();
  SubsystemSplit sp = choose_S1(c);
  auto lam = lambda_coefficients(c, sp);
  CHECK(lam == std::vector<FieldElement>{FieldElement(-2), FieldElement(-2), FieldElement(-2)});
  CartanMatrix b = b3tilde();
  SubsystemSplit spb = choose_S1(b);
  FieldElement mhalf{Rational(BigInt(-1), BigInt(2))};
  CHECK(lambda_coefficients(b, spb) ==
        std::vector<FieldElement>{mhalf, mhalf, FieldElement(-1)});
  // the defining identity: c_{j0} = sum lambda_i c_i, entrywise
  for (const CartanMatrix& cm : {c, b}) {
    SubsystemSplit s = choose_S1(cm);
    auto l = lambda_coefficients(cm, s);
    auto cj = c_row(cm, s, static_cast<int>(s.s0[0]));
    std::vector<FieldElement> sum(s.n1(), FieldElement(0));
    for (std::size_t i = 0; i < s.n1(); ++i) {
      auto ci = c_row(cm, s, static_cast<int>(s.s1[i]));
      for (std::size_t k = 0; k < s.n1(); ++k) sum[k] += l[i] * ci[k];
    }
    CHECK(sum == cj);
  }
  // needs n0 = 1
  DecoratedGraph fin = parse_graph(
      "n=3 field=[-1,1]\nedge 1 2 p=3 tree\nedge 2 3 p=3 tree\nroot 1\n");
  CartanMatrix cf = build_cartan(fin);
  CHECK_THROWS_AS(lambda_coefficients(cf, choose_S1(cf)), error);
}
