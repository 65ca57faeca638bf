#pragma once

// The representation itself: generator matrices in the natural basis, the
// fixed space H, the adapted basis (b_j ; a_i) in which every group element
// is block upper-triangular [[I, A(g)], [0, P(g)]], and the quotient data.
//
// Basis order: S0 ascending, then S1 ascending.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxaff/cartan.hpp"

namespace coxaff {

using Word = std::vector<int>;  // generator indices, 0-based

struct GroupElement {
  Matrix<FieldElement> mat;
  Word word;  // a witness, not canonical
};

// s_i(a_k) = a_k - c_{ik} a_i: identity with row i replaced by
// (delta_{ik} - c_{ik})_k; an involution of determinant -1, trace n-2.
inline Matrix<FieldElement> generator_matrix(const CartanMatrix& c, int i) {
  const std::size_t n = c.size();
  Matrix<FieldElement> s = Matrix<FieldElement>::identity(n);
  for (std::size_t k = 0; k < n; ++k) s(i, k) -= c.entries(i, k);
  return s;
}

inline GroupElement generator_element(const CartanMatrix& c, int i) {
  return GroupElement{generator_matrix(c, i), {i}};
}

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  GroupElement r{a.mat * b.mat, a.word};
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  return r;
}

// generators are involutions, so the inverse witness is the reversed word
inline GroupElement inverse_element(const GroupElement& g) {
  GroupElement r{inverse(g.mat), Word(g.word.rbegin(), g.word.rend())};
  return r;
}

inline GroupElement evaluate_word(const CartanMatrix& c, const Word& w) {
  GroupElement r{Matrix<FieldElement>::identity(c.size()), {}};
  for (int i : w) {
    if (i < 0 || static_cast<std::size_t>(i) >= c.size()) throw error("word index out of range");
    r.mat = r.mat * generator_matrix(c, i);
  }
  r.word = w;
  return r;
}

// H = common fixed space of all generators = kernel of the Cartan matrix;
// vectors are scaled so the first nonzero coordinate is 1.
inline std::vector<std::vector<FieldElement>> fixed_space(const CartanMatrix& c) {
  return kernel_basis(c.entries);
}

struct AdaptedBasis {
  SubsystemSplit split;
  Matrix<FieldElement> rho;                         // n0 x n1, rows follow split.s0
  std::vector<std::vector<FieldElement>> b_vectors; // coordinates in the natural basis
  Matrix<FieldElement> to_adapted;                  // columns: b_j then a_i
  Matrix<FieldElement> from_adapted;                // its inverse
};

// rho solves Car(G1) rho_j^T = -(c_{i,j})_{i in S1}; then
// b_j = a_j + sum_k rho_j^k a_k spans H.
inline AdaptedBasis adapted_basis(const CartanMatrix& c, const SubsystemSplit& sp) {
  const std::size_t n = c.size(), n0 = sp.n0(), n1 = sp.n1();
  AdaptedBasis ab;
  ab.split = sp;
  Matrix<FieldElement> g1 = principal_block(c, sp.s1);
  Matrix<FieldElement> rhs = c.entries.submatrix(sp.s1, sp.s0);
  Matrix<FieldElement> neg = Matrix<FieldElement>(n1, n0) - rhs;
  Matrix<FieldElement> cols = solve(g1, neg);  // column j holds rho_{s0[j]}
  ab.rho = cols.transpose();
  ab.to_adapted = Matrix<FieldElement>(n, n);
  for (std::size_t j = 0; j < n0; ++j) {
    std::vector<FieldElement> b(n, FieldElement(0));
    b[sp.s0[j]] = FieldElement(1);
    for (std::size_t k = 0; k < n1; ++k) b[sp.s1[k]] = ab.rho(j, k);
    for (std::size_t i = 0; i < n; ++i) ab.to_adapted(i, j) = b[i];
    ab.b_vectors.push_back(std::move(b));
  }
  for (std::size_t k = 0; k < n1; ++k) ab.to_adapted(sp.s1[k], n0 + k) = FieldElement(1);
  ab.from_adapted = inverse(ab.to_adapted);
  if (!schur_complement_vanishes(c, sp))
    throw error("adapted basis: the block condition fails, dim H != n0 for this split");
  return ab;
}

struct BlockForm {
  Matrix<FieldElement> a;  // n0 x n1
  Matrix<FieldElement> p;  // n1 x n1
};

// Conjugate into the adapted basis and split off the blocks. Elements of the
// group fix H pointwise, so the left column must be (I; 0); anything else is
// an internal error.
inline BlockForm block_decompose(const Matrix<FieldElement>& m, const AdaptedBasis& ab) {
  const std::size_t n0 = ab.split.n0(), n1 = ab.split.n1();
  Matrix<FieldElement> t = ab.from_adapted * m * ab.to_adapted;
  BlockForm bf{Matrix<FieldElement>(n0, n1), Matrix<FieldElement>(n1, n1)};
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      if (!(t(i, j) == (i == j ? FieldElement(1) : FieldElement(0))))
        throw error("block_decompose: element does not fix H pointwise");
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      if (!t(n0 + i, j).is_zero())
        throw error("block_decompose: nonzero lower-left block");
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) bf.a(i, j) = t(i, n0 + j);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) bf.p(i, j) = t(n0 + i, n0 + j);
  return bf;
}
inline BlockForm block_decompose(const GroupElement& g, const AdaptedBasis& ab) {
  return block_decompose(g.mat, ab);
}

// T(s) = P(s) - I. For i in S1 this is the single row (-c_{i, s1}); for
// j in S0 it is the outer product rho_j^T (c_{j, s1}).
inline Matrix<FieldElement> t_matrix(const CartanMatrix& c, const AdaptedBasis& ab, int gen) {
  BlockForm bf = block_decompose(generator_matrix(c, gen), ab);
  return bf.p - Matrix<FieldElement>::identity(ab.split.n1());
}

// smallest k <= bound with P^k = I
inline std::optional<int> quotient_order(const Matrix<FieldElement>& p, int bound = 60) {
  Matrix<FieldElement> acc = p;
  Matrix<FieldElement> id = Matrix<FieldElement>::identity(p.rows());
  for (int k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    acc = acc * p;
  }
  return std::nullopt;
}

// c-row of a generator: (-c_{i,k})_{k in S1}
inline std::vector<FieldElement> c_row(const CartanMatrix& c, const SubsystemSplit& sp, int i) {
  std::vector<FieldElement> r;
  r.reserve(sp.n1());
  for (std::size_t k : sp.s1) r.push_back(-c.entries(i, k));
  return r;
}

// n0 = 1 only: coefficients with c_{j0} = sum_{i in S1} lambda_i c_i, solved
// from the row system (c_{j0,k})_k Car(G1)^{-1}.
inline std::vector<FieldElement> lambda_coefficients(const CartanMatrix& c,
                                                     const SubsystemSplit& sp) {
  if (sp.n0() != 1) throw error("lambda coefficients are defined for n0 = 1 splits");
  const std::size_t j0 = sp.s0[0];
  Matrix<FieldElement> row(1, sp.n1());
  for (std::size_t k = 0; k < sp.n1(); ++k) row(0, k) = c.entries(j0, sp.s1[k]);
  Matrix<FieldElement> lam = row * inverse(principal_block(c, sp.s1));
  std::vector<FieldElement> out;
  for (std::size_t k = 0; k < sp.n1(); ++k) out.push_back(lam(0, k));
  return out;
}

}  // namespace coxaff
