#pragma once

// G-invariant symmetric bilinear forms: solve the linear system
// { Phi symmetric, S^T Phi S = Phi for every generator } exactly over K.
// On trees a nonzero solution always exists and is unique up to scale; on
// graphs with circuits existence is equivalent to one product constraint per
// bold edge.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxaff/cartan.hpp"
#include "coxaff/reflection.hpp"

namespace coxaff {

struct FormSolution {
  enum class Status { None, Unique, Ambiguous };
  Status status = Status::None;
  Matrix<FieldElement> phi;                  // normalized solution when not None
  std::vector<Matrix<FieldElement>> basis;   // full basis when Ambiguous
  bool normalized = false;                   // phi(1,1) == 2 scaling applied
};

inline FormSolution solve_invariant_form(const CartanMatrix& c) {
  const std::size_t n = c.size();
  const std::size_t unknowns = n * (n + 1) / 2;
  auto index = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n + j - i * (i + 1) / 2;
  };
  // rows: entries of S^T Phi S - Phi per generator
  Matrix<FieldElement> sys(n * n * n, unknowns);
  std::size_t row = 0;
  for (std::size_t g = 0; g < n; ++g) {
    Matrix<FieldElement> s = generator_matrix(c, static_cast<int>(g));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        // sum_{i,j} s(i,a) phi_{ij} s(j,b) - phi_{ab}
        for (std::size_t i = 0; i < n; ++i) {
          if (s(i, a).is_zero()) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (s(j, b).is_zero()) continue;
            sys(row, index(i, j)) += s(i, a) * s(j, b);
          }
        }
        sys(row, index(a, b)) -= FieldElement(1);
        ++row;
      }
  }
  std::vector<std::vector<FieldElement>> ker = kernel_basis(sys);
  FormSolution out;
  auto unpack = [&](const std::vector<FieldElement>& v) {
    Matrix<FieldElement> phi(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) phi(i, j) = v[index(i, j)];
    return phi;
  };
  if (ker.empty()) return out;
  if (ker.size() == 1) {
    out.status = FormSolution::Status::Unique;
    out.phi = unpack(ker[0]);
    if (!out.phi(0, 0).is_zero()) {
      out.phi = (FieldElement(2) / out.phi(0, 0)) * out.phi;
      out.normalized = true;
    }
    return out;
  }
  out.status = FormSolution::Status::Ambiguous;
  for (const auto& v : ker) out.basis.push_back(unpack(v));
  out.phi = out.basis.front();
  return out;
}

// One constraint per bold edge (u, v) with pair (l, m):
//   l * pi(u) == m * pi(v)
// where pi(x) is the product of tree-edge alphas from the root to x. On the
// canonical four-vertex families these are exactly the classical conditions
// (III: l a1 = m a2; IV: l a1 = m a3 a4; V and VI: one relation per circuit).
struct CircuitConstraint {
  FieldElement lhs, rhs;
  std::string description;
  bool holds() const { return lhs == rhs; }
};

inline std::vector<CircuitConstraint> circuit_constraints(const DecoratedGraph& g) {
  std::vector<CircuitConstraint> out;
  for (const auto& e : g.edges) {
    if (e.in_tree) continue;
    FieldElement pu = g.tree_path_product(e.u), pv = g.tree_path_product(e.v);
    CircuitConstraint cc{*e.l * pu, *e.m * pv,
                         "l*pi(" + g.names[e.u] + ") = m*pi(" + g.names[e.v] + ")"};
    out.push_back(std::move(cc));
  }
  return out;
}

// kernel of phi; when Delta(G) = 0 and the form is nonzero it contains H
inline std::vector<std::vector<FieldElement>> form_radical(const Matrix<FieldElement>& phi) {
  return kernel_basis(phi);
}

}  // namespace coxaff
