#pragma once

#include <cmath>
#include <vector>

#include "treext/errors.hpp"
#include "treext/tree.hpp"

namespace treext {

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, each accurate
/// to about 1e-10 absolute.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> m,
                                              int max_sweeps = 100) {
  int n = static_cast<int>(m.size());
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-24) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = m[i][i];
      return eig;
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
  }
  throw ConvergenceFailure("jacobi iteration cap exceeded");
}

inline std::vector<std::vector<double>> adjacency_matrix(const Tree& t) {
  std::vector<std::vector<double>> m(t.size(), std::vector<double>(t.size(), 0.0));
  for (auto [u, v] : t.edges()) m[u][v] = m[v][u] = 1.0;
  return m;
}

/// Graph energy: sum of the absolute adjacency eigenvalues.
inline double energy(const Tree& t) {
  auto m = adjacency_matrix(t);
  double total = 0;
  for (double lambda : jacobi_eigenvalues(std::move(m))) total += std::abs(lambda);
  return total;
}

namespace detail {

/// sqrt with eigenvalues below the solver tolerance treated as exact zeros,
/// so the zero Laplacian eigenvalue cannot leak sqrt(noise) into the sum.
inline double sqrt_clamped(double lambda) {
  return lambda <= 1e-10 ? 0.0 : std::sqrt(lambda);
}

}  // namespace detail

/// Laplacian-energy-like invariant: sum of square roots of the eigenvalues of
/// L = D - A.
inline double lel(const Tree& t) {
  auto m = adjacency_matrix(t);
  for (int v = 0; v < t.size(); ++v) {
    m[v][v] = t.degree(v);
    for (int w : t.neighbors(v)) m[v][w] = -1.0;
  }
  double total = 0;
  for (double lambda : jacobi_eigenvalues(std::move(m))) total += detail::sqrt_clamped(lambda);
  return total;
}

/// Incidence energy: sum of the singular values of the vertex-edge incidence
/// matrix, i.e. square roots of the eigenvalues of the signless Laplacian
/// D + A.  Equal to lel on trees; the equality is a cross-check.
inline double incidence_energy(const Tree& t) {
  auto m = adjacency_matrix(t);
  for (int v = 0; v < t.size(); ++v) m[v][v] = t.degree(v);
  double total = 0;
  for (double lambda : jacobi_eigenvalues(std::move(m))) total += detail::sqrt_clamped(lambda);
  return total;
}

}  // namespace treext
