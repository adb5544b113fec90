#pragma once

// Dense symmetric matrices and their full eigendecomposition, desk scale (n <= 4000).

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace graphsdp {

// Symmetric n x n matrix; the upper triangle is authoritative and the lower
// triangle always mirrors it (enforced by the constructors).
struct SymDense {
  Eigen::MatrixXd m;

  SymDense() = default;
  explicit SymDense(Eigen::MatrixXd mat);  // symmetrizes from the upper triangle

  static SymDense zero(int n) { return SymDense(Eigen::MatrixXd::Zero(n, n)); }

  int n() const { return static_cast<int>(m.rows()); }
};

// Full spectrum, eigenvalues descending, eigenvector columns aligned.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

// Dense symmetric eigendecomposition (n <= 4000). Satisfies, with tol = 1e-8:
// ||M v_i - xi_i v_i|| <= tol*||M||_F and <v_i, v_j> = delta_ij within tol.
Spectrum eig_sym(const SymDense& M);

// Binary dump: n as u64 little-endian, then the upper triangle (i <= j,
// row-major) as f64. Little-endian hosts only.
void save_symdense(const std::string& path, const SymDense& M);
SymDense load_symdense(const std::string& path);

// JSON spectrum export: {"eigenvalues": [...]}.
void save_spectrum_json(const std::string& path, const Spectrum& s);

}  // namespace graphsdp
