#pragma once

// Explicit feasible elliptope points certifying SDP lower bounds for deformed
// GOE matrices: a projector-based construction below the transition, and
// spike-plus-projector constructions above it (2-community and r-community).
// All three make diag(X) = 1 hold exactly by algebra, not by tolerance.

#include <cstdint>
#include <string>
#include <vector>

#include "graphsdp/solver.hpp"
#include "graphsdp/sym_dense.hpp"

namespace graphsdp {

enum class WitnessMode { subcritical, supercritical, supercritical_r };

// X = psi psi^T + D U U^T D with D diagonal. psi has 0 columns (subcritical),
// 1 column (supercritical, the capped spike), or r-1 columns (r communities).
struct WitnessParts {
  WitnessMode mode = WitnessMode::subcritical;
  Eigen::MatrixXd psi;  // n x p, row norms <= 1
  Eigen::VectorXd D;    // positive diagonal
  Eigen::MatrixXd U;    // n x m, orthonormal columns, m = floor(n*delta)

  Eigen::Index n() const { return D.size(); }
};

// Clamp to [-1, 1].
double cap_scalar(double x);
// x if ||x|| <= 1, else x/||x||; reduces to cap_scalar in one dimension.
Eigen::VectorXd cap_vector(const Eigen::VectorXd& x);

// U = top floor(n*delta) eigenvectors of B; D_ii = 1/||U^T e_i||, so that
// X = D U U^T D is the row-normalized projector. delta in (0, 1]; delta = 1
// yields X = I.
WitnessParts witness_subcritical(const SymDense& B, double delta);

// phi_i = cap(eps * sqrt(n) * u_1i); U = eigenvectors 2..floor(n*delta)+1;
// D_ii = sqrt(1 - phi_i^2)/||U^T e_i||; X = phi phi^T + D U U^T D.
WitnessParts witness_supercritical(const SymDense& B, double eps, double delta);

// Psi = row-wise cap(eps * sqrt(n) * V) with V the top r-1 eigenvectors;
// U = eigenvectors r..r+floor(n*delta)-1; D_ii = sqrt(1 - ||Psi^T e_i||^2) / ||U^T e_i||.
// Note: the source formula for D_ii squares the denominator norm, which breaks
// the unit diagonal; the first power used here is the diag-exact normalization
// (and matches the 2-community construction, which it reduces to at r = 2).
WitnessParts witness_supercritical_r(const SymDense& B, int r, double eps, double delta);

struct FeasibilityReport {
  double diag_err = 0.0;   // max |X_ii - 1|
  double min_eig = 0.0;    // smallest eigenvalue of materialized X
  double ortho_err = 0.0;  // max |(U^T U - I)_ij|
  bool pass(double tol) const {
    return diag_err <= tol && min_eig >= -tol && ortho_err <= tol;
  }
};
FeasibilityReport verify_feasible(const WitnessParts& w, double tol);

// <B, X>/n from the parts (never forms X): sum of psi-column and scaled
// U-column quadratic forms, O(n^2 (p + m)).
double witness_value(const SymDense& B, const WitnessParts& w);

// Dense X for tests and feasibility checks (n <= 4000).
Eigen::MatrixXd materialize_witness(const WitnessParts& w);

// Exact unit-row factor [psi | DU]; usable as a solver warm start at rank p + m.
SphereFactor witness_to_factor(const WitnessParts& w);

// (eps, delta) grid search maximizing witness_value subject to verify_feasible.
// The source constructions leave (eps, delta) nonconstructive; this turns the
// existence argument into a computable certificate. Degenerate cells are skipped.
struct GridCell {
  double eps = 0.0;
  double delta = 0.0;
  double value = 0.0;  // per n
  bool feasible = false;
  bool degenerate = false;
  FeasibilityReport report;
};
struct GridSearchResult {
  bool found = false;
  double eps = 0.0;
  double delta = 0.0;
  double value = 0.0;  // per n
  WitnessParts best;
  std::vector<GridCell> cells;
  bool all_feasible = true;  // over non-degenerate cells
};
GridSearchResult witness_grid_search(const SymDense& B, WitnessMode mode, int r = 2,
                                     std::vector<double> eps_grid = {},
                                     std::vector<double> delta_grid = {},
                                     double feas_tol = 1e-8);

// Default grids: eps {0.05, 0.10, ..., 0.50}, delta {0.01..0.20} (8 points).
std::vector<double> default_eps_grid();
std::vector<double> default_delta_grid();

// Export: one JSON metadata line {"mode","n","psi_cols","m"} followed by binary
// f64 blocks psi, D, U (row-major).
void save_witness(const std::string& path, const WitnessParts& w);
WitnessParts load_witness(const std::string& path);

}  // namespace graphsdp
