#pragma once

// Symmetric linear operators consumed by the elliptope solver. The solver only
// needs three things: full multiplies M*sigma (for objectives), per-row fields
// sum_{j != i} M_ij sigma_j (for block updates), and a spectral upper bound.

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <optional>

#include "graphsdp/graph.hpp"
#include "graphsdp/sym_dense.hpp"

namespace graphsdp {

// Factor rows sigma_i are stored contiguously.
using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class LinearSdpOperator {
 public:
  virtual ~LinearSdpOperator() = default;

  virtual Eigen::Index dim() const = 0;

  // out = M * sigma (out preallocated to sigma's shape).
  virtual void multiply(const RowMat& sigma, RowMat& out) const = 0;

  // out = sum_{j != i} M_ij sigma_j. colsum = sum_j sigma_j is maintained by the
  // caller so implicit rank-one terms cost O(k).
  virtual void field(Eigen::Index i, const RowMat& sigma, const Eigen::RowVectorXd& colsum,
                     Eigen::RowVectorXd& out) const = 0;

  virtual double diagonal(Eigen::Index i) const = 0;

  // max_i sum_j |M_ij| (Gershgorin radius); any eigenvalue lies in [-r, r].
  virtual double entry_bound_radius() const = 0;

  // Largest (algebraic) eigenvalue. Dense operators decompose exactly; implicit
  // ones run shifted power iteration (see top_eigenvalue_power).
  virtual double xi1(std::uint64_t seed) const = 0;

  virtual std::unique_ptr<LinearSdpOperator> negated() const = 0;

  // Dense materialization for tests and small-instance checks.
  virtual Eigen::MatrixXd materialize() const = 0;
};

// M = scale * (A_G - (d/n) 11^T), never materialized for large n. The natural
// diagonal is -scale*d/n (A has no self-loops); diag_override, when set, replaces
// every diagonal entry of M with that value. The diagonal never enters row
// updates (X_ii = 1 is forced), only reported objectives.
class CenteredOperator final : public LinearSdpOperator {
 public:
  CenteredOperator(SparseGraph g, double d, double scale,
                   std::optional<double> diag_override = std::nullopt);

  Eigen::Index dim() const override { return graph_.n; }
  void multiply(const RowMat& sigma, RowMat& out) const override;
  void field(Eigen::Index i, const RowMat& sigma, const Eigen::RowVectorXd& colsum,
             Eigen::RowVectorXd& out) const override;
  double diagonal(Eigen::Index i) const override;
  double entry_bound_radius() const override;
  double xi1(std::uint64_t seed) const override;
  std::unique_ptr<LinearSdpOperator> negated() const override;
  Eigen::MatrixXd materialize() const override;

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;  // M x, O(|E| + n)

  const SparseGraph& graph() const { return graph_; }
  double d() const { return d_; }
  double scale() const { return scale_; }

 private:
  SparseGraph graph_;
  double d_;
  double scale_;
  std::optional<double> diag_override_;
};

CenteredOperator centered_operator(const SparseGraph& g, double d, double scale);

// Wraps a SymDense as a solver operand.
class DenseOperator final : public LinearSdpOperator {
 public:
  explicit DenseOperator(SymDense M) : M_(std::move(M)) {}

  Eigen::Index dim() const override { return M_.m.rows(); }
  void multiply(const RowMat& sigma, RowMat& out) const override;
  void field(Eigen::Index i, const RowMat& sigma, const Eigen::RowVectorXd& colsum,
             Eigen::RowVectorXd& out) const override;
  double diagonal(Eigen::Index i) const override { return M_.m(i, i); }
  double entry_bound_radius() const override;
  double xi1(std::uint64_t seed) const override;
  std::unique_ptr<LinearSdpOperator> negated() const override;
  Eigen::MatrixXd materialize() const override { return M_.m; }

  const SymDense& matrix() const { return M_; }

 private:
  SymDense M_;
};

// Shifted power iteration for the top algebraic eigenvalue: iterates (M + cI)x
// with c = entry_bound_radius(). Returns a Rayleigh-quotient estimate padded by
// a small relative margin so n * xi1 stays a valid SDP upper bound.
double top_eigenvalue_power(const LinearSdpOperator& M, std::uint64_t seed,
                            double tol = 1e-10, int max_iters = 50000);

}  // namespace graphsdp
