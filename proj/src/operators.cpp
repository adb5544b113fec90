#include "graphsdp/operators.hpp"

#include <cmath>

#include "graphsdp/errors.hpp"
#include "graphsdp/rng.hpp"

namespace graphsdp {

CenteredOperator::CenteredOperator(SparseGraph g, double d, double scale,
                                   std::optional<double> diag_override)
    : graph_(std::move(g)), d_(d), scale_(scale), diag_override_(diag_override) {
  if (d_ < 0.0) throw InvalidParameter("CenteredOperator: d must be >= 0");
  if (scale_ <= 0.0) throw InvalidParameter("CenteredOperator: scale must be > 0");
}

CenteredOperator centered_operator(const SparseGraph& g, double d, double scale) {
  return CenteredOperator(g, d, scale);
}

double CenteredOperator::diagonal(Eigen::Index) const {
  return diag_override_ ? *diag_override_ : -scale_ * d_ / graph_.n;
}

void CenteredOperator::multiply(const RowMat& sigma, RowMat& out) const {
  const int n = graph_.n;
  if (sigma.rows() != n) throw DimensionMismatch("CenteredOperator::multiply");
  const Eigen::RowVectorXd colsum = sigma.colwise().sum();
  // Rank-one term -(d/n) 1 (1^T sigma), then sparse A, then the diagonal policy.
  out = (-scale_ * d_ / n) * colsum.replicate(n, 1);
  for (const auto& [u, v] : graph_.edges) {
    out.row(u) += scale_ * sigma.row(v);
    out.row(v) += scale_ * sigma.row(u);
  }
  if (diag_override_) {
    // Natural diagonal is already -scale*d/n from the rank-one term (A_ii = 0).
    out += (*diag_override_ + scale_ * d_ / n) * sigma;
  }
}

void CenteredOperator::field(Eigen::Index i, const RowMat& sigma,
                             const Eigen::RowVectorXd& colsum, Eigen::RowVectorXd& out) const {
  out = (-scale_ * d_ / graph_.n) * (colsum - sigma.row(i));
  for (int j : graph_.adj[static_cast<int>(i)]) out += scale_ * sigma.row(j);
}

Eigen::VectorXd CenteredOperator::apply(const Eigen::VectorXd& x) const {
  const int n = graph_.n;
  if (x.size() != n) throw DimensionMismatch("CenteredOperator::apply");
  Eigen::VectorXd y = Eigen::VectorXd::Constant(n, (-scale_ * d_ / n) * x.sum());
  for (const auto& [u, v] : graph_.edges) {
    y[u] += scale_ * x[v];
    y[v] += scale_ * x[u];
  }
  if (diag_override_) y += (*diag_override_ + scale_ * d_ / n) * x;
  return y;
}

double CenteredOperator::entry_bound_radius() const {
  const int n = graph_.n;
  const double p = d_ / n;
  const double edge_abs = std::abs(scale_) * std::abs(1.0 - p);
  const double hole_abs = std::abs(scale_) * p;
  double r = 0.0;
  for (int i = 0; i < n; ++i) {
    const double deg = static_cast<double>(graph_.adj[i].size());
    const double row = deg * edge_abs + (n - 1 - deg) * hole_abs + std::abs(diagonal(i));
    r = std::max(r, row);
  }
  return r;
}

double CenteredOperator::xi1(std::uint64_t seed) const { return top_eigenvalue_power(*this, seed); }

std::unique_ptr<LinearSdpOperator> CenteredOperator::negated() const {
  // -M = (-scale)(A - (d/n)11^T) is not representable with scale > 0, so negate
  // by composing with a sign flip at the interface level.
  struct Negated final : LinearSdpOperator {
    explicit Negated(const CenteredOperator& base) : op(base) {}
    CenteredOperator op;
    Eigen::Index dim() const override { return op.dim(); }
    void multiply(const RowMat& sigma, RowMat& out) const override {
      op.multiply(sigma, out);
      out = -out;
    }
    void field(Eigen::Index i, const RowMat& sigma, const Eigen::RowVectorXd& colsum,
               Eigen::RowVectorXd& out) const override {
      op.field(i, sigma, colsum, out);
      out = -out;
    }
    double diagonal(Eigen::Index i) const override { return -op.diagonal(i); }
    double entry_bound_radius() const override { return op.entry_bound_radius(); }
    double xi1(std::uint64_t seed) const override { return top_eigenvalue_power(*this, seed); }
    std::unique_ptr<LinearSdpOperator> negated() const override {
      return std::make_unique<CenteredOperator>(op);
    }
    Eigen::MatrixXd materialize() const override { return -op.materialize(); }
  };
  return std::make_unique<Negated>(*this);
}

Eigen::MatrixXd CenteredOperator::materialize() const {
  const int n = graph_.n;
  Eigen::MatrixXd M = Eigen::MatrixXd::Constant(n, n, -scale_ * d_ / n);
  for (const auto& [u, v] : graph_.edges) {
    M(u, v) += scale_;
    M(v, u) += scale_;
  }
  if (diag_override_) M.diagonal().setConstant(*diag_override_);
  return M;
}

void DenseOperator::multiply(const RowMat& sigma, RowMat& out) const {
  if (sigma.rows() != M_.m.rows()) throw DimensionMismatch("DenseOperator::multiply");
  out.noalias() = M_.m * sigma;
}

void DenseOperator::field(Eigen::Index i, const RowMat& sigma, const Eigen::RowVectorXd&,
                          Eigen::RowVectorXd& out) const {
  // M.row(i) = M.col(i)^T by symmetry; sigma^T * col is one dense GEMV.
  out.noalias() = (sigma.transpose() * M_.m.col(i)).transpose();
  out -= M_.m(i, i) * sigma.row(i);
}

double DenseOperator::entry_bound_radius() const {
  return M_.m.cwiseAbs().rowwise().sum().maxCoeff();
}

double DenseOperator::xi1(std::uint64_t) const {
  if (M_.m.rows() <= 4000) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M_.m, Eigen::EigenvaluesOnly);
    if (es.info() == Eigen::Success) return es.eigenvalues().maxCoeff();
  }
  return top_eigenvalue_power(*this, 0);
}

std::unique_ptr<LinearSdpOperator> DenseOperator::negated() const {
  return std::make_unique<DenseOperator>(SymDense(Eigen::MatrixXd(-M_.m)));
}

double top_eigenvalue_power(const LinearSdpOperator& M, std::uint64_t seed, double tol,
                            int max_iters) {
  const Eigen::Index n = M.dim();
  if (n == 1) return M.diagonal(0);
  const double shift = M.entry_bound_radius() + 1.0;  // M + shift*I is PD
  SplitMix64 rng(seed);
  RowMat x(n, 1);
  for (Eigen::Index i = 0; i < n; ++i) x(i, 0) = rng.next_gaussian();
  x /= x.norm();
  RowMat y(n, 1);
  double rayleigh = 0.0;
  double prev = -1e300;
  for (int it = 0; it < max_iters; ++it) {
    M.multiply(x, y);
    rayleigh = (x.col(0).dot(y.col(0)));
    y += shift * x;
    const double norm = y.norm();
    if (norm == 0.0) break;  // x in the kernel of M + shift*I: all eigenvalues <= -shift
    x = y / norm;
    if (it % 16 == 15) {
      if (std::abs(rayleigh - prev) <= tol * (1.0 + std::abs(rayleigh))) break;
      prev = rayleigh;
    }
  }
  // Rayleigh quotients approach xi1 from below; pad so callers can use the
  // result inside upper bounds.
  return rayleigh + 1e-6 * (1.0 + std::abs(rayleigh));
}

}  // namespace graphsdp
