#pragma once

// Rank-k factorized elliptope solver. OPT_k(M) = max sum_ij M_ij <sigma_i, sigma_j>
// over unit rows sigma_i in S^{k-1}; X = sigma sigma^T is feasible for the SDP by
// construction, so every reported value is a certified lower bound on SDP(M).

#include <cstdint>
#include <string>
#include <vector>

#include "graphsdp/operators.hpp"

namespace graphsdp {

// n x k factor with unit rows (within 1e-12).
struct SphereFactor {
  RowMat sigma;

  Eigen::Index n() const { return sigma.rows(); }
  Eigen::Index k() const { return sigma.cols(); }
  // Max deviation of any row norm from 1.
  double row_norm_error() const;
};

struct SolveReport {
  std::vector<double> objective_trace;  // initial value, then one entry per epoch
  int epochs = 0;
  bool converged = false;
  int restarts_used = 1;
};

struct SolverParams {
  int k = 0;  // 0 = default: ceil(sqrt(2n)) capped at 64
  int restarts = 3;
  double tol = 1e-7;
  int max_epochs = 2000;
};

struct Sandwich {
  double lower = 0.0;  // certified OPT_k value
  double upper = 0.0;
  int k = 0;
  double alpha_k = 0.0;
};

struct OptResult {
  double value = 0.0;
  SphereFactor factor;
  SolveReport report;
};

int default_rank(Eigen::Index n);

// Rows i.i.d. uniform on S^{k-1} (normalized Gaussians); k = 1 gives +-1 entries.
SphereFactor init_factor(Eigen::Index n, int k, std::uint64_t seed);

// <sigma, M sigma>, computed via k matvecs. Includes diagonal terms.
double objective(const LinearSdpOperator& M, const SphereFactor& f);

// Block-coordinate maximization: sigma_i <- normalize(sum_{j != i} M_ij sigma_j),
// the exact per-block maximizer. Sweep order is a fresh uniform permutation per
// epoch; a zero field keeps the previous row. Stops when the per-epoch gain drops
// below tol*(1 + |objective|) or at max_epochs. The objective trace is
// nondecreasing by construction (per-update gains are algebraically >= 0).
std::pair<SphereFactor, SolveReport> coordinate_ascent(const LinearSdpOperator& M,
                                                       SphereFactor f, double tol,
                                                       int max_epochs, std::uint64_t seed);

// Best of `restarts` independent runs (restart r uses seed derive(seed, r));
// ties keep the lowest restart index, so the result is deterministic.
OptResult opt_k(const LinearSdpOperator& M, int k, int restarts, double tol, int max_epochs,
                std::uint64_t seed);
OptResult opt_k(const LinearSdpOperator& M, const SolverParams& params, std::uint64_t seed);

// alpha_k = 2 Gamma((k+1)/2)^2 / (k Gamma(k/2)^2), evaluated via log-Gamma.
// Monotone increasing to 1; alpha_1 = 2/pi, alpha_2 = pi/4.
double alpha_k(int k);

// Certified bracket around SDP(M):
//   lower = OPT_k(M);
//   upper = min( n*xi1(M),  (OPT_k(M) + (1-alpha_k) U_minus) / alpha_k )
// where U_minus upper-bounds SDP(-M) by the same recursion grounded at its
// spectral term. Requires k >= 2.
Sandwich sdp_sandwich(const LinearSdpOperator& M, int k, const SolverParams& params,
                      std::uint64_t seed);

// Rietz-style rounding: J is k x K with i.i.d. N(0, 1/k) entries and
// x_i = J sigma_i / ||J sigma_i||; J is resampled in the (probability-zero)
// event of a zero row.
SphereFactor grothendieck_round(const SphereFactor& f, int k, std::uint64_t seed);
// Deterministic test hook with an explicit J.
SphereFactor round_with_matrix(const SphereFactor& f, const RowMat& J);

// Pads a factor with zero columns up to rank k_new (warm start for monotone-in-k runs).
SphereFactor embed_factor(const SphereFactor& f, int k_new);

// Bound evaluators (pure formulas).
// 2 L eps sqrt(k) + (k/beta) log(C/eps); requires eps in (0,1], beta > 0, L >= 0, C > 0.
double zero_temp_gap_bound(double L, int k, double beta, double eps, double C);
// 2 beta^2 / sqrt(d) + 8 sqrt(lambda) / d^{1/4}; requires d > 0, lambda >= 0.
double interpolation_gap_bound(double beta, double d, double lambda);

// Factor checkpoint: one JSON line {"n","k","seed","objective"} followed by the
// row-major f64 sigma block.
void save_factor(const std::string& path, const SphereFactor& f, std::uint64_t seed,
                 double objective_value);
struct FactorCheckpoint {
  SphereFactor factor;
  std::uint64_t seed = 0;
  double objective = 0.0;
};
FactorCheckpoint load_factor(const std::string& path);

}  // namespace graphsdp
