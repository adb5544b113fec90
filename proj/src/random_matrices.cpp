#include "graphsdp/random_matrices.hpp"

#include <cmath>
#include <numbers>

#include "graphsdp/errors.hpp"
#include "graphsdp/rng.hpp"

namespace graphsdp {

SymDense sample_goe(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("sample_goe: n must be >= 1");
  SplitMix64 rng(seed);
  const double off = std::sqrt(1.0 / n);
  const double diag = std::sqrt(2.0 / n);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m(i, j) = (i == j ? diag : off) * rng.next_gaussian();
    }
  }
  return SymDense(std::move(m));
}

SymDense deformed_goe(int n, double lambda, std::uint64_t seed) {
  SymDense b = sample_goe(n, seed);
  b.m.array() += lambda / n;
  return b;
}

SymDense deformed_goe_r(int n, int r, double lambda, const Labels& labels,
                        std::uint64_t seed) {
  if (static_cast<int>(labels.assignment.size()) != n || labels.r != r) {
    throw InvalidParameter("deformed_goe_r: labels do not match (n, r)");
  }
  std::vector<int> counts(r, 0);
  for (int v : labels.assignment) {
    if (v < 1 || v > r) throw InvalidParameter("deformed_goe_r: label out of range");
    ++counts[v - 1];
  }
  for (int c : counts) {
    if (c * r != n) throw InvalidParameter("deformed_goe_r: labels not balanced");
  }
  SymDense b = sample_goe(n, seed);
  const double within = lambda * (r - 1) / n;
  const double across = -lambda / n;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      b.m(i, j) += (labels.assignment[i] == labels.assignment[j]) ? within : across;
    }
  }
  b.m.triangularView<Eigen::StrictlyLower>() =
      b.m.triangularView<Eigen::StrictlyUpper>().transpose();
  return b;
}

double bbap_prediction(double lambda) {
  if (lambda < 0.0) throw InvalidParameter("bbap_prediction: lambda must be >= 0");
  return lambda <= 1.0 ? 2.0 : lambda + 1.0 / lambda;
}

namespace {
// Antiderivative of the semicircle density sqrt(4-x^2)/(2 pi) on [-2, 2].
inline double semicircle_cdf_part(double x) {
  const double s = std::sqrt(std::max(0.0, 4.0 - x * x));
  return (x * s / 2.0 + 2.0 * std::asin(x / 2.0)) / (2.0 * std::numbers::pi);
}
}  // namespace

double semicircle_quantile(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidParameter("semicircle_quantile: delta must lie in (0, 1)");
  }
  // Tail mass above t is 1/2 - F(t); solve F(t) = 1/2 - delta. F is strictly
  // increasing, so bisection on [-2, 2] converges linearly; 60 halvings give
  // an interval below 1e-17, well inside the 1e-10 contract.
  const double target = 0.5 - delta;
  double lo = -2.0;
  double hi = 2.0;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (semicircle_cdf_part(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace graphsdp
