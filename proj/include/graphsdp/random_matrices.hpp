#pragma once

// GOE and deformed-GOE ensembles plus spectral reference quantities.

#include <cstdint>

#include "graphsdp/graph.hpp"
#include "graphsdp/sym_dense.hpp"

namespace graphsdp {

// GOE(n): W symmetric, W_ii ~ N(0, 2/n), W_ij ~ N(0, 1/n) for i < j, independent.
// Entries are drawn in row-major upper-triangle order, one Gaussian each, so the
// stream is reproducible entry-by-entry.
SymDense sample_goe(int n, std::uint64_t seed);

// Rank-one deformation B(lambda) = (lambda/n) 11^T + W, sharing W with
// sample_goe(n, seed) bit-for-bit.
SymDense deformed_goe(int n, double lambda, std::uint64_t seed);

// r-community deformation B(lambda, r) = lambda B0(r) + W where B0 has entries
// (r-1)/n within a community and -1/n across; rank r-1, nonzero eigenvalues 1.
SymDense deformed_goe_r(int n, int r, double lambda, const Labels& labels,
                        std::uint64_t seed);

// Limit of the top eigenvalue of B(lambda): 2 for lambda <= 1, else lambda + 1/lambda.
double bbap_prediction(double lambda);

// Semicircle-law tail quantile xi*(delta): the solution of
//   integral_{xi*}^{2} sqrt(4 - x^2)/(2 pi) dx = delta,  delta in (0, 1),
// via the closed-form antiderivative and bisection to 1e-10.
double semicircle_quantile(double delta);

}  // namespace graphsdp
