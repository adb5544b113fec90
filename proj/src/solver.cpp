#include "graphsdp/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "graphsdp/errors.hpp"
#include "graphsdp/rng.hpp"

namespace graphsdp {

double SphereFactor::row_norm_error() const {
  double err = 0.0;
  for (Eigen::Index i = 0; i < sigma.rows(); ++i) {
    err = std::max(err, std::abs(sigma.row(i).norm() - 1.0));
  }
  return err;
}

int default_rank(Eigen::Index n) {
  const int k = static_cast<int>(std::ceil(std::sqrt(2.0 * static_cast<double>(n))));
  return std::min(std::max(k, 1), 64);
}

SphereFactor init_factor(Eigen::Index n, int k, std::uint64_t seed) {
  if (k < 1) throw InvalidParameter("init_factor: k must be >= 1");
  SplitMix64 rng(seed);
  SphereFactor f;
  f.sigma.resize(n, k);
  for (Eigen::Index i = 0; i < n; ++i) {
    double norm2 = 0.0;
    do {
      for (int c = 0; c < k; ++c) f.sigma(i, c) = rng.next_gaussian();
      norm2 = f.sigma.row(i).squaredNorm();
    } while (norm2 == 0.0);
    f.sigma.row(i) /= std::sqrt(norm2);
  }
  return f;
}

double objective(const LinearSdpOperator& M, const SphereFactor& f) {
  if (f.n() != M.dim()) throw DimensionMismatch("objective: factor/operator size mismatch");
  RowMat out(f.n(), f.k());
  M.multiply(f.sigma, out);
  return (f.sigma.array() * out.array()).sum();
}

std::pair<SphereFactor, SolveReport> coordinate_ascent(const LinearSdpOperator& M,
                                                       SphereFactor f, double tol,
                                                       int max_epochs, std::uint64_t seed) {
  if (f.n() != M.dim()) throw DimensionMismatch("coordinate_ascent: size mismatch");
  if (!(tol > 0.0)) throw InvalidParameter("coordinate_ascent: tol must be > 0");
  const Eigen::Index n = f.n();
  SplitMix64 rng(seed);

  SolveReport report;
  double obj = objective(M, f);
  report.objective_trace.push_back(obj);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Eigen::RowVectorXd h(f.k());

  for (int epoch = 1; epoch <= max_epochs; ++epoch) {
    // Refresh the running sum each epoch so rank-one drift cannot accumulate.
    Eigen::RowVectorXd colsum = f.sigma.colwise().sum();
    shuffle(order, rng);
    double gain_total = 0.0;
    for (int i : order) {
      M.field(i, f.sigma, colsum, h);
      const double hn = h.norm();
      if (hn < 1e-300) continue;  // zero field: keep the previous row
      // Gain of the exact block maximizer: 2(||h|| - <sigma_i, h>) >= 0 by
      // Cauchy-Schwarz; clamp the floating-point residue to keep traces monotone.
      double gain = 2.0 * (hn - h.dot(f.sigma.row(i)));
      assert(gain > -1e-9 * (1.0 + std::abs(obj)));
      if (gain < 0.0) gain = 0.0;
      h /= hn;
      colsum += h - f.sigma.row(i);
      f.sigma.row(i) = h;
      gain_total += gain;
    }
    obj += gain_total;
    report.objective_trace.push_back(obj);
    report.epochs = epoch;
    if (gain_total < tol * (1.0 + std::abs(obj))) {
      report.converged = true;
      break;
    }
  }
  return {std::move(f), std::move(report)};
}

OptResult opt_k(const LinearSdpOperator& M, int k, int restarts, double tol, int max_epochs,
                std::uint64_t seed) {
  if (restarts < 1) throw InvalidParameter("opt_k: restarts must be >= 1");
  if (k < 1) k = default_rank(M.dim());
  OptResult best;
  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    const std::uint64_t sr = SplitMix64::derive(seed, static_cast<std::uint64_t>(r));
    SphereFactor f0 = init_factor(M.dim(), k, SplitMix64::derive(sr, 0));
    auto [f, rep] = coordinate_ascent(M, std::move(f0), tol, max_epochs,
                                      SplitMix64::derive(sr, 1));
    const double val = objective(M, f);  // fresh evaluation, not the drifting trace
    if (!have || val > best.value) {     // strict: ties keep the lowest restart index
      best.value = val;
      best.factor = std::move(f);
      best.report = std::move(rep);
      have = true;
    }
  }
  best.report.restarts_used = restarts;
  return best;
}

OptResult opt_k(const LinearSdpOperator& M, const SolverParams& p, std::uint64_t seed) {
  return opt_k(M, p.k, p.restarts, p.tol, p.max_epochs, seed);
}

double alpha_k(int k) {
  if (k < 1) throw InvalidParameter("alpha_k: k must be >= 1");
  const double kd = static_cast<double>(k);
  return std::exp(std::log(2.0) + 2.0 * std::lgamma((kd + 1.0) / 2.0) - std::log(kd) -
                  2.0 * std::lgamma(kd / 2.0));
}

Sandwich sdp_sandwich(const LinearSdpOperator& M, int k, const SolverParams& params,
                      std::uint64_t seed) {
  if (k < 2) throw InvalidParameter("sdp_sandwich: k must be >= 2");
  const double n = static_cast<double>(M.dim());
  const double a = alpha_k(k);
  SolverParams p = params;
  p.k = k;

  const OptResult pos = opt_k(M, p, SplitMix64::derive(seed, 0));
  const auto neg = M.negated();
  const OptResult negopt = opt_k(*neg, p, SplitMix64::derive(seed, 1));
  const double spec_pos = n * M.xi1(SplitMix64::derive(seed, 2));
  const double spec_neg = n * neg->xi1(SplitMix64::derive(seed, 3));

  // SDP(-M) <= min( n xi1(-M), (OPT_k(-M) + (1-a) SDP(M)) / a ) with the inner
  // SDP(M) grounded at its spectral bound; then the same one level up for M.
  const double upper_neg = std::min(spec_neg, (negopt.value + (1.0 - a) * spec_pos) / a);
  const double upper = std::min(spec_pos, (pos.value + (1.0 - a) * upper_neg) / a);

  Sandwich s;
  s.lower = pos.value;
  s.upper = upper;
  s.k = k;
  s.alpha_k = a;
  return s;
}

SphereFactor round_with_matrix(const SphereFactor& f, const RowMat& J) {
  if (J.cols() != f.k()) throw DimensionMismatch("round_with_matrix: J is k x K");
  SphereFactor out;
  out.sigma.noalias() = f.sigma * J.transpose();
  for (Eigen::Index i = 0; i < out.sigma.rows(); ++i) {
    const double norm = out.sigma.row(i).norm();
    if (norm == 0.0) throw NumericalFailure("round_with_matrix: zero row after projection");
    out.sigma.row(i) /= norm;
  }
  return out;
}

SphereFactor grothendieck_round(const SphereFactor& f, int k, std::uint64_t seed) {
  const int K = static_cast<int>(f.k());
  if (!(k >= 1 && k < K)) throw InvalidParameter("grothendieck_round: need 1 <= k < K");
  const double sd = std::sqrt(1.0 / k);
  for (int tries = 0; tries < 64; ++tries) {
    SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(tries)));
    RowMat J(k, K);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < K; ++c) J(r, c) = sd * rng.next_gaussian();
    }
    try {
      return round_with_matrix(f, J);
    } catch (const NumericalFailure&) {
      // zero row: resample J
    }
  }
  throw NumericalFailure("grothendieck_round: persistent zero rows");
}

SphereFactor embed_factor(const SphereFactor& f, int k_new) {
  if (k_new < f.k()) throw InvalidParameter("embed_factor: k_new must be >= k");
  SphereFactor out;
  out.sigma = RowMat::Zero(f.n(), k_new);
  out.sigma.leftCols(f.k()) = f.sigma;
  return out;
}

double zero_temp_gap_bound(double L, int k, double beta, double eps, double C) {
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidParameter("zero_temp_gap_bound: eps in (0,1]");
  if (!(beta > 0.0)) throw InvalidParameter("zero_temp_gap_bound: beta > 0");
  if (L < 0.0 || C <= 0.0 || k < 1) throw InvalidParameter("zero_temp_gap_bound: bad L/C/k");
  return 2.0 * L * eps * std::sqrt(static_cast<double>(k)) + (k / beta) * std::log(C / eps);
}

double interpolation_gap_bound(double beta, double d, double lambda) {
  if (!(d > 0.0)) throw InvalidParameter("interpolation_gap_bound: d > 0");
  if (lambda < 0.0) throw InvalidParameter("interpolation_gap_bound: lambda >= 0");
  return 2.0 * beta * beta / std::sqrt(d) + 8.0 * std::sqrt(lambda) / std::pow(d, 0.25);
}

void save_factor(const std::string& path, const SphereFactor& f, std::uint64_t seed,
                 double objective_value) {
  nlohmann::json doc;
  doc["n"] = f.n();
  doc["k"] = f.k();
  doc["seed"] = seed;
  doc["objective"] = objective_value;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("save_factor: cannot open " + path);
  out << doc.dump() << "\n";
  out.write(reinterpret_cast<const char*>(f.sigma.data()),
            static_cast<std::streamsize>(sizeof(double) * f.sigma.size()));
  if (!out) throw IoError("save_factor: write failed for " + path);
}

FactorCheckpoint load_factor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("load_factor: cannot open " + path);
  std::string header;
  std::getline(in, header);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(header);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("load_factor: bad header: ") + e.what());
  }
  FactorCheckpoint cp;
  const auto n = doc.at("n").get<Eigen::Index>();
  const auto k = doc.at("k").get<Eigen::Index>();
  cp.seed = doc.at("seed").get<std::uint64_t>();
  cp.objective = doc.at("objective").get<double>();
  cp.factor.sigma.resize(n, k);
  in.read(reinterpret_cast<char*>(cp.factor.sigma.data()),
          static_cast<std::streamsize>(sizeof(double) * n * k));
  if (!in) throw IoError("load_factor: truncated sigma block in " + path);
  return cp;
}

}  // namespace graphsdp
