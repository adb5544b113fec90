#include "graphsdp/sym_dense.hpp"

#include <fstream>
#include <vector>

#include <json.hpp>

#include "graphsdp/errors.hpp"

namespace graphsdp {

SymDense::SymDense(Eigen::MatrixXd mat) : m(std::move(mat)) {
  if (m.rows() != m.cols()) throw DimensionMismatch("SymDense: matrix must be square");
  m.triangularView<Eigen::StrictlyLower>() = m.triangularView<Eigen::StrictlyUpper>().transpose();
}

Spectrum eig_sym(const SymDense& M) {
  const int n = M.n();
  if (n > 4000) throw SizeLimit("eig_sym: n > 4000 exceeds the desk-scale cap");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M.m);
  if (es.info() != Eigen::Success) throw NumericalFailure("eig_sym: eigensolver did not converge");
  Spectrum s;
  // Eigen returns ascending order; flip to descending.
  s.eigenvalues = es.eigenvalues().reverse();
  s.eigenvectors = es.eigenvectors().rowwise().reverse();
  return s;
}

void save_symdense(const std::string& path, const SymDense& M) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("save_symdense: cannot open " + path);
  const auto n = static_cast<std::uint64_t>(M.n());
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  std::vector<double> buf;
  buf.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < M.n(); ++i) {
    for (int j = i; j < M.n(); ++j) buf.push_back(M.m(i, j));
  }
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(double)));
  if (!out) throw IoError("save_symdense: write failed for " + path);
}

SymDense load_symdense(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("load_symdense: cannot open " + path);
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  if (!in || n > 100000) throw IoError("load_symdense: bad header in " + path);
  Eigen::MatrixXd m(n, n);
  std::vector<double> buf(static_cast<std::size_t>(n) * (n + 1) / 2);
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size() * sizeof(double)));
  if (!in) throw IoError("load_symdense: truncated file " + path);
  std::size_t k = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = i; j < n; ++j) m(i, j) = buf[k++];
  }
  return SymDense(std::move(m));
}

void save_spectrum_json(const std::string& path, const Spectrum& s) {
  nlohmann::json doc;
  doc["eigenvalues"] = std::vector<double>(
      s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("save_spectrum_json: cannot open " + path);
  out << doc.dump() << "\n";
}

}  // namespace graphsdp
