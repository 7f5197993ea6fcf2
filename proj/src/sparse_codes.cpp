#include "srsg/sparse_codes.hpp"

#include <fstream>
#include <sstream>

namespace srsg {

SparseCodeMatrix::SparseCodeMatrix(Matrix z) : codes(std::move(z)) {
  if (codes.rows() != codes.cols())
    throw dimension_error("code matrix must be square");
  codes.diagonal().setZero();
  supports.resize(static_cast<size_t>(codes.cols()));
  for (Eigen::Index i = 0; i < codes.cols(); ++i) refresh_support(i);
}

void SparseCodeMatrix::set_column(Eigen::Index i, const Vector& z) {
  codes.col(i) = z;
  codes(i, i) = 0.0;
  refresh_support(i);
}

void SparseCodeMatrix::refresh_support(Eigen::Index i) {
  auto& s = supports[static_cast<size_t>(i)];
  s.clear();
  for (Eigen::Index t = 0; t < codes.rows(); ++t)
    if (is_nonzero(codes(t, i))) s.push_back(static_cast<int>(t));
}

long SparseCodeMatrix::nonzeros() const {
  long total = 0;
  for (const auto& s : supports) total += static_cast<long>(s.size());
  return total;
}

void save_triplets(const SparseCodeMatrix& z, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write: " + path);
  out << "row col value\n";
  out.precision(17);
  for (Eigen::Index i = 0; i < z.codes.cols(); ++i)
    for (int t : z.supports[static_cast<size_t>(i)])
      out << t << ' ' << i << ' ' << z.codes(t, i) << '\n';
  out << "# size " << z.codes.rows() << '\n';
}

SparseCodeMatrix load_triplets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open: " + path);
  std::string line;
  std::vector<std::tuple<int, int, double>> trips;
  Eigen::Index n = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string word;
      long sz;
      if (ss >> word >> sz && word == "size") n = sz;
      continue;
    }
    if (!header_seen) {  // "row col value"
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    int r, c;
    double v;
    if (!(ss >> r >> c >> v)) throw parse_error("bad triplet line: " + line);
    trips.emplace_back(r, c, v);
    n = std::max<Eigen::Index>(n, std::max(r, c) + 1);
  }
  Matrix z = Matrix::Zero(n, n);
  for (auto& [r, c, v] : trips) z(r, c) = v;
  return SparseCodeMatrix(std::move(z));
}

void save_dense(const Matrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write: " + path);
  out.precision(17);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

Matrix load_dense(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::vector<double> row;
    double v;
    while (ss >> v) row.push_back(v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw dimension_error("ragged matrix file: " + path);
    for (size_t c = 0; c < rows[r].size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return m;
}

}  // namespace srsg
