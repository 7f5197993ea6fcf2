#include "srsg/dataset.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace srsg {

namespace {

std::vector<std::string> split_fields(const std::string& line, Delimiter delim) {
  std::vector<std::string> out;
  if (delim == Delimiter::Comma) {
    std::string cur;
    std::stringstream ss(line);
    while (std::getline(ss, cur, ',')) out.push_back(cur);
    if (!line.empty() && line.back() == ',') out.emplace_back();
  } else {
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
  }
  return out;
}

double parse_field(const std::string& raw, int row, int col) {
  const char* begin = raw.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  // allow surrounding whitespace only
  while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  const char* p = begin;
  while (*p != '\0' && std::isspace(static_cast<unsigned char>(*p))) ++p;
  if (end == begin || p == begin + raw.size() || (end && *end != '\0') || errno == ERANGE) {
    throw parse_error("row " + std::to_string(row) + ", field " + std::to_string(col) +
                      ": not numeric: '" + raw + "'");
  }
  return v;
}

}  // namespace

int Dataset::num_classes() const {
  if (!labels || labels->empty()) return 0;
  return 1 + *std::max_element(labels->begin(), labels->end());
}

Dataset load_dataset(const std::string& path, DataFormat format, Delimiter delimiter) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open dataset file: " + path);

  std::vector<std::vector<double>> rows;
  std::vector<double> raw_labels;
  std::string line;
  int lineno = 0;
  size_t width = 0;
  Delimiter delim = delimiter;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // skip blank lines and comments
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (delim == Delimiter::Auto)
      delim = line.find(',') != std::string::npos ? Delimiter::Comma : Delimiter::Whitespace;
    auto fields = split_fields(line, delim);
    if (format == DataFormat::LabeledCsv && fields.size() < 2)
      throw dimension_error("row " + std::to_string(lineno) + ": labeled row needs at least 2 fields");
    if (fields.empty())
      throw dimension_error("row " + std::to_string(lineno) + ": empty record");
    std::vector<double> vals;
    vals.reserve(fields.size());
    for (size_t c = 0; c < fields.size(); ++c)
      vals.push_back(parse_field(fields[c], lineno, static_cast<int>(c + 1)));
    if (format == DataFormat::LabeledCsv) {
      double lab = vals.back();
      vals.pop_back();
      if (lab != std::floor(lab))
        throw parse_error("row " + std::to_string(lineno) + ": label is not an integer");
      raw_labels.push_back(lab);
    }
    if (width == 0) width = vals.size();
    if (vals.size() != width)
      throw dimension_error("row " + std::to_string(lineno) + ": has " + std::to_string(vals.size()) +
                            " fields, expected " + std::to_string(width));
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw parse_error("dataset is empty: " + path);

  Dataset ds;
  ds.points.resize(static_cast<Eigen::Index>(width), static_cast<Eigen::Index>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < width; ++j) ds.points(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = rows[i][j];

  if (format == DataFormat::LabeledCsv) {
    // remap to contiguous 0..c-1, preserving the numeric order of the originals
    std::map<double, int> remap;
    for (double l : raw_labels) remap.emplace(l, 0);
    int next = 0;
    for (auto& kv : remap) kv.second = next++;
    std::vector<int> labels;
    labels.reserve(raw_labels.size());
    for (double l : raw_labels) labels.push_back(remap[l]);
    ds.labels = std::move(labels);
  }
  return ds;
}

Dataset normalize_columns(const Dataset& data) {
  Dataset out = data;
  for (Eigen::Index j = 0; j < out.points.cols(); ++j) {
    double nrm = out.points.col(j).norm();
    if (nrm == 0.0)
      throw degenerate_input("column " + std::to_string(j) + " is the zero vector");
    out.points.col(j) /= nrm;
  }
  return out;
}

Matrix pairwise_sq_dists(const Matrix& points) {
  const Eigen::Index n = points.cols();
  Matrix d2(n, n);
  const Vector sq = points.colwise().squaredNorm();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double v = sq(i) + sq(j) - 2.0 * points.col(i).dot(points.col(j));
      d2(i, j) = v < 0.0 ? 0.0 : v;
    }
  }
  return d2;
}

KnnGraph build_knn_graph(const Dataset& data, int k) {
  const Eigen::Index n = data.size();
  if (k < 1 || k >= n)
    throw parameter_error("k must satisfy 1 <= k < n, got k=" + std::to_string(k) +
                          " with n=" + std::to_string(n));
  Matrix d2 = pairwise_sq_dists(data.points);

  KnnGraph g;
  g.k = k;
  g.adjacency.setZero(n, n);
  g.neighbors.assign(static_cast<size_t>(n), {});
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) {
    std::vector<int> idx(static_cast<size_t>(n) - 1);
    int p = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) idx[static_cast<size_t>(p++)] = static_cast<int>(j);
    // ties broken by smaller sample index
    std::partial_sort(idx.begin(), idx.begin() + k, idx.end(), [&](int a, int b) {
      double da = d2(i, a), db = d2(i, b);
      return da < db || (da == db && a < b);
    });
    idx.resize(static_cast<size_t>(k));
    std::sort(idx.begin(), idx.end());
    for (int j : idx) g.adjacency(i, j) = 1;
    g.neighbors[static_cast<size_t>(i)] = std::move(idx);
  }
  return g;
}

std::string dataset_checksum(const Dataset& data) {
  std::ostringstream os;
  os.precision(17);
  os << "d=" << data.dim() << " n=" << data.size();
  if (data.points.size() > 0)
    os << " first=" << data.points(0, 0) << " last=" << data.points(data.dim() - 1, data.size() - 1);
  if (data.labels) os << " classes=" << data.num_classes();
  return os.str();
}

}  // namespace srsg
