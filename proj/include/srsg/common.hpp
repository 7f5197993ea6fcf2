#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace srsg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Pipeline-wide nonzero threshold: iterative solvers leave dust, so every
// support indicator (caching, regularizer counts, support distances, traces)
// uses the same cutoff.
inline constexpr double kSupportEps = 1e-10;

inline bool is_nonzero(double x) { return std::abs(x) > kSupportEps; }

enum class ErrorKind {
  Io,
  Parse,
  Dimension,
  Parameter,
  DegenerateInput,
  Usage,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error io_error(const std::string& msg) { return Error(ErrorKind::Io, msg); }
inline Error parse_error(const std::string& msg) { return Error(ErrorKind::Parse, msg); }
inline Error dimension_error(const std::string& msg) { return Error(ErrorKind::Dimension, msg); }
inline Error parameter_error(const std::string& msg) { return Error(ErrorKind::Parameter, msg); }
inline Error degenerate_input(const std::string& msg) { return Error(ErrorKind::DegenerateInput, msg); }
inline Error usage_error(const std::string& msg) { return Error(ErrorKind::Usage, msg); }

}  // namespace srsg
