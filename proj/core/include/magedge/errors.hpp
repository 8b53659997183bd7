#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace magedge {

// Failure taxonomy shared by the whole library. Kinds in the first block
// mean the request itself was ill-formed; kinds in the second block mean a
// numerically sound request could not be completed to tolerance.
enum class ErrorKind {
  invalid_argument,
  invalid_field,
  invalid_interval,
  extrapolation,
  regime,
  not_in_gap,
  precondition,
  range,
  io,

  window,
  numeric,
  convergence,
  inconclusive_limit,
  insufficient_bands,
  range_too_short,
};

const char* to_string(ErrorKind kind);

/// True for kinds that indicate a malformed request (CLI exit code 2),
/// false for numeric/convergence failures (CLI exit code 3).
bool is_config_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Grid doubling failed to settle; carries the last two eigenvalue sets so
/// callers can inspect how far apart the estimates still are.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, std::vector<double> coarse,
                   std::vector<double> fine)
      : Error(ErrorKind::convergence, message),
        coarse_(std::move(coarse)),
        fine_(std::move(fine)) {}
  const std::vector<double>& coarse_estimate() const { return coarse_; }
  const std::vector<double>& fine_estimate() const { return fine_; }

 private:
  std::vector<double> coarse_;
  std::vector<double> fine_;
};

}  // namespace magedge
