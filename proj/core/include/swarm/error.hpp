#pragma once

#include <stdexcept>
#include <string>

namespace swarm {

/// Thrown when a computation fails for numerical reasons that a caller may
/// want to distinguish from bad arguments: a non-Hurwitz system matrix, a
/// singular Lyapunov system, a quadrature that cannot reach its tolerance.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace swarm
