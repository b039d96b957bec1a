#ifndef OCTIC_ERRORS_HPP
#define OCTIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace octic {

/// Thrown when an input violates a documented precondition. The message
/// names the offending field.
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when an iterative routine fails to converge (bad bracket,
/// iteration cap, node-count mismatch).
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace octic

#endif  // OCTIC_ERRORS_HPP
