#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvem {

// Parameter outside a curve's evaluation domain, invalid degree, etc.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structural mesh defect (open cycle, dangling edge, bad incidence).
class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mesh-file schema violation; 'where' is a JSON-pointer-style location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// A local solve (edge mass, bulk mass, projector system) fell below the
// reciprocal-condition guard; names the offending element.
class ConditioningError : public std::runtime_error {
 public:
  ConditioningError(int element, const std::string& what)
      : std::runtime_error("element " + std::to_string(element) + ": " + what),
        element_(element) {}
  int element() const { return element_; }

 private:
  int element_;
};

// Iterative solver failed to reach tolerance; carries the residual history.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residual_history() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

}  // namespace curvem
