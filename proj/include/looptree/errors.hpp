#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace looptree {

// Base class for everything this library throws on purpose.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed mesh input; message names the offending line.
struct ParseError : SolverError {
  using SolverError::SolverError;
};

// Non-manifold edges, disconnected dual graph, duplicate triangles, ...
struct TopologyError : SolverError {
  using SolverError::SolverError;
};

struct ArgumentError : SolverError {
  using SolverError::SolverError;
};

// Point outside the mesh (sources, reference point, evaluation).
struct LocationError : SolverError {
  using SolverError::SolverError;
};

// Total charge does not balance the prescribed boundary flux.
struct IncompatibleChargeError : SolverError {
  IncompatibleChargeError(const std::string& msg, double charge_sum)
      : SolverError(msg), sum(charge_sum) {}
  double sum;
};

// Iterative solver hit the iteration cap before reaching tolerance.
struct ConvergenceError : SolverError {
  ConvergenceError(const std::string& msg, std::vector<double> history)
      : SolverError(msg), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

// CG fed a matrix that is not symmetric positive definite.
struct MatrixPropertyError : SolverError {
  using SolverError::SolverError;
};

}  // namespace looptree
