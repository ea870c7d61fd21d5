#pragma once

#include <vector>

#include "looptree/sparse.hpp"

namespace looptree {

struct IterSettings {
  double tolerance = 0.01;   // relative residual ||b - Ax|| / ||b||
  int max_iterations = 10000;
  int restart = 60;          // GMRES restart length
};

struct IterStats {
  int iterations = 0;
  double final_residual = 0.0;  // relative to ||b||
  std::vector<double> residual_history;  // absolute norms, one per iteration
  bool converged = true;
};

enum class KrylovMethod { CG, GMRES };

// Conjugate gradients with zero start vector. Throws MatrixPropertyError on
// nonpositive curvature (non-SPD input) and ConvergenceError past the
// iteration cap.
std::vector<double> cg_solve(const SparseMatrix& a, const std::vector<double>& b,
                             const IterSettings& settings, IterStats* stats = nullptr);

// Restarted GMRES with Givens rotations, zero start vector.
std::vector<double> gmres_solve(const SparseMatrix& a, const std::vector<double>& b,
                                const IterSettings& settings, IterStats* stats = nullptr);

std::vector<double> krylov_solve(KrylovMethod method, const SparseMatrix& a,
                                 const std::vector<double>& b, const IterSettings& settings,
                                 IterStats* stats = nullptr);

}  // namespace looptree
