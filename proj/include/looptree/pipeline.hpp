#pragma once

#include <utility>
#include <vector>

#include "looptree/assembly.hpp"
#include "looptree/krylov.hpp"
#include "looptree/treesolve.hpp"

namespace looptree {

struct SolveReport {
  int n_patches = 0;
  int n_edges = 0;        // interior edges N
  int n_tree = 0;         // N_t = N_p - 1
  int n_loops = 0;        // N_l = interior vertices
  double compatibility_residual = 0.0;
  int projection_iterations = 0;
  double projection_residual = 0.0;      // relative, from the iterative solver
  double loop_projection_norm = 0.0;     // max_i |<L_i, D>| after removal
  double field_gram_norm = 0.0;          // ||D|| in the edge Gram norm
  double stage1_residual = 0.0;          // max |div D - V_rho| off the root
  double stage2_residual = 0.0;          // max tree-edge defect of the gradient solve
  double setup_seconds = 0.0;            // topology, decomposition, Gram assembly
  double stage1_seconds = 0.0;           // divergence tree solve
  double removal_seconds = 0.0;          // projection rhs + iterative solve + subtraction
  double stage2_seconds = 0.0;           // potential rhs + gradient tree solve
};

struct PoissonSolution {
  FieldCoeffs potentials;   // per-patch potential coefficients
  FieldCoeffs edge_coeffs;  // cleaned displacement-field coefficients
  SolveReport report;
};

// Full two-step solve: divergence tree solve, loop-space projection and
// removal, then the transposed tree solve anchored at the reference point.
PoissonSolution solve_poisson(const TriMesh& mesh, const ProblemSpec& spec,
                              const IterSettings& settings, KrylovMethod method,
                              int tree_root = 0);

// Projects a tree-expanded field onto the loop space and subtracts the loop
// component. Patch-wise divergence is untouched (loops are divergence free).
std::pair<FieldCoeffs, IterStats> remove_divergence_free(
    const FieldCoeffs& t, const LoopSet& loops, const SparseMatrix& loop_gram,
    const SparseMatrix& edge_gram, const DualTree& tree, const EdgeBasisSet& basis,
    const IterSettings& settings, KrylovMethod method);

// Piecewise-constant lookup; ties on shared edges go to the lower patch
// index. Throws LocationError for points outside the mesh.
std::vector<double> evaluate_potential(const FieldCoeffs& potentials, const TriMesh& mesh,
                                       const std::vector<Vec2>& points);

// Per-patch divergence of an edge-coefficient field (the audit used to check
// stage 1 and the removal step).
std::vector<double> patch_divergence(const EdgeBasisSet& basis, const FieldCoeffs& edge_coeffs,
                                     int n_patches);

}  // namespace looptree
