#pragma once

#include <functional>
#include <vector>

#include "looptree/assembly.hpp"
#include "looptree/mesh.hpp"
#include "looptree/sparse.hpp"

namespace looptree {

// Independent references used to validate the pipeline: a nodal P1 Galerkin
// solver with dense factorization, dense linear algebra for small assembled
// systems, and the closed-form test problem.

struct AnalyticCase {
  ProblemSpec spec;
  std::function<double(Vec2)> exact;
};

// phi(x,y) = (cos(pi x) + cos(pi y)) / pi on the unit square, homogeneous
// Neumann data, rho = pi cos(pi x) + pi cos(pi y), reference 2/pi at (0,0).
AnalyticCase analytic_case();

// Dense direct solve (row-major input). Square systems use full-pivot LU and
// reject singular matrices; rectangular systems return the minimum-norm
// least-squares solution.
std::vector<double> dense_solve(const std::vector<double>& a_row_major, int rows, int cols,
                                const std::vector<double>& b);

// Smallest eigenvalue of a symmetric matrix (SPD checks in tests).
double smallest_eigenvalue_symmetric(const std::vector<double>& a_row_major, int n);

struct FemOptions {
  // Represent each point charge as a uniform density over its containing
  // patch (matching the pulse discretization) instead of a nodal delta load.
  bool patch_uniform_point_sources = true;
};

// Nodal P1 Galerkin solve of the Neumann problem with one node pinned and the
// result shifted so the interpolated value at the reference point equals the
// reference value. Dense factorization; refuses meshes beyond ~5000 vertices.
std::vector<double> fem_reference_solve(const TriMesh& mesh, const ProblemSpec& spec,
                                        const FemOptions& options = {});

// Average of the nodal solution over each patch (equals the centroid value
// for linear elements); the quantity comparable with pulse potentials.
std::vector<double> patch_average(const TriMesh& mesh, const std::vector<double>& nodal);

// Sparse pinned stiffness system for the iterative FEM reference used by the
// complexity benchmark.
struct FemSystem {
  SparseMatrix matrix;       // pinned at node 0
  std::vector<double> rhs;
};

FemSystem fem_assemble_sparse(const TriMesh& mesh, const ProblemSpec& spec,
                              const FemOptions& options = {});

}  // namespace looptree
