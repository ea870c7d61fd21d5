#pragma once

#include <functional>
#include <vector>

#include "looptree/decomposition.hpp"
#include "looptree/sparse.hpp"

namespace looptree {

struct PointSource {
  Vec2 position;
  double charge = 0.0;  // charge per unit length of the line source
};

// Electrostatic problem description: constant permittivity, charge sources
// (a density field and/or point line charges), Neumann data on the boundary,
// and the reference point pinning the potential.
struct ProblemSpec {
  double epsilon_r = 1.0;
  double epsilon_0 = 1.0;  // normalized units by default
  std::function<double(Vec2)> density;    // may be empty
  std::vector<PointSource> point_sources;
  std::function<double(Vec2)> neumann_g;  // d(phi)/dn on the boundary; empty = 0
  Vec2 reference_point{0.0, 0.0};
  double reference_value = 0.0;
  // Accepted relative charge imbalance |sum V_i| / ||V||_1. Quadrature of
  // analytic densities leaves an O(h^2) defect, so problem configs may widen
  // this.
  double compat_tol = 1e-8;

  double epsilon() const { return epsilon_r * epsilon_0; }
};

// Divergence matrix tested with patch indicators: N_p x N_t, one column per
// tree edge holding +length in the plus-patch row and -length in the minus-
// patch row. Columns sum to zero (charge conservation).
SparseMatrix assemble_divergence_matrix(const DualTree& tree, const EdgeBasisSet& basis,
                                        int n_patches);

struct ChargeRhs {
  std::vector<double> values;    // per patch: integral of rho minus boundary outflux
  double compatibility = 0.0;    // sum of values; must vanish for solvability
};

// Integrates the density with the 3-point rule, drops each point charge into
// its containing patch, and subtracts the prescribed boundary outflux
// (n.D = -eps_r eps_0 g). Throws LocationError for sources outside the mesh.
ChargeRhs assemble_charge_rhs(const ProblemSpec& spec, const MeshTopology& topology);

// Gram matrix of the edge basis, 3-point quadrature per patch (exact for the
// quadratic integrands). Template parameter-free: pass a different rule for
// the exactness cross-check.
SparseMatrix assemble_edge_gram(const EdgeBasisSet& basis, const MeshTopology& topology);
SparseMatrix assemble_edge_gram_rule7(const EdgeBasisSet& basis, const MeshTopology& topology);

// Gram matrix of the loop basis, assembled by evaluating each loop from its
// stored edge-basis coefficients at the quadrature points. Equals the
// interior-vertex block of the nodal P1 stiffness matrix.
SparseMatrix assemble_loop_gram(const LoopSet& loops, const EdgeBasisSet& basis,
                                const MeshTopology& topology);
SparseMatrix assemble_loop_gram_rule7(const LoopSet& loops, const EdgeBasisSet& basis,
                                      const MeshTopology& topology);

// Projection of an edge-coefficient field onto every loop:
// result[i] = integral of L_i . (sum_e coeffs_e f_e).
std::vector<double> loop_projection(const LoopSet& loops, const SparseMatrix& edge_gram,
                                    const std::vector<double>& edge_coeffs);

// Right-hand side of the loop projection system for a tree-coefficient field.
std::vector<double> assemble_loop_projection_rhs(const LoopSet& loops, const DualTree& tree,
                                                 const FieldCoeffs& t,
                                                 const SparseMatrix& edge_gram);

// Right-hand side of the potential stage, one entry per tree edge:
// (1/(eps_r eps_0)) * integral of T_i . D for the cleaned field D.
std::vector<double> assemble_potential_rhs(const DualTree& tree, const SparseMatrix& edge_gram,
                                           const FieldCoeffs& d, const ProblemSpec& spec);

}  // namespace looptree
