#pragma once

#include <vector>

#include "looptree/assembly.hpp"
#include "looptree/decomposition.hpp"

namespace looptree {

struct DivergenceSolve {
  FieldCoeffs coeffs;          // tree-edge coefficients
  double root_residual = 0.0;  // equals -(sum of v), absorbed at the root row
};

// Direct O(N) solve of the divergence system: accumulates subtree sums in
// reverse breadth-first order; the flux on the edge from child c to its
// parent must carry the whole subtree charge. Throws IncompatibleChargeError
// when |sum v| > compat_tol * ||v||_1.
DivergenceSolve solve_divergence(const DualTree& tree, const EdgeBasisSet& basis,
                                 const std::vector<double>& v, double compat_tol);

// Direct O(N) solve of the transposed (gradient) system: fixes the root
// potential, propagates length * (nu_plus - nu_minus) = v_phi[edge] outward
// in breadth-first order, then shifts uniformly so the patch ref_patch takes
// ref_value exactly. Always consistent: the transposed system has one
// equation per tree edge and the constants in its null space.
FieldCoeffs solve_gradient(const DualTree& tree, const EdgeBasisSet& basis,
                           const std::vector<double>& v_phi, int ref_patch, double ref_value);

}  // namespace looptree
