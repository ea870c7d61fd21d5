#pragma once

#include <vector>

#include "looptree/mesh.hpp"

namespace looptree {

// One edge-based vector basis function per interior edge: linear on each of
// the two adjacent patches, unit normal flux across the shared edge, zero
// normal flux across all other edges. Divergence is +length/area on the plus
// patch and -length/area on the minus patch.
struct EdgeBasisSet {
  struct Function {
    int edge = -1;         // global edge index in the topology
    int a = -1, b = -1;    // edge endpoints
    int p_plus = -1, p_minus = -1;
    Vec2 free_plus, free_minus;   // opposite vertex on each side
    double length = 0.0;
    double scale_plus = 0.0;      // length / (2 * area_plus)
    double scale_minus = 0.0;
    double div_plus = 0.0;        // +length / area_plus
    double div_minus = 0.0;       // -length / area_minus
  };

  std::vector<Function> functions;            // ordinal = interior-edge ordinal
  std::vector<std::vector<int>> patch_functions;  // per patch, supporting ordinals

  int size() const { return static_cast<int>(functions.size()); }

  // Value of basis function k at a point inside the given patch (zero vector
  // when the patch is not in its support).
  Vec2 evaluate(int k, int patch, Vec2 p) const {
    const Function& f = functions[k];
    if (patch == f.p_plus) return (p - f.free_plus) * f.scale_plus;
    if (patch == f.p_minus) return (f.free_minus - p) * f.scale_minus;
    return {};
  }

  double divergence_on(int k, int patch) const {
    const Function& f = functions[k];
    if (patch == f.p_plus) return f.div_plus;
    if (patch == f.p_minus) return f.div_minus;
    return 0.0;
  }
};

EdgeBasisSet build_edge_basis(const MeshTopology& topology);

// Breadth-first spanning tree of the dual graph. Non-root patches appear in
// bfs_order in discovery order; tree edge j connects bfs_order[j+1] to its
// parent, which fixes the column ordering of the divergence matrix.
struct DualTree {
  int root = 0;
  std::vector<int> parent;        // -1 at root
  std::vector<int> parent_edge;   // basis ordinal of the edge to the parent
  std::vector<int> bfs_order;     // size N_p, root first
  std::vector<int> tree_edges;    // basis ordinals, size N_p - 1
  std::vector<int> cotree_edges;  // basis ordinals not in the tree
  std::vector<int> tree_index;    // basis ordinal -> tree column, or -1

  int n_tree() const { return static_cast<int>(tree_edges.size()); }
};

DualTree build_dual_tree(const MeshTopology& topology, int root);

// One divergence-free loop function per interior vertex, stored as its
// coefficient list in the edge basis. Constructed as the 90-degree rotation
// of the vertex hat-function gradient, so each coefficient is +-1/length on
// the edges meeting the vertex and the patch-wise divergence vanishes
// identically.
struct LoopSet {
  std::vector<int> vertices;  // owning interior vertex per loop
  std::vector<std::vector<std::pair<int, double>>> coefficients;  // (ordinal, coeff), sorted

  int size() const { return static_cast<int>(vertices.size()); }
  double coefficient(int loop, int basis_ordinal) const;
};

LoopSet build_loop_set(const MeshTopology& topology, const EdgeBasisSet& basis);

enum class CoeffRole { TreeEdges, Loops, Edges, PatchPotentials, PatchCharges };

// Coefficient vector tagged with the basis it indexes.
struct FieldCoeffs {
  CoeffRole role = CoeffRole::Edges;
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
};

// Expands tree-edge coefficients into a full edge-coefficient vector with
// zeros on the cotree.
FieldCoeffs scatter_tree_coeffs(const FieldCoeffs& t, const DualTree& tree, int n_edges);

}  // namespace looptree
