#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "looptree/geometry.hpp"

namespace looptree {

// Triangular mesh with all triangles stored counterclockwise.
struct TriMesh {
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> vertex_markers;           // optional, empty or one per vertex
  std::vector<double> triangle_attributes;   // optional, empty or one per triangle

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_triangles() const { return static_cast<int>(triangles.size()); }

  double signed_area(int t) const {
    const auto& tri = triangles[t];
    return 0.5 * cross2(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
  }

  Vec2 centroid(int t) const {
    const auto& tri = triangles[t];
    return (vertices[tri[0]] + vertices[tri[1]] + vertices[tri[2]]) * (1.0 / 3.0);
  }
};

// Reads a Triangle-format .node/.ele pair. Accepts 0- and 1-based numbering
// (detected from the first data line of each file), '#' comments, and the
// usual attribute/marker columns. Clockwise triangles are flipped.
TriMesh parse_triangle_files(const std::string& node_text, const std::string& ele_text);

// Uniform [0,1]^2 grid, n x n cells, each split along the lower-left to
// upper-right diagonal; 2n^2 triangles.
TriMesh generate_structured_square(int n);

// Same construction mapped onto an axis-aligned rectangle with nx x ny cells.
TriMesh generate_structured_rectangle(int nx, int ny, Vec2 lo, Vec2 hi);

struct MeshTopology {
  struct Edge {
    int a = -1, b = -1;          // vertex ids, a < b
    int p_plus = -1;             // lower adjacent patch index
    int p_minus = -1;            // higher adjacent patch, -1 on the boundary
    double length = 0.0;
  };

  TriMesh mesh;
  std::vector<Edge> edges;            // sorted by (a, b)
  std::vector<int> interior_edges;    // indices into edges
  std::vector<int> boundary_edges;
  std::vector<double> patch_area;
  std::vector<char> vertex_interior;  // 1 when incident to no boundary edge
  std::vector<int> interior_vertices; // ascending
  // Dual (patch-adjacency) graph: per patch, (neighbor patch, interior-edge
  // ordinal) pairs sorted by neighbor index.
  std::vector<std::vector<std::pair<int, int>>> dual_adjacency;

  int n_patches() const { return mesh.n_triangles(); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  int n_interior_edges() const { return static_cast<int>(interior_edges.size()); }
  int n_interior_vertices() const { return static_cast<int>(interior_vertices.size()); }
};

// Deduplicates edges, classifies interior vs boundary, computes areas and
// lengths, and builds the dual graph. Throws TopologyError on non-manifold
// edges, duplicate triangles, or a disconnected dual graph.
MeshTopology build_topology(const TriMesh& mesh);

// Lowest-index patch whose closed triangle contains p, or -1.
int locate_patch(const TriMesh& mesh, Vec2 p);

}  // namespace looptree
