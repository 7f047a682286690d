#pragma once

#include <string>
#include <vector>

#include "positroids/lediagram.hpp"
#include "positroids/linalg.hpp"
#include "positroids/perm.hpp"
#include "positroids/subset.hpp"

namespace positroids {

enum class VertexColor { Black, White, BoundaryVertex };

// Disk-embedded bicolored graph with an explicit rotation system.
// Vertices 0..n-1 are the boundary vertices (labels 1..n clockwise), each of
// degree one; the rest are internal and colored.
class PlabicGraph {
 public:
  PlabicGraph(int n_boundary, std::vector<VertexColor> colors,
              std::vector<std::pair<int, int>> edges,
              std::vector<std::vector<int>> rotations);

  int n() const { return n_; }
  int vertex_count() const { return int(colors_.size()); }
  int edge_count() const { return int(edges_.size()); }
  VertexColor color(int v) const { return colors_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  bool is_boundary(int v) const { return v < n_; }

  int degree(int v) const { return int(rot_[v].size()); }
  int edge_other(int e, int v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }

  std::string to_dot() const;

 private:
  int n_;
  std::vector<VertexColor> colors_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> rot_;  // edge ids, clockwise per vertex
};

// reduced plabic graph G(D) of a Le-diagram
PlabicGraph from_lediagram(const LeDiagram& d);

// decorated trip permutation: maximal right turns at black vertices, maximal
// left turns at white ones; lollipop fixed points keep the lollipop color
DecoratedPermutation trip_permutation(const PlabicGraph& g);

// #edges - #black - sum over white (deg - 1)
int k_statistic(const PlabicGraph& g);

// each orientation is a per-edge flag: true = directed first->second
std::vector<std::vector<bool>> perfect_orientations(const PlabicGraph& g);
Mask source_set(const PlabicGraph& g, const std::vector<bool>& orientation);
// distinct source sets over all perfect orientations; NotOrientable if none
std::vector<Mask> bases_via_orientations(const PlabicGraph& g);

bool is_forest(const PlabicGraph& g);
bool is_tree(const PlabicGraph& g);
int connected_components(const PlabicGraph& g);

// Exact boundary-measurement matrix of the network N(D).
struct NetworkMatrix {
  std::vector<int> sources;  // s_1 < ... < s_k (row labels)
  MatQ mat;                  // k x n
};

// weights: one positive rational per horizontal edge of N(D), ordered by row
// top to bottom and within a row east to west
NetworkMatrix network_matrix(const LeDiagram& d, const std::vector<Rat>& weights);
int horizontal_edge_count(const LeDiagram& d);

// bases of the positroid of D: supports of nonvanishing maximal minors (the
// all-ones specialization is positive exactly on bases)
std::vector<Mask> bases_via_minors(const LeDiagram& d);

}  // namespace positroids
