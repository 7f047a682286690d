#pragma once

#include <vector>

#include "positroids/linalg.hpp"
#include "positroids/rational.hpp"

namespace positroids {

// Double description for small exact cones and polytopes.

struct Cone {
  std::vector<std::vector<Rat>> rays;
  std::vector<std::vector<Rat>> lineality;
};

// Extreme rays + lineality of { x : a.x >= 0 for all a in halfspaces }.
Cone dual_description(const std::vector<std::vector<Rat>>& halfspaces, int dim);

struct Facet {
  std::vector<Rat> a;  // a.x <= b valid, tight on the facet
  Rat b;
  std::vector<int> tight;  // indices of input points lying on the facet
};

struct HullDescription {
  int dim;                                   // affine dimension of the hull
  std::vector<std::vector<Rat>> eq_a;        // affine hull: a.x = b
  std::vector<Rat> eq_b;
  std::vector<Facet> facets;                 // facet-defining inequalities
};

// Facets and affine hull of conv(points).
HullDescription facets_of(const std::vector<std::vector<Rat>>& points);

struct VertexEnumeration {
  bool bounded = true;                       // false when recession rays exist
  std::vector<std::vector<Rat>> vertices;
};

// Vertices of { x : ineq_a.x <= ineq_b, eq_a.x = eq_b }.
VertexEnumeration vertices_of(const std::vector<std::vector<Rat>>& ineq_a,
                              const std::vector<Rat>& ineq_b,
                              const std::vector<std::vector<Rat>>& eq_a,
                              const std::vector<Rat>& eq_b);

}  // namespace positroids
