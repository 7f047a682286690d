#pragma once

#include <optional>
#include <vector>

#include "positroids/dd.hpp"
#include "positroids/linalg.hpp"
#include "positroids/positroid.hpp"

namespace positroids {

struct RationalPoint {
  std::vector<Rat> x;
  bool operator==(const RationalPoint&) const = default;
};

// Positroid polytope with both descriptions: vertex set {e_B} and the
// cyclic-interval H-system (sum over [i..j] of x_l <= r_ij together with
// sum x = k; the 0/1 bounds are interval rows themselves).
class PositroidPolytope {
 public:
  explicit PositroidPolytope(Positroid m);

  const Positroid& positroid() const { return m_; }
  int n() const { return m_.n(); }
  int k() const { return m_.k(); }
  const std::vector<std::vector<int>>& interval_ranks() const { return ranks_; }
  std::vector<RationalPoint> vertices() const;

  int dim() const;  // affine dimension (= n - #components)

 private:
  Positroid m_;
  std::vector<std::vector<int>> ranks_;
};

enum class Strictness { Boundary, Interior };

bool contains(const PositroidPolytope& p, const RationalPoint& x, Strictness s);

// exact normalized (lattice) volume of conv{e_B}; 0 unless dim = n-1
Rat normalized_volume(int n, const std::vector<Mask>& vertices);
Rat normalized_volume(const PositroidPolytope& p);
Rat hypersimplex_volume(int k, int n);  // Delta_{k,n}

// relative interiors disjoint? exact LP over convex-combination weights
bool interiors_disjoint(const PositroidPolytope& p, const PositroidPolytope& q);

struct IntersectionFace {
  int dim = -1;  // -1: empty intersection
  std::vector<RationalPoint> vertices;
  bool integral = true;              // all vertices are 0/1 points
  std::optional<Positroid> face;     // set when integral and positroidal
  std::optional<DecoratedPermutation> label;
  bool label_loopless = false;
};

IntersectionFace intersection_face(const PositroidPolytope& p,
                                   const PositroidPolytope& q);

// squared-Plucker weighted average of the indicator vectors e_I
RationalPoint moment_map(const MatQ& a);

}  // namespace positroids
