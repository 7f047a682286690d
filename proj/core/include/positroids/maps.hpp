#pragma once

#include <optional>
#include <vector>

#include "positroids/linalg.hpp"
#include "positroids/perm.hpp"
#include "positroids/subset.hpp"

namespace positroids {

// (k+m) x n exact rational matrix with every maximal minor positive,
// certified on construction.
class PositiveMatrixZ {
 public:
  explicit PositiveMatrixZ(MatQ z);
  const MatQ& mat() const { return z_; }
  int rows() const { return z_.rows(); }
  int n() const { return z_.cols(); }

 private:
  MatQ z_;
};

// Z with rows (x_j^0, x_j^1, ...) at the nodes x_j = j
PositiveMatrixZ vandermonde_Z(int rows, int n);

// n x n matrix built from a generic (m/2) x n lambda; rank n - m/2
class QMatrix {
 public:
  QMatrix(const MatQ& lambda, int m);
  const MatQ& mat() const { return q_; }
  int n() const { return q_.cols(); }
  int m() const { return m_; }

 private:
  MatQ q_;
  int m_;
};

QMatrix q_matrix(const std::vector<Rat>& lambda, int m);  // m = 2 convenience
QMatrix q_matrix(const MatQ& lambda, int m);

// a point of S_pi: the network parameterization at the given positive weights
MatQ cell_point(const DecoratedPermutation& p, const std::vector<Rat>& weights);
MatQ random_cell_point(const DecoratedPermutation& p, RatRng& rng);

// rank of the Jacobian of (moment map) o (network parameterization) at a
// random positive rational point; equals n - #components, cross-asserted
int moment_image_dimension(const DecoratedPermutation& p, std::uint64_t seed = 1);

// rank of the Jacobian of chart coordinates of Z o parameterization
int z_image_dimension(const DecoratedPermutation& p, const PositiveMatrixZ& z,
                      std::uint64_t seed = 1);

// C (k + m/2) x n whose top m/2 rows are lambda; returns the bottom k rows of
// C . Q(lambda), a point of the T-dual cell
MatQ t_dual_point(const MatQ& c, const MatQ& lambda, int m = 2);
MatQ t_dual_point(const MatQ& c, const std::vector<Rat>& lambda);

// Plucker support of a full-rank k x n matrix
std::vector<Mask> plucker_support(const MatQ& a);
// all maximal minors weakly of one sign (after a possible global flip)
bool minors_uniform_sign(const MatQ& a);

}  // namespace positroids
