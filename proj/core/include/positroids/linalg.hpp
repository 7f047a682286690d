#pragma once

#include <cassert>
#include <vector>

#include "positroids/rational.hpp"

namespace positroids {

// Dense exact-rational matrix, row major. Small sizes only.
class MatQ {
 public:
  MatQ() : rows_(0), cols_(0) {}
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  MatQ transposed() const;
  MatQ operator*(const MatQ& o) const;

  // Minor using the given rows and columns, in the order listed.
  MatQ submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  Rat det() const;          // square only, Gaussian elimination over Q
  int rank() const;
  // -1 if the points (rows) are empty; else dim of their affine hull.
  int affine_rank_of_rows() const;

  // Basis of the (right) null space, as rows of the returned matrix.
  MatQ nullspace() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Rank of an arbitrary row set given as vectors.
int rank_of(const std::vector<std::vector<Rat>>& rows);

}  // namespace positroids
