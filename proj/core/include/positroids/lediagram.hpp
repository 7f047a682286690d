#pragma once

#include <string>
#include <vector>

#include "positroids/perm.hpp"

namespace positroids {

// 0/+ filling of a Young diagram in a k x (n-k) box avoiding the
// Le-configuration; S_D has dimension = number of plus entries.
class LeDiagram {
 public:
  // shape: exactly k weakly decreasing row lengths (zeros allowed);
  // fill[r][c] true = plus, for c < shape[r]
  LeDiagram(int k, int n, std::vector<int> shape,
            std::vector<std::vector<bool>> fill);

  int k() const { return k_; }
  int n() const { return n_; }
  int width() const { return n_ - k_; }
  const std::vector<int>& shape() const { return shape_; }
  bool plus(int r, int c) const { return fill_[r][c]; }  // 0-indexed
  const std::vector<std::vector<bool>>& fill() const { return fill_; }

  int dimension() const;

  // boundary-path labels: row r (0-indexed) <-> vertical step, column c
  // (0-indexed from the left) <-> horizontal step at its bottom
  int row_label(int r) const { return (r + 1) + width() - shape_[r]; }
  int col_label(int c) const { return column_height(c) + (width() - (c + 1)) + 1; }
  int column_height(int c) const;

  bool operator==(const LeDiagram&) const = default;

  std::string to_text() const;  // header "k n", then one 0/+ row per line
  static LeDiagram from_text(const std::string& s);

 private:
  int k_, n_;
  std::vector<int> shape_;
  std::vector<std::vector<bool>> fill_;
};

// pipe-dream trip permutation of the diagram
DecoratedPermutation to_permutation(const LeDiagram& d);

// unique diagram with to_permutation(d) == p
LeDiagram from_permutation(const DecoratedPermutation& p);

int dimension_of_cell(const DecoratedPermutation& p);

// recursion maps on labels (hypersimplex side)
DecoratedPermutation i_pre(const DecoratedPermutation& p);
DecoratedPermutation i_inc(const DecoratedPermutation& p);
LeDiagram i_pre_diagram(const LeDiagram& d);
LeDiagram i_inc_diagram(const LeDiagram& d);

// recursion maps on labels (amplituhedron side)
DecoratedPermutation iota_pre(const DecoratedPermutation& p);
DecoratedPermutation iota_inc(const DecoratedPermutation& p);
LeDiagram iota_pre_diagram(const LeDiagram& d);

}  // namespace positroids
