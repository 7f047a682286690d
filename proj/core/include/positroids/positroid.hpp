#pragma once

#include <optional>
#include <vector>

#include "positroids/perm.hpp"
#include "positroids/subset.hpp"

namespace positroids {

// Basis family of a positroid with rank and cyclic-interval data.
class Positroid {
 public:
  Positroid(int n, int k, std::vector<Mask> bases,
            std::optional<DecoratedPermutation> label = std::nullopt,
            bool validate_exchange = false);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Mask>& bases() const { return bases_; }
  bool has_basis(Mask m) const;
  const std::optional<DecoratedPermutation>& label() const { return label_; }

  int rank(Mask subset) const;  // max over bases |B & S|
  // r[i][j] = rank of the cyclic interval [i..j], 1-indexed
  std::vector<std::vector<int>> cyclic_interval_ranks() const;

  bool operator==(const Positroid& o) const {
    return n_ == o.n_ && k_ == o.k_ && bases_ == o.bases_;
  }

 private:
  int n_, k_;
  std::vector<Mask> bases_;  // sorted
  std::optional<DecoratedPermutation> label_;
};

// positroid of the cell S_pi, via exact network-matrix minors
Positroid from_cell(const DecoratedPermutation& p);

int connected_components(const Positroid& m);
int polytope_dimension(const Positroid& m);  // n - #components

// exchange-axiom test
bool is_matroid_exchange(int n, const std::vector<Mask>& bases);
// edge test: every edge of the basis polytope is parallel to some e_i - e_j
bool is_matroid_edges(int n, const std::vector<Mask>& bases);

// bases of the positroid envelope: subsets obeying all cyclic interval ranks
std::vector<Mask> envelope_bases(int n, int k,
                                 const std::vector<std::vector<int>>& interval_ranks);

// two independent positroid tests (two-dimensional-face search / envelope)
bool is_positroid_via_faces(const Positroid& m);
bool is_positroid_via_envelope(const Positroid& m);

Positroid dual(const Positroid& m);

// recover the decorated permutation of a basis family known to be a positroid
DecoratedPermutation label_of(const Positroid& m);

}  // namespace positroids
