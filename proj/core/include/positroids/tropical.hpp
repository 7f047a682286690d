#pragma once

#include <optional>
#include <string>
#include <vector>

#include "positroids/dissect.hpp"

namespace positroids {

enum class TropClass { None, Tropical, Positive };

// rational weight per k-subset of [n]; induces the regular subdivision D_P
class TropPluckerVector {
 public:
  TropPluckerVector(int k, int n, std::vector<Rat> values);  // colex order

  int k() const { return k_; }
  int n() const { return n_; }
  const Rat& at(Mask m) const;
  Rat& at(Mask m);
  const std::vector<Mask>& subsets() const { return subsets_; }
  const std::vector<Rat>& values() const { return values_; }

  std::string to_text() const;  // lines "i_1 i_2 ... i_k  p/q", colex order
  static TropPluckerVector from_text(const std::string& s);

 private:
  int k_, n_;
  std::vector<Mask> subsets_;  // colex
  std::vector<Rat> values_;
};

TropClass classify(const TropPluckerVector& p);

// tropicalized top-cell network: minimum path-family weight to each k-subset
TropPluckerVector sample_positive(int k, int n, std::uint64_t seed);

// regular subdivision induced by P: top cells of the lower hull projection
struct Subdivision {
  int k = 0, n = 0;
  std::vector<std::vector<Mask>> cells;  // top-dimensional cells, sorted
  std::vector<std::optional<DecoratedPermutation>> labels;  // when positroidal
  bool all_matroidal = false;
  bool all_positroidal = false;
  bool trivial() const { return cells.size() == 1; }
  // hypersimplex dissection when every cell is positroidal
  Dissection as_dissection() const;
};

Subdivision subdivision(const TropPluckerVector& p);

// secondary cone of a claimed subdivision of the hypersimplex
struct SecondaryCone {
  bool regular = false;    // nonempty relative interior
  int dim = -1;            // dimension modulo the n-dimensional lineality
  std::optional<TropPluckerVector> witness;  // P with D_P = the input
};

SecondaryCone secondary_cone(const Dissection& d);

// identical (in)equality pattern across all three-term relations
bool same_cone(const TropPluckerVector& p, const TropPluckerVector& q);

}  // namespace positroids
