#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace positroids {

enum class FixedPointColor { Loop, Coloop };

// Bijection of [1..n] with colored fixed points; windows are 1-indexed and
// all modular arithmetic lands back in [1..n].
class DecoratedPermutation {
 public:
  DecoratedPermutation(std::vector<int> window,
                       std::map<int, FixedPointColor> colors);

  static DecoratedPermutation identity(int n, FixedPointColor color);

  int n() const { return int(window_.size()); }
  int operator()(int i) const { return window_[i - 1]; }
  const std::vector<int>& window() const { return window_; }
  const std::map<int, FixedPointColor>& colors() const { return colors_; }

  bool is_fixed(int i) const { return window_[i - 1] == i; }
  bool is_loop(int i) const;
  bool is_coloop(int i) const;
  bool loopless() const;
  bool coloopless() const;

  int preimage(int value) const;  // pi^{-1}(value)

  // positions i with pi(i) < i, or coloop fixed points; |.| = k
  std::vector<int> anti_excedances() const;
  int k() const { return int(anti_excedances().size()); }

  // values v with pi^{-1}(v) > v, or coloops; these are the vertical steps
  // of the Le-diagram boundary path
  std::vector<int> anti_excedance_values() const;

  auto operator<=>(const DecoratedPermutation&) const = default;

  std::string to_text() const;                     // "(4,1,2,5_,3~)" style
  static DecoratedPermutation from_text(const std::string& s);

 private:
  std::vector<int> window_;
  std::map<int, FixedPointColor> colors_;
};

// Window of n integers with i <= w[i] <= i+n, extended by w[i+n] = w[i]+n.
class AffinePermutation {
 public:
  explicit AffinePermutation(std::vector<int> window);

  int n() const { return int(window_.size()); }
  int operator()(int i) const;  // defined for all integers via periodicity
  const std::vector<int>& window() const { return window_; }
  int k() const;

  auto operator<=>(const AffinePermutation&) const = default;

 private:
  std::vector<int> window_;
};

AffinePermutation to_affine(const DecoratedPermutation& p);
DecoratedPermutation from_affine(const AffinePermutation& a);

// pi_hat(i) = pi(i-1); new fixed points are loops. Requires loopless input.
DecoratedPermutation t_dual(const DecoratedPermutation& p);
// inverse of t_dual; new fixed points are coloops. Requires coloopless input.
DecoratedPermutation t_dual_inverse(const DecoratedPermutation& p);

// pi_hat(i) = pi(i - m/2) on affine windows; requires pi(i) >= i + m/2.
AffinePermutation t_dual_general_m(const AffinePermutation& p, int m);

// sigma^t with (sigma^t pi)(i) = pi(i+t) - t; colors carried along.
DecoratedPermutation cyclic_shift(const DecoratedPermutation& p, int t);

// window inverted, loop/coloop colors swapped
DecoratedPermutation inverse(const DecoratedPermutation& p);

// (U~ pi)(i) = pi^{-1}(i-1) - 1; created fixed points are loops.
DecoratedPermutation parity_dual(const DecoratedPermutation& p);
// Galashin-Lam convention (U pi)(i) = pi^{-1}(i+k) + (n-k-2).
DecoratedPermutation parity_dual_GL(const DecoratedPermutation& p, int k);

bool is_SIF(const DecoratedPermutation& p);
// number of minimal-by-inclusion cyclic intervals I with pi(I) = I
int cyclic_interval_components(const DecoratedPermutation& p);

// all decorated permutations of [n] (each fixed point in both colors)
std::vector<DecoratedPermutation> enumerate_all_cells(int n);
// only those with the given anti-excedance count
std::vector<DecoratedPermutation> enumerate_cells(int n, int k);

}  // namespace positroids
