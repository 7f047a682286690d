#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace positroids {

// k-subsets of [1..n] as bitmasks; bit (i-1) set means i is in the subset.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, int i) { return (m >> (i - 1)) & 1u; }
inline Mask with(Mask m, int i) { return m | (Mask(1) << (i - 1)); }
inline Mask without(Mask m, int i) { return m & ~(Mask(1) << (i - 1)); }
inline Mask full_mask(int n) { return (Mask(1) << n) - 1; }

std::vector<int> mask_to_vec(Mask m);
Mask vec_to_mask(const std::vector<int>& v);

// all k-subsets of [1..n] in colex order (as masks this is increasing order)
std::vector<Mask> all_subsets(int n, int k);

// cyclic interval [i..j] of [1..n] (wrapping when j < i); [i..i] = {i}
Mask cyclic_interval(int n, int i, int j);

long long binom(int n, int k);

}  // namespace positroids
