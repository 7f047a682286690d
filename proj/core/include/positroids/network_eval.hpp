#pragma once

#include <functional>
#include <map>
#include <vector>

#include "positroids/lediagram.hpp"

namespace positroids {

// Boundary-measurement entries of the network N(D) over any commutative ring
// with unit (used with exact rationals and with dual numbers for Jacobians).
// weights are ordered by row top to bottom, within a row east to west.
// Entry (r, j) of the result is the signed sum over directed paths from the
// r-th source to boundary edge j+1.
template <typename T>
std::vector<std::vector<T>> network_entries(const LeDiagram& d,
                                            const std::vector<T>& weights) {
  const int n = d.n(), k = d.k();
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> cell;
  std::vector<T> in_weight;
  {
    size_t widx = 0;
    for (int r = 0; r < k; ++r)
      for (int c = d.shape()[r] - 1; c >= 0; --c)
        if (d.plus(r, c)) {
          id[{r, c}] = int(cell.size());
          cell.emplace_back(r, c);
          in_weight.push_back(weights[widx++]);
        }
  }
  std::vector<int> sources;
  for (int r = 0; r < k; ++r) sources.push_back(d.row_label(r));

  std::vector<std::map<int, T>> memo(cell.size());
  std::vector<bool> done(cell.size(), false);
  std::function<const std::map<int, T>&(int)> paths =
      [&](int v) -> const std::map<int, T>& {
    if (done[v]) return memo[v];
    done[v] = true;
    auto [r, c] = cell[v];
    std::map<int, T>& out = memo[v];
    int south = -1;
    for (int r2 = r + 1; r2 < k && d.shape()[r2] > c; ++r2)
      if (d.plus(r2, c)) {
        south = id.at({r2, c});
        break;
      }
    if (south >= 0) {
      for (const auto& [sink, val] : paths(south)) {
        auto it = out.find(sink);
        if (it == out.end())
          out.emplace(sink, val);
        else
          it->second = it->second + val;
      }
    } else {
      int sink = d.col_label(c);
      auto it = out.find(sink);
      if (it == out.end())
        out.emplace(sink, T(1));
      else
        it->second = it->second + T(1);
    }
    int west = -1;
    for (int c2 = c - 1; c2 >= 0; --c2)
      if (d.plus(r, c2)) {
        west = id.at({r, c2});
        break;
      }
    if (west >= 0) {
      const T& wgt = in_weight[west];
      for (const auto& [sink, val] : paths(west)) {
        T term = wgt * val;
        auto it = out.find(sink);
        if (it == out.end())
          out.emplace(sink, term);
        else
          it->second = it->second + term;
      }
    }
    return out;
  };

  std::vector<std::vector<T>> mat(k, std::vector<T>(n, T(0)));
  for (int r = 0; r < k; ++r) {
    int s = sources[r];
    mat[r][s - 1] = T(1);
    int entry = -1;
    for (int c = d.shape()[r] - 1; c >= 0; --c)
      if (d.plus(r, c)) {
        entry = id.at({r, c});
        break;
      }
    if (entry < 0) continue;
    const T& w0 = in_weight[entry];
    for (const auto& [sink, val] : paths(entry)) {
      int between = 0;
      for (int s2 : sources)
        if (s < s2 && s2 < sink) ++between;
      T term = w0 * val;
      if (between % 2) term = T(0) - term;
      mat[r][sink - 1] = mat[r][sink - 1] + term;
    }
  }
  return mat;
}

}  // namespace positroids
