#include "positroids/lediagram.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

#include "positroids/rational.hpp"

namespace positroids {

LeDiagram::LeDiagram(int k, int n, std::vector<int> shape,
                     std::vector<std::vector<bool>> fill)
    : k_(k), n_(n), shape_(std::move(shape)), fill_(std::move(fill)) {
  if (k < 0 || n < 1 || k > n) throw Error("InvalidLeDiagram", "bad type (k,n)");
  if (int(shape_.size()) != k_) throw Error("InvalidLeDiagram", "shape must have k rows");
  for (int r = 0; r < k_; ++r) {
    if (shape_[r] < 0 || shape_[r] > n_ - k_)
      throw Error("InvalidLeDiagram", "row length out of box");
    if (r > 0 && shape_[r] > shape_[r - 1])
      throw Error("InvalidLeDiagram", "shape not weakly decreasing");
    if (int(fill_[r].size()) != shape_[r])
      throw Error("InvalidLeDiagram", "filling does not match shape");
  }
  // Le-condition: no 0 with a + above it in its column and a + left in its row
  for (int r = 0; r < k_; ++r)
    for (int c = 0; c < shape_[r]; ++c) {
      if (fill_[r][c]) continue;
      bool plus_above = false, plus_left = false;
      for (int r2 = 0; r2 < r; ++r2)
        if (shape_[r2] > c && fill_[r2][c]) plus_above = true;
      for (int c2 = 0; c2 < c; ++c2)
        if (fill_[r][c2]) plus_left = true;
      if (plus_above && plus_left)
        throw Error("InvalidLeDiagram", "Le-configuration at row " +
                                            std::to_string(r + 1) + ", col " +
                                            std::to_string(c + 1));
    }
}

int LeDiagram::dimension() const {
  int d = 0;
  for (const auto& row : fill_)
    for (bool b : row) d += b;
  return d;
}

int LeDiagram::column_height(int c) const {
  int h = 0;
  for (int r = 0; r < k_; ++r)
    if (shape_[r] > c) ++h;
  return h;
}

std::string LeDiagram::to_text() const {
  std::ostringstream os;
  os << k_ << " " << n_ << "\n";
  for (int r = 0; r < k_; ++r) {
    for (int c = 0; c < shape_[r]; ++c) os << (fill_[r][c] ? '+' : '0');
    os << "\n";
  }
  return os.str();
}

LeDiagram LeDiagram::from_text(const std::string& s) {
  std::istringstream is(s);
  int k, n;
  if (!(is >> k >> n)) throw Error("ParseError", "missing 'k n' header");
  std::string line;
  std::getline(is, line);
  std::vector<int> shape;
  std::vector<std::vector<bool>> fill;
  for (int r = 0; r < k; ++r) {
    if (!std::getline(is, line)) throw Error("ParseError", "missing diagram row");
    std::vector<bool> row;
    for (char ch : line) {
      if (ch == '0')
        row.push_back(false);
      else if (ch == '+')
        row.push_back(true);
      else if (!isspace(static_cast<unsigned char>(ch)))
        throw Error("ParseError", "diagram rows may contain only 0 and +");
    }
    shape.push_back(int(row.size()));
    fill.push_back(std::move(row));
  }
  return LeDiagram(k, n, std::move(shape), std::move(fill));
}

DecoratedPermutation to_permutation(const LeDiagram& d) {
  const int n = d.n(), k = d.k(), w = d.width();
  std::vector<int> window(n, 0);
  std::map<int, FixedPointColor> colors;

  // trace the pipe from boundary step s to its exit
  auto trace = [&](bool from_east, int r0, int c0) -> std::pair<bool, int> {
    // returns (exited_west, row/col index of exit); r,c are 0-indexed
    int r = r0, c = c0;
    bool moving_west = from_east;
    while (true) {
      if (d.plus(r, c)) moving_west = !moving_west;
      if (moving_west) {
        if (c == 0) return {true, r};
        --c;
      } else {
        if (r == 0) return {false, c};
        --r;
      }
    }
  };

  for (int r = 0; r < k; ++r) {
    int s = d.row_label(r);
    if (d.shape()[r] == 0) {
      window[s - 1] = s;
      colors[s] = FixedPointColor::Coloop;
      continue;
    }
    auto [west, idx] = trace(true, r, d.shape()[r] - 1);
    int out = west ? d.row_label(idx) : d.col_label(idx);
    window[s - 1] = out;
    if (out == s) colors[s] = west ? FixedPointColor::Coloop : FixedPointColor::Loop;
  }
  for (int c = 0; c < w; ++c) {
    int s = d.col_label(c);
    int h = d.column_height(c);
    if (h == 0) {
      window[s - 1] = s;
      colors[s] = FixedPointColor::Loop;
      continue;
    }
    auto [west, idx] = trace(false, h - 1, c);
    int out = west ? d.row_label(idx) : d.col_label(idx);
    window[s - 1] = out;
    if (out == s) colors[s] = west ? FixedPointColor::Coloop : FixedPointColor::Loop;
  }
  return DecoratedPermutation(std::move(window), std::move(colors));
}

LeDiagram from_permutation(const DecoratedPermutation& p) {
  const int n = p.n();
  std::vector<int> vvals = p.anti_excedance_values();
  const int k = int(vvals.size());
  const int w = n - k;
  std::vector<int> shape(k);
  for (int r = 0; r < k; ++r) shape[r] = (r + 1) + w - vvals[r];

  std::vector<int> col_label(w), col_height(w);
  {
    // heights from shape, labels via the boundary path
    for (int c = 0; c < w; ++c) {
      int h = 0;
      for (int r = 0; r < k; ++r)
        if (shape[r] > c) ++h;
      col_height[c] = h;
      col_label[c] = h + (w - (c + 1)) + 1;
    }
  }
  std::vector<int> row_label(k);
  for (int r = 0; r < k; ++r) row_label[r] = vvals[r];

  // pre-computed preimages
  std::vector<int> pre(n + 1);
  for (int i = 1; i <= n; ++i) pre[p(i)] = i;

  // DFS over columns right to left; fill[r][c] decided a column at a time
  std::vector<std::vector<bool>> fill(k);
  for (int r = 0; r < k; ++r) fill[r].assign(shape[r], false);

  // east_in[r]: pipe entering column c from the east at row r (1-based ids)
  std::vector<int> east_in(k, 0);
  std::vector<bool> locked(k, false);  // row locked to all-0 leftwards

  // labels permitted as the eventual exit of a pipe pending at row r, col c
  auto exit_possible = [&](int pipe, int r, int c) {
    int target = p(pipe);
    for (int r2 = 0; r2 <= r; ++r2)
      if (row_label[r2] == target) return true;
    for (int c2 = 0; c2 < c; ++c2)
      if (col_label[c2] == target) return true;
    return false;
  };

  struct Frame {
    std::vector<int> east_in;
    std::vector<bool> locked;
  };

  // iterative DFS over column fillings, trying + = 1 first is arbitrary;
  // uniqueness of the solution makes the order irrelevant
  std::function<bool(int)> solve = [&](int c) -> bool {
    if (c < 0) {
      // pipes exit west: row r's pipe must map to its row label
      for (int r = 0; r < k; ++r)
        if (shape[r] > 0 && p(east_in[r]) != row_label[r]) return false;
      return true;
    }
    const int h = col_height[c];
    // rows whose row ends exactly at this column get fresh pipes
    Frame saved{east_in, locked};
    for (int r = 0; r < h; ++r)
      if (shape[r] == c + 1) east_in[r] = row_label[r];

    std::vector<int> tiles(h, 0);
    std::function<bool(int)> assign = [&](int r) -> bool {
      if (r == h) {
        // simulate the column bottom-up
        int up = col_label[c];
        std::vector<int> west(h);
        for (int rr = h - 1; rr >= 0; --rr) {
          if (tiles[rr]) {
            west[rr] = up;
            up = east_in[rr];
          } else {
            west[rr] = east_in[rr];
          }
        }
        if (up != pre[col_label[c]]) return false;
        if (c == 0) {
          for (int rr = 0; rr < h; ++rr)
            if (p(west[rr]) != row_label[rr]) return false;
        } else {
          for (int rr = 0; rr < h; ++rr)
            if (!exit_possible(west[rr], rr, c)) return false;
        }
        // commit tiles, update Le locks, recurse
        Frame saved2{east_in, locked};
        for (int rr = 0; rr < h; ++rr) {
          fill[rr][c] = tiles[rr];
          east_in[rr] = west[rr];
          if (!tiles[rr]) {
            bool above = false;
            for (int r2 = 0; r2 < rr; ++r2)
              if (tiles[r2]) above = true;
            if (above) locked[rr] = true;
          }
        }
        if (solve(c - 1)) return true;
        east_in = saved2.east_in;
        locked = saved2.locked;
        return false;
      }
      for (int val = 1; val >= 0; --val) {
        if (val == 1 && locked[r]) continue;
        tiles[r] = val;
        if (assign(r + 1)) return true;
      }
      return false;
    };
    if (assign(0)) return true;
    east_in = saved.east_in;
    locked = saved.locked;
    return false;
  };

  if (!solve(w - 1))
    throw Error("InternalError", "no Le-diagram found for " + p.to_text());
  LeDiagram d(k, n, std::move(shape), std::move(fill));
  assert(to_permutation(d) == p);
  return d;
}

int dimension_of_cell(const DecoratedPermutation& p) {
  return from_permutation(p).dimension();
}

DecoratedPermutation i_pre(const DecoratedPermutation& p) {
  const int n = p.n() + 1;
  if (p.is_loop(n - 1))
    throw Error("BlackFixedPointAtPenultimate",
                "i_pre undefined when n-1 is a loop");
  std::vector<int> w;
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n - 2; ++i) w.push_back(p(i));
  w.push_back(n);
  w.push_back(p(n - 1));
  for (const auto& [i, c] : p.colors())
    if (i <= n - 2) colors[i] = c;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

DecoratedPermutation i_inc(const DecoratedPermutation& p) {
  const int n = p.n() + 1;
  if (p.is_coloop(n - 1))
    throw Error("WhiteFixedPointAtPenultimate",
                "i_inc undefined when n-1 is a coloop");
  int j = p.preimage(n - 1);
  std::vector<int> w;
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n - 1; ++i) w.push_back(i == j ? n : p(i));
  w.push_back(n - 1);
  for (const auto& [i, c] : p.colors())
    if (i != j) colors[i] = c;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

DecoratedPermutation iota_pre(const DecoratedPermutation& p) {
  const int n = p.n() + 1;
  std::vector<int> w(p.window());
  w.push_back(n);
  std::map<int, FixedPointColor> colors(p.colors());
  colors[n] = FixedPointColor::Loop;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

DecoratedPermutation iota_inc(const DecoratedPermutation& p) {
  const int n = p.n() + 1;
  if (p.is_coloop(1) || p.is_coloop(n - 1))
    throw Error("WhiteFixedPointBlocks",
                "iota_inc undefined when 1 or n-1 is a coloop");
  int h = p.preimage(n - 1);
  std::vector<int> w(n);
  std::map<int, FixedPointColor> colors;
  w[0] = n - 1;
  w[h - 1] = n;
  w[n - 1] = p(1);
  for (int j = 2; j <= n - 1; ++j)
    if (j != h) w[j - 1] = p(j);
  for (const auto& [i, c] : p.colors())
    if (i != 1 && i != h && w[i - 1] == i) colors[i] = c;
  for (int i = 1; i <= n; ++i)
    if (w[i - 1] == i && !colors.count(i)) colors[i] = FixedPointColor::Loop;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

LeDiagram i_pre_diagram(const LeDiagram& d) {
  const int k = d.k(), n = d.n() + 1;
  std::vector<int> shape(k);
  std::vector<std::vector<bool>> fill(k);
  for (int r = 0; r < k; ++r) {
    shape[r] = d.shape()[r] + 1;
    fill[r].push_back(r == k - 1);  // single + at the bottom of the new column
    for (int c = 0; c < d.shape()[r]; ++c) fill[r].push_back(d.plus(r, c));
  }
  return LeDiagram(k, n, std::move(shape), std::move(fill));
}

LeDiagram i_inc_diagram(const LeDiagram& d) {
  const int k = d.k() + 1, n = d.n() + 1;
  std::vector<int> shape(d.shape());
  std::vector<std::vector<bool>> fill(d.fill());
  shape.push_back(1);
  fill.push_back({true});
  return LeDiagram(k, n, std::move(shape), std::move(fill));
}

LeDiagram iota_pre_diagram(const LeDiagram& d) {
  const int k = d.k(), n = d.n() + 1;
  std::vector<int> shape(k);
  std::vector<std::vector<bool>> fill(k);
  for (int r = 0; r < k; ++r) {
    shape[r] = d.shape()[r] + 1;
    fill[r].push_back(false);
    for (int c = 0; c < d.shape()[r]; ++c) fill[r].push_back(d.plus(r, c));
  }
  return LeDiagram(k, n, std::move(shape), std::move(fill));
}

}  // namespace positroids
