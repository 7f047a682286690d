#include "positroids/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "positroids/rational.hpp"

namespace positroids {

namespace {
int mod1(int x, int n) {  // representative of x in [1..n]
  int r = x % n;
  return r <= 0 ? r + n : r;
}
}  // namespace

DecoratedPermutation::DecoratedPermutation(std::vector<int> window,
                                           std::map<int, FixedPointColor> colors)
    : window_(std::move(window)), colors_(std::move(colors)) {
  const int n = int(window_.size());
  if (n == 0) throw Error("InvalidPermutation", "empty window");
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n || seen[v])
      throw Error("InvalidPermutation", "window is not a bijection of [1..n]");
    seen[v] = true;
  }
  for (int i = 1; i <= n; ++i) {
    if (window_[i - 1] == i) {
      if (!colors_.count(i))
        throw Error("InvalidPermutation",
                    "fixed point " + std::to_string(i) + " has no color");
    } else if (colors_.count(i)) {
      throw Error("InvalidPermutation",
                  "non-fixed point " + std::to_string(i) + " carries a color");
    }
  }
}

DecoratedPermutation DecoratedPermutation::identity(int n, FixedPointColor color) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n; ++i) colors[i] = color;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

bool DecoratedPermutation::is_loop(int i) const {
  auto it = colors_.find(i);
  return it != colors_.end() && it->second == FixedPointColor::Loop;
}

bool DecoratedPermutation::is_coloop(int i) const {
  auto it = colors_.find(i);
  return it != colors_.end() && it->second == FixedPointColor::Coloop;
}

bool DecoratedPermutation::loopless() const {
  for (const auto& [i, c] : colors_)
    if (c == FixedPointColor::Loop) return false;
  return true;
}

bool DecoratedPermutation::coloopless() const {
  for (const auto& [i, c] : colors_)
    if (c == FixedPointColor::Coloop) return false;
  return true;
}

int DecoratedPermutation::preimage(int value) const {
  for (int i = 1; i <= n(); ++i)
    if (window_[i - 1] == value) return i;
  throw Error("InvalidPermutation", "value out of range");
}

std::vector<int> DecoratedPermutation::anti_excedances() const {
  std::vector<int> out;
  for (int i = 1; i <= n(); ++i)
    if (window_[i - 1] < i || is_coloop(i)) out.push_back(i);
  return out;
}

std::vector<int> DecoratedPermutation::anti_excedance_values() const {
  std::vector<int> out;
  for (int v = 1; v <= n(); ++v)
    if (preimage(v) > v || is_coloop(v)) out.push_back(v);
  return out;
}

std::string DecoratedPermutation::to_text() const {
  std::ostringstream os;
  os << "(";
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) os << ",";
    os << window_[i - 1];
    if (is_loop(i)) os << "_";
    if (is_coloop(i)) os << "~";
  }
  os << ")";
  return os.str();
}

DecoratedPermutation DecoratedPermutation::from_text(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '(') body = body.substr(1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::vector<int> window;
  std::map<int, FixedPointColor> colors;
  std::istringstream is(body);
  std::string tok;
  int pos = 0;
  while (std::getline(is, tok, ',')) {
    ++pos;
    // trim blanks; accept marker before or after the number
    std::string t;
    for (char c : tok)
      if (!isspace(static_cast<unsigned char>(c))) t += c;
    bool loop = false, coloop = false;
    while (!t.empty() && (t.front() == '_' || t.front() == '~')) {
      (t.front() == '_' ? loop : coloop) = true;
      t = t.substr(1);
    }
    while (!t.empty() && (t.back() == '_' || t.back() == '~')) {
      (t.back() == '_' ? loop : coloop) = true;
      t.pop_back();
    }
    if (t.empty()) throw Error("ParseError", "empty entry in permutation text");
    int v = std::stoi(t);
    window.push_back(v);
    if (loop) colors[pos] = FixedPointColor::Loop;
    if (coloop) colors[pos] = FixedPointColor::Coloop;
  }
  return DecoratedPermutation(std::move(window), std::move(colors));
}

AffinePermutation::AffinePermutation(std::vector<int> window)
    : window_(std::move(window)) {
  const int n = int(window_.size());
  if (n == 0) throw Error("InvalidPermutation", "empty affine window");
  std::vector<bool> seen(n, false);
  for (int i = 1; i <= n; ++i) {
    int w = window_[i - 1];
    if (w < i || w > i + n)
      throw Error("InvalidPermutation", "affine window out of bounds");
    int r = mod1(w, n) - 1;
    if (seen[r]) throw Error("InvalidPermutation", "affine window not a bijection");
    seen[r] = true;
  }
}

int AffinePermutation::operator()(int i) const {
  const int nn = n();
  int shift = 0;
  while (i < 1) {
    i += nn;
    shift -= nn;
  }
  while (i > nn) {
    i -= nn;
    shift += nn;
  }
  return window_[i - 1] + shift;
}

int AffinePermutation::k() const {
  long sum = 0;
  for (int i = 1; i <= n(); ++i) sum += window_[i - 1] - i;
  assert(sum % n() == 0);
  return int(sum / n());
}

AffinePermutation to_affine(const DecoratedPermutation& p) {
  const int n = p.n();
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) {
    int v = p(i);
    if (p.is_loop(i))
      w[i - 1] = i;
    else if (p.is_coloop(i))
      w[i - 1] = i + n;
    else
      w[i - 1] = v > i ? v : v + n;
  }
  return AffinePermutation(std::move(w));
}

DecoratedPermutation from_affine(const AffinePermutation& a) {
  const int n = a.n();
  std::vector<int> w(n);
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n; ++i) {
    int v = a.window()[i - 1];
    if (v == i) {
      w[i - 1] = i;
      colors[i] = FixedPointColor::Loop;
    } else if (v == i + n) {
      w[i - 1] = i;
      colors[i] = FixedPointColor::Coloop;
    } else {
      w[i - 1] = mod1(v, n);
    }
  }
  return DecoratedPermutation(std::move(w), std::move(colors));
}

DecoratedPermutation t_dual(const DecoratedPermutation& p) {
  if (!p.loopless()) throw Error("LooplessRequired", "t_dual needs a loopless label");
  const int n = p.n();
  std::vector<int> w(n);
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n; ++i) w[i - 1] = p(mod1(i - 1, n));
  for (int i = 1; i <= n; ++i)
    if (w[i - 1] == i) colors[i] = FixedPointColor::Loop;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

DecoratedPermutation t_dual_inverse(const DecoratedPermutation& p) {
  if (!p.coloopless())
    throw Error("ColooplessRequired", "t_dual_inverse needs a coloopless label");
  const int n = p.n();
  std::vector<int> w(n);
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n; ++i) w[i - 1] = p(mod1(i + 1, n));
  for (int i = 1; i <= n; ++i)
    if (w[i - 1] == i) colors[i] = FixedPointColor::Coloop;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

AffinePermutation t_dual_general_m(const AffinePermutation& p, int m) {
  if (m < 0 || m % 2 != 0) throw Error("InvalidArgument", "m must be even and >= 0");
  const int h = m / 2;
  const int n = p.n();
  for (int i = 1; i <= n; ++i)
    if (p(i) < i + h)
      throw Error("PreconditionViolated",
                  "pi(i) >= i + m/2 fails at i = " + std::to_string(i));
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = p(i - h);
  AffinePermutation out(std::move(w));
  for (int i = 1; i <= n; ++i)
    if (out(i) > i + n - h)
      throw Error("PreconditionViolated",
                  "result violates pi_hat(i) <= i + n - m/2 at i = " + std::to_string(i));
  return out;
}

DecoratedPermutation cyclic_shift(const DecoratedPermutation& p, int t) {
  const int n = p.n();
  std::vector<int> w(n);
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n; ++i) {
    int src = mod1(i + t, n);
    w[i - 1] = mod1(p(src) - t, n);
    if (w[i - 1] == i && p.is_fixed(src)) colors[i] = p.colors().at(src);
  }
  // a non-fixed source can not produce a fixed target: pi(i+t)-t == i would
  // mean pi(i+t) == i+t mod n, i.e. a fixed point of pi
  return DecoratedPermutation(std::move(w), std::move(colors));
}

DecoratedPermutation inverse(const DecoratedPermutation& p) {
  const int n = p.n();
  std::vector<int> w(n);
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n; ++i) w[p(i) - 1] = i;
  for (const auto& [i, c] : p.colors())
    colors[i] = c == FixedPointColor::Loop ? FixedPointColor::Coloop
                                           : FixedPointColor::Loop;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

DecoratedPermutation parity_dual(const DecoratedPermutation& p) {
  if (!p.coloopless())
    throw Error("ColooplessRequired", "parity_dual needs a coloopless label");
  const int n = p.n();
  std::vector<int> w(n);
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n; ++i) w[i - 1] = mod1(p.preimage(mod1(i - 1, n)) - 1, n);
  for (int i = 1; i <= n; ++i)
    if (w[i - 1] == i) colors[i] = FixedPointColor::Loop;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

DecoratedPermutation parity_dual_GL(const DecoratedPermutation& p, int k) {
  if (!p.coloopless())
    throw Error("ColooplessRequired", "parity_dual_GL needs a coloopless label");
  const int n = p.n();
  std::vector<int> w(n);
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n; ++i)
    w[i - 1] = mod1(p.preimage(mod1(i + k, n)) + (n - k - 2), n);
  for (int i = 1; i <= n; ++i)
    if (w[i - 1] == i) colors[i] = FixedPointColor::Loop;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

namespace {
// stabilized proper cyclic intervals of p, as (start, length) pairs
std::vector<std::pair<int, int>> stabilized_intervals(const DecoratedPermutation& p) {
  const int n = p.n();
  std::vector<std::pair<int, int>> out;
  for (int start = 1; start <= n; ++start) {
    for (int len = 1; len < n; ++len) {
      bool stable = true;
      for (int t = 0; t < len && stable; ++t) {
        int i = (start - 1 + t) % n + 1;
        int v = p(i);
        // membership of v in the cyclic interval [start .. start+len-1]
        int off = (v - start + n) % n;
        if (off >= len) stable = false;
      }
      if (stable) out.emplace_back(start, len);
    }
  }
  return out;
}
}  // namespace

bool is_SIF(const DecoratedPermutation& p) {
  return stabilized_intervals(p).empty();
}

int cyclic_interval_components(const DecoratedPermutation& p) {
  auto intervals = stabilized_intervals(p);
  if (intervals.empty()) return 1;
  const int n = p.n();
  auto member = [&](const std::pair<int, int>& iv, int x) {
    return (x - iv.first + n) % n < iv.second;
  };
  int count = 0;
  for (size_t i = 0; i < intervals.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < intervals.size() && minimal; ++j) {
      if (i == j) continue;
      // j strictly contained in i?
      if (intervals[j].second > intervals[i].second) continue;
      if (intervals[j].second == intervals[i].second &&
          intervals[j].first == intervals[i].first)
        continue;
      bool inside = true;
      for (int t = 0; t < intervals[j].second && inside; ++t) {
        int x = (intervals[j].first - 1 + t) % n + 1;
        if (!member(intervals[i], x)) inside = false;
      }
      if (inside) minimal = false;
    }
    if (minimal) ++count;
  }
  return count;
}

std::vector<DecoratedPermutation> enumerate_all_cells(int n) {
  std::vector<DecoratedPermutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i)
      if (w[i - 1] == i) fixed.push_back(i);
    for (int bits = 0; bits < (1 << fixed.size()); ++bits) {
      std::map<int, FixedPointColor> colors;
      for (size_t j = 0; j < fixed.size(); ++j)
        colors[fixed[j]] = (bits >> j) & 1 ? FixedPointColor::Coloop
                                           : FixedPointColor::Loop;
      out.emplace_back(w, colors);
    }
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DecoratedPermutation> enumerate_cells(int n, int k) {
  std::vector<DecoratedPermutation> out;
  for (auto& p : enumerate_all_cells(n))
    if (p.k() == k) out.push_back(std::move(p));
  return out;
}

}  // namespace positroids
