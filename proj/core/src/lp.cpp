#include "positroids/lp.hpp"

#include <cassert>

namespace positroids {

namespace {

// Tableau simplex in standard computational form:
//   maximize c.y,  A y = b,  y >= 0,  b >= 0.
// Rows of T: [A | b]; basis[i] = basic variable of row i.
struct Tableau {
  int m, n;
  std::vector<std::vector<Rat>> t;  // m rows, n+1 cols
  std::vector<Rat> obj;             // n+1: reduced costs and negative value
  std::vector<int> basis;

  void pivot(int row, int col) {
    Rat inv = Rat(1) / t[row][col];
    for (int j = 0; j <= n; ++j) t[row][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
    }
    if (obj[col] != 0) {
      Rat f = obj[col];
      for (int j = 0; j <= n; ++j) obj[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // returns false when unbounded
  bool run(const std::vector<bool>& allowed) {
    long iter = 0;
    const long bland_after = 200 + 20L * (m + n);
    while (true) {
      ++iter;
      int col = -1;
      if (iter < bland_after) {
        Rat best = 0;
        for (int j = 0; j < n; ++j)
          if (allowed[j] && obj[j] > best) {
            best = obj[j];
            col = j;
          }
      } else {  // Bland
        for (int j = 0; j < n; ++j)
          if (allowed[j] && obj[j] > 0) {
            col = j;
            break;
          }
      }
      if (col < 0) return true;
      int row = -1;
      Rat best_ratio;
      for (int i = 0; i < m; ++i) {
        if (t[i][col] <= 0) continue;
        Rat ratio = t[i][n] / t[i][col];
        if (row < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[row])) {
          row = i;
          best_ratio = ratio;
        }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

}  // namespace

LpResult Lp::maximize(const std::vector<Rat>& c) const {
  assert(int(c.size()) == nvars_);
  const int m = int(rows_.size());
  // y layout: u_0..u_{d-1}, w_0..w_{d-1} (x = u - w), then one slack per
  // inequality row, then one artificial per row.
  int nslack = 0;
  for (const auto& r : rows_)
    if (r.rel != Rel::EQ) ++nslack;
  const int d = nvars_;
  const int n_real = 2 * d + nslack;
  const int n_total = n_real + m;

  Tableau tab;
  tab.m = m;
  tab.n = n_total;
  tab.t.assign(m, std::vector<Rat>(n_total + 1));
  tab.obj.assign(n_total + 1, Rat(0));
  tab.basis.assign(m, -1);

  int slack_at = 2 * d;
  for (int i = 0; i < m; ++i) {
    const auto& r = rows_[i];
    assert(int(r.a.size()) == d);
    Rat sign = 1;
    // normalize to  a.y (+ slack) = b with b >= 0
    bool flip = r.b < 0;
    if (flip) sign = -1;
    for (int j = 0; j < d; ++j) {
      tab.t[i][j] = sign * r.a[j];
      tab.t[i][d + j] = -sign * r.a[j];
    }
    if (r.rel != Rel::EQ) {
      Rat s = (r.rel == Rel::LE) ? Rat(1) : Rat(-1);
      tab.t[i][slack_at++] = sign * s;
    }
    tab.t[i][n_total] = sign * r.b;
    // artificial
    tab.t[i][n_real + i] = 1;
    tab.basis[i] = n_real + i;
  }

  // Phase 1: minimize the artificial sum == maximize -sum; pricing the
  // objective out over the artificial basis leaves column sums on the real
  // columns and zero on the (basic) artificial ones
  std::vector<bool> allowed(n_total, true);
  for (int j = 0; j < n_total + 1; ++j) tab.obj[j] = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n_total; ++j) tab.obj[j] += tab.t[i][j];
  for (int i = 0; i < m; ++i) tab.obj[n_real + i] = 0;
  bool ok = tab.run(allowed);
  (void)ok;  // phase 1 is always bounded
  if (tab.obj[n_total] != 0) return {LpStatus::Infeasible, Rat(0), {}};

  // drive leftover artificials out of the basis where possible
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n_real) continue;
    int col = -1;
    for (int j = 0; j < n_real; ++j)
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) tab.pivot(i, col);
    // else: redundant row, harmless
  }
  for (int j = n_real; j < n_total; ++j) allowed[j] = false;

  // Phase 2 objective
  for (int j = 0; j <= n_total; ++j) tab.obj[j] = 0;
  std::vector<Rat> cost(n_total, Rat(0));
  for (int j = 0; j < d; ++j) {
    cost[j] = c[j];
    cost[d + j] = -c[j];
  }
  for (int j = 0; j < n_total; ++j) tab.obj[j] = cost[j];
  // make reduced costs consistent with current basis
  for (int i = 0; i < m; ++i) {
    int b = tab.basis[i];
    if (b >= 0 && tab.obj[b] != 0) {
      Rat f = tab.obj[b];
      for (int j = 0; j <= n_total; ++j) tab.obj[j] -= f * tab.t[i][j];
    }
  }
  if (!tab.run(allowed)) return {LpStatus::Unbounded, Rat(0), {}};

  std::vector<Rat> y(n_total, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= 0) y[tab.basis[i]] = tab.t[i][n_total];
  std::vector<Rat> x(d);
  for (int j = 0; j < d; ++j) x[j] = y[j] - y[d + j];
  Rat value = 0;
  for (int j = 0; j < d; ++j) value += c[j] * x[j];
  return {LpStatus::Optimal, value, x};
}

bool Lp::feasible() const {
  std::vector<Rat> c(nvars_, Rat(0));
  return maximize(c).status != LpStatus::Infeasible;
}

bool Lp::strictly_feasible(std::vector<Rat>* witness) const {
  // augment with slack variable t: a.x + t <= b for LE, a.x - t >= b for GE;
  // maximize t, capped at 1 so unbounded never occurs.
  Lp aug(nvars_ + 1);
  for (const auto& r : rows_) {
    std::vector<Rat> a = r.a;
    a.push_back(r.rel == Rel::LE ? Rat(1) : (r.rel == Rel::GE ? Rat(-1) : Rat(0)));
    aug.add_row(a, r.rel, r.b);
  }
  std::vector<Rat> cap(nvars_ + 1, Rat(0));
  cap.back() = 1;
  aug.add_row(cap, Rel::LE, Rat(1));
  LpResult res = aug.maximize(cap);
  if (res.status != LpStatus::Optimal) return false;
  if (res.value <= 0) return false;
  if (witness) witness->assign(res.x.begin(), res.x.end() - 1);
  return true;
}

}  // namespace positroids
