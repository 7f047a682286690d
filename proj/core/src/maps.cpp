#include "positroids/maps.hpp"

#include <algorithm>
#include <cassert>

#include "positroids/lediagram.hpp"
#include "positroids/network_eval.hpp"
#include "positroids/plabic.hpp"

namespace positroids {

namespace {

// forward-mode scalar: v + d*eps with eps^2 = 0
struct Dual {
  Rat v, d;
  Dual() : v(0), d(0) {}
  Dual(int x) : v(x), d(0) {}  // NOLINT: ring-constant conversions
  Dual(Rat x, Rat dx) : v(std::move(x)), d(std::move(dx)) {}
  Dual operator+(const Dual& o) const { return {v + o.v, d + o.d}; }
  Dual operator-(const Dual& o) const { return {v - o.v, d - o.d}; }
  Dual operator*(const Dual& o) const { return {v * o.v, v * o.d + d * o.v}; }
  Dual operator/(const Dual& o) const {
    return {v / o.v, (d * o.v - v * o.d) / (o.v * o.v)};
  }
};

// determinant over duals; zero-value columns mean the minor vanishes
// identically on the cell, so (0,0) is the correct result there
Dual dual_det(std::vector<std::vector<Dual>> m) {
  const int n = int(m.size());
  Dual result(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col].v != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Dual(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = Dual(0) - result;
    }
    result = result * m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].v == 0 && m[r][col].d == 0) continue;
      Dual f = m[r][col] / m[col][col];
      for (int j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  return result;
}

}  // namespace

PositiveMatrixZ::PositiveMatrixZ(MatQ z) : z_(std::move(z)) {
  const int r = z_.rows(), n = z_.cols();
  if (r > n) throw Error("InvalidArgument", "Z must have rows <= n");
  std::vector<int> rows(r);
  for (int i = 0; i < r; ++i) rows[i] = i;
  for (Mask m : all_subsets(n, r)) {
    std::vector<int> cols;
    for (int i : mask_to_vec(m)) cols.push_back(i - 1);
    if (z_.submatrix(rows, cols).det() <= 0)
      throw Error("NotPositive", "Z has a nonpositive maximal minor");
  }
}

PositiveMatrixZ vandermonde_Z(int rows, int n) {
  MatQ z(rows, n);
  for (int j = 0; j < n; ++j) {
    Rat p = 1;
    for (int i = 0; i < rows; ++i) {
      z(i, j) = p;
      p *= Rat(j + 1);
    }
  }
  return PositiveMatrixZ(std::move(z));
}

QMatrix::QMatrix(const MatQ& lambda, int m) : m_(m) {
  if (m < 2 || m % 2) throw Error("InvalidArgument", "m must be a positive even integer");
  const int h = m / 2, n = lambda.cols();
  if (lambda.rows() != h) throw Error("InvalidArgument", "lambda must have m/2 rows");
  // generic: all m/2-column minors nonzero
  std::vector<int> rows(h);
  for (int i = 0; i < h; ++i) rows[i] = i;
  for (Mask msk : all_subsets(n, h)) {
    std::vector<int> cols;
    for (int i : mask_to_vec(msk)) cols.push_back(i - 1);
    if (lambda.submatrix(rows, cols).det() == 0)
      throw Error("NonGenericLambda", "a Plucker coordinate of lambda vanishes");
  }
  auto mod1 = [&](int x) {
    int r = x % n;
    return r <= 0 ? r + n : r;
  };
  q_ = MatQ(n, n);
  for (int b = 1; b <= n; ++b)
    for (int i = 0; i <= h; ++i) {
      int a = mod1(b - h + i);
      std::vector<int> cols;
      for (int t = b - h; t <= b; ++t)
        if (t != b - h + i) cols.push_back(mod1(t) - 1);
      Rat p = lambda.submatrix(rows, cols).det();
      q_(a - 1, b - 1) += (i % 2 ? -p : p);
    }
  if (q_.rank() != n - h)
    throw Error("InternalError", "Q matrix rank is not n - m/2");
}

QMatrix q_matrix(const std::vector<Rat>& lambda, int m) {
  MatQ l(1, int(lambda.size()));
  for (size_t j = 0; j < lambda.size(); ++j) l(0, int(j)) = lambda[j];
  return QMatrix(l, m);
}

QMatrix q_matrix(const MatQ& lambda, int m) { return QMatrix(lambda, m); }

MatQ cell_point(const DecoratedPermutation& p, const std::vector<Rat>& weights) {
  LeDiagram d = from_permutation(p);
  NetworkMatrix nm = network_matrix(d, weights);
  return nm.mat;
}

MatQ random_cell_point(const DecoratedPermutation& p, RatRng& rng) {
  LeDiagram d = from_permutation(p);
  std::vector<Rat> w(d.dimension());
  for (auto& x : w) x = rng.positive();
  NetworkMatrix nm = network_matrix(d, w);
  return nm.mat;
}

namespace {

// Jacobian columns of some rational function of the network weights;
// f(entries) must fill `out` with dual values
template <typename F>
MatQ jacobian_of(const LeDiagram& d, const std::vector<Rat>& at, F&& f, int out_dim) {
  const int e_count = d.dimension();
  MatQ jac(out_dim, e_count);
  for (int e = 0; e < e_count; ++e) {
    std::vector<Dual> w(e_count);
    for (int i = 0; i < e_count; ++i) w[i] = Dual(at[i], Rat(i == e ? 1 : 0));
    auto entries = network_entries<Dual>(d, w);
    std::vector<Dual> out(out_dim);
    f(entries, out);
    for (int i = 0; i < out_dim; ++i) jac(i, e) = out[i].d;
  }
  return jac;
}

int moment_rank_at(const DecoratedPermutation& p, const LeDiagram& d,
                   const std::vector<Rat>& at) {
  const int n = p.n(), k = p.k();
  MatQ jac = jacobian_of(
      d, at,
      [&](const std::vector<std::vector<Dual>>& a, std::vector<Dual>& out) {
        Dual total(0);
        for (auto& o : out) o = Dual(0);
        for (Mask m : all_subsets(n, k)) {
          std::vector<std::vector<Dual>> sub(k, std::vector<Dual>(k));
          auto cols = mask_to_vec(m);
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = a[i][cols[j] - 1];
          Dual det = dual_det(sub);
          Dual sq = det * det;
          if (sq.v == 0 && sq.d == 0) continue;
          total = total + sq;
          for (int i : cols) out[i - 1] = out[i - 1] + sq;
        }
        for (auto& o : out) o = o / total;
      },
      n);
  return jac.rank();
}

}  // namespace

int moment_image_dimension(const DecoratedPermutation& p, std::uint64_t seed) {
  LeDiagram d = from_permutation(p);
  const int e_count = d.dimension();
  RatRng rng(seed * 0x51f1u + 17);
  auto sample = [&]() {
    std::vector<Rat> w(e_count);
    for (auto& x : w) x = rng.positive();
    return w;
  };
  int r1 = moment_rank_at(p, d, sample());
  int r2 = moment_rank_at(p, d, sample());
  if (r1 != r2) {
    int r3 = moment_rank_at(p, d, sample());
    if (r3 != r1 && r3 != r2)
      throw Error("RankInstability", "moment Jacobian rank disagrees across samples");
    r1 = std::max({r1, r2, r3});
  }
  int expected = p.n() - cyclic_interval_components(p);
  if (r1 != expected)
    throw Error("InternalError",
                "moment image dimension " + std::to_string(r1) +
                    " differs from n - c = " + std::to_string(expected));
  return r1;
}

int z_image_dimension(const DecoratedPermutation& p, const PositiveMatrixZ& z,
                      std::uint64_t seed) {
  LeDiagram d = from_permutation(p);
  const int n = p.n(), k = p.k();
  const int zr = z.mat().rows();
  if (z.n() != n) throw Error("InvalidArgument", "Z has the wrong number of columns");
  if (k > zr) throw Error("InvalidArgument", "Z must have at least k rows");
  if (k == 0) return 0;
  const int e_count = d.dimension();
  RatRng rng(seed * 0x9d2cu + 29);
  std::vector<Rat> at(e_count);
  for (auto& x : at) x = rng.positive();

  // chart columns: lex-first nonvanishing k x k minor of Y = A Z^t at `at`
  std::vector<int> chart;
  {
    auto entries = network_entries<Rat>(d, at);
    MatQ y(k, zr);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < zr; ++j) {
        Rat s = 0;
        for (int l = 0; l < n; ++l) s += entries[i][l] * z.mat()(j, l);
        y(i, j) = s;
      }
    std::vector<int> rows(k);
    for (int i = 0; i < k; ++i) rows[i] = i;
    for (Mask m : all_subsets(zr, k)) {
      std::vector<int> cols;
      for (int i : mask_to_vec(m)) cols.push_back(i - 1);
      if (y.submatrix(rows, cols).det() != 0) {
        chart = cols;
        break;
      }
    }
    if (chart.empty()) throw Error("InternalError", "image has rank < k");
  }
  std::vector<int> rest;
  for (int j = 0; j < zr; ++j)
    if (std::find(chart.begin(), chart.end(), j) == chart.end()) rest.push_back(j);

  MatQ jac = jacobian_of(
      d, at,
      [&](const std::vector<std::vector<Dual>>& a, std::vector<Dual>& out) {
        std::vector<std::vector<Dual>> y(k, std::vector<Dual>(zr, Dual(0)));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < zr; ++j)
            for (int l = 0; l < n; ++l)
              y[i][j] = y[i][j] + a[i][l] * Dual(z.mat()(j, l), Rat(0));
        // normalize: solve Y_chart * X = Y, read coordinates off rest columns
        // gaussian elimination with value-part pivoting
        std::vector<std::vector<Dual>> m(k, std::vector<Dual>(zr));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < zr; ++j) m[i][j] = y[i][j];
        for (int step = 0; step < k; ++step) {
          int pc = chart[step];
          int pivot = -1;
          for (int r = step; r < k; ++r)
            if (m[r][pc].v != 0) {
              pivot = r;
              break;
            }
          if (pivot < 0) throw Error("InternalError", "chart became singular");
          std::swap(m[pivot], m[step]);
          Dual inv = Dual(1) / m[step][pc];
          for (int j = 0; j < zr; ++j) m[step][j] = m[step][j] * inv;
          for (int r = 0; r < k; ++r) {
            if (r == step) continue;
            Dual f = m[r][pc];
            if (f.v == 0 && f.d == 0) continue;
            for (int j = 0; j < zr; ++j) m[r][j] = m[r][j] - f * m[step][j];
          }
        }
        int idx = 0;
        for (int i = 0; i < k; ++i)
          for (int j : rest) out[idx++] = m[i][j];
      },
      k * (zr - k));
  return jac.rank();
}

MatQ t_dual_point(const MatQ& c, const MatQ& lambda, int m) {
  const int h = m / 2, n = c.cols(), k = c.rows() - h;
  if (k < 0) throw Error("InvalidArgument", "C needs at least m/2 rows");
  if (lambda.rows() != h || lambda.cols() != n)
    throw Error("InvalidArgument", "lambda shape mismatch");
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < n; ++j)
      if (c(i, j) != lambda(i, j))
        throw Error("LambdaNotInRowSpan", "top m/2 rows of C must equal lambda");
  QMatrix q(lambda, m);
  MatQ hat = c * q.mat();
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < n; ++j)
      if (hat(i, j) != 0)
        throw Error("InternalError", "top rows of C.Q do not vanish");
  MatQ out(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = hat(i + h, j);
  return out;
}

MatQ t_dual_point(const MatQ& c, const std::vector<Rat>& lambda) {
  MatQ l(1, int(lambda.size()));
  for (size_t j = 0; j < lambda.size(); ++j) l(0, int(j)) = lambda[j];
  return t_dual_point(c, l, 2);
}

std::vector<Mask> plucker_support(const MatQ& a) {
  const int k = a.rows(), n = a.cols();
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  std::vector<Mask> out;
  for (Mask m : all_subsets(n, k)) {
    std::vector<int> cols;
    for (int i : mask_to_vec(m)) cols.push_back(i - 1);
    if (a.submatrix(rows, cols).det() != 0) out.push_back(m);
  }
  return out;
}

bool minors_uniform_sign(const MatQ& a) {
  const int k = a.rows(), n = a.cols();
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  int seen = 0;
  for (Mask m : all_subsets(n, k)) {
    std::vector<int> cols;
    for (int i : mask_to_vec(m)) cols.push_back(i - 1);
    int s = sgn(a.submatrix(rows, cols).det());
    if (s == 0) continue;
    if (seen == 0)
      seen = s;
    else if (s != seen)
      return false;
  }
  return true;
}

}  // namespace positroids
