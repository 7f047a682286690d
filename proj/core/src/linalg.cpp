#include "positroids/linalg.hpp"

#include "positroids/subset.hpp"

namespace positroids {

std::vector<int> mask_to_vec(Mask m) {
  std::vector<int> v;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1) v.push_back(i);
  return v;
}

Mask vec_to_mask(const std::vector<int>& v) {
  Mask m = 0;
  for (int i : v) m = with(m, i);
  return m;
}

std::vector<Mask> all_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {Mask(0)};
  Mask m = full_mask(k);
  Mask limit = Mask(1) << n;
  while (m < limit) {
    out.push_back(m);
    // Gosper's hack
    Mask c = m & -m;
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
    if (c == 0) break;
  }
  return out;
}

Mask cyclic_interval(int n, int i, int j) {
  Mask m = 0;
  int x = i;
  while (true) {
    m = with(m, x);
    if (x == j) break;
    x = (x % n) + 1;
  }
  return m;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num) / Rat(den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

MatQ MatQ::transposed() const {
  MatQ t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatQ MatQ::operator*(const MatQ& o) const {
  assert(cols_ == o.rows_);
  MatQ r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Rat& x = (*this)(i, l);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o(l, j) != 0) r(i, j) += x * o(l, j);
    }
  return r;
}

MatQ MatQ::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  MatQ r(int(rows.size()), int(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) r(int(i), int(j)) = (*this)(rows[i], cols[j]);
  return r;
}

Rat MatQ::det() const {
  assert(rows_ == cols_);
  MatQ m = *this;
  int n = rows_;
  Rat result = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      result = -result;
    }
    result *= m(col, col);
    Rat inv = Rat(1) / m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rat f = m(r, col) * inv;
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return result;
}

namespace {
// returns rank; on exit m is in row echelon form
int echelon(MatQ& m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    Rat inv = Rat(1) / m(rank, col);
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rat f = m(r, col) * inv;
      for (int j = col; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}
}  // namespace

int MatQ::rank() const {
  MatQ m = *this;
  return echelon(m);
}

int MatQ::affine_rank_of_rows() const {
  if (rows_ == 0) return -1;
  MatQ m(rows_ - 1, cols_);
  for (int i = 1; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i - 1, j) = (*this)(i, j) - (*this)(0, j);
  return m.rank();
}

MatQ MatQ::nullspace() const {
  MatQ m = *this;
  int n = cols_;
  // full reduced echelon form
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(rank, j));
    Rat inv = Rat(1) / m(rank, col);
    for (int j = 0; j < n; ++j) m(rank, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || m(r, col) == 0) continue;
      Rat f = m(r, col);
      for (int j = 0; j < n; ++j) m(r, j) -= f * m(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  MatQ basis(n - rank, n);
  int row = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(row, free) = 1;
    for (int r = 0; r < rank; ++r) basis(row, pivot_col[r]) = -m(r, free);
    ++row;
  }
  return basis;
}

int rank_of(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  MatQ m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
  return m.rank();
}

}  // namespace positroids
