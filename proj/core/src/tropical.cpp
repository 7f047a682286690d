#include "positroids/tropical.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "positroids/dd.hpp"
#include "positroids/lediagram.hpp"
#include "positroids/lp.hpp"

namespace positroids {

TropPluckerVector::TropPluckerVector(int k, int n, std::vector<Rat> values)
    : k_(k), n_(n), subsets_(all_subsets(n, k)), values_(std::move(values)) {
  if (values_.size() != subsets_.size())
    throw Error("InvalidArgument", "need one value per k-subset");
}

const Rat& TropPluckerVector::at(Mask m) const {
  auto it = std::lower_bound(subsets_.begin(), subsets_.end(), m);
  if (it == subsets_.end() || *it != m)
    throw Error("InvalidArgument", "not a k-subset of [n]");
  return values_[size_t(it - subsets_.begin())];
}

Rat& TropPluckerVector::at(Mask m) {
  auto it = std::lower_bound(subsets_.begin(), subsets_.end(), m);
  if (it == subsets_.end() || *it != m)
    throw Error("InvalidArgument", "not a k-subset of [n]");
  return values_[size_t(it - subsets_.begin())];
}

std::string TropPluckerVector::to_text() const {
  std::ostringstream os;
  for (size_t i = 0; i < subsets_.size(); ++i) {
    auto v = mask_to_vec(subsets_[i]);
    for (size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << v[j];
    os << "  " << to_string(values_[i]) << "\n";
  }
  return os.str();
}

TropPluckerVector TropPluckerVector::from_text(const std::string& s) {
  std::istringstream is(s);
  std::string line;
  std::vector<std::pair<Mask, Rat>> entries;
  int n = 0, k = -1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() < 2) throw Error("ParseError", "line needs subset and value");
    Mask m = 0;
    for (size_t i = 0; i + 1 < toks.size(); ++i) {
      int x = std::stoi(toks[i]);
      m = with(m, x);
      n = std::max(n, x);
    }
    if (k < 0) k = popcount(m);
    if (popcount(m) != k) throw Error("ParseError", "subsets of unequal size");
    entries.emplace_back(m, parse_rat(toks.back()));
  }
  if (entries.empty()) throw Error("ParseError", "empty tropical vector");
  // n is the max element seen unless the count pins it higher
  while (binom(n, k) < (long long)(entries.size())) ++n;
  if (binom(n, k) != (long long)(entries.size()))
    throw Error("ParseError", "value count does not match C(n,k)");
  std::sort(entries.begin(), entries.end());
  std::vector<Rat> vals;
  for (auto& [m, v] : entries) vals.push_back(v);
  return TropPluckerVector(k, n, std::move(vals));
}

namespace {

// visit every (S; a<b<c<d) with S disjoint from {a,b,c,d}, |S| = k-2
template <typename F>
void for_each_three_term(int k, int n, F&& f) {
  if (k < 2 || n < 4) return;
  for (Mask s : all_subsets(n, k - 2)) {
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
      if (!contains(s, i)) rest.push_back(i);
    const int r = int(rest.size());
    for (int ia = 0; ia < r; ++ia)
      for (int ib = ia + 1; ib < r; ++ib)
        for (int ic = ib + 1; ic < r; ++ic)
          for (int id = ic + 1; id < r; ++id)
            f(s, rest[ia], rest[ib], rest[ic], rest[id]);
  }
}

}  // namespace

TropClass classify(const TropPluckerVector& p) {
  bool tropical = true, positive = true;
  for_each_three_term(p.k(), p.n(), [&](Mask s, int a, int b, int c, int d) {
    if (!tropical) return;
    Rat x = p.at(with(with(s, a), c)) + p.at(with(with(s, b), d));
    Rat y = p.at(with(with(s, a), b)) + p.at(with(with(s, c), d));
    Rat z = p.at(with(with(s, a), d)) + p.at(with(with(s, b), c));
    bool first = (x == y && x <= z);
    bool second = (x == z && x <= y);
    bool third = (y == z && y <= x);
    if (!(first || second)) positive = false;
    if (!(first || second || third)) tropical = false;
  });
  if (!tropical) return TropClass::None;
  return positive ? TropClass::Positive : TropClass::Tropical;
}

TropPluckerVector sample_positive(int k, int n, std::uint64_t seed) {
  // tropicalized top-cell network: P_I is the minimum total weight of a
  // vertex-disjoint path family from the sources to I, computed by a
  // column sweep whose state is the set of rows occupied by active paths
  const int width = n - k;
  RatRng rng(seed);
  std::vector<std::vector<Rat>> wgt(k, std::vector<Rat>(width));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < width; ++c) wgt[r][c] = rng.positive();
  // top-cell labels: source row r <-> r+1, column c <-> k + width - c
  auto col_label = [&](int c) { return k + width - c; };

  const Rat inf = Rat(std::numeric_limits<long>::max());
  std::vector<Rat> values;
  for (Mask target : all_subsets(n, k)) {
    // active sources: rows whose label is not in I
    Mask active0 = 0;
    for (int r = 0; r < k; ++r)
      if (!contains(target, r + 1)) active0 = with(active0, r + 1);
    std::map<Mask, Rat> state;
    {
      Rat entry = 0;
      for (int r = 0; r < k; ++r)
        if (contains(active0, r + 1)) entry += wgt[r][width - 1];
      state[active0] = entry;
    }
    for (int c = width - 1; c >= 0; --c) {
      bool exit_here = contains(target, col_label(c));
      std::map<Mask, Rat> next;
      for (const auto& [rows, cost] : state) {
        std::vector<int> a;  // active rows, 0-indexed
        for (int r = 0; r < k; ++r)
          if (contains(rows, r + 1)) a.push_back(r);
        const int m = int(a.size());
        if (exit_here && m == 0) continue;  // an exit is demanded, no path
        const int mm = exit_here ? m - 1 : m;  // paths continuing west
        if (c == 0 && mm > 0) continue;        // stranded paths
        // choose slide-down targets b_1 < ... < b_mm with b_i >= a_i and
        // b_i < a_{i+1}; the exiting path (lowest) takes rows a_m..k-1
        std::vector<int> b(mm);
        std::function<void(int, Rat)> place = [&](int i, Rat acc) {
          if (i == mm) {
            Mask nrows = 0;
            for (int t = 0; t < mm; ++t) nrows = with(nrows, b[t] + 1);
            auto it = next.find(nrows);
            if (it == next.end())
              next.emplace(nrows, acc);
            else if (acc < it->second)
              it->second = acc;
            return;
          }
          int hi = (i + 1 < m) ? a[i + 1] - 1 : k - 1;
          for (int row = a[i]; row <= hi; ++row) {
            b[i] = row;
            Rat step = (c > 0) ? wgt[row][c - 1] : Rat(0);
            place(i + 1, acc + step);
          }
        };
        place(0, cost);
      }
      state.swap(next);
    }
    auto it = state.find(Mask(0));
    if (it == state.end())
      throw Error("InternalError", "no disjoint path family reaches a subset");
    values.push_back(it->second);
  }
  return TropPluckerVector(k, n, std::move(values));
}

Subdivision subdivision(const TropPluckerVector& p) {
  const int n = p.n(), k = p.k();
  Subdivision out;
  out.k = k;
  out.n = n;
  // lift: drop the last coordinate (sum x = k) and append the height
  std::vector<std::vector<Rat>> pts;
  for (size_t i = 0; i < p.subsets().size(); ++i) {
    std::vector<Rat> q(n, Rat(0));
    for (int j : mask_to_vec(p.subsets()[i]))
      if (j < n) q[j - 1] = 1;
    q[n - 1] = p.values()[i];
    pts.push_back(std::move(q));
  }
  HullDescription hd = facets_of(pts);
  if (hd.dim < n) {
    // affine heights: the trivial subdivision
    out.cells.push_back(p.subsets());
  } else {
    for (const auto& f : hd.facets) {
      if (f.a[n - 1] >= 0) continue;  // keep lower facets only
      std::vector<Mask> cell;
      for (int idx : f.tight) cell.push_back(p.subsets()[size_t(idx)]);
      std::sort(cell.begin(), cell.end());
      out.cells.push_back(std::move(cell));
    }
    std::sort(out.cells.begin(), out.cells.end());
  }
  out.all_matroidal = true;
  out.all_positroidal = true;
  for (const auto& cell : out.cells) {
    if (!is_matroid_exchange(n, cell)) {
      out.all_matroidal = out.all_positroidal = false;
      out.labels.emplace_back();
      continue;
    }
    Positroid m(n, k, cell);
    if (!is_positroid_via_envelope(m)) {
      out.all_positroidal = false;
      out.labels.emplace_back();
      continue;
    }
    out.labels.emplace_back(label_of(m));
  }
  return out;
}

Dissection Subdivision::as_dissection() const {
  Dissection d;
  d.ambient = Ambient::Hypersimplex;
  d.k = k;
  d.n = n;
  d.provenance = Provenance::Tropical;
  for (const auto& l : labels) {
    if (!l) throw Error("NotAPositroid", "subdivision has a non-positroidal cell");
    d.cells.push_back(*l);
  }
  d.canonicalize();
  return d;
}

SecondaryCone secondary_cone(const Dissection& d) {
  if (d.ambient != Ambient::Hypersimplex)
    throw Error("InvalidArgument", "secondary cones live on the hypersimplex side");
  const int n = d.n, k = d.k;
  auto subsets = all_subsets(n, k);
  const int nv = int(subsets.size());
  auto index_of = [&](Mask m) {
    return int(std::lower_bound(subsets.begin(), subsets.end(), m) - subsets.begin());
  };

  SecondaryCone cone;
  // variables: P (nv), then per cell lambda (n) and gamma (1)
  const int ncells = int(d.cells.size());
  const int vars = nv + ncells * (n + 1);
  Lp lp(vars);
  for (int c = 0; c < ncells; ++c) {
    const auto& bases = cell_data(d.cells[c]).positroid.bases();
    const int lam0 = nv + c * (n + 1);
    for (Mask b : bases) {
      // lambda.e_B - gamma = P_B  (certificate equality on the cell)
      std::vector<Rat> row(vars, Rat(0));
      for (int i : mask_to_vec(b)) row[lam0 + i - 1] = 1;
      row[lam0 + n] = -1;
      row[index_of(b)] = -1;
      lp.add_row(row, Rel::EQ, Rat(0));
    }
    for (int t = 0; t < nv; ++t) {
      Mask h = subsets[size_t(t)];
      if (std::binary_search(bases.begin(), bases.end(), h)) continue;
      // lambda.e_H - gamma < P_H  (strictly below the face)
      std::vector<Rat> row(vars, Rat(0));
      for (int i : mask_to_vec(h)) row[lam0 + i - 1] = 1;
      row[lam0 + n] = -1;
      row[t] = -1;
      lp.add_row(row, Rel::LE, Rat(0));
    }
  }
  std::vector<Rat> witness;
  cone.regular = lp.strictly_feasible(&witness);
  if (cone.regular) {
    std::vector<Rat> values(witness.begin(), witness.begin() + nv);
    cone.witness = TropPluckerVector(k, n, std::move(values));
  }

  // dimension of the linear span of the cone in P coordinates: P restricted
  // to each cell must be an affine functional there
  std::vector<std::vector<Rat>> rows;
  for (int c = 0; c < ncells; ++c) {
    const auto& bases = cell_data(d.cells[c]).positroid.bases();
    // affine dependencies among {e_B} give equalities sum alpha_B P_B = 0
    MatQ m(n + 1, int(bases.size()));
    for (size_t j = 0; j < bases.size(); ++j) {
      for (int i : mask_to_vec(bases[j])) m(i - 1, int(j)) = 1;
      m(n, int(j)) = 1;
    }
    MatQ null = m.nullspace();
    for (int r = 0; r < null.rows(); ++r) {
      std::vector<Rat> row(nv, Rat(0));
      for (size_t j = 0; j < bases.size(); ++j)
        row[index_of(bases[j])] = null(r, int(j));
      rows.push_back(std::move(row));
    }
  }
  int eq_rank = rank_of(rows);
  cone.dim = (nv - eq_rank) - n;  // lineality P_I -> P_I + sum_{i in I} c_i
  return cone;
}

bool same_cone(const TropPluckerVector& p, const TropPluckerVector& q) {
  if (p.k() != q.k() || p.n() != q.n())
    throw Error("InvalidArgument", "tropical vectors of different type");
  bool same = true;
  for_each_three_term(p.k(), p.n(), [&](Mask s, int a, int b, int c, int d) {
    if (!same) return;
    auto pat = [&](const TropPluckerVector& v) {
      Rat x = v.at(with(with(s, a), c)) + v.at(with(with(s, b), d));
      Rat y = v.at(with(with(s, a), b)) + v.at(with(with(s, c), d));
      Rat z = v.at(with(with(s, a), d)) + v.at(with(with(s, b), c));
      return std::array<int, 3>{sgn(x - y), sgn(x - z), sgn(y - z)};
    };
    if (pat(p) != pat(q)) same = false;
  });
  return same;
}

}  // namespace positroids
