#include "positroids/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "positroids/lp.hpp"
#include "positroids/subset.hpp"

namespace positroids {

PositroidPolytope::PositroidPolytope(Positroid m)
    : m_(std::move(m)), ranks_(m_.cyclic_interval_ranks()) {}

std::vector<RationalPoint> PositroidPolytope::vertices() const {
  std::vector<RationalPoint> out;
  for (Mask b : m_.bases()) {
    RationalPoint pt;
    pt.x.assign(n(), Rat(0));
    for (int i : mask_to_vec(b)) pt.x[i - 1] = 1;
    out.push_back(std::move(pt));
  }
  return out;
}

int PositroidPolytope::dim() const { return polytope_dimension(m_); }

bool contains(const PositroidPolytope& p, const RationalPoint& x, Strictness s) {
  const int n = p.n();
  if (int(x.x.size()) != n) throw Error("InvalidArgument", "point arity mismatch");
  Rat sum = 0;
  for (const Rat& v : x.x) sum += v;
  if (sum != p.k()) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Mask iv = cyclic_interval(n, i, j);
      Rat lhs = 0;
      for (int l : mask_to_vec(iv)) lhs += x.x[l - 1];
      int r = p.interval_ranks()[i][j];
      if (lhs > r) return false;
      if (s == Strictness::Interior && lhs == r) {
        // implied equalities (tight on the whole polytope) stay allowed
        int min_count = p.k();
        for (Mask b : p.positroid().bases())
          min_count = std::min(min_count, popcount(b & iv));
        if (min_count < r) return false;
      }
    }
  return true;
}

namespace {

using Family = std::vector<Mask>;  // sorted vertex families

std::vector<std::vector<int>> family_interval_ranks(int n, const Family& f) {
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Mask iv = cyclic_interval(n, i, j);
      int best = 0;
      for (Mask b : f) best = std::max(best, popcount(b & iv));
      r[i][j] = best;
    }
  return r;
}

bool family_envelope_exact(int n, const Family& f) {
  int k = popcount(f[0]);
  for (Mask b : f)
    if (popcount(b) != k) return false;
  auto env = envelope_bases(n, k, family_interval_ranks(n, f));
  return env == f;
}

int family_affine_dim(int n, const Family& f) {
  if (f.empty()) return -1;
  MatQ m(int(f.size()), n);
  for (size_t i = 0; i < f.size(); ++i)
    for (int j : mask_to_vec(f[i])) m(int(i), j - 1) = 1;
  return m.affine_rank_of_rows();
}

// facets of conv(f) as vertex subfamilies
std::vector<Family> family_facets(int n, const Family& f, int dim) {
  std::vector<Family> out;
  if (family_envelope_exact(n, f)) {
    auto ranks = family_interval_ranks(n, f);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Mask iv = cyclic_interval(n, i, j);
        Family tight;
        for (Mask b : f)
          if (popcount(b & iv) == ranks[i][j]) tight.push_back(b);
        if (int(tight.size()) == int(f.size())) continue;
        if (family_affine_dim(n, tight) != dim - 1) continue;
        out.push_back(tight);
      }
  } else {
    std::vector<std::vector<Rat>> pts;
    for (Mask b : f) {
      std::vector<Rat> p(n, Rat(0));
      for (int i : mask_to_vec(b)) p[i - 1] = 1;
      pts.push_back(std::move(p));
    }
    HullDescription hd = facets_of(pts);
    for (const auto& facet : hd.facets) {
      Family tight;
      for (int idx : facet.tight) tight.push_back(f[size_t(idx)]);
      std::sort(tight.begin(), tight.end());
      if (int(tight.size()) == int(f.size())) continue;
      if (family_affine_dim(n, tight) != dim - 1) continue;
      out.push_back(tight);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// simplices (as vertex families of size dim+1) of the pulling triangulation
void pulling_simplices(int n, const Family& f,
                       std::map<Family, std::vector<Family>>& memo,
                       std::vector<Family>& out) {
  int dim = family_affine_dim(n, f);
  if (int(f.size()) == dim + 1) {
    out.push_back(f);
    return;
  }
  auto it = memo.find(f);
  if (it != memo.end()) {
    for (const auto& s : it->second) out.push_back(s);
    return;
  }
  std::vector<Family> result;
  Mask v0 = f.front();  // lexicographically least vertex
  for (const auto& facet : family_facets(n, f, dim)) {
    if (std::binary_search(facet.begin(), facet.end(), v0)) continue;
    std::vector<Family> sub;
    pulling_simplices(n, facet, memo, sub);
    for (auto& s : sub) {
      Family cone = s;
      cone.insert(std::lower_bound(cone.begin(), cone.end(), v0), v0);
      result.push_back(std::move(cone));
    }
  }
  memo[f] = result;
  for (const auto& s : result) out.push_back(s);
}

Rat simplex_volume(int n, const Family& simplex) {
  // normalized volume in the lattice Z^n cap {sum x = const}: drop the last
  // coordinate of the edge vectors
  const int d = int(simplex.size()) - 1;
  MatQ m(d, n - 1);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= n - 1; ++j)
      m(i - 1, j - 1) = Rat(int(contains(simplex[i], j)) - int(contains(simplex[0], j)));
  Rat det = m.det();
  return det < 0 ? -det : det;
}

std::map<std::pair<int, Family>, Rat> g_volume_cache;
std::mutex g_volume_mutex;

}  // namespace

Rat normalized_volume(int n, const std::vector<Mask>& vertices) {
  Family f = vertices;
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (f.empty()) return Rat(0);
  {
    std::lock_guard<std::mutex> lock(g_volume_mutex);
    auto it = g_volume_cache.find({n, f});
    if (it != g_volume_cache.end()) return it->second;
  }
  Rat vol = 0;
  if (family_affine_dim(n, f) == n - 1) {
    std::map<Family, std::vector<Family>> memo;
    std::vector<Family> simplices;
    pulling_simplices(n, f, memo, simplices);
    for (const auto& s : simplices) vol += simplex_volume(n, s);
  }
  std::lock_guard<std::mutex> lock(g_volume_mutex);
  g_volume_cache[{n, f}] = vol;
  return vol;
}

Rat normalized_volume(const PositroidPolytope& p) {
  return normalized_volume(p.n(), p.positroid().bases());
}

Rat hypersimplex_volume(int k, int n) {
  return normalized_volume(n, all_subsets(n, k));
}

bool interiors_disjoint(const PositroidPolytope& p, const PositroidPolytope& q) {
  if (p.n() != q.n()) throw Error("InvalidArgument", "ambient mismatch");
  if (p.k() != q.k()) return true;
  const int n = p.n();
  const auto& pb = p.positroid().bases();
  const auto& qb = q.positroid().bases();
  const int np = int(pb.size()), nq = int(qb.size());
  // vars: mu (np), nu (nq), t; every relative-interior point is a strictly
  // positive convex combination of all vertices
  Lp lp(np + nq + 1);
  for (int coord = 0; coord < n; ++coord) {
    std::vector<Rat> a(np + nq + 1, Rat(0));
    for (int i = 0; i < np; ++i)
      if (contains(pb[i], coord + 1)) a[i] = 1;
    for (int j = 0; j < nq; ++j)
      if (contains(qb[j], coord + 1)) a[np + j] = -1;
    lp.add_row(a, Rel::EQ, Rat(0));
  }
  {
    std::vector<Rat> a(np + nq + 1, Rat(0));
    for (int i = 0; i < np; ++i) a[i] = 1;
    lp.add_row(a, Rel::EQ, Rat(1));
  }
  {
    std::vector<Rat> a(np + nq + 1, Rat(0));
    for (int j = 0; j < nq; ++j) a[np + j] = 1;
    lp.add_row(a, Rel::EQ, Rat(1));
  }
  for (int i = 0; i < np + nq; ++i) {
    std::vector<Rat> a(np + nq + 1, Rat(0));
    a[i] = -1;
    a[np + nq] = 1;
    lp.add_row(a, Rel::LE, Rat(0));  // t <= mu_i
  }
  std::vector<Rat> c(np + nq + 1, Rat(0));
  c[np + nq] = 1;
  LpResult res = lp.maximize(c);
  if (res.status == LpStatus::Infeasible) return true;
  if (res.status == LpStatus::Unbounded) return false;
  return !(res.value > 0);
}

IntersectionFace intersection_face(const PositroidPolytope& p,
                                   const PositroidPolytope& q) {
  IntersectionFace out;
  if (p.n() != q.n()) throw Error("InvalidArgument", "ambient mismatch");
  if (p.k() != q.k()) return out;
  const int n = p.n();
  std::vector<std::vector<Rat>> ineq_a;
  std::vector<Rat> ineq_b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Mask iv = cyclic_interval(n, i, j);
      std::vector<Rat> a(n, Rat(0));
      for (int l : mask_to_vec(iv)) a[l - 1] = 1;
      int r = std::min(p.interval_ranks()[i][j], q.interval_ranks()[i][j]);
      ineq_a.push_back(a);
      ineq_b.push_back(Rat(r));
    }
  std::vector<std::vector<Rat>> eq_a{std::vector<Rat>(n, Rat(1))};
  std::vector<Rat> eq_b{Rat(p.k())};
  VertexEnumeration ve = vertices_of(ineq_a, ineq_b, eq_a, eq_b);
  if (!ve.bounded) throw Error("InternalError", "unbounded intersection");
  if (ve.vertices.empty()) return out;

  for (auto& v : ve.vertices) out.vertices.push_back(RationalPoint{v});
  {
    MatQ m(int(ve.vertices.size()), n);
    for (size_t i = 0; i < ve.vertices.size(); ++i)
      for (int j = 0; j < n; ++j) m(int(i), j) = ve.vertices[i][j];
    out.dim = m.affine_rank_of_rows();
  }
  Family family;
  for (const auto& v : ve.vertices) {
    Mask mask = 0;
    bool zero_one = true;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 1)
        mask = with(mask, j + 1);
      else if (v[j] != 0)
        zero_one = false;
    }
    if (!zero_one) {
      out.integral = false;
      break;
    }
    family.push_back(mask);
  }
  if (!out.integral) return out;  // NonIntegralVertex: reported, never rounded

  std::sort(family.begin(), family.end());
  if (out.dim >= 0 && is_matroid_exchange(n, family)) {
    Positroid candidate(n, p.k(), family);
    if (is_positroid_via_envelope(candidate)) {
      out.face = candidate;
      try {
        out.label = label_of(candidate);
        out.label_loopless = out.label->loopless();
      } catch (const Error&) {
        out.label.reset();
      }
    }
  }
  return out;
}

RationalPoint moment_map(const MatQ& a) {
  const int k = a.rows(), n = a.cols();
  if (a.rank() != k) throw Error("InvalidArgument", "matrix not of full rank");
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  RationalPoint out;
  out.x.assign(n, Rat(0));
  Rat total = 0;
  for (Mask m : all_subsets(n, k)) {
    std::vector<int> cols;
    for (int i : mask_to_vec(m)) cols.push_back(i - 1);
    Rat p = a.submatrix(rows, cols).det();
    Rat p2 = p * p;
    if (p2 == 0) continue;
    total += p2;
    for (int i : mask_to_vec(m)) out.x[i - 1] += p2;
  }
  for (Rat& v : out.x) v /= total;
  return out;
}

}  // namespace positroids
