#include "positroids/dd.hpp"

#include <algorithm>
#include <cassert>

namespace positroids {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// scale by a positive constant so entries are coprime integers; the sign of
// a ray is meaningful and never touched
void normalize_ray(std::vector<Rat>& r) {
  Int num_gcd = 0, den_lcm = 1;
  for (const Rat& x : r) {
    if (x == 0) continue;
    num_gcd = gcd(num_gcd, numerator(x));
    den_lcm = lcm(den_lcm, denominator(x));
  }
  if (num_gcd == 0) return;
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  if (scale < 0) scale = -scale;
  for (Rat& x : r) x *= scale;
}

// lineality generators span a line; also canonicalize the sign
void normalize_line(std::vector<Rat>& r) {
  normalize_ray(r);
  for (const Rat& x : r) {
    if (x != 0) {
      if (x < 0)
        for (Rat& y : r) y = -y;
      break;
    }
  }
}

using Bits = std::vector<std::uint64_t>;

void bit_set(Bits& b, int i) { b[i >> 6] |= (std::uint64_t(1) << (i & 63)); }

Bits bits_and(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

bool bits_subset(const Bits& a, const Bits& b) {  // a subseteq b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

struct DdRay {
  std::vector<Rat> v;
  Bits tight;  // processed constraints this ray satisfies with equality
};

}  // namespace

Cone dual_description(const std::vector<std::vector<Rat>>& halfspaces, int dim) {
  const int m = int(halfspaces.size());
  const size_t words = size_t(m + 63) / 64;

  std::vector<std::vector<Rat>> lineality;
  for (int j = 0; j < dim; ++j) {
    std::vector<Rat> e(dim, Rat(0));
    e[j] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<DdRay> rays;

  for (int ci = 0; ci < m; ++ci) {
    const auto& a = halfspaces[ci];
    // lineality handling: find generator not orthogonal to a
    int pivot = -1;
    for (size_t j = 0; j < lineality.size(); ++j)
      if (dot(a, lineality[j]) != 0) {
        pivot = int(j);
        break;
      }
    if (pivot >= 0) {
      std::vector<Rat> l0 = lineality[pivot];
      Rat al0 = dot(a, l0);
      if (al0 < 0)
        for (Rat& x : l0) x = -x;
      al0 = dot(a, l0);
      std::vector<std::vector<Rat>> newlin;
      for (size_t j = 0; j < lineality.size(); ++j) {
        if (int(j) == pivot) continue;
        Rat f = dot(a, lineality[j]) / al0;
        std::vector<Rat> l = lineality[j];
        for (int t = 0; t < dim; ++t) l[t] -= f * l0[t];
        newlin.push_back(std::move(l));
      }
      lineality.swap(newlin);
      for (auto& r : rays) {
        Rat f = dot(a, r.v) / al0;
        for (int t = 0; t < dim; ++t) r.v[t] -= f * l0[t];
        bit_set(r.tight, ci);
      }
      DdRay nr;
      nr.v = std::move(l0);
      normalize_ray(nr.v);
      // the pivot generator was lineality so far: tight on every earlier
      // constraint, strictly positive on the current one
      nr.tight.assign(words, 0);
      for (int prev = 0; prev < ci; ++prev) bit_set(nr.tight, prev);
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<int> pos, neg, zero;
    std::vector<Rat> val(rays.size());
    for (size_t j = 0; j < rays.size(); ++j) {
      val[j] = dot(a, rays[j].v);
      int s = sgn(val[j]);
      if (s > 0)
        pos.push_back(int(j));
      else if (s < 0)
        neg.push_back(int(j));
      else
        zero.push_back(int(j));
    }
    if (neg.empty()) {
      for (size_t j = 0; j < rays.size(); ++j)
        if (val[j] == 0) bit_set(rays[j].tight, ci);
      continue;
    }
    std::vector<DdRay> next;
    for (int j : pos) next.push_back(rays[j]);
    for (int j : zero) {
      bit_set(rays[j].tight, ci);
      next.push_back(rays[j]);
    }
    for (int p : pos)
      for (int q : neg) {
        // adjacency: no third ray whose tight set contains tight(p) & tight(q)
        Bits common = bits_and(rays[p].tight, rays[q].tight);
        bool adjacent = true;
        for (size_t j = 0; j < rays.size(); ++j) {
          if (int(j) == p || int(j) == q) continue;
          if (bits_subset(common, rays[j].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        DdRay nr;
        nr.v.resize(dim);
        for (int t = 0; t < dim; ++t)
          nr.v[t] = val[p] * rays[q].v[t] - val[q] * rays[p].v[t];
        normalize_ray(nr.v);
        nr.tight = common;
        bit_set(nr.tight, ci);
        next.push_back(std::move(nr));
      }
    rays.swap(next);
  }

  Cone out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  for (auto& l : lineality) {
    normalize_line(l);
    out.lineality.push_back(std::move(l));
  }
  return out;
}

HullDescription facets_of(const std::vector<std::vector<Rat>>& points) {
  assert(!points.empty());
  const int n = int(points[0].size());
  // valid inequalities a.x <= b form the cone {(b, a): b - a.p >= 0 for all p}
  std::vector<std::vector<Rat>> half;
  for (const auto& p : points) {
    std::vector<Rat> h(n + 1);
    h[0] = 1;
    for (int j = 0; j < n; ++j) h[j + 1] = -p[j];
    half.push_back(std::move(h));
  }
  Cone cone = dual_description(half, n + 1);

  HullDescription out;
  // lineality generators are the affine-hull equalities a.x = b
  for (const auto& l : cone.lineality) {
    bool nontrivial = false;
    for (int j = 1; j <= n; ++j)
      if (l[j] != 0) nontrivial = true;
    if (!nontrivial) continue;
    // a lineality generator (l0, l1..ln) is the affine-hull equality
    // (l1..ln).x = l0
    std::vector<Rat> a(l.begin() + 1, l.end());
    out.eq_a.push_back(a);
    out.eq_b.push_back(l[0]);
  }
  {
    MatQ m(int(points.size()), n);
    for (size_t i = 0; i < points.size(); ++i)
      for (int j = 0; j < n; ++j) m(int(i), j) = points[i][j];
    out.dim = m.affine_rank_of_rows();
  }
  for (const auto& r : cone.rays) {
    bool trivial = true;
    for (int j = 1; j <= n; ++j)
      if (r[j] != 0) trivial = false;
    if (trivial) continue;  // the ray b >= 0
    // a ray (r0, r1..rn) of the dual cone is the valid inequality
    // (r1..rn).x <= r0, tight exactly on a face
    Facet f;
    f.a.assign(r.begin() + 1, r.end());
    f.b = r[0];
    for (size_t i = 0; i < points.size(); ++i)
      if (dot(f.a, points[i]) == f.b) f.tight.push_back(int(i));
    if (int(f.tight.size()) >= 1) out.facets.push_back(std::move(f));
  }
  return out;
}

VertexEnumeration vertices_of(const std::vector<std::vector<Rat>>& ineq_a,
                              const std::vector<Rat>& ineq_b,
                              const std::vector<std::vector<Rat>>& eq_a,
                              const std::vector<Rat>& eq_b) {
  assert(!ineq_a.empty() || !eq_a.empty());
  const int n = int(!ineq_a.empty() ? ineq_a[0].size() : eq_a[0].size());
  // homogenize: cone {(x0, x) : x0 >= 0, b x0 - a.x >= 0, e.x = f x0}
  std::vector<std::vector<Rat>> half;
  {
    std::vector<Rat> h(n + 1, Rat(0));
    h[0] = 1;
    half.push_back(std::move(h));
  }
  for (size_t i = 0; i < ineq_a.size(); ++i) {
    std::vector<Rat> h(n + 1);
    h[0] = ineq_b[i];
    for (int j = 0; j < n; ++j) h[j + 1] = -ineq_a[i][j];
    half.push_back(std::move(h));
  }
  for (size_t i = 0; i < eq_a.size(); ++i) {
    std::vector<Rat> h(n + 1), g(n + 1);
    h[0] = -eq_b[i];
    g[0] = eq_b[i];
    for (int j = 0; j < n; ++j) {
      h[j + 1] = eq_a[i][j];
      g[j + 1] = -eq_a[i][j];
    }
    half.push_back(std::move(h));
    half.push_back(std::move(g));
  }
  Cone cone = dual_description(half, n + 1);
  VertexEnumeration out;
  if (!cone.lineality.empty()) out.bounded = false;
  for (const auto& r : cone.rays) {
    if (r[0] == 0) {
      bool nonzero = false;
      for (int j = 1; j <= n; ++j)
        if (r[j] != 0) nonzero = true;
      if (nonzero) out.bounded = false;
      continue;
    }
    std::vector<Rat> v(n);
    for (int j = 0; j < n; ++j) v[j] = r[j + 1] / r[0];
    out.vertices.push_back(std::move(v));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  return out;
}

}  // namespace positroids
