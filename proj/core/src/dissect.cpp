#include "positroids/dissect.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "positroids/lediagram.hpp"
#include "positroids/plabic.hpp"
#include "positroids/tropical.hpp"

namespace positroids {

void Dissection::canonicalize() { std::sort(cells.begin(), cells.end()); }

void validate_labels(const Dissection& d) {
  for (const auto& p : d.cells) {
    if (p.n() != d.n) throw Error("InvalidDissection", "label on the wrong ground set");
    if (p.k() != d.k) throw Error("InvalidDissection", "label with the wrong rank");
    if (d.ambient == Ambient::Hypersimplex && !p.loopless())
      throw Error("InvalidDissection", "hypersimplex labels must be loopless");
    if (d.ambient == Ambient::Amplituhedron && !p.coloopless())
      throw Error("InvalidDissection", "amplituhedron labels must be coloopless");
  }
}

namespace {

std::map<DecoratedPermutation, CellData> g_cell_cache;
std::map<DecoratedPermutation, PositroidPolytope> g_polytope_cache;
std::mutex g_cell_mutex;

}  // namespace

const CellData& cell_data(const DecoratedPermutation& p) {
  {
    std::lock_guard<std::mutex> lock(g_cell_mutex);
    auto it = g_cell_cache.find(p);
    if (it != g_cell_cache.end()) return it->second;
  }
  LeDiagram d = from_permutation(p);
  Positroid m = from_cell(p);
  CellData data{m,
                connected_components(m),
                polytope_dimension(m),
                d.dimension(),
                is_tree(from_lediagram(d)),
                normalized_volume(p.n(), m.bases())};
  std::lock_guard<std::mutex> lock(g_cell_mutex);
  return g_cell_cache.emplace(p, std::move(data)).first->second;
}

const PositroidPolytope& cell_polytope(const DecoratedPermutation& p) {
  {
    std::lock_guard<std::mutex> lock(g_cell_mutex);
    auto it = g_polytope_cache.find(p);
    if (it != g_polytope_cache.end()) return it->second;
  }
  PositroidPolytope poly(from_cell(p));
  std::lock_guard<std::mutex> lock(g_cell_mutex);
  return g_polytope_cache.emplace(p, std::move(poly)).first->second;
}

namespace {

DecoratedPermutation uniform_label(int k, int n) {
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = (i + k - 1) % n + 1;
  std::map<int, FixedPointColor> colors;
  if (k == 0)
    for (int i = 1; i <= n; ++i) colors[i] = FixedPointColor::Loop;
  if (k == n)
    for (int i = 1; i <= n; ++i) colors[i] = FixedPointColor::Coloop;
  return DecoratedPermutation(std::move(w), std::move(colors));
}

std::vector<Dissection> recursive_hyp_impl(int k1, int n, const Selector& s,
                                           RatRng& rng) {
  std::vector<Dissection> out;
  if (k1 < 1 || k1 > n - 1) throw Error("InvalidArgument", "need 1 <= k <= n-1");
  if (k1 == 1 || k1 == n - 1) {
    Dissection d;
    d.ambient = Ambient::Hypersimplex;
    d.k = k1;
    d.n = n;
    d.cells = {uniform_label(k1, n)};
    d.provenance = Provenance::Recursive;
    return {d};
  }
  auto left = recursive_hyp_impl(k1, n - 1, s, rng);   // via i_pre
  auto right = recursive_hyp_impl(k1 - 1, n - 1, s, rng);  // via i_inc
  std::vector<int> shifts{0};
  if (s.mode == SelectorMode::AllShifts) {
    shifts.clear();
    for (int t = 0; t < n; ++t) shifts.push_back(t);
  } else if (s.mode == SelectorMode::Random) {
    shifts = {int(rng.next_below(std::uint64_t(n)))};
  }
  if (s.mode == SelectorMode::First || s.mode == SelectorMode::Random) {
    if (left.size() > 1) left.resize(1);
    if (right.size() > 1) right.resize(1);
  }
  std::set<Dissection> dedupe;
  for (const auto& dl : left)
    for (const auto& dr : right)
      for (int t : shifts) {
        Dissection d;
        d.ambient = Ambient::Hypersimplex;
        d.k = k1;
        d.n = n;
        d.provenance = Provenance::Recursive;
        for (const auto& c : dl.cells) d.cells.push_back(i_pre(c));
        for (const auto& c : dr.cells) d.cells.push_back(i_inc(c));
        if (t) {
          for (auto& c : d.cells) c = cyclic_shift(c, t);
        }
        d.canonicalize();
        dedupe.insert(std::move(d));
        if (dedupe.size() >= s.cap) break;
      }
  out.assign(dedupe.begin(), dedupe.end());
  if (out.size() > s.cap) out.resize(s.cap);
  return out;
}

std::vector<Dissection> recursive_amp_impl(int n, int k, const Selector& s,
                                           RatRng& rng) {
  if (k < 0 || k > n - 2) throw Error("InvalidArgument", "need 0 <= k <= n-2");
  if (k == 0 || k == n - 2) {
    Dissection d;
    d.ambient = Ambient::Amplituhedron;
    d.k = k;
    d.n = n;
    DecoratedPermutation top = uniform_label(k, n);
    if (k == 0) {
      d.cells = {DecoratedPermutation::identity(n, FixedPointColor::Loop)};
    } else {
      d.cells = {top};
    }
    d.provenance = Provenance::Recursive;
    return {d};
  }
  auto left = recursive_amp_impl(n - 1, k, s, rng);       // via iota_pre
  auto right = recursive_amp_impl(n - 1, k - 1, s, rng);  // via iota_inc
  std::vector<int> shifts{0};
  if (s.mode == SelectorMode::AllShifts) {
    shifts.clear();
    for (int t = 0; t < n; ++t) shifts.push_back(t);
  } else if (s.mode == SelectorMode::Random) {
    shifts = {int(rng.next_below(std::uint64_t(n)))};
  }
  if (s.mode == SelectorMode::First || s.mode == SelectorMode::Random) {
    if (left.size() > 1) left.resize(1);
    if (right.size() > 1) right.resize(1);
  }
  std::set<Dissection> dedupe;
  for (const auto& dl : left)
    for (const auto& dr : right)
      for (int t : shifts) {
        Dissection d;
        d.ambient = Ambient::Amplituhedron;
        d.k = k;
        d.n = n;
        d.provenance = Provenance::Recursive;
        for (const auto& c : dl.cells) d.cells.push_back(iota_pre(c));
        for (const auto& c : dr.cells) d.cells.push_back(iota_inc(c));
        if (t) {
          for (auto& c : d.cells) c = cyclic_shift(c, t);
        }
        d.canonicalize();
        dedupe.insert(std::move(d));
        if (dedupe.size() >= s.cap) break;
      }
  std::vector<Dissection> out(dedupe.begin(), dedupe.end());
  if (out.size() > s.cap) out.resize(s.cap);
  return out;
}

}  // namespace

std::vector<Dissection> recursive_dissections_hyp(int k1, int n, const Selector& s) {
  RatRng rng(s.seed);
  return recursive_hyp_impl(k1, n, s, rng);
}

std::vector<Dissection> recursive_dissections_amp(int n, int k, const Selector& s) {
  RatRng rng(s.seed);
  return recursive_amp_impl(n, k, s, rng);
}

namespace {

// hypersimplex-side view of a dissection; amplituhedron collections are
// checked through their T-dual hypersimplex counterparts
Dissection hypersimplex_side(const Dissection& d) {
  if (d.ambient == Ambient::Hypersimplex) return d;
  Dissection out;
  out.ambient = Ambient::Hypersimplex;
  out.k = d.k + 1;
  out.n = d.n;
  out.provenance = d.provenance;
  for (const auto& c : d.cells) out.cells.push_back(t_dual_inverse(c));
  out.canonicalize();
  return out;
}

}  // namespace

namespace {

struct PairStatus {
  bool disjoint;   // relative interiors disjoint
  bool facet_ok;   // codim-1 contact (if any) is a common loopless face
  std::string why;
};

// For full-dimensional cells the intersection polytope answers both
// questions at once: interiors meet iff it is full-dimensional, and a
// codimension-one contact must be a common positroid face with a loopless
// label to be good.
PairStatus compute_pair_status(const DecoratedPermutation& a,
                               const DecoratedPermutation& b) {
  const int n = a.n();
  PairStatus st{true, true, ""};
  IntersectionFace f = intersection_face(cell_polytope(a), cell_polytope(b));
  if (f.dim == n - 1) {
    st.disjoint = false;
    st.facet_ok = false;
    st.why = "interiors overlap";
    return st;
  }
  if (f.dim != n - 2) return st;
  if (!f.integral) {
    st.facet_ok = false;
    st.why = "codim-1 intersection has a non-integral vertex";
    return st;
  }
  if (!f.face || !f.label) {
    st.facet_ok = false;
    st.why = "codim-1 intersection is not a positroid polytope";
    return st;
  }
  if (!f.label_loopless) {
    st.facet_ok = false;
    st.why = "codim-1 intersection label has a loop";
    return st;
  }
  for (Mask m : f.face->bases())
    if (!cell_data(a).positroid.has_basis(m) || !cell_data(b).positroid.has_basis(m)) {
      st.facet_ok = false;
      st.why = "codim-1 face is not in the closure of both cells";
      return st;
    }
  return st;
}

std::map<std::pair<DecoratedPermutation, DecoratedPermutation>, PairStatus> g_pair_cache;
std::mutex g_pair_mutex;

const PairStatus& pair_status(const DecoratedPermutation& a,
                              const DecoratedPermutation& b) {
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  {
    std::lock_guard<std::mutex> lock(g_pair_mutex);
    auto it = g_pair_cache.find(key);
    if (it != g_pair_cache.end()) return it->second;
  }
  PairStatus st = compute_pair_status(key.first, key.second);
  std::lock_guard<std::mutex> lock(g_pair_mutex);
  return g_pair_cache.emplace(key, std::move(st)).first->second;
}

bool pair_facet_compatible(const DecoratedPermutation& a, const DecoratedPermutation& b,
                           std::string* why = nullptr) {
  const PairStatus& st = pair_status(a, b);
  if (!st.facet_ok && why) *why = st.why;
  return st.facet_ok;
}

}  // namespace

Verdict check_dissection(const Dissection& input) {
  Verdict v;
  try {
    validate_labels(input);
  } catch (const Error& e) {
    v.reason = e.what();
    return v;
  }
  Dissection d = hypersimplex_side(input);
  if (d.cells.empty()) {
    v.reason = "no cells";
    return v;
  }
  {
    std::set<DecoratedPermutation> uniq(d.cells.begin(), d.cells.end());
    if (uniq.size() != d.cells.size()) {
      v.reason = "repeated cell label";
      return v;
    }
  }
  for (const auto& c : d.cells) {
    if (cell_data(c).polytope_dim != d.n - 1) {
      v.reason = "cell " + c.to_text() + " has moment-map image of dimension " +
                 std::to_string(cell_data(c).polytope_dim);
      return v;
    }
  }
  for (size_t i = 0; i < d.cells.size(); ++i)
    for (size_t j = i + 1; j < d.cells.size(); ++j)
      if (!pair_status(d.cells[i], d.cells[j]).disjoint) {
        v.reason = "interiors of " + d.cells[i].to_text() + " and " +
                   d.cells[j].to_text() + " overlap";
        return v;
      }
  Rat total = 0;
  for (const auto& c : d.cells) total += cell_data(c).volume;
  Rat full = hypersimplex_volume(d.k, d.n);
  if (total != full) {
    v.reason = "volume " + to_string(total) + " of " + to_string(full) +
               " (deficit leaves the union non-dense)";
    return v;
  }
  bool tri = true;
  for (const auto& c : d.cells)
    if (cell_data(c).cell_dim != d.n - 1 || cell_data(c).components != 1) tri = false;
  v.kind = tri ? VerdictKind::Triangulation : VerdictKind::Dissection;
  return v;
}



Verdict check_good_dissection(const Dissection& input) {
  Verdict v = check_dissection(input);
  if (v.kind == VerdictKind::Invalid) return v;
  Dissection d = hypersimplex_side(input);
  for (size_t i = 0; i < d.cells.size(); ++i)
    for (size_t j = i + 1; j < d.cells.size(); ++j) {
      std::string why;
      if (!pair_facet_compatible(d.cells[i], d.cells[j], &why)) {
        v.good = false;
        v.reason = d.cells[i].to_text() + " vs " + d.cells[j].to_text() + ": " + why;
        return v;
      }
    }
  v.good = true;
  return v;
}

namespace {

// collections of convex polygons inscribed in the n-gon, pairwise meeting in
// at most one vertex and not interleaving, with sum (p_i - 2) = k
bool polygons_compatible(int n, Mask a, Mask b) {
  Mask shared = a & b;
  if (popcount(shared) > 1) return false;
  Mask ar = a & ~b, br = b & ~a;
  if (shared) {
    // sharing a vertex v: the other vertices must split into an a-block
    // followed by a b-block when walking the circle away from v
    int v = mask_to_vec(shared)[0];
    std::vector<int> kind;
    for (int t = 1; t < n; ++t) {
      int i = (v - 1 + t) % n + 1;
      if (contains(ar, i)) kind.push_back(0);
      if (contains(br, i)) kind.push_back(1);
    }
    int changes = 0;
    for (size_t i = 0; i + 1 < kind.size(); ++i)
      if (kind[i] != kind[i + 1]) ++changes;
    return changes <= 1;
  }
  // disjoint vertex sets: hulls are disjoint iff the sets occupy two
  // separated circular arcs
  std::vector<int> kind;
  for (int i = 1; i <= n; ++i) {
    if (contains(ar, i)) kind.push_back(0);
    if (contains(br, i)) kind.push_back(1);
  }
  int changes = 0;
  for (size_t i = 0; i < kind.size(); ++i)
    if (kind[i] != kind[(i + 1) % kind.size()]) ++changes;
  return changes <= 2;
}

void enumerate_collections(int n, int k, std::vector<std::vector<Mask>>& out) {
  std::vector<Mask> polygons;
  for (int size = 3; size - 2 <= k; ++size)
    for (Mask m : all_subsets(n, size)) polygons.push_back(m);
  std::sort(polygons.begin(), polygons.end());
  std::vector<Mask> current;
  std::function<void(size_t, int)> rec = [&](size_t from, int budget) {
    if (budget == 0) {
      out.push_back(current);
      return;
    }
    for (size_t i = from; i < polygons.size(); ++i) {
      int cost = popcount(polygons[i]) - 2;
      if (cost > budget) continue;
      bool ok = true;
      for (Mask c : current)
        if (!polygons_compatible(n, c, polygons[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(polygons[i]);
      rec(i + 1, budget - cost);
      current.pop_back();
    }
  };
  rec(0, k);
}

// fan triangulation of each polygon; bases of the transversal matroid of the
// resulting triangle supports (perfect matchings certify independence)
std::vector<Mask> collection_bases(int n, int k, const std::vector<Mask>& polys) {
  std::vector<Mask> triangles;
  for (Mask p : polys) {
    auto vs = mask_to_vec(p);
    for (size_t i = 1; i + 1 < vs.size(); ++i)
      triangles.push_back(with(with(with(Mask(0), vs[0]), vs[i]), vs[i + 1]));
  }
  std::vector<Mask> bases;
  for (Mask cand : all_subsets(n, k)) {
    // bipartite matching elements of cand -> triangles containing them
    std::vector<int> elems = mask_to_vec(cand);
    std::vector<int> match(triangles.size(), -1);
    auto augment = [&](int e) {
      std::vector<bool> used(triangles.size(), false);
      std::function<bool(int)> dfs = [&](int x) {
        for (size_t t = 0; t < triangles.size(); ++t) {
          if (used[t] || !contains(triangles[t], elems[x])) continue;
          used[t] = true;
          if (match[t] < 0 || dfs(match[t])) {
            match[t] = x;
            return true;
          }
        }
        return false;
      };
      return dfs(e);
    };
    bool ok = true;
    for (int e = 0; e < int(elems.size()) && ok; ++e) ok = augment(e);
    if (ok) bases.push_back(cand);
  }
  return bases;
}

}  // namespace

std::vector<DecoratedPermutation> enumerate_generalized_triangles(int k1, int n) {
  if (k1 < 1 || k1 > n - 1) throw Error("InvalidArgument", "need 1 <= k1 <= n-1");
  const int k = k1 - 1;
  std::vector<std::vector<Mask>> collections;
  enumerate_collections(n, k, collections);
  std::set<DecoratedPermutation> out;
  for (const auto& polys : collections) {
    std::vector<Mask> bases = collection_bases(n, k, polys);
    if (bases.empty()) continue;
    Positroid m(n, k, std::move(bases));
    DecoratedPermutation amp_label = label_of(m);
    if (!amp_label.coloopless())
      throw Error("InternalError", "triangle label has a coloop");
    DecoratedPermutation hyp_label = t_dual_inverse(amp_label);
    const CellData& data = cell_data(hyp_label);
    if (data.cell_dim != n - 1 || data.components != 1 || !data.tree)
      throw Error("InternalError",
                  "triangle collection does not give a tree cell: " +
                      hyp_label.to_text());
    out.insert(hyp_label);
  }
  return std::vector<DecoratedPermutation>(out.begin(), out.end());
}

namespace {

// triangulations of the convex n-gon, each as a list of n-2 triangle masks;
// recursion splits the pending intervals over a chosen middle vertex
void polygon_triangulations(std::vector<std::pair<int, int>> stack,
                            std::vector<Mask>& current,
                            std::vector<std::vector<Mask>>& out) {
  while (!stack.empty() && stack.back().second - stack.back().first < 2)
    stack.pop_back();
  if (stack.empty()) {
    out.push_back(current);
    return;
  }
  auto [a, b] = stack.back();
  stack.pop_back();
  for (int m = a + 1; m < b; ++m) {
    current.push_back(with(with(with(Mask(0), a), m), b));
    auto next = stack;
    next.push_back({a, m});
    next.push_back({m, b});
    polygon_triangulations(std::move(next), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Dissection> tnk_family(int n, int k) {
  if (k < 0 || k > n - 2) throw Error("InvalidArgument", "need 0 <= k <= n-2");
  std::vector<std::vector<Mask>> tris;
  {
    std::vector<Mask> current;
    polygon_triangulations({{1, n}}, current, tris);
  }
  std::vector<Dissection> out;
  for (const auto& triangles : tris) {
    Dissection d;
    d.ambient = Ambient::Hypersimplex;
    d.k = k + 1;
    d.n = n;
    d.provenance = Provenance::Recursive;
    // each k-subset of triangles colored black gives one cell
    const int t = int(triangles.size());
    for (Mask chosen : all_subsets(t, k)) {
      std::vector<Mask> black;
      for (int i : mask_to_vec(chosen)) black.push_back(triangles[size_t(i - 1)]);
      std::vector<Mask> bases = collection_bases(n, k, black);
      Positroid m(n, k, std::move(bases));
      DecoratedPermutation amp_label = label_of(m);
      d.cells.push_back(t_dual_inverse(amp_label));
    }
    d.canonicalize();
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct TriangleGraph {
  std::vector<DecoratedPermutation> triangles;
  std::vector<Rat> volumes;
  std::vector<std::vector<bool>> disjoint;    // interiors disjoint
  std::vector<std::vector<bool>> facet_ok;    // codim-1 contacts compatible
  Rat target;
};

TriangleGraph build_triangle_graph(int k1, int n, int jobs) {
  TriangleGraph g;
  g.triangles = enumerate_generalized_triangles(k1, n);
  const int t = int(g.triangles.size());
  g.volumes.resize(t);
  for (int i = 0; i < t; ++i) g.volumes[i] = cell_data(g.triangles[i]).volume;
  g.target = hypersimplex_volume(k1, n);
  g.disjoint.assign(t, std::vector<bool>(t, false));
  g.facet_ok.assign(t, std::vector<bool>(t, false));

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) pairs.emplace_back(i, j);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= pairs.size()) break;
      auto [i, j] = pairs[idx];
      const PairStatus& st = pair_status(g.triangles[i], g.triangles[j]);
      g.disjoint[i][j] = g.disjoint[j][i] = st.disjoint;
      g.facet_ok[i][j] = g.facet_ok[j][i] = st.disjoint && st.facet_ok;
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  return g;
}

// all index sets, pairwise adjacent, hitting the exact volume target
void volume_cliques(const TriangleGraph& g, const std::vector<std::vector<bool>>& adj,
                    std::size_t limit, std::vector<std::vector<int>>& out) {
  const int t = int(g.triangles.size());
  std::vector<Rat> suffix(t + 1, Rat(0));
  for (int i = t - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + g.volumes[i];
  std::vector<int> chosen;
  std::vector<char> alive(t, 1);
  std::function<void(int, Rat)> rec = [&](int from, Rat need) {
    if (need == 0) {
      out.push_back(chosen);
      return;
    }
    if (out.size() >= limit) return;
    Rat avail = 0;
    for (int i = from; i < t; ++i)
      if (alive[i]) avail += g.volumes[i];
    if (avail < need) return;
    for (int i = from; i < t && out.size() < limit; ++i) {
      if (!alive[i] || g.volumes[i] > need) continue;
      if (suffix[i] < need) break;
      std::vector<int> killed;
      for (int j = i + 1; j < t; ++j)
        if (alive[j] && !adj[i][j]) {
          alive[j] = 0;
          killed.push_back(j);
        }
      chosen.push_back(i);
      rec(i + 1, need - g.volumes[i]);
      chosen.pop_back();
      for (int j : killed) alive[j] = 1;
    }
  };
  rec(0, g.target);
}

Dissection clique_to_dissection(const TriangleGraph& g, const std::vector<int>& idx,
                                int k1, int n) {
  Dissection d;
  d.ambient = Ambient::Hypersimplex;
  d.k = k1;
  d.n = n;
  d.provenance = Provenance::Clique;
  for (int i : idx) d.cells.push_back(g.triangles[i]);
  d.canonicalize();
  return d;
}

}  // namespace

EnumerationResult enumerate_triangulations(int k1, int n, std::size_t limit,
                                           int jobs) {
  TriangleGraph g = build_triangle_graph(k1, n, jobs);
  std::vector<std::vector<int>> cliques;
  volume_cliques(g, g.disjoint, limit, cliques);
  EnumerationResult res;
  res.truncated = cliques.size() >= limit;
  for (const auto& c : cliques) res.items.push_back(clique_to_dissection(g, c, k1, n));
  std::sort(res.items.begin(), res.items.end());
  res.count = long(res.items.size());
  return res;
}

namespace {

// canonical key for dedup during coarsening
std::vector<std::string> dissection_key(const Dissection& d) {
  std::vector<std::string> key;
  for (const auto& c : d.cells) key.push_back(c.to_text());
  return key;
}

// subsets of cells that merge into a single positroid cell; goodness-aware
// closure over such merges
template <typename Check>
void coarsening_closure(const std::vector<Dissection>& seeds, Check&& admissible,
                        std::vector<Dissection>& out) {
  std::set<std::vector<std::string>> seen;
  std::vector<Dissection> queue;
  for (const auto& d : seeds)
    if (seen.insert(dissection_key(d)).second) queue.push_back(d);
  size_t head = 0;
  while (head < queue.size()) {
    Dissection d = queue[head++];
    const int m = int(d.cells.size());
    for (int bits = 1; bits < (1 << m); ++bits) {
      if (popcount(Mask(bits)) < 2) continue;
      std::vector<Mask> merged;
      Rat vol = 0;
      std::vector<DecoratedPermutation> rest;
      for (int i = 0; i < m; ++i) {
        if ((bits >> i) & 1) {
          const CellData& data = cell_data(d.cells[i]);
          for (Mask b : data.positroid.bases()) merged.push_back(b);
          vol += data.volume;
        } else {
          rest.push_back(d.cells[i]);
        }
      }
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      if (!is_matroid_exchange(d.n, merged)) continue;
      Positroid cand(d.n, d.k, merged);
      if (!is_positroid_via_envelope(cand)) continue;
      if (normalized_volume(d.n, cand.bases()) != vol) continue;
      DecoratedPermutation label = label_of(cand);
      Dissection coarser;
      coarser.ambient = d.ambient;
      coarser.k = d.k;
      coarser.n = d.n;
      coarser.provenance = d.provenance;
      coarser.cells = rest;
      coarser.cells.push_back(label);
      coarser.canonicalize();
      if (seen.count(dissection_key(coarser))) continue;
      if (!admissible(coarser, label)) continue;
      seen.insert(dissection_key(coarser));
      queue.push_back(coarser);
    }
  }
  out = std::move(queue);
}

}  // namespace

GoodEnumerationResult enumerate_good(int k1, int n, GoodMode mode, int jobs,
                                    bool with_strata) {
  TriangleGraph g = build_triangle_graph(k1, n, jobs);
  std::vector<std::vector<int>> cliques;
  volume_cliques(g, g.facet_ok, SIZE_MAX, cliques);
  GoodEnumerationResult res;
  std::vector<Dissection> goodtris;
  for (const auto& c : cliques) goodtris.push_back(clique_to_dissection(g, c, k1, n));
  std::sort(goodtris.begin(), goodtris.end());

  if (mode == GoodMode::Triangulations) {
    res.items = std::move(goodtris);
  } else {
    // close under merges that keep the collection a good dissection
    auto admissible = [&](const Dissection& d, const DecoratedPermutation& merged) {
      for (const auto& c : d.cells) {
        if (c == merged) continue;
        if (!pair_facet_compatible(c, merged)) return false;
      }
      return true;
    };
    coarsening_closure(goodtris, admissible, res.items);
    std::sort(res.items.begin(), res.items.end());
  }
  res.count = long(res.items.size());
  if (with_strata) {
    res.cone_dims.assign(res.items.size(), -1);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= res.items.size()) break;
        SecondaryCone cone = secondary_cone(res.items[i]);
        res.cone_dims[i] = cone.regular ? cone.dim : -1;
      }
    };
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(worker);
      for (auto& th : threads) th.join();
    }
    for (int dim : res.cone_dims) ++res.strata[dim];
  }
  return res;
}

long long count_dissections_by_coarsening(int k1, int n, int jobs) {
  EnumerationResult tris = enumerate_triangulations(k1, n, SIZE_MAX, jobs);
  std::vector<Dissection> all;
  auto admissible = [&](const Dissection&, const DecoratedPermutation&) { return true; };
  coarsening_closure(tris.items, admissible, all);
  return (long long)(all.size());
}

Int narayana_count(int a, int b, int c) {
  Rat m = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int l = 1; l <= c; ++l) m *= Rat(i + j + l - 1, i + j + l - 2);
  if (denominator(m) != 1) throw Error("InternalError", "box count not integral");
  return numerator(m);
}

}  // namespace positroids
