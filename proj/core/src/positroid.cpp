#include "positroids/positroid.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

#include "positroids/lediagram.hpp"
#include "positroids/lp.hpp"
#include "positroids/plabic.hpp"

namespace positroids {

Positroid::Positroid(int n, int k, std::vector<Mask> bases,
                     std::optional<DecoratedPermutation> label,
                     bool validate_exchange)
    : n_(n), k_(k), bases_(std::move(bases)), label_(std::move(label)) {
  if (bases_.empty()) throw Error("InvalidPositroid", "basis family is empty");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  for (Mask b : bases_)
    if (popcount(b) != k_ || (b & ~full_mask(n_)))
      throw Error("InvalidPositroid", "basis of wrong size or support");
  if (validate_exchange && !is_matroid_exchange(n_, bases_))
    throw Error("NotAMatroid", "basis family violates the exchange axiom");
}

bool Positroid::has_basis(Mask m) const {
  return std::binary_search(bases_.begin(), bases_.end(), m);
}

int Positroid::rank(Mask subset) const {
  int r = 0;
  for (Mask b : bases_) r = std::max(r, popcount(b & subset));
  return r;
}

std::vector<std::vector<int>> Positroid::cyclic_interval_ranks() const {
  std::vector<std::vector<int>> r(n_ + 1, std::vector<int>(n_ + 1, 0));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) r[i][j] = rank(cyclic_interval(n_, i, j));
  return r;
}

Positroid from_cell(const DecoratedPermutation& p) {
  LeDiagram d = from_permutation(p);
  std::vector<Mask> bases = bases_via_minors(d);
  return Positroid(p.n(), p.k(), std::move(bases), p);
}

int connected_components(const Positroid& m) {
  const int n = m.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (Mask b1 : m.bases())
    for (Mask b2 : m.bases()) {
      Mask d1 = b1 & ~b2, d2 = b2 & ~b1;
      if (popcount(d1) == 1 && popcount(d2) == 1)
        unite(mask_to_vec(d1)[0], mask_to_vec(d2)[0]);
    }
  std::vector<bool> seen(n + 1, false);
  int count = 0;
  for (int i = 1; i <= n; ++i)
    if (!seen[find(i)]) {
      seen[find(i)] = true;
      ++count;
    }
  return count;
}

int polytope_dimension(const Positroid& m) {
  return m.n() - connected_components(m);
}

bool is_matroid_exchange(int n, const std::vector<Mask>& bases) {
  (void)n;
  if (bases.empty()) return false;
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      Mask d1 = b1 & ~b2;
      for (int a : mask_to_vec(d1)) {
        bool ok = false;
        for (int b : mask_to_vec(b2 & ~b1)) {
          Mask candidate = with(without(b1, a), b);
          if (std::binary_search(bases.begin(), bases.end(), candidate)) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

namespace {

// is conv{e_b : b in subset} a face of conv{e_b : b in bases}? exact LP:
// find lambda agreeing on the subset and strictly larger there than on the rest
bool is_face_of(int n, const std::vector<Mask>& bases, const std::vector<Mask>& face) {
  Lp lp(n);
  auto row = [&](Mask m) {
    std::vector<Rat> a(n, Rat(0));
    for (int i : mask_to_vec(m)) a[i - 1] = 1;
    return a;
  };
  const Mask f0 = face[0];
  for (size_t i = 1; i < face.size(); ++i) {
    std::vector<Rat> a = row(face[i]), a0 = row(f0);
    for (int j = 0; j < n; ++j) a[j] -= a0[j];
    lp.add_row(a, Rel::EQ, Rat(0));
  }
  for (Mask b : bases) {
    if (std::find(face.begin(), face.end(), b) != face.end()) continue;
    std::vector<Rat> a = row(b), a0 = row(f0);
    for (int j = 0; j < n; ++j) a[j] -= a0[j];
    lp.add_row(a, Rel::LE, Rat(0));  // strict via shared slack
  }
  return lp.strictly_feasible();
}

}  // namespace

bool is_matroid_edges(int n, const std::vector<Mask>& bases) {
  // GGMS: every edge of the polytope is a parallel translate of e_i - e_j,
  // i.e. every 1-face has endpoints differing by a single exchange
  for (size_t i = 0; i < bases.size(); ++i)
    for (size_t j = i + 1; j < bases.size(); ++j) {
      int dist = popcount(bases[i] & ~bases[j]);
      if (dist == 1) continue;  // already parallel to some e_a - e_b
      if (is_face_of(n, bases, {bases[i], bases[j]})) return false;
    }
  return true;
}

std::vector<Mask> envelope_bases(int n, int k,
                                 const std::vector<std::vector<int>>& r) {
  std::vector<Mask> out;
  for (Mask m : all_subsets(n, k)) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j)
        if (popcount(m & cyclic_interval(n, i, j)) > r[i][j]) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

bool is_positroid_via_envelope(const Positroid& m) {
  if (!is_matroid_exchange(m.n(), m.bases()))
    throw Error("NotAMatroid", "positroid test requires a matroid");
  auto env = envelope_bases(m.n(), m.k(), m.cyclic_interval_ranks());
  return env == m.bases();
}

bool is_positroid_via_faces(const Positroid& m) {
  if (!is_matroid_exchange(m.n(), m.bases()))
    throw Error("NotAMatroid", "positroid test requires a matroid");
  const int n = m.n(), k = m.k();
  if (k < 2) return true;  // no square faces possible
  for (Mask s : all_subsets(n, k - 2)) {
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
      if (!contains(s, i)) rest.push_back(i);
    const int r = int(rest.size());
    for (int ia = 0; ia < r; ++ia)
      for (int ib = ia + 1; ib < r; ++ib)
        for (int ic = ib + 1; ic < r; ++ic)
          for (int id = ic + 1; id < r; ++id) {
            int a = rest[ia], bb = rest[ib], c = rest[ic], dd = rest[id];
            Mask sab = with(with(s, a), bb), sad = with(with(s, a), dd);
            Mask sbc = with(with(s, bb), c), scd = with(with(s, c), dd);
            if (!m.has_basis(sab) || !m.has_basis(sad) || !m.has_basis(sbc) ||
                !m.has_basis(scd))
              continue;
            if (is_face_of(n, m.bases(), {sab, sad, sbc, scd})) return false;
          }
  }
  return true;
}

Positroid dual(const Positroid& m) {
  std::vector<Mask> bases;
  for (Mask b : m.bases()) bases.push_back(full_mask(m.n()) & ~b);
  std::optional<DecoratedPermutation> label;
  if (m.label()) label = inverse(*m.label());
  return Positroid(m.n(), m.n() - m.k(), std::move(bases), std::move(label));
}

DecoratedPermutation label_of(const Positroid& m) {
  const int n = m.n(), k = m.k();
  // Grassmann necklace I_a: the Gale-minimal basis in the order a, a+1, ...
  // (greedy works since prefix ranks are matroid ranks)
  std::vector<Mask> necklace(n + 2, 0);
  for (int a = 1; a <= n + 1; ++a) {
    int start = (a - 1) % n + 1;
    Mask acc = 0;
    int got = 0;
    for (int t = 0; t < n && got < k; ++t) {
      int x = (start - 1 + t) % n + 1;
      Mask trial = with(acc, x);
      if (m.rank(trial) > m.rank(acc)) {
        acc = trial;
        ++got;
      }
    }
    necklace[a] = acc;
  }
  std::vector<int> window(n, 0);
  std::map<int, FixedPointColor> colors;
  for (int a = 1; a <= n; ++a) {
    Mask ia = necklace[a], ib = necklace[a + 1];
    if (!contains(ia, a)) {
      if (ia != ib)
        throw Error("NotAPositroid", "necklace step is inconsistent");
      window[a - 1] = a;
      colors[a] = FixedPointColor::Loop;
      continue;
    }
    Mask expect = without(ia, a);
    Mask extra = ib & ~expect;
    if ((expect & ~ib) || popcount(extra) > 1)
      throw Error("NotAPositroid", "necklace step is inconsistent");
    int j = extra ? mask_to_vec(extra)[0] : a;
    window[a - 1] = j;
    if (j == a) colors[a] = FixedPointColor::Coloop;
  }
  DecoratedPermutation p(std::move(window), std::move(colors));
  // the necklace rule is validated by the round trip; reject silently wrong labels
  Positroid check = from_cell(p);
  if (!(check.bases() == m.bases()))
    throw Error("NotAPositroid", "label recovery failed the round trip");
  return p;
}

}  // namespace positroids
