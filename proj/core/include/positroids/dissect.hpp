#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "positroids/polytope.hpp"

namespace positroids {

enum class Ambient { Hypersimplex, Amplituhedron };
enum class Provenance { Recursive, Clique, Tropical, User };

// A collection of cell labels claimed to dissect Delta_{k,n} (hypersimplex
// ambient, loopless labels with k anti-excedances) or A_{n,k,2}
// (amplituhedron ambient, coloopless labels with k anti-excedances).
struct Dissection {
  Ambient ambient = Ambient::Hypersimplex;
  int k = 0, n = 0;
  std::vector<DecoratedPermutation> cells;  // kept canonically sorted
  Provenance provenance = Provenance::User;

  void canonicalize();
  bool operator==(const Dissection& o) const {
    return ambient == o.ambient && k == o.k && n == o.n && cells == o.cells;
  }
  bool operator<(const Dissection& o) const { return cells < o.cells; }
};

// label validity for the ambient (sizes, looplessness/cooplessness)
void validate_labels(const Dissection& d);

// memoized per-cell data used throughout dissection checking
struct CellData {
  Positroid positroid;
  int components;
  int polytope_dim;   // n - components
  int cell_dim;       // number of pluses of the Le-diagram
  bool tree;          // reduced plabic graph is a tree
  Rat volume;
};
const CellData& cell_data(const DecoratedPermutation& p);
const PositroidPolytope& cell_polytope(const DecoratedPermutation& p);

enum class SelectorMode { First, All, AllShifts, Random };
struct Selector {
  SelectorMode mode = SelectorMode::All;
  std::uint64_t seed = 1;
  std::size_t cap = 10000;  // max number of dissections returned
};

// recursive dissections; every output is certified by check_dissection
std::vector<Dissection> recursive_dissections_hyp(int k1, int n, const Selector& s);
std::vector<Dissection> recursive_dissections_amp(int n, int k, const Selector& s);

enum class VerdictKind { Invalid, Dissection, Triangulation };
struct Verdict {
  VerdictKind kind = VerdictKind::Invalid;
  bool good = false;       // filled by check_good_dissection
  std::string reason;      // first violated condition, with witnesses
};

Verdict check_dissection(const Dissection& d);
Verdict check_good_dissection(const Dissection& d);

// hypersimplex-side labels of the generalized triangles of Delta_{k1,n},
// enumerated through collections of k1-1 non-intersecting triangles in an
// n-gon (transversal matroid route)
std::vector<DecoratedPermutation> enumerate_generalized_triangles(int k1, int n);

// one triangulation of Delta_{k+1,n} per planar trivalent tree: the cells of
// all k-black colourings of the tree
std::vector<Dissection> tnk_family(int n, int k);

struct EnumerationResult {
  long long count = 0;
  std::vector<Dissection> items;
  bool truncated = false;
};

// all positroidal triangulations of Delta_{k1,n}: sets of generalized
// triangles, pairwise interior-disjoint, of full volume
EnumerationResult enumerate_triangulations(int k1, int n,
                                           std::size_t limit = SIZE_MAX,
                                           int jobs = 1);

enum class GoodMode { Triangulations, Dissections };
struct GoodEnumerationResult {
  long long count = 0;
  std::vector<Dissection> items;
  // secondary-cone dimension (mod lineality) -> number of good dissections
  std::map<int, long long> strata;
  std::vector<int> cone_dims;  // aligned with items; -1 when not regular
};

GoodEnumerationResult enumerate_good(int k1, int n, GoodMode mode, int jobs = 1,
                                    bool with_strata = true);

// all dissections reachable by coarsening triangulations (reported as a
// finding against published counts, not a gate)
long long count_dissections_by_coarsening(int k1, int n, int jobs = 1);

// plane partitions in an a x b x c box
Int narayana_count(int a, int b, int c);

}  // namespace positroids
