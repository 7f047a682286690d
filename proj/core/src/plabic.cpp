#include "positroids/plabic.hpp"

#include "positroids/network_eval.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>

namespace positroids {

PlabicGraph::PlabicGraph(int n_boundary, std::vector<VertexColor> colors,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<std::vector<int>> rotations)
    : n_(n_boundary),
      colors_(std::move(colors)),
      edges_(std::move(edges)),
      rot_(std::move(rotations)) {
  if (int(colors_.size()) < n_) throw Error("InvalidPlabicGraph", "missing vertices");
  for (int v = 0; v < n_; ++v)
    if (colors_[v] != VertexColor::BoundaryVertex || rot_[v].size() != 1)
      throw Error("InvalidPlabicGraph", "boundary vertices must have degree 1");
  std::vector<int> seen(edges_.size(), 0);
  for (int v = 0; v < int(rot_.size()); ++v)
    for (int e : rot_[v]) {
      if (e < 0 || e >= int(edges_.size()))
        throw Error("InvalidPlabicGraph", "rotation refers to unknown edge");
      if (edges_[e].first != v && edges_[e].second != v)
        throw Error("InvalidPlabicGraph", "rotation lists a non-incident edge");
      ++seen[e];
    }
  for (int e = 0; e < int(edges_.size()); ++e)
    if (seen[e] != 2) throw Error("InvalidPlabicGraph", "edge not in two rotations");
}

namespace {

struct Builder {
  std::vector<VertexColor> colors;
  std::vector<std::pair<int, int>> edges;
  // per vertex: (angle, edge id); angles clockwise with north = 0
  std::vector<std::vector<std::pair<int, int>>> ports;

  int add_vertex(VertexColor c) {
    colors.push_back(c);
    ports.emplace_back();
    return int(colors.size()) - 1;
  }
  void add_edge(int u, int angle_u, int v, int angle_v) {
    int e = int(edges.size());
    edges.emplace_back(u, v);
    ports[u].emplace_back(angle_u, e);
    ports[v].emplace_back(angle_v, e);
  }
};

constexpr int kN = 0, kNE = 45, kE = 90, kS = 180, kSW = 225, kW = 270;

}  // namespace

PlabicGraph from_lediagram(const LeDiagram& d) {
  const int n = d.n(), k = d.k();
  Builder b;
  for (int i = 0; i < n; ++i) b.add_vertex(VertexColor::BoundaryVertex);

  auto p = to_permutation(d);

  // locate pluses and their neighbor structure
  struct Cell {
    bool has_w = false, has_n = false;
    int v_main = -1, v_aux = -1;  // aux = white of a black/white pair
  };
  std::map<std::pair<int, int>, Cell> cells;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < d.shape()[r]; ++c)
      if (d.plus(r, c)) cells[{r, c}] = Cell{};
  for (auto& [rc, cell] : cells) {
    auto [r, c] = rc;
    for (int c2 = 0; c2 < c; ++c2)
      if (d.plus(r, c2)) cell.has_w = true;
    for (int r2 = 0; r2 < r; ++r2)
      if (d.shape()[r2] > c && d.plus(r2, c)) cell.has_n = true;
  }
  for (auto& [rc, cell] : cells) {
    if (!cell.has_w && !cell.has_n) continue;  // plain wire, no vertex
    if (cell.has_w && cell.has_n) {
      cell.v_main = b.add_vertex(VertexColor::Black);   // carries N and E
      cell.v_aux = b.add_vertex(VertexColor::White);    // carries S and W
      b.add_edge(cell.v_main, kSW, cell.v_aux, kNE);
    } else if (cell.has_w) {
      cell.v_main = b.add_vertex(VertexColor::White);   // E, S, W
    } else {
      cell.v_main = b.add_vertex(VertexColor::Black);   // N, E, S
    }
  }

  // port targets; a wire cell forwards its E side to its S side
  struct Port {
    int vertex;
    int angle;
  };
  auto east_port = [&](int r, int c) -> Port {
    const Cell& cell = cells.at({r, c});
    if (!cell.has_w && !cell.has_n) return {-1, 0};  // resolved via wire
    return {cell.v_main, kE};
  };
  auto north_port = [&](int r, int c) -> Port {
    const Cell& cell = cells.at({r, c});
    return {cell.v_main, kN};  // only pairs/black have N, v_main carries it
  };
  auto west_port = [&](int r, int c) -> Port {
    const Cell& cell = cells.at({r, c});
    return {cell.v_aux >= 0 ? cell.v_aux : cell.v_main, kW};
  };
  auto south_port = [&](int r, int c) -> Port {
    const Cell& cell = cells.at({r, c});
    if (!cell.has_w && !cell.has_n) return {-1, 0};
    return {cell.v_aux >= 0 ? cell.v_aux : cell.v_main, kS};
  };

  // what the E side of cell (r,c) attaches to (next plus east or row border)
  auto east_target = [&](int r, int c) -> Port {
    for (int c2 = c + 1; c2 < d.shape()[r]; ++c2)
      if (d.plus(r, c2)) return west_port(r, c2);
    int bv = d.row_label(r) - 1;
    return {bv, kW};
  };
  // what the S side attaches to (next plus south or column border)
  auto south_target = [&](int r, int c) -> Port {
    for (int r2 = r + 1; r2 < k; ++r2) {
      if (d.shape()[r2] <= c) break;
      if (d.plus(r2, c)) return north_port(r2, c);
    }
    int bv = d.col_label(c) - 1;
    return {bv, kN};
  };

  for (auto& [rc, cell] : cells) {
    auto [r, c] = rc;
    if (!cell.has_w && !cell.has_n) {
      // wire: join E target with S target directly
      Port e = east_target(r, c), s = south_target(r, c);
      b.add_edge(e.vertex, e.angle, s.vertex, s.angle);
      continue;
    }
    // E connection owned by this cell
    Port e = east_target(r, c);
    if (e.vertex >= 0) b.add_edge(east_port(r, c).vertex, kE, e.vertex, e.angle);
    // S connection: skip when the S target is a wire cell; wires handle both
    Port s = south_target(r, c);
    (void)s;
    // S targets are never wires (a wire has no plus above it in its column,
    // but this cell is such a plus), so wire the S side here:
    bool target_is_wire = false;
    for (int r2 = r + 1; r2 < k; ++r2) {
      if (d.shape()[r2] <= c) break;
      if (d.plus(r2, c)) {
        const Cell& t = cells.at({r2, c});
        target_is_wire = !t.has_w && !t.has_n;
        break;
      }
    }
    assert(!target_is_wire);
    Port sp = south_port(r, c);
    b.add_edge(sp.vertex, kS, s.vertex, s.angle);
  }

  // lollipops for fixed points
  for (int i = 1; i <= n; ++i) {
    if (!p.is_fixed(i)) continue;
    int v = b.add_vertex(p.is_loop(i) ? VertexColor::Black : VertexColor::White);
    b.add_edge(i - 1, kN, v, kS);
  }

  // rotations: clockwise by angle
  std::vector<std::vector<int>> rot(b.colors.size());
  for (size_t v = 0; v < b.colors.size(); ++v) {
    auto& ps = b.ports[v];
    std::sort(ps.begin(), ps.end());
    for (auto& [angle, e] : ps) rot[v].push_back(e);
  }
  return PlabicGraph(n, std::move(b.colors), std::move(b.edges), std::move(rot));
}

DecoratedPermutation trip_permutation(const PlabicGraph& g) {
  const int n = g.n();
  std::vector<int> window(n);
  std::map<int, FixedPointColor> colors;
  for (int i = 0; i < n; ++i) {
    int e = g.rotations()[i][0];
    int prev = i, cur = g.edge_other(e, i);
    while (!g.is_boundary(cur)) {
      const auto& rot = g.rotations()[cur];
      int idx = -1;
      for (size_t j = 0; j < rot.size(); ++j)
        if (rot[j] == e && g.edge_other(e, cur) == prev) idx = int(j);
      if (idx < 0)
        for (size_t j = 0; j < rot.size(); ++j)
          if (rot[j] == e) idx = int(j);
      int deg = int(rot.size());
      int next_idx = g.color(cur) == VertexColor::Black ? (idx - 1 + deg) % deg
                                                        : (idx + 1) % deg;
      e = rot[next_idx];
      prev = cur;
      cur = g.edge_other(e, cur);
    }
    window[i] = cur + 1;
    if (cur == i) {
      // lollipop: its color decorates the fixed point
      int v = g.edge_other(g.rotations()[i][0], i);
      colors[i + 1] = g.color(v) == VertexColor::Black ? FixedPointColor::Loop
                                                       : FixedPointColor::Coloop;
    }
  }
  return DecoratedPermutation(std::move(window), std::move(colors));
}

int k_statistic(const PlabicGraph& g) {
  int black = 0, white_excess = 0;
  for (int v = g.n(); v < g.vertex_count(); ++v) {
    if (g.color(v) == VertexColor::Black) ++black;
    if (g.color(v) == VertexColor::White) white_excess += g.degree(v) - 1;
  }
  return g.edge_count() - black - white_excess;
}

std::vector<std::vector<bool>> perfect_orientations(const PlabicGraph& g) {
  const int m = g.edge_count();
  std::vector<std::vector<bool>> out;
  std::vector<int> dir(m, -1);  // -1 unset, 1 = first->second, 0 = reverse
  // per internal vertex bookkeeping
  std::vector<int> out_black(g.vertex_count(), 0), in_white(g.vertex_count(), 0),
      undecided(g.vertex_count(), 0);
  for (int e = 0; e < m; ++e) {
    ++undecided[g.edges()[e].first];
    ++undecided[g.edges()[e].second];
  }

  auto violates = [&](int v) {
    if (g.is_boundary(v)) return false;
    if (g.color(v) == VertexColor::Black) {
      if (out_black[v] > 1) return true;
      if (out_black[v] + undecided[v] < 1) return true;
    } else {
      if (in_white[v] > 1) return true;
      if (in_white[v] + undecided[v] < 1) return true;
    }
    return false;
  };

  std::function<void(int)> rec = [&](int e) {
    if (e == m) {
      for (int v = g.n(); v < g.vertex_count(); ++v) {
        if (g.color(v) == VertexColor::Black && out_black[v] != 1) return;
        if (g.color(v) == VertexColor::White && in_white[v] != 1) return;
      }
      std::vector<bool> o(m);
      for (int i = 0; i < m; ++i) o[i] = dir[i] == 1;
      out.push_back(std::move(o));
      return;
    }
    auto [u, v] = g.edges()[e];
    for (int choice = 0; choice <= 1; ++choice) {
      dir[e] = choice;
      int from = choice ? u : v, to = choice ? v : u;
      --undecided[u];
      --undecided[v];
      if (!g.is_boundary(from) && g.color(from) == VertexColor::Black) ++out_black[from];
      if (!g.is_boundary(to) && g.color(to) == VertexColor::White) ++in_white[to];
      if (!violates(u) && !violates(v)) rec(e + 1);
      if (!g.is_boundary(from) && g.color(from) == VertexColor::Black) --out_black[from];
      if (!g.is_boundary(to) && g.color(to) == VertexColor::White) --in_white[to];
      ++undecided[u];
      ++undecided[v];
      dir[e] = -1;
    }
  };
  rec(0);
  return out;
}

Mask source_set(const PlabicGraph& g, const std::vector<bool>& orientation) {
  Mask m = 0;
  for (int i = 0; i < g.n(); ++i) {
    int e = g.rotations()[i][0];
    bool away = (g.edges()[e].first == i) == orientation[e];
    if (away) m = with(m, i + 1);
  }
  return m;
}

std::vector<Mask> bases_via_orientations(const PlabicGraph& g) {
  auto os = perfect_orientations(g);
  if (os.empty()) throw Error("NotOrientable", "graph admits no perfect orientation");
  std::vector<Mask> bases;
  for (const auto& o : os) bases.push_back(source_set(g, o));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return bases;
}

int connected_components(const PlabicGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  int count = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    ++count;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.rotations()[v]) {
        int u = g.edge_other(e, v);
        if (comp[u] < 0) {
          comp[u] = count;
          stack.push_back(u);
        }
      }
    }
  }
  return count;
}

bool is_forest(const PlabicGraph& g) {
  return g.edge_count() == g.vertex_count() - connected_components(g);
}

bool is_tree(const PlabicGraph& g) {
  return is_forest(g) && connected_components(g) == 1;
}

int horizontal_edge_count(const LeDiagram& d) { return d.dimension(); }

NetworkMatrix network_matrix(const LeDiagram& d, const std::vector<Rat>& weights) {
  const int n = d.n(), k = d.k();
  if (int(weights.size()) != d.dimension())
    throw Error("InvalidArgument", "need one weight per horizontal edge");
  for (const Rat& w : weights)
    if (w <= 0) throw Error("InvalidArgument", "weights must be positive");
  std::vector<int> sources;
  for (int r = 0; r < k; ++r) sources.push_back(d.row_label(r));
  auto entries = network_entries<Rat>(d, weights);
  MatQ mat(k, n);
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < n; ++j) mat(r, j) = entries[r][j];
  return NetworkMatrix{std::move(sources), std::move(mat)};
}

std::vector<Mask> bases_via_minors(const LeDiagram& d) {
  const int n = d.n(), k = d.k();
  std::vector<Rat> ones(d.dimension(), Rat(1));
  NetworkMatrix nm = network_matrix(d, ones);
  std::vector<Mask> bases;
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  for (Mask m : all_subsets(n, k)) {
    std::vector<int> cols;
    for (int i : mask_to_vec(m)) cols.push_back(i - 1);
    if (nm.mat.submatrix(rows, cols).det() != 0) bases.push_back(m);
  }
  std::sort(bases.begin(), bases.end());
  return bases;
}

std::string PlabicGraph::to_dot() const {
  std::ostringstream os;
  os << "graph plabic {\n  layout=neato;\n";
  for (int v = 0; v < vertex_count(); ++v) {
    if (is_boundary(v))
      os << "  v" << v << " [label=\"" << (v + 1) << "\", shape=plaintext];\n";
    else
      os << "  v" << v << " [label=\"\", shape=circle, style="
         << (colors_[v] == VertexColor::Black ? "filled, fillcolor=black"
                                              : "solid")
         << "];\n";
  }
  for (const auto& [u, v] : edges_) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace positroids
