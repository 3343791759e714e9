#include "schubert/puzzle/builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schubert::puzzle {

namespace {

void require_rank(const Permutation& w, int n) {
  if (!w.in_group(n)) throw std::invalid_argument(w.to_string() + " is not in S_" + std::to_string(n));
}

Polynomial weight(int i, int j, Weighting weighting) {
  return weighting == Weighting::Single ? Polynomial::x(i) : Polynomial::x(i) - Polynomial::y(j);
}

Vertex bpd_cell(int n, int i, int j) { return {-(n - i), (j - 1) + (n - i)}; }
Vertex pd_cell(int n, int i, int j) { return {(j - 1) - (n - i), n - i}; }

}  // namespace

TileDef diamond_tile(BpdTile kind) {
  // Diamond sides: 0 lower-right (south), 1 upper-right (east), 2 upper-left (north), 3 lower-left (west).
  const TileEdges e = tile_edges(kind);
  TileDef t;
  t.name = tile_name(kind);
  t.orientation = Orientation::Diamond;
  t.counts = {e.south, e.east, e.north, e.west};
  auto strand = [](int in, int out) { return Strand{{in, 0}, {out, 0}}; };
  switch (kind) {
    case BpdTile::Blank: break;
    case BpdTile::Cross: t.strands = {strand(0, 2), strand(3, 1)}; break;
    case BpdTile::Horizontal: t.strands = {strand(3, 1)}; break;
    case BpdTile::Vertical: t.strands = {strand(0, 2)}; break;
    case BpdTile::ElbowSE: t.strands = {strand(0, 1)}; break;
    case BpdTile::ElbowNW: t.strands = {strand(3, 2)}; break;
  }
  t.crossings = geometric_crossings(t);
  t.valued = kind == BpdTile::Blank;
  return t;
}

bool same_wiring(const TileDef& a, const TileDef& b) {
  if (a.orientation != b.orientation || a.counts != b.counts || a.strands.size() != b.strands.size()) return false;
  for (const Strand& s : a.strands) {
    const bool found = std::any_of(b.strands.begin(), b.strands.end(),
                                   [&](const Strand& o) { return o.in == s.in && o.out == s.out; });
    if (!found) return false;
  }
  return true;
}

Board bpd_board(int n, Weighting weighting) {
  if (n < 1) throw std::invalid_argument("board size must be >= 1");
  Board b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) b.cells.push_back({bpd_cell(n, i, j), Orientation::Diamond, weight(i, j, weighting)});
  return b;
}

Rule bpd_rule(const Permutation& w, int n) {
  require_rank(w, n);
  Rule r;
  for (int j = 1; j <= n; ++j) {
    const Vertex v = bpd_cell(n, n, j);
    r.endpoints.push_back({cell_sides(Orientation::Diamond, v)[0], {"c" + std::to_string(j)}});
  }
  for (int i = 1; i <= n; ++i) {
    const Vertex v = bpd_cell(n, i, n);
    r.endpoints.push_back({cell_sides(Orientation::Diamond, v)[1], {"r" + std::to_string(i)}});
    r.connections.emplace_back("c" + std::to_string(w(i)), "r" + std::to_string(i));
  }
  return r;
}

Board pd_board(int n, Weighting weighting) {
  if (n < 1) throw std::invalid_argument("board size must be >= 1");
  Board b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n + 1 - i; ++j)
      b.cells.push_back({pd_cell(n, i, j), Orientation::P120, i + j <= n ? weight(i, j, weighting) : Polynomial(1)});
  return b;
}

Rule pd_rule(const Permutation& w, int n) {
  require_rank(w, n);
  Rule r;
  for (int i = 1; i <= n; ++i) {
    const auto west = cell_sides(Orientation::P120, pd_cell(n, i, 1));
    r.endpoints.push_back({west[3], {"p" + std::to_string(i)}});
    const auto anti = cell_sides(Orientation::P120, pd_cell(n, i, n + 1 - i));
    r.endpoints.push_back({anti[0], {"q" + std::to_string(i)}});
    r.endpoints.push_back({anti[1], {"e" + std::to_string(i)}});
    r.connections.emplace_back("q" + std::to_string(i), "e" + std::to_string(i));
  }
  for (int j = 1; j <= n; ++j) {
    const auto top = cell_sides(Orientation::P120, pd_cell(n, 1, j));
    r.endpoints.push_back({top[2], {"t" + std::to_string(j)}});
  }
  for (int i = 1; i <= n; ++i) r.connections.emplace_back("p" + std::to_string(i), "t" + std::to_string(w(i)));
  return r;
}

std::optional<BumplessPipeDream> solution_to_bpd(int n, const TileCatalog& catalog, const Solution& s) {
  BumplessPipeDream bpd{n, std::vector<std::vector<BpdTile>>(n, std::vector<BpdTile>(n, BpdTile::Blank))};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const TileDef& t = catalog.tiles[s.tiles[(i - 1) * n + (j - 1)]];
      bool matched = false;
      for (BpdTile kind : kAllBpdTiles) {
        if (same_wiring(diamond_tile(kind), t)) {
          bpd.grid[i - 1][j - 1] = kind;
          matched = true;
          break;
        }
      }
      if (!matched) return std::nullopt;
    }
  return bpd;
}

std::optional<PipeDream> solution_to_pd(int n, const TileCatalog& catalog, const Solution& s) {
  PipeDream pd{n, {}};
  int c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n + 1 - i; ++j, ++c) {
      const std::string& name = catalog.tiles[s.tiles[c]].name;
      if (name == "cross" && i + j <= n) {
        pd.crosses.insert({i, j});
      } else if (name != "bump") {
        return std::nullopt;
      }
    }
  return pd;
}

Board hexagon_left(int k, const HexValuation& v) {
  if (k < 1 || static_cast<int>(v.x.size()) < k || static_cast<int>(v.y.size()) < k)
    throw std::invalid_argument("hexagon needs k >= 1 and k valuations per strip row");
  Board b;
  b.cells.push_back({{0, 0}, Orientation::Diamond, v.z});
  for (int i = 0; i < k; ++i) b.cells.push_back({{i, 0}, Orientation::P60, v.x[i]});
  for (int i = 0; i < k; ++i) b.cells.push_back({{i, 1}, Orientation::P120, v.y[i]});
  return b;
}

Board hexagon_right(int k, const HexValuation& v) {
  if (k < 1 || static_cast<int>(v.x.size()) < k || static_cast<int>(v.y.size()) < k)
    throw std::invalid_argument("hexagon needs k >= 1 and k valuations per strip row");
  Board b;
  b.cells.push_back({{k, 0}, Orientation::Diamond, v.z});
  for (int i = 0; i < k; ++i) b.cells.push_back({{i, 0}, Orientation::P120, v.y[i]});
  for (int i = 0; i < k; ++i) b.cells.push_back({{i - 1, 1}, Orientation::P60, v.x[i]});
  return b;
}

std::vector<Edge> hexagon_horizontal_boundary(int k) {
  std::vector<Edge> out;
  for (int i = 0; i < k; ++i) out.push_back({i, 0, 0});
  for (int i = 0; i < k; ++i) out.push_back({i - 1, 2, 0});
  return out;
}

Board parallelogram_board(int m, int h) {
  if (m < 0 || h < 0) throw std::invalid_argument("parallelogram sides must be >= 0");
  Board b;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < m; ++c) b.cells.push_back({{c, r}, Orientation::P60, Polynomial::x(r + 1)});
  return b;
}

Rule parallelogram_rule(int m, int h) {
  Rule r;
  if (h == 0) return r;
  for (int c = 0; c < m; ++c) {
    const std::string j = std::to_string(c + 1);
    r.endpoints.push_back({Edge{c, 0, 0}, {"p" + j}});
    r.endpoints.push_back({Edge{c, h, 0}, {"t" + j}});
    r.connections.emplace_back("p" + j, "t" + j);
  }
  return r;
}

std::vector<int> pd_antidiagonal_cells(int n) {
  std::vector<int> out;
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    c += n + 1 - i;
    out.push_back(c - 1);
  }
  return out;
}

}  // namespace schubert::puzzle
