#include "schubert/bumpless.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>

namespace schubert {

namespace {

constexpr std::array<BpdTile, 6> kAllTiles = {BpdTile::Blank,      BpdTile::Cross,
                                              BpdTile::Horizontal, BpdTile::Vertical,
                                              BpdTile::ElbowSE,    BpdTile::ElbowNW};

enum class Dir { N, S, E, W };

// One pass of a pipe through a cell.
struct Step {
  int i, j;
  Dir in, out;  // side entered through, side left through
};

std::optional<Dir> exit_side(BpdTile t, Dir in) {
  switch (t) {
    case BpdTile::Cross: return in == Dir::S ? Dir::N : Dir::E;
    case BpdTile::Vertical: if (in == Dir::S) return Dir::N; break;
    case BpdTile::Horizontal: if (in == Dir::W) return Dir::E; break;
    case BpdTile::ElbowSE: if (in == Dir::S) return Dir::E; break;
    case BpdTile::ElbowNW: if (in == Dir::W) return Dir::N; break;
    case BpdTile::Blank: break;
  }
  return std::nullopt;
}

void check_shape(const BumplessPipeDream& bpd) {
  if (bpd.n < 0 || static_cast<int>(bpd.grid.size()) != bpd.n) throw InvalidBpd("grid has wrong number of rows");
  for (const auto& row : bpd.grid)
    if (static_cast<int>(row.size()) != bpd.n) throw InvalidBpd("grid row has wrong length");
}

void check_edges(const BumplessPipeDream& bpd) {
  const int n = bpd.n;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const TileEdges e = tile_edges(bpd.at(i, j));
      const bool north = i == 1 ? false : tile_edges(bpd.at(i - 1, j)).south;
      const bool west = j == 1 ? false : tile_edges(bpd.at(i, j - 1)).east;
      if (e.north != north || e.west != west) {
        throw InvalidBpd("edge mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (i == n && !e.south) throw InvalidBpd("south boundary not filled at column " + std::to_string(j));
      if (j == n && !e.east) throw InvalidBpd("east boundary not filled at row " + std::to_string(i));
    }
  }
}

// Paths of the pipes entering at the south of columns 1..n.
std::vector<std::vector<Step>> pipe_paths(const BumplessPipeDream& bpd, std::vector<int>& exit_row) {
  const int n = bpd.n;
  std::vector<std::vector<Step>> paths(n);
  exit_row.assign(n, 0);
  for (int c = 1; c <= n; ++c) {
    int i = n, j = c;
    Dir in = Dir::S;
    auto& path = paths[c - 1];
    while (true) {
      const auto out = exit_side(bpd.at(i, j), in);
      if (!out) throw InvalidBpd("pipe from column " + std::to_string(c) + " is blocked");
      path.push_back({i, j, in, *out});
      if (*out == Dir::N) {
        if (--i < 1) throw InvalidBpd("pipe leaves through the north boundary");
        in = Dir::S;
      } else {
        if (++j > n) break;
        in = Dir::W;
      }
    }
    exit_row[c - 1] = i;
  }
  return paths;
}

// Rebuilds a grid from pipe paths; nullopt when a cell is not a legal tile.
std::optional<BumplessPipeDream> grid_from_paths(int n, const std::vector<std::vector<Step>>& paths) {
  std::vector<std::vector<std::vector<Step>>> visits(n, std::vector<std::vector<Step>>(n));
  for (const auto& path : paths)
    for (const Step& s : path) {
      if (s.i < 1 || s.i > n || s.j < 1 || s.j > n) return std::nullopt;
      visits[s.i - 1][s.j - 1].push_back(s);
    }
  BumplessPipeDream out{n, std::vector<std::vector<BpdTile>>(n, std::vector<BpdTile>(n, BpdTile::Blank))};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& v = visits[i][j];
      BpdTile t = BpdTile::Blank;
      if (v.size() == 1) {
        const Step& s = v[0];
        if (s.in == Dir::S && s.out == Dir::N) t = BpdTile::Vertical;
        else if (s.in == Dir::W && s.out == Dir::E) t = BpdTile::Horizontal;
        else if (s.in == Dir::S && s.out == Dir::E) t = BpdTile::ElbowSE;
        else if (s.in == Dir::W && s.out == Dir::N) t = BpdTile::ElbowNW;
        else return std::nullopt;
      } else if (v.size() == 2) {
        const bool straight_pair = (v[0].in == Dir::S && v[0].out == Dir::N && v[1].in == Dir::W && v[1].out == Dir::E) ||
                                   (v[1].in == Dir::S && v[1].out == Dir::N && v[0].in == Dir::W && v[0].out == Dir::E);
        if (!straight_pair) return std::nullopt;
        t = BpdTile::Cross;
      } else if (v.size() > 2) {
        return std::nullopt;
      }
      out.grid[i][j] = t;
    }
  }
  return out;
}

bool is_elbow(BpdTile t) { return t == BpdTile::ElbowSE || t == BpdTile::ElbowNW; }

}  // namespace

TileEdges tile_edges(BpdTile t) noexcept {
  switch (t) {
    case BpdTile::Blank: return {false, false, false, false};
    case BpdTile::Cross: return {true, true, true, true};
    case BpdTile::Horizontal: return {false, false, true, true};
    case BpdTile::Vertical: return {true, true, false, false};
    case BpdTile::ElbowSE: return {false, true, true, false};
    case BpdTile::ElbowNW: return {true, false, false, true};
  }
  return {false, false, false, false};
}

const char* tile_name(BpdTile t) noexcept {
  switch (t) {
    case BpdTile::Blank: return "blank";
    case BpdTile::Cross: return "cross";
    case BpdTile::Horizontal: return "horizontal";
    case BpdTile::Vertical: return "vertical";
    case BpdTile::ElbowSE: return "elbow_se";
    case BpdTile::ElbowNW: return "elbow_nw";
  }
  return "?";
}

BpdTile tile_from_name(const std::string& name) {
  for (BpdTile t : kAllTiles)
    if (name == tile_name(t)) return t;
  throw InvalidBpd("unknown tile kind '" + name + "'");
}

BpdTrace trace_bpd(const BumplessPipeDream& bpd, BpdConvention convention) {
  check_shape(bpd);
  check_edges(bpd);
  const int n = bpd.n;
  std::vector<int> exit_row;
  const auto paths = pipe_paths(bpd, exit_row);

  // A cross is where two pipes meet; count meetings per pair.
  std::map<std::pair<int, int>, std::vector<int>> at_cell;
  for (int p = 0; p < n; ++p)
    for (const Step& s : paths[p]) at_cell[{s.i, s.j}].push_back(p);
  std::map<std::pair<int, int>, int> meetings;
  bool reduced = true;
  for (const auto& [cell, pipes] : at_cell) {
    if (pipes.size() == 2) {
      auto key = std::minmax(pipes[0], pipes[1]);
      if (++meetings[{key.first, key.second}] > 1) reduced = false;
    }
  }

  std::vector<int> one_line(n, 0);
  for (int c = 1; c <= n; ++c) {
    const int r = exit_row[c - 1];
    if (convention == BpdConvention::RowToColumn) one_line[r - 1] = c;
    else one_line[c - 1] = r;
  }
  return {Permutation::from_one_line(one_line), reduced};
}

Permutation bpd_permutation(const BumplessPipeDream& bpd, BpdConvention convention) {
  return trace_bpd(bpd, convention).w;
}

BumplessPipeDream rothe_bpd(const Permutation& w, int n) {
  if (!w.in_group(n)) throw std::invalid_argument(w.to_string() + " is not in S_" + std::to_string(n));
  const Permutation winv = w.inverse();
  BumplessPipeDream bpd{n, std::vector<std::vector<BpdTile>>(n, std::vector<BpdTile>(n))};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const bool horizontal = j > w(i);    // row i pipe running east of its elbow
      const bool vertical = i > winv(j);   // column j pipe running south of its elbow
      BpdTile t = BpdTile::Blank;
      if (j == w(i)) t = BpdTile::ElbowSE;
      else if (horizontal && vertical) t = BpdTile::Cross;
      else if (horizontal) t = BpdTile::Horizontal;
      else if (vertical) t = BpdTile::Vertical;
      bpd.grid[i - 1][j - 1] = t;
    }
  }
  return bpd;
}

std::vector<BumplessPipeDream> all_bpd_grids(int n) {
  std::vector<BumplessPipeDream> out;
  BumplessPipeDream cur{n, std::vector<std::vector<BpdTile>>(n, std::vector<BpdTile>(n))};
  // Row-major backtracking; each tile must agree with its north and west neighbours.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n * n) {
      out.push_back(cur);
      return;
    }
    const int i = pos / n + 1, j = pos % n + 1;
    const bool north = i == 1 ? false : tile_edges(cur.at(i - 1, j)).south;
    const bool west = j == 1 ? false : tile_edges(cur.at(i, j - 1)).east;
    for (BpdTile t : kAllTiles) {
      const TileEdges e = tile_edges(t);
      if (e.north != north || e.west != west) continue;
      if (i == n && !e.south) continue;
      if (j == n && !e.east) continue;
      cur.grid[i - 1][j - 1] = t;
      self(self, pos + 1);
    }
  };
  if (n > 0) rec(rec, 0);
  return out;
}

std::vector<BumplessPipeDream> enumerate_bpds(const Permutation& w, int n, BpdConvention convention) {
  if (!w.in_group(n)) throw std::invalid_argument(w.to_string() + " is not in S_" + std::to_string(n));
  std::vector<BumplessPipeDream> out;
  for (auto& g : all_bpd_grids(n)) {
    const BpdTrace t = trace_bpd(g, convention);
    if (t.reduced && t.w == w) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BumplessPipeDream> droops(const BumplessPipeDream& bpd) {
  const int n = bpd.n;
  std::vector<int> exit_row;
  const auto paths = pipe_paths(bpd, exit_row);
  const BpdTrace before = trace_bpd(bpd);
  std::vector<BumplessPipeDream> out;

  for (int p = 0; p < n; ++p) {
    const auto& path = paths[p];
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (path[k].in != Dir::S || path[k].out != Dir::E) continue;  // elbow of this pipe
      const int a = path[k].i, b = path[k].j;
      for (int c = a + 1; c <= n; ++c) {
        for (int d = b + 1; d <= n; ++d) {
          if (bpd.at(c, d) != BpdTile::Blank) continue;
          bool clean = true;
          for (int i = a; i <= c && clean; ++i)
            for (int j = b; j <= d && clean; ++j)
              if ((i != a || j != b) && is_elbow(bpd.at(i, j))) clean = false;
          if (!clean) continue;

          // Old route: north through (c..a, b), then east through (a, b+1..d).
          std::vector<Step> np;
          std::size_t idx = 0;
          while (idx < path.size() && !(path[idx].i == c && path[idx].j == b)) np.push_back(path[idx++]);
          if (idx == path.size()) continue;
          np.push_back({c, b, Dir::S, Dir::E});
          for (int j = b + 1; j < d; ++j) np.push_back({c, j, Dir::W, Dir::E});
          np.push_back({c, d, Dir::W, Dir::N});
          for (int i = c - 1; i > a; --i) np.push_back({i, d, Dir::S, Dir::N});
          np.push_back({a, d, Dir::S, Dir::E});
          std::size_t resume = k;
          while (resume < path.size() && !(path[resume].i == a && path[resume].j == d)) ++resume;
          if (resume == path.size()) continue;
          for (std::size_t r = resume + 1; r < path.size(); ++r) np.push_back(path[r]);

          auto rerouted = paths;
          rerouted[p] = std::move(np);
          auto grid = grid_from_paths(n, rerouted);
          if (!grid) continue;
          try {
            const BpdTrace after = trace_bpd(*grid);
            if (after.reduced && after.w == before.w) out.push_back(std::move(*grid));
          } catch (const InvalidBpd&) {
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BumplessPipeDream> droop_closure(const Permutation& w, int n) {
  std::set<BumplessPipeDream> seen{rothe_bpd(w, n)};
  std::deque<BumplessPipeDream> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const BumplessPipeDream cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : droops(cur))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  return {seen.begin(), seen.end()};
}

int blank_count(const BumplessPipeDream& bpd) {
  int count = 0;
  for (const auto& row : bpd.grid) count += static_cast<int>(std::count(row.begin(), row.end(), BpdTile::Blank));
  return count;
}

Polynomial bpd_weight_single(const BumplessPipeDream& bpd) {
  Polynomial p(1);
  for (int i = 1; i <= bpd.n; ++i)
    for (int j = 1; j <= bpd.n; ++j)
      if (bpd.at(i, j) == BpdTile::Blank) p *= Polynomial::x(i);
  return p;
}

Polynomial bpd_weight_double(const BumplessPipeDream& bpd) {
  Polynomial p(1);
  for (int i = 1; i <= bpd.n; ++i)
    for (int j = 1; j <= bpd.n; ++j)
      if (bpd.at(i, j) == BpdTile::Blank) p *= Polynomial::x(i) - Polynomial::y(j);
  return p;
}

std::string render_bpd(const BumplessPipeDream& bpd) {
  std::string out;
  for (const auto& row : bpd.grid) {
    for (BpdTile t : row) {
      switch (t) {
        case BpdTile::Blank: out += "░"; break;
        case BpdTile::Cross: out += "┼"; break;
        case BpdTile::Horizontal: out += "─"; break;
        case BpdTile::Vertical: out += "│"; break;
        case BpdTile::ElbowSE: out += "╭"; break;
        case BpdTile::ElbowNW: out += "╯"; break;
      }
    }
    out += '\n';
  }
  return out;
}

nlohmann::json bpd_to_json(const BumplessPipeDream& bpd) {
  nlohmann::json grid = nlohmann::json::array();
  for (const auto& row : bpd.grid) {
    nlohmann::json r = nlohmann::json::array();
    for (BpdTile t : row) r.push_back(tile_name(t));
    grid.push_back(std::move(r));
  }
  return {{"n", bpd.n}, {"grid", grid}};
}

BumplessPipeDream bpd_from_json(const nlohmann::json& doc) {
  BumplessPipeDream bpd{doc.at("n").get<int>(), {}};
  for (const auto& row : doc.at("grid")) {
    std::vector<BpdTile> r;
    for (const auto& t : row) r.push_back(tile_from_name(t.get<std::string>()));
    bpd.grid.push_back(std::move(r));
  }
  check_shape(bpd);
  return bpd;
}

}  // namespace schubert
