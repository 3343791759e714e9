#include "schubert/puzzle/solver.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace schubert::puzzle {

namespace {

std::string end_string(const PipeEnd& p) { return p.edge.to_string() + "#" + std::to_string(p.slot); }

class Search {
 public:
  using Leaf = std::function<void(const std::vector<int>& tiles, std::vector<TracedPipe>&& pipes)>;

  Search(const Board& board, const TileCatalog& catalog, const SolveOptions& options)
      : board_(board), catalog_(catalog), options_(options), geo_(board) {
    required_.assign(geo_.edges.size(), -1);
    limit_.resize(geo_.edges.size());
    for (std::size_t e = 0; e < geo_.edges.size(); ++e) limit_[e] = geo_.edges[e].capacity();
    for (const BoardCell& c : board.cells) candidates_.push_back(catalog.tiles_with(c.orientation));
  }

  const BoardGeometry& geometry() const { return geo_; }

  void apply_rule(const Rule& rule) {
    for (std::size_t e = 0; e < geo_.edges.size(); ++e)
      if (geo_.is_boundary(static_cast<int>(e))) required_[e] = 0;
    std::set<std::string> seen;
    int in = 0, out = 0;
    for (const RuleEndpoint& ep : rule.endpoints) {
      const int e = geo_.edge_id(ep.edge);
      if (e < 0 || !geo_.is_boundary(e)) throw BoardError("rule endpoint " + ep.edge.to_string() + " is not on the boundary");
      if (static_cast<int>(ep.labels.size()) > ep.edge.capacity())
        throw BoardError("too many endpoints on " + ep.edge.to_string());
      required_[e] = static_cast<int>(ep.labels.size());
      (geo_.is_source(e) ? in : out) += required_[e];
      for (int k = 0; k < required_[e]; ++k) {
        if (!seen.insert(ep.labels[k]).second) throw BoardError("duplicate label " + ep.labels[k]);
        labels_[{e, k}] = ep.labels[k];
      }
    }
    if (in != out) throw BoardError("rule has " + std::to_string(in) + " sources but " + std::to_string(out) + " sinks");
    for (const auto& [a, b] : rule.connections)
      if (!seen.count(a) || !seen.count(b)) throw BoardError("connection names an unknown label");
    connections_ = rule.connections;
    apply_limits(rule.edge_limits);
  }

  void apply_limits(const std::vector<EdgeLimit>& limits) {
    for (const EdgeLimit& l : limits) {
      const int e = geo_.edge_id(l.edge);
      if (e < 0) throw BoardError("edge limit on " + l.edge.to_string() + " which is not on the board");
      limit_[e] = std::min(limit_[e], l.max);
    }
  }

  void run(const Leaf& leaf) {
    leaf_ = &leaf;
    plan_order();
    assigned_.assign(geo_.edges.size(), -1);
    tiles_.assign(board_.cells.size(), -1);
    place(0);
  }

 private:
  // Most constrained cell first: the one with the most sides already pinned.
  void plan_order() {
    const int m = static_cast<int>(board_.cells.size());
    std::vector<char> known(geo_.edges.size(), 0), used(m, 0);
    for (std::size_t e = 0; e < geo_.edges.size(); ++e) known[e] = required_[e] >= 0;
    order_.clear();
    for (int step = 0; step < m; ++step) {
      int best = -1, best_score = -1;
      for (int c = 0; c < m; ++c) {
        if (used[c]) continue;
        int score = 0;
        for (int e : geo_.cell_edges[c]) score += known[e];
        if (score > best_score) best = c, best_score = score;
      }
      used[best] = 1;
      order_.push_back(best);
      for (int e : geo_.cell_edges[best]) known[e] = 1;
    }
  }

  void place(std::size_t depth) {
    if (depth == order_.size()) {
      finish();
      return;
    }
    const int c = order_[depth];
    const auto& sides = geo_.cell_edges[c];
    for (int t : candidates_[c]) {
      const TileDef& tile = catalog_.tiles[t];
      bool fits = true;
      for (int s = 0; s < 4 && fits; ++s) {
        const int e = sides[s], n = tile.counts[s];
        fits = n <= limit_[e] && (required_[e] < 0 || required_[e] == n) && (assigned_[e] < 0 || assigned_[e] == n);
      }
      if (!fits) continue;
      std::array<bool, 4> set_here{};
      for (int s = 0; s < 4; ++s)
        if (assigned_[sides[s]] < 0) {
          assigned_[sides[s]] = tile.counts[s];
          set_here[s] = true;
        }
      tiles_[c] = t;
      place(depth + 1);
      tiles_[c] = -1;
      for (int s = 0; s < 4; ++s)
        if (set_here[s]) assigned_[sides[s]] = -1;
    }
  }

  void finish() {
    const int m = static_cast<int>(board_.cells.size());
    // entry[edge][slot] = (cell, strand) that takes the pipe in through that position.
    std::vector<std::array<std::pair<int, int>, 2>> entry(geo_.edges.size(), {{{-1, -1}, {-1, -1}}});
    int strands = 0;
    for (int c = 0; c < m; ++c) {
      const TileDef& tile = catalog_.tiles[tiles_[c]];
      for (int k = 0; k < static_cast<int>(tile.strands.size()); ++k)
        entry[geo_.cell_edges[c][tile.strands[k].in.side]][tile.strands[k].in.slot] = {c, k};
      strands += static_cast<int>(tile.strands.size());
    }

    std::vector<std::vector<int>> pipe_of(m);
    for (int c = 0; c < m; ++c) pipe_of[c].assign(catalog_.tiles[tiles_[c]].strands.size(), -1);
    std::vector<TracedPipe> pipes;
    int visited = 0;
    for (int e = 0; e < static_cast<int>(geo_.edges.size()); ++e) {
      if (!geo_.is_source(e)) continue;
      for (int slot = 0; slot < assigned_[e]; ++slot) {
        TracedPipe p;
        p.from = {geo_.edges[e], slot};
        int edge = e, pos = slot;
        const int id = static_cast<int>(pipes.size());
        while (true) {
          auto [c, k] = entry[edge][pos];
          if (c < 0 || pipe_of[c][k] >= 0) return;  // broken wiring or a revisit
          pipe_of[c][k] = id;
          ++visited;
          p.cells.push_back(c);
          p.strands.push_back(k);
          const Strand& st = catalog_.tiles[tiles_[c]].strands[k];
          edge = geo_.cell_edges[c][st.out.side];
          pos = st.out.slot;
          if (geo_.is_boundary(edge)) break;
        }
        p.to = {geo_.edges[edge], pos};
        if (auto it = labels_.find({e, slot}); it != labels_.end()) p.source_label = it->second;
        if (auto it = labels_.find({edge, pos}); it != labels_.end()) p.sink_label = it->second;
        pipes.push_back(std::move(p));
      }
    }
    if (visited != strands) return;  // a closed loop never touches the boundary

    std::map<std::pair<int, int>, int> crossings;
    for (int c = 0; c < m; ++c)
      for (auto [a, b] : catalog_.tiles[tiles_[c]].crossings) {
        auto key = std::minmax(pipe_of[c][a], pipe_of[c][b]);
        if (++crossings[{key.first, key.second}] > options_.crossing_bound) return;
      }

    for (const auto& [a, b] : connections_) {
      const bool joined = std::any_of(pipes.begin(), pipes.end(), [&](const TracedPipe& p) {
        return (p.source_label == a && p.sink_label == b) || (p.source_label == b && p.sink_label == a);
      });
      if (!joined) return;
    }
    (*leaf_)(tiles_, std::move(pipes));
  }

  const Board& board_;
  const TileCatalog& catalog_;
  SolveOptions options_;
  BoardGeometry geo_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> required_, limit_, assigned_, tiles_, order_;
  std::map<std::pair<int, int>, std::string> labels_;
  std::vector<std::pair<std::string, std::string>> connections_;
  const Leaf* leaf_ = nullptr;
};

}  // namespace

std::vector<Solution> solve(const Board& board, const Rule& rule, const TileCatalog& catalog,
                            const SolveOptions& options) {
  Search search(board, catalog, options);
  search.apply_rule(rule);
  std::vector<Solution> out;
  search.run([&](const std::vector<int>& tiles, std::vector<TracedPipe>&& pipes) {
    out.push_back({tiles, std::move(pipes)});
  });
  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) { return a.tiles < b.tiles; });
  return out;
}

Polynomial solution_value(const Board& board, const TileCatalog& catalog, const Solution& solution) {
  Polynomial v(1);
  for (std::size_t c = 0; c < board.cells.size(); ++c)
    if (catalog.tiles[solution.tiles[c]].valued) v *= board.cells[c].valuation;
  return v;
}

Polynomial value(const Board& board, const Rule& rule, const TileCatalog& catalog, const SolveOptions& options) {
  Polynomial total;
  for (const Solution& s : solve(board, rule, catalog, options)) total += solution_value(board, catalog, s);
  return total;
}

std::string BoundaryKey::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, n] : counts) {
    if (n == 0) continue;
    os << (first ? "" : " ") << e.to_string() << "=" << n;
    first = false;
  }
  os << " |";
  for (const auto& [a, b] : links) os << " " << end_string(a) << "->" << end_string(b);
  return os.str();
}

std::map<BoundaryKey, Polynomial> boundary_values(const Board& board, const TileCatalog& catalog,
                                                  const std::vector<EdgeLimit>& limits,
                                                  const SolveOptions& options) {
  Search search(board, catalog, options);
  search.apply_limits(limits);
  const BoardGeometry& geo = search.geometry();
  std::vector<int> boundary;
  for (int e = 0; e < static_cast<int>(geo.edges.size()); ++e)
    if (geo.is_boundary(e)) boundary.push_back(e);
  std::sort(boundary.begin(), boundary.end(), [&](int a, int b) { return geo.edges[a] < geo.edges[b]; });

  std::map<BoundaryKey, Polynomial> out;
  search.run([&](const std::vector<int>& tiles, std::vector<TracedPipe>&& pipes) {
    BoundaryKey key;
    for (int e : boundary) {
      // The cell on the edge decides the count.
      const auto& inc = geo.incidences[e][0];
      key.counts.emplace_back(geo.edges[e], catalog.tiles[tiles[inc.cell]].counts[inc.side]);
    }
    for (const TracedPipe& p : pipes) key.links.emplace_back(p.from, p.to);
    std::sort(key.links.begin(), key.links.end());
    out[key] += solution_value(board, catalog, Solution{tiles, {}});
  });
  return out;
}

SolutionAudit audit_solution(const Board& board, const TileCatalog& catalog, const Solution& solution) {
  SolutionAudit a;
  const BoardGeometry geo(board);
  const int m = static_cast<int>(board.cells.size());
  if (static_cast<int>(solution.tiles.size()) != m) return a;

  a.orientations = true;
  for (int c = 0; c < m; ++c) {
    const int t = solution.tiles[c];
    if (t < 0 || t >= static_cast<int>(catalog.tiles.size()) ||
        catalog.tiles[t].orientation != board.cells[c].orientation)
      a.orientations = false;
  }
  if (!a.orientations) return a;

  a.conservation = true;
  for (int c = 0; c < m; ++c) {
    const TileDef& t = catalog.tiles[solution.tiles[c]];
    int in = 0, out = 0;
    for (int s = 0; s < 4; ++s) (is_in_side(t.orientation, s) ? in : out) += t.counts[s];
    if (in != out) a.conservation = false;
  }

  a.edges_match = true;
  for (std::size_t e = 0; e < geo.edges.size(); ++e) {
    const auto& inc = geo.incidences[e];
    if (inc.size() == 2 && catalog.tiles[solution.tiles[inc[0].cell]].counts[inc[0].side] !=
                               catalog.tiles[solution.tiles[inc[1].cell]].counts[inc[1].side])
      a.edges_match = false;
  }
  if (!a.edges_match) return a;

  std::map<std::pair<int, int>, std::pair<int, int>> entry;
  int strands = 0;
  for (int c = 0; c < m; ++c) {
    const TileDef& t = catalog.tiles[solution.tiles[c]];
    for (int k = 0; k < static_cast<int>(t.strands.size()); ++k)
      entry[{geo.cell_edges[c][t.strands[k].in.side], t.strands[k].in.slot}] = {c, k};
    strands += static_cast<int>(t.strands.size());
  }
  std::set<std::pair<int, int>> seen;
  bool clean = true;
  for (int e = 0; e < static_cast<int>(geo.edges.size()) && clean; ++e) {
    if (!geo.is_source(e)) continue;
    const auto& inc = geo.incidences[e][0];
    for (int slot = 0; slot < catalog.tiles[solution.tiles[inc.cell]].counts[inc.side] && clean; ++slot) {
      std::pair<int, int> at{e, slot};
      while (clean) {
        auto it = entry.find(at);
        if (it == entry.end() || !seen.insert(it->second).second) {
          clean = false;
          break;
        }
        auto [c, k] = it->second;
        const Strand& st = catalog.tiles[solution.tiles[c]].strands[k];
        at = {geo.cell_edges[c][st.out.side], st.out.slot};
        if (geo.is_boundary(at.first)) break;
      }
    }
  }
  a.acyclic = clean && static_cast<int>(seen.size()) == strands;
  return a;
}

std::string render_solution(const Board& board, const TileCatalog& catalog, const Solution& solution) {
  std::ostringstream os;
  for (std::size_t c = 0; c < board.cells.size(); ++c) {
    const BoardCell& cell = board.cells[c];
    const TileDef& t = catalog.tiles[solution.tiles[c]];
    os << "(" << cell.pos.q << "," << cell.pos.r << ") " << orientation_name(cell.orientation) << " " << t.name;
    if (t.valued) os << " * " << cell.valuation.to_string();
    os << "\n";
  }
  for (const TracedPipe& p : solution.pipes) {
    os << (p.source_label.empty() ? end_string(p.from) : p.source_label) << " -> "
       << (p.sink_label.empty() ? end_string(p.to) : p.sink_label) << "\n";
  }
  return os.str();
}

}  // namespace schubert::puzzle
