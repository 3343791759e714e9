#include "schubert/pipe_dream.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace schubert {

namespace {

std::vector<Cell> staircase(int n) {
  std::vector<Cell> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) cells.emplace_back(i, j);
  return cells;
}

}  // namespace

PipeTrace trace_pipe_dream(const PipeDream& pd, int crossing_bound) {
  const int n = pd.n;
  for (const auto& [i, j] : pd.crosses) {
    if (i < 1 || j < 1 || i + j > n) {
      throw std::invalid_argument("cross (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") outside the staircase of size " + std::to_string(n));
    }
  }
  // Sweep cells row by row from the bottom, left to right. west[i] is the pipe
  // arriving from the west in the current row, south[j] the pipe arriving from below.
  std::vector<int> south(n + 2, 0);
  std::map<std::pair<int, int>, int> meetings;
  bool reduced = true;
  for (int i = n; i >= 1; --i) {
    int west = i;
    for (int j = 1; j <= n + 1 - i; ++j) {
      const int from_south = south[j];
      if (pd.crosses.count({i, j})) {
        auto key = std::minmax(west, from_south);
        if (++meetings[{key.first, key.second}] > crossing_bound) reduced = false;
        south[j] = from_south;  // unchanged, continues north
      } else {
        south[j] = west;  // west pipe turns north
        west = from_south;  // south pipe turns east
      }
    }
  }
  std::vector<int> one_line(n, 0);
  for (int j = 1; j <= n; ++j) one_line[south[j] - 1] = j;
  return {Permutation::from_one_line(one_line), reduced};
}

Permutation pd_permutation(const PipeDream& pd) { return trace_pipe_dream(pd).w; }

std::vector<PipeDream> enumerate_pds(const Permutation& w, int n) {
  if (!w.in_group(n)) throw std::invalid_argument(w.to_string() + " is not in S_" + std::to_string(n));
  const std::vector<Cell> cells = staircase(n);
  const int len = w.length();
  std::vector<PipeDream> out;
  const std::size_t total = std::size_t{1} << cells.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) != len) continue;
    PipeDream pd{n, {}};
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (mask >> b & 1U) pd.crosses.insert(cells[b]);
    const PipeTrace t = trace_pipe_dream(pd);
    if (t.reduced && t.w == w) out.push_back(std::move(pd));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_reduced_pipe_dreams(int n) {
  const std::vector<Cell> cells = staircase(n);
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells.size()); ++mask) {
    PipeDream pd{n, {}};
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (mask >> b & 1U) pd.crosses.insert(cells[b]);
    if (trace_pipe_dream(pd).reduced) ++count;
  }
  return count;
}

Polynomial pd_weight_single(const PipeDream& pd) {
  Polynomial p(1);
  for (const auto& [i, j] : pd.crosses) p *= Polynomial::x(i);
  return p;
}

Polynomial pd_weight_double(const PipeDream& pd) {
  Polynomial p(1);
  for (const auto& [i, j] : pd.crosses) p *= Polynomial::x(i) - Polynomial::y(j);
  return p;
}

std::string render_pipe_dream(const PipeDream& pd) {
  std::string out;
  for (int i = 1; i <= pd.n; ++i) {
    for (int j = 1; j <= pd.n + 1 - i; ++j) out += pd.crosses.count({i, j}) ? "┼" : "╭";
    out += '\n';
  }
  return out;
}

nlohmann::json pipe_dream_to_json(const PipeDream& pd) {
  nlohmann::json crosses = nlohmann::json::array();
  for (const auto& [i, j] : pd.crosses) crosses.push_back({i, j});
  return {{"n", pd.n}, {"crosses", crosses}};
}

PipeDream pipe_dream_from_json(const nlohmann::json& doc) {
  PipeDream pd{doc.at("n").get<int>(), {}};
  for (const auto& c : doc.at("crosses")) pd.crosses.emplace(c.at(0).get<int>(), c.at(1).get<int>());
  return pd;
}

}  // namespace schubert
