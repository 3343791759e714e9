#include "schubert/puzzle/ybe.hpp"

#include <future>
#include <set>

#include <nlohmann/json.hpp>

namespace schubert::puzzle {

HexValuation ybe_valuation(int k) {
  HexValuation v;
  const Polynomial s = Polynomial::x(1) + Polynomial::y(1);
  for (int i = 1; i <= k; ++i) {
    v.x.push_back(Polynomial::x(i));
    v.y.push_back(i == 1 ? Polynomial::y(1) : s - Polynomial::x(i));
  }
  v.z = -s;
  return v;
}

HexValuation double_ybe_valuation(int k, bool y_zero) {
  HexValuation v;
  if (y_zero) {
    for (int i = 1; i <= k; ++i) {
      v.x.push_back(Polynomial::x(1));
      v.y.push_back(Polynomial(0));
    }
    v.z = Polynomial::x(1);
    return v;
  }
  const Polynomial s = Polynomial::x(1) + Polynomial::y(1);
  for (int i = 1; i <= k; ++i) {
    v.x.push_back(Polynomial::x(i));
    v.y.push_back(i == 1 ? Polynomial::y(1) : s - Polynomial::x(i));
  }
  v.z = s;
  return v;
}

std::vector<const YbeCase*> YbeReport::counterexamples() const {
  std::vector<const YbeCase*> out;
  for (const YbeCase& c : cases)
    if (!c.equal()) out.push_back(&c);
  return out;
}

nlohmann::json YbeReport::to_json() const {
  nlohmann::json items = nlohmann::json::array(), bad = nlohmann::json::array();
  for (const YbeCase& c : cases) {
    nlohmann::json j{{"boundary", c.key.to_string()},
                     {"left", c.left.to_string()},
                     {"right", c.right.to_string()},
                     {"equal", c.equal()}};
    if (!c.equal()) bad.push_back(j);
    items.push_back(std::move(j));
  }
  return {{"k", k},
          {"constraints", constraints},
          {"relation", relation},
          {"cases", items},
          {"counterexamples", bad},
          {"orbit_count", orbit_count},
          {"passed", passed()}};
}

namespace {

using VertexMap = Vertex (*)(Vertex, int);

Vertex mirror_vertex(Vertex v, int k) { return {k - v.q - v.r, v.r}; }
Vertex rotate_vertex(Vertex v, int k) { return {k - 1 - v.q, 2 - v.r}; }

Edge map_edge(const Edge& e, int k, VertexMap f) { return edge_between(f(e.start(), k), f(e.end(), k)); }

// Both symmetries flip left and right, so slots on a horizontal edge reverse.
PipeEnd map_end(const PipeEnd& p, int k, VertexMap f, const std::map<Edge, int>& counts) {
  const Edge e = map_edge(p.edge, k, f);
  const int n = counts.at(p.edge);
  return {e, e.horizontal() ? n - 1 - p.slot : p.slot};
}

BoundaryKey transform(const BoundaryKey& key, int k, VertexMap f, bool reverse) {
  const std::map<Edge, int> counts(key.counts.begin(), key.counts.end());
  BoundaryKey out;
  for (const auto& [e, n] : key.counts) out.counts.emplace_back(map_edge(e, k, f), n);
  for (const auto& [a, b] : key.links) {
    PipeEnd ma = map_end(a, k, f, counts), mb = map_end(b, k, f, counts);
    out.links.emplace_back(reverse ? mb : ma, reverse ? ma : mb);
  }
  std::sort(out.counts.begin(), out.counts.end());
  std::sort(out.links.begin(), out.links.end());
  return out;
}

}  // namespace

BoundaryKey mirror_key(const BoundaryKey& key, int k) { return transform(key, k, mirror_vertex, false); }
BoundaryKey rotate_key(const BoundaryKey& key, int k) { return transform(key, k, rotate_vertex, true); }

BoundaryKey canonical_key(const BoundaryKey& key, int k) {
  const BoundaryKey m = mirror_key(key, k), r = rotate_key(key, k), mr = mirror_key(r, k);
  return std::min({key, m, r, mr});
}

YbeReport ybe_check(const TileCatalog& catalog, int k, const HexValuation& valuation, const YbeOptions& options) {
  if (k < 1) throw std::invalid_argument("strip length k must be >= 1");
  Board left = hexagon_left(k, valuation), right = hexagon_right(k, valuation);
  if (options.swap_sides) std::swap(left, right);
  std::vector<EdgeLimit> limits;
  if (options.enforce_constraints)
    for (const Edge& e : hexagon_horizontal_boundary(k)) limits.push_back({e, 1});

  auto sweep = [&](const Board& b) { return boundary_values(b, catalog, limits, options.solve); };
  std::map<BoundaryKey, Polynomial> lv, rv;
  if (options.jobs > 1) {
    auto fut = std::async(std::launch::async, sweep, std::cref(right));
    lv = sweep(left);
    rv = fut.get();
  } else {
    lv = sweep(left);
    rv = sweep(right);
  }

  YbeReport report;
  report.k = k;
  report.constraints = options.enforce_constraints;
  report.relation = "x_i + y_i + z = 0";
  std::set<BoundaryKey> keys;
  for (const auto& [key, v] : lv) keys.insert(key);
  for (const auto& [key, v] : rv) keys.insert(key);
  std::set<BoundaryKey> orbits;
  for (const BoundaryKey& key : keys) {
    YbeCase c{key, lv.count(key) ? lv.at(key) : Polynomial(), rv.count(key) ? rv.at(key) : Polynomial()};
    if (!c.equal()) orbits.insert(canonical_key(key, k));
    report.cases.push_back(std::move(c));
  }
  report.orbit_count = static_cast<int>(orbits.size());
  return report;
}

YbeReport double_ybe_experiment(const TileCatalog& catalog, int k, bool y_zero, bool enforce_constraints) {
  YbeOptions o;
  o.enforce_constraints = enforce_constraints;
  YbeReport r = ybe_check(catalog, k, double_ybe_valuation(k, y_zero), o);
  r.relation = y_zero ? "x_i + y_i = z, y = 0" : "x_i + y_i = z";
  return r;
}

}  // namespace schubert::puzzle
