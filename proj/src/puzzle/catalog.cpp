#include "schubert/puzzle/catalog.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

namespace schubert::puzzle {

namespace {

// Position of an endpoint on the boundary of the cell read counterclockwise.
// Top sides run right to left in that reading.
int cyclic_position(const TileDef& t, Endpoint e) {
  int pos = 0;
  for (int s = 0; s < e.side; ++s) pos += t.counts[s];
  const bool reversed = side_is_horizontal(t.orientation, e.side) && e.side == 2;
  return pos + (reversed ? t.counts[e.side] - 1 - e.slot : e.slot);
}

bool chords_cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  return (a < c && c < b) != (a < d && d < b);
}

}  // namespace

CatalogError::CatalogError(int tile_index, const std::string& what)
    : std::runtime_error(tile_index >= 0 ? "tile " + std::to_string(tile_index) + ": " + what : what),
      tile_index_(tile_index) {}

int TileDef::pipes_in() const noexcept {
  int c = 0;
  for (int s = 0; s < 4; ++s)
    if (is_in_side(orientation, s)) c += counts[s];
  return c;
}

std::vector<std::pair<int, int>> geometric_crossings(const TileDef& tile) {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(tile.strands.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (chords_cross(cyclic_position(tile, tile.strands[a].in), cyclic_position(tile, tile.strands[a].out),
                       cyclic_position(tile, tile.strands[b].in), cyclic_position(tile, tile.strands[b].out)))
        out.emplace_back(a, b);
  return out;
}

std::vector<int> TileCatalog::tiles_with(Orientation o) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(tiles.size()); ++i)
    if (tiles[i].orientation == o) out.push_back(i);
  return out;
}

int TileCatalog::find(const std::string& tile_name, Orientation o) const {
  for (int i = 0; i < static_cast<int>(tiles.size()); ++i)
    if (tiles[i].name == tile_name && tiles[i].orientation == o) return i;
  return -1;
}

namespace {

TileDef parse_tile(const nlohmann::json& j, int index) {
  TileDef t;
  try {
    t.name = j.value("name", "tile" + std::to_string(index));
    t.orientation = orientation_from_name(j.at("orientation").get<std::string>());
    const auto& sides = j.at("sides");
    if (!sides.is_array() || sides.size() != 4) throw CatalogError(index, "expected 4 sides");
    for (int s = 0; s < 4; ++s) t.counts[s] = sides[s].at("endpoints").get<int>();
    t.valued = j.value("valued", false);
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(index, std::string("malformed tile: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CatalogError(index, e.what());
  }

  for (int s = 0; s < 4; ++s) {
    const int cap = side_is_horizontal(t.orientation, s) ? 2 : 1;
    if (t.counts[s] < 0 || t.counts[s] > cap)
      throw CatalogError(index, "side " + std::to_string(s) + " carries " + std::to_string(t.counts[s]) +
                                    " endpoints, capacity is " + std::to_string(cap));
  }
  int in = 0, out = 0;
  for (int s = 0; s < 4; ++s) (is_in_side(t.orientation, s) ? in : out) += t.counts[s];
  if (in != out)
    throw CatalogError(index, "conservation violated: " + std::to_string(in) + " in, " + std::to_string(out) + " out");

  std::vector<Endpoint> flat;
  for (int s = 0; s < 4; ++s)
    for (int k = 0; k < t.counts[s]; ++k) flat.push_back({s, k});
  const int total = static_cast<int>(flat.size());

  std::vector<int> used(total, 0);
  try {
    for (const auto& pair : j.at("matching")) {
      if (!pair.is_array() || pair.size() != 2) throw CatalogError(index, "malformed matching entry");
      int a = pair[0].get<int>(), b = pair[1].get<int>();
      if (a < 0 || b < 0 || a >= total || b >= total) throw CatalogError(index, "matching refers to a missing endpoint");
      ++used[a];
      ++used[b];
      Endpoint ea = flat[a], eb = flat[b];
      const bool ia = is_in_side(t.orientation, ea.side), ib = is_in_side(t.orientation, eb.side);
      if (ia == ib) throw CatalogError(index, "malformed matching: strand must join an in-side to an out-side");
      t.strands.push_back(ia ? Strand{ea, eb} : Strand{eb, ea});
    }
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(index, std::string("malformed matching: ") + e.what());
  }
  for (int e = 0; e < total; ++e)
    if (used[e] != 1) throw CatalogError(index, "malformed matching: endpoint " + std::to_string(e) + " used " +
                                                    std::to_string(used[e]) + " times");

  t.crossings = geometric_crossings(t);
  if (j.contains("crossings")) {
    std::vector<std::pair<int, int>> declared;
    try {
      for (const auto& c : j.at("crossings")) {
        int a = c.at(0).get<int>(), b = c.at(1).get<int>();
        declared.emplace_back(std::min(a, b), std::max(a, b));
      }
    } catch (const nlohmann::json::exception& e) {
      throw CatalogError(index, std::string("malformed crossings: ") + e.what());
    }
    std::sort(declared.begin(), declared.end());
    if (declared != t.crossings) throw CatalogError(index, "declared crossings disagree with the matching");
  }
  return t;
}

}  // namespace

TileCatalog load_catalog(const nlohmann::json& document) {
  if (!document.is_object() || !document.contains("tiles") || !document["tiles"].is_array())
    throw CatalogError(-1, "catalog document needs a 'tiles' array");
  TileCatalog c;
  c.name = document.value("name", "");
  int index = 0;
  for (const auto& tj : document["tiles"]) c.tiles.push_back(parse_tile(tj, index++));
  if (document.contains("requirements")) {
    const auto& r = document["requirements"];
    c.declared = RequirementTags{r.value("r1", false), r.value("r2", false), r.value("r3", false)};
  }
  return c;
}

TileCatalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError(-1, "cannot open catalog " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(-1, path + ": " + e.what());
  }
  return load_catalog(doc);
}

nlohmann::json catalog_to_json(const TileCatalog& catalog) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const TileDef& t : catalog.tiles) {
    auto flat_index = [&](Endpoint e) {
      int pos = 0;
      for (int s = 0; s < e.side; ++s) pos += t.counts[s];
      return pos + e.slot;
    };
    nlohmann::json sides = nlohmann::json::array();
    for (int s = 0; s < 4; ++s) sides.push_back({{"endpoints", t.counts[s]}});
    nlohmann::json matching = nlohmann::json::array();
    for (const Strand& st : t.strands) matching.push_back({flat_index(st.in), flat_index(st.out)});
    nlohmann::json crossings = nlohmann::json::array();
    for (auto [a, b] : t.crossings) crossings.push_back({a, b});
    tiles.push_back({{"name", t.name},
                     {"orientation", orientation_name(t.orientation)},
                     {"sides", sides},
                     {"matching", matching},
                     {"crossings", crossings},
                     {"valued", t.valued}});
  }
  nlohmann::json doc{{"name", catalog.name}, {"tiles", tiles}};
  if (catalog.declared)
    doc["requirements"] = {{"r1", catalog.declared->r1}, {"r2", catalog.declared->r2}, {"r3", catalog.declared->r3}};
  return doc;
}

std::string shipped_catalog_path(const std::string& short_name) {
  return std::string(SCHUBERT_DATA_DIR) + "/catalogs/" + short_name + ".json";
}

TileCatalog shipped_catalog(const std::string& short_name) {
  return load_catalog_file(shipped_catalog_path(short_name));
}

}  // namespace schubert::puzzle
