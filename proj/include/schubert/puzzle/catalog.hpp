#pragma once

/**
 * @file catalog.hpp
 * @brief Tile definitions and their JSON form.
 *
 * A tile fixes how many pipes cross each side of a cell and how they are wired.
 * Endpoints are numbered side by side (sides in cell order, see lattice.hpp)
 * and, on a horizontal side, left to right. A strand joins one endpoint on an
 * in-side to one on an out-side. Which strands cross is determined by the
 * geometry; the `crossings` field of a document must agree with it.
 *
 * Document shape:
 *   {"name": ..., "tiles": [{"name": ..., "orientation": "p60"|"p120"|"diamond",
 *     "sides": [{"endpoints": n}, x4], "matching": [[a,b], ...],
 *     "crossings": [[s,t], ...], "valued": bool}, ...],
 *    "requirements": {"r1": bool, "r2": bool, "r3": bool}}   (optional tags)
 */

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "schubert/puzzle/lattice.hpp"

namespace schubert::puzzle {

/// Schema violation in a catalog document; `tile_index` is -1 for catalog-level errors.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(int tile_index, const std::string& what);
  int tile_index() const noexcept { return tile_index_; }

 private:
  int tile_index_;
};

struct Endpoint {
  int side = 0;
  int slot = 0;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Strand {
  Endpoint in, out;
};

struct TileDef {
  std::string name;
  Orientation orientation = Orientation::P60;
  std::array<int, 4> counts{};
  std::vector<Strand> strands;
  /// Pairs of strand indices whose chords cross, sorted.
  std::vector<std::pair<int, int>> crossings;
  bool valued = false;

  int pipes_in() const noexcept;
};

/// Crossing pairs implied by the wiring of `tile`.
std::vector<std::pair<int, int>> geometric_crossings(const TileDef& tile);

struct RequirementTags {
  bool r1 = false, r2 = false, r3 = false;
  friend bool operator==(const RequirementTags&, const RequirementTags&) = default;
};

struct TileCatalog {
  std::string name;
  std::vector<TileDef> tiles;
  std::optional<RequirementTags> declared;

  std::vector<int> tiles_with(Orientation o) const;
  /// Index of the first tile with this name and orientation, or -1.
  int find(const std::string& tile_name, Orientation o) const;
};

/// Parses and validates capacity, conservation, matching and declared crossings.
TileCatalog load_catalog(const nlohmann::json& document);
TileCatalog load_catalog_file(const std::string& path);
nlohmann::json catalog_to_json(const TileCatalog& catalog);

/// Shipped catalog by short name ("full", "pd", "bpd"), read from the data directory.
TileCatalog shipped_catalog(const std::string& short_name);
std::string shipped_catalog_path(const std::string& short_name);

}  // namespace schubert::puzzle
