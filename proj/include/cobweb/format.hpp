#pragma once

// Text, CSV, JSON and DOT renderings of matrices, posets and tilings.
// Big integers always travel as decimal strings; small coordinates as JSON
// integers.

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cobweb/nat.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/tiling.hpp"

namespace cobweb {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// matrices

/// One row per line, entries separated by single spaces.
inline void write_matrix_text(std::ostream& os, const IncMatrix& m) {
  for (std::size_t x = 1; x <= m.dim(); ++x) {
    for (std::size_t y = 1; y <= m.dim(); ++y) {
      if (y > 1) os << ' ';
      os << m(x, y);
    }
    os << '\n';
  }
}

inline void write_matrix_csv(std::ostream& os, const IncMatrix& m) {
  for (std::size_t x = 1; x <= m.dim(); ++x) {
    for (std::size_t y = 1; y <= m.dim(); ++y) {
      if (y > 1) os << ',';
      os << m(x, y);
    }
    os << '\n';
  }
}

inline Json matrix_to_json(const IncMatrix& m) {
  Json rows = Json::array();
  for (std::size_t x = 1; x <= m.dim(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 1; y <= m.dim(); ++y) row.push_back(m(x, y).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IncMatrix matrix_from_json(const Json& rows) {
  IncMatrix m(rows.size());
  for (std::size_t x = 1; x <= rows.size(); ++x) {
    const Json& row = rows.at(x - 1);
    if (row.size() != rows.size()) throw std::invalid_argument("matrix_from_json: ragged rows");
    for (std::size_t y = 1; y <= row.size(); ++y) m.set(x, y, Int(row.at(y - 1).get<std::string>()));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Hasse diagram

/// Directed graph of cover edges, lower level -> higher level, one rank per
/// level. Nodes are named v<linear index> and labelled "j,s" and "#index".
inline void write_hasse_dot(std::ostream& os, const CobwebPoset& p) {
  os << "digraph cobweb {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t s = 1; s <= p.max_level(); ++s) {
    os << "  { rank=same;";
    const std::size_t first = p.level_offset(s);
    for (std::size_t x = first; x < first + p.level_size(s); ++x) {
      const VertexCoord v = p.coord_of(x);
      os << " v" << x << " [label=\"" << v.j << ',' << v.s << "\\n#" << x << "\"];";
    }
    os << " }\n";
  }
  for (std::size_t s = 1; s < p.max_level(); ++s) {
    const std::size_t lower = p.level_offset(s);
    const std::size_t upper = p.level_offset(s + 1);
    for (std::size_t x = lower; x < lower + p.level_size(s); ++x)
      for (std::size_t y = upper; y < upper + p.level_size(s + 1); ++y)
        if (p.covers(x, y)) os << "  v" << x << " -> v" << y << ";\n";
  }
  os << "}\n";
}

// ---------------------------------------------------------------------------
// tilings
//
// Text record:
//   tiling root=<r>,<k> height=<m> model=<literal|level_permuted> copies=<c> chains=<u>
//   copy <i>: L<k+1>{p,...} L<k+2>{p,...} ...
//   chain <p_1>.<p_2>...<p_m> -> <i>
// Copies are numbered from 1; chains are listed in lexicographic order.

namespace detail {
inline std::string join_positions(const std::vector<std::size_t>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}
}  // namespace detail

inline void write_tiling_text(std::ostream& os, const TilingSolution& t) {
  const ChainUniverse universe(t.root.s, t.height);
  os << "tiling root=" << t.root.j << ',' << t.root.s << " height=" << t.height
     << " model=" << to_string(t.model) << " copies=" << t.copies.size()
     << " chains=" << t.cover.size() << '\n';
  for (std::size_t i = 0; i < t.copies.size(); ++i) {
    os << "copy " << i + 1 << ':';
    for (std::size_t s = 1; s <= t.height; ++s)
      os << " L" << t.root.s + s << '{' << detail::join_positions(t.copies[i].chosen[s - 1], ',') << '}';
    os << '\n';
  }
  for (std::size_t rank = 0; rank < t.cover.size(); ++rank) {
    os << "chain " << detail::join_positions(universe.unrank(rank), '.') << " -> " << t.cover[rank] + 1
       << '\n';
  }
}

inline Json tiling_to_json(const TilingSolution& t) {
  const ChainUniverse universe(t.root.s, t.height);
  Json copies = Json::array();
  for (std::size_t i = 0; i < t.copies.size(); ++i) {
    Json levels = Json::array();
    for (std::size_t s = 1; s <= t.height; ++s)
      levels.push_back({{"level", t.root.s + s}, {"positions", t.copies[i].chosen[s - 1]}});
    copies.push_back({{"id", i + 1}, {"levels", std::move(levels)}});
  }
  Json assignment = Json::array();
  for (std::size_t rank = 0; rank < t.cover.size(); ++rank)
    assignment.push_back({{"chain", universe.unrank(rank)}, {"copy", t.cover[rank] + 1}});
  return {{"root", {{"r", t.root.j}, {"k", t.root.s}}},
          {"height", t.height},
          {"model", to_string(t.model)},
          {"copies", std::move(copies)},
          {"assignment", std::move(assignment)}};
}

inline TilingSolution tiling_from_json(const Json& j) {
  TilingSolution t;
  t.root = {j.at("root").at("r").get<std::size_t>(), j.at("root").at("k").get<std::size_t>()};
  t.height = j.at("height").get<std::size_t>();
  const auto model = j.at("model").get<std::string>();
  if (model == "literal") {
    t.model = CopyModel::literal;
  } else if (model == "level_permuted") {
    t.model = CopyModel::level_permuted;
  } else {
    throw std::invalid_argument("tiling_from_json: unknown model " + model);
  }
  for (const auto& copy : j.at("copies")) {
    CopySpec spec{t.root, {}};
    for (const auto& level : copy.at("levels"))
      spec.chosen.push_back(level.at("positions").get<std::vector<std::size_t>>());
    t.copies.push_back(std::move(spec));
  }
  const ChainUniverse universe(t.root.s, t.height);
  t.cover.assign(j.at("assignment").size(), 0);
  for (const auto& entry : j.at("assignment")) {
    const std::size_t rank = universe.rank(entry.at("chain").get<ChainTuple>());
    if (rank >= t.cover.size()) throw std::invalid_argument("tiling_from_json: chain outside assignment table");
    t.cover[rank] = entry.at("copy").get<std::size_t>() - 1;
  }
  return t;
}

}  // namespace cobweb
