#pragma once

#include <string>
#include <vector>

#include "mogpi/momdp.hpp"

namespace mogpi {

/// Grid description of a Deep Sea Treasure instance.
struct DstMap {
  int rows = 0;
  int cols = 0;
  struct Treasure {
    int row;
    int col;
    double value;
  };
  std::vector<Treasure> treasure_cells;
  std::vector<std::pair<int, int>> blocked_cells;
  std::pair<int, int> start_cell{0, 0};
  double time_penalty = -1.0;
};

/// Parses the plain-text grid format:
///   - lines starting with ';' are comments and ignored
///   - grid lines use '.' blank, '#' blocked, 'S' start, 'a'-'j' treasures
///   - a blank line ends the grid; legend lines follow as "<letter> <value>"
/// Rejects ragged grids, duplicate starts, unknown characters, and
/// treasure letters without a legend entry (or vice versa).
DstMap parse_dst_map(const std::string& text);

DstMap load_dst_map(const std::string& path);

/// The canonical 11x10 map shipped with the repo (see data/dst_canonical.map).
const std::string& canonical_dst_map_text();
DstMap canonical_dst_map();

/// Grid cell <-> dense state index encoding (row-major over in-bounds cells).
inline int dst_state_index(const DstMap& map, int row, int col) {
  return row * map.cols + col;
}

/// DST actions, in table order.
enum DstAction { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };

/// Builds the MOMDP: m=2, reward = (treasure at entered cell or 0,
/// time_penalty), treasure cells terminal, moves into walls or blocked
/// cells leave the state unchanged.
Momdp build_dst(const DstMap& map, double gamma);

/// Explicit MOMDP spec used as a test/oracle fixture.
struct SyntheticMomdpSpec {
  std::string name;
  int state_count = 0;
  int action_count = 0;
  int objective_count = 0;
  double gamma = 0.0;
  Vec initial_distribution;
  std::vector<std::vector<std::vector<Outcome>>> transitions;
};

Momdp build_synthetic(const SyntheticMomdpSpec& spec);

}  // namespace mogpi
