#include "mogpi/environments.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mogpi {

namespace {

const char* kCanonicalMap =
    "; canonical Deep Sea Treasure map, 11x10\n"
    "S.........\n"
    "a.........\n"
    "#b........\n"
    "##c.......\n"
    "###def....\n"
    "######....\n"
    "######....\n"
    "######gh..\n"
    "########..\n"
    "########i.\n"
    "#########j\n"
    "\n"
    "a 0.7\n"
    "b 8.2\n"
    "c 11.5\n"
    "d 14.0\n"
    "e 15.1\n"
    "f 16.1\n"
    "g 19.6\n"
    "h 20.3\n"
    "i 22.4\n"
    "j 23.7\n";

bool is_treasure_letter(char c) { return c >= 'a' && c <= 'j'; }

}  // namespace

const std::string& canonical_dst_map_text() {
  static const std::string text(kCanonicalMap);
  return text;
}

DstMap canonical_dst_map() { return parse_dst_map(canonical_dst_map_text()); }

DstMap parse_dst_map(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> grid;
  bool in_grid = true;
  std::map<char, double> legend;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == ';') continue;
    if (in_grid) {
      if (line.empty()) {
        if (!grid.empty()) in_grid = false;
        continue;
      }
      for (char c : line)
        if (c != '.' && c != '#' && c != 'S' && !is_treasure_letter(c))
          throw std::invalid_argument("dst map line " + std::to_string(line_no) +
                                      ": unknown cell character '" +
                                      std::string(1, c) + "'");
      grid.push_back(line);
    } else {
      if (line.empty()) continue;
      std::istringstream ls(line);
      char letter;
      double value;
      if (!(ls >> letter >> value) || !is_treasure_letter(letter))
        throw std::invalid_argument("dst map line " + std::to_string(line_no) +
                                    ": bad legend entry");
      if (legend.count(letter))
        throw std::invalid_argument("dst map line " + std::to_string(line_no) +
                                    ": duplicate legend letter");
      legend[letter] = value;
    }
  }
  if (grid.empty()) throw std::invalid_argument("dst map: empty grid");

  DstMap map;
  map.rows = static_cast<int>(grid.size());
  map.cols = static_cast<int>(grid[0].size());
  int starts = 0;
  std::set<char> used_letters;
  for (int r = 0; r < map.rows; ++r) {
    if (static_cast<int>(grid[r].size()) != map.cols)
      throw std::invalid_argument("dst map: ragged grid row " +
                                  std::to_string(r));
    for (int c = 0; c < map.cols; ++c) {
      char ch = grid[r][c];
      if (ch == 'S') {
        if (++starts > 1)
          throw std::invalid_argument("dst map: duplicate start cell");
        map.start_cell = {r, c};
      } else if (ch == '#') {
        map.blocked_cells.emplace_back(r, c);
      } else if (is_treasure_letter(ch)) {
        if (used_letters.count(ch))
          throw std::invalid_argument("dst map: treasure letter used twice");
        used_letters.insert(ch);
        auto it = legend.find(ch);
        if (it == legend.end())
          throw std::invalid_argument(std::string("dst map: treasure '") + ch +
                                      "' missing from legend");
        map.treasure_cells.push_back({r, c, it->second});
      }
    }
  }
  if (starts == 0) throw std::invalid_argument("dst map: missing start cell");
  for (const auto& [letter, value] : legend)
    if (!used_letters.count(letter))
      throw std::invalid_argument(std::string("dst map: legend letter '") +
                                  letter + "' not present in grid");
  return map;
}

DstMap load_dst_map(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("dst map: cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_dst_map(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Momdp build_dst(const DstMap& map, double gamma) {
  if (map.rows <= 0 || map.cols <= 0)
    throw std::invalid_argument("build_dst: empty map");
  auto in_bounds = [&](int r, int c) {
    return r >= 0 && r < map.rows && c >= 0 && c < map.cols;
  };
  std::vector<double> treasure(map.rows * map.cols, 0.0);
  std::vector<bool> is_treasure(map.rows * map.cols, false);
  std::vector<bool> blocked(map.rows * map.cols, false);
  for (const auto& t : map.treasure_cells) {
    if (!in_bounds(t.row, t.col))
      throw std::invalid_argument("build_dst: treasure out of bounds");
    int idx = dst_state_index(map, t.row, t.col);
    if (is_treasure[idx])
      throw std::invalid_argument("build_dst: duplicate treasure cell");
    is_treasure[idx] = true;
    treasure[idx] = t.value;
  }
  for (const auto& [r, c] : map.blocked_cells) {
    if (!in_bounds(r, c))
      throw std::invalid_argument("build_dst: blocked cell out of bounds");
    int idx = dst_state_index(map, r, c);
    if (is_treasure[idx])
      throw std::invalid_argument("build_dst: treasure cell is blocked");
    blocked[idx] = true;
  }
  int start = dst_state_index(map, map.start_cell.first, map.start_cell.second);
  if (!in_bounds(map.start_cell.first, map.start_cell.second) ||
      is_treasure[start] || blocked[start])
    throw std::invalid_argument("build_dst: invalid start cell");

  const int states = map.rows * map.cols;
  const int actions = 4;
  constexpr int dr[] = {-1, 1, 0, 0};
  constexpr int dc[] = {0, 0, -1, 1};

  std::vector<std::vector<std::vector<Outcome>>> transitions(
      states, std::vector<std::vector<Outcome>>(actions));
  for (int r = 0; r < map.rows; ++r) {
    for (int c = 0; c < map.cols; ++c) {
      int s = dst_state_index(map, r, c);
      for (int a = 0; a < actions; ++a) {
        Vec reward(2);
        if (is_treasure[s] || blocked[s]) {
          // absorbing; never part of a return because entry is terminal
          reward << 0.0, map.time_penalty;
          transitions[s][a].push_back({s, reward, true, 1.0});
          continue;
        }
        int nr = r + dr[a];
        int nc = c + dc[a];
        int ns = s;
        if (in_bounds(nr, nc) && !blocked[dst_state_index(map, nr, nc)])
          ns = dst_state_index(map, nr, nc);
        reward << treasure[ns], map.time_penalty;
        transitions[s][a].push_back({ns, reward, is_treasure[ns], 1.0});
      }
    }
  }

  Vec mu = Vec::Zero(states);
  mu[start] = 1.0;
  return Momdp(states, actions, 2, gamma, std::move(mu),
               std::move(transitions));
}

Momdp build_synthetic(const SyntheticMomdpSpec& spec) {
  return Momdp(spec.state_count, spec.action_count, spec.objective_count,
               spec.gamma, spec.initial_distribution, spec.transitions);
}

}  // namespace mogpi
