#include "ltlwb/instances.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "ltlwb/errors.hpp"

namespace ltlwb {

namespace {

struct Line {
  std::string text;
  std::size_t offset;
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    out.push_back({line, pos});
    pos = end + 1;
  }
  return out;
}

long read_long(std::istringstream& in, std::size_t offset, const char* what) {
  std::string tok;
  if (!(in >> tok)) throw ParseError(std::string("expected ") + what, offset);
  char* stop = nullptr;
  long v = std::strtol(tok.c_str(), &stop, 10);
  if (tok.empty() || *stop != '\0') throw ParseError(std::string("bad ") + what, offset);
  return v;
}

bool valid_color(const std::string& c) {
  if (c.empty()) return false;
  return std::all_of(c.begin(), c.end(), [](unsigned char ch) {
    return std::isalnum(ch) || ch == '_';
  });
}

struct TilingText {
  std::vector<std::string> colors;
  std::vector<Tile> tiles;
  int k = -1;
  int c0 = -1;
  int c1 = -1;
};

TilingText parse_tiling_text(std::string_view text) {
  TilingText t;
  std::map<std::string, int> index;
  bool have_colors = false;
  auto color = [&](std::istringstream& in, std::size_t offset) {
    std::string c;
    if (!(in >> c)) throw ParseError("expected color", offset);
    auto it = index.find(c);
    if (it == index.end()) throw ParseError("unknown color '" + c + "'", offset);
    return it->second;
  };
  for (const auto& [line, offset] : lines_of(text)) {
    std::istringstream in(line);
    std::string kw;
    if (!(in >> kw)) continue;
    if (kw == "colors") {
      if (have_colors) throw ParseError("duplicate colors line", offset);
      have_colors = true;
      std::string c;
      while (in >> c) {
        if (!valid_color(c)) throw ParseError("bad color name '" + c + "'", offset);
        if (!index.emplace(c, static_cast<int>(t.colors.size())).second)
          throw ParseError("duplicate color '" + c + "'", offset);
        t.colors.push_back(c);
      }
      if (t.colors.empty()) throw ParseError("empty color list", offset);
      continue;
    }
    if (!have_colors) throw ParseError("'" + kw + "' before colors line", offset);
    if (kw == "tile") {
      Tile tile{};
      tile.up = color(in, offset);
      tile.down = color(in, offset);
      tile.left = color(in, offset);
      tile.right = color(in, offset);
      t.tiles.push_back(tile);
    } else if (kw == "k") {
      std::string unary;
      if (!(in >> unary) || unary.empty() ||
          unary.find_first_not_of('1') != std::string::npos)
        throw ParseError("k must be a unary string of 1s", offset);
      t.k = static_cast<int>(unary.size());
    } else if (kw == "bounds") {
      t.c0 = color(in, offset);
      t.c1 = color(in, offset);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", offset);
    }
    std::string extra;
    if (in >> extra) throw ParseError("trailing token '" + extra + "'", offset);
  }
  if (!have_colors) throw ParseError("missing colors line", 0);
  return t;
}

void validate_tiles(const std::vector<std::string>& colors, const std::vector<Tile>& tiles) {
  if (colors.empty()) throw InvalidInstance("no colors");
  if (tiles.empty()) throw InvalidInstance("no tiles");
  int nc = static_cast<int>(colors.size());
  for (const auto& t : tiles)
    for (int c : {t.up, t.down, t.left, t.right})
      if (c < 0 || c >= nc) throw InvalidInstance("tile color out of range");
  for (const auto& c : colors)
    if (!valid_color(c)) throw InvalidInstance("bad color name '" + c + "'");
}

std::string write_tiles(const std::vector<std::string>& colors, const std::vector<Tile>& tiles) {
  std::string out = "colors";
  for (const auto& c : colors) out += " " + c;
  out += "\n";
  for (const auto& t : tiles)
    out += "tile " + colors[t.up] + " " + colors[t.down] + " " + colors[t.left] + " " +
           colors[t.right] + "\n";
  return out;
}

}  // namespace

int PwSatInstance::partition_of(int v) const {
  for (int p = 0; p < k(); ++p)
    if (std::find(partitions[p].begin(), partitions[p].end(), v) != partitions[p].end()) return p;
  throw InvalidInstance("variable " + std::to_string(v) + " is in no partition");
}

void PwSatInstance::validate() const {
  if (k() < 1) throw InvalidInstance("at least one partition is required");
  if (capacities.size() != partitions.size())
    throw InvalidInstance("every partition needs exactly one capacity");
  std::vector<int> owner(cnf.num_vars + 1, -1);
  for (int p = 0; p < k(); ++p) {
    for (int v : partitions[p]) {
      if (v < 1 || v > cnf.num_vars)
        throw InvalidInstance("partition " + std::to_string(p + 1) + " has unknown variable");
      if (owner[v] >= 0)
        throw InvalidInstance("variable " + std::to_string(v) + " is in two partitions");
      owner[v] = p;
    }
    if (capacities[p] < 0 || capacities[p] > static_cast<int>(partitions[p].size()))
      throw InvalidInstance("capacity of partition " + std::to_string(p + 1) + " out of range");
  }
  for (int v = 1; v <= cnf.num_vars; ++v)
    if (owner[v] < 0) throw InvalidInstance("variable " + std::to_string(v) + " is in no partition");
}

PwSatInstance parse_pwsat(std::string_view text) {
  PwSatInstance inst;
  inst.cnf = parse_dimacs(text);
  std::map<int, std::vector<int>> parts;
  std::map<int, int> caps;
  for (const auto& [line, offset] : lines_of(text)) {
    std::istringstream in(line);
    std::string kw;
    if (!(in >> kw)) continue;
    if (kw == "partition") {
      int p = static_cast<int>(read_long(in, offset, "partition index"));
      if (p < 1) throw ParseError("partition index must be positive", offset);
      if (parts.count(p)) throw ParseError("duplicate partition line", offset);
      auto& vs = parts[p];
      std::string tok;
      while (in >> tok) {
        char* stop = nullptr;
        long v = std::strtol(tok.c_str(), &stop, 10);
        if (*stop != '\0') throw ParseError("bad variable '" + tok + "'", offset);
        vs.push_back(static_cast<int>(v));
      }
    } else if (kw == "capacity") {
      int p = static_cast<int>(read_long(in, offset, "partition index"));
      int c = static_cast<int>(read_long(in, offset, "capacity"));
      if (caps.count(p)) throw ParseError("duplicate capacity line", offset);
      caps[p] = c;
    }
  }
  int k = parts.empty() ? 0 : parts.rbegin()->first;
  for (int p = 1; p <= k; ++p) {
    if (!parts.count(p)) throw InvalidInstance("partition " + std::to_string(p) + " missing");
    if (!caps.count(p)) throw InvalidInstance("capacity " + std::to_string(p) + " missing");
    inst.partitions.push_back(parts[p]);
    inst.capacities.push_back(caps[p]);
  }
  if (static_cast<int>(caps.size()) != k) throw InvalidInstance("capacity for unknown partition");
  inst.validate();
  return inst;
}

std::string write_pwsat(const PwSatInstance& i) {
  std::string out = write_dimacs(i.cnf);
  for (int p = 0; p < i.k(); ++p) {
    out += "partition " + std::to_string(p + 1);
    for (int v : i.partitions[p]) out += " " + std::to_string(v);
    out += "\ncapacity " + std::to_string(p + 1) + " " + std::to_string(i.capacities[p]) + "\n";
  }
  return out;
}

void SquareTilingInstance::validate() const {
  validate_tiles(colors, tiles);
  if (k < 1) throw InvalidInstance("k must be at least 1");
}

void RectTilingInstance::validate() const {
  validate_tiles(colors, tiles);
  int nc = static_cast<int>(colors.size());
  if (c0 < 0 || c0 >= nc || c1 < 0 || c1 >= nc) throw InvalidInstance("bad boundary colors");
}

SquareTilingInstance parse_square_tiling(std::string_view text) {
  TilingText t = parse_tiling_text(text);
  if (t.k < 0) throw ParseError("missing k line", 0);
  SquareTilingInstance s{t.colors, t.tiles, t.k};
  s.validate();
  return s;
}

RectTilingInstance parse_rect_tiling(std::string_view text) {
  TilingText t = parse_tiling_text(text);
  if (t.c0 < 0) throw ParseError("missing bounds line", 0);
  RectTilingInstance r{t.colors, t.tiles, t.c0, t.c1};
  r.validate();
  return r;
}

std::string write_square_tiling(const SquareTilingInstance& t) {
  return write_tiles(t.colors, t.tiles) + "k " + std::string(t.k, '1') + "\n";
}

std::string write_rect_tiling(const RectTilingInstance& t) {
  return write_tiles(t.colors, t.tiles) + "bounds " + t.colors[t.c0] + " " + t.colors[t.c1] +
         "\n";
}

}  // namespace ltlwb
