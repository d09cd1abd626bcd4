#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wdr/digraph.hpp"

// Digraph text format:
//
//   digraph <n>
//   # comment
//   <u> <v>
//
// The header is the first non-comment line. Blank lines and lines starting
// with '#' are ignored. Duplicate arc lines are an error.
namespace wdr {

class parse_error : public error {
 public:
  parse_error(int line, const std::string& what) : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline bool parse_int_tokens(std::string_view s, std::vector<long long>& out) {
  std::istringstream in{std::string(s)};
  std::string tok;
  out.clear();
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != tok.size()) return false;
    out.push_back(v);
  }
  return true;
}

}  // namespace detail

inline Digraph read_digraph(std::istream& in) {
  std::string raw;
  int lineno = 0;
  long long order = -1;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  std::vector<long long> nums;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (order < 0) {
      constexpr std::string_view kHeader = "digraph";
      if (line.substr(0, kHeader.size()) != kHeader) throw parse_error(lineno, "expected 'digraph <n>' header");
      if (!detail::parse_int_tokens(line.substr(kHeader.size()), nums) || nums.size() != 1)
        throw parse_error(lineno, "malformed header");
      if (nums[0] <= 0) throw parse_error(lineno, "order must be positive");
      order = nums[0];
      continue;
    }
    if (!detail::parse_int_tokens(line, nums) || nums.size() != 2) throw parse_error(lineno, "expected '<u> <v>'");
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= order || nums[1] >= order)
      throw parse_error(lineno, "vertex out of range");
    Arc a{static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1])};
    if (a.first == a.second) throw parse_error(lineno, "loop rejected");
    if (!seen.insert(a).second) throw parse_error(lineno, "duplicate arc");
    arcs.push_back(a);
  }
  if (order < 0) throw parse_error(lineno, "missing 'digraph <n>' header");
  return Digraph(static_cast<int>(order), arcs);
}

inline Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  try {
    return read_digraph(in);
  } catch (const parse_error& e) {
    throw error(path + ": " + e.what());
  }
}

// Writes the header, then each comment line prefixed by "# ", then arcs in
// lexicographic order.
inline void write_digraph(std::ostream& out, const Digraph& g, const std::vector<std::string>& comments = {}) {
  out << "digraph " << g.order() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
}

inline std::string to_text(const Digraph& g, const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  write_digraph(os, g, comments);
  return os.str();
}

// Sidecar mapping: one "# block <idx>: <v1> <v2> ..." line per block.
inline void write_block_map(std::ostream& out, const std::vector<std::vector<Vertex>>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out << "# block " << i << ':';
    for (Vertex v : blocks[i]) out << ' ' << v;
    out << '\n';
  }
}

inline std::vector<std::vector<Vertex>> read_block_map(std::istream& in) {
  std::vector<std::vector<Vertex>> blocks;
  std::string raw;
  int lineno = 0;
  std::vector<long long> nums;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = detail::trim(raw);
    if (line.empty()) continue;
    constexpr std::string_view kPrefix = "# block ";
    if (line.substr(0, kPrefix.size()) != kPrefix) throw parse_error(lineno, "expected '# block <idx>:'");
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw parse_error(lineno, "missing ':'");
    if (!detail::parse_int_tokens(line.substr(kPrefix.size(), colon - kPrefix.size()), nums) || nums.size() != 1 ||
        nums[0] != static_cast<long long>(blocks.size()))
      throw parse_error(lineno, "block index out of sequence");
    if (!detail::parse_int_tokens(line.substr(colon + 1), nums)) throw parse_error(lineno, "bad vertex list");
    blocks.emplace_back(nums.begin(), nums.end());
  }
  return blocks;
}

}  // namespace wdr
