#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"

namespace matchbound {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !token.empty();
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace detail

// Edge-list text format:
//   - lines starting with '#' are comments, blank lines are ignored
//   - the first payload line is the vertex count n
//   - every further payload line is "u v" with 0 <= u < v < n
inline Graph parse_edge_list(std::string_view text) {
  Graph g;
  bool seen_n = false;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    std::size_t nl = text.find('\n');
    std::string_view line = (nl == std::string_view::npos) ? text : text.substr(0, nl);
    text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = detail::trim(line);
    if (line.empty() && nl == std::string_view::npos) break;
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split_fields(line);
    if (!seen_n) {
      int n = 0;
      if (fields.size() != 1 || !detail::parse_int(fields[0], n) || n < 0)
        throw parse_error(line_no, "expected vertex count");
      g = Graph(n);
      seen_n = true;
      continue;
    }
    int u = 0, v = 0;
    if (fields.size() != 2 || !detail::parse_int(fields[0], u) ||
        !detail::parse_int(fields[1], v))
      throw parse_error(line_no, "expected edge line \"u v\"");
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
      throw parse_error(line_no, "vertex id out of range");
    if (u >= v) throw parse_error(line_no, "edge endpoints must satisfy u < v");
    if (g.has_edge(u, v)) throw parse_error(line_no, "duplicate edge");
    g.add_edge(u, v);
  }
  if (!seen_n) throw parse_error(line_no == 0 ? 1 : line_no, "missing vertex count");
  return g;
}

// Inverse of parse_edge_list: vertex count line, then edges ascending.
inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n());
  out.push_back('\n');
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out.push_back(' ');
    out += std::to_string(e.v);
    out.push_back('\n');
  }
  return out;
}

inline std::string to_dot(const Graph& g, const Matching* highlight = nullptr) {
  std::string out = "graph {\n";
  for (int v = 0; v < g.n(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    if (highlight && highlight->contains(e)) out += " [style=bold color=firebrick]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string to_dot(const Graph& g, const Matching& highlight) {
  return to_dot(g, &highlight);
}

}  // namespace matchbound
