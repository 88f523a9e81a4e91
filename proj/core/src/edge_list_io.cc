// Copyright 2026 The lgk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lgk/edge_list_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "lgk/errors.h"

namespace lgk {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw MalformedInput("line " + std::to_string(line_no) +
                         ": expected a non-negative integer, got '" +
                         std::string(token) + "'");
  }
  return value;
}

bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    auto tokens = split_whitespace(line);
    if (tokens.size() != 2) {
      throw MalformedInput("line " + std::to_string(line_no) +
                           ": expected two integers, got " +
                           std::to_string(tokens.size()) + " fields");
    }
    std::uint64_t a = parse_count(tokens[0], line_no);
    std::uint64_t b = parse_count(tokens[1], line_no);
    if (!header) {
      if (a > std::numeric_limits<Vertex>::max()) {
        throw MalformedInput("line " + std::to_string(line_no) +
                             ": vertex count too large");
      }
      header.emplace(a, b);
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(b, 1u << 24)));
      continue;
    }
    if (a >= header->first || b >= header->first) {
      throw MalformedInput("line " + std::to_string(line_no) + ": endpoint out of range (n = " +
                           std::to_string(header->first) + ")");
    }
    if (a == b) {
      throw MalformedInput("line " + std::to_string(line_no) + ": self-loop at vertex " +
                           std::to_string(a));
    }
    edges.push_back(Edge{static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!header) throw MalformedInput("missing 'n m' header");
  if (edges.size() != header->second) {
    throw MalformedInput("header announces " + std::to_string(header->second) +
                         " edges but " + std::to_string(edges.size()) + " were listed");
  }
  return Graph::from_edges(static_cast<std::size_t>(header->first), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace lgk
