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

// Plain-text edge lists:
//
//   # comment lines start with '#'
//   n m
//   u v      (m lines, 0-indexed, whitespace separated)
//
// Blank lines are ignored. The number of edge lines must equal m; duplicate
// pairs are accepted and collapse, so the parsed graph may have fewer edges.

#ifndef LGK_EDGE_LIST_IO_H_
#define LGK_EDGE_LIST_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lgk/graph.h"

namespace lgk {

// Throws MalformedInput with a line number on any format violation.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);
void save_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace lgk

#endif  // LGK_EDGE_LIST_IO_H_
