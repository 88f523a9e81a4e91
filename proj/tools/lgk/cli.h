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

// The lgk command-line tool: recognize, kernelize, solve, gen and bench.
// Each run prints one JSON object on stdout and a short summary on stderr.
//
// Exit codes: 0 completed, 1 NO verdict from `solve`, 2 bad input (flags,
// files, formats, oversize brute-force instances), 3 internal error.

#ifndef LGK_TOOLS_CLI_H_
#define LGK_TOOLS_CLI_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lgk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// A bench sweep: the cartesian product of the four value lists, iterated
// with n outermost and k innermost.
struct SweepSpec {
  std::vector<std::size_t> n;
  std::vector<double> p;
  std::vector<std::size_t> r;
  std::vector<std::size_t> k;

  std::size_t size() const { return n.size() * p.size() * r.size() * k.size(); }
};

// Parses "n=40;p=0.05;r=0:3;k=1:5". Each value is a number, a range
// lo:hi[:step] (inclusive, empty when lo > hi) or a comma-separated list.
// Missing keys default to n=20, p=0.2, r=1, k=1. Throws MalformedInput.
SweepSpec parse_sweep(std::string_view text);

// Worker threads for bench: LGK_THREADS if set and positive, else the
// hardware concurrency, never more than `jobs` and never zero.
std::size_t bench_threads(std::size_t jobs);

}  // namespace lgk::cli

#endif  // LGK_TOOLS_CLI_H_
