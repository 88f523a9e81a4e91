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

#ifndef LGK_ERRORS_H_
#define LGK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lgk {

// Bad user-supplied data: out-of-range endpoints, self-loops, unparsable
// edge lists, edge sets that are not subsets of the graph.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A witness handed to an operation that requires a valid one.
class InvalidWitness : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structural guarantee of the algorithms was observed to fail. Always a
// bug somewhere upstream, never a property of the input.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The exhaustive oracle refuses inputs it cannot enumerate in reasonable time.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lgk

#endif  // LGK_ERRORS_H_
