// Copyright 2026 The Synest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNEST_LOGICAL_STATE_HPP
#define SYNEST_LOGICAL_STATE_HPP

#include <stdexcept>
#include <string>

namespace synest {

// Initial encoded state of the logical qubit before noise acts.
//   zero           |0_L><0_L|
//   plus           |+_L><+_L|
//   mixed          (|0_L><0_L| + |1_L><1_L|) / 2
//   entangled_ref  logical qubit maximally entangled with a 2-dim
//                  reference qubit that noise never touches
enum class LogicalStateKind { zero, plus, mixed, entangled_ref };

inline const char* logical_state_name(LogicalStateKind kind) {
  switch (kind) {
    case LogicalStateKind::zero: return "zero";
    case LogicalStateKind::plus: return "plus";
    case LogicalStateKind::mixed: return "mixed";
    case LogicalStateKind::entangled_ref: return "entangled_ref";
  }
  return "?";
}

inline LogicalStateKind logical_state_from_name(const std::string& name) {
  if (name == "zero") return LogicalStateKind::zero;
  if (name == "plus") return LogicalStateKind::plus;
  if (name == "mixed") return LogicalStateKind::mixed;
  if (name == "entangled_ref") return LogicalStateKind::entangled_ref;
  throw std::invalid_argument("unknown logical state kind: " + name);
}

// True when the state carries the extra reference qubit.
inline bool logical_state_uses_reference(LogicalStateKind kind) {
  return kind == LogicalStateKind::entangled_ref;
}

}  // namespace synest

#endif  // SYNEST_LOGICAL_STATE_HPP
