// Copyright 2026 The gsswb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>

namespace gsswb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitStageFailure = 3;

/// Runs one command. The JSON report goes to `out` (and to --out when the
/// command writes no other artifact); a one-line summary and diagnostics go
/// to `err`. Never throws.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gsswb::cli
