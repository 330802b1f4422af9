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

#include <stdexcept>
#include <string>

namespace gsswb {

/// An exhaustive routine was asked to handle more vertices than its cap.
class SizeCapExceeded : public std::invalid_argument {
   public:
    SizeCapExceeded(const std::string &what, size_t size, size_t cap)
        : std::invalid_argument(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
          size(size),
          cap(cap) {
    }
    size_t size;
    size_t cap;
};

/// A pipeline stage ran out of retries or could not satisfy its preconditions.
class StageFailure : public std::runtime_error {
   public:
    StageFailure(std::string stage, const std::string &detail)
        : std::runtime_error(stage + ": " + detail), stage(std::move(stage)) {
    }
    std::string stage;
};

}  // namespace gsswb
