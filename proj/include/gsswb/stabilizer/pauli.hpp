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

#include <cstdint>
#include <string>
#include <string_view>

#include "gsswb/common/bitvec.hpp"

namespace gsswb {

/// i^phase times a tensor product of I, X, Y, Z.
///
/// Qubit q holds (x[q], z[q]) with (1,0) = X, (0,1) = Z, (1,1) = Y, so each
/// factor is Hermitian and a Hermitian string has phase 0 or 2.
struct PauliString {
    BitVec x;
    BitVec z;
    uint8_t phase = 0;  // power of i, mod 4

    PauliString() = default;
    explicit PauliString(size_t n) : x(n), z(n) {
    }

    size_t size() const {
        return x.size();
    }

    /// "+XZ_Y", "-iZZ" etc.; '_' and 'I' both denote identity.
    static PauliString parse(std::string_view text);
    std::string to_string() const;

    /// Right multiplication: *this = *this * other.
    PauliString &operator*=(const PauliString &other);
    bool commutes(const PauliString &other) const;
    bool is_z_only() const {
        return x.none();
    }

    friend bool operator==(const PauliString &, const PauliString &) = default;
};

}  // namespace gsswb
