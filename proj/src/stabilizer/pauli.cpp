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

#include "gsswb/stabilizer/pauli.hpp"

#include <stdexcept>

#include "gsswb/simd/kernels.hpp"

namespace gsswb {

PauliString PauliString::parse(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        if (text[0] == '-') {
            phase = 2;
        }
        text.remove_prefix(1);
        if (!text.empty() && text[0] == 'i') {
            phase = (phase + 1) & 3;
            text.remove_prefix(1);
        }
    }
    PauliString p(text.size());
    p.phase = phase;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x.set(q);
                break;
            case 'Z':
                p.z.set(q);
                break;
            case 'Y':
                p.x.set(q);
                p.z.set(q);
                break;
            default:
                throw std::invalid_argument("bad Pauli character '" + std::string(1, text[q]) + "'");
        }
    }
    return p;
}

std::string PauliString::to_string() const {
    static const char *const kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string s = kPrefix[phase & 3];
    for (size_t q = 0; q < size(); q++) {
        s += "_XZY"[x[q] + 2 * z[q]];
    }
    return s;
}

PauliString &PauliString::operator*=(const PauliString &other) {
    if (other.size() != size()) {
        throw std::invalid_argument("Pauli string length mismatch");
    }
    unsigned log_i = simd::kernels().pauli_mul(x.data(), z.data(), other.x.data(), other.z.data(), x.num_words());
    phase = static_cast<uint8_t>((phase + other.phase + log_i) & 3);
    return *this;
}

bool PauliString::commutes(const PauliString &other) const {
    return x.dot(other.z) == z.dot(other.x);
}

}  // namespace gsswb
