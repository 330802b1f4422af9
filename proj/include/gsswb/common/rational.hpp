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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gsswb {

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
   public:
    constexpr Rational() = default;
    Rational(int64_t num, int64_t den = 1);

    int64_t num() const {
        return num_;
    }
    int64_t den() const {
        return den_;
    }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Always "p/q", e.g. "1/2" or "3/1".
    std::string to_string() const;
    /// Accepts "p/q" or a bare integer "p".
    static Rational parse(std::string_view text);

    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);

   private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

}  // namespace gsswb
