// Copyright 2026 The Cliffred Authors
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

#include "cliffred/amplitude.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cliffred {

Amplitude Amplitude::operator/(const Amplitude &o) const {
    if (o.zero) {
        throw std::domain_error("Amplitude: division by zero");
    }
    if (zero) {
        return *this;
    }
    return make(phase8 - o.phase8, half_log2 - o.half_log2);
}

Amplitude Amplitude::operator+(const Amplitude &o) const {
    if (zero) {
        return o;
    }
    if (o.zero) {
        return *this;
    }
    if (half_log2 != o.half_log2) {
        throw std::logic_error("Amplitude: adding values of different magnitude");
    }
    int d = ((o.phase8 - phase8) % 8 + 8) % 8;
    switch (d) {
        case 0:
            return make(phase8, half_log2 + 2);
        case 2:  // 1 + i = sqrt(2) w
            return make(phase8 + 1, half_log2 + 1);
        case 4:
            return zero_value();
        case 6:  // 1 - i = sqrt(2) w^-1
            return make(phase8 - 1, half_log2 + 1);
        default:
            throw std::logic_error("Amplitude: adding values whose phases differ by an odd power of w");
    }
}

std::complex<double> Amplitude::value() const {
    if (zero) {
        return {0.0, 0.0};
    }
    double mag = std::exp2(0.5 * half_log2);
    // Exact components for the eight phases keep dense comparisons clean.
    static const double r = std::numbers::sqrt2 / 2;
    static const std::complex<double> w[8] = {{1, 0}, {r, r}, {0, 1}, {-r, r}, {-1, 0}, {-r, -r}, {0, -1}, {r, -r}};
    return mag * w[phase8 & 7];
}

std::string Amplitude::str() const {
    if (zero) {
        return "0";
    }
    return "w^" + std::to_string(phase8) + "*2^(" + std::to_string(half_log2) + "/2)";
}

}  // namespace cliffred
