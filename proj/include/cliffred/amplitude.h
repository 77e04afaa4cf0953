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

#pragma once

#include <complex>
#include <string>

namespace cliffred {

/// Exact complex scalar of the form w^phase8 * sqrt(2)^half_log2 with
/// w = exp(i pi/4), or exactly zero. Stabilizer amplitudes, projector
/// normalizations and Clifford phases all live in this set.
struct Amplitude {
    bool zero = false;
    int phase8 = 0;     // mod 8
    int half_log2 = 0;  // magnitude 2^(half_log2/2)

    static Amplitude one() { return {}; }
    static Amplitude zero_value() { return {true, 0, 0}; }
    static Amplitude make(int phase8, int half_log2) { return {false, ((phase8 % 8) + 8) % 8, half_log2}; }
    static Amplitude i_pow(int k) { return make(2 * k, 0); }

    Amplitude operator*(const Amplitude &o) const {
        if (zero || o.zero) {
            return zero_value();
        }
        return make(phase8 + o.phase8, half_log2 + o.half_log2);
    }
    Amplitude operator/(const Amplitude &o) const;
    Amplitude conj() const { return zero ? *this : make(-phase8, half_log2); }

    /// Sum of two values with equal magnitudes whose phases differ by a power
    /// of i (the only case that arises between stabilizer amplitudes).
    /// Throws std::logic_error otherwise.
    Amplitude operator+(const Amplitude &o) const;

    std::complex<double> value() const;
    std::string str() const;

    bool operator==(const Amplitude &o) const {
        if (zero || o.zero) {
            return zero == o.zero;
        }
        return phase8 == o.phase8 && half_log2 == o.half_log2;
    }
};

}  // namespace cliffred
