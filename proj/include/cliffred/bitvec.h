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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliffred {

/// Fixed-length packed bit vector over GF(2).
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    size_t size() const { return num_bits_; }
    size_t num_words() const { return words_.size(); }

    bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool v) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (v) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }

    uint64_t word(size_t w) const { return words_[w]; }
    uint64_t &word(size_t w) { return words_[w]; }

    BitVec &operator^=(const BitVec &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    BitVec &operator&=(const BitVec &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] &= other.words_[w];
        }
        return *this;
    }
    BitVec &operator|=(const BitVec &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] |= other.words_[w];
        }
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec &b) { return a |= b; }

    size_t popcount() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += std::popcount(w);
        }
        return total;
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    /// Parity of popcount(a & b).
    static bool dot(const BitVec &a, const BitVec &b) {
        uint64_t acc = 0;
        for (size_t w = 0; w < a.words_.size(); w++) {
            acc ^= a.words_[w] & b.words_[w];
        }
        return std::popcount(acc) & 1;
    }
    static size_t and_popcount(const BitVec &a, const BitVec &b) {
        size_t total = 0;
        for (size_t w = 0; w < a.words_.size(); w++) {
            total += std::popcount(a.words_[w] & b.words_[w]);
        }
        return total;
    }

    /// Bits as an integer (bit k = qubit k). Only meaningful for size() <= 64.
    uint64_t to_u64() const { return words_.empty() ? 0 : words_[0]; }
    static BitVec from_u64(size_t num_bits, uint64_t value) {
        BitVec r(num_bits);
        if (!r.words_.empty()) {
            r.words_[0] = num_bits >= 64 ? value : value & ((uint64_t{1} << num_bits) - 1);
        }
        return r;
    }

    bool operator==(const BitVec &other) const = default;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace cliffred
