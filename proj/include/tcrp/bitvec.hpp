/*
   Copyright 2026 The tcrp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tcrp {

/// Fixed-length bit vector over F2, packed into 64-bit words.
/// Bits past size() in the last word are always zero.
class BitVec {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVec() = default;
    explicit BitVec(std::size_t nbits);

    std::size_t size() const { return nbits_; }
    std::span<const std::uint64_t> words() const { return words_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    /// Sets bits [first, last).
    void set_range(std::size_t first, std::size_t last);

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;

    /// Smallest set index >= from, or npos.
    std::size_t find_next(std::size_t from) const;
    std::size_t find_first() const { return find_next(0); }

    BitVec& operator^=(const BitVec& o);
    BitVec& operator&=(const BitVec& o);

    /// this ^= (src << shift), dropping bits that land at or past size().
    /// src may be shorter or longer than this.
    void xor_shifted(const BitVec& src, std::size_t shift);

    /// Copy of the first n bits of this vector zero-extended (or truncated) to n.
    BitVec resized(std::size_t n) const;

    template <class F>
    void for_each_set(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                const int b = __builtin_ctzll(word);
                f((w << 6) + static_cast<std::size_t>(b));
                word &= word - 1;
            }
        }
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

inline BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
inline BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

} // namespace tcrp
