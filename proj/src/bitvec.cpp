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

#include "tcrp/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tcrp {

BitVec::BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

void BitVec::set_range(std::size_t first, std::size_t last)
{
    last = std::min(last, nbits_);
    if (first >= last)
        return;
    std::size_t fw = first >> 6, lw = (last - 1) >> 6;
    std::uint64_t fmask = ~std::uint64_t{0} << (first & 63);
    std::uint64_t lmask = ~std::uint64_t{0} >> (63 - ((last - 1) & 63));
    if (fw == lw) {
        words_[fw] |= fmask & lmask;
        return;
    }
    words_[fw] |= fmask;
    for (std::size_t w = fw + 1; w < lw; ++w)
        words_[w] = ~std::uint64_t{0};
    words_[lw] |= lmask;
}

bool BitVec::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::count() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVec::find_next(std::size_t from) const
{
    if (from >= nbits_)
        return npos;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (word)
            return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
        if (++w == words_.size())
            return npos;
        word = words_[w];
    }
}

BitVec& BitVec::operator^=(const BitVec& o)
{
    if (o.nbits_ != nbits_)
        throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= o.words_[w];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& o)
{
    if (o.nbits_ != nbits_)
        throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= o.words_[w];
    return *this;
}

void BitVec::xor_shifted(const BitVec& src, std::size_t shift)
{
    if (shift >= nbits_)
        return;
    const std::size_t ws = shift >> 6;
    const unsigned bs = shift & 63;
    const std::size_t nw = words_.size();
    const auto& sw = src.words_;
    for (std::size_t i = 0; i < sw.size() && i + ws < nw; ++i) {
        const std::uint64_t v = sw[i];
        if (!v)
            continue;
        words_[i + ws] ^= v << bs;
        if (bs && i + ws + 1 < nw)
            words_[i + ws + 1] ^= v >> (64 - bs);
    }
    if (nbits_ & 63)
        words_.back() &= ~std::uint64_t{0} >> (64 - (nbits_ & 63));
}

BitVec BitVec::resized(std::size_t n) const
{
    BitVec out(n);
    const std::size_t nw = std::min(out.words_.size(), words_.size());
    std::copy_n(words_.begin(), nw, out.words_.begin());
    if (n & 63)
        out.words_.back() &= ~std::uint64_t{0} >> (64 - (n & 63));
    return out;
}

} // namespace tcrp
