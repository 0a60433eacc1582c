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

#include "tcrp/ring.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace tcrp {

namespace {

std::string_view trim(std::string_view v)
{
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
        v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
        v.remove_suffix(1);
    return v;
}

int parse_int(std::string_view v, const char* what)
{
    v = trim(v);
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty())
        throw std::invalid_argument(std::string("parse: bad ") + what + " '" + std::string(v) + "'");
    return out;
}

} // namespace

std::string monomial_to_string(const Monomial& mono)
{
    std::string out;
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
        if (i)
            out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        out += '^';
        out += std::to_string(mono.exponents[i]);
    }
    return out;
}

std::string Poly::to_string() const
{
    std::string out;
    bits_.for_each_set([&](std::size_t r) {
        if (!out.empty())
            out += " + ";
        out += monomial_to_string(unrank(spec_, r));
    });
    return out.empty() ? "0" : out;
}

std::vector<std::uint8_t> Poly::to_bytes() const
{
    std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
    const auto words = bits_.words();
    for (std::size_t b = 0; b < out.size(); ++b)
        out[b] = static_cast<std::uint8_t>(words[b / 8] >> (8 * (b % 8)));
    return out;
}

Poly poly_from_bytes(const RingSpec& spec, const std::vector<std::uint8_t>& bytes)
{
    Poly p(spec);
    const std::size_t n = static_cast<std::size_t>(spec.basis_size());
    if (bytes.size() != (n + 7) / 8)
        throw std::invalid_argument("poly_from_bytes: expected ceil((m+1)^s / 8) bytes");
    for (std::size_t r = 0; r < bytes.size() * 8; ++r) {
        if (!((bytes[r / 8] >> (r % 8)) & 1))
            continue;
        if (r >= n)
            throw std::invalid_argument("poly_from_bytes: padding bits must be zero");
        p.flip(r);
    }
    return p;
}

Monomial parse_monomial(const RingSpec& spec, std::string_view text)
{
    Monomial mono;
    mono.exponents.assign(static_cast<std::size_t>(spec.s), 0);
    text = trim(text);
    if (text == "1")
        return mono;
    while (!text.empty()) {
        const auto star = text.find('*');
        std::string_view factor = trim(text.substr(0, star));
        text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
        if (factor.size() < 2 || factor.front() != 'x')
            throw std::invalid_argument("parse: bad factor '" + std::string(factor) + "'");
        factor.remove_prefix(1);
        const auto caret = factor.find('^');
        const int var = parse_int(factor.substr(0, caret), "variable index");
        const int exp = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), "exponent");
        if (var < 1 || var > spec.s)
            throw std::invalid_argument("parse: variable index out of range");
        if (exp < 0)
            throw std::invalid_argument("parse: negative exponent");
        mono.exponents[static_cast<std::size_t>(var - 1)] += exp;
    }
    for (int a : mono.exponents)
        if (a > spec.m)
            throw std::invalid_argument("parse: exponent exceeds m (not a basis monomial)");
    return mono;
}

Poly parse_poly(const RingSpec& spec, std::string_view text)
{
    Poly p(spec);
    text = trim(text);
    if (text == "0")
        return p;
    while (true) {
        const auto plus = text.find('+');
        p.flip(rank(spec, parse_monomial(spec, text.substr(0, plus))));
        if (plus == std::string_view::npos)
            break;
        text = text.substr(plus + 1);
    }
    return p;
}

} // namespace tcrp
