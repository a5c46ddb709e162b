/*
 * Copyright 2026 The coalmin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COALMIN_RATIONAL_HPP_
#define COALMIN_RATIONAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace coalmin {

/**
 * Exact rational number p/q over 64-bit integers.
 *
 * Always kept normalized: gcd(p, q) == 1 and q > 0, so structural equality
 * is numeric equality. Intermediate products are formed in 128 bits; a
 * result that does not fit back into 64 bits throws std::overflow_error
 * rather than silently wrapping.
 */
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit on purpose
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    /// Accepts an optionally signed integer or p/q literal; nullopt on bad syntax,
    /// zero denominator or overflow.
    static std::optional<Rational> parse(std::string_view text);

    std::size_t hash() const;

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace coalmin

template <>
struct std::hash<coalmin::Rational> {
    std::size_t operator()(const coalmin::Rational& r) const noexcept { return r.hash(); }
};

#endif  // COALMIN_RATIONAL_HPP_
