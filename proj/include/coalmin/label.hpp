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

#ifndef COALMIN_LABEL_HPP_
#define COALMIN_LABEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coalmin/bag.hpp"
#include "coalmin/rational.hpp"

namespace coalmin {

/// Commutative monoids (M, +, 0) available for weighted functors.
enum class Monoid : std::uint8_t { Int, Rat, Nat };

const char* monoid_name(Monoid m);

/**
 * Edge label of an encoding.
 *
 * Conceptually one of Unit | MonoidElem(monoid, value) | Position(i) |
 * Tagged(i, inner). Nested Tagged layers are stored as a path of component
 * indices (outermost first) in front of the innermost base label; the
 * resulting lexicographic order is exactly
 *   Unit < MonoidElem < Position < Tagged,
 * MonoidElem by numeric value, Tagged by (index, inner).
 */
class Label {
public:
    enum class Kind : std::uint8_t { Unit, MonoidElem, Position };

    static Label unit() { return Label(); }
    static Label monoid(Monoid m, Rational value) {
        Label l;
        l.kind_ = Kind::MonoidElem;
        l.monoid_ = m;
        l.value_ = value;
        return l;
    }
    static Label position(std::uint32_t index) {
        Label l;
        l.kind_ = Kind::Position;
        l.position_ = index;
        return l;
    }

    /// Tagged(index, *this).
    Label tagged(std::uint32_t index) const;

    bool is_tagged() const { return !tags_.empty(); }
    /// Outermost tag; requires is_tagged().
    std::uint32_t tag() const { return tags_.front(); }
    /// The inner label below the outermost tag; requires is_tagged().
    Label untagged() const;

    /// Kind of the innermost label.
    Kind kind() const { return kind_; }
    Monoid monoid_id() const { return monoid_; }
    const Rational& value() const { return value_; }
    std::uint32_t position_index() const { return position_; }
    const std::vector<std::uint32_t>& tags() const { return tags_; }

    std::string to_string() const;
    std::size_t hash() const;

    friend bool operator==(const Label&, const Label&) = default;
    friend std::strong_ordering operator<=>(const Label&, const Label&) = default;

private:
    std::vector<std::uint32_t> tags_;
    Kind kind_ = Kind::Unit;
    Monoid monoid_ = Monoid::Int;
    Rational value_;
    std::uint32_t position_ = 0;
};

using StateId = std::uint32_t;
using Edge = std::pair<Label, StateId>;
using EdgeBag = Bag<Edge>;
using LabelBag = Bag<Label>;

}  // namespace coalmin

template <>
struct std::hash<coalmin::Label> {
    std::size_t operator()(const coalmin::Label& l) const noexcept { return l.hash(); }
};

template <>
struct std::hash<coalmin::Edge> {
    std::size_t operator()(const coalmin::Edge& e) const noexcept {
        std::size_t seed = e.first.hash();
        coalmin::hash_combine(seed, std::hash<coalmin::StateId>{}(e.second));
        return seed;
    }
};

#endif  // COALMIN_LABEL_HPP_
