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

/** @file encoding.hpp
 *  @brief Encodings <F!, flat> of basic functors and their merge maps.
 *
 *  An element t of F X is encoded as the pair (F!(t), flat_X(t)): its shape
 *  with all states collapsed to a single point, plus a bag of labelled edges
 *  into X. The pair determines t uniquely, and decode_term() inverts it.
 *
 *    functor         F1 value            edge labels
 *    X               Star                Unit
 *    C{...}          Atom(a)             (none)
 *    P X             Flag(t nonempty)    Unit per element
 *    M^(X)           Total(sum)          MonoidElem(weight) per entry
 *    Sig X           Symbol(sigma)       Position(i) per argument
 *    F1 x ... x Fn   Tuple(values)       Tagged(i, component label)
 *    F1 + ... + Fn   Tag(i, value)       Tagged(i, component label)
 *
 *  merge() maps the bag of labels from one source state into a block of
 *  states to the labels of the single edge(s) into the merged block.
 */

#ifndef COALMIN_ENCODING_HPP_
#define COALMIN_ENCODING_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "coalmin/functor.hpp"
#include "coalmin/label.hpp"
#include "coalmin/term.hpp"

namespace coalmin {

/// An element of F1, totally ordered so it can key the initial partition.
struct F1Value {
    enum class Kind : std::uint8_t { Star, Flag, Total, Symbol, Atom, Tuple, Tag };

    Kind kind = Kind::Star;
    bool flag = false;
    Monoid monoid = Monoid::Int;
    Rational total;
    std::string name;
    std::uint32_t index = 0;
    std::vector<F1Value> children;

    static F1Value star() { return {}; }
    static F1Value nonempty(bool is_nonempty);
    static F1Value monoid_total(Monoid m, Rational total);
    static F1Value symbol(std::string name);
    static F1Value atom(std::string name);
    static F1Value tuple(std::vector<F1Value> components);
    static F1Value tag(std::uint32_t index, F1Value inner);

    std::string to_string() const;
    std::size_t hash() const;

    friend bool operator==(const F1Value&, const F1Value&) = default;
    friend std::strong_ordering operator<=>(const F1Value&, const F1Value&) = default;
};

struct Encoded {
    F1Value value;
    EdgeBag edges;

    friend bool operator==(const Encoded&, const Encoded&) = default;
};

/// <F!, flat>(t) for a basic functor and a canonical term whose state leaves carry ids.
/// Throws EncodingError on a type mismatch or a zero-weight entry.
Encoded encode_term(const FunctorExpr& basic, const Term& t);

/// Minimization interface of a basic functor. merge(empty) is empty.
/// Throws EncodingError on a label this functor cannot produce.
LabelBag merge(const FunctorExpr& basic, const LabelBag& labels);

/// Inverse of encode_term: state leaves of the result carry the edge targets as ids
/// and empty names. Throws EncodingError when (value, edges) is not in the image.
Term decode_term(const FunctorExpr& basic, const F1Value& value, const EdgeBag& edges);

}  // namespace coalmin

template <>
struct std::hash<coalmin::F1Value> {
    std::size_t operator()(const coalmin::F1Value& v) const noexcept { return v.hash(); }
};

#endif  // COALMIN_ENCODING_HPP_
