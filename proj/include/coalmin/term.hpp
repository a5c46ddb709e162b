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

#ifndef COALMIN_TERM_HPP_
#define COALMIN_TERM_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coalmin/functor.hpp"
#include "coalmin/label.hpp"
#include "coalmin/rational.hpp"

namespace coalmin {

enum class TermKind : std::uint8_t {
    State,     ///< element of X: a state reference (name and/or id)
    Atom,      ///< element of a constant set
    Set,       ///< powerset: distinct children
    Weighted,  ///< monoid-valued: children paired with nonzero weights
    Apply,     ///< polynomial: symbol applied to arguments
    Tuple,     ///< product
    Inject,    ///< coproduct injection, 1-based index
};

/// An element of F X for a (normalized) functor expression F.
struct Term {
    TermKind kind = TermKind::State;
    std::string name;  ///< state name, atom or operation symbol
    StateId id = 0;    ///< state id
    std::uint32_t index = 0;
    std::vector<Term> children;
    std::vector<Rational> weights;  ///< parallel to children for Weighted

    static Term state(std::string name, StateId id = 0);
    static Term state(StateId id) { return state(std::string(), id); }
    static Term atom(std::string name);
    static Term set(std::vector<Term> elements);
    static Term weighted(std::vector<std::pair<Term, Rational>> entries);
    static Term apply(std::string symbol, std::vector<Term> args);
    static Term tuple(std::vector<Term> components);
    static Term inject(std::uint32_t index, Term inner);

    friend bool operator==(const Term&, const Term&) = default;
    friend std::strong_ordering operator<=>(const Term&, const Term&) = default;
};

/// Checks that t is shaped like f and brings it into canonical form: set
/// elements sorted without duplicates, weighted entries sorted by key with
/// duplicate keys summed and zero weights dropped. Throws EncodingError on a
/// shape mismatch or a weight outside the monoid (Z/N need integers, N >= 0).
Term canonicalize(const FunctorExpr& f, Term t);

/// F h at the term level: replaces every state leaf by leaf(state) and
/// re-canonicalizes (direct image for sets, summed weights for monoids).
Term map_states(const FunctorExpr& f, const Term& t, const std::function<Term(const Term&)>& leaf);

/// Calls fn on every state leaf of t.
void for_each_state(const FunctorExpr& f, const Term& t, const std::function<void(const Term&)>& fn);

/// Checks every distribution-origin node of t: positive weights summing to exactly 1.
/// Returns an error message, empty when valid.
std::string check_distributions(const FunctorExpr& f, const Term& t);

/// Input syntax of t; state leaves print their name.
std::string print_term(const FunctorExpr& f, const Term& t);

}  // namespace coalmin

#endif  // COALMIN_TERM_HPP_
