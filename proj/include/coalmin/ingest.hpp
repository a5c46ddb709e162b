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

/** @file ingest.hpp
 *  @brief Reading coalgebras from text and flattening composite functors.
 *
 *  Input format (UTF-8, line oriented, '#' starts a comment line):
 *
 *      functor: <FEXPR>
 *      initial: <name>          (optional)
 *      <name>: <TERM>           (one per state)
 *
 *  A line consisting of `partition:` or `stats:` ends the system, so the
 *  minimizer's own output documents read back unchanged.
 */

#ifndef COALMIN_INGEST_HPP_
#define COALMIN_INGEST_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalmin/coalgebra.hpp"
#include "coalmin/functor.hpp"
#include "coalmin/term.hpp"

namespace coalmin {

struct ParseOptions {
    /// Accept state names of the form B<digits>, which are otherwise reserved
    /// for the blocks of minimized output.
    bool allow_block_names = false;
};

/// A pointed (or unpointed) coalgebra as written by the user.
struct InputSpec {
    std::string functor_text;  ///< verbatim functor expression
    FunctorExpr functor;       ///< normalized
    std::optional<std::string> initial;
    /// Declaration order; state leaves carry the name and the declaration index as id.
    std::vector<std::pair<std::string, Term>> states;

    std::optional<StateId> initial_id() const;
};

/// Throws InputError (with line and column) on any syntax or typing problem.
InputSpec parse(std::string_view text, const ParseOptions& options = {});

/// Parses one term for a normalized functor; state leaves get names only.
Term parse_term(const FunctorExpr& f, std::string_view text);

/// Reduces functor composition to a coproduct of basic functors over a
/// many-sorted state set. Sort 0 holds the user's states in declaration
/// order; every subterm under a base functor whose argument is not X becomes
/// a fresh state of that argument's sort (not deduplicated).
EncodedCoalgebra flatten(const InputSpec& spec);

/// The basic functor of every sort, as flatten() would lay them out.
std::vector<FunctorExpr> sort_functors(const FunctorExpr& normalized);

/// Inverse of sort_functors(): substitutes the sort functors back into their
/// variables, giving the composite functor of sort 0.
FunctorExpr recompose(const std::vector<FunctorExpr>& sorts, std::uint32_t sort = 0);

}  // namespace coalmin

#endif  // COALMIN_INGEST_HPP_
