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

/** @file oracle.hpp
 *  @brief Brute-force reference implementations for tests.
 *
 *  Everything here works on Terms of the composite functor and never touches
 *  encodings, partitions refinement or the quotient construction.
 */

#ifndef COALMIN_ORACLE_ORACLE_HPP_
#define COALMIN_ORACLE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "coalmin/ingest.hpp"

namespace coalmin::oracle {

inline constexpr std::size_t kMaxStates = 10;

/// Coarsest partition of the input states such that quotienting every term
/// (F h at the term level) makes all members of a block equal.
/// Result[x] is the block of state x; blocks are numbered by minimal member.
/// Throws std::length_error above kMaxStates.
std::vector<std::uint32_t> oracle_partition(const InputSpec& spec);

/// States occurring in t (zero weights are already absent from canonical terms).
std::set<std::string> oracle_canonical_successors(const FunctorExpr& f, const Term& t);

/// Closure of the canonical-graph successor relation from the initial state.
std::set<std::string> oracle_reachable(const InputSpec& spec);

/// A complete DFA: accepting flags and delta[state][letter].
struct Dfa {
    std::vector<bool> accepting;
    std::vector<std::vector<std::uint32_t>> delta;
    std::uint32_t start = 0;
};

/// Number of states of the minimal DFA (reachable part, Moore refinement).
std::size_t moore_minimal_size(const Dfa& dfa);

}  // namespace coalmin::oracle

#endif  // COALMIN_ORACLE_ORACLE_HPP_
