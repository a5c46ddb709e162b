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

#ifndef COALMIN_COALGEBRA_HPP_
#define COALMIN_COALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coalmin/encoding.hpp"
#include "coalmin/functor.hpp"

namespace coalmin {

struct EncodedState {
    std::uint32_t sort = 0;
    F1Value value;
    EdgeBag edges;
};

/**
 * A finite coalgebra in encoded form, possibly many-sorted.
 *
 * Each sort has a basic functor; the coalgebra as a whole is one for the
 * coproduct of the sort functors over the disjoint union of the sorts. When
 * there is more than one sort, every F1 value is wrapped as Tag(sort, v) and
 * every label as Tagged(sort, l) (0-based sort index), which is exactly the
 * coproduct encoding and keeps states of different sorts apart.
 *
 * Sort-0 states are the user's states and occupy ids [0, original_count).
 */
struct EncodedCoalgebra {
    std::vector<FunctorExpr> sorts;
    std::vector<EncodedState> states;
    std::size_t original_count = 0;
    std::optional<StateId> initial;
    std::vector<std::string> names;

    /// Single-sorted coalgebra for a basic functor with no states yet.
    static EncodedCoalgebra single_sorted(FunctorExpr basic);

    std::size_t size() const { return states.size(); }
    std::size_t edge_count() const;
    bool multi_sorted() const { return sorts.size() > 1; }

    /// Encodes a depth-one term of the given sort, sort tag included.
    Encoded encode(std::uint32_t sort, const Term& t) const;
    /// Appends a state; sort-0 states must be added before any other sort.
    StateId add_state(std::uint32_t sort, const Term& t, std::string name = {});

    /// The minimization interface of the whole (sort-coproduct) functor, for
    /// labels leaving a state of the given sort.
    LabelBag merge(std::uint32_t sort, const LabelBag& labels) const;

    /// Depth-one term of a state (sort tag removed); leaves carry target ids.
    Term decode(StateId x) const;
};

}  // namespace coalmin

#endif  // COALMIN_COALGEBRA_HPP_
