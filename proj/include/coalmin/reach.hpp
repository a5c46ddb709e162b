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

#ifndef COALMIN_REACH_HPP_
#define COALMIN_REACH_HPP_

#include <vector>

#include "coalmin/coalgebra.hpp"

namespace coalmin {

/// States reachable from root along edges (labels ignored), ascending.
std::vector<StateId> reachable(const EncodedCoalgebra& c, StateId root);

struct Restriction {
    EncodedCoalgebra system;
    /// Old id -> new id, or kDropped.
    std::vector<StateId> new_id;

    static constexpr StateId kDropped = static_cast<StateId>(-1);
};

/// Induced subcoalgebra on keep (ascending ids, closed under successors).
/// States are renumbered densely in their original order.
/// Throws ConsistencyError when an edge leaves keep.
Restriction restrict(const EncodedCoalgebra& c, const std::vector<StateId>& keep);

}  // namespace coalmin

#endif  // COALMIN_REACH_HPP_
