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

#include "coalmin/quotient.hpp"

#include <string>
#include <utility>

#include "coalmin/errors.hpp"

namespace coalmin {

EncodedCoalgebra build_quotient(const EncodedCoalgebra& c, const Partition& p, const QuotientOptions& options) {
    EncodedCoalgebra out;
    out.sorts = c.sorts;
    out.states.resize(p.count());
    out.names.resize(p.count());
    if (c.initial) out.initial = p.block_of.at(*c.initial);

    BlockRegrouper regrouper(p.count());
    std::vector<bool> assigned(p.count(), false);
    for (std::size_t x = 0; x < c.size(); ++x) {
        const BlockId y = p.block_of[x];
        EdgeBag e = regrouper.apply(c, static_cast<StateId>(x), p.block_of);
        if (options.check && !regrouper.idx_clean()) {
            throw ConsistencyError("idx array not reset after state " + std::to_string(x), y);
        }
        if (!assigned[y]) {
            out.states[y] = EncodedState{c.states[x].sort, c.states[x].value, std::move(e)};
            assigned[y] = true;
            continue;
        }
        if (!options.check) continue;
        const EncodedState& first = out.states[y];
        if (first.sort != c.states[x].sort || first.value != c.states[x].value || first.edges != e) {
            throw ConsistencyError("members of block B" + std::to_string(y) + " disagree (states " +
                                       std::to_string(p.representative(y)) + " and " + std::to_string(x) + ")",
                                   y);
        }
    }
    for (std::size_t y = 0; y < p.count(); ++y) {
        if (out.states[y].sort == 0) ++out.original_count;
    }
    return out;
}

}  // namespace coalmin
