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

#include "coalmin/reach.hpp"

#include <string>
#include <utility>

#include "coalmin/errors.hpp"

namespace coalmin {

std::vector<StateId> reachable(const EncodedCoalgebra& c, StateId root) {
    const std::size_t n = c.size();
    if (root >= n) throw ConsistencyError("root " + std::to_string(root) + " out of range");
    std::vector<bool> seen(n, false);
    std::vector<StateId> queue;
    queue.reserve(n);
    queue.push_back(root);
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& edge : c.states[queue[head]].edges) {
            if (!seen[edge.second]) {
                seen[edge.second] = true;
                queue.push_back(edge.second);
            }
        }
    }
    std::vector<StateId> out;
    out.reserve(queue.size());
    for (std::size_t x = 0; x < n; ++x) {
        if (seen[x]) out.push_back(static_cast<StateId>(x));
    }
    return out;
}

Restriction restrict(const EncodedCoalgebra& c, const std::vector<StateId>& keep) {
    Restriction r;
    r.new_id.assign(c.size(), Restriction::kDropped);
    for (std::size_t i = 0; i < keep.size(); ++i) r.new_id.at(keep[i]) = static_cast<StateId>(i);

    EncodedCoalgebra& out = r.system;
    out.sorts = c.sorts;
    for (StateId x : keep) {
        const EncodedState& s = c.states[x];
        std::vector<Edge> edges;
        edges.reserve(s.edges.size());
        for (const auto& [label, target] : s.edges) {
            const StateId t = r.new_id[target];
            if (t == Restriction::kDropped) {
                throw ConsistencyError("edge from state " + std::to_string(x) + " leaves the kept set");
            }
            edges.emplace_back(label, t);
        }
        // Renumbering is monotone, so the edge order is preserved.
        out.states.push_back(EncodedState{s.sort, s.value, EdgeBag::from_sorted(std::move(edges))});
        out.names.push_back(x < c.names.size() ? c.names[x] : std::string());
        if (s.sort == 0) ++out.original_count;
    }
    if (c.initial) {
        const StateId init = r.new_id[*c.initial];
        if (init == Restriction::kDropped) throw ConsistencyError("initial state is not kept");
        out.initial = init;
    }
    return r;
}

}  // namespace coalmin
