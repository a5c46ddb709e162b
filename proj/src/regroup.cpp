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

#include "coalmin/regroup.hpp"

#include <algorithm>

namespace coalmin {

EdgeBag BlockRegrouper::apply(const EncodedCoalgebra& c, StateId x, std::span<const BlockId> block_of) {
    const EncodedState& state = c.states[x];
    std::size_t used = 0;

    // s1 + s2
    for (const auto& [label, target] : state.edges) {
        const BlockId y = block_of[target];
        if (idx_[y] < 0) {
            idx_[y] = static_cast<std::int64_t>(used);
            if (used == groups_.size()) groups_.emplace_back();
            groups_[used].first = y;
            groups_[used].second.clear();
            groups_[used].second.push_back(label);
            ++used;
        } else {
            groups_[static_cast<std::size_t>(idx_[y])].second.push_back(label);
        }
    }
    for (std::size_t i = 0; i < used; ++i) idx_[groups_[i].first] = -1;

    // s3 + s4
    std::vector<Edge> out;
    out.reserve(state.edges.size());
    for (std::size_t i = 0; i < used; ++i) {
        auto& [y, labels] = groups_[i];
        // Labels arrive in canonical (label-major) edge order, so each group is sorted.
        const LabelBag merged = c.merge(state.sort, LabelBag::from_sorted(std::move(labels)));
        for (const auto& l : merged) out.emplace_back(l, y);
        labels = {};
    }
    return EdgeBag(std::move(out));
}

bool BlockRegrouper::idx_clean() const {
    return std::all_of(idx_.begin(), idx_.end(), [](std::int64_t v) { return v == -1; });
}

}  // namespace coalmin
