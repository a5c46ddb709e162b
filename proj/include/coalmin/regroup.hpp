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

#ifndef COALMIN_REGROUP_HPP_
#define COALMIN_REGROUP_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "coalmin/coalgebra.hpp"

namespace coalmin {

using BlockId = std::uint32_t;

/**
 * Computes ungroup . merge^(Y) . group . B(A x q) on the edge bag of one
 * state, for a block map q: X -> Y.
 *
 *   s1  relabel every edge target x to q(x);
 *   s2  group by block with a reusable array idx: Y -> Z that is -1 outside
 *       the blocks of the current state and is reset after each state;
 *   s3  merge each per-block label bag;
 *   s4  ungroup into one canonical edge bag over Y.
 *
 * Each call is linear in the state's out-degree (plus the canonical sort of
 * the output); idx is allocated once per block count.
 */
class BlockRegrouper {
public:
    explicit BlockRegrouper(std::size_t block_count) : idx_(block_count, -1) {}

    EdgeBag apply(const EncodedCoalgebra& c, StateId x, std::span<const BlockId> block_of);

    /// True when idx is -1 everywhere (O(|Y|)).
    bool idx_clean() const;

private:
    std::vector<std::int64_t> idx_;
    std::vector<std::pair<BlockId, std::vector<Label>>> groups_;
};

}  // namespace coalmin

#endif  // COALMIN_REGROUP_HPP_
