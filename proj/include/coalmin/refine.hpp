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

#ifndef COALMIN_REFINE_HPP_
#define COALMIN_REFINE_HPP_

#include <cstddef>
#include <vector>

#include "coalmin/coalgebra.hpp"
#include "coalmin/regroup.hpp"

namespace coalmin {

/// State -> block assignment; block ids are 0..count-1 and each block's
/// members are listed in ascending state order.
struct Partition {
    std::vector<BlockId> block_of;
    std::vector<std::vector<StateId>> blocks;

    std::size_t count() const { return blocks.size(); }
    /// Minimal member of a block.
    StateId representative(BlockId b) const { return blocks[b].front(); }

    /// Builds the member lists from block_of; block ids must be dense.
    static Partition from_block_map(std::vector<BlockId> block_of);
    /// Every state in its own block.
    static Partition discrete(std::size_t n);

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct Signature {
    F1Value value;
    EdgeBag edges;  ///< targets are block ids

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// One-step behaviour of x under the block map of P.
Signature signature(StateId x, const Partition& p, const EncodedCoalgebra& c);

struct RefineStats {
    std::size_t rounds = 0;
};

/// Coarsest partition whose quotient map is a coalgebra morphism.
/// Blocks are numbered in order of their minimal member.
Partition refine(const EncodedCoalgebra& c, RefineStats* stats = nullptr);

}  // namespace coalmin

#endif  // COALMIN_REFINE_HPP_
