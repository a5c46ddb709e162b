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

#include "coalmin/refine.hpp"

#include <unordered_map>
#include <utility>

#include "coalmin/errors.hpp"

namespace coalmin {

namespace {

struct RoundKey {
    BlockId block;
    const EdgeBag* edges;

    bool operator==(const RoundKey& o) const { return block == o.block && *edges == *o.edges; }
};

struct RoundKeyHash {
    std::size_t operator()(const RoundKey& k) const noexcept {
        std::size_t seed = k.block;
        hash_combine(seed, std::hash<EdgeBag>{}(*k.edges));
        return seed;
    }
};

}  // namespace

Partition Partition::from_block_map(std::vector<BlockId> block_of) {
    Partition p;
    for (std::size_t x = 0; x < block_of.size(); ++x) {
        const BlockId b = block_of[x];
        if (b >= p.blocks.size()) p.blocks.resize(static_cast<std::size_t>(b) + 1);
        p.blocks[b].push_back(static_cast<StateId>(x));
    }
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (p.blocks[b].empty()) throw ConsistencyError("block ids are not dense", b);
    }
    p.block_of = std::move(block_of);
    return p;
}

Partition Partition::discrete(std::size_t n) {
    std::vector<BlockId> block_of(n);
    for (std::size_t x = 0; x < n; ++x) block_of[x] = static_cast<BlockId>(x);
    return from_block_map(std::move(block_of));
}

Signature signature(StateId x, const Partition& p, const EncodedCoalgebra& c) {
    BlockRegrouper regrouper(p.count());
    return Signature{c.states[x].value, regrouper.apply(c, x, p.block_of)};
}

Partition refine(const EncodedCoalgebra& c, RefineStats* stats) {
    const std::size_t n = c.size();

    std::vector<BlockId> block_of(n);
    {
        std::unordered_map<F1Value, BlockId> ids;
        for (std::size_t x = 0; x < n; ++x) {
            auto [it, fresh] = ids.try_emplace(c.states[x].value, static_cast<BlockId>(ids.size()));
            block_of[x] = it->second;
        }
    }
    Partition p = Partition::from_block_map(std::move(block_of));

    std::size_t rounds = 0;
    std::vector<EdgeBag> sigs(n);
    while (true) {
        ++rounds;
        BlockRegrouper regrouper(p.count());
        for (std::size_t x = 0; x < n; ++x) sigs[x] = regrouper.apply(c, static_cast<StateId>(x), p.block_of);

        std::unordered_map<RoundKey, BlockId, RoundKeyHash> ids;
        ids.reserve(n);
        std::vector<BlockId> next(n);
        for (std::size_t x = 0; x < n; ++x) {
            auto [it, fresh] =
                ids.try_emplace(RoundKey{p.block_of[x], &sigs[x]}, static_cast<BlockId>(ids.size()));
            next[x] = it->second;
        }
        const bool stable = ids.size() == p.count();
        p = Partition::from_block_map(std::move(next));
        if (stable) break;
    }
    if (stats != nullptr) stats->rounds = rounds;
    return p;
}

}  // namespace coalmin
