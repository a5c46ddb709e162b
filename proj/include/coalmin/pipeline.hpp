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

#ifndef COALMIN_PIPELINE_HPP_
#define COALMIN_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coalmin/coalgebra.hpp"
#include "coalmin/ingest.hpp"

namespace coalmin {

struct MinimizeOptions {
    /// Restrict to the part reachable from the initial state (when one is given).
    bool reach = true;
    /// Representative-independence and idx checks in the quotient.
    bool check = false;
};

/// Counts refer to the flattened (many-sorted) system.
struct MinimizeStats {
    std::size_t states_in = 0;
    std::size_t states_out = 0;
    std::size_t edges_in = 0;
    std::size_t edges_out = 0;
    std::size_t rounds = 0;
    std::size_t blocks = 0;  ///< states of the simple quotient
    std::size_t reachable_dropped = 0;
    bool reach_applied = false;
    double wall_ms = 0.0;
};

struct MinimizeResult {
    EncodedCoalgebra system;
    /// Per input state (declaration order): its block in system, if kept.
    std::vector<std::optional<StateId>> block_of_input;
    MinimizeStats stats;
};

/// flatten -> refine -> build_quotient -> (reachable -> restrict).
/// Throws ConsistencyError on an internal failure.
MinimizeResult minimize(const InputSpec& spec, const MinimizeOptions& options = {});

/// Name of block k in output documents.
std::string block_name(std::size_t k);

/// Terms of the sort-0 states of a flattened system over the composite functor,
/// with intermediate states inlined and sort-0 leaves named B<k>.
/// Throws EncodingError when a state does not decode.
std::vector<Term> unflatten(const EncodedCoalgebra& c);

/// The output document: system, partition section, stats section.
std::string render_document(const InputSpec& spec, const MinimizeResult& result);

}  // namespace coalmin

#endif  // COALMIN_PIPELINE_HPP_
