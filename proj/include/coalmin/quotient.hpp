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

#ifndef COALMIN_QUOTIENT_HPP_
#define COALMIN_QUOTIENT_HPP_

#include "coalmin/coalgebra.hpp"
#include "coalmin/refine.hpp"

namespace coalmin {

struct QuotientOptions {
    /// Compute e(y) from every member of each block, compare, and verify the
    /// idx array after every state. Throws ConsistencyError(block) on a mismatch.
    bool check = false;
};

/// Encoded quotient: one state per block of P (numbered by block id), with
/// the representative's F1 value and the regrouped, merged edges.
/// P must be the fixpoint partition of c.
///
/// The regrouping runs for every state x in ascending order and e(q(x)) is
/// taken from the first state of each block; later results are discarded
/// unless options.check is set.
EncodedCoalgebra build_quotient(const EncodedCoalgebra& c, const Partition& p, const QuotientOptions& options = {});

}  // namespace coalmin

#endif  // COALMIN_QUOTIENT_HPP_
