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

#include <string>

#include "coalmin/errors.hpp"
#include "coalmin/ingest.hpp"
#include "coalmin/reach.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace coalmin;

namespace {

EncodedCoalgebra encoded(const std::string& text) { return flatten(parse(text)); }

}  // namespace

TEST_CASE("successors are the edge targets") {
    const EncodedCoalgebra c = encoded("functor: Z^(X)\nx: {y: 1, z: 2}\ny: {}\nz: {}\nw: {x: 1}\n");
    CHECK(reachable(c, 0) == std::vector<StateId>{0, 1, 2});
}

TEST_CASE("a self-loop root reaches only itself") {
    const EncodedCoalgebra c = encoded("functor: P(X)\nx: {x}\ny: {x}\n");
    CHECK(reachable(c, 0) == std::vector<StateId>{0});
}

TEST_CASE("a zero weight is no edge") {
    const EncodedCoalgebra c = encoded("functor: Z^(X)\nx: {y: 0}\ny: {}\n");
    CHECK(c.states[0].edges.empty());
    CHECK(reachable(c, 0) == std::vector<StateId>{0});
}

TEST_CASE("chain from the middle keeps two states") {
    const EncodedCoalgebra c = encoded("functor: P(X)\na: {b}\nb: {c}\nc: {}\n");
    const std::vector<StateId> keep = reachable(c, 1);
    CHECK(keep == std::vector<StateId>{1, 2});
    const Restriction r = restrict(c, keep);
    CHECK(r.system.size() == 2);
    CHECK(r.new_id == std::vector<StateId>{Restriction::kDropped, 0, 1});
    CHECK(r.system.states[0].edges == EdgeBag{{Label::unit(), 1}});
}

TEST_CASE("restrict to everything is the identity and remaps the initial state") {
    InputSpec spec = parse("functor: P(X)\ninitial: b\na: {b}\nb: {a}\n");
    const EncodedCoalgebra c = flatten(spec);
    const Restriction r = restrict(c, {0, 1});
    CHECK(r.system.initial == std::optional<StateId>(1));
    for (std::size_t x = 0; x < c.size(); ++x) CHECK(r.system.states[x].edges == c.states[x].edges);

    const Restriction root = restrict(encoded("functor: P(X)\nx: {x}\n"), {0});
    CHECK(root.system.size() == 1);
}

TEST_CASE("restrict rejects a set that is not closed") {
    const EncodedCoalgebra c = encoded("functor: P(X)\na: {b}\nb: {}\n");
    CHECK_THROWS_AS(restrict(c, {0}), ConsistencyError);
}

TEST_CASE("the restricted system is reachable from its root") {
    testgen::Rng rng(29);
    for (const auto& family : testgen::oracle_families()) {
        for (int i = 0; i < 40; ++i) {
            const EncodedCoalgebra c =
                encoded(testgen::random_system_text(family, rng, testgen::uniform(rng, 1, 8), true));
            const Restriction r = restrict(c, reachable(c, *c.initial));
            CHECK(reachable(r.system, *r.system.initial).size() == r.system.size());
        }
    }
}
