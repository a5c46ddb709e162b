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

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "checks.hpp"
#include "coalmin/encoding.hpp"
#include "coalmin/ingest.hpp"
#include "coalmin/oracle/oracle.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace coalmin;
using namespace coalmin::oracle;

TEST_CASE("one state is one block") {
    CHECK(oracle_partition(parse("functor: P(X)\nx: {x}\n")) == std::vector<std::uint32_t>{0});
}

TEST_CASE("weighted bisimilarity adds the weights into a merged block") {
    const InputSpec spec = parse(
        "functor: Z^(X)\n"
        "x: {s1: 2, s2: 5}\n"
        "y: {s: 7}\n"
        "z: {s: 5}\n"
        "s1: {}\n"
        "s2: {}\n"
        "s: {}\n");
    const auto blocks = oracle_partition(spec);
    CHECK(blocks[0] == blocks[1]);
    CHECK(blocks[0] != blocks[2]);
    CHECK(blocks[3] == blocks[5]);
    CHECK(blocks[4] == blocks[5]);
}

TEST_CASE("the size guard") {
    std::string text = "functor: P(X)\n";
    for (int i = 0; i < 11; ++i) text += "s" + std::to_string(i) + ": {}\n";
    CHECK_THROWS_AS(oracle_partition(parse(text)), std::length_error);
}

TEST_CASE("canonical successors") {
    const InputSpec p = parse("functor: P(X)\np: {p, q}\nq: {}\n");
    CHECK(oracle_canonical_successors(p.functor, p.states[0].second) == std::set<std::string>{"p", "q"});
    const InputSpec m = parse("functor: Z^(X)\np: {p: 0, q: 3}\nq: {}\n");
    CHECK(oracle_canonical_successors(m.functor, m.states[0].second) == std::set<std::string>{"q"});
    const InputSpec s = parse("functor: Sig{f/2} X\np: f(p, p)\n");
    CHECK(oracle_canonical_successors(s.functor, s.states[0].second) == std::set<std::string>{"p"});
}

TEST_CASE("the oracle partition is a fixpoint") {
    testgen::Rng rng(31);
    for (const auto& family : testgen::oracle_families()) {
        for (int i = 0; i < 30; ++i) {
            const InputSpec spec = parse(testgen::random_system_text(family, rng, testgen::uniform(rng, 1, 8), false));
            const auto blocks = oracle_partition(spec);
            std::map<std::uint32_t, Term> image_of_block;
            for (std::size_t x = 0; x < spec.states.size(); ++x) {
                Term image = map_states(spec.functor, spec.states[x].second,
                                        [&](const Term& leaf) { return Term::state(blocks[leaf.id]); });
                auto [it, fresh] = image_of_block.emplace(blocks[x], image);
                if (!fresh) CHECK(it->second == image);
            }
        }
    }
}

TEST_CASE("canonical successors equal encoding targets on single-sorted functors") {
    testgen::Rng rng(37);
    for (const auto& family : testgen::basic_functor_zoo()) {
        CAPTURE(family);
        for (int i = 0; i < 50; ++i) {
            const InputSpec spec = parse(testgen::random_system_text(family, rng, testgen::uniform(rng, 1, 6), false));
            for (const auto& [name, term] : spec.states) {
                std::set<std::string> targets;
                for (const auto& edge : encode_term(spec.functor, term).edges) targets.insert(spec.states[edge.second].first);
                CHECK(oracle_canonical_successors(spec.functor, term) == targets);
            }
        }
    }
}

TEST_CASE("refine and reachable agree with the oracle") {
    testgen::Rng rng(41);
    for (const auto& family : testgen::oracle_families()) {
        checks::Result r;
        for (int i = 0; i < 60; ++i) {
            r.absorb(checks::oracle_agreement(
                parse(testgen::random_system_text(family, rng, testgen::uniform(rng, 1, 8), testgen::coin(rng)))));
        }
        CHECK_MESSAGE(r.ok(), family << ": " << r.summary());
    }
}

TEST_CASE("Moore minimizer") {
    Dfa all_same;
    all_same.accepting = {true, true};
    all_same.delta = {{0, 1}, {1, 0}};
    CHECK(moore_minimal_size(all_same) == 1);

    Dfa parity;  // even number of a's
    parity.accepting = {true, false};
    parity.delta = {{1, 0}, {0, 1}};
    CHECK(moore_minimal_size(parity) == 2);

    Dfa unreachable = parity;
    unreachable.accepting.push_back(false);
    unreachable.delta.push_back({2, 2});
    CHECK(moore_minimal_size(unreachable) == 2);
}
