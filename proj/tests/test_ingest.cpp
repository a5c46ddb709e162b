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
#include "doctest.h"

using namespace coalmin;

namespace {

struct Failure {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
};

Failure failure(const std::string& text, const ParseOptions& options = {}) {
    try {
        parse(text, options);
    } catch (const InputError& e) {
        return {e.line(), e.column(), e.message()};
    }
    FAIL("input was accepted: " << text);
    return {};
}

}  // namespace

TEST_CASE("a small system parses") {
    const InputSpec spec = parse(
        "# comment\n"
        "functor: Z^(X)\n"
        "\n"
        "initial: y\n"
        "x: {y: 2, x: 1, y: 1}\n"
        "y: {}\n");
    CHECK(spec.functor_text == "Z^(X)");
    REQUIRE(spec.states.size() == 2);
    CHECK(spec.initial_id() == std::optional<StateId>(1));
    // Duplicate keys are summed and entries sorted.
    const Term& x = spec.states[0].second;
    REQUIRE(x.children.size() == 2);
    CHECK(x.children[0].name == "x");
    CHECK(x.children[1].name == "y");
    CHECK(x.weights[1] == Rational(3));
    CHECK(x.children[1].id == 1);
}

TEST_CASE("every term form parses") {
    CHECK_NOTHROW(parse("functor: P(X)\na: {a, b}\nb: {}\n"));
    CHECK_NOTHROW(parse("functor: B(X)\na: {a, a, b: 2}\nb: {}\n"));
    CHECK_NOTHROW(parse("functor: D(X)\na: {a: 1/2, b: 1/2}\nb: {b: 1}\n"));
    CHECK_NOTHROW(parse("functor: Sig{f/2, c/0} X\na: f(a, b)\nb: c\n"));
    CHECK_NOTHROW(parse("functor: C{0,1} x X^C{a,b}\np: (1, {b: p, a: p})\n"));
    CHECK_NOTHROW(parse("functor: P(X) + Z^(X)\np: inl {p}\nq: inr {p: -1}\nr: in2 {}\n"));
    CHECK_NOTHROW(parse("functor: P(C{a,b} x Q^(X))\np: {(a, {p: 1/2}), (b, {})}\n"));
    CHECK_NOTHROW(parse("functor: Z^(Sig{f/2, g/0} X)\np: {f(p,p): 3, g: 1}\n"));
}

TEST_CASE("input errors are reported with positions") {
    Failure f = failure("functor: P(X)\nx: {y}\n");
    CHECK(f.line == 2);
    CHECK(f.column == 5);
    CHECK(f.message.find("unknown state") != std::string::npos);

    f = failure("functor: P(Y)\n");
    CHECK(f.line == 1);
    CHECK(f.column == 12);

    f = failure("functor: P(X)\nx: {}\nx: {}\n");
    CHECK(f.line == 3);
    CHECK(f.message.find("duplicate") != std::string::npos);

    f = failure("functor: P(X)\nB0: {}\n");
    CHECK(f.line == 2);
    CHECK_NOTHROW(parse("functor: P(X)\nB0: {}\n", ParseOptions{true}));

    CHECK(failure("x: {}\n").line == 1);
    CHECK(failure("functor: N^(X)\nx: {x: -1}\n").line == 2);
    CHECK(failure("functor: Z^(X)\nx: {x: 1/2}\n").line == 2);
    CHECK(failure("functor: D(X)\nx: {x: 1/2}\n").message.find("1") != std::string::npos);
    CHECK(failure("functor: D(X)\nx: {x: 0, x: 1}\n").line == 2);
    CHECK(failure("functor: X^C{a,b}\nx: {a: x}\n").line == 2);
    CHECK(failure("functor: X^C{a,b}\nx: {a: x, a: x, b: x}\n").line == 2);
    CHECK(failure("functor: Sig{f/2} X\nx: f(x)\n").line == 2);
    CHECK(failure("functor: C{a} + X\nx: in3 a\n").line == 2);
    CHECK(failure("functor: P(X)\ninitial: z\nx: {}\n").message.find("z") != std::string::npos);
    CHECK(failure("functor: P(X)\nx: {} junk\n").line == 2);
}

TEST_CASE("output documents read back as systems") {
    const InputSpec spec = parse(
        "functor: P(X)\n"
        "initial: B0\n"
        "B0: {B0}\n"
        "\n"
        "partition:\n"
        "  x -> B0\n"
        "\n"
        "stats:\n"
        "  states: 1 -> 1\n",
        ParseOptions{true});
    CHECK(spec.states.size() == 1);
}

TEST_CASE("flattening P(C x X) creates one intermediate state per pair") {
    const InputSpec spec = parse("functor: P(C{a,b} x X)\np: {(a,q),(b,p)}\nq: {}\n");
    const EncodedCoalgebra c = flatten(spec);
    CHECK(c.sorts.size() == 2);
    CHECK(c.original_count == 2);
    REQUIRE(c.size() == 4);
    CHECK(c.states[0].sort == 0);
    CHECK(c.states[1].sort == 0);
    CHECK(c.states[2].sort == 1);
    CHECK(c.states[3].sort == 1);
    // p -> two intermediates; each intermediate -> one sort-0 state.
    CHECK(c.states[0].edges.size() == 2);
    CHECK(c.states[1].edges.empty());
    CHECK(c.states[2].edges.size() == 1);
    CHECK(c.decode(2).children.size() == 2);
}

TEST_CASE("flattening leaves single-sorted systems alone") {
    const InputSpec spec = parse("functor: C{0,1} x X^C{a,b}\np: (1, {a: p, b: q})\nq: (0, {a: q, b: q})\n");
    const EncodedCoalgebra c = flatten(spec);
    CHECK_FALSE(c.multi_sorted());
    CHECK(c.size() == 2);
    CHECK(c.edge_count() == 4);
}
