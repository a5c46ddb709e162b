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
#include "coalmin/functor.hpp"
#include "coalmin/ingest.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace coalmin;

namespace {

FunctorExpr norm(const std::string& text) { return normalize_functor(parse_functor(text)); }

std::size_t error_column(const std::string& text) {
    try {
        parse_functor(text);
    } catch (const InputError& e) {
        return e.column();
    }
    return 0;
}

}  // namespace

TEST_CASE("functor expressions parse and print back") {
    for (const char* text : {"P(X)", "Z^(X)", "Q^(X)", "N^(X)", "B(X)", "D(X)", "X", "C{a,b}",
                             "Sig{f/2, g/1, c/0} X", "X^C{a,b}", "C{0,1} x X^C{a,b}", "P(X) + Z^(X)",
                             "P(C{a,b} x X)", "Z^(Sig{f/2, g/0} X)", "P(C{a,b} x Q^(X))", "(P(X) x X) + C{u}"}) {
        CAPTURE(text);
        const FunctorExpr f = parse_functor(text);
        CHECK(parse_functor(to_string(f)) == f);
        CHECK(is_normalized(normalize_functor(f)));
    }
}

TEST_CASE("random basic functors are basic after normalization") {
    testgen::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const std::string text = testgen::random_basic_functor(rng);
        CAPTURE(text);
        const FunctorExpr f = norm(text);
        CHECK(is_basic(f));
        CHECK(variable_sorts(f).size() <= 1);
    }
}

TEST_CASE("normalization removes surface forms") {
    const FunctorExpr b = norm("B(X)");
    CHECK(b.kind == FunctorKind::MonoidValued);
    CHECK(b.monoid == Monoid::Nat);
    CHECK(b.origin == WeightOrigin::Bag);

    const FunctorExpr d = norm("D(X)");
    CHECK(d.kind == FunctorKind::MonoidValued);
    CHECK(d.monoid == Monoid::Rat);
    CHECK(d.origin == WeightOrigin::Distribution);

    const FunctorExpr e = norm("X^C{a,b}");
    CHECK(e.kind == FunctorKind::Polynomial);
    CHECK(e.from_exponent());
    REQUIRE(e.signature.size() == 1);
    CHECK(e.signature[0].arity == 2);
    CHECK(to_string(e) == to_string(parse_functor("X^C{a,b}")));
}

TEST_CASE("functor syntax errors carry a column") {
    CHECK(error_column("P(Y)") == 3);
    CHECK(error_column("C{}") > 0);
    CHECK(error_column("C{a,a}") > 0);
    CHECK(error_column("Sig{f/1, f/2} X") > 0);
    CHECK(error_column("P(X") > 0);
    CHECK_THROWS_AS(parse_functor(""), InputError);
}

TEST_CASE("only base functors over composite arguments open sorts") {
    CHECK(sort_functors(norm("C{0,1} x X^C{a,b}")).size() == 1);
    CHECK(sort_functors(norm("P(X) + Z^(X)")).size() == 1);

    const auto pcx = sort_functors(norm("P(C{a,b} x X)"));
    REQUIRE(pcx.size() == 2);
    CHECK(pcx[0].kind == FunctorKind::Powerset);
    CHECK(variable_sorts(pcx[0]) == std::vector<std::uint32_t>{1});
    CHECK(pcx[1].kind == FunctorKind::Product);
    CHECK(variable_sorts(pcx[1]) == std::vector<std::uint32_t>{0});

    // Q^(X) ranges over X directly, so it stays inside sort 1.
    CHECK(sort_functors(norm("P(C{a,b} x Q^(X))")).size() == 2);
    CHECK(sort_functors(norm("P(C{a,b} x P(C{a,b} x X))")).size() == 3);
}

TEST_CASE("recompose inverts the sort layout") {
    for (const char* text : {"P(X)", "P(C{a,b} x X)", "Z^(Sig{f/2, g/0} X)", "P(C{a,b} x Q^(X))",
                             "D(C{a,b} x X) + P(P(X))", "C{0,1} x X^C{a,b}"}) {
        CAPTURE(text);
        const FunctorExpr f = norm(text);
        CHECK(recompose(sort_functors(f)) == f);
    }
}
