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

#include "checks.hpp"
#include "coalmin/encoding.hpp"
#include "coalmin/errors.hpp"
#include "coalmin/functor.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace coalmin;

namespace {

FunctorExpr norm(const std::string& text) { return normalize_functor(parse_functor(text)); }

Term st(StateId id) { return Term::state(id); }

Label z(std::int64_t v) { return Label::monoid(Monoid::Int, Rational(v)); }

}  // namespace

TEST_CASE("powerset encoding") {
    const FunctorExpr f = norm("P(X)");
    const Encoded e = encode_term(f, Term::set({st(0), st(2)}));
    CHECK(e.value == F1Value::nonempty(true));
    CHECK(e.edges == EdgeBag{{Label::unit(), 0}, {Label::unit(), 2}});
    CHECK(encode_term(f, Term::set({})).value == F1Value::nonempty(false));
    CHECK_THROWS_AS(encode_term(f, Term::set({st(1), st(1)})), EncodingError);
}

TEST_CASE("monoid-valued encoding keeps nonzero weights and the total") {
    const FunctorExpr f = norm("Z^(X)");
    const Encoded e = encode_term(f, canonicalize(f, Term::weighted({{st(1), 3}, {st(2), 7}, {st(3), 0}})));
    CHECK(e.value == F1Value::monoid_total(Monoid::Int, 10));
    CHECK(e.edges == EdgeBag{{z(3), 1}, {z(7), 2}});
    CHECK_THROWS_AS(encode_term(f, Term::weighted({{st(1), 0}})), EncodingError);
}

TEST_CASE("polynomial encoding uses argument positions") {
    const FunctorExpr f = norm("Sig{f/2, c/0} X");
    const Encoded e = encode_term(f, Term::apply("f", {st(4), st(4)}));
    CHECK(e.value == F1Value::symbol("f"));
    CHECK(e.edges == EdgeBag{{Label::position(1), 4}, {Label::position(2), 4}});
    CHECK(encode_term(f, Term::apply("c", {})).edges.empty());
}

TEST_CASE("product and coproduct encodings tag labels with the component") {
    const FunctorExpr dfa = norm("C{0,1} x X^C{a,b}");
    const Encoded e = encode_term(dfa, Term::tuple({Term::atom("1"), Term::apply("tau", {st(0), st(1)})}));
    CHECK(e.value == F1Value::tuple({F1Value::atom("1"), F1Value::symbol("tau")}));
    CHECK(e.edges == EdgeBag{{Label::position(1).tagged(2), 0}, {Label::position(2).tagged(2), 1}});

    const FunctorExpr sum = norm("P(X) + Z^(X)");
    const Encoded r = encode_term(sum, Term::inject(2, Term::weighted({{st(0), -1}})));
    CHECK(r.value == F1Value::tag(2, F1Value::monoid_total(Monoid::Int, -1)));
    CHECK(r.edges == EdgeBag{{z(-1).tagged(2), 0}});
}

TEST_CASE("merge instances") {
    const FunctorExpr p = norm("P(X)");
    CHECK(merge(p, LabelBag{Label::unit(), Label::unit()}) == LabelBag{Label::unit()});
    CHECK(merge(p, LabelBag{Label::unit()}) == LabelBag{Label::unit()});

    const FunctorExpr m = norm("Z^(X)");
    CHECK(merge(m, LabelBag{z(3), z(7), z(5)}) == LabelBag{z(15)});
    CHECK(merge(m, LabelBag{z(2), z(-2)}).empty());

    const FunctorExpr q = norm("Q^(X)");
    const Label half = Label::monoid(Monoid::Rat, Rational(1, 2));
    CHECK(merge(q, LabelBag{half, half}) == LabelBag{Label::monoid(Monoid::Rat, Rational(1))});

    const FunctorExpr sig = norm("Sig{f/2} X");
    const LabelBag positions{Label::position(1), Label::position(2)};
    CHECK(merge(sig, positions) == positions);

    const FunctorExpr prod = norm("P(X) x Z^(X)");
    CHECK(merge(prod, LabelBag{Label::unit().tagged(1), Label::unit().tagged(1), z(1).tagged(2), z(4).tagged(2)}) ==
          LabelBag{Label::unit().tagged(1), z(5).tagged(2)});

    for (const auto& text : testgen::basic_functor_zoo()) {
        CAPTURE(text);
        CHECK(merge(norm(text), LabelBag{}).empty());
    }
    CHECK_THROWS_AS(merge(p, LabelBag{z(1)}), EncodingError);
}

TEST_CASE("decode rejects pairs outside the image") {
    const FunctorExpr m = norm("Z^(X)");
    CHECK_THROWS_AS(decode_term(m, F1Value::monoid_total(Monoid::Int, 4), EdgeBag{{z(3), 1}}), EncodingError);
    CHECK_THROWS_AS(decode_term(m, F1Value::monoid_total(Monoid::Int, 6), EdgeBag{{z(3), 1}, {z(3), 1}}),
                    EncodingError);
    const FunctorExpr sig = norm("Sig{f/2} X");
    CHECK_THROWS_AS(decode_term(sig, F1Value::symbol("f"), EdgeBag{{Label::position(1), 1}}), EncodingError);
    CHECK_THROWS_AS(decode_term(sig, F1Value::symbol("f"), EdgeBag{{Label::position(1), 1}, {Label::position(3), 1}}),
                    EncodingError);
}

TEST_CASE("powerset encoding is not natural") {
    CHECK(checks::non_naturality_regression());
}

TEST_CASE("encoding properties on the functor zoo and random basic functors") {
    testgen::Rng rng(5);
    std::vector<std::string> functors = testgen::basic_functor_zoo();
    for (int i = 0; i < 10; ++i) functors.push_back(testgen::random_basic_functor(rng));
    for (const auto& f : functors) {
        CAPTURE(f);
        const auto axiom = checks::merge_axiom(f, rng, 300);
        CHECK_MESSAGE(axiom.ok(), axiom.summary());
        const auto uni = checks::uniformity(f, rng, 300);
        CHECK_MESSAGE(uni.ok(), uni.summary());
        const auto single = checks::merge_singleton(f, rng, 300);
        CHECK_MESSAGE(single.ok(), single.summary());
        const auto inj = checks::injectivity(f, rng, 300);
        CHECK_MESSAGE(inj.ok(), inj.summary());
    }
}

TEST_CASE("the merge-axiom check rejects a wrong merge") {
    // Identity is not a minimization interface for the powerset encoding:
    // two edges into S must merge into one.
    const FunctorExpr f = norm("P(X)");
    const Term t = Term::set({st(0), st(1)});
    const std::set<StateId> s{0, 1};
    const LabelBag identity = fil(encode_term(f, t).edges, s);
    const Term collapsed = map_states(f, t, [&](const Term& leaf) { return st(s.contains(leaf.id) ? 1U : 0U); });
    const LabelBag expected = fil(encode_term(f, collapsed).edges, std::set<StateId>{1});
    CHECK(identity != expected);
    CHECK(merge(f, identity) == expected);
}
