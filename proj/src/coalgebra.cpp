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

#include "coalmin/coalgebra.hpp"

#include "coalmin/errors.hpp"

namespace coalmin {

EncodedCoalgebra EncodedCoalgebra::single_sorted(FunctorExpr basic) {
    EncodedCoalgebra c;
    c.sorts.push_back(std::move(basic));
    return c;
}

std::size_t EncodedCoalgebra::edge_count() const {
    std::size_t m = 0;
    for (const auto& s : states) m += s.edges.size();
    return m;
}

Encoded EncodedCoalgebra::encode(std::uint32_t sort, const Term& t) const {
    Encoded e = encode_term(sorts.at(sort), t);
    if (!multi_sorted()) return e;
    std::vector<Edge> tagged;
    tagged.reserve(e.edges.size());
    for (const auto& [label, target] : e.edges) tagged.emplace_back(label.tagged(sort), target);
    return Encoded{F1Value::tag(sort, std::move(e.value)), EdgeBag::from_sorted(std::move(tagged))};
}

StateId EncodedCoalgebra::add_state(std::uint32_t sort, const Term& t, std::string name) {
    if (sort == 0 && original_count != states.size()) {
        throw ConsistencyError("sort-0 states must precede all other states");
    }
    Encoded e = encode(sort, t);
    const auto id = static_cast<StateId>(states.size());
    states.push_back(EncodedState{sort, std::move(e.value), std::move(e.edges)});
    names.push_back(std::move(name));
    if (sort == 0) ++original_count;
    return id;
}

LabelBag EncodedCoalgebra::merge(std::uint32_t sort, const LabelBag& labels) const {
    if (!multi_sorted()) return coalmin::merge(sorts.at(sort), labels);
    std::vector<Label> inner;
    inner.reserve(labels.size());
    for (const auto& l : labels) {
        if (!l.is_tagged() || l.tag() != sort) {
            throw EncodingError("label " + l.to_string() + " does not belong to sort " + std::to_string(sort));
        }
        inner.push_back(l.untagged());
    }
    std::vector<Label> out;
    for (const auto& l : coalmin::merge(sorts.at(sort), LabelBag::from_sorted(std::move(inner)))) {
        out.push_back(l.tagged(sort));
    }
    return LabelBag::from_sorted(std::move(out));
}

Term EncodedCoalgebra::decode(StateId x) const {
    const EncodedState& s = states.at(x);
    if (!multi_sorted()) return decode_term(sorts.at(s.sort), s.value, s.edges);
    if (s.value.kind != F1Value::Kind::Tag || s.value.index != s.sort) {
        throw EncodingError("state value is not tagged with its sort");
    }
    std::vector<Edge> inner;
    for (const auto& [label, target] : s.edges) {
        if (!label.is_tagged() || label.tag() != s.sort) throw EncodingError("edge label is not tagged with its sort");
        inner.emplace_back(label.untagged(), target);
    }
    return decode_term(sorts.at(s.sort), s.value.children.front(), EdgeBag::from_sorted(std::move(inner)));
}

}  // namespace coalmin
