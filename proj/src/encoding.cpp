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

#include "coalmin/encoding.hpp"

#include <algorithm>

#include "coalmin/errors.hpp"

namespace coalmin {

F1Value F1Value::nonempty(bool is_nonempty) {
    F1Value v;
    v.kind = Kind::Flag;
    v.flag = is_nonempty;
    return v;
}

F1Value F1Value::monoid_total(Monoid m, Rational total) {
    F1Value v;
    v.kind = Kind::Total;
    v.monoid = m;
    v.total = total;
    return v;
}

F1Value F1Value::symbol(std::string name) {
    F1Value v;
    v.kind = Kind::Symbol;
    v.name = std::move(name);
    return v;
}

F1Value F1Value::atom(std::string name) {
    F1Value v;
    v.kind = Kind::Atom;
    v.name = std::move(name);
    return v;
}

F1Value F1Value::tuple(std::vector<F1Value> components) {
    F1Value v;
    v.kind = Kind::Tuple;
    v.children = std::move(components);
    return v;
}

F1Value F1Value::tag(std::uint32_t index, F1Value inner) {
    F1Value v;
    v.kind = Kind::Tag;
    v.index = index;
    v.children.push_back(std::move(inner));
    return v;
}

std::string F1Value::to_string() const {
    switch (kind) {
        case Kind::Star: return "*";
        case Kind::Flag: return flag ? "{*}" : "{}";
        case Kind::Total: return total.to_string();
        case Kind::Symbol:
        case Kind::Atom: return name;
        case Kind::Tuple: {
            std::string out = "(";
            for (std::size_t i = 0; i < children.size(); ++i) out += (i ? "," : "") + children[i].to_string();
            return out + ")";
        }
        case Kind::Tag: return "in" + std::to_string(index) + " " + children.front().to_string();
    }
    return "?";
}

std::size_t F1Value::hash() const {
    std::size_t seed = static_cast<std::size_t>(kind);
    switch (kind) {
        case Kind::Star: break;
        case Kind::Flag: hash_combine(seed, flag); break;
        case Kind::Total:
            hash_combine(seed, static_cast<std::size_t>(monoid));
            hash_combine(seed, total.hash());
            break;
        case Kind::Symbol:
        case Kind::Atom: hash_combine(seed, std::hash<std::string>{}(name)); break;
        case Kind::Tuple:
        case Kind::Tag:
            hash_combine(seed, index);
            for (const auto& c : children) hash_combine(seed, c.hash());
            break;
    }
    return seed;
}

// ---------------------------------------------------------------------------
// encode

namespace {

[[noreturn]] void mismatch(const char* expected) { throw EncodingError(std::string("type mismatch: expected ") + expected); }

// A set or a finitely supported map names each state at most once.
void require_distinct(const Term& t) {
    std::vector<StateId> targets;
    for (const auto& c : t.children) targets.push_back(c.id);
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
        throw EncodingError("term is not canonical: repeated state");
    }
}

F1Value encode_into(const FunctorExpr& f, const Term& t, std::vector<Edge>& edges) {
    switch (f.kind) {
        case FunctorKind::Identity:
            if (t.kind != TermKind::State) mismatch("a state");
            edges.emplace_back(Label::unit(), t.id);
            return F1Value::star();
        case FunctorKind::Constant:
            if (t.kind != TermKind::Atom) mismatch("an atom");
            return F1Value::atom(t.name);
        case FunctorKind::Powerset: {
            if (t.kind != TermKind::Set) mismatch("a set");
            for (const auto& c : t.children) {
                if (c.kind != TermKind::State) mismatch("a state");
                edges.emplace_back(Label::unit(), c.id);
            }
            require_distinct(t);
            return F1Value::nonempty(!t.children.empty());
        }
        case FunctorKind::MonoidValued: {
            if (t.kind != TermKind::Weighted) mismatch("a weighted map");
            Rational total;
            for (std::size_t i = 0; i < t.children.size(); ++i) {
                if (t.children[i].kind != TermKind::State) mismatch("a state");
                if (t.weights[i].is_zero()) throw EncodingError("zero-weight entry in weighted map");
                edges.emplace_back(Label::monoid(f.monoid, t.weights[i]), t.children[i].id);
                total += t.weights[i];
            }
            require_distinct(t);
            return F1Value::monoid_total(f.monoid, total);
        }
        case FunctorKind::Polynomial: {
            if (t.kind != TermKind::Apply) mismatch("an operation symbol");
            for (std::size_t i = 0; i < t.children.size(); ++i) {
                if (t.children[i].kind != TermKind::State) mismatch("a state");
                edges.emplace_back(Label::position(static_cast<std::uint32_t>(i + 1)), t.children[i].id);
            }
            return F1Value::symbol(t.name);
        }
        case FunctorKind::Product: {
            if (t.kind != TermKind::Tuple || t.children.size() != f.children.size()) mismatch("a tuple");
            std::vector<F1Value> values;
            for (std::size_t i = 0; i < f.children.size(); ++i) {
                std::vector<Edge> component;
                values.push_back(encode_into(f.children[i], t.children[i], component));
                for (auto& [label, target] : component) {
                    edges.emplace_back(label.tagged(static_cast<std::uint32_t>(i + 1)), target);
                }
            }
            return F1Value::tuple(std::move(values));
        }
        case FunctorKind::Coproduct: {
            if (t.kind != TermKind::Inject || t.index < 1 || t.index > f.children.size()) mismatch("an injection");
            std::vector<Edge> component;
            F1Value inner = encode_into(f.children[t.index - 1], t.children.front(), component);
            for (auto& [label, target] : component) edges.emplace_back(label.tagged(t.index), target);
            return F1Value::tag(t.index, std::move(inner));
        }
        default: throw EncodingError("encode_term needs a basic functor");
    }
}

}  // namespace

Encoded encode_term(const FunctorExpr& basic, const Term& t) {
    std::vector<Edge> edges;
    F1Value value = encode_into(basic, t, edges);
    return Encoded{std::move(value), EdgeBag(std::move(edges))};
}

// ---------------------------------------------------------------------------
// merge

namespace {

[[noreturn]] void unknown_label(const Label& l, const FunctorExpr& f) {
    throw EncodingError("label " + l.to_string() + " does not belong to " + to_string(f));
}

}  // namespace

LabelBag merge(const FunctorExpr& basic, const LabelBag& labels) {
    if (labels.empty()) return labels;
    switch (basic.kind) {
        case FunctorKind::Identity:
            for (const auto& l : labels) {
                if (l.is_tagged() || l.kind() != Label::Kind::Unit) unknown_label(l, basic);
            }
            return labels;
        case FunctorKind::Constant: unknown_label(labels.items().front(), basic);
        case FunctorKind::Powerset:
            for (const auto& l : labels) {
                if (l.is_tagged() || l.kind() != Label::Kind::Unit) unknown_label(l, basic);
            }
            return LabelBag{Label::unit()};  // min(1, count)
        case FunctorKind::MonoidValued: {
            Rational sum;
            for (const auto& l : labels) {
                if (l.is_tagged() || l.kind() != Label::Kind::MonoidElem || l.monoid_id() != basic.monoid) {
                    unknown_label(l, basic);
                }
                sum += l.value();
            }
            if (sum.is_zero()) return {};
            return LabelBag{Label::monoid(basic.monoid, sum)};
        }
        case FunctorKind::Polynomial:
            for (const auto& l : labels) {
                if (l.is_tagged() || l.kind() != Label::Kind::Position) unknown_label(l, basic);
            }
            return labels;
        case FunctorKind::Product:
        case FunctorKind::Coproduct: {
            // Split by outermost tag (contiguous runs in canonical order), merge
            // each component, re-tag, concatenate.
            std::vector<Label> out;
            const auto& items = labels.items();
            std::size_t i = 0;
            while (i < items.size()) {
                if (!items[i].is_tagged() || items[i].tag() < 1 || items[i].tag() > basic.children.size()) {
                    unknown_label(items[i], basic);
                }
                const std::uint32_t tag = items[i].tag();
                std::vector<Label> component;
                while (i < items.size() && items[i].is_tagged() && items[i].tag() == tag) {
                    component.push_back(items[i++].untagged());
                }
                for (const auto& l : merge(basic.children[tag - 1], LabelBag::from_sorted(std::move(component)))) {
                    out.push_back(l.tagged(tag));
                }
            }
            return LabelBag::from_sorted(std::move(out));
        }
        default: throw EncodingError("merge needs a basic functor");
    }
}

// ---------------------------------------------------------------------------
// decode

namespace {

[[noreturn]] void malformed(const std::string& why) { throw EncodingError("malformed encoding: " + why); }

Term decode_rec(const FunctorExpr& f, const F1Value& v, const std::vector<Edge>& edges) {
    switch (f.kind) {
        case FunctorKind::Identity:
            if (v.kind != F1Value::Kind::Star) malformed("expected * for X");
            if (edges.size() != 1 || edges.front().first != Label::unit()) malformed("X needs exactly one unit edge");
            return Term::state(edges.front().second);
        case FunctorKind::Constant:
            if (v.kind != F1Value::Kind::Atom) malformed("expected an atom");
            if (std::find(f.atoms.begin(), f.atoms.end(), v.name) == f.atoms.end()) malformed("unknown atom " + v.name);
            if (!edges.empty()) malformed("constant with edges");
            return Term::atom(v.name);
        case FunctorKind::Powerset: {
            if (v.kind != F1Value::Kind::Flag) malformed("expected an emptiness flag");
            if (v.flag == edges.empty()) malformed("emptiness flag disagrees with edges");
            std::vector<Term> elements;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (edges[i].first != Label::unit()) malformed("non-unit label in powerset");
                if (i && edges[i].second == edges[i - 1].second) malformed("duplicate powerset target");
                elements.push_back(Term::state(edges[i].second));
            }
            return Term::set(std::move(elements));
        }
        case FunctorKind::MonoidValued: {
            if (v.kind != F1Value::Kind::Total || v.monoid != f.monoid) malformed("expected a monoid total");
            std::vector<std::pair<StateId, Rational>> entries;
            Rational sum;
            for (const auto& [label, target] : edges) {
                if (label.is_tagged() || label.kind() != Label::Kind::MonoidElem || label.monoid_id() != f.monoid) {
                    malformed("non-weight label in weighted map");
                }
                if (label.value().is_zero()) malformed("zero weight");
                entries.emplace_back(target, label.value());
                sum += label.value();
            }
            if (sum != v.total) malformed("weights do not add up to the total");
            std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<std::pair<Term, Rational>> out;
            for (std::size_t i = 0; i < entries.size(); ++i) {
                if (i && entries[i].first == entries[i - 1].first) malformed("duplicate weighted target");
                out.emplace_back(Term::state(entries[i].first), entries[i].second);
            }
            return Term::weighted(std::move(out));
        }
        case FunctorKind::Polynomial: {
            if (v.kind != F1Value::Kind::Symbol) malformed("expected an operation symbol");
            auto sym = std::find_if(f.signature.begin(), f.signature.end(),
                                    [&](const OperationSymbol& s) { return s.name == v.name; });
            if (sym == f.signature.end()) malformed("unknown operation symbol " + v.name);
            if (edges.size() != sym->arity) malformed("wrong number of arguments for " + v.name);
            std::vector<Term> args;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                const Label& l = edges[i].first;
                // Position labels are sorted, so 1..n without gaps means edge i has position i+1.
                if (l.is_tagged() || l.kind() != Label::Kind::Position) malformed("non-position label in polynomial");
                if (l.position_index() != i + 1) malformed("argument positions have a gap or a duplicate");
                args.push_back(Term::state(edges[i].second));
            }
            return Term::apply(v.name, std::move(args));
        }
        case FunctorKind::Product:
        case FunctorKind::Coproduct: {
            const std::size_t n = f.children.size();
            std::vector<std::vector<Edge>> parts(n);
            for (const auto& [label, target] : edges) {
                if (!label.is_tagged() || label.tag() < 1 || label.tag() > n) malformed("untagged or out-of-range label");
                parts[label.tag() - 1].emplace_back(label.untagged(), target);
            }
            if (f.kind == FunctorKind::Product) {
                if (v.kind != F1Value::Kind::Tuple || v.children.size() != n) malformed("expected a tuple");
                std::vector<Term> components;
                for (std::size_t i = 0; i < n; ++i) components.push_back(decode_rec(f.children[i], v.children[i], parts[i]));
                return Term::tuple(std::move(components));
            }
            if (v.kind != F1Value::Kind::Tag || v.index < 1 || v.index > n) malformed("expected an injection");
            for (std::size_t i = 0; i < n; ++i) {
                if (i + 1 != v.index && !parts[i].empty()) malformed("edges outside the injected component");
            }
            return Term::inject(v.index, decode_rec(f.children[v.index - 1], v.children.front(), parts[v.index - 1]));
        }
        default: throw EncodingError("decode_term needs a basic functor");
    }
}

}  // namespace

Term decode_term(const FunctorExpr& basic, const F1Value& value, const EdgeBag& edges) {
    return decode_rec(basic, value, edges.items());
}

}  // namespace coalmin
