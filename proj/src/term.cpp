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

#include "coalmin/term.hpp"

#include <algorithm>
#include <numeric>

#include "coalmin/errors.hpp"

namespace coalmin {

Term Term::state(std::string name, StateId id) {
    Term t;
    t.kind = TermKind::State;
    t.name = std::move(name);
    t.id = id;
    return t;
}

Term Term::atom(std::string name) {
    Term t;
    t.kind = TermKind::Atom;
    t.name = std::move(name);
    return t;
}

Term Term::set(std::vector<Term> elements) {
    Term t;
    t.kind = TermKind::Set;
    t.children = std::move(elements);
    return t;
}

Term Term::weighted(std::vector<std::pair<Term, Rational>> entries) {
    Term t;
    t.kind = TermKind::Weighted;
    for (auto& [child, weight] : entries) {
        t.children.push_back(std::move(child));
        t.weights.push_back(weight);
    }
    return t;
}

Term Term::apply(std::string symbol, std::vector<Term> args) {
    Term t;
    t.kind = TermKind::Apply;
    t.name = std::move(symbol);
    t.children = std::move(args);
    return t;
}

Term Term::tuple(std::vector<Term> components) {
    Term t;
    t.kind = TermKind::Tuple;
    t.children = std::move(components);
    return t;
}

Term Term::inject(std::uint32_t index, Term inner) {
    Term t;
    t.kind = TermKind::Inject;
    t.index = index;
    t.children.push_back(std::move(inner));
    return t;
}

namespace {

void expect_kind(const Term& t, TermKind kind, const char* what) {
    if (t.kind != kind) throw EncodingError(std::string("type mismatch: expected ") + what);
}

void check_weight(Monoid m, const Rational& w) {
    if (m != Monoid::Rat && !w.is_integer()) {
        throw EncodingError(std::string("weight ") + w.to_string() + " is not in " + monoid_name(m));
    }
    if (m == Monoid::Nat && w.sign() < 0) {
        throw EncodingError("weight " + w.to_string() + " is not in N");
    }
}

}  // namespace

Term canonicalize(const FunctorExpr& f, Term t) {
    switch (f.kind) {
        case FunctorKind::Identity: expect_kind(t, TermKind::State, "a state"); return t;
        case FunctorKind::Constant:
            expect_kind(t, TermKind::Atom, "an atom");
            if (std::find(f.atoms.begin(), f.atoms.end(), t.name) == f.atoms.end()) {
                throw EncodingError("atom '" + t.name + "' is not in " + to_string(f));
            }
            return t;
        case FunctorKind::Powerset: {
            expect_kind(t, TermKind::Set, "a set");
            for (auto& c : t.children) c = canonicalize(f.child(), std::move(c));
            std::sort(t.children.begin(), t.children.end());
            t.children.erase(std::unique(t.children.begin(), t.children.end()), t.children.end());
            return t;
        }
        case FunctorKind::MonoidValued: {
            expect_kind(t, TermKind::Weighted, "a weighted map");
            if (t.weights.size() != t.children.size()) throw EncodingError("weighted map without weights");
            std::vector<std::pair<Term, Rational>> entries;
            for (std::size_t i = 0; i < t.children.size(); ++i) {
                check_weight(f.monoid, t.weights[i]);
                entries.emplace_back(canonicalize(f.child(), std::move(t.children[i])), t.weights[i]);
            }
            std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            Term out;
            out.kind = TermKind::Weighted;
            for (auto& [child, weight] : entries) {
                if (!out.children.empty() && out.children.back() == child) {
                    out.weights.back() += weight;
                } else {
                    out.children.push_back(std::move(child));
                    out.weights.push_back(weight);
                }
            }
            std::size_t keep = 0;
            for (std::size_t i = 0; i < out.children.size(); ++i) {
                if (out.weights[i].is_zero()) continue;
                if (keep != i) {
                    out.children[keep] = std::move(out.children[i]);
                    out.weights[keep] = out.weights[i];
                }
                ++keep;
            }
            out.children.resize(keep);
            out.weights.resize(keep);
            return out;
        }
        case FunctorKind::Polynomial: {
            expect_kind(t, TermKind::Apply, "an operation symbol");
            auto sym = std::find_if(f.signature.begin(), f.signature.end(),
                                    [&](const OperationSymbol& s) { return s.name == t.name; });
            if (sym == f.signature.end()) throw EncodingError("unknown operation symbol '" + t.name + "'");
            if (t.children.size() != sym->arity) {
                throw EncodingError("operation symbol '" + t.name + "' expects " + std::to_string(sym->arity) +
                                    " arguments, got " + std::to_string(t.children.size()));
            }
            for (auto& c : t.children) c = canonicalize(f.child(), std::move(c));
            return t;
        }
        case FunctorKind::Product: {
            expect_kind(t, TermKind::Tuple, "a tuple");
            if (t.children.size() != f.children.size()) {
                throw EncodingError("tuple has " + std::to_string(t.children.size()) + " components, expected " +
                                    std::to_string(f.children.size()));
            }
            for (std::size_t i = 0; i < f.children.size(); ++i) {
                t.children[i] = canonicalize(f.children[i], std::move(t.children[i]));
            }
            return t;
        }
        case FunctorKind::Coproduct: {
            expect_kind(t, TermKind::Inject, "an injection");
            if (t.index < 1 || t.index > f.children.size()) {
                throw EncodingError("injection index " + std::to_string(t.index) + " out of range");
            }
            t.children.front() = canonicalize(f.children[t.index - 1], std::move(t.children.front()));
            return t;
        }
        case FunctorKind::Bag:
        case FunctorKind::Distribution:
        case FunctorKind::Exponent: throw EncodingError("functor expression is not normalized");
    }
    return t;
}

namespace {

Term map_leaves(const FunctorExpr& f, const Term& t, const std::function<Term(const Term&)>& leaf) {
    switch (f.kind) {
        case FunctorKind::Identity: return leaf(t);
        case FunctorKind::Constant: return t;
        case FunctorKind::Product:
        case FunctorKind::Coproduct: {
            Term out = t;
            for (std::size_t i = 0; i < t.children.size(); ++i) {
                const FunctorExpr& cf = f.kind == FunctorKind::Product ? f.children[i] : f.children[t.index - 1];
                out.children[i] = map_leaves(cf, t.children[i], leaf);
            }
            return out;
        }
        default: {
            Term out = t;
            for (auto& c : out.children) c = map_leaves(f.child(), c, leaf);
            return out;
        }
    }
}

}  // namespace

Term map_states(const FunctorExpr& f, const Term& t, const std::function<Term(const Term&)>& leaf) {
    return canonicalize(f, map_leaves(f, t, leaf));
}

void for_each_state(const FunctorExpr& f, const Term& t, const std::function<void(const Term&)>& fn) {
    switch (f.kind) {
        case FunctorKind::Identity: fn(t); return;
        case FunctorKind::Constant: return;
        case FunctorKind::Product:
            for (std::size_t i = 0; i < t.children.size(); ++i) for_each_state(f.children[i], t.children[i], fn);
            return;
        case FunctorKind::Coproduct: for_each_state(f.children[t.index - 1], t.children.front(), fn); return;
        default:
            for (const auto& c : t.children) for_each_state(f.child(), c, fn);
            return;
    }
}

std::string check_distributions(const FunctorExpr& f, const Term& t) {
    if (f.kind == FunctorKind::MonoidValued && f.origin == WeightOrigin::Distribution) {
        Rational total;
        for (const auto& w : t.weights) {
            if (w.sign() <= 0) return "distribution weight " + w.to_string() + " is not positive";
            total += w;
        }
        if (total != Rational(1)) return "distribution weights sum to " + total.to_string() + ", not 1";
    }
    switch (f.kind) {
        case FunctorKind::Identity:
        case FunctorKind::Constant: return {};
        case FunctorKind::Product:
            for (std::size_t i = 0; i < t.children.size(); ++i) {
                if (auto err = check_distributions(f.children[i], t.children[i]); !err.empty()) return err;
            }
            return {};
        case FunctorKind::Coproduct: return check_distributions(f.children[t.index - 1], t.children.front());
        default:
            for (const auto& c : t.children) {
                if (auto err = check_distributions(f.child(), c); !err.empty()) return err;
            }
            return {};
    }
}

std::string print_term(const FunctorExpr& f, const Term& t) {
    auto join = [](const std::vector<std::string>& parts, const char* sep) {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
        return out;
    };
    std::vector<std::string> parts;
    switch (f.kind) {
        case FunctorKind::Identity:
        case FunctorKind::Constant: return t.name;
        case FunctorKind::Powerset:
            for (const auto& c : t.children) parts.push_back(print_term(f.child(), c));
            return "{" + join(parts, ",") + "}";
        case FunctorKind::MonoidValued:
            for (std::size_t i = 0; i < t.children.size(); ++i) {
                parts.push_back(print_term(f.child(), t.children[i]) + ": " + t.weights[i].to_string());
            }
            return "{" + join(parts, ", ") + "}";
        case FunctorKind::Polynomial:
            if (f.from_exponent()) {
                for (std::size_t i = 0; i < t.children.size(); ++i) {
                    parts.push_back(f.atoms[i] + ": " + print_term(f.child(), t.children[i]));
                }
                return "{" + join(parts, ", ") + "}";
            }
            if (t.children.empty()) return t.name;
            for (const auto& c : t.children) parts.push_back(print_term(f.child(), c));
            return t.name + "(" + join(parts, ",") + ")";
        case FunctorKind::Product:
            for (std::size_t i = 0; i < t.children.size(); ++i) parts.push_back(print_term(f.children[i], t.children[i]));
            return "(" + join(parts, ",") + ")";
        case FunctorKind::Coproduct:
            return "in" + std::to_string(t.index) + " " + print_term(f.children[t.index - 1], t.children.front());
        default: throw EncodingError("functor expression is not normalized");
    }
}

}  // namespace coalmin
