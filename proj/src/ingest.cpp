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

#include "coalmin/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "coalmin/errors.hpp"

namespace coalmin {

std::optional<StateId> InputSpec::initial_id() const {
    if (!initial) return std::nullopt;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].first == *initial) return static_cast<StateId>(i);
    }
    return std::nullopt;
}

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

bool is_block_name(std::string_view name) {
    return name.size() > 1 && name[0] == 'B' &&
           std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct Reference {
    std::string name;
    std::size_t column;
};

/// Type-directed recursive-descent parser for one term on one line.
class TermParser {
public:
    TermParser(std::string_view text, std::size_t line, std::size_t column_offset)
        : text_(text), line_(line), offset_(column_offset) {}

    Term parse_all(const FunctorExpr& f) {
        Term t = term(f);
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return t;
    }

    const std::vector<Reference>& references() const { return references_; }

private:
    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const {
        throw InputError(message, line_, offset_ + pos + 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!at(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational weight() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
        auto w = Rational::parse(text_.substr(start, pos_ - start));
        if (!w) fail_at("expected a weight (integer or p/q)", start);
        return *w;
    }

    template <typename Fn>
    void comma_list(char close, Fn&& item) {
        if (at(close)) {
            ++pos_;
            return;
        }
        while (true) {
            item();
            if (at(',')) {
                ++pos_;
                continue;
            }
            expect(close);
            return;
        }
    }

    void check_weight(const FunctorExpr& f, const Rational& w, std::size_t pos) {
        if (f.origin == WeightOrigin::Distribution && w.sign() <= 0) {
            fail_at("distribution weight " + w.to_string() + " is not positive", pos);
        }
        if (f.monoid != Monoid::Rat && !w.is_integer()) {
            fail_at(std::string("weight ") + w.to_string() + " is not in " + monoid_name(f.monoid), pos);
        }
        if (f.monoid == Monoid::Nat && w.sign() < 0) fail_at("weight " + w.to_string() + " is not in N", pos);
    }

    Term term(const FunctorExpr& f) {
        skip_space();
        const std::size_t start = pos_;
        switch (f.kind) {
            case FunctorKind::Identity: {
                std::string name = word("a state name");
                references_.push_back({name, offset_ + start + 1});
                return Term::state(std::move(name));
            }
            case FunctorKind::Constant: {
                std::string a = word("an atom");
                if (std::find(f.atoms.begin(), f.atoms.end(), a) == f.atoms.end()) {
                    fail_at("atom '" + a + "' is not in " + to_string(f), start);
                }
                return Term::atom(std::move(a));
            }
            case FunctorKind::Powerset: {
                expect('{');
                std::vector<Term> elements;
                comma_list('}', [&] { elements.push_back(term(f.child())); });
                return Term::set(std::move(elements));
            }
            case FunctorKind::MonoidValued: {
                expect('{');
                std::vector<std::pair<Term, Rational>> entries;
                comma_list('}', [&] {
                    Term key = term(f.child());
                    if (f.origin == WeightOrigin::Bag && !at(':')) {
                        entries.emplace_back(std::move(key), Rational(1));  // multiset notation
                        return;
                    }
                    expect(':');
                    skip_space();
                    const std::size_t wpos = pos_;
                    Rational w = weight();
                    check_weight(f, w, wpos);
                    entries.emplace_back(std::move(key), w);
                });
                return Term::weighted(std::move(entries));
            }
            case FunctorKind::Polynomial: {
                if (f.from_exponent()) {
                    expect('{');
                    std::vector<std::optional<Term>> args(f.atoms.size());
                    comma_list('}', [&] {
                        skip_space();
                        const std::size_t lpos = pos_;
                        std::string letter = word("a letter");
                        auto it = std::find(f.atoms.begin(), f.atoms.end(), letter);
                        if (it == f.atoms.end()) fail_at("letter '" + letter + "' is not in the exponent", lpos);
                        auto& slot = args[static_cast<std::size_t>(it - f.atoms.begin())];
                        if (slot) fail_at("letter '" + letter + "' given twice", lpos);
                        expect(':');
                        slot = term(f.child());
                    });
                    std::vector<Term> out;
                    for (std::size_t i = 0; i < args.size(); ++i) {
                        if (!args[i]) fail_at("missing successor for letter '" + f.atoms[i] + "'", start);
                        out.push_back(std::move(*args[i]));
                    }
                    return Term::apply(std::string(kExponentSymbol), std::move(out));
                }
                std::string symbol = word("an operation symbol");
                auto sym = std::find_if(f.signature.begin(), f.signature.end(),
                                        [&](const OperationSymbol& s) { return s.name == symbol; });
                if (sym == f.signature.end()) fail_at("unknown operation symbol '" + symbol + "'", start);
                std::vector<Term> args;
                if (at('(')) {
                    ++pos_;
                    comma_list(')', [&] { args.push_back(term(f.child())); });
                }
                if (args.size() != sym->arity) {
                    fail_at("operation symbol '" + symbol + "' expects " + std::to_string(sym->arity) + " arguments",
                            start);
                }
                return Term::apply(std::move(symbol), std::move(args));
            }
            case FunctorKind::Product: {
                expect('(');
                std::vector<Term> components;
                for (std::size_t i = 0; i < f.children.size(); ++i) {
                    if (i) expect(',');
                    components.push_back(term(f.children[i]));
                }
                expect(')');
                return Term::tuple(std::move(components));
            }
            case FunctorKind::Coproduct: {
                std::string tag = word("an injection (in1, in2, ..., inl, inr)");
                std::uint32_t index = 0;
                if (tag == "inl") {
                    index = 1;
                } else if (tag == "inr") {
                    index = 2;
                } else if (tag.size() > 2 && tag.starts_with("in") &&
                           std::all_of(tag.begin() + 2, tag.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                    index = static_cast<std::uint32_t>(std::stoul(tag.substr(2)));
                }
                if (index < 1 || index > f.children.size()) fail_at("bad injection '" + tag + "'", start);
                return Term::inject(index, term(f.children[index - 1]));
            }
            default: throw EncodingError("functor expression is not normalized");
        }
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
    std::vector<Reference> references_;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Term parse_term(const FunctorExpr& f, std::string_view text) { return TermParser(text, 1, 0).parse_all(f); }

InputSpec parse(std::string_view text, const ParseOptions& options) {
    InputSpec spec;
    bool have_functor = false;
    std::size_t initial_line = 0;
    std::size_t initial_column = 0;
    std::unordered_map<std::string, StateId> ids;
    struct Pending {
        std::size_t line;
        std::size_t column;
        std::vector<Reference> references;
    };
    std::vector<Pending> pending;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line == "partition:" || line == "stats:") break;

        const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());
        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) throw InputError("expected '<name>: ...'", line_no, indent + 1);
        const std::string_view key = trim(line.substr(0, colon));
        const std::size_t rest_offset = indent + colon + 1;
        const std::string_view rest = line.substr(colon + 1);

        if (!have_functor) {
            if (key != "functor") throw InputError("first line must be 'functor: <expression>'", line_no, indent + 1);
            const std::string_view expr = trim(rest);
            try {
                spec.functor = normalize_functor(parse_functor(expr));
            } catch (const InputError& e) {
                const std::size_t lead = static_cast<std::size_t>(expr.data() - rest.data());
                throw InputError(e.message(), line_no, rest_offset + lead + e.column());
            }
            spec.functor_text = std::string(expr);
            have_functor = true;
            continue;
        }
        if (key == "functor") throw InputError("functor given twice", line_no, indent + 1);
        if (key == "initial") {
            if (spec.initial) throw InputError("initial state given twice", line_no, indent + 1);
            const std::string_view name = trim(rest);
            if (name.empty() || !std::all_of(name.begin(), name.end(), is_name_char)) {
                throw InputError("expected a state name after 'initial:'", line_no, rest_offset + 1);
            }
            spec.initial = std::string(name);
            initial_line = line_no;
            initial_column = rest_offset + static_cast<std::size_t>(name.data() - rest.data()) + 1;
            continue;
        }
        if (key.empty() || !std::all_of(key.begin(), key.end(), is_name_char)) {
            throw InputError("bad state name '" + std::string(key) + "'", line_no, indent + 1);
        }
        if (!options.allow_block_names && is_block_name(key)) {
            throw InputError("state name '" + std::string(key) +
                                 "' is reserved for output blocks (B followed by digits); rename the state",
                             line_no, indent + 1);
        }
        if (ids.contains(std::string(key))) {
            throw InputError("duplicate state '" + std::string(key) + "'", line_no, indent + 1);
        }
        const auto id = static_cast<StateId>(spec.states.size());
        ids.emplace(std::string(key), id);

        TermParser parser(rest, line_no, rest_offset);
        Term t = parser.parse_all(spec.functor);
        const std::size_t term_column = rest_offset + static_cast<std::size_t>(trim(rest).data() - rest.data()) + 1;
        pending.push_back({line_no, term_column, parser.references()});
        spec.states.emplace_back(std::string(key), std::move(t));
    }
    if (!have_functor) throw InputError("missing 'functor:' line", line_no ? line_no : 1, 1);

    for (std::size_t i = 0; i < spec.states.size(); ++i) {
        for (const auto& ref : pending[i].references) {
            if (!ids.contains(ref.name)) {
                throw InputError("unknown state '" + ref.name + "'", pending[i].line, ref.column);
            }
        }
        Term& t = spec.states[i].second;
        t = map_states(spec.functor, t, [&](const Term& leaf) { return Term::state(leaf.name, ids.at(leaf.name)); });
        if (auto err = check_distributions(spec.functor, t); !err.empty()) {
            throw InputError(err, pending[i].line, pending[i].column);
        }
    }
    if (spec.initial && !ids.contains(*spec.initial)) {
        throw InputError("unknown initial state '" + *spec.initial + "'", initial_line, initial_column);
    }
    return spec;
}

// ---------------------------------------------------------------------------
// flattening

namespace {

struct SortLayout {
    std::vector<FunctorExpr> sorts;
    /// Sort opened by each composite base node (keyed by node address in the normalized expression).
    std::map<const FunctorExpr*, std::uint32_t> inner_sort;
};

FunctorExpr basic_of(const FunctorExpr& f, SortLayout& layout);

std::uint32_t open_sort(const FunctorExpr& f, SortLayout& layout) {
    const auto sort = static_cast<std::uint32_t>(layout.sorts.size());
    layout.sorts.emplace_back();
    FunctorExpr basic = basic_of(f, layout);
    layout.sorts[sort] = std::move(basic);
    return sort;
}

FunctorExpr basic_of(const FunctorExpr& f, SortLayout& layout) {
    FunctorExpr out = f;
    switch (f.kind) {
        case FunctorKind::Identity: out.sort = 0; return out;
        case FunctorKind::Constant: return out;
        case FunctorKind::Product:
        case FunctorKind::Coproduct:
            for (std::size_t i = 0; i < f.children.size(); ++i) out.children[i] = basic_of(f.children[i], layout);
            return out;
        default: {
            if (f.child().kind == FunctorKind::Identity) {
                out.children.front() = FunctorExpr::identity(0);
                return out;
            }
            const std::uint32_t sort = open_sort(f.child(), layout);
            layout.inner_sort.emplace(&f, sort);
            out.children.front() = FunctorExpr::identity(sort);
            return out;
        }
    }
}

SortLayout layout_of(const FunctorExpr& normalized) {
    SortLayout layout;
    open_sort(normalized, layout);
    return layout;
}

class Flattener {
public:
    Flattener(const SortLayout& layout, EncodedCoalgebra& out) : layout_(layout), out_(out) {}

    /// Rewrites a term of the composite f into a depth-one term, creating
    /// fresh states for subterms below base functors with a composite argument.
    Term depth_one(const FunctorExpr& f, const Term& t) {
        switch (f.kind) {
            case FunctorKind::Identity:
            case FunctorKind::Constant: return t;
            case FunctorKind::Product: {
                Term r = t;
                for (std::size_t i = 0; i < f.children.size(); ++i) r.children[i] = depth_one(f.children[i], t.children[i]);
                return r;
            }
            case FunctorKind::Coproduct: {
                Term r = t;
                r.children.front() = depth_one(f.children[t.index - 1], t.children.front());
                return r;
            }
            default: {
                auto it = layout_.inner_sort.find(&f);
                if (it == layout_.inner_sort.end()) return t;
                Term r = t;
                for (auto& c : r.children) c = Term::state(fresh_state(it->second, f.child(), c));
                return r;
            }
        }
    }

    StateId fresh_state(std::uint32_t sort, const FunctorExpr& composite, const Term& t) {
        const auto id = static_cast<StateId>(out_.states.size());
        out_.states.emplace_back();
        out_.states[id].sort = sort;
        out_.names.emplace_back();
        Term shallow = depth_one(composite, t);
        Encoded e = out_.encode(sort, shallow);
        out_.states[id].value = std::move(e.value);
        out_.states[id].edges = std::move(e.edges);
        return id;
    }

private:
    const SortLayout& layout_;
    EncodedCoalgebra& out_;
};

}  // namespace

std::vector<FunctorExpr> sort_functors(const FunctorExpr& normalized) { return layout_of(normalized).sorts; }

FunctorExpr recompose(const std::vector<FunctorExpr>& sorts, std::uint32_t sort) {
    FunctorExpr out = sorts.at(sort);
    auto substitute = [&](auto&& self, FunctorExpr& f) -> void {
        if (f.is_base()) {
            FunctorExpr& var = f.children.front();
            if (var.kind == FunctorKind::Identity && var.sort != 0) var = recompose(sorts, var.sort);
            return;
        }
        for (auto& c : f.children) self(self, c);
    };
    substitute(substitute, out);
    return out;
}

EncodedCoalgebra flatten(const InputSpec& spec) {
    SortLayout layout = layout_of(spec.functor);
    EncodedCoalgebra out;
    out.sorts = layout.sorts;
    out.states.resize(spec.states.size());
    out.original_count = spec.states.size();
    for (const auto& [name, term] : spec.states) out.names.push_back(name);
    out.initial = spec.initial_id();

    Flattener flattener(layout, out);
    for (std::size_t i = 0; i < spec.states.size(); ++i) {
        Term shallow = flattener.depth_one(spec.functor, spec.states[i].second);
        Encoded e = out.encode(0, shallow);
        out.states[i].sort = 0;
        out.states[i].value = std::move(e.value);
        out.states[i].edges = std::move(e.edges);
    }
    return out;
}

}  // namespace coalmin
