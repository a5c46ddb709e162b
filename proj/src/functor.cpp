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

#include "coalmin/functor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "coalmin/errors.hpp"

namespace coalmin {

FunctorExpr FunctorExpr::identity(std::uint32_t sort) {
    FunctorExpr f;
    f.kind = FunctorKind::Identity;
    f.sort = sort;
    return f;
}

FunctorExpr FunctorExpr::constant(std::vector<std::string> atoms) {
    FunctorExpr f;
    f.kind = FunctorKind::Constant;
    f.atoms = std::move(atoms);
    return f;
}

namespace {

FunctorExpr unary(FunctorKind kind, FunctorExpr child) {
    FunctorExpr f;
    f.kind = kind;
    f.children.push_back(std::move(child));
    return f;
}

}  // namespace

FunctorExpr FunctorExpr::powerset(FunctorExpr child) { return unary(FunctorKind::Powerset, std::move(child)); }
FunctorExpr FunctorExpr::bag(FunctorExpr child) { return unary(FunctorKind::Bag, std::move(child)); }
FunctorExpr FunctorExpr::distribution(FunctorExpr child) { return unary(FunctorKind::Distribution, std::move(child)); }

FunctorExpr FunctorExpr::monoid_valued(Monoid m, FunctorExpr child) {
    FunctorExpr f = unary(FunctorKind::MonoidValued, std::move(child));
    f.monoid = m;
    return f;
}

FunctorExpr FunctorExpr::polynomial(std::vector<OperationSymbol> signature, FunctorExpr child) {
    FunctorExpr f = unary(FunctorKind::Polynomial, std::move(child));
    f.signature = std::move(signature);
    return f;
}

FunctorExpr FunctorExpr::exponent(std::vector<std::string> letters, FunctorExpr child) {
    FunctorExpr f = unary(FunctorKind::Exponent, std::move(child));
    f.atoms = std::move(letters);
    return f;
}

FunctorExpr FunctorExpr::product(std::vector<FunctorExpr> children) {
    FunctorExpr f;
    f.kind = FunctorKind::Product;
    f.children = std::move(children);
    return f;
}

FunctorExpr FunctorExpr::coproduct(std::vector<FunctorExpr> children) {
    FunctorExpr f;
    f.kind = FunctorKind::Coproduct;
    f.children = std::move(children);
    return f;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum class Type { Word, Punct, End } type;
    std::string text;
    std::size_t column;
};

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' || c == '-';
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (text.substr(i, 2) == "\xC3\x97") {  // U+00D7 multiplication sign
            tokens.push_back({Token::Type::Word, "x", i + 1});
            i += 2;
        } else if (is_word_char(c)) {
            std::size_t j = i;
            while (j < text.size() && is_word_char(text[j])) ++j;
            tokens.push_back({Token::Type::Word, std::string(text.substr(i, j - i)), i + 1});
            i = j;
        } else if (std::string_view("(){},/^+").find(c) != std::string_view::npos) {
            tokens.push_back({Token::Type::Punct, std::string(1, c), i + 1});
            ++i;
        } else {
            throw InputError(std::string("unexpected character '") + c + "' in functor expression", 1, i + 1);
        }
    }
    tokens.push_back({Token::Type::End, "", text.size() + 1});
    return tokens;
}

class FunctorParser {
public:
    explicit FunctorParser(std::string_view text) : tokens_(tokenize(text)) {}

    FunctorExpr parse() {
        FunctorExpr f = sum();
        if (peek().type != Token::Type::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at(std::string_view text) const { return peek().type != Token::Type::End && peek().text == text; }

    [[noreturn]] void fail(const std::string& message) const { throw InputError(message, 1, peek().column); }

    void expect(std::string_view text) {
        if (!at(text)) fail("expected '" + std::string(text) + "'");
        ++pos_;
    }

    FunctorExpr sum() {
        std::vector<FunctorExpr> parts{product()};
        while (at("+")) {
            ++pos_;
            parts.push_back(product());
        }
        return parts.size() == 1 ? std::move(parts.front()) : FunctorExpr::coproduct(std::move(parts));
    }

    FunctorExpr product() {
        std::vector<FunctorExpr> parts{unary()};
        while (at("x")) {
            ++pos_;
            parts.push_back(unary());
        }
        return parts.size() == 1 ? std::move(parts.front()) : FunctorExpr::product(std::move(parts));
    }

    FunctorExpr unary() {
        if (at("P")) return (++pos_, FunctorExpr::powerset(unary()));
        if (at("B")) return (++pos_, FunctorExpr::bag(unary()));
        if (at("D")) return (++pos_, FunctorExpr::distribution(unary()));
        if (at("Sig")) {
            ++pos_;
            auto signature = symbols();
            return FunctorExpr::polynomial(std::move(signature), unary());
        }
        return postfix();
    }

    FunctorExpr postfix() {
        FunctorExpr f = primary();
        while (at("^")) {
            ++pos_;
            if (!at("C")) fail("expected 'C{...}' after '^'");
            ++pos_;
            f = FunctorExpr::exponent(atom_set("exponent"), std::move(f));
        }
        return f;
    }

    FunctorExpr primary() {
        if (at("X")) return (++pos_, FunctorExpr::identity());
        if (at("C")) {
            ++pos_;
            return FunctorExpr::constant(atom_set("constant"));
        }
        for (auto [word, monoid] : {std::pair{"Z", Monoid::Int}, {"Q", Monoid::Rat}, {"N", Monoid::Nat}}) {
            if (at(word)) {
                ++pos_;
                expect("^");
                expect("(");
                FunctorExpr child = sum();
                expect(")");
                return FunctorExpr::monoid_valued(monoid, std::move(child));
            }
        }
        if (at("(")) {
            ++pos_;
            FunctorExpr f = sum();
            expect(")");
            return f;
        }
        if (peek().type == Token::Type::End) fail("unexpected end of functor expression");
        fail("unexpected '" + peek().text + "' in functor expression");
    }

    std::vector<std::string> atom_set(const char* what) {
        const std::size_t column = peek().column;
        expect("{");
        std::vector<std::string> atoms;
        if (!at("}")) {
            while (true) {
                if (peek().type != Token::Type::Word) fail(std::string("expected ") + what + " element");
                atoms.push_back(next().text);
                if (!at(",")) break;
                ++pos_;
            }
        }
        expect("}");
        if (atoms.empty()) throw InputError(std::string("empty ") + what + " set", 1, column);
        std::set<std::string> seen;
        for (const auto& a : atoms) {
            if (!seen.insert(a).second) throw InputError("duplicate element '" + a + "' in " + what + " set", 1, column);
        }
        return atoms;
    }

    std::vector<OperationSymbol> symbols() {
        const std::size_t column = peek().column;
        expect("{");
        std::vector<OperationSymbol> signature;
        std::set<std::string> seen;
        if (!at("}")) {
            while (true) {
                if (peek().type != Token::Type::Word) fail("expected operation symbol");
                OperationSymbol sym{next().text, 0};
                expect("/");
                if (peek().type != Token::Type::Word) fail("expected arity");
                const std::string& digits = peek().text;
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), sym.arity);
                if (ec != std::errc{} || ptr != digits.data() + digits.size()) fail("bad arity '" + digits + "'");
                ++pos_;
                if (!seen.insert(sym.name).second) throw InputError("duplicate operation symbol '" + sym.name + "'", 1, column);
                signature.push_back(std::move(sym));
                if (!at(",")) break;
                ++pos_;
            }
        }
        expect("}");
        if (signature.empty()) throw InputError("empty signature", 1, column);
        return signature;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

FunctorExpr parse_functor(std::string_view text) { return FunctorParser(text).parse(); }

// ---------------------------------------------------------------------------

FunctorExpr normalize_functor(const FunctorExpr& f) {
    FunctorExpr out = f;
    for (auto& c : out.children) c = normalize_functor(c);
    switch (f.kind) {
        case FunctorKind::Bag:
            out.kind = FunctorKind::MonoidValued;
            out.monoid = Monoid::Nat;
            out.origin = WeightOrigin::Bag;
            break;
        case FunctorKind::Distribution:
            out.kind = FunctorKind::MonoidValued;
            out.monoid = Monoid::Rat;
            out.origin = WeightOrigin::Distribution;
            break;
        case FunctorKind::Exponent:
            out.kind = FunctorKind::Polynomial;
            out.signature = {OperationSymbol{std::string(kExponentSymbol), static_cast<std::uint32_t>(f.atoms.size())}};
            break;
        default: break;
    }
    return out;
}

bool is_normalized(const FunctorExpr& f) {
    if (f.kind == FunctorKind::Bag || f.kind == FunctorKind::Distribution || f.kind == FunctorKind::Exponent) {
        return false;
    }
    return std::all_of(f.children.begin(), f.children.end(), [](const auto& c) { return is_normalized(c); });
}

bool is_basic(const FunctorExpr& f) {
    switch (f.kind) {
        case FunctorKind::Identity:
        case FunctorKind::Constant: return true;
        case FunctorKind::Powerset:
        case FunctorKind::MonoidValued:
        case FunctorKind::Polynomial: return f.child().kind == FunctorKind::Identity;
        case FunctorKind::Product:
        case FunctorKind::Coproduct:
            return std::all_of(f.children.begin(), f.children.end(), [](const auto& c) { return is_basic(c); });
        default: return false;
    }
}

namespace {

void collect_sorts(const FunctorExpr& f, std::set<std::uint32_t>& out) {
    if (f.kind == FunctorKind::Identity) out.insert(f.sort);
    for (const auto& c : f.children) collect_sorts(c, out);
}

// Binding strength: 0 coproduct, 1 product, 2 prefix unary, 3 exponent, 4 atomic.
int level(const FunctorExpr& f) {
    switch (f.kind) {
        case FunctorKind::Coproduct: return 0;
        case FunctorKind::Product: return 1;
        case FunctorKind::Powerset:
        case FunctorKind::Bag:
        case FunctorKind::Distribution: return 2;
        case FunctorKind::Polynomial: return f.from_exponent() ? 3 : 2;
        case FunctorKind::MonoidValued: return f.origin == WeightOrigin::Plain ? 4 : 2;
        case FunctorKind::Exponent: return 3;
        default: return 4;
    }
}

std::string wrap(const FunctorExpr& f, int required) {
    std::string s = to_string(f);
    return level(f) < required ? "(" + s + ")" : s;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

}  // namespace

std::vector<std::uint32_t> variable_sorts(const FunctorExpr& basic) {
    std::set<std::uint32_t> sorts;
    collect_sorts(basic, sorts);
    return {sorts.begin(), sorts.end()};
}

std::string to_string(const FunctorExpr& f) {
    switch (f.kind) {
        case FunctorKind::Identity: return "X";
        case FunctorKind::Constant: return "C{" + join(f.atoms, ",") + "}";
        case FunctorKind::Powerset: return "P " + wrap(f.child(), 2);
        case FunctorKind::Bag: return "B " + wrap(f.child(), 2);
        case FunctorKind::Distribution: return "D " + wrap(f.child(), 2);
        case FunctorKind::MonoidValued:
            if (f.origin == WeightOrigin::Bag) return "B " + wrap(f.child(), 2);
            if (f.origin == WeightOrigin::Distribution) return "D " + wrap(f.child(), 2);
            return std::string(monoid_name(f.monoid)) + "^(" + to_string(f.child()) + ")";
        case FunctorKind::Polynomial: {
            if (f.from_exponent()) return wrap(f.child(), 4) + "^C{" + join(f.atoms, ",") + "}";
            std::vector<std::string> syms;
            for (const auto& s : f.signature) syms.push_back(s.name + "/" + std::to_string(s.arity));
            return "Sig{" + join(syms, ",") + "} " + wrap(f.child(), 2);
        }
        case FunctorKind::Exponent: return wrap(f.child(), 4) + "^C{" + join(f.atoms, ",") + "}";
        case FunctorKind::Product: {
            std::vector<std::string> parts;
            for (const auto& c : f.children) parts.push_back(wrap(c, 2));
            return join(parts, " x ");
        }
        case FunctorKind::Coproduct: {
            std::vector<std::string> parts;
            for (const auto& c : f.children) parts.push_back(wrap(c, 1));
            return join(parts, " + ");
        }
    }
    return "?";
}

}  // namespace coalmin
