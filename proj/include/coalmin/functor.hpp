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

/** @file functor.hpp
 *  @brief Functor expressions: the type of a coalgebra.
 *
 *  Leaves are the identity X and finite constant sets; inner nodes are the
 *  base functors (finite powerset, bags, distributions, monoid-valued,
 *  polynomial, exponent) and n-ary products/coproducts.
 *
 *  normalize_functor() removes the sugar: bags become N^(-), distributions
 *  Q^(-) with a sum-to-one check, exponents a one-symbol polynomial. The
 *  origin of each rewritten node is remembered so terms print back in the
 *  surface syntax.
 *
 *  A *basic* functor is a normalized expression in which every base node
 *  (powerset, monoid-valued, polynomial) has an identity leaf as its child.
 *  Those identity leaves carry a sort index naming the state set they range
 *  over; the flattening of composite functors produces one basic functor per
 *  sort.
 */

#ifndef COALMIN_FUNCTOR_HPP_
#define COALMIN_FUNCTOR_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coalmin/label.hpp"

namespace coalmin {

enum class FunctorKind : std::uint8_t {
    Identity,
    Constant,
    Powerset,
    MonoidValued,
    Polynomial,
    Product,
    Coproduct,
    // Surface forms, removed by normalize_functor().
    Bag,
    Distribution,
    Exponent,
};

/// How a normalized monoid-valued node was written in the input.
enum class WeightOrigin : std::uint8_t { Plain, Bag, Distribution };

struct OperationSymbol {
    std::string name;
    std::uint32_t arity = 0;

    friend bool operator==(const OperationSymbol&, const OperationSymbol&) = default;
    friend auto operator<=>(const OperationSymbol&, const OperationSymbol&) = default;
};

struct FunctorExpr {
    FunctorKind kind = FunctorKind::Identity;
    /// Identity: the sort the variable ranges over (0 = the user's states).
    std::uint32_t sort = 0;
    /// Constant: the atoms. Exponent / exponent-derived Polynomial: the letters.
    std::vector<std::string> atoms;
    Monoid monoid = Monoid::Int;
    WeightOrigin origin = WeightOrigin::Plain;
    std::vector<OperationSymbol> signature;
    std::vector<FunctorExpr> children;

    static FunctorExpr identity(std::uint32_t sort = 0);
    static FunctorExpr constant(std::vector<std::string> atoms);
    static FunctorExpr powerset(FunctorExpr child);
    static FunctorExpr bag(FunctorExpr child);
    static FunctorExpr distribution(FunctorExpr child);
    static FunctorExpr monoid_valued(Monoid m, FunctorExpr child);
    static FunctorExpr polynomial(std::vector<OperationSymbol> signature, FunctorExpr child);
    static FunctorExpr exponent(std::vector<std::string> letters, FunctorExpr child);
    static FunctorExpr product(std::vector<FunctorExpr> children);
    static FunctorExpr coproduct(std::vector<FunctorExpr> children);

    bool is_base() const {
        return kind == FunctorKind::Powerset || kind == FunctorKind::MonoidValued || kind == FunctorKind::Polynomial ||
               kind == FunctorKind::Bag || kind == FunctorKind::Distribution || kind == FunctorKind::Exponent;
    }
    const FunctorExpr& child() const { return children.front(); }
    /// Polynomial written as an exponent F^C{...}.
    bool from_exponent() const { return kind == FunctorKind::Polynomial && !atoms.empty(); }

    friend bool operator==(const FunctorExpr&, const FunctorExpr&) = default;
};

/// Symbol name used for the single operation of an exponent-derived polynomial.
inline constexpr std::string_view kExponentSymbol = "tau";

/// Parses the FEXPR grammar; throws InputError with a 1-based column.
FunctorExpr parse_functor(std::string_view text);

FunctorExpr normalize_functor(const FunctorExpr& f);

/// Surface syntax; parse_functor(to_string(f)) == f for unnormalized f.
std::string to_string(const FunctorExpr& f);

bool is_normalized(const FunctorExpr& f);
bool is_basic(const FunctorExpr& f);

/// Sorts referenced by the variables of a basic functor (ascending, unique).
std::vector<std::uint32_t> variable_sorts(const FunctorExpr& basic);

}  // namespace coalmin

#endif  // COALMIN_FUNCTOR_HPP_
