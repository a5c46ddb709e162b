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

/** @file bag.hpp
 *  @brief Finite multisets and the bag calculus used by the encodings.
 *
 *  A Bag<T> is stored as its canonical sorted sequence, so equality,
 *  ordering and hashing of whole bags are by value. The multiplicity view
 *  (a finitely supported function T -> N) is available through count()
 *  and counts().
 *
 *  Bags of pairs Bag<(A, X)> model B(A x X), the edge bags of encoded
 *  coalgebras. fil() restricts such a bag to targets in a subset and forgets
 *  the targets; group() and ungroup() are the mutually inverse bijections
 *  between B(A x X) and finitely supported maps X -> B(A).
 */

#ifndef COALMIN_BAG_HPP_
#define COALMIN_BAG_HPP_

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

namespace coalmin {

inline void hash_combine(std::size_t& seed, std::size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <typename T>
class Bag {
public:
    using value_type = T;
    using const_iterator = typename std::vector<T>::const_iterator;

    Bag() = default;
    explicit Bag(std::vector<T> items) : items_(std::move(items)) { std::sort(items_.begin(), items_.end()); }
    Bag(std::initializer_list<T> items) : Bag(std::vector<T>(items)) {}

    /// Adopts a sequence that is already in canonical order.
    static Bag from_sorted(std::vector<T> items) {
        assert(std::is_sorted(items.begin(), items.end()));
        Bag b;
        b.items_ = std::move(items);
        return b;
    }

    const std::vector<T>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const_iterator begin() const { return items_.begin(); }
    const_iterator end() const { return items_.end(); }

    std::size_t count(const T& value) const {
        auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), value);
        return static_cast<std::size_t>(hi - lo);
    }

    /// The bag as a finitely supported function: distinct elements with multiplicities.
    std::vector<std::pair<T, std::size_t>> counts() const {
        std::vector<std::pair<T, std::size_t>> out;
        for (const auto& item : items_) {
            if (!out.empty() && out.back().first == item) {
                ++out.back().second;
            } else {
                out.emplace_back(item, 1);
            }
        }
        return out;
    }

    /// Bag union (sum of multiplicities).
    friend Bag operator+(const Bag& a, const Bag& b) {
        std::vector<T> merged;
        merged.reserve(a.size() + b.size());
        std::merge(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(), std::back_inserter(merged));
        return from_sorted(std::move(merged));
    }

    friend bool operator==(const Bag&, const Bag&) = default;
    friend auto operator<=>(const Bag& a, const Bag& b) { return a.items_ <=> b.items_; }

private:
    std::vector<T> items_;
};

/// Finitely supported map X -> B(A); only nonempty bags are stored, keyed in ascending X.
template <typename A, typename X>
using GroupedBag = std::vector<std::pair<X, Bag<A>>>;

/// fil_S: labels of all entries whose target satisfies the predicate.
template <typename A, typename X, typename Pred>
    requires std::predicate<Pred, const X&>
Bag<A> fil(const Bag<std::pair<A, X>>& bag, Pred&& in_subset) {
    std::vector<A> labels;
    for (const auto& [label, target] : bag) {
        if (in_subset(target)) labels.push_back(label);
    }
    // Canonical order on pairs is label-major, so the survivors are already sorted.
    return Bag<A>::from_sorted(std::move(labels));
}

template <typename A, typename X>
Bag<A> fil(const Bag<std::pair<A, X>>& bag, const std::set<X>& subset) {
    return fil(bag, [&](const X& x) { return subset.contains(x); });
}

template <typename A, typename X>
GroupedBag<A, X> group(const Bag<std::pair<A, X>>& bag) {
    std::vector<std::pair<X, A>> swapped;
    swapped.reserve(bag.size());
    for (const auto& [label, target] : bag) swapped.emplace_back(target, label);
    std::sort(swapped.begin(), swapped.end());

    GroupedBag<A, X> out;
    std::size_t i = 0;
    while (i < swapped.size()) {
        std::size_t j = i;
        std::vector<A> labels;
        while (j < swapped.size() && swapped[j].first == swapped[i].first) labels.push_back(swapped[j++].second);
        out.emplace_back(swapped[i].first, Bag<A>::from_sorted(std::move(labels)));
        i = j;
    }
    return out;
}

template <typename A, typename X>
Bag<std::pair<A, X>> ungroup(const GroupedBag<A, X>& grouped) {
    std::vector<std::pair<A, X>> out;
    for (const auto& [target, labels] : grouped) {
        for (const auto& label : labels) out.emplace_back(label, target);
    }
    return Bag<std::pair<A, X>>(std::move(out));
}

}  // namespace coalmin

template <typename T>
struct std::hash<coalmin::Bag<T>> {
    std::size_t operator()(const coalmin::Bag<T>& bag) const noexcept {
        std::size_t seed = bag.size();
        for (const auto& item : bag) coalmin::hash_combine(seed, std::hash<T>{}(item));
        return seed;
    }
};

#endif  // COALMIN_BAG_HPP_
