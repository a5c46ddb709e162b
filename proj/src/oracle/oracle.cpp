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

#include "coalmin/oracle/oracle.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace coalmin::oracle {

namespace {

struct KeyLess {
    bool operator()(const std::pair<std::uint32_t, Term>& a, const std::pair<std::uint32_t, Term>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

}  // namespace

std::vector<std::uint32_t> oracle_partition(const InputSpec& spec) {
    const std::size_t n = spec.states.size();
    if (n > kMaxStates) throw std::length_error("oracle_partition: more than 10 states");

    std::vector<std::uint32_t> block(n, 0);
    std::size_t count = n == 0 ? 0 : 1;
    while (true) {
        std::map<std::pair<std::uint32_t, Term>, std::uint32_t, KeyLess> ids;
        std::vector<std::uint32_t> next(n);
        for (std::size_t x = 0; x < n; ++x) {
            Term image = map_states(spec.functor, spec.states[x].second,
                                    [&](const Term& leaf) { return Term::state(block.at(leaf.id)); });
            auto key = std::make_pair(block[x], std::move(image));
            auto it = ids.find(key);
            if (it == ids.end()) it = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size())).first;
            next[x] = it->second;
        }
        block = std::move(next);
        if (ids.size() == count) return block;
        count = ids.size();
    }
}

std::set<std::string> oracle_canonical_successors(const FunctorExpr& f, const Term& t) {
    std::set<std::string> out;
    for_each_state(f, t, [&](const Term& leaf) { out.insert(leaf.name); });
    return out;
}

std::set<std::string> oracle_reachable(const InputSpec& spec) {
    std::map<std::string, const Term*> by_name;
    for (const auto& [name, term] : spec.states) by_name.emplace(name, &term);
    std::set<std::string> seen;
    if (!spec.initial) return seen;
    std::deque<std::string> todo{*spec.initial};
    seen.insert(*spec.initial);
    while (!todo.empty()) {
        const std::string cur = todo.front();
        todo.pop_front();
        for (const auto& s : oracle_canonical_successors(spec.functor, *by_name.at(cur))) {
            if (seen.insert(s).second) todo.push_back(s);
        }
    }
    return seen;
}

std::size_t moore_minimal_size(const Dfa& dfa) {
    // Reachable part.
    const std::size_t n = dfa.accepting.size();
    std::vector<bool> reach(n, false);
    std::deque<std::uint32_t> todo{dfa.start};
    reach[dfa.start] = true;
    while (!todo.empty()) {
        const std::uint32_t q = todo.front();
        todo.pop_front();
        for (std::uint32_t r : dfa.delta[q]) {
            if (!reach[r]) {
                reach[r] = true;
                todo.push_back(r);
            }
        }
    }

    // Moore: split by acceptance, then by the classes of the successors.
    std::vector<std::size_t> cls(n, 0);
    for (std::size_t q = 0; q < n; ++q) cls[q] = dfa.accepting[q] ? 1 : 0;
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n, 0);
        for (std::size_t q = 0; q < n; ++q) {
            if (!reach[q]) continue;
            std::vector<std::size_t> key{cls[q]};
            for (std::uint32_t r : dfa.delta[q]) key.push_back(cls[r]);
            next[q] = ids.emplace(std::move(key), ids.size()).first->second;
        }
        cls = std::move(next);
        if (ids.size() == classes) return classes;
        classes = ids.size();
    }
}

}  // namespace coalmin::oracle
