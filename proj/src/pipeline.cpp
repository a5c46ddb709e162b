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

#include "coalmin/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <utility>

#include "coalmin/errors.hpp"
#include "coalmin/quotient.hpp"
#include "coalmin/reach.hpp"
#include "coalmin/refine.hpp"

namespace coalmin {

MinimizeResult minimize(const InputSpec& spec, const MinimizeOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    MinimizeResult result;
    MinimizeStats& st = result.stats;

    const EncodedCoalgebra flat = flatten(spec);
    st.states_in = flat.size();
    st.edges_in = flat.edge_count();

    RefineStats rs;
    const Partition p = refine(flat, &rs);
    st.rounds = rs.rounds;
    st.blocks = p.count();

    EncodedCoalgebra q = build_quotient(flat, p, QuotientOptions{options.check});
    result.block_of_input.resize(spec.states.size());
    for (std::size_t i = 0; i < spec.states.size(); ++i) result.block_of_input[i] = p.block_of[i];

    if (options.reach && q.initial) {
        Restriction r = restrict(q, reachable(q, *q.initial));
        st.reach_applied = true;
        st.reachable_dropped = q.size() - r.system.size();
        for (auto& b : result.block_of_input) {
            const StateId mapped = r.new_id[*b];
            b = mapped == Restriction::kDropped ? std::nullopt : std::optional<StateId>(mapped);
        }
        q = std::move(r.system);
    }

    st.states_out = q.size();
    st.edges_out = q.edge_count();
    result.system = std::move(q);
    st.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string block_name(std::size_t k) { return "B" + std::to_string(k); }

namespace {

class Unflattener {
public:
    explicit Unflattener(const EncodedCoalgebra& c) : c_(c), cache_(c.size()), busy_(c.size(), false) {}

    /// Term of state x with every intermediate leaf substituted.
    const Term& expand(StateId x) {
        if (cache_[x]) return *cache_[x];
        if (busy_[x]) throw EncodingError("cyclic intermediate states at " + std::to_string(x));
        busy_[x] = true;
        Term t = c_.decode(x);
        substitute(t);
        busy_[x] = false;
        cache_[x] = std::move(t);
        return *cache_[x];
    }

private:
    void substitute(Term& t) {
        if (t.kind == TermKind::State) {
            if (c_.states.at(t.id).sort == 0) {
                t.name = block_name(t.id);
            } else {
                t = expand(t.id);
            }
            return;
        }
        for (auto& child : t.children) substitute(child);
    }

    const EncodedCoalgebra& c_;
    std::vector<std::optional<Term>> cache_;
    std::vector<bool> busy_;
};

}  // namespace

std::vector<Term> unflatten(const EncodedCoalgebra& c) {
    Unflattener u(c);
    std::vector<Term> out;
    for (std::size_t x = 0; x < c.size(); ++x) {
        if (c.states[x].sort == 0) out.push_back(u.expand(static_cast<StateId>(x)));
    }
    return out;
}

std::string render_document(const InputSpec& spec, const MinimizeResult& result) {
    const EncodedCoalgebra& c = result.system;
    const MinimizeStats& st = result.stats;
    std::ostringstream os;
    os << "functor: " << spec.functor_text << "\n";
    if (c.initial) os << "initial: " << block_name(*c.initial) << "\n";
    const std::vector<Term> terms = unflatten(c);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        os << block_name(k) << ": " << print_term(spec.functor, canonicalize(spec.functor, terms[k])) << "\n";
    }

    os << "\npartition:\n";
    for (std::size_t i = 0; i < spec.states.size(); ++i) {
        os << "  " << spec.states[i].first << " -> ";
        if (result.block_of_input[i]) {
            os << block_name(*result.block_of_input[i]) << "\n";
        } else {
            os << "(unreachable)\n";
        }
    }

    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", st.wall_ms);
    os << "\nstats:\n";
    os << "  states: " << st.states_in << " -> " << st.states_out << "\n";
    os << "  edges: " << st.edges_in << " -> " << st.edges_out << "\n";
    os << "  blocks: " << st.blocks << "\n";
    if (st.reach_applied) {
        os << "  reachable: " << st.states_out << " of " << st.blocks << "\n";
    } else {
        os << "  reachable: skipped\n";
    }
    os << "  rounds: " << st.rounds << "\n";
    os << "  wall_ms: " << wall << "\n";
    return os.str();
}

}  // namespace coalmin
