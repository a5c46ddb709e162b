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

#include "coalmin/label.hpp"

#include <cassert>

namespace coalmin {

const char* monoid_name(Monoid m) {
    switch (m) {
        case Monoid::Int: return "Z";
        case Monoid::Rat: return "Q";
        case Monoid::Nat: return "N";
    }
    return "?";
}

Label Label::tagged(std::uint32_t index) const {
    Label l = *this;
    l.tags_.insert(l.tags_.begin(), index);
    return l;
}

Label Label::untagged() const {
    assert(is_tagged());
    Label l = *this;
    l.tags_.erase(l.tags_.begin());
    return l;
}

std::string Label::to_string() const {
    std::string base;
    switch (kind_) {
        case Kind::Unit: base = "*"; break;
        case Kind::MonoidElem: base = value_.to_string(); break;
        case Kind::Position: base = "#" + std::to_string(position_); break;
    }
    for (auto it = tags_.rbegin(); it != tags_.rend(); ++it) base = "in" + std::to_string(*it) + "(" + base + ")";
    return base;
}

std::size_t Label::hash() const {
    std::size_t seed = static_cast<std::size_t>(kind_);
    for (auto t : tags_) hash_combine(seed, t);
    switch (kind_) {
        case Kind::Unit: break;
        case Kind::MonoidElem:
            hash_combine(seed, static_cast<std::size_t>(monoid_));
            hash_combine(seed, value_.hash());
            break;
        case Kind::Position: hash_combine(seed, position_); break;
    }
    return seed;
}

}  // namespace coalmin
