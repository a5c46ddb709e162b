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

#ifndef COALMIN_ERRORS_HPP_
#define COALMIN_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coalmin {

/// Problem with user input, reported with a 1-based line/column (0 when unknown).
class InputError : public std::runtime_error {
public:
    InputError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(message, line, column)), message_(message), line_(line), column_(column) {}

    /// The message without the position prefix.
    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// A term or encoded pair that does not fit its functor: type mismatch,
/// zero weight, malformed encoding, unknown label tag.
class EncodingError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Internal-consistency failure of the pipeline (e.g. two members of one block
/// disagree on the quotient's edges, or a restriction is not successor-closed).
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& message, std::size_t block = npos)
        : std::logic_error(message), block_(block) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t block() const { return block_; }

private:
    std::size_t block_;
};

}  // namespace coalmin

#endif  // COALMIN_ERRORS_HPP_
