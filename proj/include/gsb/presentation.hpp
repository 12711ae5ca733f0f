/* Copyright 2026 The gsb Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsb/lie.hpp"

namespace gsb {

enum class PresentationKind { Monoid, Group, Lie };

const char* to_string(PresentationKind kind);

/// Generators (descending precedence), an order, and defining relations.
/// Associative kinds fill `relations`; the Lie kind fills `lie_relations`.
/// For the group kind every generator x has an inverse x^-1 in the
/// alphabet and the relations x x^-1 = 1 = x^-1 x are implied.
struct Presentation {
  PresentationKind kind = PresentationKind::Monoid;
  Alphabet alphabet;
  OrderKind order = OrderKind::DegLex;
  std::vector<NcPolynomial> relations;
  std::vector<LiePolynomial> lie_relations;
  /// Free-form `key=value` lines of the expect block, in file order.
  std::vector<std::pair<std::string, std::string>> expect;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Reads the text format:
///
///     # comment
///     kind=monoid|group|lie
///     generators=a b c
///     order=deglex
///     relations:
///     a*b = b*a
///     a*c - c*a + 2 b
///     expect:
///     relations=3
///
/// Throws ParseError (1-based line and column) on malformed input.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation: parse(emit(p)) == p.
std::string emit_presentation(const Presentation& p);

/// One associative relation `LHS = RHS` (stored LHS - RHS) or a bare
/// polynomial. `line` is only used for error positions.
NcPolynomial parse_polynomial(std::string_view text, const Alphabet& alphabet, std::size_t line = 1);

/// A Lie relation with `[a,b]` and left-normed `[a b c]` brackets.
LiePolynomial parse_lie_polynomial(std::string_view text, const Alphabet& alphabet, std::size_t line = 1);

/// Defining relations plus the implied inverse relations of the group kind.
/// Throws std::invalid_argument for the Lie kind.
std::vector<NcPolynomial> associative_relations(const Presentation& p);

RewriteSystem rewrite_system(const Presentation& p);
LieSystem lie_system(const Presentation& p);

/// Value of an expect key, or nullptr.
const std::string* find_expect(const Presentation& p, std::string_view key);

}  // namespace gsb
