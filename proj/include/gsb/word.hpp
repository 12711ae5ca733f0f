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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gsb {

/// Index of a generator inside its Alphabet. Index 0 is the greatest letter.
using Letter = std::uint16_t;

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of the free monoid X*. The empty word is the unit 1.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::span<const Letter>(letters_).subspan(pos, len));
  }
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  Word& append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }
  Word& push_back(Letter x) {
    letters_.push_back(x);
    return *this;
  }

  friend Word operator*(const Word& u, const Word& v) {
    Word w;
    w.letters_.reserve(u.size() + v.size());
    w.letters_ = u.letters_;
    w.letters_.insert(w.letters_.end(), v.letters_.begin(), v.letters_.end());
    return w;
  }

  /// Storage equality. Ordering of words is only through the named orders below.
  friend bool operator==(const Word&, const Word&) = default;

  /// True iff `pattern` occurs in this word starting at `pos`.
  bool matches_at(const Word& pattern, std::size_t pos) const;

 private:
  std::vector<Letter> letters_;
};

enum class OrderKind { DegLex, Lex };

/// Lexicographic order by letter precedence; a proper prefix is GREATER
/// than any of its extensions (so ab < a).
std::strong_ordering lex_compare(const Word& u, const Word& v);

/// Length first, then letterwise by precedence.
std::strong_ordering deglex_compare(const Word& u, const Word& v);

std::strong_ordering compare(OrderKind order, const Word& u, const Word& v);

struct DegLexLess {
  bool operator()(const Word& u, const Word& v) const { return deglex_compare(u, v) < 0; }
};
struct DegLexGreater {
  bool operator()(const Word& u, const Word& v) const { return deglex_compare(u, v) > 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Context (a, b) of a subword occurrence: a * u * b == w.
struct Occurrence {
  Word prefix;
  Word suffix;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// All (a, b) with w = a*u*b, by increasing |a|. Throws on an empty pattern.
std::vector<Occurrence> find_subwords(const Word& w, const Word& u);

/// Start positions of u in w, increasing.
std::vector<std::size_t> subword_positions(const Word& w, const Word& u);

bool contains_subword(const Word& w, const Word& u);

/// All overlap lengths k, 1 <= k < min(|u|, |v|), such that the length-k
/// suffix of u equals the length-k prefix of v. Increasing.
std::vector<std::size_t> find_overlaps(const Word& u, const Word& v);

/// Ordered set of generator names. Listing order is descending precedence:
/// the first name is the greatest letter.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Letter> find(std::string_view name) const;
  Letter letter(std::string_view name) const;

  /// Every generator name is a single digit 1..9 (display convention for
  /// small plactic-style alphabets). Digit runs such as "3212" then parse
  /// as words.
  bool digit_mode() const noexcept { return digit_mode_; }

  /// Throws AlphabetMismatch if some letter is not a valid index.
  void validate(const Word& w) const;

  /// Generators joined by '*'; the empty word renders as "1" (or "()" in
  /// digit mode, where "1" is a generator).
  std::string render(const Word& w) const;

  /// Parses whitespace- or '*'-separated generator names.
  Word parse_word(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
  bool digit_mode_ = false;
};

/// Accepts identifiers [A-Za-z][A-Za-z0-9_]* optionally suffixed by "^-1",
/// or a single digit 1..9.
bool is_valid_generator_name(std::string_view name);

}  // namespace gsb
