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

#include "gsb/word.hpp"

#include <algorithm>
#include <cctype>

namespace gsb {

bool Word::matches_at(const Word& pattern, std::size_t pos) const {
  if (pos + pattern.size() > size()) return false;
  return std::equal(pattern.begin(), pattern.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::strong_ordering lex_compare(const Word& u, const Word& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    // smaller index = greater letter
    if (u[i] != v[i]) return v[i] <=> u[i];
  }
  if (u.size() == v.size()) return std::strong_ordering::equal;
  // the proper prefix is the greater word
  return u.size() < v.size() ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering deglex_compare(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return v[i] <=> u[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(OrderKind order, const Word& u, const Word& v) {
  return order == OrderKind::DegLex ? deglex_compare(u, v) : lex_compare(u, v);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter x : w) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

std::vector<std::size_t> subword_positions(const Word& w, const Word& u) {
  if (u.empty()) throw std::invalid_argument("find_subwords: empty pattern");
  std::vector<std::size_t> out;
  if (u.size() > w.size()) return out;
  for (std::size_t p = 0; p + u.size() <= w.size(); ++p) {
    if (w.matches_at(u, p)) out.push_back(p);
  }
  return out;
}

std::vector<Occurrence> find_subwords(const Word& w, const Word& u) {
  std::vector<Occurrence> out;
  for (std::size_t p : subword_positions(w, u)) {
    out.push_back({w.prefix(p), w.suffix(w.size() - p - u.size())});
  }
  return out;
}

bool contains_subword(const Word& w, const Word& u) {
  if (u.empty()) return true;
  return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

std::vector<std::size_t> find_overlaps(const Word& u, const Word& v) {
  std::vector<std::size_t> out;
  const std::size_t m = std::min(u.size(), v.size());
  for (std::size_t k = 1; k < m; ++k) {
    if (std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), v.begin())) out.push_back(k);
  }
  return out;
}

bool is_valid_generator_name(std::string_view name) {
  if (name.size() == 1 && name[0] >= '1' && name[0] <= '9') return true;
  if (name.ends_with("^-1")) name.remove_suffix(3);
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (names_.size() > 0xFFFF) throw std::invalid_argument("alphabet too large");
  std::size_t digits = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (!is_valid_generator_name(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
    if (!index_.emplace(n, static_cast<Letter>(i)).second)
      throw std::invalid_argument("duplicate generator name '" + n + "'");
    if (n.size() == 1 && std::isdigit(static_cast<unsigned char>(n[0]))) ++digits;
  }
  if (digits != 0 && digits != names_.size())
    throw std::invalid_argument("digit generator names cannot be mixed with identifiers");
  digit_mode_ = digits != 0;
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::letter(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

void Alphabet::validate(const Word& w) const {
  for (Letter x : w) {
    if (x >= names_.size())
      throw AlphabetMismatch("letter index " + std::to_string(x) + " is outside an alphabet of size " +
                             std::to_string(names_.size()));
  }
}

std::string Alphabet::render(const Word& w) const {
  if (w.empty()) return digit_mode_ ? "()" : "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (text.substr(i, 2) == "()") {
      i += 2;
      continue;
    }
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const auto run = text.substr(i, j - i);
      if (digit_mode_) {
        for (char d : run) w.push_back(letter(std::string_view(&d, 1)));
      } else if (run != "1") {
        throw std::invalid_argument("unexpected number '" + std::string(run) + "' in word");
      }
      i = j;
      continue;
    }
    while (j < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
      ++j;
    if (j == i) throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in word");
    if (text.substr(j, 3) == "^-1") j += 3;
    w.push_back(letter(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

}  // namespace gsb
