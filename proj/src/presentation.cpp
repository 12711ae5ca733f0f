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

#include "gsb/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace gsb {

const char* to_string(PresentationKind kind) {
  switch (kind) {
    case PresentationKind::Monoid:
      return "monoid";
    case PresentationKind::Group:
      return "group";
    case PresentationKind::Lie:
      return "lie";
  }
  return "?";
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  if (auto p = s.find('#'); p != std::string_view::npos) s = s.substr(0, p);
  return s;
}

// Recursive-descent parser for one relation line.
class LineParser {
 public:
  LineParser(std::string_view text, const Alphabet& alphabet, std::size_t line, std::size_t column_offset = 0)
      : s_(text), a_(alphabet), line_(line), offset_(column_offset) {}

  NcPolynomial relation() {
    std::vector<Term> lhs = side_assoc();
    skip_ws();
    if (peek() == '=') {
      ++i_;
      std::vector<Term> rhs = side_assoc();
      for (Term& t : rhs) {
        t.coeff = -t.coeff;
        lhs.push_back(std::move(t));
      }
    }
    expect_end();
    return NcPolynomial(std::move(lhs));
  }

  LiePolynomial lie_relation() {
    LiePolynomial lhs = side_lie();
    skip_ws();
    if (peek() == '=') {
      ++i_;
      lhs = lhs - side_lie();
    }
    expect_end();
    return lhs;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, line_, offset_ + at + 1);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, i_); }

  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  bool at_end() const { return i_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_minus() const { return peek() == '-' || s_.substr(i_, kUnicodeMinus.size()) == kUnicodeMinus; }
  void eat_minus() { i_ += peek() == '-' ? 1 : kUnicodeMinus.size(); }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
  }

  // Optional sign, then terms joined by + and -.
  template <class TermFn>
  void side(TermFn&& term) {
    skip_ws();
    bool negative = false;
    if (at_minus()) {
      eat_minus();
      negative = true;
    } else if (peek() == '+') {
      ++i_;
    }
    while (true) {
      term(negative);
      skip_ws();
      if (at_minus()) {
        eat_minus();
        negative = true;
      } else if (peek() == '+') {
        ++i_;
        negative = false;
      } else {
        return;
      }
    }
  }

  std::vector<Term> side_assoc() {
    std::vector<Term> terms;
    side([&](bool negative) {
      Term t = term_assoc();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
    });
    return terms;
  }

  LiePolynomial side_lie() {
    LiePolynomial out;
    side([&](bool negative) {
      LiePolynomial t = term_lie();
      out = negative ? out - t : out + t;
    });
    return out;
  }

  std::string digits() {
    const std::size_t start = i_;
    while (is_digit(peek())) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  Rational rational_literal() {
    const std::size_t start = i_;
    std::string text;
    if (at_minus()) {
      eat_minus();
      text = "-";
    }
    const std::string num = digits();
    if (num.empty()) fail("expected a number", start);
    text += num;
    if (peek() == '/') {
      ++i_;
      const std::string den = digits();
      if (den.empty()) fail("expected a denominator");
      text += "/" + den;
    }
    try {
      return parse_rational(text);
    } catch (const std::exception& e) {
      fail(e.what(), start);
    }
  }

  // Leading coefficient of a term, if any.
  std::optional<Rational> coefficient() {
    skip_ws();
    if (a_.digit_mode()) {
      if (peek() == '(' && s_.substr(i_, 2) != "()") {
        ++i_;
        skip_ws();
        Rational c = rational_literal();
        skip_ws();
        if (peek() != ')') fail("expected ')'");
        ++i_;
        return c;
      }
      return std::nullopt;
    }
    if (is_digit(peek())) return rational_literal();
    return std::nullopt;
  }

  Letter generator() {
    const std::size_t start = i_;
    while (is_ident_char(peek())) ++i_;
    if (s_.substr(i_, 3) == "^-1") i_ += 3;
    const std::string name(s_.substr(start, i_ - start));
    if (auto x = a_.find(name)) return *x;
    fail("unknown generator '" + name + "'", start);
  }

  Letter digit_generator() {
    const std::string name(1, peek());
    if (auto x = a_.find(name)) {
      ++i_;
      return *x;
    }
    fail("unknown generator '" + name + "'");
  }

  Term term_assoc() {
    skip_ws();
    const std::size_t start = i_;
    std::optional<Rational> c = coefficient();
    Word w;
    bool any = c.has_value();
    while (true) {
      skip_ws();
      bool star = false;
      if (peek() == '*') {
        ++i_;
        skip_ws();
        star = true;
      }
      if (is_ident_start(peek())) {
        w.push_back(generator());
      } else if (a_.digit_mode() && s_.substr(i_, 2) == "()") {
        i_ += 2;
      } else if (a_.digit_mode() && is_digit(peek())) {
        while (is_digit(peek())) w.push_back(digit_generator());
      } else if (!a_.digit_mode() && peek() == '1' && !is_digit(s_.size() > i_ + 1 ? s_[i_ + 1] : '\0')) {
        ++i_;
      } else if (!a_.digit_mode() && is_digit(peek())) {
        fail("unexpected number in word");
      } else {
        if (star) fail("expected a generator after '*'", i_ - 1);
        break;
      }
      any = true;
    }
    if (!any) fail(at_end() ? "expected a term" : "unexpected '" + std::string(1, peek()) + "'", start);
    return Term{std::move(w), c.value_or(Rational(1))};
  }

  LieMonomial lie_atom() {
    skip_ws();
    if (peek() == '[') {
      const std::size_t open = i_;
      ++i_;
      std::vector<LieMonomial> items;
      while (true) {
        skip_ws();
        if (peek() == ',') {
          ++i_;
          continue;
        }
        if (peek() == ']') {
          ++i_;
          break;
        }
        if (at_end()) fail("unclosed '['", open);
        if (peek() == '[') {
          items.push_back(lie_atom());
        } else if (a_.digit_mode() && is_digit(peek())) {
          items.push_back(LieMonomial::leaf(digit_generator()));
        } else if (is_ident_start(peek())) {
          items.push_back(LieMonomial::leaf(generator()));
        } else {
          fail("unexpected '" + std::string(1, peek()) + "' in bracket");
        }
      }
      if (items.empty()) fail("empty bracket", open);
      return LieMonomial::left_normed(items);
    }
    if (a_.digit_mode() && is_digit(peek())) return LieMonomial::leaf(digit_generator());
    if (is_ident_start(peek())) return LieMonomial::leaf(generator());
    if (peek() == '1' || s_.substr(i_, 2) == "()") fail("unit word not allowed in Lie relations");
    fail(at_end() ? "expected a term" : "unexpected '" + std::string(1, peek()) + "'");
  }

  LiePolynomial term_lie() {
    skip_ws();
    std::optional<Rational> c = coefficient();
    skip_ws();
    if (peek() == '*') ++i_;
    skip_ws();
    if (c && (at_end() || peek() == '+' || peek() == '=' || at_minus())) {
      fail("unit word not allowed in Lie relations");
    }
    const LieMonomial m = lie_atom();
    return c.value_or(Rational(1)) * to_nlsw_basis(m);
  }

  std::string_view s_;
  const Alphabet& a_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t i_ = 0;
};

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string inverse_name(const std::string& name) { return name + "^-1"; }

}  // namespace

NcPolynomial parse_polynomial(std::string_view text, const Alphabet& alphabet, std::size_t line) {
  return LineParser(text, alphabet, line).relation();
}

LiePolynomial parse_lie_polynomial(std::string_view text, const Alphabet& alphabet, std::size_t line) {
  return LineParser(text, alphabet, line).lie_relation();
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  enum class Section { Header, Relations, Expect } section = Section::Header;
  bool have_kind = false, have_order = false;
  std::optional<std::vector<std::string>> names;
  std::size_t names_line = 0;
  bool alphabet_ready = false;

  auto finalize_alphabet = [&](std::size_t line) {
    if (alphabet_ready) return;
    if (!names) throw ParseError("missing 'generators=' line", line, 1);
    std::vector<std::string> full = *names;
    if (p.kind == PresentationKind::Group) {
      full.clear();
      for (const std::string& n : *names) {
        full.push_back(n);
        if (n.ends_with("^-1")) continue;
        const std::string inv = inverse_name(n);
        if (std::find(names->begin(), names->end(), inv) == names->end()) full.push_back(inv);
      }
    }
    try {
      p.alphabet = Alphabet(std::move(full));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), names_line, 1);
    }
    alphabet_ready = true;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view content = strip_comment(raw);
    const std::string_view line = trim(content);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

    if (line == "relations:") {
      if (section != Section::Header) throw ParseError("duplicate 'relations:' section", line_no, indent + 1);
      finalize_alphabet(line_no);
      section = Section::Relations;
      continue;
    }
    if (line == "expect:") {
      if (section == Section::Expect) throw ParseError("duplicate 'expect:' section", line_no, indent + 1);
      finalize_alphabet(line_no);
      section = Section::Expect;
      continue;
    }

    if (section == Section::Relations) {
      if (p.kind == PresentationKind::Lie) {
        LiePolynomial f = LineParser(line, p.alphabet, line_no, indent).lie_relation();
        if (!f.is_zero()) p.lie_relations.push_back(std::move(f));
      } else {
        NcPolynomial f = LineParser(line, p.alphabet, line_no, indent).relation();
        if (!f.is_zero()) p.relations.push_back(std::move(f));
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key=value'", line_no, indent + 1);
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const std::size_t value_col = indent + eq + 2;

    if (section == Section::Expect) {
      if (key.empty()) throw ParseError("empty expect key", line_no, indent + 1);
      p.expect.emplace_back(key, value);
      continue;
    }

    if (key == "kind") {
      if (have_kind) throw ParseError("duplicate 'kind='", line_no, indent + 1);
      if (names) throw ParseError("'kind=' must precede 'generators='", line_no, indent + 1);
      if (value == "monoid") {
        p.kind = PresentationKind::Monoid;
      } else if (value == "group") {
        p.kind = PresentationKind::Group;
      } else if (value == "lie") {
        p.kind = PresentationKind::Lie;
      } else {
        throw ParseError("unknown kind '" + value + "' (expected monoid, group or lie)", line_no, value_col);
      }
      have_kind = true;
    } else if (key == "generators") {
      if (names) throw ParseError("duplicate 'generators='", line_no, indent + 1);
      names = split_names(value);
      names_line = line_no;
      if (names->empty()) throw ParseError("no generators", line_no, value_col);
    } else if (key == "order") {
      if (have_order) throw ParseError("duplicate 'order='", line_no, indent + 1);
      if (value == "deglex") {
        p.order = OrderKind::DegLex;
      } else if (value == "lex") {
        p.order = OrderKind::Lex;
      } else {
        throw ParseError("unknown order '" + value + "' (expected deglex)", line_no, value_col);
      }
      have_order = true;
    } else {
      throw ParseError("unknown header '" + key + "'", line_no, indent + 1);
    }
  }
  finalize_alphabet(line_no);
  return p;
}

std::string emit_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "kind=" << to_string(p.kind) << "\n";
  out << "generators=";
  for (std::size_t i = 0; i < p.alphabet.size(); ++i) out << (i ? " " : "") << p.alphabet.name(static_cast<Letter>(i));
  out << "\n";
  out << "order=" << (p.order == OrderKind::DegLex ? "deglex" : "lex") << "\n";
  out << "relations:\n";
  if (p.kind == PresentationKind::Lie) {
    for (const LiePolynomial& f : p.lie_relations) out << to_string(f, p.alphabet) << "\n";
  } else {
    for (const NcPolynomial& f : p.relations) out << to_string(f, p.alphabet) << "\n";
  }
  if (!p.expect.empty()) {
    out << "expect:\n";
    for (const auto& [k, v] : p.expect) out << k << "=" << v << "\n";
  }
  return out.str();
}

std::vector<NcPolynomial> associative_relations(const Presentation& p) {
  if (p.kind == PresentationKind::Lie) throw std::invalid_argument("Lie presentation has no associative relations");
  std::vector<NcPolynomial> out = p.relations;
  if (p.kind == PresentationKind::Group) {
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
      const std::string& name = p.alphabet.name(static_cast<Letter>(i));
      if (name.ends_with("^-1")) continue;
      const auto inv = p.alphabet.find(inverse_name(name));
      if (!inv) continue;
      const Word x{static_cast<Letter>(i)};
      const Word y{*inv};
      out.push_back(NcPolynomial::monomial(x * y) - NcPolynomial::monomial(Word{}));
      out.push_back(NcPolynomial::monomial(y * x) - NcPolynomial::monomial(Word{}));
    }
  }
  return out;
}

RewriteSystem rewrite_system(const Presentation& p) {
  return RewriteSystem(associative_relations(p), p.alphabet.size(), p.order);
}

LieSystem lie_system(const Presentation& p) {
  if (p.kind != PresentationKind::Lie) throw std::invalid_argument("not a Lie presentation");
  if (p.order != OrderKind::DegLex) throw std::invalid_argument("Lie systems require the deglex order");
  return LieSystem(p.lie_relations, p.alphabet.size());
}

const std::string* find_expect(const Presentation& p, std::string_view key) {
  for (const auto& [k, v] : p.expect) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace gsb
