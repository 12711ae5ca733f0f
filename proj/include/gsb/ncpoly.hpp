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

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "gsb/word.hpp"

namespace gsb {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

struct Term {
  Word word;
  Rational coeff;
  friend bool operator==(const Term& a, const Term& b) { return a.word == b.word && a.coeff == b.coeff; }
};

/// Element of k<X> with exact rational coefficients.
///
/// Terms are kept canonical: no zero coefficients, each word once, sorted by
/// descending deg-lex. The sort is a storage detail; `leading` takes the order
/// explicitly so the same polynomial can be inspected under lex as well.
class NcPolynomial {
 public:
  NcPolynomial() = default;

  /// Canonicalizes: merges repeated words, drops zeros.
  explicit NcPolynomial(std::vector<Term> terms);

  static NcPolynomial monomial(Word w, Rational c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Order-maximal term. Throws std::domain_error on the zero polynomial.
  const Term& leading(OrderKind order = OrderKind::DegLex) const;
  const Word& leading_word(OrderKind order = OrderKind::DegLex) const { return leading(order).word; }

  bool is_monic(OrderKind order = OrderKind::DegLex) const;
  std::size_t degree() const;

  /// Coefficient of w (zero when absent).
  Rational coeff(const Word& w) const;

  /// a * this * b for words a, b, times c.
  NcPolynomial in_context(const Word& a, const Word& b, const Rational& c = 1) const;

  friend NcPolynomial operator+(const NcPolynomial& f, const NcPolynomial& g);
  friend NcPolynomial operator-(const NcPolynomial& f, const NcPolynomial& g);
  friend NcPolynomial operator-(const NcPolynomial& f);
  friend NcPolynomial operator*(const NcPolynomial& f, const NcPolynomial& g);
  friend NcPolynomial operator*(const Rational& c, const NcPolynomial& f);

  NcPolynomial& operator+=(const NcPolynomial& g) { return *this = *this + g; }
  NcPolynomial& operator-=(const NcPolynomial& g) { return *this = *this - g; }

  friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

 private:
  std::vector<Term> terms_;
};

NcPolynomial add(const NcPolynomial& f, const NcPolynomial& g);
NcPolynomial scale(const NcPolynomial& f, const Rational& c);
NcPolynomial concat_product(const NcPolynomial& f, const NcPolynomial& g);

/// (leading word, leading coefficient). Throws std::domain_error on zero.
std::pair<Word, Rational> leading(const NcPolynomial& f, OrderKind order = OrderKind::DegLex);

/// f divided by its leading coefficient. Throws std::domain_error on zero.
NcPolynomial make_monic(const NcPolynomial& f, OrderKind order = OrderKind::DegLex);

/// Deterministic total order on polynomials (term by term, deg-lex then
/// coefficient). Used to sort relation sets canonically.
bool canonical_less(const NcPolynomial& f, const NcPolynomial& g);

/// `c1 w1 + c2 w2 - ...` using alphabet names.
std::string to_string(const NcPolynomial& f, const Alphabet& alphabet);

}  // namespace gsb
