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

#include "gsb/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsb {

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

// Merge two descending-sorted term lists with signs.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && deglex_compare(a[i].word, b[j].word) > 0)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || deglex_compare(a[i].word, b[j].word) < 0) {
      out.push_back({b[j].word, sign_b > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign_b > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].word, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

NcPolynomial::NcPolynomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return deglex_compare(x.word, y.word) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().word == t.word) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

NcPolynomial NcPolynomial::monomial(Word w, Rational c) {
  NcPolynomial f;
  if (c != 0) f.terms_.push_back({std::move(w), std::move(c)});
  return f;
}

const Term& NcPolynomial::leading(OrderKind order) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  if (order == OrderKind::DegLex) return terms_.front();
  return *std::max_element(terms_.begin(), terms_.end(),
                           [](const Term& x, const Term& y) { return lex_compare(x.word, y.word) < 0; });
}

bool NcPolynomial::is_monic(OrderKind order) const { return !is_zero() && leading(order).coeff == 1; }

std::size_t NcPolynomial::degree() const { return terms_.empty() ? 0 : terms_.front().word.size(); }

Rational NcPolynomial::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& x) { return deglex_compare(t.word, x) > 0; });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return 0;
}

NcPolynomial NcPolynomial::in_context(const Word& a, const Word& b, const Rational& c) const {
  // Multiplying every word by the same context preserves deg-lex order.
  NcPolynomial out;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({a * t.word * b, t.coeff * c});
  return out;
}

NcPolynomial operator+(const NcPolynomial& f, const NcPolynomial& g) {
  NcPolynomial out;
  out.terms_ = merge(f.terms_, g.terms_, +1);
  return out;
}

NcPolynomial operator-(const NcPolynomial& f, const NcPolynomial& g) {
  NcPolynomial out;
  out.terms_ = merge(f.terms_, g.terms_, -1);
  return out;
}

NcPolynomial operator-(const NcPolynomial& f) { return Rational(-1) * f; }

NcPolynomial operator*(const Rational& c, const NcPolynomial& f) {
  NcPolynomial out;
  if (c == 0) return out;
  out.terms_ = f.terms_;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

NcPolynomial operator*(const NcPolynomial& f, const NcPolynomial& g) {
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& s : f.terms_)
    for (const auto& t : g.terms_) terms.push_back({s.word * t.word, s.coeff * t.coeff});
  return NcPolynomial(std::move(terms));
}

NcPolynomial add(const NcPolynomial& f, const NcPolynomial& g) { return f + g; }
NcPolynomial scale(const NcPolynomial& f, const Rational& c) { return c * f; }
NcPolynomial concat_product(const NcPolynomial& f, const NcPolynomial& g) { return f * g; }

std::pair<Word, Rational> leading(const NcPolynomial& f, OrderKind order) {
  const auto& t = f.leading(order);
  return {t.word, t.coeff};
}

NcPolynomial make_monic(const NcPolynomial& f, OrderKind order) {
  const Rational c = f.leading(order).coeff;
  if (c == 1) return f;
  return Rational(1 / c) * f;
}

bool canonical_less(const NcPolynomial& f, const NcPolynomial& g) {
  auto ft = f.terms();
  auto gt = g.terms();
  const std::size_t n = std::min(ft.size(), gt.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = deglex_compare(ft[i].word, gt[i].word); c != 0) return c < 0;
    if (ft[i].coeff != gt[i].coeff) return ft[i].coeff < gt[i].coeff;
  }
  return ft.size() < gt.size();
}

std::string to_string(const NcPolynomial& f, const Alphabet& alphabet) {
  if (f.is_zero()) return alphabet.digit_mode() ? "(0)" : "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit = t.word.empty();
    if (alphabet.digit_mode()) {
      if (unit) {
        out += "(" + to_string(c) + ")";
        continue;
      }
      if (c != 1) out += "(" + to_string(c) + ") ";
    } else {
      if (unit) {
        out += to_string(c);
        continue;
      }
      if (c != 1) out += to_string(c) + " ";
    }
    out += alphabet.render(t.word);
  }
  return out;
}

}  // namespace gsb
