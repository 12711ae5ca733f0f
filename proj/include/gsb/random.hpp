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

#include <random>

#include "gsb/lie.hpp"

namespace gsb {

template <class Rng>
Word random_word(Rng& rng, std::size_t alphabet_size, std::size_t length) {
  std::uniform_int_distribution<std::size_t> letter(0, alphabet_size - 1);
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(static_cast<Letter>(letter(rng)));
  return w;
}

/// Up to `terms` terms of length <= max_len with small integer coefficients.
template <class Rng>
NcPolynomial random_polynomial(Rng& rng, std::size_t alphabet_size, std::size_t max_len, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms; ++i) {
    const int c = coeff(rng);
    if (c != 0) out.push_back({random_word(rng, alphabet_size, len(rng)), Rational(c)});
  }
  return NcPolynomial(std::move(out));
}

/// Uniformly split binary bracketing of the given degree.
template <class Rng>
LieMonomial random_lie_monomial(Rng& rng, std::size_t alphabet_size, std::size_t degree) {
  if (degree <= 1) {
    std::uniform_int_distribution<std::size_t> letter(0, alphabet_size - 1);
    return LieMonomial::leaf(static_cast<Letter>(letter(rng)));
  }
  std::uniform_int_distribution<std::size_t> split(1, degree - 1);
  const std::size_t k = split(rng);
  LieMonomial left = random_lie_monomial(rng, alphabet_size, k);
  return LieMonomial::bracket(left, random_lie_monomial(rng, alphabet_size, degree - k));
}

}  // namespace gsb
