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

#include <string>

#include "gsb/presentation.hpp"

namespace gsb::test {

inline Alphabet abc(std::string names) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : names + " ") {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return Alphabet(std::move(out));
}

inline Word w(const Alphabet& a, std::string_view text) { return a.parse_word(text); }
inline NcPolynomial p(const Alphabet& a, std::string_view text) { return parse_polynomial(text, a); }

}  // namespace gsb::test
