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

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gsb/word.hpp"

namespace gsb {

/// Aho-Corasick matcher over a set of leading words.
///
/// Patterns are inserted into the trie incrementally; failure links and the
/// dense transition table are recomputed by `prepare()`. Queries are const
/// and safe to run concurrently once prepared.
class SubwordIndex {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  struct Match {
    std::size_t id;
    std::size_t position;
  };

  explicit SubwordIndex(std::size_t alphabet_size = 0);

  void insert(const Word& pattern, std::size_t id);
  void erase(const Word& pattern, std::size_t id);
  void prepare();
  bool prepared() const noexcept { return prepared_; }
  std::size_t alphabet_size() const noexcept { return sigma_; }

  /// Smallest pattern id occurring in w; leftmost occurrence of that id.
  std::optional<Match> first_match(const Word& w) const;
  bool matches_any(const Word& w) const;

  /// Automaton access for incremental scans (irr_words).
  std::uint32_t root() const noexcept { return 0; }
  std::uint32_t next(std::uint32_t state, Letter x) const { return go_[state * sigma_ + x]; }
  /// Some pattern ends at this state.
  bool accepting(std::uint32_t state) const { return best_id_[state] != kNone; }

 private:
  void ensure_letter(Letter x);
  void require_prepared() const;

  std::size_t sigma_;
  std::vector<std::vector<std::uint32_t>> trie_;   // child links, kNone when absent
  std::vector<std::vector<std::size_t>> own_ids_;  // sorted pattern ids ending exactly here
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> go_;
  std::vector<std::uint32_t> fail_;
  std::vector<std::uint32_t> best_id_;
  std::vector<std::uint32_t> best_len_;
  bool prepared_ = false;
};

}  // namespace gsb
