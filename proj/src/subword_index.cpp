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

#include "gsb/subword_index.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gsb {

SubwordIndex::SubwordIndex(std::size_t alphabet_size) : sigma_(alphabet_size) {
  trie_.emplace_back(sigma_, kNone);
  own_ids_.emplace_back();
  depth_.push_back(0);
  prepare();
}

void SubwordIndex::ensure_letter(Letter x) {
  if (x < sigma_) return;
  sigma_ = static_cast<std::size_t>(x) + 1;
  for (auto& row : trie_) row.resize(sigma_, kNone);
}

void SubwordIndex::insert(const Word& pattern, std::size_t id) {
  if (pattern.empty()) throw std::invalid_argument("SubwordIndex: empty pattern");
  if (id >= kNone) throw std::length_error("SubwordIndex: pattern id too large");
  std::uint32_t node = 0;
  for (Letter x : pattern) {
    ensure_letter(x);
    if (trie_[node][x] == kNone) {
      trie_[node][x] = static_cast<std::uint32_t>(trie_.size());
      trie_.emplace_back(sigma_, kNone);
      own_ids_.emplace_back();
      depth_.push_back(depth_[node] + 1);
    }
    node = trie_[node][x];
  }
  auto& ids = own_ids_[node];
  ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
  prepared_ = false;
}

void SubwordIndex::erase(const Word& pattern, std::size_t id) {
  std::uint32_t node = 0;
  for (Letter x : pattern) {
    if (x >= sigma_ || trie_[node][x] == kNone) return;
    node = trie_[node][x];
  }
  auto& ids = own_ids_[node];
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it != ids.end() && *it == id) {
    ids.erase(it);
    prepared_ = false;
  }
}

void SubwordIndex::prepare() {
  const std::size_t n = trie_.size();
  go_.assign(n * sigma_, 0);
  fail_.assign(n, 0);
  best_id_.assign(n, kNone);
  best_len_.assign(n, 0);
  std::deque<std::uint32_t> queue;
  auto own_best = [&](std::uint32_t v) {
    if (!own_ids_[v].empty()) {
      best_id_[v] = static_cast<std::uint32_t>(own_ids_[v].front());
      best_len_[v] = depth_[v];
    }
  };
  own_best(0);
  for (std::size_t x = 0; x < sigma_; ++x) {
    const std::uint32_t c = trie_[0][x];
    if (c == kNone) {
      go_[x] = 0;
    } else {
      go_[x] = c;
      fail_[c] = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    own_best(v);
    const std::uint32_t f = fail_[v];
    if (best_id_[f] != kNone && best_id_[f] < best_id_[v]) {
      best_id_[v] = best_id_[f];
      best_len_[v] = best_len_[f];
    }
    for (std::size_t x = 0; x < sigma_; ++x) {
      const std::uint32_t c = trie_[v][x];
      if (c == kNone) {
        go_[v * sigma_ + x] = go_[f * sigma_ + x];
      } else {
        go_[v * sigma_ + x] = c;
        fail_[c] = go_[f * sigma_ + x];
        queue.push_back(c);
      }
    }
  }
  prepared_ = true;
}

void SubwordIndex::require_prepared() const {
  if (!prepared_) throw std::logic_error("SubwordIndex queried before prepare()");
}

std::optional<SubwordIndex::Match> SubwordIndex::first_match(const Word& w) const {
  require_prepared();
  std::optional<Match> best;
  std::uint32_t state = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= sigma_) {
      state = 0;
      continue;
    }
    state = go_[state * sigma_ + w[i]];
    const std::uint32_t id = best_id_[state];
    if (id != kNone && (!best || id < best->id)) best = Match{id, i + 1 - best_len_[state]};
  }
  return best;
}

bool SubwordIndex::matches_any(const Word& w) const {
  require_prepared();
  std::uint32_t state = 0;
  for (Letter x : w) {
    if (x >= sigma_) {
      state = 0;
      continue;
    }
    state = go_[state * sigma_ + x];
    if (best_id_[state] != kNone) return true;
  }
  return false;
}

}  // namespace gsb
