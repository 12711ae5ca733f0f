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
#include <optional>
#include <string>
#include <vector>

#include "gsb/presentation.hpp"

namespace gsb {

// ---- symmetric groups --------------------------------------------------------

/// One-line notation over 1..m.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection of 1..m.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t m);
  /// s_i = (i, i+1) in S_m.
  static Permutation transposition(std::size_t m, std::size_t i);

  std::size_t size() const noexcept { return images_.size(); }
  /// Image of k (1-based).
  int operator()(std::size_t k) const { return images_.at(k - 1); }
  const std::vector<int>& images() const noexcept { return images_; }
  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Inversion count (equals the length of a reduced word).
std::size_t perm_length(const Permutation& a);
/// (a b)(k) = a(b(k)). Throws std::invalid_argument on size mismatch.
Permutation perm_mul(const Permutation& a, const Permutation& b);
/// Lengths add under multiplication.
bool perp(const Permutation& a, const Permutation& b);
/// s_{i1} s_{i2} ... in S_{n+1}.
Permutation perm_of_word(const std::vector<int>& s_indices, std::size_t n);
std::vector<Permutation> all_permutations(std::size_t m);

/// The words s_{1 i1} s_{2 i2} ... s_{n in} with s_{j i} = s_j s_{j-1} ... s_i
/// (empty when i = j + 1), one per element of S_{n+1}. Entries are indices i of s_i.
std::vector<std::vector<int>> bokut_shiao_words(std::size_t n);
/// The Bokut-Shiao word of a permutation of S_{n+1}.
std::vector<int> bokut_shiao_normal_form(const Permutation& a);
/// Maximal runs of consecutive descending indices start at strictly
/// increasing indices.
bool matches_bokut_shiao(const std::vector<int>& s_indices);

/// Monoid presentation on s_n > ... > s_1 (names "s1".."sn") with
/// s_i^2 = 1, commutation of distant generators, and the braid relation.
Presentation symmetric_group(std::size_t n);

/// Generator name "r" followed by the digits of a Bokut-Shiao word.
std::string adyan_thurston_name(const std::vector<int>& s_indices);

/// Positive braid monoid B_{n+1}^+ on r(a), a != 1, with
/// r(a) r(b) = r(ab) (a perp b) and r(a) r(bc) = r(ab) r(c) (a perp b perp c).
/// Generators are ordered shortest first, ties by lex-greater index word.
/// Throws std::invalid_argument for n = 0 or n >= 5.
Presentation adyan_thurston_pos(std::size_t n);

/// The braid group: adds the generator D^-1 for the longest element D
/// (lowest precedence) and the families r(a) D^e = D^e r(a'),
/// r(ab) r(cm) = D r(a') r(m) with bc = D, and D^e D^-e = 1.
Presentation adyan_thurston_group(std::size_t n);

/// Image of a positive braid word (indices i of sigma_i) under sigma_i -> r(s_i).
Word braid_to_adyan_thurston(const std::vector<int>& sigma, const Presentation& at);

// ---- plactic monoids -------------------------------------------------------

/// Letters 1..n; a row is nondecreasing.
using Row = std::vector<int>;
/// rows[0] is the longest (first) row.
using Tableau = std::vector<Row>;

bool is_row(const Row& r);

struct InsertResult {
  std::optional<int> bumped;
  Row row;
};

/// Appends x, or replaces the leftmost letter strictly larger than x.
InsertResult schensted_insert(const Row& r, int x);

/// R S = upper * lower in the plactic monoid with upper dominating lower;
/// upper is empty when R S is itself a row.
struct RowProduct {
  Row upper;
  Row lower;
  friend bool operator==(const RowProduct&, const RowProduct&) = default;
};
RowProduct row_product(const Row& r, const Row& s);

/// |r| <= |s| and r_i > s_i for i <= |r|.
bool dominates(const Row& r, const Row& s);

Tableau insertion_tableau(const std::vector<int>& w);
/// Rows from the last (shortest) to the first.
std::vector<int> row_reading(const Tableau& t);

/// Digit generators n > ... > 1 (n <= 9) with the Knuth relations.
Presentation plactic_standard(std::size_t n);
/// Conversions between letter values 1..n and words of plactic_standard(n).
Word plactic_word(const std::vector<int>& values, std::size_t n);
std::vector<int> plactic_values(const Word& w, std::size_t n);

/// Rows of length <= max_len over 1..n, in generator order (deg-lex descending).
std::vector<Row> plactic_rows_generators(std::size_t n, std::size_t max_len);
/// Row generators "R" + digits; relations R S = R' S' for every pair where R
/// does not dominate S and every row involved has length <= max_len.
Presentation plactic_rows(std::size_t n, std::size_t max_len);

/// GSB check of plactic_rows(n, max_len) with the truncation accounted for:
/// a composition that does not reduce to zero is an artifact of the bound
/// when its residue still has an adjacent non-dominating pair of rows
/// (reducible once longer rows are admitted); otherwise it is genuine.
struct RowsCertificate {
  std::size_t relations = 0;
  std::size_t checked = 0;
  std::size_t out_of_bounds = 0;
  std::size_t genuine = 0;
  std::vector<Composition> genuine_failures;
  bool passed() const { return genuine == 0; }
};
RowsCertificate plactic_rows_certificate(std::size_t n, std::size_t max_len, int threads = 0);

/// Rewrites a sequence of rows with R S -> R' S' until every row dominates the
/// next. `first` is the pair rewritten first ((RS)T vs R(ST)); afterwards the
/// leftmost reducible pair is taken. Throws std::runtime_error after `max_steps`.
std::vector<Row> row_normal_form(std::vector<Row> rows, std::size_t first = 0, std::size_t max_steps = 100000);

struct RowAssocReport {
  std::size_t trials = 0;
  std::size_t agreed = 0;          // nf((RS)T) == nf(R(ST))
  std::size_t tableau_agreed = 0;  // and both equal the rows of P(RST)
  std::vector<std::string> failures;
  bool passed() const { return agreed == trials && tableau_agreed == trials; }
};
/// Random row triples over 1..n with lengths 1..max_len.
RowAssocReport row_associativity(std::size_t n, std::size_t trials, std::size_t max_len, std::uint64_t seed);

/// Compares GSB normal forms of plactic_standard(n) (completed) with
/// Schensted tableaux over all words of length 1..max_len.
struct SchenstedReport {
  std::size_t words = 0;
  std::size_t literal_matches = 0;     // nf(w) == row reading of P(w)
  std::size_t reading_consistent = 0;  // nf(w) == nf(row reading of P(w))
  std::size_t tableau_preserved = 0;   // P(nf(w)) == P(w)
  std::size_t tableaux = 0;            // distinct P(w)
  std::size_t normal_forms = 0;        // distinct nf(w)
  std::vector<int> first_mismatch;     // first w with nf(w) != reading(P(w))
  bool equivalent() const {
    return reading_consistent == words && tableau_preserved == words && tableaux == normal_forms;
  }
  bool literal() const { return literal_matches == words; }
};
SchenstedReport schensted_equivalence(std::size_t n, std::size_t max_len, const RewriteSystem& gsb);

// ---- partially commutative algebras ---------------------------------------

/// Unordered pairs of distinct generators (indices into a precedence-ordered
/// alphabet: index 0 is the greatest).
class CommutationGraph {
 public:
  /// Throws std::invalid_argument for loops or out-of-range vertices.
  CommutationGraph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);
  static CommutationGraph complete(std::size_t vertices);
  std::size_t vertices() const noexcept { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool commute(std::size_t a, std::size_t b) const;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;  // a < b, sorted, unique
  std::vector<bool> adj_;
};

enum class PcKind { Assoc, Lie, Group };

/// The defining relations ab = ba (resp. [a,b] = 0; or all a^e b^f = b^f a^e
/// over X and X^-1 with generators x > x^-1 > y > y^-1 ...).
Presentation pc_defining(const std::vector<std::string>& names, const CommutationGraph& graph, PcKind kind);

/// The GSB family x u y - y x u (resp. [xuy]; resp. the group family over
/// X and X^-1) with x |> y |> supp(u), words of length <= bound.
Presentation pc_family(const std::vector<std::string>& names, const CommutationGraph& graph, PcKind kind,
                       std::size_t bound);

}  // namespace gsb
