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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsb/completion.hpp"

namespace gsb {

/// Binary bracketing of generators: a leaf or [left, right].
class LieMonomial {
 public:
  static LieMonomial leaf(Letter x);
  static LieMonomial bracket(const LieMonomial& left, const LieMonomial& right);
  /// [x1 x2 ... xn] read as [[x1,x2],...,xn].
  static LieMonomial left_normed(const std::vector<LieMonomial>& items);

  bool is_leaf() const noexcept { return !node_->left; }
  Letter letter() const { return node_->letter; }
  LieMonomial left() const { return LieMonomial(node_->left); }
  LieMonomial right() const { return LieMonomial(node_->right); }
  std::size_t degree() const noexcept { return node_->degree; }

  /// Underlying associative word (the letters left to right).
  Word word() const;

  friend bool operator==(const LieMonomial& a, const LieMonomial& b);

 private:
  struct Node {
    Letter letter = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t degree = 1;
  };
  explicit LieMonomial(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const LieMonomial& m, const Alphabet& alphabet);

/// u > vu' for every split u = v u' into nonempty parts (lex order).
/// Throws std::invalid_argument on the empty word.
bool is_alsw(const Word& u);

/// Factorization u = c1 c2 ... cn into ALSWs with c1 <= c2 <= ... <= cn.
std::vector<Word> alsw_factorization(const Word& u);

/// The standard bracketing [u] = [[v][w]] with w the longest proper ALSW end.
/// Throws std::invalid_argument for non-ALSW input.
LieMonomial shirshov_bracket(const Word& u);

/// The three defining clauses of a non-associative Lyndon-Shirshov word.
bool is_nlsw(const LieMonomial& m);

/// A validated NLSW; determined by its underlying ALSW.
class Nlsw {
 public:
  static Nlsw from_word(const Word& alsw) { return Nlsw(shirshov_bracket(alsw), alsw); }
  static std::optional<Nlsw> from_tree(const LieMonomial& m);
  const LieMonomial& tree() const noexcept { return tree_; }
  const Word& word() const noexcept { return word_; }

 private:
  Nlsw(LieMonomial tree, Word word) : tree_(std::move(tree)), word_(std::move(word)) {}
  LieMonomial tree_;
  Word word_;
};

/// Full expansion into k<X> under [u,v] = uv - vu.
NcPolynomial lie_expand(const LieMonomial& m);

/// Rational combination of NLSWs, keyed by their underlying ALSWs.
class LiePolynomial {
 public:
  LiePolynomial() = default;
  /// Terms must be ALSWs (checked).
  explicit LiePolynomial(std::vector<Term> terms);
  static LiePolynomial basis(const Word& alsw, Rational c = 1);

  bool is_zero() const noexcept { return coords_.is_zero(); }
  std::span<const Term> terms() const noexcept { return coords_.terms(); }
  std::size_t size() const noexcept { return coords_.size(); }
  /// Deg-lex largest ALSW; it is also the leading associative word of the expansion.
  const Term& leading() const { return coords_.leading(); }
  const Word& leading_word() const { return coords_.leading_word(); }
  bool is_monic() const { return coords_.is_monic(); }
  std::size_t degree() const { return coords_.degree(); }
  const NcPolynomial& coordinates() const noexcept { return coords_; }

  friend LiePolynomial operator+(const LiePolynomial& f, const LiePolynomial& g);
  friend LiePolynomial operator-(const LiePolynomial& f, const LiePolynomial& g);
  friend LiePolynomial operator*(const Rational& c, const LiePolynomial& f);
  friend bool operator==(const LiePolynomial&, const LiePolynomial&) = default;
  friend LiePolynomial lie_bracket(const LiePolynomial& f, const LiePolynomial& g);

 private:
  explicit LiePolynomial(NcPolynomial coords) : coords_(std::move(coords)) {}
  NcPolynomial coords_;
};

LiePolynomial make_monic(const LiePolynomial& f);

/// [f, g] rewritten in the NLSW basis (anti-symmetry and Jacobi).
LiePolynomial lie_bracket(const LiePolynomial& f, const LiePolynomial& g);

/// Arbitrary bracketing rewritten in the NLSW basis.
LiePolynomial to_nlsw_basis(const LieMonomial& m);

NcPolynomial lie_expand(const LiePolynomial& f);

/// `c1 [u1] + c2 [u2] ...` with NLSWs in bracket notation.
std::string to_string(const LiePolynomial& f, const Alphabet& alphabet);

/// The normal s-word [a s b] relative to lead(s): the bracketing of
/// w = a lead(s) b as an NLSW, with the subtree [lead(s) c] re-nested as
/// [...[[s][c1]]...[cn]] for the ALSW factorization c1 <= ... <= cn of c.
/// Its expansion has leading word w with coefficient 1.
/// Throws std::invalid_argument when w is not an ALSW.
LiePolynomial special_bracket(const Word& a, const LiePolynomial& s, const Word& b);

/// Monic Lie relations with an index over their leading words.
class LieSystem {
 public:
  LieSystem() : LieSystem(std::vector<LiePolynomial>{}, 0) {}
  explicit LieSystem(std::vector<LiePolynomial> relations, std::size_t alphabet_size = 0);

  std::size_t size() const noexcept { return relations_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  const std::vector<LiePolynomial>& relations() const noexcept { return relations_; }
  const LiePolynomial& relation(std::size_t id) const { return relations_.at(id); }
  /// Cached associative expansions.
  const NcPolynomial& expansion(std::size_t id) const { return expansions_.at(id); }
  const SubwordIndex& index() const noexcept { return index_; }

 private:
  std::vector<LiePolynomial> relations_;
  std::vector<NcPolynomial> expansions_;
  std::size_t alphabet_size_;
  SubwordIndex index_;
};

/// Subtracts special brackets until no NLSW of the result has a leading word
/// of S as a subword.
LiePolynomial lie_normal_form(const LiePolynomial& f, const LieSystem& system);

struct LieComposition {
  CompositionKind kind;
  std::size_t f_id;
  std::size_t g_id;
  Word w;
  std::size_t position;
  LiePolynomial value;
};

/// Inclusion f - [a g b] and intersection [f b] - [a g] compositions.
/// Throws std::invalid_argument on non-monic input.
std::vector<LieComposition> lie_compositions(const LiePolynomial& f, const LiePolynomial& g,
                                             std::size_t f_id = 0, std::size_t g_id = 1);

struct LieGsbReport {
  bool is_gsb = true;
  std::size_t checked = 0;
  std::vector<LieComposition> failures;
};

LieGsbReport lie_is_gsb(const LieSystem& system, std::size_t max_deg = 0, int threads = 0);

/// All NLSWs of degree n over an alphabet of the given size, underlying
/// words in ascending lex order.
std::vector<Nlsw> nlsw_enumerate(std::size_t alphabet_size, std::size_t n);

/// Necklace formula (1/n) sum_{d | n} mu(d) k^(n/d): the dimension of the
/// degree-n part of the free Lie algebra on k generators.
std::size_t witt_number(std::size_t k, std::size_t n);

/// NLSW words of degree <= max_deg avoiding every leading word of S.
std::vector<Word> lie_irr_words(const LieSystem& system, std::size_t max_deg,
                                std::size_t cap = kDefaultIrrDegreeCap);

struct LieCompletionResult {
  LieSystem system;
  CompletionStatus status = CompletionStatus::Complete;
  std::size_t truncated_degree = 0;
  std::size_t steps = 0;
};

/// Shirshov completion in the free Lie algebra (no interreduction).
LieCompletionResult lie_complete(const std::vector<LiePolynomial>& relations, std::size_t alphabet_size,
                                 const CompletionBudget& budget = {});

}  // namespace gsb
