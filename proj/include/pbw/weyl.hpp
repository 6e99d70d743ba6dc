#pragma once

// Reduced words of the longest element, convex orders on positive roots,
// and braid moves between them.
//
// A reduced word (i_1,...,i_N) of w0 determines the convex order
//   beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}
// and every convex order arises this way.  Braid moves act on both sides of
// that bijection: a move at position k of arity m rewrites the letters
// k..k+m-1 by the braid relation and reverses the same window of roots.
// Positions are 0-based throughout the C++ API.

#include <cstddef>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "pbw/rootsys.hpp"

namespace pbw {

using Word = std::vector<Node>;

// Linear map on the root lattice; column j is the image of alpha_j.
class WeylElement {
 public:
  static WeylElement identity(int rank);
  static WeylElement from_word(const RootSystem& rs, std::span<const Node> word);

  int rank() const { return rank_; }
  Root column(Node j) const;
  Root apply(const Root& beta) const;

  WeylElement times_simple(const RootSystem& rs, Node i) const;  // w s_i
  WeylElement simple_times(const RootSystem& rs, Node i) const;  // s_i w

  bool operator==(const WeylElement&) const = default;

 private:
  int rank_ = 0;
  std::vector<int> m_;  // column-major
};

bool is_reduced(const RootSystem& rs, std::span<const Node> word);
// i such that w^{-1} alpha_i is negative, in increasing order.
std::vector<Node> left_descents(const RootSystem& rs, const WeylElement& w);
// Greedy reduced word of w0 that always appends the smallest ascent.
Word longest_word(const RootSystem& rs);
// m(a,b): 2, 3 or 4 (throws for 6-term relations).
int braid_arity(const RootSystem& rs, Node a, Node b);
// The node j with w0 alpha_j = -alpha_i; a reduced word of w0 ending in
// opposite_node(i) has last root alpha_i.
Node opposite_node(const RootSystem& rs, Node i);
// Uniformly random ascent at each step; always a reduced word of w0.
Word random_reduced_word(const RootSystem& rs, std::mt19937_64& rng);

struct BraidMove {
  std::size_t position = 0;
  int arity = 2;

  auto operator<=>(const BraidMove&) const = default;
};

struct BraidPath {
  Word source;
  Word target;
  std::vector<BraidMove> moves;
};

class ConvexOrder {
 public:
  // Throws pbw::Error unless `word` is a reduced word of w0.
  ConvexOrder(std::shared_ptr<const RootSystem> rs, Word word);

  const RootSystem& system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return rs_; }
  const Word& word() const { return word_; }
  std::span<const RootId> sequence() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  RootId at(std::size_t k) const { return ids_[k]; }
  const Root& root_at(std::size_t k) const { return rs_->root(ids_[k]); }
  std::size_t position(RootId id) const { return pos_[id]; }

  // In-place braid move; throws pbw::Error if the move is not available.
  void apply(BraidMove move);
  // No availability check.
  void apply_unchecked(BraidMove move);

  bool operator==(const ConvexOrder& other) const { return rs_ == other.rs_ && word_ == other.word_; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  Word word_;
  std::vector<RootId> ids_;
  std::vector<std::size_t> pos_;
};

ConvexOrder convex_order(std::shared_ptr<const RootSystem> rs, Word word);
// Inverse of convex_order: recovers i_k from beta_k.  Throws pbw::Error if
// the sequence is not the order of any reduced word of w0.
Word word_of_order(const RootSystem& rs, std::span<const RootId> roots);
ConvexOrder order_from_roots(std::shared_ptr<const RootSystem> rs, std::span<const RootId> roots);

// Roots compared first by the earliest enumerated node in their support, then
// lexicographically by the remaining coefficients scaled by that one.
ConvexOrder lex_order(std::shared_ptr<const RootSystem> rs, std::span<const Node> enumeration);

// Let X be the roots preceding `split` in `suffix_source`.  X must be an
// initial segment of `prefix_source`; the result lists X in prefix_source's
// order, then the rest in suffix_source's order.
ConvexOrder hybrid_order(const ConvexOrder& prefix_source, const ConvexOrder& suffix_source, RootId split);

// Exhaustive check over summing triples.  `roots` must enumerate Phi^+.
bool is_convex(const RootSystem& rs, std::span<const RootId> roots);

bool is_move_available(const ConvexOrder& order, BraidMove move);
std::vector<BraidMove> available_moves(const ConvexOrder& order);
ConvexOrder apply_move(const ConvexOrder& order, BraidMove move);
// Letter rewrite only: ab -> ba, aba -> bab, abab -> baba.
void apply_move_to_word(Word& word, BraidMove move);

Word replay(const BraidPath& path);
// Same moves in reverse order; maps target back to source.
BraidPath reversed(const BraidPath& path);

BraidPath connect(const RootSystem& rs, const Word& u, const Word& v);
// Paths to a word whose first (resp. last) letter is i.
BraidPath to_front(const RootSystem& rs, const Word& word, Node i);
BraidPath to_back(const RootSystem& rs, const Word& word, Node i);

bool is_node_permutation(int rank, std::span<const Node> enumeration);
// Blocks tau^(1), ..., tau^(n) of the lex-order word; block k carries the
// roots whose first nonzero coefficient in enumeration order is at i_k.
std::vector<Word> tau_factor(std::shared_ptr<const RootSystem> rs, std::span<const Node> enumeration);
// Classification of good enumerations for types A-D.
bool is_good_enumeration(TypeRank tr, std::span<const Node> enumeration);

}  // namespace pbw
