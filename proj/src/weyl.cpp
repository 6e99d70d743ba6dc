#include "pbw/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pbw/error.hpp"

namespace pbw {

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.rank_ = rank;
  w.m_.assign(rank * rank, 0);
  for (int k = 0; k < rank; ++k) w.m_[k * rank + k] = 1;
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const Node> word) {
  WeylElement w = identity(rs.rank());
  for (Node i : word) w = w.times_simple(rs, i);
  return w;
}

Root WeylElement::column(Node j) const {
  auto first = m_.begin() + (j - 1) * rank_;
  return Root(std::vector<int>(first, first + rank_));
}

Root WeylElement::apply(const Root& beta) const {
  std::vector<int> out(rank_, 0);
  for (int j = 0; j < rank_; ++j) {
    if (beta.coeffs()[j] == 0) continue;
    for (int r = 0; r < rank_; ++r) out[r] += m_[j * rank_ + r] * beta.coeffs()[j];
  }
  return Root(std::move(out));
}

WeylElement WeylElement::times_simple(const RootSystem& rs, Node i) const {
  // (w s_i)(alpha_j) = w alpha_j - a_ij w alpha_i
  WeylElement out = *this;
  const auto& cd = rs.cartan();
  for (Node j = 1; j <= rank_; ++j) {
    int a = cd.a(i, j);
    if (a == 0 || j == i) continue;
    for (int r = 0; r < rank_; ++r) out.m_[(j - 1) * rank_ + r] -= a * m_[(i - 1) * rank_ + r];
  }
  for (int r = 0; r < rank_; ++r) out.m_[(i - 1) * rank_ + r] = -m_[(i - 1) * rank_ + r];
  return out;
}

WeylElement WeylElement::simple_times(const RootSystem& rs, Node i) const {
  WeylElement out = *this;
  for (Node j = 1; j <= rank_; ++j) {
    int p = 0;
    for (Node k = 1; k <= rank_; ++k) p += rs.cartan().a(i, k) * m_[(j - 1) * rank_ + (k - 1)];
    out.m_[(j - 1) * rank_ + (i - 1)] -= p;
  }
  return out;
}

namespace {

void check_node(const RootSystem& rs, Node i) {
  if (i < 1 || i > rs.rank())
    throw Error("node " + std::to_string(i) + " out of range for " + rs.label());
}

}  // namespace

bool is_reduced(const RootSystem& rs, std::span<const Node> word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (Node i : word) {
    if (i < 1 || i > rs.rank()) return false;
    if (!w.column(i).is_positive()) return false;
    w = w.times_simple(rs, i);
  }
  return true;
}

std::vector<Node> left_descents(const RootSystem& rs, const WeylElement& w) {
  std::vector<Node> out;
  std::vector<bool> hit(rs.rank() + 1, false);
  for (const Root& gamma : rs.positive_roots()) {
    Root image = w.apply(gamma);
    if (image.height() != -1) continue;
    if (auto id = rs.find(-image); id && rs.is_simple(*id)) {
      for (Node i = 1; i <= rs.rank(); ++i)
        if (rs.simple_id(i) == *id) hit[i] = true;
    }
  }
  for (Node i = 1; i <= rs.rank(); ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

Word longest_word(const RootSystem& rs) {
  Word word;
  WeylElement w = WeylElement::identity(rs.rank());
  while (true) {
    Node next = 0;
    for (Node i = 1; i <= rs.rank() && next == 0; ++i)
      if (w.column(i).is_positive()) next = i;
    if (next == 0) break;
    word.push_back(next);
    w = w.times_simple(rs, next);
  }
  return word;
}

int braid_arity(const RootSystem& rs, Node a, Node b) {
  if (a == b) throw Error("braid arity of a node with itself");
  switch (rs.cartan().a(a, b) * rs.cartan().a(b, a)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: throw Error("6-term braid relations (G2) are not supported");
  }
}

Node opposite_node(const RootSystem& rs, Node i) {
  check_node(rs, i);
  WeylElement w0 = WeylElement::from_word(rs, longest_word(rs));
  Root image = -w0.column(i);
  for (Node j = 1; j <= rs.rank(); ++j)
    if (image == Root::simple(rs.rank(), j)) return j;
  throw Error("longest element does not send simple roots to negative simple roots");
}

Word random_reduced_word(const RootSystem& rs, std::mt19937_64& rng) {
  Word word;
  WeylElement w = WeylElement::identity(rs.rank());
  std::vector<Node> ascents;
  while (true) {
    ascents.clear();
    for (Node i = 1; i <= rs.rank(); ++i)
      if (w.column(i).is_positive()) ascents.push_back(i);
    if (ascents.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, ascents.size() - 1);
    Node i = ascents[pick(rng)];
    word.push_back(i);
    w = w.times_simple(rs, i);
  }
  return word;
}

ConvexOrder::ConvexOrder(std::shared_ptr<const RootSystem> rs, Word word) : rs_(std::move(rs)), word_(std::move(word)) {
  const RootSystem& sys = *rs_;
  if (word_.size() != sys.num_positive())
    throw Error("word has length " + std::to_string(word_.size()) + " but w0 has length " +
                std::to_string(sys.num_positive()));
  WeylElement w = WeylElement::identity(sys.rank());
  ids_.reserve(word_.size());
  for (Node i : word_) {
    check_node(sys, i);
    Root beta = w.column(i);
    if (!beta.is_positive()) throw Error("word is not reduced");
    ids_.push_back(*sys.find(beta));
    w = w.times_simple(sys, i);
  }
  pos_.assign(sys.num_positive(), 0);
  for (std::size_t k = 0; k < ids_.size(); ++k) pos_[ids_[k]] = k;
}

void ConvexOrder::apply(BraidMove move) {
  if (!is_move_available(*this, move))
    throw Error("braid move of arity " + std::to_string(move.arity) + " not available at position " +
                std::to_string(move.position));
  apply_unchecked(move);
}

void ConvexOrder::apply_unchecked(BraidMove move) {
  apply_move_to_word(word_, move);
  auto first = ids_.begin() + static_cast<std::ptrdiff_t>(move.position);
  std::reverse(first, first + move.arity);
  for (std::size_t k = move.position; k < move.position + move.arity; ++k) pos_[ids_[k]] = k;
}

ConvexOrder convex_order(std::shared_ptr<const RootSystem> rs, Word word) {
  return ConvexOrder(std::move(rs), std::move(word));
}

Word word_of_order(const RootSystem& rs, std::span<const RootId> roots) {
  if (roots.size() != rs.num_positive()) throw Error("sequence does not enumerate the positive roots");
  std::vector<bool> seen(rs.num_positive(), false);
  for (RootId id : roots) {
    if (id >= rs.num_positive() || seen[id]) throw Error("sequence does not enumerate the positive roots");
    seen[id] = true;
  }
  // inverse holds (s_{i_1} ... s_{i_{k-1}})^{-1}
  WeylElement inverse = WeylElement::identity(rs.rank());
  Word word;
  word.reserve(roots.size());
  for (RootId id : roots) {
    Root gamma = inverse.apply(rs.root(id));
    Node letter = 0;
    for (Node j = 1; j <= rs.rank(); ++j)
      if (gamma == Root::simple(rs.rank(), j)) letter = j;
    if (letter == 0) throw Error("sequence is not the convex order of a reduced word");
    word.push_back(letter);
    inverse = inverse.simple_times(rs, letter);
  }
  return word;
}

ConvexOrder order_from_roots(std::shared_ptr<const RootSystem> rs, std::span<const RootId> roots) {
  Word word = word_of_order(*rs, roots);
  return ConvexOrder(std::move(rs), std::move(word));
}

bool is_node_permutation(int rank, std::span<const Node> enumeration) {
  if (static_cast<int>(enumeration.size()) != rank) return false;
  std::vector<bool> seen(rank + 1, false);
  for (Node i : enumeration) {
    if (i < 1 || i > rank || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

namespace {

void check_enumeration(const RootSystem& rs, std::span<const Node> enumeration) {
  if (!is_node_permutation(rs.rank(), enumeration))
    throw Error("enumeration is not a permutation of the nodes of " + rs.label());
}

std::size_t leading_index(const Root& beta, std::span<const Node> enumeration) {
  for (std::size_t k = 0; k < enumeration.size(); ++k)
    if (beta.coeff(enumeration[k]) != 0) return k;
  return enumeration.size();
}

}  // namespace

ConvexOrder lex_order(std::shared_ptr<const RootSystem> rs, std::span<const Node> enumeration) {
  check_enumeration(*rs, enumeration);
  std::vector<RootId> ids(rs->num_positive());
  std::iota(ids.begin(), ids.end(), RootId{0});
  auto less = [&](RootId x, RootId y) {
    const Root& p = rs->root(x);
    const Root& q = rs->root(y);
    std::size_t m = leading_index(p, enumeration);
    std::size_t mq = leading_index(q, enumeration);
    if (m != mq) return m < mq;
    // compare p_{i_s}/p_{i_m} with q_{i_s}/q_{i_m}
    const long pm = p.coeff(enumeration[m]);
    const long qm = q.coeff(enumeration[m]);
    for (std::size_t s = m + 1; s < enumeration.size(); ++s) {
      long lhs = p.coeff(enumeration[s]) * qm;
      long rhs = q.coeff(enumeration[s]) * pm;
      if (lhs != rhs) return lhs < rhs;
    }
    return false;
  };
  std::sort(ids.begin(), ids.end(), less);
  return order_from_roots(std::move(rs), ids);
}

ConvexOrder hybrid_order(const ConvexOrder& prefix_source, const ConvexOrder& suffix_source, RootId split) {
  if (prefix_source.system_ptr() != suffix_source.system_ptr())
    throw Error("hybrid order of convex orders from different root systems");
  const std::size_t cut = suffix_source.position(split);
  std::vector<RootId> head(prefix_source.sequence().begin(), prefix_source.sequence().begin() + cut);
  std::vector<RootId> expected(suffix_source.sequence().begin(), suffix_source.sequence().begin() + cut);
  std::sort(head.begin(), head.end());
  std::sort(expected.begin(), expected.end());
  if (head != expected) throw Error("hybrid order: the roots before the split do not form a common initial segment");
  std::vector<RootId> ids(prefix_source.sequence().begin(), prefix_source.sequence().begin() + cut);
  ids.insert(ids.end(), suffix_source.sequence().begin() + cut, suffix_source.sequence().end());
  return order_from_roots(prefix_source.system_ptr(), ids);
}

bool is_convex(const RootSystem& rs, std::span<const RootId> roots) {
  const std::size_t N = rs.num_positive();
  if (roots.size() != N) throw Error("sequence does not enumerate the positive roots");
  std::vector<std::size_t> pos(N, N);
  for (std::size_t k = 0; k < N; ++k) {
    if (roots[k] >= N || pos[roots[k]] != N) throw Error("sequence does not enumerate the positive roots");
    pos[roots[k]] = k;
  }
  for (RootId a = 0; a < N; ++a) {
    for (RootId b = a + 1; b < N; ++b) {
      auto s = rs.sum(a, b);
      if (!s) continue;
      std::size_t lo = std::min(pos[a], pos[b]);
      std::size_t hi = std::max(pos[a], pos[b]);
      if (pos[*s] < lo || pos[*s] > hi) return false;
    }
  }
  return true;
}

bool is_move_available(const ConvexOrder& order, BraidMove move) {
  const RootSystem& rs = order.system();
  const std::size_t k = move.position;
  if (move.arity < 2 || move.arity > 4 || k + move.arity > order.size()) return false;
  auto b = [&](std::size_t off) { return order.at(k + off); };
  auto is_sum = [&](RootId x, RootId y, RootId z) {
    auto s = rs.sum(x, y);
    return s && *s == z;
  };
  switch (move.arity) {
    case 2:
      return rs.bilinear(b(0), b(1)) == 0;
    case 3:
      return is_sum(b(0), b(2), b(1)) && rs.norm2(b(0)) == rs.norm2(b(1)) && rs.norm2(b(1)) == rs.norm2(b(2));
    case 4: {
      const int first = rs.norm2(b(0));
      const int last = rs.norm2(b(3));
      if (first == 2 * last)  // long root first
        return is_sum(b(0), b(3), b(1)) && is_sum(b(1), b(3), b(2));
      if (last == 2 * first)  // short root first
        return is_sum(b(0), b(2), b(1)) && is_sum(b(0), b(3), b(2));
      return false;
    }
  }
  return false;
}

std::vector<BraidMove> available_moves(const ConvexOrder& order) {
  std::vector<BraidMove> out;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int m = 2; m <= 4; ++m)
      if (is_move_available(order, {k, m})) out.push_back({k, m});
  return out;
}

ConvexOrder apply_move(const ConvexOrder& order, BraidMove move) {
  ConvexOrder out = order;
  out.apply(move);
  return out;
}

void apply_move_to_word(Word& word, BraidMove move) {
  const std::size_t k = move.position;
  if (k + move.arity > word.size()) throw Error("braid move runs past the end of the word");
  const Node a = word[k];
  const Node b = word[k + 1];
  if (a == b) throw Error("braid move on repeated letter");
  for (int j = 0; j < move.arity; ++j)
    if (word[k + j] != (j % 2 == 0 ? a : b)) throw Error("letters do not alternate under the braid move");
  for (int j = 0; j < move.arity; ++j) word[k + j] = (j % 2 == 0 ? b : a);
}

Word replay(const BraidPath& path) {
  Word w = path.source;
  for (const BraidMove& m : path.moves) apply_move_to_word(w, m);
  return w;
}

BraidPath reversed(const BraidPath& path) {
  BraidPath out;
  out.source = path.target;
  out.target = path.source;
  out.moves.assign(path.moves.rbegin(), path.moves.rend());
  return out;
}

namespace {

// Rewrites word[start..] by braid moves until it begins with b.  b must be a
// left descent of the element spelled by word[start..].  If the first letter
// is a != b, the element has the longest element of <a,b> as a prefix, so we
// can grow the alternating prefix a,b,a,... one letter at a time and then
// flip it.
void bring_to_front(const RootSystem& rs, Word& word, std::size_t start, Node b, std::vector<BraidMove>& out) {
  if (start >= word.size()) throw Error("bring_to_front: letter is not a left descent");
  if (word[start] == b) return;
  const Node a = word[start];
  const int m = braid_arity(rs, a, b);
  for (int j = 1; j < m; ++j) bring_to_front(rs, word, start + j, j % 2 == 1 ? b : a, out);
  BraidMove move{start, m};
  apply_move_to_word(word, move);
  out.push_back(move);
}

void check_longest(const RootSystem& rs, const Word& w) {
  if (w.size() != rs.num_positive() || !is_reduced(rs, w)) throw Error("not a reduced word of w0");
}

}  // namespace

BraidPath connect(const RootSystem& rs, const Word& u, const Word& v) {
  check_longest(rs, u);
  check_longest(rs, v);
  BraidPath path;
  path.source = u;
  path.target = v;
  Word w = u;
  for (std::size_t p = 0; p < w.size(); ++p) bring_to_front(rs, w, p, v[p], path.moves);
  return path;
}

BraidPath to_front(const RootSystem& rs, const Word& word, Node i) {
  check_longest(rs, word);
  check_node(rs, i);
  BraidPath path;
  path.source = word;
  Word w = word;
  bring_to_front(rs, w, 0, i, path.moves);
  path.target = std::move(w);
  return path;
}

BraidPath to_back(const RootSystem& rs, const Word& word, Node i) {
  check_longest(rs, word);
  check_node(rs, i);
  Word rev(word.rbegin(), word.rend());
  std::vector<BraidMove> moves;
  bring_to_front(rs, rev, 0, i, moves);
  BraidPath path;
  path.source = word;
  path.target.assign(rev.rbegin(), rev.rend());
  const std::size_t N = word.size();
  for (const BraidMove& m : moves) path.moves.push_back({N - m.position - m.arity, m.arity});
  return path;
}

std::vector<Word> tau_factor(std::shared_ptr<const RootSystem> rs, std::span<const Node> enumeration) {
  ConvexOrder order = lex_order(rs, enumeration);
  std::vector<Word> blocks(enumeration.size());
  std::size_t current = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::size_t block = leading_index(order.root_at(k), enumeration);
    if (block < current) throw Error("lex order blocks are not contiguous");
    current = block;
    blocks[block].push_back(order.word()[k]);
  }
  return blocks;
}

bool is_good_enumeration(TypeRank tr, std::span<const Node> enumeration) {
  if (!is_node_permutation(tr.rank, enumeration)) return false;
  const int n = tr.rank;
  int k = 0;
  while (k < n && enumeration[k] == k + 1) ++k;
  switch (tr.family) {
    case Family::A:
      return true;
    case Family::B:
    case Family::C:
      return k == n || enumeration[k] == n;
    case Family::D:
      return k >= n - 2 || enumeration[k] == n - 1 || enumeration[k] == n;
  }
  return false;
}

}  // namespace pbw
