#include "pbw/lusztig.hpp"

#include <algorithm>

#include "pbw/error.hpp"

namespace pbw {

LusztigDatum::LusztigDatum(ConvexOrder order, std::vector<Count> counts)
    : order_(std::move(order)), counts_(std::move(counts)) {
  if (counts_.size() != order_.size())
    throw Error("datum has " + std::to_string(counts_.size()) + " counts but " + std::to_string(order_.size()) +
                " positive roots");
  for (Count c : counts_)
    if (c < 0) throw Error("negative count in Lusztig datum");
}

LusztigDatum LusztigDatum::zero(ConvexOrder order) {
  std::vector<Count> counts(order.size(), 0);
  return LusztigDatum(std::move(order), std::move(counts));
}

Count LusztigDatum::of(const Root& root) const {
  auto id = system().find(root);
  if (!id) throw Error("not a positive root: " + to_dotted(root));
  return of(*id);
}

Weight weight(const RootSystem& rs, std::span<const RootId> roots, std::span<const Count> counts) {
  Weight wt{std::vector<Count>(rs.rank(), 0)};
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (counts[k] == 0) continue;
    const Root& beta = rs.root(roots[k]);
    for (Node j = 1; j <= rs.rank(); ++j) wt.coeffs[j - 1] -= counts[k] * beta.coeff(j);
  }
  return wt;
}

Weight weight(const LusztigDatum& d) { return weight(d.system(), d.order().sequence(), d.counts()); }

Count pairing(const RootSystem& rs, Node i, const Weight& wt) {
  Count total = 0;
  for (Node j = 1; j <= rs.rank(); ++j) total += rs.cartan().a(i, j) * wt.coeffs[j - 1];
  return total;
}

Window3 transition_a2(Window3 c) {
  const auto [x, y, z] = c;
  return {std::max(y, z + y - x), std::min(x, z), std::max(y, x + y - z)};
}

namespace {

// Root-indexed data of a B2 window: a = c_L, b = c_{L+S}, c = c_{L+2S}, d = c_S.
struct B2Data {
  Count a, b, c, d;
};

B2Data unpack(const Window4& w, bool long_first) {
  if (long_first) return {w[0], w[1], w[2], w[3]};
  return {w[3], w[2], w[1], w[0]};
}

// The reversed window has the other orientation.
Window4 pack_reversed(const B2Data& r, bool long_first) {
  if (long_first) return {r.d, r.c, r.b, r.a};
  return {r.a, r.b, r.c, r.d};
}

}  // namespace

Window4 transition_b2(Window4 w, bool long_first) {
  const auto [a, b, c, d] = unpack(w, long_first);
  const Count pi1 = std::min({a + b, a + d, c + d});
  const Count pi2 = std::min({2 * a + b, 2 * a + d, 2 * c + d});
  B2Data r{a + b + c - pi1, 2 * pi1 - pi2, pi2 - pi1, b + 2 * c + d - pi2};
  return pack_reversed(r, long_first);
}

Window4 bracket_transition_b2(Window4 w, bool long_first) {
  // )^b  BIG(^a  BIG)^c  (^b  )^d  BIG(^c
  const auto [a, b, c, d] = unpack(w, long_first);
  const Count small_pairs = std::min(b, d);
  const Count big_pairs = std::min(a, c);
  const Count p = a - big_pairs;    // BIG( still open in the second block
  const Count q = d - small_pairs;  // ) still open in the fifth block
  // one BIG( absorbs one or two ), maximizing cancelled brackets
  Count one = 0, two = 0;
  if (q <= p) {
    one = q;
  } else if (q < 2 * p) {
    two = q - p;
    one = 2 * p - q;
  } else {
    two = p;
  }
  B2Data r;
  r.a = (b - small_pairs) + c + (p - one - two);
  r.b = small_pairs + one;
  r.c = big_pairs + two;
  r.d = b + (q - one - 2 * two) + 2 * (c - big_pairs);
  return pack_reversed(r, long_first);
}

const Rank2Rules& default_rules() {
  static const Rank2Rules rules{};
  return rules;
}

namespace {

bool window_long_first(const ConvexOrder& order, std::size_t position) {
  const RootSystem& rs = order.system();
  return rs.norm2(order.at(position)) > rs.norm2(order.at(position + 3));
}

void apply_counts(std::span<Count> counts, std::size_t k, int arity, bool long_first, const Rank2Rules& rules) {
  switch (arity) {
    case 2:
      std::swap(counts[k], counts[k + 1]);
      break;
    case 3: {
      Window3 out = rules.a2({counts[k], counts[k + 1], counts[k + 2]});
      std::copy(out.begin(), out.end(), counts.begin() + k);
      break;
    }
    case 4: {
      Window4 out = rules.b2({counts[k], counts[k + 1], counts[k + 2], counts[k + 3]}, long_first);
      std::copy(out.begin(), out.end(), counts.begin() + k);
      break;
    }
    default:
      throw Error("unsupported braid arity " + std::to_string(arity));
  }
}

}  // namespace

LusztigDatum transition_move(const LusztigDatum& d, BraidMove move, const Rank2Rules& rules) {
  if (!is_move_available(d.order(), move))
    throw Error("braid move of arity " + std::to_string(move.arity) + " not available at position " +
                std::to_string(move.position));
  std::vector<Count> counts(d.counts().begin(), d.counts().end());
  const bool long_first = move.arity == 4 && window_long_first(d.order(), move.position);
  apply_counts(counts, move.position, move.arity, long_first, rules);
  ConvexOrder order = d.order();
  order.apply_unchecked(move);
  return LusztigDatum(std::move(order), std::move(counts));
}

LusztigDatum transition_path(const LusztigDatum& d, const BraidPath& path, const Rank2Rules& rules) {
  if (path.source != d.order().word()) throw Error("braid path does not start at the datum's word");
  CompiledPath compiled = compile_path(d.order().system_ptr(), path);
  std::vector<Count> counts(d.counts().begin(), d.counts().end());
  transport(counts, compiled, rules);
  return LusztigDatum(ConvexOrder(d.order().system_ptr(), path.target), std::move(counts));
}

CompiledPath compile_path(std::shared_ptr<const RootSystem> rs, const BraidPath& path) {
  ConvexOrder order(std::move(rs), path.source);
  CompiledPath out;
  out.source = path.source;
  out.moves.reserve(path.moves.size());
  for (const BraidMove& m : path.moves) {
    if (!is_move_available(order, m))
      throw Error("braid path contains a move that is not available at position " + std::to_string(m.position));
    CompiledMove cm;
    cm.position = static_cast<std::uint32_t>(m.position);
    cm.arity = static_cast<std::uint8_t>(m.arity);
    cm.long_first = m.arity == 4 && window_long_first(order, m.position);
    out.moves.push_back(cm);
    order.apply_unchecked(m);
  }
  out.target = order.word();
  if (out.target != path.target) throw Error("braid path does not reach its recorded target");
  return out;
}

void transport(std::span<Count> counts, const CompiledPath& path, const Rank2Rules& rules) {
  for (const CompiledMove& m : path.moves) apply_counts(counts, m.position, m.arity, m.long_first, rules);
}

void transport_back(std::span<Count> counts, const CompiledPath& path, const Rank2Rules& rules) {
  for (auto it = path.moves.rbegin(); it != path.moves.rend(); ++it)
    apply_counts(counts, it->position, it->arity, !it->long_first, rules);
}

}  // namespace pbw
