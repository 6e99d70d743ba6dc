#pragma once

// Lusztig data: one multiplicity per positive root, indexed by a convex order.
// Equivalently a Kostant partition.  Braid moves act on the data through the
// piecewise-linear rank-2 transition maps below.

#include <array>
#include <span>
#include <vector>

#include "pbw/weyl.hpp"

namespace pbw {

class LusztigDatum {
 public:
  // Throws pbw::Error on a length mismatch or a negative count.
  LusztigDatum(ConvexOrder order, std::vector<Count> counts);
  static LusztigDatum zero(ConvexOrder order);

  const ConvexOrder& order() const { return order_; }
  const RootSystem& system() const { return order_.system(); }
  std::span<const Count> counts() const { return counts_; }
  std::size_t size() const { return counts_.size(); }
  Count at(std::size_t k) const { return counts_[k]; }
  Count of(RootId id) const { return counts_[order_.position(id)]; }
  Count of(const Root& root) const;

  bool operator==(const LusztigDatum& other) const { return order_ == other.order_ && counts_ == other.counts_; }

 private:
  ConvexOrder order_;
  std::vector<Count> counts_;
};

// Coefficients over the simple roots.
struct Weight {
  std::vector<Count> coeffs;
  bool operator==(const Weight&) const = default;
};

// -sum c_beta beta
Weight weight(const LusztigDatum& d);
Weight weight(const RootSystem& rs, std::span<const RootId> roots, std::span<const Count> counts);
// <alpha_i^vee, wt>
Count pairing(const RootSystem& rs, Node i, const Weight& wt);

using Window3 = std::array<Count, 3>;
using Window4 = std::array<Count, 4>;

// Counts on (beta, beta+gamma, gamma) in window order; result is indexed by
// the reversed window (gamma, beta+gamma, beta).
Window3 transition_a2(Window3 c);
// B2 window.  long_first: roots (L, L+S, L+2S, S); otherwise (S, L+2S, L+S, L).
// Result is indexed by the reversed window.  Min-plus form.
Window4 transition_b2(Window4 c, bool long_first);
// Same map computed by cancelling large and small brackets.
Window4 bracket_transition_b2(Window4 c, bool long_first);

// The rank-2 maps used by transport.  Swappable so the verification harness
// can check that it notices a corrupted rule.
struct Rank2Rules {
  Window3 (*a2)(Window3) = transition_a2;
  Window4 (*b2)(Window4, bool) = transition_b2;
};
const Rank2Rules& default_rules();

// Requires the move to be available on d.order().
LusztigDatum transition_move(const LusztigDatum& d, BraidMove move, const Rank2Rules& rules = default_rules());
// Requires path.source == d.order().word().
LusztigDatum transition_path(const LusztigDatum& d, const BraidPath& path, const Rank2Rules& rules = default_rules());

// A braid path with the window orientation of every 4-term move resolved, so
// counts can be pushed along it without touching the root system.
struct CompiledMove {
  std::uint32_t position = 0;
  std::uint8_t arity = 2;
  bool long_first = false;
};

struct CompiledPath {
  Word source;
  Word target;
  std::vector<CompiledMove> moves;
};

// Replays the path on the convex order of path.source and checks every move.
CompiledPath compile_path(std::shared_ptr<const RootSystem> rs, const BraidPath& path);
// Counts along source -> target, in place.
void transport(std::span<Count> counts, const CompiledPath& path, const Rank2Rules& rules = default_rules());
// Counts along target -> source, in place.
void transport_back(std::span<Count> counts, const CompiledPath& path, const Rank2Rules& rules = default_rules());

}  // namespace pbw
