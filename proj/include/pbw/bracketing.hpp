#pragma once

// Fast f_i on simply braided words.  Bringing alpha_i to the front of the
// convex order needs only 2-term moves plus rank-2 moves that end at alpha_i;
// each of the latter contributes a ")^R (^L" block to a bracket string whose
// leftmost unmatched "(" picks the rank-2 window where f_i acts.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pbw/crystal.hpp"
#include "pbw/error.hpp"

namespace pbw {

// Window shapes with alpha_i last.
//   A2: (g, g+a, a)
//   B2: alpha_i short, (L, L+S, L+2S, S)
//   C2: alpha_i long,  (S, 2S+L, S+L, L)
enum class WindowKind { A2, B2, C2 };

struct Rank2Window {
  WindowKind kind = WindowKind::A2;
  std::vector<RootId> roots;  // window order at the time of the move
  std::size_t move_index = 0;  // index into BracketPlan::moves
};

struct BracketPlan {
  Node node = 1;
  Word source;
  std::vector<BraidMove> moves;
  std::vector<Rank2Window> windows;  // M_1, M_2, ... in application order
};

inline constexpr std::size_t default_search_cap = 1'000'000;

// Depth-first search over orders reachable by allowed moves.  Returns nullopt
// when alpha_i cannot be brought to the front; throws SearchBudgetExceeded
// when more than `cap` orders were visited without a decision.
std::optional<BracketPlan> search_plan(const ConvexOrder& order, Node i, std::size_t cap = default_search_cap);
// Greedy construction that gathers each rank-2 window next to alpha_i using
// 2-term moves only.  nullopt means the greedy route got stuck, not that the
// word is not simply braided.
std::optional<BracketPlan> sweep_plan(const ConvexOrder& order, Node i);
// sweep_plan, falling back to search_plan.
std::optional<BracketPlan> plan(const ConvexOrder& order, Node i, std::size_t cap = default_search_cap);
bool is_simply_braided(const ConvexOrder& order, Node i, std::size_t cap = default_search_cap);
bool is_simply_braided(const ConvexOrder& order, std::size_t cap = default_search_cap);
// Replays the plan; throws pbw::Error describing the first violation.
void validate_plan(const ConvexOrder& order, const BracketPlan& p);

struct EpsJump {
  Count right = 0;  // R = eps_i(c^l)
  Count left = 0;   // L = <alpha_i^vee, wt(c^l)> + eps_i(c^l) + eps_i^*(c^l)
  bool operator==(const EpsJump&) const = default;
};

// Counts in window order; the alpha_i entry is ignored (treated as zero).
// Computed by rank-2 transport inside the window.
EpsJump rank2_eps_jump(const RootSystem& rs, const Rank2Window& window, std::span<const Count> counts);

// f_i on a rank-2 window with alpha_i last, read off the window's own bracket
// string.  Counts in window order, result in window order.
std::vector<Count> rank2_f(WindowKind kind, std::span<const Count> counts);
// The same via the general transport algorithm; oracle for rank2_f.
std::vector<Count> rank2_f_transport(WindowKind kind, std::span<const Count> counts);

struct BracketBlock {
  char bracket = ')';
  Count size = 0;
  std::optional<std::size_t> window;  // nullopt: the final c_{alpha_i} block
  RootId source = 0;                  // root whose count feeds the block (refined strings)
  int multiplier = 1;                 // refined strings only
  Count unmatched = 0;                // filled by cancellation
};

struct BracketString {
  std::vector<BracketBlock> blocks;
  // Block holding the leftmost unmatched "(", if any.
  std::optional<std::size_t> first_open;
};

// Coarse string: one ")^R (^L" pair per window, last move leftmost, then
// ")^{c_{alpha_i}}".
BracketString bracket_string(const LusztigDatum& d, const BracketPlan& p);
// Refined per-window blocks as in the explicit type-by-type formulas.
BracketString refined_string(const LusztigDatum& d, const BracketPlan& p);
// Innermost matching; sets unmatched counts and first_open.
void cancel(BracketString& s);
// "))((" on the first line, block sources on the second.
std::string render(const RootSystem& rs, const BracketString& s);

LusztigDatum f_bracket(Node i, const LusztigDatum& d, const BracketPlan& p);

// Plans for every node of one order, built eagerly.
class BracketEngine {
 public:
  explicit BracketEngine(ConvexOrder order);
  static std::shared_ptr<const BracketEngine> for_order(const ConvexOrder& order);

  const ConvexOrder& order() const { return order_; }
  bool simply_braided(Node i) const { return plans_[i - 1].has_value(); }
  // Throws pbw::Error if the order is not simply braided for i.
  const BracketPlan& plan_for(Node i) const;
  std::vector<Count> f(Node i, std::span<const Count> c) const;

 private:
  ConvexOrder order_;
  std::vector<std::optional<BracketPlan>> plans_;
  // [node][window] -> positions of the window roots in order_
  std::vector<std::vector<std::vector<std::size_t>>> slots_;
};

LusztigDatum f_bracket(Node i, const LusztigDatum& d);

// (1..n)(1..n-1)...(1) for A; (1..n..1)(2..n..2)...(n) for B and C;
// (1..n, n-2..1)(2..n, n-2..2)...(n-1, n) for D.
ConvexOrder canonical_word(TypeRank tr);
// Lex order of a good enumeration.  Throws pbw::Error otherwise.
ConvexOrder good_enumeration_word(TypeRank tr, std::span<const Node> enumeration);

}  // namespace pbw
