#include "pbw/bracketing.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_set>

namespace pbw {

namespace {

void check_node(const RootSystem& rs, Node i) {
  if (i < 1 || i > rs.rank())
    throw Error("node " + std::to_string(i) + " out of range for " + rs.label());
}

bool allowed(const ConvexOrder& order, RootId alpha, BraidMove m) {
  if (!is_move_available(order, m)) return false;
  return m.arity == 2 || order.position(alpha) == m.position + m.arity - 1;
}

WindowKind kind_of(const ConvexOrder& order, BraidMove m) {
  if (m.arity == 3) return WindowKind::A2;
  const RootSystem& rs = order.system();
  return rs.norm2(order.at(m.position)) > rs.norm2(order.at(m.position + 3)) ? WindowKind::B2 : WindowKind::C2;
}

// Rebuilds windows from the move list and checks every move.
BracketPlan assemble(const ConvexOrder& start, Node i, std::vector<BraidMove> moves) {
  const RootId alpha = start.system().simple_id(i);
  BracketPlan p;
  p.node = i;
  p.source = start.word();
  ConvexOrder order = start;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const BraidMove m = moves[k];
    if (!allowed(order, alpha, m))
      throw Error("plan move " + std::to_string(k) + " (arity " + std::to_string(m.arity) + " at " +
                  std::to_string(m.position) + ") is not allowed");
    if (m.arity > 2) {
      Rank2Window w;
      w.kind = kind_of(order, m);
      w.roots.assign(order.sequence().begin() + m.position, order.sequence().begin() + m.position + m.arity);
      w.move_index = k;
      p.windows.push_back(std::move(w));
    }
    order.apply_unchecked(m);
  }
  if (order.word().front() != i) throw Error("plan does not bring alpha_" + std::to_string(i) + " to the front");
  p.moves = std::move(moves);
  return p;
}

std::vector<BraidMove> candidates(const ConvexOrder& order, RootId alpha) {
  std::vector<BraidMove> out;
  const std::size_t p = order.position(alpha);
  const std::size_t N = order.size();
  auto push = [&](std::size_t k, int m) {
    if (is_move_available(order, {k, m})) out.push_back({k, m});
  };
  if (p >= 2) push(p - 2, 3);
  if (p >= 3) push(p - 3, 4);
  if (p >= 1) push(p - 1, 2);
  for (std::size_t q = p >= 2 ? p - 1 : 0; q-- > 0;) push(q, 2);
  if (p + 1 < N) push(p, 2);
  for (std::size_t q = p + 1; q + 1 < N; ++q) push(q, 2);
  return out;
}

std::string key(const Word& w) { return std::string(w.begin(), w.end()); }

// Members of Phi^+ in the span of beta and alpha_i.
std::vector<RootId> rank2_subsystem(const RootSystem& rs, RootId beta, Node i) {
  const Root& b = rs.root(beta);
  std::vector<RootId> out;
  for (RootId g = 0; g < rs.num_positive(); ++g) {
    const Root& c = rs.root(g);
    bool parallel = true;
    for (Node r = 1; r <= rs.rank() && parallel; ++r) {
      if (r == i) continue;
      for (Node s = r + 1; s <= rs.rank() && parallel; ++s) {
        if (s == i) continue;
        parallel = c.coeff(r) * b.coeff(s) == c.coeff(s) * b.coeff(r);
      }
    }
    bool nonzero_off_i = false;
    for (Node r = 1; r <= rs.rank(); ++r)
      if (r != i && c.coeff(r) != 0) nonzero_off_i = true;
    if (parallel && (nonzero_off_i || g == rs.simple_id(i))) out.push_back(g);
  }
  return out;
}

}  // namespace

std::optional<BracketPlan> search_plan(const ConvexOrder& start, Node i, std::size_t cap) {
  check_node(start.system(), i);
  const RootId alpha = start.system().simple_id(i);
  if (start.word().front() == i) return assemble(start, i, {});

  struct Frame {
    std::vector<BraidMove> options;
    std::size_t next = 0;
  };
  ConvexOrder order = start;
  std::unordered_set<std::string> seen{key(order.word())};
  std::vector<Frame> stack{{candidates(order, alpha)}};
  std::vector<BraidMove> path;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.options.size()) {
      stack.pop_back();
      if (!path.empty()) {
        order.apply_unchecked(path.back());
        path.pop_back();
      }
      continue;
    }
    const BraidMove m = top.options[top.next++];
    if (m.arity > 2 && order.position(alpha) != m.position + m.arity - 1) continue;
    order.apply_unchecked(m);
    if (!seen.insert(key(order.word())).second) {
      order.apply_unchecked(m);
      continue;
    }
    if (seen.size() > cap)
      throw SearchBudgetExceeded("simply-braided search for node " + std::to_string(i) + " visited more than " +
                                 std::to_string(cap) + " words");
    path.push_back(m);
    if (order.word().front() == i) return assemble(start, i, std::move(path));
    stack.push_back({candidates(order, alpha)});
  }
  return std::nullopt;
}

std::optional<BracketPlan> sweep_plan(const ConvexOrder& start, Node i) {
  const RootSystem& rs = start.system();
  check_node(rs, i);
  const RootId alpha = rs.simple_id(i);
  ConvexOrder order = start;
  std::vector<BraidMove> moves;
  auto step = [&](BraidMove m) {
    order.apply_unchecked(m);
    moves.push_back(m);
  };
  // bounded: every pass either moves alpha_i left or fails
  while (order.position(alpha) > 0) {
    const std::size_t p = order.position(alpha);
    const RootId beta = order.at(p - 1);
    if (rs.bilinear(beta, alpha) == 0) {
      step({p - 1, 2});
      continue;
    }
    std::vector<RootId> window = rank2_subsystem(rs, beta, i);
    std::vector<bool> in_window(rs.num_positive(), false);
    for (RootId g : window) {
      in_window[g] = true;
      if (order.position(g) > p) return std::nullopt;
    }
    // clear the window of outsiders by commuting them to the left
    while (true) {
      std::size_t first = p;
      for (RootId g : window) first = std::min(first, order.position(g));
      std::size_t q = first + 1;
      while (q < p && in_window[order.at(q)]) ++q;
      if (q == p) break;
      for (; q > 0 && in_window[order.at(q - 1)]; --q) {
        if (rs.bilinear(order.at(q - 1), order.at(q)) != 0) return std::nullopt;
        step({q - 1, 2});
      }
    }
    const int arity = static_cast<int>(window.size());
    const BraidMove m{order.position(alpha) + 1 - window.size(), arity};
    if (arity < 3 || arity > 4 || !is_move_available(order, m)) return std::nullopt;
    step(m);
  }
  return assemble(start, i, std::move(moves));
}

std::optional<BracketPlan> plan(const ConvexOrder& order, Node i, std::size_t cap) {
  if (auto p = sweep_plan(order, i)) return p;
  return search_plan(order, i, cap);
}

bool is_simply_braided(const ConvexOrder& order, Node i, std::size_t cap) { return plan(order, i, cap).has_value(); }

bool is_simply_braided(const ConvexOrder& order, std::size_t cap) {
  for (Node i = 1; i <= order.system().rank(); ++i)
    if (!is_simply_braided(order, i, cap)) return false;
  return true;
}

void validate_plan(const ConvexOrder& order, const BracketPlan& p) {
  if (p.source != order.word()) throw Error("plan was built for a different word");
  BracketPlan rebuilt = assemble(order, p.node, p.moves);
  if (rebuilt.windows.size() != p.windows.size()) throw Error("plan windows do not match its moves");
  for (std::size_t k = 0; k < p.windows.size(); ++k) {
    const auto& a = rebuilt.windows[k];
    const auto& b = p.windows[k];
    if (a.kind != b.kind || a.roots != b.roots || a.move_index != b.move_index)
      throw Error("plan window " + std::to_string(k) + " does not match its move");
  }
}

namespace {

void check_window(WindowKind kind, std::size_t size) {
  if (size != (kind == WindowKind::A2 ? 3u : 4u)) throw Error("malformed rank-2 window");
}

}  // namespace

EpsJump rank2_eps_jump(const RootSystem& rs, const Rank2Window& window, std::span<const Count> counts) {
  check_window(window.kind, window.roots.size());
  if (counts.size() != window.roots.size()) throw Error("window counts do not match the window");
  std::vector<Count> c(counts.begin(), counts.end());
  c.back() = 0;
  const RootId alpha = window.roots.back();
  Node i = 0;
  for (Node j = 1; j <= rs.rank(); ++j)
    if (rs.simple_id(j) == alpha) i = j;
  if (i == 0) throw Error("rank-2 window does not end at a simple root");

  const Count pair = pairing(rs, i, weight(rs, window.roots, c));
  // eps_i: move alpha_i to the front of the window; eps_i^*: alpha_i is already last
  Count front = 0;
  if (window.kind == WindowKind::A2) {
    front = transition_a2({c[0], c[1], c[2]})[0];
  } else {
    front = transition_b2({c[0], c[1], c[2], c[3]}, window.kind == WindowKind::B2)[0];
  }
  return {front, pair + front + c.back()};
}

namespace {

struct Cancelled {
  std::vector<Count> open;  // unmatched "(" per block
  std::optional<std::size_t> first_open;
};

// blocks given as signed sizes: positive "(" and negative ")"
Cancelled cancel_blocks(std::span<const Count> blocks) {
  Cancelled out;
  out.open.assign(blocks.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b] > 0) {
      out.open[b] = blocks[b];
      stack.push_back(b);
      continue;
    }
    Count closing = -blocks[b];
    while (closing > 0 && !stack.empty()) {
      Count& top = out.open[stack.back()];
      const Count m = std::min(closing, top);
      top -= m;
      closing -= m;
      if (top == 0) stack.pop_back();
    }
  }
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (out.open[b] > 0) {
      out.first_open = b;
      break;
    }
  return out;
}

}  // namespace

std::vector<Count> rank2_f(WindowKind kind, std::span<const Count> counts) {
  check_window(kind, counts.size());
  std::vector<Count> c(counts.begin(), counts.end());
  switch (kind) {
    case WindowKind::A2: {
      // )^y (^x )^z
      if (c[0] > c[2]) {
        --c[0];
        ++c[1];
      } else {
        ++c[2];
      }
      return c;
    }
    case WindowKind::B2: {
      // a = c_L, b = c_{L+S}, cc = c_{L+2S}, d = c_S:  )^b (^{2a} )^{2cc} (^b )^d
      const Count a = c[0], b = c[1], cc = c[2], d = c[3];
      const Count blocks[] = {-b, 2 * a, -2 * cc, b, -d};
      auto first = cancel_blocks(blocks).first_open;
      if (first == 1) {
        --c[0];
        ++c[1];
      } else if (first == 3) {
        --c[1];
        ++c[2];
      } else {
        ++c[3];
      }
      return c;
    }
    case WindowKind::C2: {
      // a = c_S, b = c_{2S+L}, cc = c_{S+L}, d = c_L:  )^b (^a )^cc (^b )^d
      const Count a = c[0], b = c[1], cc = c[2], d = c[3];
      const Count blocks[] = {-b, a, -cc, b, -d};
      auto first = cancel_blocks(blocks).first_open;
      if (first == 1) {
        if (cc == a - 1) {
          --c[0];
          ++c[2];
        } else {
          c[0] -= 2;
          ++c[1];
        }
      } else if (first == 3) {
        --c[1];
        c[2] += 2;
      } else {
        ++c[3];
      }
      return c;
    }
  }
  return c;
}

std::vector<Count> rank2_f_transport(WindowKind kind, std::span<const Count> counts) {
  check_window(kind, counts.size());
  std::vector<Count> c(counts.begin(), counts.end());
  if (kind == WindowKind::A2) {
    Window3 w = transition_a2({c[0], c[1], c[2]});
    ++w[0];
    w = transition_a2(w);
    return {w.begin(), w.end()};
  }
  const bool long_first = kind == WindowKind::B2;
  Window4 w = transition_b2({c[0], c[1], c[2], c[3]}, long_first);
  ++w[0];
  w = transition_b2(w, !long_first);
  return {w.begin(), w.end()};
}

void cancel(BracketString& s) {
  // a ")" block's unmatched count is whatever the stack could not absorb
  std::vector<std::size_t> stack;
  std::vector<Count> open(s.blocks.size(), 0);
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    if (s.blocks[b].bracket == '(') {
      open[b] = s.blocks[b].size;
      if (open[b] > 0) stack.push_back(b);
      continue;
    }
    Count closing = s.blocks[b].size;
    while (closing > 0 && !stack.empty()) {
      Count& top = open[stack.back()];
      const Count m = std::min(closing, top);
      top -= m;
      closing -= m;
      if (top == 0) stack.pop_back();
    }
    s.blocks[b].unmatched = closing;
  }
  s.first_open.reset();
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    if (s.blocks[b].bracket != '(') continue;
    s.blocks[b].unmatched = open[b];
    if (open[b] > 0 && !s.first_open) s.first_open = b;
  }
}

namespace {

std::vector<Count> window_counts(const LusztigDatum& d, const Rank2Window& w) {
  std::vector<Count> c;
  for (RootId id : w.roots) c.push_back(d.of(id));
  c.back() = 0;
  return c;
}

void check_plan(const LusztigDatum& d, const BracketPlan& p) {
  if (p.source != d.order().word()) throw Error("bracket plan was built for a different word");
}

}  // namespace

BracketString bracket_string(const LusztigDatum& d, const BracketPlan& p) {
  check_plan(d, p);
  const RootSystem& rs = d.system();
  const RootId alpha = rs.simple_id(p.node);
  BracketString s;
  for (std::size_t l = p.windows.size(); l-- > 0;) {
    const Rank2Window& w = p.windows[l];
    EpsJump j = rank2_eps_jump(rs, w, window_counts(d, w));
    s.blocks.push_back({')', j.right, l, w.roots.back(), 1, 0});
    s.blocks.push_back({'(', j.left, l, w.roots.front(), 1, 0});
  }
  s.blocks.push_back({')', d.of(alpha), std::nullopt, alpha, 1, 0});
  cancel(s);
  return s;
}

BracketString refined_string(const LusztigDatum& d, const BracketPlan& p) {
  check_plan(d, p);
  const RootId alpha = d.system().simple_id(p.node);
  BracketString s;
  for (std::size_t l = p.windows.size(); l-- > 0;) {
    const Rank2Window& w = p.windows[l];
    auto block = [&](char br, std::size_t k, int mult) {
      s.blocks.push_back({br, mult * d.of(w.roots[k]), l, w.roots[k], mult, 0});
    };
    switch (w.kind) {
      case WindowKind::A2:
        block(')', 1, 1);
        block('(', 0, 1);
        break;
      case WindowKind::B2:
        block(')', 1, 1);
        block('(', 0, 2);
        block(')', 2, 2);
        block('(', 1, 1);
        break;
      case WindowKind::C2:
        block(')', 1, 1);
        block('(', 0, 1);
        block(')', 2, 1);
        block('(', 1, 1);
        break;
    }
  }
  s.blocks.push_back({')', d.of(alpha), std::nullopt, alpha, 1, 0});
  cancel(s);
  return s;
}

std::string render(const RootSystem& rs, const BracketString& s) {
  std::string brackets, labels;
  for (const auto& b : s.blocks) {
    std::string body(static_cast<std::size_t>(b.size), b.bracket);
    std::string label = to_compact(rs.root(b.source));
    if (b.multiplier != 1) label = std::to_string(b.multiplier) + "*" + label;
    const std::size_t width = std::max(body.size(), label.size());
    if (!brackets.empty()) {
      brackets += ' ';
      labels += ' ';
    }
    brackets += body + std::string(width - body.size(), ' ');
    labels += label + std::string(width - label.size(), ' ');
  }
  while (!brackets.empty() && brackets.back() == ' ') brackets.pop_back();
  while (!labels.empty() && labels.back() == ' ') labels.pop_back();
  return brackets + "\n" + labels + "\n";
}

namespace {

// Applies the selected rank-2 operator to a datum stored as counts over `order`.
void act(std::vector<Count>& counts, const ConvexOrder& order, const BracketPlan& p,
         const std::vector<std::vector<std::size_t>>& slots) {
  const RootSystem& rs = order.system();
  const std::size_t alpha_slot = order.position(rs.simple_id(p.node));
  std::vector<Count> signed_sizes;
  for (std::size_t l = p.windows.size(); l-- > 0;) {
    std::vector<Count> c;
    for (std::size_t s : slots[l]) c.push_back(counts[s]);
    c.back() = 0;
    EpsJump j = rank2_eps_jump(rs, p.windows[l], c);
    signed_sizes.push_back(-j.right);
    signed_sizes.push_back(j.left);
  }
  signed_sizes.push_back(-counts[alpha_slot]);
  auto first = cancel_blocks(signed_sizes).first_open;
  if (!first) {
    ++counts[alpha_slot];
    return;
  }
  const std::size_t l = p.windows.size() - 1 - *first / 2;
  std::vector<Count> c;
  for (std::size_t s : slots[l]) c.push_back(counts[s]);
  c.back() = 0;
  std::vector<Count> image = rank2_f(p.windows[l].kind, c);
  if (image.back() != 0) throw Error("rank-2 operator touched alpha_i inside a selected window");
  for (std::size_t k = 0; k + 1 < slots[l].size(); ++k) counts[slots[l][k]] = image[k];
}

std::vector<std::vector<std::size_t>> slots_of(const ConvexOrder& order, const BracketPlan& p) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& w : p.windows) {
    std::vector<std::size_t> s;
    for (RootId id : w.roots) s.push_back(order.position(id));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

LusztigDatum f_bracket(Node i, const LusztigDatum& d, const BracketPlan& p) {
  check_plan(d, p);
  if (p.node != i) throw Error("bracket plan was built for a different node");
  std::vector<Count> counts(d.counts().begin(), d.counts().end());
  act(counts, d.order(), p, slots_of(d.order(), p));
  return LusztigDatum(d.order(), std::move(counts));
}

BracketEngine::BracketEngine(ConvexOrder order) : order_(std::move(order)) {
  for (Node i = 1; i <= order_.system().rank(); ++i) {
    plans_.push_back(plan(order_, i));
    slots_.push_back(plans_.back() ? slots_of(order_, *plans_.back()) : std::vector<std::vector<std::size_t>>{});
  }
}

std::shared_ptr<const BracketEngine> BracketEngine::for_order(const ConvexOrder& order) {
  using Key = std::pair<const RootSystem*, Word>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const BracketEngine>> cache;
  Key key{&order.system(), order.word()};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto engine = std::make_shared<const BracketEngine>(order);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(std::move(key), std::move(engine));
  return it->second;
}

const BracketPlan& BracketEngine::plan_for(Node i) const {
  check_node(order_.system(), i);
  if (!plans_[i - 1]) throw Error(order_.system().label() + " word is not simply braided for node " + std::to_string(i));
  return *plans_[i - 1];
}

std::vector<Count> BracketEngine::f(Node i, std::span<const Count> c) const {
  const BracketPlan& p = plan_for(i);
  if (c.size() != order_.size()) throw Error("count vector does not match the convex order");
  std::vector<Count> counts(c.begin(), c.end());
  act(counts, order_, p, slots_[i - 1]);
  return counts;
}

LusztigDatum f_bracket(Node i, const LusztigDatum& d) {
  return LusztigDatum(d.order(), BracketEngine::for_order(d.order())->f(i, d.counts()));
}

ConvexOrder canonical_word(TypeRank tr) {
  tr = TypeRank::make(tr.letter(), tr.rank);
  const int n = tr.rank;
  Word w;
  switch (tr.family) {
    case Family::A:
      for (int k = n; k >= 1; --k)
        for (Node j = 1; j <= k; ++j) w.push_back(j);
      break;
    case Family::B:
    case Family::C:
      for (Node j = 1; j <= n; ++j) {
        for (Node k = j; k <= n; ++k) w.push_back(k);
        for (Node k = n - 1; k >= j; --k) w.push_back(k);
      }
      break;
    case Family::D:
      for (Node j = 1; j <= n - 2; ++j) {
        for (Node k = j; k <= n; ++k) w.push_back(k);
        for (Node k = n - 2; k >= j; --k) w.push_back(k);
      }
      w.push_back(n - 1);
      w.push_back(n);
      break;
  }
  return ConvexOrder(RootSystem::get(tr), std::move(w));
}

ConvexOrder good_enumeration_word(TypeRank tr, std::span<const Node> enumeration) {
  if (!is_good_enumeration(tr, enumeration)) throw Error("not a good enumeration of " + tr.name());
  return lex_order(RootSystem::get(tr), enumeration);
}

}  // namespace pbw
