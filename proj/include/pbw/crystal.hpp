#pragma once

// Kashiwara operators on B(infinity) in the Lusztig-data model.  For each
// node the datum is pushed along a braid path to a word whose convex order
// starts (or, for the starred operators, ends) with alpha_i, where the
// operator is a unit change of one coordinate, and then pulled back.

#include <memory>
#include <optional>
#include <vector>

#include "pbw/lusztig.hpp"

namespace pbw {

// Paths for one convex order, built eagerly; immutable afterwards.
class CrystalOps {
 public:
  explicit CrystalOps(ConvexOrder order, const Rank2Rules& rules = default_rules());

  // Shared instance for the default rules; safe to call from several threads.
  static std::shared_ptr<const CrystalOps> for_order(const ConvexOrder& order);

  const ConvexOrder& order() const { return order_; }
  const CompiledPath& front_path(Node i) const { return front_[i - 1]; }
  const CompiledPath& back_path(Node i) const { return back_[i - 1]; }

  std::vector<Count> f(Node i, std::span<const Count> c) const;
  std::optional<std::vector<Count>> e(Node i, std::span<const Count> c) const;
  std::vector<Count> fstar(Node i, std::span<const Count> c) const;
  std::optional<std::vector<Count>> estar(Node i, std::span<const Count> c) const;
  Count epsilon(Node i, std::span<const Count> c) const;
  Count epsilon_star(Node i, std::span<const Count> c) const;

 private:
  std::vector<Count> shifted(const CompiledPath& path, std::size_t slot, Count delta, std::span<const Count> c) const;
  Count probe(const CompiledPath& path, std::size_t slot, std::span<const Count> c) const;
  void check(Node i, std::span<const Count> c) const;

  ConvexOrder order_;
  Rank2Rules rules_;
  std::vector<CompiledPath> front_;
  std::vector<CompiledPath> back_;
};

LusztigDatum f(Node i, const LusztigDatum& d);
std::optional<LusztigDatum> e(Node i, const LusztigDatum& d);
LusztigDatum fstar(Node i, const LusztigDatum& d);
std::optional<LusztigDatum> estar(Node i, const LusztigDatum& d);
Count epsilon(Node i, const LusztigDatum& d);
Count epsilon_star(Node i, const LusztigDatum& d);

struct CrystalEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  Node label = 1;
  auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
  ConvexOrder order;
  std::vector<std::vector<Count>> vertices;  // sorted lexicographically
  std::vector<CrystalEdge> edges;            // f_label(source) = target
};

// Everything reachable from the zero datum by at most `depth` applications
// of f_1..f_n.
CrystalGraph crystal_graph(const ConvexOrder& order, int depth);

}  // namespace pbw
