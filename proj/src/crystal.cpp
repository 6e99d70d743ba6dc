#include "pbw/crystal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "pbw/error.hpp"

namespace pbw {

CrystalOps::CrystalOps(ConvexOrder order, const Rank2Rules& rules) : order_(std::move(order)), rules_(rules) {
  const RootSystem& rs = order_.system();
  for (Node i = 1; i <= rs.rank(); ++i) {
    front_.push_back(compile_path(order_.system_ptr(), to_front(rs, order_.word(), i)));
    back_.push_back(compile_path(order_.system_ptr(), to_back(rs, order_.word(), opposite_node(rs, i))));
  }
}

std::shared_ptr<const CrystalOps> CrystalOps::for_order(const ConvexOrder& order) {
  using Key = std::pair<const RootSystem*, Word>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const CrystalOps>> cache;
  Key key{&order.system(), order.word()};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto ops = std::make_shared<const CrystalOps>(order);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(std::move(key), std::move(ops));
  return it->second;
}

void CrystalOps::check(Node i, std::span<const Count> c) const {
  if (i < 1 || i > order_.system().rank())
    throw Error("node " + std::to_string(i) + " out of range for " + order_.system().label());
  if (c.size() != order_.size()) throw Error("count vector does not match the convex order");
}

std::vector<Count> CrystalOps::shifted(const CompiledPath& path, std::size_t slot, Count delta,
                                       std::span<const Count> c) const {
  std::vector<Count> out(c.begin(), c.end());
  transport(out, path, rules_);
  out[slot] += delta;
  transport_back(out, path, rules_);
  return out;
}

Count CrystalOps::probe(const CompiledPath& path, std::size_t slot, std::span<const Count> c) const {
  std::vector<Count> out(c.begin(), c.end());
  transport(out, path, rules_);
  return out[slot];
}

std::vector<Count> CrystalOps::f(Node i, std::span<const Count> c) const {
  check(i, c);
  return shifted(front_path(i), 0, 1, c);
}

std::optional<std::vector<Count>> CrystalOps::e(Node i, std::span<const Count> c) const {
  check(i, c);
  if (epsilon(i, c) == 0) return std::nullopt;
  return shifted(front_path(i), 0, -1, c);
}

std::vector<Count> CrystalOps::fstar(Node i, std::span<const Count> c) const {
  check(i, c);
  return shifted(back_path(i), c.size() - 1, 1, c);
}

std::optional<std::vector<Count>> CrystalOps::estar(Node i, std::span<const Count> c) const {
  check(i, c);
  if (epsilon_star(i, c) == 0) return std::nullopt;
  return shifted(back_path(i), c.size() - 1, -1, c);
}

Count CrystalOps::epsilon(Node i, std::span<const Count> c) const {
  check(i, c);
  return probe(front_path(i), 0, c);
}

Count CrystalOps::epsilon_star(Node i, std::span<const Count> c) const {
  check(i, c);
  return probe(back_path(i), c.size() - 1, c);
}

LusztigDatum f(Node i, const LusztigDatum& d) {
  return LusztigDatum(d.order(), CrystalOps::for_order(d.order())->f(i, d.counts()));
}

std::optional<LusztigDatum> e(Node i, const LusztigDatum& d) {
  auto c = CrystalOps::for_order(d.order())->e(i, d.counts());
  if (!c) return std::nullopt;
  return LusztigDatum(d.order(), std::move(*c));
}

LusztigDatum fstar(Node i, const LusztigDatum& d) {
  return LusztigDatum(d.order(), CrystalOps::for_order(d.order())->fstar(i, d.counts()));
}

std::optional<LusztigDatum> estar(Node i, const LusztigDatum& d) {
  auto c = CrystalOps::for_order(d.order())->estar(i, d.counts());
  if (!c) return std::nullopt;
  return LusztigDatum(d.order(), std::move(*c));
}

Count epsilon(Node i, const LusztigDatum& d) { return CrystalOps::for_order(d.order())->epsilon(i, d.counts()); }

Count epsilon_star(Node i, const LusztigDatum& d) {
  return CrystalOps::for_order(d.order())->epsilon_star(i, d.counts());
}

CrystalGraph crystal_graph(const ConvexOrder& order, int depth) {
  if (depth < 0) throw Error("graph depth must be non-negative");
  auto ops = CrystalOps::for_order(order);
  const int n = order.system().rank();
  std::set<std::vector<Count>> seen;
  std::vector<std::tuple<std::vector<Count>, std::vector<Count>, Node>> raw_edges;
  std::vector<std::vector<Count>> frontier{std::vector<Count>(order.size(), 0)};
  seen.insert(frontier.front());
  for (int level = 0; level < depth; ++level) {
    std::vector<std::vector<Count>> next;
    for (const auto& c : frontier) {
      for (Node i = 1; i <= n; ++i) {
        auto image = ops->f(i, c);
        if (seen.insert(image).second) next.push_back(image);
        raw_edges.emplace_back(c, std::move(image), i);
      }
    }
    frontier = std::move(next);
  }
  CrystalGraph g{order, {seen.begin(), seen.end()}, {}};
  auto index = [&](const std::vector<Count>& c) {
    return static_cast<std::size_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), c) - g.vertices.begin());
  };
  for (const auto& [src, dst, i] : raw_edges) g.edges.push_back({index(src), index(dst), i});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace pbw
