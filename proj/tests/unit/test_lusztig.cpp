#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pbw/error.hpp"
#include "pbw/io.hpp"
#include "pbw/lusztig.hpp"

using namespace pbw;

namespace {

std::shared_ptr<const RootSystem> sys(char f, int n) { return RootSystem::get(TypeRank::make(f, n)); }

const Word ex31_word{1, 3, 2, 1, 3, 2, 4, 3, 2, 1};
const std::vector<Count> ex31_counts{1, 1, 5, 3, 2, 3, 4, 0, 1, 1};

std::vector<Count> counts_of(const LusztigDatum& d) { return {d.counts().begin(), d.counts().end()}; }

std::vector<Root> roots_of(const ConvexOrder& o) {
  std::vector<Root> out;
  for (std::size_t k = 0; k < o.size(); ++k) out.push_back(o.root_at(k));
  return out;
}

}  // namespace

TEST_CASE("datum construction") {
  ConvexOrder o(sys('A', 2), Word{1, 2, 1});
  CHECK_THROWS_AS(LusztigDatum(o, {1, 2}), Error);
  CHECK_THROWS_AS(LusztigDatum(o, {1, -2, 0}), Error);
  LusztigDatum d(o, {4, 5, 6});
  CHECK(d.of(parse_root("12", 2)) == 5);
  CHECK(LusztigDatum::zero(o).counts().size() == 3);
}

TEST_CASE("weights") {
  ConvexOrder o(sys('A', 4), ex31_word);
  CHECK(weight(LusztigDatum::zero(o)).coeffs == std::vector<Count>(4, 0));
  LusztigDatum d(o, ex31_counts);
  CHECK(weight(d).coeffs == oracle::weight_sum(roots_of(o), ex31_counts));

  std::vector<Count> single(10, 0);
  single[o.position(o.system().simple_id(2))] = 1;
  CHECK(weight(LusztigDatum(o, single)).coeffs == std::vector<Count>{0, -1, 0, 0});
  CHECK(pairing(o.system(), 2, Weight{{0, -1, 0, 0}}) == -2);
}

TEST_CASE("sl3 transition") {
  CHECK(transition_a2({1, 5, 3}) == Window3{7, 1, 5});
  CHECK(transition_a2({0, 0, 0}) == Window3{0, 0, 0});
  // root-indexed form of the same map, read in reversed window order
  for (Count x = 0; x <= 6; ++x)
    for (Count y = 0; y <= 6; ++y)
      for (Count z = 0; z <= 6; ++z) {
        auto o = oracle::sl3_move({x, y, z});
        CHECK(transition_a2({x, y, z}) == Window3{o[2], o[1], o[0]});
        CHECK(transition_a2(transition_a2({x, y, z})) == Window3{x, y, z});
      }
}

TEST_CASE("B2 transition against the min-plus formulas") {
  // (c_L, c_{L+S}, c_{L+2S}, c_S) in the long-first window
  CHECK(transition_b2({1, 0, 0, 0}, true) == Window4{0, 0, 0, 1});
  CHECK(transition_b2({0, 0, 0, 0}, true) == Window4{0, 0, 0, 0});
  // C3 window (2, 223, 23, 3): short-first
  CHECK(transition_b2({0, 5, 1, 2}, false) == Window4{6, 0, 2, 7});
  CHECK(bracket_transition_b2({0, 5, 1, 2}, false) == Window4{6, 0, 2, 7});

  for (Count a = 0; a <= 5; ++a)
    for (Count b = 0; b <= 5; ++b)
      for (Count c = 0; c <= 5; ++c)
        for (Count d = 0; d <= 5; ++d) {
          auto p = oracle::b2_pi_move({a, b, c, d});
          // the root-indexed map is an involution, so it also covers the
          // short-first side
          CHECK(oracle::b2_pi_move(p) == std::array<Count, 4>{a, b, c, d});
          CHECK(transition_b2({a, b, c, d}, true) == Window4{p[3], p[2], p[1], p[0]});
          CHECK(transition_b2({d, c, b, a}, false) == Window4{p[0], p[1], p[2], p[3]});
          CHECK(bracket_transition_b2({a, b, c, d}, true) == transition_b2({a, b, c, d}, true));
          CHECK(bracket_transition_b2({a, b, c, d}, false) == transition_b2({a, b, c, d}, false));
        }
}

TEST_CASE("transition_move: weight and involution in rank 2") {
  for (auto [f, w] : {std::pair{'A', Word{1, 2, 1}}, std::pair{'B', Word{1, 2, 1, 2}}, std::pair{'B', Word{2, 1, 2, 1}},
                      std::pair{'C', Word{1, 2, 1, 2}}, std::pair{'C', Word{2, 1, 2, 1}}}) {
    ConvexOrder o(sys(f, 2), w);
    const BraidMove m{0, static_cast<int>(w.size())};
    const std::size_t len = w.size();
    std::vector<Count> c(len, 0);
    // odometer over counts <= 4
    while (true) {
      LusztigDatum d(o, c);
      LusztigDatum moved = transition_move(d, m);
      CHECK(weight(moved) == weight(d));
      CHECK(transition_move(moved, m) == d);
      std::size_t k = 0;
      while (k < len && c[k] == 4) c[k++] = 0;
      if (k == len) break;
      ++c[k];
    }
  }
}

TEST_CASE("transition_move in higher rank") {
  ConvexOrder o(sys('A', 4), ex31_word);
  LusztigDatum d(o, ex31_counts);
  LusztigDatum swapped = transition_move(d, {0, 2});
  CHECK(counts_of(swapped) == ex31_counts);
  CHECK_THROWS_AS(transition_move(d, {1, 2}), Error);

  std::mt19937_64 rng(3);
  for (char f : {'A', 'B', 'C', 'D'}) {
    auto rs = sys(f, 4);
    for (int s = 0; s < 30; ++s) {
      ConvexOrder r(rs, random_reduced_word(*rs, rng));
      LusztigDatum x(r, oracle::random_counts(rng, r.size(), 6));
      for (BraidMove m : available_moves(r)) {
        LusztigDatum y = transition_move(x, m);
        CHECK(weight(y) == weight(x));
        CHECK(transition_move(y, m) == x);
        // counts outside the window do not change, read by root
        for (std::size_t k = 0; k < r.size(); ++k)
          if (k < m.position || k >= m.position + m.arity) CHECK(y.of(r.at(k)) == x.of(r.at(k)));
      }
    }
  }
}

TEST_CASE("the five-step path of the A4 example") {
  ConvexOrder o(sys('A', 4), ex31_word);
  BraidPath path{ex31_word, {}, {{0, 2}, {1, 3}, {3, 3}, {2, 2}, {0, 3}}};
  path.target = replay(path);
  const std::vector<std::vector<Count>> chain = {{1, 1, 5, 3, 2, 3, 4, 0, 1, 1}, {1, 7, 1, 5, 2, 3, 4, 0, 1, 1},
                                                 {1, 7, 1, 2, 3, 4, 4, 0, 1, 1}, {1, 7, 2, 1, 3, 4, 4, 0, 1, 1},
                                                 {8, 1, 7, 1, 3, 4, 4, 0, 1, 1}};
  LusztigDatum d(o, ex31_counts);
  for (std::size_t k = 0; k < path.moves.size(); ++k) {
    d = transition_move(d, path.moves[k]);
    CHECK(counts_of(d) == chain[k]);
  }
  LusztigDatum whole = transition_path(LusztigDatum(o, ex31_counts), path);
  CHECK(whole == d);
  CHECK(counts_of(whole) == std::vector<Count>{8, 1, 7, 1, 3, 4, 4, 0, 1, 1});
  CHECK(transition_path(whole, reversed(path)) == LusztigDatum(o, ex31_counts));
  CHECK(transition_path(whole, BraidPath{whole.order().word(), whole.order().word(), {}}) == whole);
}

TEST_CASE("compiled transport and path independence") {
  std::mt19937_64 rng(21);
  for (char f : {'A', 'B', 'C', 'D'})
    for (int n = f == 'D' ? 4 : 2; n <= 4; ++n) {
      auto rs = sys(f, n);
      for (int s = 0; s < 10; ++s) {
        Word u = random_reduced_word(*rs, rng), v = random_reduced_word(*rs, rng), w = random_reduced_word(*rs, rng);
        LusztigDatum d(ConvexOrder(rs, u), oracle::random_counts(rng, u.size(), 5));
        BraidPath direct = connect(*rs, u, v);
        BraidPath via1 = connect(*rs, u, w), via2 = connect(*rs, w, v);
        LusztigDatum a = transition_path(d, direct);
        LusztigDatum b = transition_path(transition_path(d, via1), via2);
        CHECK(a == b);
        CHECK(weight(a) == weight(d));

        CompiledPath cp = compile_path(rs, direct);
        std::vector<Count> c = counts_of(d);
        transport(c, cp);
        CHECK(c == counts_of(a));
        transport_back(c, cp);
        CHECK(c == counts_of(d));
      }
    }
}
