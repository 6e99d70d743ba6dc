#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pbw/error.hpp"
#include "pbw/rootsys.hpp"

using namespace pbw;

namespace {

std::vector<TypeRank> small_types() {
  std::vector<TypeRank> out;
  for (int n = 1; n <= 6; ++n) out.push_back(TypeRank::make('A', n));
  for (int n = 2; n <= 6; ++n) {
    out.push_back(TypeRank::make('B', n));
    out.push_back(TypeRank::make('C', n));
  }
  for (int n = 3; n <= 7; ++n) out.push_back(TypeRank::make('D', n));
  return out;
}

Root R(std::string_view s, int rank) { return parse_root(s, rank); }

}  // namespace

TEST_CASE("type names and validation") {
  CHECK(TypeRank::parse("d5").name() == "D5");
  CHECK(TypeRank::make('c', 3).family == Family::C);
  CHECK_THROWS_AS(TypeRank::make('B', 1), Error);
  CHECK_THROWS_AS(TypeRank::make('D', 2), Error);
  CHECK_THROWS_AS(TypeRank::make('G', 2), Error);
  CHECK_THROWS_AS(TypeRank::parse("A"), Error);
  CHECK_THROWS_AS(TypeRank::parse("Ax"), Error);
}

TEST_CASE("Cartan data") {
  auto a2 = cartan_data(TypeRank::make('A', 2));
  CHECK(a2.matrix == std::vector<int>{2, -1, -1, 2});
  CHECK(a2.symmetrizer == std::vector<int>{1, 1});

  // alpha_2 short in B2
  auto b2 = cartan_data(TypeRank::make('B', 2));
  CHECK(b2.a(1, 2) == -1);
  CHECK(b2.a(2, 1) == -2);
  CHECK(b2.symmetrizer == std::vector<int>{2, 1});

  // alpha_3 long in C3
  auto c3 = cartan_data(TypeRank::make('C', 3));
  CHECK(c3.a(3, 2) == -1);
  CHECK(c3.a(2, 3) == -2);
  CHECK(c3.symmetrizer == std::vector<int>{1, 1, 2});

  // symmetrizability: d_i a_ij = d_j a_ji
  for (TypeRank tr : small_types()) {
    auto cd = cartan_data(tr);
    for (Node i = 1; i <= tr.rank; ++i)
      for (Node j = 1; j <= tr.rank; ++j) CHECK(cd.d(i) * cd.a(i, j) == cd.d(j) * cd.a(j, i));
  }
}

TEST_CASE("positive roots match the epsilon realization") {
  for (TypeRank tr : small_types()) {
    CAPTURE(tr.name());
    const auto& rs = *RootSystem::get(tr);
    std::set<Root> got(rs.positive_roots().begin(), rs.positive_roots().end());
    CHECK(got == oracle::epsilon_positive_roots(tr));
    CHECK(rs.num_positive() == expected_num_positive(tr));
  }
}

TEST_CASE("root tables: beta/gamma families agree in both coordinate systems") {
  for (TypeRank tr : small_types()) {
    if (tr.family == Family::A) continue;
    CAPTURE(tr.name());
    const int n = tr.rank;
    const auto& rs = *RootSystem::get(tr);
    std::set<Root> all;
    const int beta_top = tr.family == Family::B ? n : n - 1;
    for (int i = 1; i <= n; ++i)
      for (int k = i; k <= beta_top; ++k) {
        CHECK(oracle::beta(tr, i, k) == oracle::beta_eps(tr, i, k));
        all.insert(oracle::beta(tr, i, k));
      }
    for (int i = 1; i <= n; ++i)
      for (int k = tr.family == Family::C ? i : i + 1; k <= n; ++k) {
        CHECK(oracle::gamma(tr, i, k) == oracle::gamma_eps(tr, i, k));
        all.insert(oracle::gamma(tr, i, k));
      }
    CHECK(all == std::set<Root>(rs.positive_roots().begin(), rs.positive_roots().end()));
  }
}

TEST_CASE("specific roots") {
  const auto& a2 = *RootSystem::get(TypeRank::make('A', 2));
  CHECK(a2.num_positive() == 3);
  CHECK(a2.find(R("12", 2)));

  const auto& d4 = *RootSystem::get(TypeRank::make('D', 4));
  CHECK(d4.num_positive() == 12);
  CHECK(d4.find(Root({1, 2, 1, 1})));

  const auto& c3 = *RootSystem::get(TypeRank::make('C', 3));
  CHECK(c3.find(R("11223", 3)));
  CHECK(c3.find(Root({2, 2, 1})));
  CHECK_FALSE(c3.find(Root({1, 2, 2})));
}

TEST_CASE("reflections and forms") {
  const auto& a2 = *RootSystem::get(TypeRank::make('A', 2));
  CHECK(a2.reflect(1, Root::simple(2, 1)) == -Root::simple(2, 1));
  CHECK(a2.reflect(1, Root::simple(2, 2)) == Root({1, 1}));

  const auto& b2 = *RootSystem::get(TypeRank::make('B', 2));
  CHECK(b2.reflect(2, Root::simple(2, 1)) == Root({1, 2}));
  CHECK(b2.bilinear(Root::simple(2, 1), Root::simple(2, 2)) == -2);

  const auto& a4 = *RootSystem::get(TypeRank::make('A', 4));
  CHECK(a4.bilinear(Root::simple(4, 1), Root::simple(4, 3)) == 0);

  for (TypeRank tr : small_types()) {
    const auto& rs = *RootSystem::get(tr);
    const auto cd = rs.cartan();
    for (Node i = 1; i <= tr.rank; ++i) {
      Root ai = Root::simple(tr.rank, i);
      CHECK(rs.bilinear(ai, ai) == 2 * cd.d(i));
      for (const Root& b : rs.positive_roots()) {
        CHECK(rs.bilinear(ai, b) == rs.bilinear(b, ai));
        CHECK(rs.pairing(i, b) * rs.bilinear(ai, ai) == 2 * rs.bilinear(ai, b));
        // s_i permutes the positive roots other than alpha_i
        Root s = rs.reflect(i, b);
        if (b == ai)
          CHECK(s == -ai);
        else
          CHECK(rs.find(s).has_value());
      }
    }
  }
}

TEST_CASE("sum and norm tables") {
  const auto& b3 = *RootSystem::get(TypeRank::make('B', 3));
  for (RootId x = 0; x < b3.num_positive(); ++x) {
    CHECK(b3.norm2(x) == b3.bilinear(b3.root(x), b3.root(x)));
    for (RootId y = 0; y < b3.num_positive(); ++y) {
      auto s = b3.sum(x, y);
      auto direct = b3.find(b3.root(x) + b3.root(y));
      CHECK(s == direct);
    }
  }
}

TEST_CASE("root text forms") {
  Root r({1, 2, 1, 1});
  CHECK(to_compact(r) == "12234");
  CHECK(to_dotted(r) == "1.2.1.1");
  CHECK(parse_root("12234", 4) == r);
  CHECK(parse_root("1.2.1.1", 4) == r);
  CHECK_THROWS_AS(parse_root("19", 4), Error);
  CHECK_THROWS_AS(parse_root("1.2", 4), Error);
  CHECK_THROWS_AS(parse_root("", 4), Error);
}
