// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "pbw/bracketing.hpp"
#include "pbw/crystal.hpp"
#include "pbw/io.hpp"

using namespace pbw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Failures {
 public:
  void add(const std::string& what) {
    std::lock_guard lock(mu_);
    if (++count_ <= 5) samples_.push_back(what);
  }
  std::size_t count() const { return count_; }
  Outcome outcome(std::string summary) const {
    Outcome o{count_ == 0, std::move(summary)};
    if (count_) {
      o.detail += "; " + std::to_string(count_) + " failure(s), e.g.";
      for (const auto& s : samples_) o.detail += "\n      " + s;
    }
    return o;
  }

 private:
  std::mutex mu_;
  std::size_t count_ = 0;
  std::vector<std::string> samples_;
};

void parallel_for(std::size_t total, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < total;) body(k);
    });
  for (auto& t : pool) t.join();
}

std::string show(std::span<const Count> c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

std::vector<Count> counts_of(const LusztigDatum& d) { return {d.counts().begin(), d.counts().end()}; }

std::shared_ptr<const RootSystem> sys(char f, int n) { return RootSystem::get(TypeRank::make(f, n)); }

std::vector<TypeRank> types_up_to_4() {
  std::vector<TypeRank> out;
  for (int n = 1; n <= 4; ++n) out.push_back(TypeRank::make('A', n));
  for (int n = 2; n <= 4; ++n) {
    out.push_back(TypeRank::make('B', n));
    out.push_back(TypeRank::make('C', n));
  }
  out.push_back(TypeRank::make('D', 3));
  out.push_back(TypeRank::make('D', 4));
  return out;
}

std::vector<TypeRank> bracket_types() {
  return {TypeRank::make('A', 2), TypeRank::make('A', 3), TypeRank::make('A', 4), TypeRank::make('B', 2),
          TypeRank::make('B', 3), TypeRank::make('C', 2), TypeRank::make('C', 3), TypeRank::make('D', 4)};
}

LusztigDatum from_partition(const ConvexOrder& o, std::initializer_list<std::pair<const char*, Count>> parts) {
  std::vector<Count> c(o.size(), 0);
  for (auto [root, mult] : parts) c[o.position(*o.system().find(parse_root(root, o.system().rank())))] = mult;
  return LusztigDatum(o, c);
}

Outcome golden(const LusztigDatum& d, Node i, const std::vector<Count>& expect) {
  const auto got = counts_of(f(i, d));
  if (got == expect) return {true, "f_" + std::to_string(i) + " -> " + show(got)};
  return {false, "expected " + show(expect) + ", got " + show(got)};
}

// ---------------------------------------------------------------------------

Outcome c1() {
  LusztigDatum d(ConvexOrder(sys('A', 4), {1, 3, 2, 1, 3, 2, 4, 3, 2, 1}), {1, 1, 5, 3, 2, 3, 4, 0, 1, 1});
  return golden(d, 2, {1, 1, 4, 4, 3, 3, 4, 0, 1, 1});
}

Outcome c2() {
  ConvexOrder o(sys('D', 4), {1, 2, 3, 4, 2, 1, 2, 3, 4, 2, 3, 4});
  LusztigDatum d(o, {2, 1, 4, 2, 1, 3, 3, 1, 2, 1, 2, 0});
  // c_123 = 3, c_1234 = 2, the rest unchanged
  std::vector<Count> expect = counts_of(d);
  expect[o.position(*o.system().find(parse_root("123", 4)))] = 3;
  expect[o.position(*o.system().find(parse_root("1234", 4)))] = 2;
  return golden(d, 4, expect);
}

Outcome c3() {
  ConvexOrder o(sys('C', 3), {1, 2, 3, 2, 1, 2, 3, 2, 3});
  LusztigDatum d(o, {4, 1, 3, 2, 0, 0, 5, 1, 2});
  std::vector<Count> expect = counts_of(d);
  expect[o.position(*o.system().find(parse_root("223", 3)))] = 4;
  expect[o.position(*o.system().find(parse_root("23", 3)))] = 3;
  return golden(d, 3, expect);
}

Outcome c4() {
  ConvexOrder o = canonical_word(TypeRank::make('B', 3));
  LusztigDatum d = from_partition(
      o, {{"1", 4}, {"12", 1}, {"123", 3}, {"1233", 2}, {"12233", 1}, {"23", 5}, {"233", 1}, {"3", 2}});
  LusztigDatum want2 = from_partition(
      o, {{"1", 3}, {"12", 2}, {"123", 3}, {"1233", 2}, {"12233", 1}, {"23", 5}, {"233", 1}, {"3", 2}});
  LusztigDatum want3 = from_partition(
      o, {{"1", 4}, {"12", 1}, {"123", 3}, {"1233", 2}, {"12233", 1}, {"23", 4}, {"233", 2}, {"3", 2}});
  Failures fails;
  auto check = [&](const char* what, const LusztigDatum& got, const LusztigDatum& want) {
    if (!(got == want)) fails.add(std::string(what) + ": expected " + show(want.counts()) + ", got " + show(got.counts()));
  };
  check("f_2 general", f(2, d), want2);
  check("f_2 bracket", f_bracket(2, d), want2);
  check("f_3 general", f(3, d), want3);
  check("f_3 bracket", f_bracket(3, d), want3);
  return fails.outcome("f_2 and f_3, general and bracket");
}

Outcome c5() {
  Failures fails;
  std::size_t cases = 0;
  for (Count a = 0; a <= 8; ++a)
    for (Count b = 0; b <= 8; ++b)
      for (Count c = 0; c <= 8; ++c)
        for (Count d = 0; d <= 8; ++d) {
          const auto p = oracle::b2_pi_move({a, b, c, d});
          // long-first window (L, L+S, L+2S, S); result on the reversed window
          if (bracket_transition_b2({a, b, c, d}, true) != Window4{p[3], p[2], p[1], p[0]})
            fails.add("long-first " + show(std::vector<Count>{a, b, c, d}));
          // short-first window (S, L+2S, L+S, L)
          if (bracket_transition_b2({d, c, b, a}, false) != Window4{p[0], p[1], p[2], p[3]})
            fails.add("short-first " + show(std::vector<Count>{d, c, b, a}));
          cases += 2;
        }
  return fails.outcome(std::to_string(cases) + " cases");
}

Outcome c6() {
  Failures fails;
  std::ostringstream summary;
  for (TypeRank tr : bracket_types()) {
    ConvexOrder o = canonical_word(tr);
    auto engine = BracketEngine::for_order(o);
    auto general = CrystalOps::for_order(o);
    const std::size_t len = o.size();
    double exhaustive = std::pow(3.0, static_cast<double>(len));
    const bool full = exhaustive <= 1e6;
    const std::size_t cases = full ? static_cast<std::size_t>(exhaustive) : 10'000;
    parallel_for(cases, [&](std::size_t k) {
      std::vector<Count> c(len);
      if (full) {
        std::size_t x = k;
        for (auto& v : c) {
          v = static_cast<Count>(x % 3);
          x /= 3;
        }
      } else {
        std::seed_seq seq{std::uint64_t{6}, std::uint64_t{k}};
        std::mt19937_64 rng(seq);
        c = oracle::random_counts(rng, len, 6);
      }
      for (Node i = 1; i <= tr.rank; ++i)
        if (engine->f(i, c) != general->f(i, c)) fails.add(tr.name() + " i=" + std::to_string(i) + " " + show(c));
    });
    summary << tr.name() << ":" << cases << (full ? "" : "r") << " ";
  }
  return fails.outcome(summary.str());
}

Outcome c7() {
  Failures fails;
  std::ostringstream summary;
  std::size_t pop0 = 0, pop1 = 0, pop2 = 0;
  for (TypeRank tr : types_up_to_4()) {
    auto rs = RootSystem::get(tr);
    const int n = tr.rank;
    std::mt19937_64 rng(700 + static_cast<int>(tr.family) * 10 + n);
    for (int s = 0; s < 1000; ++s) {
      ConvexOrder o(rs, random_reduced_word(*rs, rng));
      // alternate dense and sparse data so the conditional items see cases
      std::vector<Count> c = oracle::random_counts(rng, o.size(), 5);
      if (s % 2) {
        std::bernoulli_distribution keep(0.2);
        for (auto& x : c)
          if (!keep(rng)) x = 0;
      }
      LusztigDatum b(o, c);
      const std::string where = tr.name() + " " + format_word(o.word()) + " " + show(c);
      const Weight wt = weight(b);
      for (Node i = 1; i <= n; ++i) {
        const std::string at = where + " i=" + std::to_string(i);
        const LusztigDatum fb = f(i, b), sb = fstar(i, b);
        // (1) f_i b and f_i^* b are genuine elements: e_i undoes f_i
        if (e(i, fb) != std::optional<LusztigDatum>(b) || estar(i, sb) != std::optional<LusztigDatum>(b))
          fails.add("(1) " + at);
        // (2)
        for (Node j = 1; j <= n; ++j)
          if (j != i && !(fstar(i, f(j, b)) == f(j, fstar(i, b)))) fails.add("(2) j=" + std::to_string(j) + " " + at);
        const Count value = epsilon(i, b) + epsilon_star(i, b) + pairing(*rs, i, wt);
        // (3)
        if (value < 0) fails.add("(3) " + at);
        // (4)
        if (value == 0) {
          ++pop0;
          if (!(fb == sb)) fails.add("(4) " + at);
        }
        // (5)
        if (value >= 1) {
          ++pop1;
          if (epsilon_star(i, fb) != epsilon_star(i, b) || epsilon(i, sb) != epsilon(i, b)) fails.add("(5) " + at);
        }
        // (6)
        if (value >= 2) {
          ++pop2;
          if (!(f(i, sb) == fstar(i, fb))) fails.add("(6) " + at);
        }
      }
    }
  }
  summary << types_up_to_4().size() << " types x 1000 data; conditional populations (4):" << pop0 << " (5):" << pop1
          << " (6):" << pop2;
  if (pop0 == 0 || pop1 == 0 || pop2 == 0) fails.add("a conditional subpopulation is empty");
  return fails.outcome(summary.str());
}

Outcome c8() {
  Failures fails;
  std::size_t checks = 0;
  for (TypeRank tr : types_up_to_4()) {
    auto rs = RootSystem::get(tr);
    std::mt19937_64 rng(800 + static_cast<int>(tr.family) * 10 + tr.rank);
    for (int pair = 0; pair < 100; ++pair) {
      Word u = random_reduced_word(*rs, rng), v = random_reduced_word(*rs, rng);
      ConvexOrder ou(rs, u), ov(rs, v);
      const CompiledPath r = compile_path(rs, connect(*rs, u, v));
      auto fu = CrystalOps::for_order(ou);
      auto fv = CrystalOps::for_order(ov);
      for (int s = 0; s < 5; ++s) {
        const std::vector<Count> c = oracle::random_counts(rng, u.size(), 5);
        for (Node i = 1; i <= tr.rank; ++i) {
          std::vector<Count> lhs = fu->f(i, c);
          transport(lhs, r);
          std::vector<Count> rc = c;
          transport(rc, r);
          std::vector<Count> rhs = fv->f(i, rc);
          ++checks;
          if (lhs != rhs)
            fails.add(tr.name() + " u=" + format_word(u) + " v=" + format_word(v) + " i=" + std::to_string(i) + " " +
                      show(c));
        }
      }
    }
  }
  return fails.outcome(std::to_string(checks) + " checks over 100 word pairs per type");
}

Outcome c9() {
  Failures fails;
  std::size_t orders = 0;
  for (auto [f, n] : {std::pair{'A', 3}, std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'D', 4}}) {
    auto rs = sys(f, n);
    Word e(n);
    std::iota(e.begin(), e.end(), 1);
    do {
      ConvexOrder o = lex_order(rs, e);
      std::vector<Root> roots;
      for (std::size_t k = 0; k < o.size(); ++k) roots.push_back(o.root_at(k));
      ++orders;
      if (!is_convex(*rs, o.sequence()) || !oracle::convex(roots))
        fails.add(std::string(1, f) + std::to_string(n) + " " + format_word(e));
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return fails.outcome(std::to_string(orders) + " enumerations");
}

Outcome c10() {
  Failures fails;
  std::size_t pairs = 0;
  for (TypeRank tr : bracket_types()) {
    ConvexOrder o = canonical_word(tr);
    for (Node i = 1; i <= tr.rank; ++i) {
      ++pairs;
      if (!is_simply_braided(o, i)) fails.add("rejected " + tr.name() + " i=" + std::to_string(i));
    }
  }
  ConvexOrder a4(sys('A', 4), {1, 3, 2, 1, 3, 2, 4, 3, 2, 1});
  if (is_simply_braided(a4, 2)) fails.add("accepted A4 (1,3,2,1,3,2,4,3,2,1) i=2");
  return fails.outcome(std::to_string(pairs) + " accepted, 1 rejected");
}

Outcome c11() {
  Failures fails;
  std::ostringstream summary;
  for (auto [f, n] : {std::pair{'A', 3}, std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'D', 4}}) {
    TypeRank tr = TypeRank::make(f, n);
    const auto cd = cartan_data(tr);
    Word e(n);
    std::iota(e.begin(), e.end(), 1);
    std::size_t good = 0;
    do {
      const bool is_good = oracle::good_enumeration(cd, e);
      if (is_good != is_good_enumeration(tr, e)) fails.add("classification differs " + tr.name() + " " + format_word(e));
      if (!is_good) continue;
      ++good;
      ConvexOrder o = good_enumeration_word(tr, e);
      for (Node i = 1; i <= n; ++i)
        if (!is_simply_braided(o, i)) fails.add(tr.name() + " " + format_word(e) + " i=" + std::to_string(i));
    } while (std::next_permutation(e.begin(), e.end()));
    summary << tr.name() << ":" << good << " ";
  }
  return fails.outcome("good enumerations " + summary.str());
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "golden vector A4", 1, c1},
      {2, "golden vector D4", 1, c2},
      {3, "golden vector C3", 1, c3},
      {4, "B3 partition, general and bracket", 1, c4},
      {5, "B2 bracket transition vs min-plus formulas", 10, c5},
      {6, "bracket vs general agreement", 300, c6},
      {7, "crystal axioms", 60, c7},
      {8, "transport equivariance", 120, c8},
      {9, "convexity of lexicographic orders", 60, c9},
      {10, "simply braided classification", 60, c10},
      {11, "good enumerations are simply braided", 120, c11},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s  [%2d] %-44s %8.3f s (limit %g s)%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, in_time ? "" : " TIME LIMIT EXCEEDED", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
