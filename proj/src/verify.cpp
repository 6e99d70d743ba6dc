#include "pbw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "pbw/bracketing.hpp"
#include "pbw/crystal.hpp"
#include "pbw/error.hpp"
#include "pbw/io.hpp"

namespace pbw {

namespace {

Window3 faulty_a2(Window3 c) {
  Window3 out = transition_a2(c);
  if (c[0] > 1 && c[2] > 1) ++out[1];
  return out;
}

Window4 faulty_b2(Window4 c, bool long_first) {
  Window4 out = transition_b2(c, long_first);
  if (c[0] > 1 && c[3] > 1) ++out[1];
  return out;
}

using Check = std::function<std::optional<std::string>(std::size_t index, std::mt19937_64& rng)>;

std::vector<std::string> sweep(std::size_t cases, const VerifyOptions& opts, const Check& check) {
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cases, 1)));
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::vector<std::string> found;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t k = next++; k < cases; k = next++) {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
        std::mt19937_64 rng(seq);
        if (auto bad = check(k, rng)) {
          std::lock_guard lock(mutex);
          found.push_back(std::move(*bad));
        }
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::sort(found.begin(), found.end());
  return found;
}

template <class Range>
std::string tuple(const Range& r) {
  std::string out = "(";
  bool first = true;
  for (auto v : r) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

std::vector<Count> random_counts(std::size_t n, Count max, std::mt19937_64& rng) {
  std::uniform_int_distribution<Count> pick(0, max);
  std::vector<Count> c(n);
  for (auto& x : c) x = pick(rng);
  return c;
}

std::string datum_text(const ConvexOrder& order, std::span<const Count> c) {
  return datum_to_json(LusztigDatum(order, {c.begin(), c.end()})).dump();
}

VerifyReport rank2_suite(const VerifyOptions& opts, const Rank2Rules& rules) {
  const Count bound = opts.max_count.value_or(8);
  const std::size_t side = static_cast<std::size_t>(bound + 1);
  const std::size_t quads = side * side * side * side;
  const std::size_t triples = side * side * side;
  VerifyReport report;
  report.cases = 2 * quads + triples;
  report.counterexamples = sweep(report.cases, opts, [&](std::size_t k, std::mt19937_64&) -> std::optional<std::string> {
    if (k < 2 * quads) {
      const bool long_first = k >= quads;
      std::size_t x = k % quads;
      Window4 c;
      for (auto& v : c) {
        v = static_cast<Count>(x % side);
        x /= side;
      }
      const Window4 alg = rules.b2(c, long_first);
      const Window4 br = bracket_transition_b2(c, long_first);
      if (alg != br)
        return "b2 long_first=" + std::to_string(long_first) + " counts=" + tuple(c) + " pi=" + tuple(alg) +
               " bracket=" + tuple(br);
      if (rules.b2(alg, !long_first) != c)
        return "b2 not an involution long_first=" + std::to_string(long_first) + " counts=" + tuple(c);
      return std::nullopt;
    }
    std::size_t x = k - 2 * quads;
    Window3 c;
    for (auto& v : c) {
      v = static_cast<Count>(x % side);
      x /= side;
    }
    const Window3 out = rules.a2(c);
    // (b, b+g, g) -> (g, b+g, b): weight coordinates along b and g
    if (c[0] + c[1] != out[2] + out[1] || c[1] + c[2] != out[0] + out[1])
      return "a2 changes the weight counts=" + tuple(c) + " image=" + tuple(out);
    if (rules.a2(out) != c) return "a2 not an involution counts=" + tuple(c);
    return std::nullopt;
  });
  return report;
}

VerifyReport transport_suite(const VerifyOptions& opts, const Rank2Rules& rules) {
  auto rs = RootSystem::get(opts.type);
  const Count bound = opts.max_count.value_or(4);
  VerifyReport report;
  report.cases = opts.samples;
  report.counterexamples = sweep(opts.samples, opts, [&](std::size_t, std::mt19937_64& rng) -> std::optional<std::string> {
    Word u = random_reduced_word(*rs, rng);
    Word v = random_reduced_word(*rs, rng);
    CompiledPath path = compile_path(rs, connect(*rs, u, v));
    ConvexOrder ou(rs, u), ov(rs, v);
    CrystalOps fu(ou, rules), fv(ov, rules);
    auto c = random_counts(ou.size(), bound, rng);
    std::uniform_int_distribution<Node> node(1, rs->rank());
    const Node i = node(rng);

    std::vector<Count> moved = c;
    transport(moved, path, rules);
    if (weight(*rs, ov.sequence(), moved) != weight(*rs, ou.sequence(), c))
      return "transport changes the weight: " + datum_text(ou, c) + " -> word " + format_word(v);
    std::vector<Count> back = moved;
    transport_back(back, path, rules);
    if (back != c) return "transport is not inverted by the reversed path: " + datum_text(ou, c);

    std::vector<Count> lhs = fu.f(i, c);
    transport(lhs, path, rules);
    std::vector<Count> rhs = fv.f(i, moved);
    if (lhs != rhs)
      return "f_" + std::to_string(i) + " does not commute with transport to " + format_word(v) + ": " +
             datum_text(ou, c);
    return std::nullopt;
  });
  return report;
}

VerifyReport bracket_suite(const VerifyOptions& opts, const Rank2Rules& rules) {
  ConvexOrder order = canonical_word(opts.type);
  auto engine = BracketEngine::for_order(order);
  CrystalOps ops(order, rules);
  const Count bound = opts.max_count.value_or(3);
  VerifyReport report;
  report.cases = opts.samples;
  report.counterexamples = sweep(opts.samples, opts, [&](std::size_t, std::mt19937_64& rng) -> std::optional<std::string> {
    auto c = random_counts(order.size(), bound, rng);
    for (Node i = 1; i <= order.system().rank(); ++i) {
      if (engine->f(i, c) != ops.f(i, c))
        return "f_" + std::to_string(i) + " bracket " + tuple(engine->f(i, c)) + " general " + tuple(ops.f(i, c)) +
               " on " + datum_text(order, c);
    }
    return std::nullopt;
  });
  return report;
}

VerifyReport axioms_suite(const VerifyOptions& opts, const Rank2Rules& rules) {
  auto rs = RootSystem::get(opts.type);
  const Count bound = opts.max_count.value_or(4);
  const int n = rs->rank();
  VerifyReport report;
  report.cases = opts.samples;
  report.counterexamples = sweep(opts.samples, opts, [&](std::size_t, std::mt19937_64& rng) -> std::optional<std::string> {
    ConvexOrder order(rs, random_reduced_word(*rs, rng));
    CrystalOps ops(order, rules);
    auto c = random_counts(order.size(), bound, rng);
    const Weight wt = weight(*rs, order.sequence(), c);
    auto fail = [&](const std::string& what) { return what + " on " + datum_text(order, c); };
    for (Node i = 1; i <= n; ++i) {
      const std::string tag = " (i=" + std::to_string(i) + ")";
      auto fi = ops.f(i, c);
      auto fsi = ops.fstar(i, c);
      for (auto* image : {&fi, &fsi}) {
        if (std::any_of(image->begin(), image->end(), [](Count x) { return x < 0; })) return fail("negative count" + tag);
        Weight w2 = weight(*rs, order.sequence(), *image);
        for (Node j = 1; j <= n; ++j)
          if (w2.coeffs[j - 1] != wt.coeffs[j - 1] - (j == i)) return fail("weight of f_i or f_i^* is wrong" + tag);
      }
      if (ops.e(i, fi) != std::optional<std::vector<Count>>(c)) return fail("e_i f_i != id" + tag);
      if (ops.estar(i, fsi) != std::optional<std::vector<Count>>(c)) return fail("e_i^* f_i^* != id" + tag);
      for (Node j = 1; j <= n; ++j) {
        if (j == i) continue;
        if (ops.fstar(i, ops.f(j, c)) != ops.f(j, fsi))
          return fail("f_i^* f_j != f_j f_i^* (j=" + std::to_string(j) + ")" + tag);
      }
      const Count eps = ops.epsilon(i, c);
      const Count eps_star = ops.epsilon_star(i, c);
      const Count value = eps + eps_star + pairing(*rs, i, wt);
      if (value < 0) return fail("eps + eps^* + <h_i, wt> < 0" + tag);
      if (value == 0 && fi != fsi) return fail("f_i != f_i^* at value 0" + tag);
      if (value >= 1 && (ops.epsilon_star(i, fi) != eps_star || ops.epsilon(i, fsi) != eps))
        return fail("epsilon changed across f at value >= 1" + tag);
      if (value >= 2 && ops.f(i, fsi) != ops.fstar(i, fi)) return fail("f_i f_i^* != f_i^* f_i at value >= 2" + tag);
    }
    return std::nullopt;
  });
  return report;
}

VerifyReport convexity_suite(const VerifyOptions& opts) {
  auto rs = RootSystem::get(opts.type);
  Word perm(rs->rank());
  for (int k = 0; k < rs->rank(); ++k) perm[k] = k + 1;
  std::vector<Word> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  VerifyReport report;
  report.cases = perms.size() + opts.samples;
  report.counterexamples = sweep(report.cases, opts, [&](std::size_t k, std::mt19937_64& rng) -> std::optional<std::string> {
    if (k < perms.size()) {
      ConvexOrder o = lex_order(rs, perms[k]);
      if (!is_convex(*rs, o.sequence())) return "lex order of " + format_word(perms[k]) + " is not convex";
      return std::nullopt;
    }
    Word w = random_reduced_word(*rs, rng);
    ConvexOrder o(rs, w);
    if (!is_convex(*rs, o.sequence())) return "order of " + format_word(w) + " is not convex";
    if (word_of_order(*rs, o.sequence()) != w) return "word_of_order does not invert " + format_word(w);
    return std::nullopt;
  });
  return report;
}

}  // namespace

const Rank2Rules& faulty_rules() {
  static const Rank2Rules rules{faulty_a2, faulty_b2};
  return rules;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rank2", "transport", "bracket-agreement", "crystal-axioms", "convexity"};
  return names;
}

VerifyReport run_suite(const VerifyOptions& opts) {
  const Rank2Rules& rules = opts.inject_fault ? faulty_rules() : default_rules();
  VerifyReport report;
  if (opts.suite == "rank2") {
    report = rank2_suite(opts, rules);
  } else if (opts.suite == "transport") {
    report = transport_suite(opts, rules);
  } else if (opts.suite == "bracket-agreement") {
    report = bracket_suite(opts, rules);
  } else if (opts.suite == "crystal-axioms") {
    report = axioms_suite(opts, rules);
  } else if (opts.suite == "convexity") {
    report = convexity_suite(opts);
  } else {
    throw Error("unknown suite '" + opts.suite + "'");
  }
  report.suite = opts.suite;
  report.type = opts.type.name();
  return report;
}

std::string format_report(const VerifyReport& report, std::size_t max_listed) {
  std::ostringstream out;
  out << report.suite << ' ' << report.type << ": " << report.cases << " cases, " << report.counterexamples.size()
      << " violations\n";
  for (std::size_t k = 0; k < report.counterexamples.size() && k < max_listed; ++k)
    out << "  " << report.counterexamples[k] << '\n';
  if (report.counterexamples.size() > max_listed)
    out << "  ... " << report.counterexamples.size() - max_listed << " more\n";
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace pbw
