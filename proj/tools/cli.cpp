#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pbw/bracketing.hpp"
#include "pbw/crystal.hpp"
#include "pbw/error.hpp"
#include "pbw/io.hpp"
#include "pbw/verify.hpp"

namespace pbw::cli {

namespace {

// Raised when e_i or e_i^* returns the null element.
struct NullResult : Error {
  using Error::Error;
};

TypeRank resolve_type(const std::string& type, int rank) {
  if (type.size() > 1) {
    TypeRank tr = TypeRank::parse(type);
    if (rank != 0 && rank != tr.rank) throw Error("--type " + type + " conflicts with --rank " + std::to_string(rank));
    return tr;
  }
  if (type.empty()) throw Error("--type is required");
  if (rank == 0) throw Error("--rank is required");
  return TypeRank::make(type[0], rank);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LusztigDatum load_datum(const std::string& path, const std::string& inline_json) {
  if (path.empty() == inline_json.empty()) throw Error("give exactly one of --datum and --json");
  const std::string text = path.empty() ? inline_json : slurp(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("datum is not valid JSON: ") + ex.what());
  }
  return datum_from_json(j);
}

ConvexOrder order_for(TypeRank tr, const std::string& word, const std::string& enumeration) {
  if (!word.empty() && !enumeration.empty()) throw Error("give at most one of --word and --enum");
  if (!word.empty()) return ConvexOrder(RootSystem::get(tr), parse_word(word));
  if (!enumeration.empty()) {
    Word e = parse_word(enumeration);
    return lex_order(RootSystem::get(tr), e);
  }
  return canonical_word(tr);
}

struct Op {
  std::string name;
  Node node = 0;
};

std::vector<Op> parse_ops(const std::string& text) {
  std::vector<Op> ops;
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    std::size_t digits = token.find_first_of("0123456789");
    if (digits == std::string::npos || digits == 0) throw Error("malformed operator '" + token + "'");
    Op op{token.substr(0, digits), 0};
    if (op.name != "f" && op.name != "e" && op.name != "fstar" && op.name != "estar")
      throw Error("unknown operator '" + token + "'");
    try {
      std::size_t used = 0;
      op.node = std::stoi(token.substr(digits), &used);
      if (used != token.size() - digits) throw Error("");
    } catch (const std::exception&) {
      throw Error("malformed operator '" + token + "'");
    }
    ops.push_back(op);
  }
  return ops;
}

LusztigDatum apply_ops(LusztigDatum d, const std::vector<Op>& ops, bool bracket) {
  const int n = d.system().rank();
  for (const Op& op : ops) {
    if (op.node < 1 || op.node > n)
      throw Error("node " + std::to_string(op.node) + " out of range for " + d.system().label());
    const std::string label = op.name + std::to_string(op.node);
    if (op.name == "f") {
      d = bracket ? f_bracket(op.node, d) : f(op.node, d);
    } else if (op.name == "fstar") {
      d = fstar(op.node, d);
    } else {
      auto r = op.name == "e" ? e(op.node, d) : estar(op.node, d);
      if (!r) throw NullResult(label + " gives the null element");
      d = std::move(*r);
    }
  }
  return d;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystal operators on Lusztig data of classical types"};
  app.require_subcommand(1);

  std::string type, word, enumeration, datum_path, datum_json, ops_text, format, output, method, suite, parse_path;
  int rank = 0, depth = 0, node = 0;
  bool print_word = false, inject_fault = false, refined = false;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  Count max_count = -1;
  unsigned threads = 0;

  auto add_type = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "Cartan type letter (A, B, C, D) or e.g. D4")->required();
    cmd->add_option("--rank", rank, "rank");
  };
  auto add_datum = [&](CLI::App* cmd) {
    cmd->add_option("--datum", datum_path, "datum JSON file");
    cmd->add_option("--json", datum_json, "datum JSON text");
  };

  auto* order_cmd = app.add_subcommand("order", "print the convex order of a word or enumeration");
  add_type(order_cmd);
  order_cmd->add_option("--word", word, "reduced word of w0, comma separated");
  order_cmd->add_option("--enum", enumeration, "node enumeration for the lexicographic order");
  order_cmd->add_flag("--print-word", print_word, "also print the reduced word");

  auto* apply_cmd = app.add_subcommand("apply", "apply crystal operators to a datum");
  add_datum(apply_cmd);
  apply_cmd->add_option("--ops", ops_text, "operators applied left to right, e.g. \"f2 f2 e1 fstar3\"");
  apply_cmd->add_option("--format", format, "json or kostant")->check(CLI::IsMember({"json", "kostant"}));
  apply_cmd->add_option("--method", method, "general or bracket")->check(CLI::IsMember({"general", "bracket"}));

  auto* graph_cmd = app.add_subcommand("graph", "crystal graph near the highest weight");
  add_type(graph_cmd);
  graph_cmd->add_option("--word", word, "reduced word of w0 (default: canonical)");
  graph_cmd->add_option("--depth", depth, "maximal number of f applications")->required();
  graph_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("--output", output, "output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run a property sweep");
  add_type(verify_cmd);
  verify_cmd->add_option("--suite", suite, "rank2, transport, bracket-agreement, crystal-axioms, convexity")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--samples", samples, "number of random samples");
  verify_cmd->add_option("--max-count", max_count, "largest random count");
  verify_cmd->add_option("--threads", threads, "worker threads (0: all cores)");
  verify_cmd->add_flag("--inject-fault", inject_fault, "use corrupted rank-2 rules (harness self-test)");

  auto* kostant_cmd = app.add_subcommand("kostant", "print a datum as a Kostant partition, or parse one");
  add_datum(kostant_cmd);
  kostant_cmd->add_option("--parse", parse_path, "Kostant partition text file to convert to JSON");
  kostant_cmd->add_option("--type", type, "type for --parse");
  kostant_cmd->add_option("--rank", rank, "rank for --parse");
  kostant_cmd->add_option("--word", word, "word for --parse (default: canonical)");

  auto* brackets_cmd = app.add_subcommand("brackets", "show the bracket string for f_i");
  add_datum(brackets_cmd);
  brackets_cmd->add_option("--node", node, "node i")->required();
  brackets_cmd->add_flag("--refined", refined, "per-window refined string");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    if (*order_cmd) {
      ConvexOrder order = order_for(resolve_type(type, rank), word, enumeration);
      out << format_order(order) << '\n';
      if (print_word) out << format_word(order.word()) << '\n';
    } else if (*apply_cmd) {
      LusztigDatum d = apply_ops(load_datum(datum_path, datum_json), parse_ops(ops_text), method == "bracket");
      if (format == "kostant")
        out << kostant_text(d);
      else
        out << datum_to_json(d).dump() << '\n';
    } else if (*graph_cmd) {
      TypeRank tr = resolve_type(type, rank);
      ConvexOrder order = word.empty() ? canonical_word(tr) : ConvexOrder(RootSystem::get(tr), parse_word(word));
      CrystalGraph g = crystal_graph(order, depth);
      write_output(output, format == "json" ? graph_json(g).dump(2) + "\n" : graph_dot(g), out);
    } else if (*verify_cmd) {
      VerifyOptions opts;
      opts.type = resolve_type(type, rank);
      opts.suite = suite;
      opts.seed = seed;
      opts.samples = samples;
      if (max_count >= 0) opts.max_count = max_count;
      opts.inject_fault = inject_fault;
      opts.threads = threads;
      VerifyReport report = run_suite(opts);
      out << format_report(report);
      return report.passed() ? Exit::ok : Exit::verification_failed;
    } else if (*kostant_cmd) {
      if (!parse_path.empty()) {
        TypeRank tr = resolve_type(type, rank);
        ConvexOrder order = word.empty() ? canonical_word(tr) : ConvexOrder(RootSystem::get(tr), parse_word(word));
        out << datum_to_json(parse_kostant(slurp(parse_path), order)).dump() << '\n';
      } else {
        out << kostant_text(load_datum(datum_path, datum_json));
      }
    } else if (*brackets_cmd) {
      LusztigDatum d = load_datum(datum_path, datum_json);
      if (node < 1 || node > d.system().rank()) throw Error("node out of range");
      const BracketPlan& p = BracketEngine::for_order(d.order())->plan_for(node);
      BracketString s = refined ? refined_string(d, p) : bracket_string(d, p);
      out << render(d.system(), s);
      if (s.first_open)
        out << "leftmost unmatched ( in window " << *s.blocks[*s.first_open].window + 1 << " of " << p.windows.size()
            << " (move order)"
            << (refined ? ", root " + to_compact(d.system().root(s.blocks[*s.first_open].source)) : std::string())
            << '\n';
      else
        out << "no unmatched (: f_" << node << " raises c_" << node << '\n';
    }
  } catch (const NullResult& ex) {
    err << ex.what() << '\n';
    return Exit::null_result;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return Exit::usage;
  }
  return Exit::ok;
}

}  // namespace pbw::cli
