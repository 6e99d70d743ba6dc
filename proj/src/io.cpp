#include "pbw/io.hpp"

#include <charconv>
#include <sstream>

#include "pbw/bracketing.hpp"
#include "pbw/error.hpp"

namespace pbw {

std::string format_word(std::span<const Node> word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto stop = text.find(',', start);
    auto piece = text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    Node v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw Error("malformed word '" + std::string(text) + "'");
    out.push_back(v);
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return out;
}

std::string format_order(const ConvexOrder& order) {
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) out += ' ';
    out += to_compact(order.root_at(k));
  }
  return out;
}

nlohmann::json datum_to_json(const LusztigDatum& d) {
  const auto& type = d.system().type();
  if (!type) throw Error("only classical root systems can be serialized");
  nlohmann::json j;
  j["type"] = std::string(1, type->letter());
  j["rank"] = type->rank;
  j["word"] = d.order().word();
  j["counts"] = std::vector<Count>(d.counts().begin(), d.counts().end());
  return j;
}

LusztigDatum datum_from_json(const nlohmann::json& j) {
  try {
    const auto letter = j.at("type").get<std::string>();
    if (letter.size() != 1) throw Error("datum type must be a single letter");
    const TypeRank tr = TypeRank::make(letter[0], j.at("rank").get<int>());
    auto counts = j.at("counts").get<std::vector<Count>>();
    if (!j.contains("word")) return LusztigDatum(canonical_word(tr), std::move(counts));
    return LusztigDatum(ConvexOrder(RootSystem::get(tr), j.at("word").get<Word>()), std::move(counts));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed datum JSON: ") + ex.what());
  }
}

std::string kostant_text(const LusztigDatum& d) {
  std::string out;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d.at(k) == 0) continue;
    out += to_compact(d.order().root_at(k)) + ' ' + std::to_string(d.at(k)) + '\n';
  }
  return out;
}

LusztigDatum parse_kostant(std::string_view text, const ConvexOrder& order) {
  const RootSystem& rs = order.system();
  std::vector<Count> counts(order.size(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string root;
    if (!(fields >> root)) continue;
    Count mult = 0;
    std::string extra;
    if (!(fields >> mult) || (fields >> extra) || mult < 0) throw Error("malformed Kostant line '" + line + "'");
    auto id = rs.find(parse_root(root, rs.rank()));
    if (!id) throw Error("'" + root + "' is not a positive root of " + rs.label());
    counts[order.position(*id)] += mult;
  }
  return LusztigDatum(order, std::move(counts));
}

namespace {

std::string counts_label(const std::vector<Count>& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(c[k]);
  }
  return out + ")";
}

}  // namespace

std::string graph_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n";
  out += "  // word " + format_word(g.order.word()) + "\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + counts_label(g.vertices[v]) + "\"];\n";
  for (const auto& e : g.edges)
    out += "  v" + std::to_string(e.source) + " -> v" + std::to_string(e.target) + " [label=\"f_" +
           std::to_string(e.label) + "\"];\n";
  out += "}\n";
  return out;
}

nlohmann::json graph_json(const CrystalGraph& g) {
  nlohmann::json j;
  j["word"] = g.order.word();
  j["vertices"] = g.vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"source", e.source}, {"target", e.target}, {"label", e.label}});
  return j;
}

}  // namespace pbw
