#pragma once

// Text and JSON renderings of words, orders, data and crystal graphs.

#include <string>
#include <string_view>

#include <json.hpp>

#include "pbw/crystal.hpp"

namespace pbw {

// "1,3,2"
std::string format_word(std::span<const Node> word);
Word parse_word(std::string_view text);

// Compact roots separated by single spaces.
std::string format_order(const ConvexOrder& order);

// {"type":"A","rank":4,"word":[...],"counts":[...]}; a missing word means
// the canonical word of the type.
nlohmann::json datum_to_json(const LusztigDatum& d);
LusztigDatum datum_from_json(const nlohmann::json& j);

// One "<root> <multiplicity>" line per root with a nonzero count, in convex
// order.
std::string kostant_text(const LusztigDatum& d);
// Inverse of kostant_text over a given order; repeated roots accumulate and
// blank lines are skipped.
LusztigDatum parse_kostant(std::string_view text, const ConvexOrder& order);

std::string graph_dot(const CrystalGraph& g);
nlohmann::json graph_json(const CrystalGraph& g);

}  // namespace pbw
