#pragma once

#include <string>

#include <json.hpp>

#include "gtop/topgroup.hpp"

namespace gtop::docs {

/// Space document: {"n": int, "opens": [[...], ...]} with each open a sorted
/// int list and the list of opens in ascending bit-pattern order.
nlohmann::json space_to_json(const GTSpace& x);
GTSpace space_from_json(const nlohmann::json& doc);

/// Group document: {"n": int, "table": [[...], ...]}.
nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& doc);

/// Map document: {"dom": int, "cod": int, "images": [...]}.
nlohmann::json map_to_json(const GTMap& f);
GTMap map_from_json(const nlohmann::json& doc);

/// Instance document: group document + space document on one carrier.
/// Parsing re-certifies; an instance that fails certification is rejected.
nlohmann::json instance_to_json(const GTopGroup& g);
GTopGroup instance_from_json(const nlohmann::json& doc);

/// Canonical single-line serialization (sorted keys, no whitespace).
std::string dump_line(const nlohmann::json& doc);

/// Canonical pretty serialization for reports.
std::string dump_pretty(const nlohmann::json& doc);

/// Parses text, reporting the line number on malformed input.
nlohmann::json parse_text(const std::string& text, const std::string& origin);

/// Reads and parses a file (ParseError with file:line on failure).
nlohmann::json load_file(const std::string& path);

}  // namespace gtop::docs
