#include "gtop/docs.hpp"

#include <fstream>
#include <sstream>

namespace gtop::docs {

using nlohmann::json;

namespace {

int read_carrier(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") ||
      !doc.at("n").is_number_integer())
    throw ParseError("document needs an integer \"n\" field");
  const int n = doc.at("n").get<int>();
  check_carrier_size(n);
  return n;
}

std::vector<std::vector<int>> read_set_lists(const json& arr,
                                             const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + " must be a list");
  std::vector<std::vector<int>> out;
  for (const auto& s : arr) {
    if (!s.is_array())
      throw ParseError(std::string(what) + " entries must be int lists");
    out.push_back(s.get<std::vector<int>>());
  }
  return out;
}

}  // namespace

json space_to_json(const GTSpace& x) {
  json opens = json::array();
  for (word_t w : x.t.words()) {
    json s = json::array();
    for (int e : Subset(w, x.n()).elements()) s.push_back(e);
    opens.push_back(std::move(s));
  }
  return json{{"n", x.n()}, {"opens", std::move(opens)}};
}

GTSpace space_from_json(const json& doc) {
  const int n = read_carrier(doc);
  if (!doc.contains("opens"))
    throw ParseError("space document needs an \"opens\" field");
  const SetFamily fam =
      SetFamily::from_sets(n, read_set_lists(doc.at("opens"), "opens"));
  return GTSpace(validate_topology(fam, n));
}

json group_to_json(const FiniteGroup& g) {
  return json{{"n", g.order()}, {"table", g.rows()}};
}

FiniteGroup group_from_json(const json& doc) {
  const int n = read_carrier(doc);
  if (!doc.contains("table"))
    throw ParseError("group document needs a \"table\" field");
  const auto rows = read_set_lists(doc.at("table"), "table");
  if (static_cast<int>(rows.size()) != n)
    throw ParseError("table must have n rows");
  return validate_group(rows);
}

json map_to_json(const GTMap& f) {
  return json{{"dom", f.dom()}, {"cod", f.cod()}, {"images", f.images()}};
}

GTMap map_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("dom") || !doc.contains("cod") ||
      !doc.contains("images"))
    throw ParseError("map document needs dom, cod and images fields");
  return GTMap(doc.at("dom").get<int>(), doc.at("cod").get<int>(),
               doc.at("images").get<std::vector<int>>());
}

json instance_to_json(const GTopGroup& g) {
  json out = group_to_json(g.group());
  out["opens"] = space_to_json(g.space()).at("opens");
  return out;
}

GTopGroup instance_from_json(const json& doc) {
  FiniteGroup g = group_from_json(doc);
  if (!doc.contains("opens"))
    throw ParseError("instance document needs an \"opens\" field");
  const SetFamily fam = SetFamily::from_sets(
      g.order(), read_set_lists(doc.at("opens"), "opens"));
  GenTopology t = validate_topology(fam, g.order());
  Diagnosis d = check_gtop_group(g, t);
  if (!d.certified()) {
    std::string why;
    if (!d.t2) why = "not T2";
    else if (!d.mult_continuous) why = "multiplication not continuous";
    else why = "inversion not continuous";
    throw ParseError("instance does not certify: " + why);
  }
  return *d.instance;
}

std::string dump_line(const json& doc) { return doc.dump(); }

std::string dump_pretty(const json& doc) { return doc.dump(2) + "\n"; }

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // translate the byte offset into a line number
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(origin + ":" + std::to_string(line) + ": " + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

}  // namespace gtop::docs
