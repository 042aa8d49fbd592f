#include "sposet/poset_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "sposet/error.hpp"

namespace sposet {

nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& label : p.elements()) elements.push_back(label.str());
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.label(a).str(), p.label(b).str()});
  return {{"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.at("elements").is_array()) {
    throw ParseError("poset JSON needs an \"elements\" array");
  }
  std::vector<ElementLabel> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) throw ParseError("poset element labels must be strings");
    elements.push_back(ElementLabel::parse(e.get<std::string>()));
  }
  std::vector<LabelPair> covers;
  if (j.contains("covers")) {
    if (!j.at("covers").is_array()) throw ParseError("\"covers\" must be an array");
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        throw ParseError("each cover must be a pair of label strings");
      }
      covers.emplace_back(ElementLabel::parse(c[0].get<std::string>()),
                          ElementLabel::parse(c[1].get<std::string>()));
    }
  }
  return Poset::from_covers(std::move(elements), covers);
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::vector<std::size_t> level(p.size(), 0);
  if (p.has_unique_minimum()) {
    for (std::size_t i = 0; i < p.size(); ++i) level[i] = p.rank(i);
  } else {
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return kernels::popcount(p.down().row(a)) < kernels::popcount(p.down().row(b));
    });
    for (std::size_t v : order) {
      for (std::size_t l : p.lower_covers(v)) level[v] = std::max(level[v], level[l] + 1);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> by_level;
  for (std::size_t i = 0; i < p.size(); ++i) by_level[level[i]].push_back(i);

  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=" << dot_quote(p.label(i).str()) << "];\n";
  }
  for (const auto& [rank, nodes] : by_level) {
    out << "  { rank=same;";
    for (std::size_t i : nodes) out << " n" << i << ";";
    out << " }\n";
  }
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw ParseError("failed writing '" + path.string() + "'");
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace sposet
