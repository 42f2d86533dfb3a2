#include "monophilic/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "monophilic/errors.hpp"

namespace monophilic {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const json& value, const char* what) {
  if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return value.get<int>();
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  ordered_json out;
  out["vertices"] = g.vertex_count();
  auto edges = ordered_json::array();
  for (Edge e : g.edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  return out.dump();
}

Graph graph_from_json(std::string_view text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw InputError("graph JSON needs \"vertices\" and \"edges\"");
  const int n = as_int(doc["vertices"], "\"vertices\"");
  if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair [u, v]");
    edges.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
  }
  return Graph(n, edges);
}

std::string lists_to_json(const ListAssignment& lists) {
  ordered_json body = ordered_json::object();
  for (Vertex v = 0; v < lists.vertex_count(); ++v) body[std::to_string(v)] = lists[v];
  ordered_json out;
  out["lists"] = std::move(body);
  return out.dump();
}

ListAssignment lists_from_json(std::string_view text, int vertex_count) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("lists") || !doc["lists"].is_object())
    throw InputError("list JSON needs a \"lists\" object");
  std::vector<ColorList> lists(static_cast<std::size_t>(vertex_count));
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& [key, value] : doc["lists"].items()) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || v < 0 || v >= vertex_count)
      throw InputError("list key \"" + key + "\" is not a vertex id of the graph");
    if (!value.is_array()) throw InputError("list of vertex " + key + " must be an array");
    for (const auto& c : value) lists[v].push_back(as_int(c, "colour"));
    seen[v] = 1;
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[v]) throw InputError("missing list for vertex " + std::to_string(v));
  return ListAssignment(std::move(lists));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text << '\n';
}

}  // namespace monophilic
