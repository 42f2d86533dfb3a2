#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "monophilic/count.hpp"
#include "monophilic/graph.hpp"

namespace monophilic {

// {"vertices":N,"edges":[[u,v],...]}, edges sorted, u < v, no whitespace.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

// {"lists":{"0":[1,2],"1":[2,3],...}}, vertices in numeric order, colours ascending.
std::string lists_to_json(const ListAssignment& lists);
// Every vertex 0..vertex_count-1 must appear exactly once.
ListAssignment lists_from_json(std::string_view text, int vertex_count);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace monophilic
