#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "monophilic/errors.hpp"
#include "monophilic/gadgets.hpp"
#include "monophilic/graph_enum.hpp"
#include "monophilic/io.hpp"

using namespace monophilic;

TEST(GraphJson, Format) {
  EXPECT_EQ(graph_to_json(build_path(2)), R"({"vertices":3,"edges":[[0,1],[1,2]]})");
  EXPECT_EQ(graph_from_json(R"({"edges":[[2,1],[0,1]],"vertices":3})"), build_path(2));
}

TEST(ListsJson, Format) {
  const ListAssignment l({{2, 1}, {3}});
  EXPECT_EQ(lists_to_json(l), R"({"lists":{"0":[1,2],"1":[3]}})");
  EXPECT_EQ(lists_from_json(R"({"lists":{"1":[3],"0":[2,1]}})", 2), l);
}

TEST(Json, RoundTripsAreByteStable) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_connected_graph(1 + static_cast<int>(rng() % 12), 0.3, rng);
    const std::string text = graph_to_json(g);
    EXPECT_EQ(graph_from_json(text), g);
    EXPECT_EQ(graph_to_json(graph_from_json(text)), text);
  }
  const GadgetInstance l0 = build_L0(3);
  const std::string lists = lists_to_json(l0.lists);
  EXPECT_EQ(lists_from_json(lists, l0.graph.vertex_count()), l0.lists);
  EXPECT_EQ(lists_to_json(lists_from_json(lists, l0.graph.vertex_count())), lists);
}

TEST(Json, Errors) {
  EXPECT_THROW(graph_from_json("{"), InputError);
  EXPECT_THROW(graph_from_json(R"({"vertices":2})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"vertices":2,"edges":[[0]]})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"vertices":2,"edges":[[0,2]]})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"vertices":2,"edges":[[0,0]]})"), InputError);
  EXPECT_THROW(graph_from_json(R"({"vertices":"2","edges":[]})"), InputError);
  EXPECT_THROW(lists_from_json(R"({"lists":{"0":[1]}})", 2), InputError);
  EXPECT_THROW(lists_from_json(R"({"lists":{"0":[1],"1":[2],"2":[3]}})", 2), InputError);
  EXPECT_THROW(lists_from_json(R"({"lists":{"x":[1],"1":[2]}})", 2), InputError);
  EXPECT_THROW(lists_from_json(R"({"lists":{"0":[0],"1":[2]}})", 2), InputError);
  EXPECT_THROW(lists_from_json(R"({"lists":[[1],[2]]})", 2), InputError);
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "monophilic_io_test.json";
  write_text_file(path, graph_to_json(build_cycle(5)));
  EXPECT_EQ(graph_from_json(read_text_file(path)), build_cycle(5));
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file(path), InputError);
}
