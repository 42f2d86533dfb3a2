#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include "monophilic/count.hpp"
#include "monophilic/io.hpp"

using namespace monophilic;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string command = std::string(MONOPHILIC_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe)) r.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("monophilic_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write_graph(const std::string& name, const Graph& g) {
    const auto path = dir_ / (name + ".json");
    write_text_file(path, graph_to_json(g));
    return path.string();
  }
  std::string write_lists(const std::string& name, const ListAssignment& l) {
    const auto path = dir_ / (name + ".json");
    write_text_file(path, lists_to_json(l));
    return path.string();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, Count) {
  EXPECT_EQ(run("count --graph " + write_graph("k23", build_complete_bipartite(2, 3)) + " --uniform 2").out, "2\n");
  const std::string c4 = write_graph("c4", build_cycle(4));
  const std::string remark = write_lists("remark", ListAssignment({{1, 2}, {1, 2}, {2, 3}, {2, 3}}));
  const CliRun r = run("count --graph " + c4 + " --lists " + remark);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(run("count --graph " + write_graph("k2", build_path(1)) + " --uniform 1").out, "0\n");
  EXPECT_EQ(run("count --graph " + c4 + " --uniform 3 --pin 0=1").out, "6\n");
}

TEST_F(Cli, CountErrors) {
  const std::string c4 = write_graph("c4", build_cycle(4));
  EXPECT_EQ(run("count --graph " + c4 + " --uniform 2 --pin 0=5").code, 2);
  EXPECT_EQ(run("count --graph " + c4 + " --uniform 2 --pin zero").code, 2);
  EXPECT_EQ(run("count --graph " + (dir_ / "missing.json").string() + " --uniform 2").code, 2);
  const auto bad = dir_ / "bad.json";
  write_text_file(bad, "{\"vertices\": 2, \"edges\": [[0, 5]]}");
  EXPECT_EQ(run("count --graph " + bad.string() + " --uniform 2").code, 2);
  EXPECT_EQ(run("count --uniform 2").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
}

TEST_F(Cli, Decide) {
  const std::string theta = write_graph("theta", build_theta(2, 2, 4));
  const CliRun m = run("decide --graph " + theta + " --n 2 --mode monophilic");
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("\"verdict\":false"), std::string::npos) << m.out;
  EXPECT_NE(m.out.find("\"min_count\":\"1\""), std::string::npos) << m.out;
  EXPECT_NE(m.out.find("\"uniform_count\":\"2\""), std::string::npos) << m.out;
  EXPECT_NE(m.out.find("\"witness\""), std::string::npos) << m.out;

  const CliRun c5 = run("decide --graph " + write_graph("c5", build_cycle(5)) + " --n 2 --mode choosable");
  EXPECT_NE(c5.out.find("\"verdict\":false"), std::string::npos) << c5.out;
  EXPECT_NE(c5.out.find(R"("witness":{"lists":{"0":[1,2],"1":[1,2],"2":[1,2],"3":[1,2],"4":[1,2]}})"),
            std::string::npos)
      << c5.out;

  const CliRun k23 = run("decide --graph " + write_graph("k23", build_complete_bipartite(2, 3)) +
                      " --n 2 --mode minimize --threads 2 --no-prune");
  EXPECT_EQ(k23.code, 0);
  EXPECT_NE(k23.out.find("\"min_count\":\"2\""), std::string::npos) << k23.out;
}

TEST_F(Cli, DecideBudget) {
  const std::string theta = write_graph("theta", build_theta(2, 2, 4));
  const CliRun r = run("decide --graph " + theta + " --n 2 --budget 5");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("\"verdict\":\"unknown\""), std::string::npos) << r.out;
  setenv("MONOPHILIC_BUDGET", "5", 1);
  const CliRun env = run("decide --graph " + theta + " --n 2");
  unsetenv("MONOPHILIC_BUDGET");
  EXPECT_EQ(env.code, 3);
  EXPECT_EQ(run("decide --graph " + theta + " --n 2 --mode other").code, 2);
}

TEST_F(Cli, ClassifyAndProbe) {
  const CliRun c = run("classify --graph " + write_graph("theta", build_theta(2, 2, 4)));
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("\"monophilic_2\":false"), std::string::npos) << c.out;
  EXPECT_NE(c.out.find("\"choosable_2\":true"), std::string::npos) << c.out;
  const CliRun p = run("probe --graph " + write_graph("c4", build_cycle(4)) + " --n-max 3");
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("\"first_definition\":2"), std::string::npos) << p.out;
  EXPECT_EQ(run("classify --graph " + write_graph("two", disjoint_union(build_vertex(), build_vertex()))).code, 2);
}

TEST_F(Cli, Gadgets) {
  const std::string prefix = (dir_ / "theta").string();
  EXPECT_EQ(run("gadget theta 2 2 4 --out " + prefix).code, 0);
  EXPECT_EQ(graph_from_json(read_text_file(prefix + ".graph.json")).vertex_count(), 7);

  const std::string l0 = (dir_ / "l0").string();
  EXPECT_EQ(run("gadget l0 2 --out " + l0).code, 0);
  EXPECT_EQ(run("count --graph " + l0 + ".graph.json --lists " + l0 + ".lists.json").out, "0\n");
  EXPECT_EQ(graph_from_json(read_text_file(l0 + ".graph.json")), build_complete_bipartite(2, 4));

  const std::string h = (dir_ / "h").string();
  EXPECT_EQ(run("gadget h 2 --out " + h).code, 0);
  const std::string layout = read_text_file(h + ".layout.json");
  EXPECT_NE(layout.find("\"x\":\"80\""), std::string::npos) << layout;
  EXPECT_NE(layout.find("\"p\":26"), std::string::npos) << layout;
  EXPECT_EQ(run("count --graph " + h + ".graph.json --lists " + h + ".lists.json").out, "40960000\n");

  EXPECT_EQ(run("gadget h 1 --out " + h).code, 2);
  EXPECT_EQ(run("gadget theta 2 2 --out " + h).code, 2);
  EXPECT_EQ(run("gadget lj 2 3 --out " + h).code, 2);
  EXPECT_EQ(run("gadget blob 3 --out " + h).code, 2);
}
