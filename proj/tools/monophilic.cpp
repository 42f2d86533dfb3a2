// Command-line front end. Exit codes: 0 success, 1 failed verification,
// 2 input error, 3 search budget exhausted.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monophilic/classify2.hpp"
#include "monophilic/errors.hpp"
#include "monophilic/gadgets.hpp"
#include "monophilic/io.hpp"
#include "monophilic/search.hpp"
#include "monophilic/verify.hpp"

using namespace monophilic;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("MONOPHILIC_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("MONOPHILIC_BUDGET is not a number: ") + env);
    }
  }
  return SearchOptions{}.budget;
}

Pin parse_pin(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw InputError("pin must look like v=c, got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, eq)), std::stoi(text.substr(eq + 1))};
  } catch (const std::exception&) {
    throw InputError("pin must look like v=c, got '" + text + "'");
  }
}

Json lists_json(const ListAssignment& lists) { return Json::parse(lists_to_json(lists)); }

void write_outputs(const std::string& prefix, const Graph& g, const ListAssignment* lists) {
  write_text_file(prefix + ".graph.json", graph_to_json(g));
  std::cout << prefix << ".graph.json\n";
  if (lists) {
    write_text_file(prefix + ".lists.json", lists_to_json(*lists));
    std::cout << prefix << ".lists.json\n";
  }
}

struct DecideArgs {
  std::string graph;
  int n = 2;
  std::string mode = "monophilic";
  std::uint64_t budget = 0;
  int threads = 1;
  bool no_prune = false;
};

int decide(const DecideArgs& a) {
  const Graph g = graph_from_json(read_text_file(a.graph));
  SearchOptions options;
  options.budget = a.budget ? a.budget : default_budget();
  options.threads = a.threads;
  options.prune = !a.no_prune;
  Json out;
  out["mode"] = a.mode;
  out["n"] = a.n;
  try {
    if (a.mode == "monophilic") {
      const MonophilicVerdict v = is_monophilic(g, a.n, options);
      out["verdict"] = v.monophilic;
      out["uniform_count"] = v.uniform_count.str();
      out["min_count"] = v.min_count.str();
      out["min_exact"] = v.min_exact;
      out["vacuous"] = v.vacuous;
      if (v.witness) out["witness"] = lists_json(*v.witness);
      out["nodes_visited"] = v.nodes_visited;
    } else if (a.mode == "choosable") {
      const ChoosabilityVerdict v = is_choosable(g, a.n, options);
      out["verdict"] = v.choosable;
      if (v.witness) out["witness"] = lists_json(*v.witness);
      out["nodes_visited"] = v.nodes_visited;
    } else {
      const MinimumResult m = min_colorings(g, a.n, options);
      const Count uniform = col_uniform(g, a.n);
      out["verdict"] = uniform <= m.min_count;
      out["uniform_count"] = uniform.str();
      out["min_count"] = m.min_count.str();
      out["min_exact"] = true;
      out["vacuous"] = uniform == 0;
      out["witness"] = lists_json(m.witness);
      out["nodes_visited"] = m.nodes_visited;
    }
  } catch (const ResourceExhausted& e) {
    out["verdict"] = "unknown";
    out["nodes_visited"] = e.nodes_visited();
    out["error"] = e.what();
    std::cout << out.dump() << "\n";
    return kExitBudget;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int gadget(const std::string& kind, const std::vector<int>& p, const std::string& out) {
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw InputError("gadget " + kind + " takes " + std::to_string(count) + " integer parameter(s)");
  };
  const std::string prefix = out.empty() ? kind : out;
  if (kind == "path") {
    need(1);
    write_outputs(prefix, build_path(p[0]), nullptr);
  } else if (kind == "cycle") {
    need(1);
    write_outputs(prefix, build_cycle(p[0]), nullptr);
  } else if (kind == "complete") {
    need(1);
    write_outputs(prefix, build_complete(p[0]), nullptr);
  } else if (kind == "bipartite") {
    need(2);
    write_outputs(prefix, build_complete_bipartite(p[0], p[1]), nullptr);
  } else if (kind == "theta") {
    need(3);
    write_outputs(prefix, build_theta(p[0], p[1], p[2]), nullptr);
  } else if (kind == "l0") {
    need(1);
    const GadgetInstance g = build_L0(p[0]);
    write_outputs(prefix, g.graph, &g.lists);
  } else if (kind == "lj") {
    need(2);
    const GadgetInstance g = build_L0(p[0]);
    const ListAssignment lists = build_Lj(p[0], p[1]);
    write_outputs(prefix, g.graph, &lists);
  } else if (kind == "h") {
    need(1);
    const HGraph h = build_H(p[0]);
    const ListAssignment lists = build_lemma8_assignment(h.layout);
    write_outputs(prefix, h.graph, &lists);
    Json layout;
    layout["n"] = h.layout.n;
    layout["x"] = h.layout.x.str();
    layout["p"] = h.layout.p;
    layout["v"] = h.layout.v;
    layout["w"] = h.layout.w;
    Json copies = Json::array();
    for (std::size_t i = 0; i < h.layout.copies.size(); ++i) {
      for (std::size_t j = 0; j < h.layout.copies[i].size(); ++j) {
        Json c;
        c["i"] = i + 1;
        c["j"] = j + 1;
        c["a"] = h.layout.copies[i][j].a;
        c["b"] = h.layout.copies[i][j].b;
        copies.push_back(c);
      }
    }
    layout["copies"] = copies;
    write_text_file(prefix + ".layout.json", layout.dump());
    std::cout << prefix << ".layout.json\n";
  } else {
    throw InputError("unknown gadget kind '" + kind + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact list-coloring counts and monophilicity search"};
  app.require_subcommand(1);

  std::string graph_file, lists_file;
  int uniform = 0;
  std::vector<std::string> pins;
  auto* count_cmd = app.add_subcommand("count", "Count colorings of a graph from a list assignment");
  count_cmd->add_option("--graph", graph_file, "Graph JSON file")->required();
  auto* lists_opt = count_cmd->add_option("--lists", lists_file, "List assignment JSON file");
  count_cmd->add_option("--uniform", uniform, "Use {1..n} on every vertex")->excludes(lists_opt);
  count_cmd->add_option("--pin", pins, "Fix vertex v to colour c (v=c), repeatable");

  DecideArgs decide_args;
  auto* decide_cmd = app.add_subcommand("decide", "Decide monophilicity or choosability, or find the minimum");
  decide_cmd->add_option("--graph", decide_args.graph, "Graph JSON file")->required();
  decide_cmd->add_option("--n", decide_args.n, "List size")->required();
  decide_cmd->add_option("--mode", decide_args.mode)
      ->check(CLI::IsMember({"monophilic", "choosable", "minimize"}))
      ->capture_default_str();
  decide_cmd->add_option("--budget", decide_args.budget, "Node budget (default: MONOPHILIC_BUDGET or 1e8)");
  decide_cmd->add_option("--threads", decide_args.threads, "Worker threads, 0 = all cores")->capture_default_str();
  decide_cmd->add_flag("--no-prune", decide_args.no_prune, "Disable branch-and-bound (same answers, slower)");

  std::string classify_graph;
  auto* classify_cmd = app.add_subcommand("classify", "Structural 2-monophilic / 2-choosable test");
  classify_cmd->add_option("--graph", classify_graph, "Graph JSON file")->required();

  std::string probe_graph;
  int n_max = 3;
  std::uint64_t probe_budget = 0;
  auto* probe_cmd = app.add_subcommand("probe", "Monophilic verdicts for n = 1..n-max");
  probe_cmd->add_option("--graph", probe_graph, "Graph JSON file")->required();
  probe_cmd->add_option("--n-max", n_max)->capture_default_str();
  probe_cmd->add_option("--budget", probe_budget, "Node budget per row");

  std::string gadget_kind, gadget_out;
  std::vector<int> gadget_params;
  auto* gadget_cmd = app.add_subcommand("gadget", "Write a graph family or list gadget to JSON files");
  gadget_cmd->add_option("kind", gadget_kind, "path|cycle|complete|bipartite|theta|h|l0|lj")->required();
  gadget_cmd->add_option("params", gadget_params, "Integer parameters");
  gadget_cmd->add_option("--out", gadget_out, "Output prefix (default: the kind)");

  std::string suite = "fast";
  int verify_threads = 1;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance checks");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
  verify_cmd->add_option("--threads", verify_threads)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*count_cmd) {
      const Graph g = graph_from_json(read_text_file(graph_file));
      if (lists_file.empty() && uniform < 1) throw InputError("give --lists or --uniform n with n >= 1");
      const ListAssignment lists = lists_file.empty() ? ListAssignment::uniform(g.vertex_count(), uniform)
                                                      : lists_from_json(read_text_file(lists_file), g.vertex_count());
      std::vector<Pin> parsed;
      for (const auto& text : pins) parsed.push_back(parse_pin(text));
      std::cout << col_pinned(g, lists, parsed).str() << "\n";
      return 0;
    }
    if (*decide_cmd) return decide(decide_args);
    if (*classify_cmd) {
      const Graph g = graph_from_json(read_text_file(classify_graph));
      Json out;
      out["core_shape"] = classify_core_shape(core(g)).to_string();
      out["monophilic_2"] = classify_2_monophilic(g);
      out["choosable_2"] = classify_2_choosable(g);
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*probe_cmd) {
      const Graph g = graph_from_json(read_text_file(probe_graph));
      SearchOptions options;
      options.budget = probe_budget ? probe_budget : default_budget();
      const MonophilicNumberProbe probe = monophilic_number_probe(g, n_max, options);
      for (const ProbeRow& row : probe.rows) {
        Json line;
        line["n"] = row.n;
        line["colorable"] = row.colorable;
        if (row.monophilic) line["monophilic"] = *row.monophilic;
        else line["monophilic"] = "unknown";
        line["vacuous"] = row.vacuous;
        line["nodes_visited"] = row.nodes_visited;
        std::cout << line.dump() << "\n";
      }
      Json summary;
      if (probe.first_definition) summary["first_definition"] = *probe.first_definition;
      else summary["first_definition"] = "unknown";
      summary["second_definition_lower_bound"] = probe.second_definition_lower_bound;
      std::cout << summary.dump() << "\n";
      return 0;
    }
    if (*gadget_cmd) return gadget(gadget_kind, gadget_params, gadget_out);
    if (*verify_cmd) {
      VerifyOptions options;
      options.suite = suite == "full" ? Suite::Full : Suite::Fast;
      options.threads = verify_threads;
      bool failed = false;
      run_suite(options, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        failed = failed || r.status == Status::Fail;
      });
      return failed ? kExitFailed : 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceExhausted& e) {
    std::cerr << "error: " << e.what() << " (" << e.nodes_visited() << " nodes)\n";
    return kExitBudget;
  }
  return 0;
}
