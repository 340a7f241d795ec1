#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "matchbound/bounds.hpp"
#include "matchbound/errors.hpp"
#include "matchbound/graph.hpp"
#include "matchbound/io.hpp"
#include "matchbound/matching.hpp"
#include "matchbound/membership.hpp"
#include "matchbound/star.hpp"
#include "matchbound/transform.hpp"
#include "matchbound/verify.hpp"

namespace matchbound::cli {

// Everything the subcommands consume, as parsed from the command line.
struct CliConfig {
  int d = 0;
  int m = 0;
  int n = 0;
  std::uint32_t seed = 0;
  int n_max = 8;
  int jobs = 1;
  std::string format;
  std::string out_path;
  std::string log_path;
  std::string input_path;
};

namespace detail {

inline std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw io_error("cannot open " + path);
    buffer << file.rdbuf();
    if (file.bad()) throw io_error("read failure on " + path);
  }
  return buffer.str();
}

inline void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot open " + path);
  file << data;
  file.flush();
  if (!file) throw io_error("write failure on " + path);
}

// Report stream: stdout when the graph went to a file, stderr otherwise.
inline std::ostream& report_stream(const std::string& out_path) {
  return (out_path.empty() || out_path == "-") ? std::cerr : std::cout;
}

inline nlohmann::ordered_json edges_json(const std::vector<Edge>& edges) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

inline std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::string render_graph(const Graph& g, const std::string& format) {
  if (format == "dot") return to_dot(g);
  return serialize_edge_list(g);
}

inline int run_bound(const CliConfig& cfg) {
  BoundParams p{cfg.d, cfg.m};
  BoundResult r = extremal_edges(p);
  bool unique = is_extremal_unique(p);
  if (cfg.format == "json") {
    nlohmann::ordered_json out{{"d", cfg.d},
                               {"m", cfg.m},
                               {"value", r.value},
                               {"claws", r.profile.claws},
                               {"dense", r.profile.dense},
                               {"unique", unique}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "value: " << r.value << "\n"
              << "profile: claws=" << r.profile.claws
              << " dense=" << r.profile.dense << "\n"
              << "unique: " << (unique ? "yes" : "no") << "\n";
  }
  return 0;
}

inline int run_construct(const CliConfig& cfg) {
  BoundParams p{cfg.d, cfg.m};
  Graph g = build_extremal(p);
  write_output(cfg.out_path, render_graph(g, cfg.format));
  std::ostream& report = report_stream(cfg.out_path);
  report << "edges: " << g.edge_count() << "\n"
         << "member: "
         << (g.n() <= 64 ? (is_member(g, cfg.d, cfg.m) ? "yes" : "no") : "unchecked")
         << "\n";
  return 0;
}

inline int run_analyze(const CliConfig& cfg) {
  Graph g = parse_edge_list(read_input(cfg.input_path));
  Matching matching = maximum_matching(g);
  StarSet stars = star_set(g, matching);
  ComponentPartition parts = components(g);
  std::vector<int> unsaturated;
  for (int v = 0; v < g.n(); ++v)
    if (!matching.covers(v)) unsaturated.push_back(v);

  if (cfg.format == "json") {
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& comp : parts.sets) {
      Graph sub = induced_subgraph(g, comp);
      comps.push_back({{"vertices", comp},
                       {"factor_critical", is_factor_critical(sub)}});
    }
    nlohmann::ordered_json out{{"vertices", g.n()},
                               {"edges", g.edge_count()},
                               {"max_degree", g.max_degree()},
                               {"matching_number", matching.size()},
                               {"matching", edges_json(matching.edges())},
                               {"unsaturated", unsaturated},
                               {"star_vertices", stars.vertices},
                               {"components", comps}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "vertices: " << g.n() << "\n"
              << "edges: " << g.edge_count() << "\n"
              << "max degree: " << g.max_degree() << "\n"
              << "matching number: " << matching.size() << "\n";
    std::string medges;
    for (const Edge& e : matching.edges()) {
      if (!medges.empty()) medges.push_back(' ');
      medges += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    std::cout << "matching: " << medges << "\n"
              << "unsaturated: " << join_ints(unsaturated) << "\n"
              << "star vertices: " << join_ints(stars.vertices) << "\n";
    for (const auto& comp : parts.sets) {
      Graph sub = induced_subgraph(g, comp);
      std::cout << "component: " << join_ints(comp) << " factor-critical="
                << (is_factor_critical(sub) ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

inline int run_transform(const CliConfig& cfg) {
  Graph g = parse_edge_list(read_input(cfg.input_path));
  TransformResult result = transform(g, cfg.d, cfg.m);
  if (!cfg.log_path.empty()) {
    std::string lines;
    for (const StepRecord& rec : result.state.log) {
      nlohmann::ordered_json row{{"k", rec.step},
                                 {"chosen_v", rec.chosen_vertex},
                                 {"removed_edges", edges_json(rec.removed_edges)},
                                 {"added_edges", edges_json(rec.added_edges)},
                                 {"nu", rec.matching_number},
                                 {"edge_count", rec.edge_count}};
      lines += row.dump();
      lines.push_back('\n');
    }
    write_output(cfg.log_path, lines);
  }
  write_output(cfg.out_path, serialize_edge_list(result.state.graph));
  std::ostream& report = report_stream(cfg.out_path);
  report << "steps: " << result.state.log.size() << "\n"
         << "claws: " << result.decomposition.claw_count << "\n";
  std::string rs;
  for (const FinalComponent& c : result.decomposition.factor_components) {
    if (!rs.empty()) rs.push_back(' ');
    rs += std::to_string(c.matching_number);
  }
  report << "factor components: " << rs << "\n";
  return 0;
}

inline int run_verify(const CliConfig& cfg) {
  BoundParams p{cfg.d, cfg.m};
  VerifyReport report = verify_bound(p, cfg.n_max, cfg.jobs);
  if (cfg.format == "json") {
    nlohmann::ordered_json out{
        {"d", report.degree_cap},
        {"m", report.matching_cap},
        {"formula", report.formula_value},
        {"search", nullptr},
        {"n_max", report.n_max_searched},
        {"regime", report.regime},
        {"witness_edges",
         report.witness ? edges_json(report.witness->edges())
                        : nlohmann::ordered_json::array()},
        {"variants", nullptr},
        {"seeds", report.seeds},
        {"elapsed", report.elapsed_seconds},
        {"violations", report.violations}};
    if (report.search_value) out["search"] = *report.search_value;
    if (report.variant_count) out["variants"] = *report.variant_count;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "d: " << report.degree_cap << "\n"
              << "m: " << report.matching_cap << "\n"
              << "formula: " << report.formula_value << "\n"
              << "regime: " << report.regime << "\n";
    if (report.search_value)
      std::cout << "search: " << *report.search_value << "\n";
    if (report.variant_count)
      std::cout << "variants: " << *report.variant_count << "\n";
    if (!report.seeds.empty())
      std::cout << "seeds: " << report.seeds.size() << "\n";
    for (const std::string& v : report.violations)
      std::cout << "violation: " << v << "\n";
    std::cout << (report.ok() ? "ok" : "FAILED") << "\n";
  }
  return report.ok() ? 0 : 5;
}

inline int run_random(const CliConfig& cfg) {
  BoundParams p{cfg.d, cfg.m};
  Graph g = random_maximal_graph(p, cfg.n, cfg.seed);
  write_output(cfg.out_path, render_graph(g, cfg.format));
  MembershipReport membership = check_membership(g, cfg.d, cfg.m);
  std::ostream& report = report_stream(cfg.out_path);
  report << "edges: " << g.edge_count() << "\n"
         << "matching number: " << membership.matching_value << "\n"
         << "member: " << (membership.member() ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace detail

inline int run(int argc, const char* const* argv) {
  CLI::App app{"bounded-degree bounded-matching extremal graph toolkit"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_params = [&cfg](CLI::App* cmd) {
    cmd->add_option("d", cfg.d, "degree cap (max degree stays below d)")
        ->required();
    cmd->add_option("m", cfg.m, "matching cap (matching number stays below m)")
        ->required();
  };

  CLI::App* bound = app.add_subcommand("bound", "print the exact maximum edge count");
  add_params(bound);
  bound->add_option("--format", cfg.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* construct =
      app.add_subcommand("construct", "emit an extremal witness graph");
  add_params(construct);
  construct->add_option("--format", cfg.format, "edges or dot")
      ->default_val("edges")
      ->check(CLI::IsMember({"edges", "dot"}));
  construct->add_option("--out", cfg.out_path, "output path (default stdout)");

  CLI::App* analyze =
      app.add_subcommand("analyze", "report structure of an edge-list graph");
  analyze->add_option("path", cfg.input_path, "edge-list file, or - for stdin")
      ->required();
  analyze->add_option("--format", cfg.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* transform = app.add_subcommand(
      "transform", "rewire a maximal member into its canonical fixpoint");
  transform->add_option("path", cfg.input_path, "edge-list file, or - for stdin")
      ->required();
  add_params(transform);
  transform->add_option("--out", cfg.out_path, "final graph path (default stdout)");
  transform->add_option("--log", cfg.log_path, "step log path (JSON lines)");

  CLI::App* verify =
      app.add_subcommand("verify", "check the bound by search or sampling");
  add_params(verify);
  verify->add_option("--nmax", cfg.n_max, "exhaustive vertex budget")
      ->default_val(8);
  verify->add_option("--jobs", cfg.jobs, "worker threads")->default_val(1);
  verify->add_option("--format", cfg.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* random =
      app.add_subcommand("random", "generate a random maximal member");
  add_params(random);
  random->add_option("n", cfg.n, "vertex budget")->required();
  random->add_option("seed", cfg.seed, "random seed")->required();
  random->add_option("--format", cfg.format, "edges or dot")
      ->default_val("edges")
      ->check(CLI::IsMember({"edges", "dot"}));
  random->add_option("--out", cfg.out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed()) return detail::run_bound(cfg);
    if (construct->parsed()) return detail::run_construct(cfg);
    if (analyze->parsed()) return detail::run_analyze(cfg);
    if (transform->parsed()) return detail::run_transform(cfg);
    if (verify->parsed()) return detail::run_verify(cfg);
    if (random->parsed()) return detail::run_random(cfg);
  } catch (const argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 2;
}

}  // namespace matchbound::cli
