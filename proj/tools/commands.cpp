#include "commands.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "dimspec/bounds.hpp"
#include "dimspec/cdim.hpp"
#include "dimspec/eigen.hpp"
#include "dimspec/errors.hpp"
#include "dimspec/graph.hpp"
#include "dimspec/matrix.hpp"
#include "dimspec/oracle.hpp"
#include "dimspec/recognition.hpp"
#include "dimspec/sweep.hpp"

namespace dimspec::cli {

using nlohmann::json;

std::string digest(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xF];
  }
  return out;
}

namespace {

json edges_json(const EdgeSet& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

std::string edges_text(const EdgeSet& edges) {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) s += (i ? " " : "") + to_string(edges[i]);
  return s;
}

json spectrum_json(const Spectrum& s) {
  json groups = json::array();
  for (const auto& g : s.groups()) groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
  return groups;
}

json lower_bound_json(const std::optional<LowerBound>& lb) {
  if (!lb) return {{"applicable", false}, {"reason", "minimum degree is 0"}};
  return {{"applicable", true}, {"raw", lb->raw}, {"value", lb->value}};
}

std::string lower_bound_text(const std::optional<LowerBound>& lb) {
  if (!lb) return "not applicable (minimum degree 0)";
  return std::to_string(lb->value) + " (raw " + format_number(lb->raw) + ")";
}

void emit(std::ostream& out, const std::string& command, const std::string& input, json result) {
  json env = {{"command", command},
              {"input_digest", digest(input)},
              {"result", std::move(result)},
              {"format_version", kFormatVersion}};
  out << env.dump(2) << '\n';
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_mode = false;
};

int cmd_spectra(Context& ctx, const std::string& file, const std::string& kind_text) {
  const auto kind = parse_matrix_kind(kind_text);
  if (!kind) throw InputError("unknown matrix kind '" + kind_text + "' (expected a, l or q)");
  const Graph g = read_graph_file(file);
  const SymMatrix m = matrix(g, *kind);
  JacobiOptions opts;
  opts.compute_vectors = false;
  const Spectrum s = group_spectrum(eig_sym(m, opts).values);
  if (ctx.json_mode) {
    emit(ctx.out, "spectra", serialize_graph(g),
         {{"matrix", to_string(*kind)}, {"order", g.order()}, {"groups", spectrum_json(s)}, {"values", s.values()}});
  } else {
    ctx.out << s.to_string() << '\n';
  }
  return kOk;
}

int cmd_recognize(Context& ctx, const std::string& file) {
  const Graph g = read_graph_file(file);
  const auto cert = recognize_cdim(g);
  std::optional<bool> spectral_agrees;
  if (g.is_connected()) {
    const auto spectral = recognize_cdim_spectral(g);
    spectral_agrees = spectral.has_value() == cert.has_value() && (!cert || spectral->matching == cert->matching);
  }
  if (ctx.json_mode) {
    json result = {{"complete", cert.has_value()}};
    if (cert) {
      result["matching"] = edges_json(cert->matching);
      result["matched"] = cert->matched;
      result["independent"] = cert->independent;
    }
    result["spectral_agrees"] = spectral_agrees ? json(*spectral_agrees) : json(nullptr);
    emit(ctx.out, "recognize", serialize_graph(g), std::move(result));
  } else if (cert) {
    ctx.out << "complete DIM: " << edges_text(cert->matching) << '\n';
  } else {
    ctx.out << "none\n";
  }
  return kOk;
}

int cmd_bounds(Context& ctx, const std::string& file) {
  const Graph g = read_graph_file(file);
  const BoundsReport r = full_report(g);
  if (ctx.json_mode) {
    json window = r.window ? json{{"applicable", true},
                                  {"lo", r.window->lo},
                                  {"hi", r.window->hi},
                                  {"root_lo", r.window->root_lo},
                                  {"root_hi", r.window->root_hi}}
                           : json{{"applicable", false}, {"reason", "n^2 - 4(rho^2 - rho) <= 0"}};
    emit(ctx.out, "bounds", serialize_graph(g),
         {{"conditional", "each bound constrains a DIM of the graph if one exists"},
          {"n", r.n},
          {"edges", r.edges},
          {"min_degree", r.min_degree},
          {"rho_a", r.rho_a},
          {"mu_1", r.mu_1},
          {"q_1", r.q_1},
          {"trace_l", r.trace_l},
          {"trace_q", r.trace_q},
          {"index_inequality", {{"holds", r.index_inequality.holds}, {"equality", r.index_inequality.equality}, {"slack", r.index_inequality.slack}}},
          {"window", std::move(window)},
          {"lb_adjacency", lower_bound_json(r.lb_adjacency)},
          {"lb_laplacian", lower_bound_json(r.lb_laplacian)},
          {"lb_signless", lower_bound_json(r.lb_signless)},
          {"ub_lambda_count",
           {{"value", r.ub_lambda_count},
            {"at_most_minus_one", r.unit_counts.at_most_minus_one},
            {"at_least_one", r.unit_counts.at_least_one}}}});
    return kOk;
  }
  auto& o = ctx.out;
  o << "# bounds hold for any DIM the graph has; they do not assert that one exists\n";
  o << "n: " << r.n << "\n";
  o << "edges: " << r.edges << "\n";
  o << "min degree: " << r.min_degree << "\n";
  o << "rho(A): " << format_number(r.rho_a) << "\n";
  o << "mu_1(L): " << format_number(r.mu_1) << "\n";
  o << "q_1(Q): " << format_number(r.q_1) << "\n";
  o << "tr(L) = tr(Q): " << format_number(r.trace_l) << "\n";
  o << "index inequality (n/2)^2 >= rho(rho-1): " << (r.index_inequality.holds ? "holds" : "fails")
    << (r.index_inequality.equality ? " with equality" : "") << "\n";
  if (r.window) {
    o << "DIM size window: [" << r.window->lo << ", " << r.window->hi << "] (roots "
      << format_number(r.window->root_lo, 6) << ", " << format_number(r.window->root_hi, 6) << ")\n";
  } else {
    o << "DIM size window: not applicable\n";
  }
  o << "adjacency lower bound: " << lower_bound_text(r.lb_adjacency) << "\n";
  o << "laplacian lower bound: " << lower_bound_text(r.lb_laplacian) << "\n";
  o << "signless lower bound: " << lower_bound_text(r.lb_signless) << "\n";
  o << "induced matching upper bound: " << r.ub_lambda_count << " (eigenvalues <= -1: "
    << r.unit_counts.at_most_minus_one << ", >= 1: " << r.unit_counts.at_least_one << ")\n";
  return kOk;
}

int cmd_oracle(Context& ctx, const std::string& file, std::size_t max_edges) {
  const Graph g = read_graph_file(file);
  const OracleResult r = enumerate_dims(g, max_edges);
  if (ctx.json_mode) {
    json dims = json::array();
    for (const auto& m : r.dims) dims.push_back(edges_json(m));
    emit(ctx.out, "oracle", serialize_graph(g),
         {{"dims", std::move(dims)},
          {"max_induced_matching", r.max_induced_matching},
          {"min_dim_size", r.min_dim_size ? json(*r.min_dim_size) : json(nullptr)},
          {"max_dim_size", r.max_dim_size ? json(*r.max_dim_size) : json(nullptr)}});
    return kOk;
  }
  if (r.dims.empty()) {
    ctx.out << "no DIM\n";
  } else {
    ctx.out << "DIMs (" << r.dims.size() << "):\n";
    for (const auto& m : r.dims) ctx.out << "  {" << edges_text(m) << "}\n";
  }
  ctx.out << "max induced matching: " << r.max_induced_matching << "\n";
  return kOk;
}

int cmd_generate(Context& ctx, int m, int s, const std::string& out_file) {
  const Graph g = generate_cdim(m, s);
  const std::string text = serialize_graph(g);
  if (!out_file.empty()) write_graph_file(g, out_file);
  if (ctx.json_mode) {
    emit(ctx.out, "generate", "m=" + std::to_string(m) + " s=" + std::to_string(s),
         {{"m", m}, {"s", s}, {"n", g.order()}, {"edges", g.size()}, {"path", out_file.empty() ? json(nullptr) : json(out_file)}});
  } else if (out_file.empty()) {
    ctx.out << text;
  } else {
    ctx.out << "wrote " << out_file << " (n = " << g.order() << ", " << g.size() << " edges)\n";
  }
  return kOk;
}

int cmd_sweep(Context& ctx, const SweepConfig& config) {
  const SweepReport r = run_sweep(config);
  const bool random = config.mode == SweepMode::Random;
  std::ostringstream cfg;
  cfg << "n=" << config.n << " mode=" << (random ? "random" : "exhaustive");
  if (random) cfg << " count=" << config.count << " p=" << config.edge_probability << " seed=" << config.seed;

  if (ctx.json_mode) {
    json checks = json::object();
    for (std::size_t k = 0; k < kCheckCount; ++k) {
      checks[std::string(to_string(static_cast<Check>(k)))] = {{"evaluated", r.evaluated[k]},
                                                              {"failed", r.failed[k]}};
    }
    json violations = json::array();
    for (const auto& v : r.violations) {
      violations.push_back(
          {{"index", v.index}, {"check", to_string(v.check)}, {"graph", v.graph}, {"detail", v.detail}});
    }
    json config_json = {{"n", config.n}, {"mode", random ? "random" : "exhaustive"}, {"jobs", config.jobs}};
    if (random) {
      config_json["count"] = config.count;
      config_json["edge_probability"] = config.edge_probability;
      config_json["seed"] = config.seed;
    }
    emit(ctx.out, "sweep", cfg.str(),
         {{"config", std::move(config_json)},
          {"graphs", r.graphs},
          {"graphs_with_dim", r.graphs_with_dim},
          {"connected_graphs", r.connected_graphs},
          {"complete_dim_graphs", r.complete_dim_graphs},
          {"index_inequality_equalities", r.index_equalities},
          {"checks", std::move(checks)},
          {"total_violations", r.total_violations()},
          {"violations", std::move(violations)}});
  } else {
    auto& o = ctx.out;
    o << "sweep " << cfg.str() << "\n";
    o << "graphs: " << r.graphs << " (with DIM: " << r.graphs_with_dim << ", connected: " << r.connected_graphs
      << ", complete DIM: " << r.complete_dim_graphs << ")\n";
    for (std::size_t k = 0; k < kCheckCount; ++k) {
      o << "  " << to_string(static_cast<Check>(k)) << ": " << r.evaluated[k] << " checked, " << r.failed[k]
        << " failed\n";
    }
    o << "violations: " << r.total_violations() << "\n";
    for (const auto& v : r.violations) {
      o << "  #" << v.index << " " << to_string(v.check) << " " << v.graph << ": " << v.detail << "\n";
    }
  }
  return r.total_violations() == 0 ? kOk : kViolations;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral tools for dominating induced matchings", "dimspec"};
  app.require_subcommand(1);
  Context ctx{out, err};
  std::function<int()> action;

  std::string file;
  std::string kind_text = "a";
  auto* spectra = app.add_subcommand("spectra", "Grouped spectrum of A, L or Q");
  spectra->add_option("file", file, "Graph edge-list file")->required();
  spectra->add_option("--matrix,-m", kind_text, "a | l | q");
  spectra->add_flag("--json", ctx.json_mode, "Emit a JSON envelope");
  spectra->callback([&] { action = [&] { return cmd_spectra(ctx, file, kind_text); }; });

  auto* recognize = app.add_subcommand("recognize", "Find a complete DIM");
  recognize->add_option("file", file, "Graph edge-list file")->required();
  recognize->add_flag("--json", ctx.json_mode, "Emit a JSON envelope");
  recognize->callback([&] { action = [&] { return cmd_recognize(ctx, file); }; });

  auto* bounds = app.add_subcommand("bounds", "Eigenvalue bounds on the size of a DIM");
  bounds->add_option("file", file, "Graph edge-list file")->required();
  bounds->add_flag("--json", ctx.json_mode, "Emit a JSON envelope");
  bounds->callback([&] { action = [&] { return cmd_bounds(ctx, file); }; });

  std::size_t max_edges = kOracleMaxEdges;
  auto* oracle = app.add_subcommand("oracle", "Enumerate every DIM by brute force");
  oracle->add_option("file", file, "Graph edge-list file")->required();
  oracle->add_option("--max-edges", max_edges, "Refuse graphs with more edges");
  oracle->add_flag("--json", ctx.json_mode, "Emit a JSON envelope");
  oracle->callback([&] { action = [&] { return cmd_oracle(ctx, file, max_edges); }; });

  int gen_m = 0, gen_s = 0;
  std::string out_file;
  auto* generate = app.add_subcommand("generate", "Write the edge list of K_{M,S}");
  generate->add_option("--m", gen_m, "Matching size")->required();
  generate->add_option("--s", gen_s, "Independent set size")->required();
  generate->add_option("out_file", out_file, "Destination (stdout if omitted)");
  generate->add_flag("--json", ctx.json_mode, "Emit a JSON envelope");
  generate->callback([&] { action = [&] { return cmd_generate(ctx, gen_m, gen_s, out_file); }; });

  SweepConfig sweep_cfg;
  std::string mode = "exhaustive";
  auto* sweep = app.add_subcommand("sweep", "Check every bound against brute force on many graphs");
  sweep->add_option("--n", sweep_cfg.n, "Graph order")->required();
  sweep->add_option("--mode", mode, "exhaustive | random")->check(CLI::IsMember({"exhaustive", "random"}));
  sweep->add_option("--seed", sweep_cfg.seed, "Random stream seed");
  sweep->add_option("--count", sweep_cfg.count, "Random graphs to draw");
  sweep->add_option("--p", sweep_cfg.edge_probability, "Edge probability (random mode)");
  sweep->add_option("--jobs", sweep_cfg.jobs, "Worker threads");
  sweep->add_flag("--json", ctx.json_mode, "Emit a JSON envelope");
  sweep->callback([&] {
    sweep_cfg.mode = mode == "random" ? SweepMode::Random : SweepMode::Exhaustive;
    action = [&] { return cmd_sweep(ctx, sweep_cfg); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace dimspec::cli
