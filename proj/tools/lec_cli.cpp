// Command-line front end. Everything goes through the C interface.

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lec/lec.h"

namespace {

enum Exit { kSuccess = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string input = "-";
  std::string format = "edge-list";
  std::string out;
  std::string certificate;
  std::string colouring;
  std::string palette = "colour";
  int max_oracle_edges = 14;
  double budget = 1e8;
  int workers = 1;
  std::string family;
  std::vector<int> params;
};

struct Failure {
  int exit;
};

int exit_for(lec_status s) {
  switch (s) {
    case LEC_OK: return kSuccess;
    case LEC_ERR_BUDGET: return kBudget;
    default: return kUsage;
  }
}

void check(lec_status s) {
  if (s == LEC_OK) return;
  std::cerr << "error: " << lec_status_name(s) << ": " << lec_last_error() << "\n";
  throw Failure{exit_for(s)};
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    throw Failure{kUsage};
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{kUsage};
  }
  out << text;
}

// Takes ownership of a string from the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  lec_string_free(s);
  return out;
}

lec_format format_of(const RunConfig& cfg) {
  return cfg.format == "graph6" ? LEC_FORMAT_GRAPH6 : LEC_FORMAT_EDGE_LIST;
}

using GraphPtr = std::unique_ptr<lec_graph, decltype(&lec_graph_free)>;

GraphPtr load(const RunConfig& cfg) {
  const std::string text = read_source(cfg.input);
  lec_graph* g = nullptr;
  check(lec_graph_parse(text.data(), text.size(), format_of(cfg), &g));
  return GraphPtr(g, &lec_graph_free);
}

lec_options options_of(const RunConfig& cfg) {
  lec_options o;
  lec_options_default(&o);
  o.max_oracle_edges = cfg.max_oracle_edges;
  o.budget = static_cast<uint64_t>(cfg.budget);
  o.workers = cfg.workers;
  return o;
}

int run_lec(const RunConfig& cfg) {
  GraphPtr g = load(cfg);
  const lec_options o = options_of(cfg);
  lec_certificate* cert = nullptr;
  check(lec_solve(g.get(), &o, &cert));
  std::unique_ptr<lec_certificate, decltype(&lec_certificate_free)> owned(cert, &lec_certificate_free);
  char* text = nullptr;
  check(lec_certificate_json(cert, &text));
  write_text(cfg.out, take(text));
  if (!cfg.certificate.empty()) {
    check(lec_certificate_colouring_json(cert, &text));
    write_text(cfg.certificate, take(text));
  }
  return kSuccess;
}

int run_verify(const RunConfig& cfg) {
  GraphPtr g = load(cfg);
  const std::string colouring = read_source(cfg.colouring);
  int accepted = 0;
  char* report = nullptr;
  check(lec_verify_json(g.get(), colouring.c_str(), &accepted, &report));
  write_text(cfg.out, take(report));
  return accepted ? kSuccess : kNegative;
}

int run_classify(const RunConfig& cfg) {
  GraphPtr g = load(cfg);
  char* text = nullptr;
  check(lec_classify_json(g.get(), &text));
  write_text(cfg.out, take(text));
  return kSuccess;
}

int run_blocks(const RunConfig& cfg) {
  GraphPtr g = load(cfg);
  char* text = nullptr;
  check(lec_blocks_json(g.get(), &text));
  write_text(cfg.out, take(text));
  return kSuccess;
}

int run_oracle(const RunConfig& cfg) {
  GraphPtr g = load(cfg);
  const lec_options o = options_of(cfg);
  char* text = nullptr;
  check(lec_oracle_json(g.get(), &o, &text));
  write_text(cfg.out, take(text));
  return kSuccess;
}

int run_export_dot(const RunConfig& cfg) {
  GraphPtr g = load(cfg);
  const lec_options o = options_of(cfg);
  std::string colouring;
  if (!cfg.certificate.empty()) colouring = read_source(cfg.certificate);
  char* text = nullptr;
  check(lec_export_dot(g.get(), cfg.certificate.empty() ? nullptr : colouring.c_str(), &o,
                       cfg.palette == "plain", &text));
  write_text(cfg.out, take(text));
  return kSuccess;
}

int run_gen(const RunConfig& cfg) {
  lec_graph* g = nullptr;
  check(lec_graph_generate(cfg.family.c_str(), cfg.params.data(), static_cast<int>(cfg.params.size()), &g));
  GraphPtr owned(g, &lec_graph_free);
  char* text = nullptr;
  check(lec_graph_serialize(g, format_of(cfg), &text));
  write_text(cfg.out, take(text));
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loose edge-connection number of graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lec_version());
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Graph format")
        ->check(CLI::IsMember({"edge-list", "graph6"}))
        ->capture_default_str();
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", cfg.input, "Graph file, or - for stdin")->required();
    add_format(sub);
    sub->add_option("--out", cfg.out, "Write output here instead of stdout");
  };
  auto add_search = [&](CLI::App* sub, const std::string& cap_flag) {
    sub->add_option(cap_flag, cfg.max_oracle_edges, "Exhaustive search edge cap")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    sub->add_option("--budget", cfg.budget, "Search state budget")
        ->check(CLI::Range(1.0, 1e18))
        ->capture_default_str();
    sub->add_option("--workers", cfg.workers, "Search threads")->check(CLI::Range(1, 256))->capture_default_str();
  };

  CLI::App* lec_cmd = app.add_subcommand("lec", "Compute lec with a verified colouring");
  add_graph(lec_cmd);
  add_search(lec_cmd, "--max-oracle-edges");
  lec_cmd->add_option("--certificate", cfg.certificate, "Also write the colouring JSON here");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check that a colouring is loose edge-connected");
  add_graph(verify_cmd);
  verify_cmd->add_option("colouring", cfg.colouring, "Colouring JSON, or - for stdin")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a 2-connected block");
  add_graph(classify_cmd);

  CLI::App* blocks_cmd = app.add_subcommand("blocks", "Blocks, cut vertices and the cut-edge graph");
  add_graph(blocks_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exact lec by exhaustive search");
  add_graph(oracle_cmd);
  add_search(oracle_cmd, "--max-edges");

  CLI::App* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a colouring");
  add_graph(dot_cmd);
  add_search(dot_cmd, "--max-oracle-edges");
  dot_cmd->add_option("--certificate", cfg.certificate, "Colouring or certificate JSON; solved if absent");
  dot_cmd->add_option("--palette", cfg.palette, "colour or plain")
      ->check(CLI::IsMember({"colour", "plain"}))
      ->capture_default_str();

  CLI::App* gen_cmd = app.add_subcommand("gen", "Emit a reference graph");
  gen_cmd->add_option("family", cfg.family, "R, Q, P, K, star, path, cycle, leafy-cycle, petersen")->required();
  gen_cmd->add_option("params", cfg.params, "Family parameters");
  add_format(gen_cmd);
  gen_cmd->add_option("--out", cfg.out, "Write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }
  if (cfg.budget != std::floor(cfg.budget)) {
    std::cerr << "error: --budget must be a whole number\n";
    return kUsage;
  }

  try {
    if (lec_cmd->parsed()) return run_lec(cfg);
    if (verify_cmd->parsed()) return run_verify(cfg);
    if (classify_cmd->parsed()) return run_classify(cfg);
    if (blocks_cmd->parsed()) return run_blocks(cfg);
    if (oracle_cmd->parsed()) return run_oracle(cfg);
    if (dot_cmd->parsed()) return run_export_dot(cfg);
    if (gen_cmd->parsed()) return run_gen(cfg);
  } catch (const Failure& f) {
    return f.exit;
  }
  return kUsage;
}
