#include "lec/lec.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

#include "lec/classify.hpp"
#include "lec/error.hpp"
#include "lec/families.hpp"
#include "lec/graph_io.hpp"
#include "lec/oracle.hpp"
#include "lec/report.hpp"
#include "lec/solver.hpp"
#include "lec/verify.hpp"

struct lec_graph {
  lec::Graph graph;
};

struct lec_certificate {
  lec::Graph graph;
  lec::LecCertificate cert;
};

namespace {

thread_local std::string last_error;

lec_status status_of(lec::ErrorCode code) {
  switch (code) {
    case lec::ErrorCode::kOk: return LEC_OK;
    case lec::ErrorCode::kParse: return LEC_ERR_PARSE;
    case lec::ErrorCode::kInvalidArgument: return LEC_ERR_INVALID_ARGUMENT;
    case lec::ErrorCode::kPrecondition: return LEC_ERR_PRECONDITION;
    case lec::ErrorCode::kBudgetExceeded: return LEC_ERR_BUDGET;
    case lec::ErrorCode::kPartialColouring: return LEC_ERR_PARTIAL_COLOURING;
    case lec::ErrorCode::kInternal: return LEC_ERR_INTERNAL;
  }
  return LEC_ERR_INTERNAL;
}

lec_status guarded(const std::function<void()>& body) {
  try {
    body();
    last_error.clear();
    return LEC_OK;
  } catch (const lec::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LEC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LEC_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw lec::Error(lec::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

lec::SolverOptions solver_options(const lec_options* o) {
  lec::SolverOptions s;
  if (o) {
    s.max_oracle_edges = o->max_oracle_edges;
    s.budget = o->budget;
    s.workers = o->workers;
  }
  if (s.max_oracle_edges < 0 || s.max_oracle_edges > 64 || s.budget == 0 || s.workers < 1) {
    throw lec::Error(lec::ErrorCode::kInvalidArgument, "options out of range");
  }
  return s;
}

lec::GraphFormat format_of(lec_format f) {
  switch (f) {
    case LEC_FORMAT_EDGE_LIST: return lec::GraphFormat::kEdgeList;
    case LEC_FORMAT_GRAPH6: return lec::GraphFormat::kGraph6;
  }
  throw lec::Error(lec::ErrorCode::kInvalidArgument, "unknown format");
}

lec::Graph generate(const std::string& family, const int* params, int count) {
  auto arg = [&](int i) {
    if (i >= count) throw lec::Error(lec::ErrorCode::kInvalidArgument, family + ": missing parameter");
    return params[i];
  };
  auto expect = [&](int want) {
    if (count != want) {
      throw lec::Error(lec::ErrorCode::kInvalidArgument,
                       family + " takes " + std::to_string(want) + " parameter(s)");
    }
  };
  auto positive = [&](int v, int lo) {
    if (v < lo || v > 64) throw lec::Error(lec::ErrorCode::kInvalidArgument, family + ": parameter out of range");
    return v;
  };
  if (family == "R") { expect(1); return lec::r_t_graph(positive(arg(0), 1)); }
  if (family == "Q") { expect(1); return lec::q_t_graph(positive(arg(0), 1)); }
  if (family == "P") { expect(1); return lec::p_t_graph(positive(arg(0), 1)); }
  if (family == "K") {
    if (count == 1) return lec::complete_graph(positive(arg(0), 1));
    expect(2);
    return lec::complete_bipartite_graph(positive(arg(0), 1), positive(arg(1), 1));
  }
  if (family == "star") { expect(1); return lec::star_graph(positive(arg(0), 1)); }
  if (family == "path") { expect(1); return lec::path_graph(positive(arg(0), 1)); }
  if (family == "cycle") { expect(1); return lec::cycle_graph(positive(arg(0), 3)); }
  if (family == "leafy-cycle") {
    expect(2);
    return lec::leafy_cycle_graph(positive(arg(0), 3), positive(arg(1), 0));
  }
  if (family == "petersen") { expect(0); return lec::petersen_graph(); }
  throw lec::Error(lec::ErrorCode::kInvalidArgument, "unknown family " + family);
}

}  // namespace

extern "C" {

const char* lec_version(void) { return "1.0.0"; }

const char* lec_last_error(void) { return last_error.c_str(); }

const char* lec_status_name(lec_status status) {
  switch (status) {
    case LEC_OK: return "ok";
    case LEC_ERR_PARSE: return "parse error";
    case LEC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LEC_ERR_PRECONDITION: return "precondition violated";
    case LEC_ERR_BUDGET: return "budget exceeded";
    case LEC_ERR_PARTIAL_COLOURING: return "partial colouring";
    case LEC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void lec_string_free(char* s) { std::free(s); }

void lec_options_default(lec_options* options) {
  if (!options) return;
  options->max_oracle_edges = lec::kDefaultOracleMaxEdges;
  options->budget = lec::kDefaultOracleBudget;
  options->workers = 1;
}

lec_status lec_graph_parse(const char* text, size_t length, lec_format format, lec_graph** out) {
  return guarded([&] {
    require(out, "out");
    require(text, "text");
    *out = new lec_graph{lec::load_graph(std::string_view(text, length), format_of(format))};
  });
}

lec_status lec_graph_from_edges(int n, const int* pairs, int m, lec_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 0 || m < 0) throw lec::Error(lec::ErrorCode::kInvalidArgument, "negative size");
    if (m > 0) require(pairs, "pairs");
    std::vector<lec::Edge> edges;
    for (int i = 0; i < m; ++i) edges.push_back({pairs[2 * i], pairs[2 * i + 1]});
    *out = new lec_graph{lec::Graph(n, std::move(edges))};
  });
}

lec_status lec_graph_generate(const char* family, const int* params, int count, lec_graph** out) {
  return guarded([&] {
    require(out, "out");
    require(family, "family");
    if (count < 0 || (count > 0 && !params)) throw lec::Error(lec::ErrorCode::kInvalidArgument, "bad parameters");
    *out = new lec_graph{generate(family, params, count)};
  });
}

void lec_graph_free(lec_graph* g) { delete g; }

int lec_graph_order(const lec_graph* g) { return g ? g->graph.order() : 0; }

int lec_graph_size(const lec_graph* g) { return g ? g->graph.size() : 0; }

lec_status lec_graph_serialize(const lec_graph* g, lec_format format, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_out(lec::serialize(g->graph, format_of(format)));
  });
}

lec_status lec_solve(const lec_graph* g, const lec_options* options, lec_certificate** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const lec::SolverOptions s = solver_options(options);
    *out = new lec_certificate{g->graph, lec::lec(g->graph, s)};
  });
}

void lec_certificate_free(lec_certificate* c) { delete c; }

int lec_certificate_value(const lec_certificate* c) {
  return c && c->cert.value ? *c->cert.value : -1;
}

int lec_certificate_lo(const lec_certificate* c) { return c ? c->cert.lo : 0; }

int lec_certificate_hi(const lec_certificate* c) { return c ? c->cert.hi : 0; }

int lec_certificate_colour(const lec_certificate* c, int edge) {
  if (!c || edge < 0 || edge >= c->cert.colouring.size()) return 0;
  return c->cert.colouring[edge];
}

lec_status lec_certificate_json(const lec_certificate* c, char** out) {
  return guarded([&] {
    require(c, "certificate");
    require(out, "out");
    *out = copy_out(lec::certificate_json(c->graph, c->cert));
  });
}

lec_status lec_certificate_colouring_json(const lec_certificate* c, char** out) {
  return guarded([&] {
    require(c, "certificate");
    require(out, "out");
    *out = copy_out(lec::colouring_json(c->graph, c->cert.colouring));
  });
}

lec_status lec_verify_json(const lec_graph* g, const char* colouring_json, int* accepted, char** report) {
  return guarded([&] {
    require(g, "graph");
    require(colouring_json, "colouring");
    require(accepted, "accepted");
    const lec::EdgeColouring c = lec::colouring_from_json(g->graph, colouring_json);
    const lec::Verification v = lec::verify_loose_connected(g->graph, c);
    *accepted = v.accepted ? 1 : 0;
    if (report) *report = copy_out(lec::verification_json(g->graph, v));
  });
}

lec_status lec_classify_json(const lec_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_out(lec::classification_json(g->graph, lec::classify_small_block(g->graph)));
  });
}

lec_status lec_blocks_json(const lec_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (!lec::is_connected(g->graph) || g->graph.order() < 2) {
      lec::fail_precondition("blocks need a connected graph on at least two vertices");
    }
    *out = copy_out(lec::blocks_json(g->graph));
  });
}

lec_status lec_oracle_json(const lec_graph* g, const lec_options* options, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const lec::SolverOptions s = solver_options(options);
    lec::OracleOptions o;
    o.max_edges = s.max_oracle_edges;
    o.budget = s.budget;
    o.workers = s.workers;
    *out = copy_out(lec::oracle_json(g->graph, lec::oracle_min_colours(g->graph, o)));
  });
}

lec_status lec_export_dot(const lec_graph* g, const char* colouring_json, const lec_options* options, int plain,
                          char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const lec::EdgeColouring c = colouring_json
                                     ? lec::colouring_from_json(g->graph, colouring_json)
                                     : lec::lec(g->graph, solver_options(options)).colouring;
    *out = copy_out(lec::to_dot(g->graph, c, plain ? lec::DotPalette::kPlain : lec::DotPalette::kColour));
  });
}

}  // extern "C"
