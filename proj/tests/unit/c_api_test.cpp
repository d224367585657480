#include "doctest.h"

#include <cstring>
#include <string>

#include "lec/lec.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  lec_string_free(s);
  return out;
}

lec_graph* parse(const char* text, lec_format format = LEC_FORMAT_EDGE_LIST) {
  lec_graph* g = nullptr;
  REQUIRE(lec_graph_parse(text, std::strlen(text), format, &g) == LEC_OK);
  return g;
}

}  // namespace

TEST_SUITE("c-api") {

TEST_CASE("solve through opaque handles") {
  lec_graph* g = parse("Bw", LEC_FORMAT_GRAPH6);
  CHECK(lec_graph_order(g) == 3);
  CHECK(lec_graph_size(g) == 3);
  lec_options o;
  lec_options_default(&o);
  CHECK(o.max_oracle_edges == 14);
  lec_certificate* c = nullptr;
  REQUIRE(lec_solve(g, &o, &c) == LEC_OK);
  CHECK(lec_certificate_value(c) == 1);
  CHECK(lec_certificate_colour(c, 0) == 1);
  CHECK(lec_certificate_colour(c, 99) == 0);
  char* json = nullptr;
  REQUIRE(lec_certificate_json(c, &json) == LEC_OK);
  CHECK(take(json).find("\"lec\": 1") != std::string::npos);
  lec_certificate_free(c);
  lec_graph_free(g);
}

TEST_CASE("errors come back as codes with a message") {
  lec_graph* g = nullptr;
  const char* dup = "0 1\n0 1\n";
  CHECK(lec_graph_parse(dup, std::strlen(dup), LEC_FORMAT_EDGE_LIST, &g) == LEC_ERR_PARSE);
  CHECK(std::string(lec_last_error()).find("duplicate") != std::string::npos);
  CHECK(g == nullptr);

  const char* two = "0 1\n2 3\n";
  REQUIRE(lec_graph_parse(two, std::strlen(two), LEC_FORMAT_EDGE_LIST, &g) == LEC_OK);
  lec_certificate* c = nullptr;
  CHECK(lec_solve(g, nullptr, &c) == LEC_ERR_PRECONDITION);
  lec_graph_free(g);

  CHECK(lec_solve(nullptr, nullptr, &c) == LEC_ERR_INVALID_ARGUMENT);
  CHECK(lec_graph_generate("nope", nullptr, 0, &g) == LEC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(lec_status_name(LEC_ERR_BUDGET)) == "budget exceeded");
}

TEST_CASE("verify round trip and partial colourings") {
  const int params[] = {3};
  lec_graph* g = nullptr;
  REQUIRE(lec_graph_generate("R", params, 1, &g) == LEC_OK);
  lec_certificate* c = nullptr;
  REQUIRE(lec_solve(g, nullptr, &c) == LEC_OK);
  CHECK(lec_certificate_value(c) == 4);
  char* colouring = nullptr;
  REQUIRE(lec_certificate_colouring_json(c, &colouring) == LEC_OK);
  std::string text = take(colouring);
  int accepted = -1;
  char* report = nullptr;
  REQUIRE(lec_verify_json(g, text.c_str(), &accepted, &report) == LEC_OK);
  CHECK(accepted == 1);
  CHECK(take(report).find("\"accepted\": true") != std::string::npos);

  const char* partial = R"({"edges": [{"u": "x", "v": "y", "c": 1}]})";
  CHECK(lec_verify_json(g, partial, &accepted, nullptr) == LEC_ERR_PARTIAL_COLOURING);
  CHECK(std::string(lec_last_error()).find("no colour") != std::string::npos);
  CHECK(lec_verify_json(g, "{", &accepted, nullptr) == LEC_ERR_PARSE);
  lec_certificate_free(c);
  lec_graph_free(g);
}

TEST_CASE("budget exhaustion in the oracle") {
  const int params[] = {3};
  lec_graph* g = nullptr;
  REQUIRE(lec_graph_generate("R", params, 1, &g) == LEC_OK);
  lec_options o;
  lec_options_default(&o);
  o.budget = 10;
  char* out = nullptr;
  CHECK(lec_oracle_json(g, &o, &out) == LEC_ERR_BUDGET);
  o.budget = 0;
  CHECK(lec_oracle_json(g, &o, &out) == LEC_ERR_INVALID_ARGUMENT);
  lec_graph_free(g);
}

TEST_CASE("json and dot renderings") {
  lec_graph* g = parse("a b\nb c\nc d\n");
  char* out = nullptr;
  REQUIRE(lec_blocks_json(g, &out) == LEC_OK);
  CHECK(take(out).find("\"cut_vertices\"") != std::string::npos);
  REQUIRE(lec_export_dot(g, nullptr, nullptr, 0, &out) == LEC_OK);
  const std::string dot = take(out);
  CHECK(dot.find("\"a\" -- \"b\" [label=\"1\", color=\"#1f77b4\"]") != std::string::npos);
  REQUIRE(lec_export_dot(g, nullptr, nullptr, 1, &out) == LEC_OK);
  CHECK(take(out).find("color") == std::string::npos);
  CHECK(lec_classify_json(g, &out) == LEC_ERR_PRECONDITION);
  REQUIRE(lec_graph_serialize(g, LEC_FORMAT_EDGE_LIST, &out) == LEC_OK);
  CHECK(take(out) == "a b\nb c\nc d\n");
  lec_graph_free(g);
}

TEST_CASE("colours past the palette get labels only") {
  const int params[] = {9};
  lec_graph* g = nullptr;
  REQUIRE(lec_graph_generate("star", params, 1, &g) == LEC_OK);
  char* out = nullptr;
  REQUIRE(lec_export_dot(g, nullptr, nullptr, 0, &out) == LEC_OK);
  const std::string dot = take(out);
  CHECK(dot.find("[label=\"9\"]") != std::string::npos);
  CHECK(dot.find("[label=\"8\", color=\"#17becf\"]") != std::string::npos);
  lec_graph_free(g);
}

}
