#include <doctest.h>

#include <cstring>
#include <string>

#include "ywall/ywall.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ywall_string_free(s);
  return out;
}

const char* kExample =
    R"({"lambda":{"l":4,"a":1},"columns":[{"s":7,"sbar":5,"tbar":6},{"s":3,"sbar":7,"tbar":8}]})";

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(ywall_status_name(YWALL_OK)) == "ok");
  CHECK(std::string(ywall_status_name(YWALL_ERR_RESOURCE)) != "ok");
}

TEST_CASE("crystal graph") {
  ywall_graph* g = nullptr;
  REQUIRE(ywall_crystal_graph(4, &g) == YWALL_OK);
  CHECK(ywall_graph_node_count(g) == 15);
  char* text = nullptr;
  REQUIRE(ywall_graph_export(g, "dot", &text) == YWALL_OK);
  CHECK(take(text).rfind("digraph", 0) == 0);
  REQUIRE(ywall_graph_export(g, "json", &text) == YWALL_OK);
  CHECK(take(text).find("\"nodes\"") != std::string::npos);
  CHECK(ywall_graph_export(g, "png", &text) == YWALL_ERR_ARGUMENT);
  CHECK(std::strlen(ywall_last_error()) > 0);
  ywall_graph_free(g);

  CHECK(ywall_crystal_graph(0, &g) == YWALL_ERR_ARGUMENT);
  CHECK(ywall_crystal_graph(4, nullptr) == YWALL_ERR_ARGUMENT);
  ywall_graph_free(nullptr);
}

TEST_CASE("wall and path graphs") {
  const ywall_lambda lam{0, 4, 1};
  ywall_enum_options o{6, 1, 0, 1};
  ywall_graph* walls = nullptr;
  ywall_graph* paths = nullptr;
  REQUIRE(ywall_wall_graph(lam, &o, &walls) == YWALL_OK);
  REQUIRE(ywall_path_graph(lam, &o, &paths) == YWALL_OK);
  CHECK(ywall_graph_node_count(walls) == ywall_graph_node_count(paths));
  CHECK(ywall_graph_edge_count(walls) == ywall_graph_edge_count(paths));
  char* table = nullptr;
  REQUIRE(ywall_graph_export(walls, "table", &table) == YWALL_OK);
  CHECK(take(table).find("1\t2L0+L1\n") != std::string::npos);
  ywall_graph_free(walls);
  ywall_graph_free(paths);

  ywall_enum_options capped{6, 1, 10, 1};
  const ywall_lambda inf{1, 0, 0};
  CHECK(ywall_wall_graph(inf, &capped, &walls) == YWALL_ERR_RESOURCE);
  const ywall_lambda bad{0, 4, 3};
  CHECK(ywall_wall_graph(bad, &o, &walls) == YWALL_ERR_ARGUMENT);
  CHECK(ywall_wall_graph(lam, nullptr, &walls) == YWALL_ERR_ARGUMENT);
}

TEST_CASE("walls") {
  ywall_wall* y = nullptr;
  REQUIRE(ywall_wall_from_json(kExample, &y) == YWALL_OK);
  int cls = -1;
  REQUIRE(ywall_wall_classify(y, &cls) == YWALL_OK);
  CHECK(cls == 1);

  ywall_wall* f0 = nullptr;
  REQUIRE(ywall_wall_apply(y, "F0", &f0) == YWALL_OK);
  char* text = nullptr;
  REQUIRE(ywall_wall_export(f0, "text", &text) == YWALL_OK);
  CHECK(take(text) == "⟨4,0,0⟩⊗⟨7,5,6⟩\n");
  REQUIRE(ywall_wall_export(f0, "ascii", &text) == YWALL_OK);
  CHECK(take(text).find("+-G") != std::string::npos);
  REQUIRE(ywall_wall_export(f0, "json", &text) == YWALL_OK);
  CHECK(take(text).find("\"columns\"") != std::string::npos);
  ywall_wall_free(f0);

  CHECK(ywall_wall_apply(y, "F2", &f0) == YWALL_ERR_ARGUMENT);
  ywall_wall_free(y);

  ywall_wall* g = nullptr;
  REQUIRE(ywall_wall_ground({0, 4, 1}, &g) == YWALL_OK);
  ywall_wall* out = nullptr;
  CHECK(ywall_wall_apply(g, "E0", &out) == YWALL_NULL);
  CHECK(out == nullptr);
  ywall_wall_free(g);

  CHECK(ywall_wall_from_json("{", &y) == YWALL_ERR_PARSE);
  CHECK(ywall_wall_from_json(
            R"({"lambda":{"l":4,"a":1},"columns":[{"s":2,"sbar":4,"tbar":4},{"s":0,"sbar":4,"tbar":6}]})", &y) ==
        YWALL_ERR_WALL_CONDITION);
  CHECK(ywall_wall_from_json(nullptr, &y) == YWALL_ERR_ARGUMENT);
}

TEST_CASE("verification") {
  char* names = nullptr;
  REQUIRE(ywall_suite_names(&names) == YWALL_OK);
  CHECK(take(names).find("iso-lambda") != std::string::npos);

  ywall_verify_options o{2, 0, {0, 0, 0}, -1, -1, 0, 1};
  ywall_report* r = nullptr;
  REQUIRE(ywall_verify("energy-axioms", &o, &r) == YWALL_OK);
  CHECK(ywall_report_passed(r) == 1);
  char* json = nullptr;
  REQUIRE(ywall_report_json(r, &json) == YWALL_OK);
  CHECK(take(json).find("\"suite\": \"energy-axioms\"") != std::string::npos);
  ywall_report_free(r);

  CHECK(ywall_verify("nonsense", &o, &r) == YWALL_ERR_ARGUMENT);
  CHECK(ywall_verify(nullptr, &o, &r) == YWALL_ERR_ARGUMENT);
}
