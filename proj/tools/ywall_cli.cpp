// ywall: adjoint crystals, Young walls and path models from the command line.
//
// Exit codes: 0 success, 1 verification failure (or an operator leaving the
// Young walls), 2 usage error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ywall/ywall.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CliError {
  int code;
  std::string message;
};

int exit_code(ywall_status s) {
  switch (s) {
    case YWALL_OK:
    case YWALL_NULL:
      return 0;
    case YWALL_ERR_ARGUMENT:
    case YWALL_ERR_PARSE:
      return kExitUsage;
    case YWALL_ERR_RESOURCE:
      return kExitResource;
    case YWALL_ERR_WALL_CONDITION:
      return kExitFailure;
    case YWALL_ERR_INTERNAL:
      break;
  }
  return kExitFailure;
}

void check(ywall_status s) {
  if (s != YWALL_OK) throw CliError{exit_code(s), std::string(ywall_status_name(s)) + ": " + ywall_last_error()};
}

struct Text {
  char* p = nullptr;
  ~Text() { ywall_string_free(p); }
};

struct GraphDeleter {
  void operator()(ywall_graph* g) const { ywall_graph_free(g); }
};
struct WallDeleter {
  void operator()(ywall_wall* w) const { ywall_wall_free(w); }
};
struct ReportDeleter {
  void operator()(ywall_report* r) const { ywall_report_free(r); }
};
using GraphPtr = std::unique_ptr<ywall_graph, GraphDeleter>;
using WallPtr = std::unique_ptr<ywall_wall, WallDeleter>;
using ReportPtr = std::unique_ptr<ywall_report, ReportDeleter>;

ywall_lambda parse_lambda(const std::string& text) {
  ywall_lambda out{0, 0, 0};
  if (text == "inf" || text == "infinity") {
    out.infinity = 1;
    return out;
  }
  char comma = 0;
  std::istringstream is(text);
  if (!(is >> out.level >> comma >> out.a) || comma != ',' || !is.eof()) {
    throw CliError{kExitUsage, "--lambda expects \"l,a\" or \"inf\", got \"" + text + "\""};
  }
  return out;
}

void print_graph(const ywall_graph* g, const std::string& format) {
  Text t;
  check(ywall_graph_export(g, format.c_str(), &t.p));
  std::cout << t.p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjoint crystals of type A_2^(2), Young walls and path realizations"};
  app.require_subcommand(1);

  int level = 0;
  std::string format = "dot";
  auto* crystal = app.add_subcommand("crystal", "Crystal graph of the level-l adjoint crystal");
  crystal->add_option("--level", level, "Level l >= 1")->required();
  crystal->add_option("--format", format, "dot | json | table")->check(CLI::IsMember({"dot", "json", "table"}));

  std::string lambda_text;
  int depth = 0;
  bool all_walls = false;
  std::size_t cap = 1'000'000;
  unsigned jobs = 1;
  auto* walls = app.add_subcommand("walls", "Young walls on lambda reachable from the ground wall");
  walls->add_option("--lambda", lambda_text, "\"l,a\" for (l-2a)L0 + aL1, or \"inf\"")->required();
  walls->add_option("--depth", depth, "Edge distance from the ground wall")->required()->check(CLI::NonNegativeNumber);
  walls->add_flag("--all-walls", all_walls, "All Young walls within depth block additions, not only reduced ones");
  walls->add_option("--format", format, "dot | json | table")->check(CLI::IsMember({"dot", "json", "table"}));
  walls->add_option("--cap", cap, "Node cap")->check(CLI::PositiveNumber);
  walls->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* paths = app.add_subcommand("paths", "Affine paths reachable from the ground-state path");
  paths->add_option("--lambda", lambda_text, "\"l,a\" or \"inf\"")->required();
  paths->add_option("--depth", depth, "Edge distance from the ground path")->required()->check(CLI::NonNegativeNumber);
  paths->add_option("--format", format, "dot | json | table")->check(CLI::IsMember({"dot", "json", "table"}));
  paths->add_option("--cap", cap, "Node cap")->check(CLI::PositiveNumber);
  paths->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string wall_file;
  std::string ops;
  std::string wall_format = "ascii";
  auto* act = app.add_subcommand("act", "Apply Kashiwara operators to a wall");
  auto* file_opt = act->add_option("--wall", wall_file, "Wall JSON file");
  act->add_option("--lambda", lambda_text, "Start from the ground wall on lambda instead")->excludes(file_opt);
  act->add_option("--ops", ops, "Operators applied left to right, e.g. \"F0 F1 E0\"")->required();
  act->add_option("--format", wall_format, "ascii | json | text")->check(CLI::IsMember({"ascii", "json", "text"}));

  std::string suite;
  std::optional<int> verify_depth;
  std::optional<int> window;
  std::string report_format = "text";
  char* names = nullptr;
  ywall_suite_names(&names);
  std::vector<std::string> suite_list;
  {
    std::istringstream is(names ? names : "");
    for (std::string line; std::getline(is, line);) suite_list.push_back(line);
    ywall_string_free(names);
  }
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_list));
  verify->add_option("--level", level, "Restrict to one level");
  verify->add_option("--lambda", lambda_text, "Restrict to one lambda: \"l,a\" or \"inf\"");
  verify->add_option("--depth", verify_depth, "Depth (suite default when omitted)");
  verify->add_option("--window", window, "Grade window for H-constancy");
  verify->add_option("--cap", cap, "Node cap")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", report_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*crystal) {
      ywall_graph* g = nullptr;
      check(ywall_crystal_graph(level, &g));
      GraphPtr hold(g);
      print_graph(g, format);
      return 0;
    }
    if (*walls || *paths) {
      const ywall_enum_options opts{depth, all_walls ? 0 : 1, cap, jobs};
      ywall_graph* g = nullptr;
      const auto lam = parse_lambda(lambda_text);
      check(*walls ? ywall_wall_graph(lam, &opts, &g) : ywall_path_graph(lam, &opts, &g));
      GraphPtr hold(g);
      print_graph(g, format);
      return 0;
    }
    if (*act) {
      ywall_wall* w = nullptr;
      if (!wall_file.empty()) {
        check(ywall_wall_from_json(read_file(wall_file).c_str(), &w));
      } else if (!lambda_text.empty()) {
        check(ywall_wall_ground(parse_lambda(lambda_text), &w));
      } else {
        throw CliError{kExitUsage, "act needs --wall FILE or --lambda"};
      }
      WallPtr cur(w);
      std::istringstream is(ops);
      int step = 0;
      for (std::string op; is >> op;) {
        ++step;
        ywall_wall* next = nullptr;
        const auto s = ywall_wall_apply(cur.get(), op.c_str(), &next);
        if (s == YWALL_NULL) {
          std::cout << "null\n";
          std::cerr << "step " << step << ": " << ywall_last_error() << "\n";
          return 0;
        }
        check(s);
        cur.reset(next);
      }
      Text t;
      check(ywall_wall_export(cur.get(), wall_format.c_str(), &t.p));
      std::cout << t.p;
      return 0;
    }
    if (*verify) {
      ywall_verify_options opts{};
      opts.level = level;
      opts.depth = verify_depth.value_or(-1);
      opts.window = window.value_or(-1);
      opts.node_cap = cap;
      opts.jobs = jobs;
      if (!lambda_text.empty()) {
        opts.has_lambda = 1;
        opts.lambda = parse_lambda(lambda_text);
      }
      ywall_report* r = nullptr;
      check(ywall_verify(suite.c_str(), &opts, &r));
      ReportPtr hold(r);
      Text t;
      check(ywall_report_json(r, &t.p));
      if (report_format == "json") {
        std::cout << t.p;
      } else {
        const auto report = nlohmann::json::parse(t.p);
        std::cout << suite << ": " << (report.at("passed").get<bool>() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : report.at("checks")) {
          std::cout << "  " << (c.at("passed").get<bool>() ? "pass" : "FAIL") << "  "
                    << c.at("name").get<std::string>();
          const auto detail = c.at("detail").get<std::string>();
          if (!detail.empty()) std::cout << ": " << detail;
          std::cout << "\n";
        }
      }
      return ywall_report_passed(r) ? 0 : kExitFailure;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}
