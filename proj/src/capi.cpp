#include "ywall/ywall.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ywall/adjoint.hpp"
#include "ywall/error.hpp"
#include "ywall/graph.hpp"
#include "ywall/paths.hpp"
#include "ywall/serialize.hpp"
#include "ywall/verify.hpp"
#include "ywall/youngwall.hpp"

struct ywall_graph {
  ywall::CrystalGraph graph;
  std::string name;
};

struct ywall_wall {
  ywall::Wall wall;
};

struct ywall_report {
  ywall::SuiteReport report;
};

namespace {

thread_local std::string last_error;

ywall_status fail(ywall_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
ywall_status guarded(Fn fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const ywall::ParseError& e) {
    return fail(YWALL_ERR_PARSE, e.what());
  } catch (const ywall::ResourceLimitError& e) {
    return fail(YWALL_ERR_RESOURCE, e.what());
  } catch (const ywall::DomainError& e) {
    return fail(YWALL_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(YWALL_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(YWALL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(YWALL_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ywall::Lambda to_lambda(const ywall_lambda& l) {
  if (l.infinity) return ywall::Lambda::infinity();
  return ywall::Lambda::finite(l.level, l.a);
}

ywall::ComponentOptions component_options(const ywall_enum_options* opts) {
  ywall::ComponentOptions o;
  o.direction = ywall::Direction::kDown;
  o.depth = opts->depth;
  if (opts->depth < 0) throw ywall::DomainError("depth must be non-negative");
  if (opts->node_cap) o.node_cap = opts->node_cap;
  o.jobs = opts->jobs ? opts->jobs : 1;
  return o;
}

}  // namespace

extern "C" {

const char* ywall_last_error(void) { return last_error.c_str(); }

const char* ywall_status_name(ywall_status status) {
  switch (status) {
    case YWALL_OK:
      return "ok";
    case YWALL_NULL:
      return "null";
    case YWALL_ERR_ARGUMENT:
      return "invalid argument";
    case YWALL_ERR_PARSE:
      return "parse error";
    case YWALL_ERR_RESOURCE:
      return "resource limit";
    case YWALL_ERR_WALL_CONDITION:
      return "not a Young wall";
    case YWALL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void ywall_string_free(char* s) { std::free(s); }

ywall_status ywall_crystal_graph(int level, ywall_graph** out) {
  return guarded([&] {
    if (!out) return fail(YWALL_ERR_ARGUMENT, "null output pointer");
    const auto c = ywall::AdjointCrystal::finite(level);
    const auto elems = c.elements();
    const auto root = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), ywall::Pair{0, 0}) - elems.begin());
    *out = new ywall_graph{ywall::induced_graph(c, elems, root), "B_ad_" + std::to_string(level)};
    return YWALL_OK;
  });
}

ywall_status ywall_wall_graph(ywall_lambda lambda, const ywall_enum_options* opts, ywall_graph** out) {
  return guarded([&] {
    if (!out || !opts) return fail(YWALL_ERR_ARGUMENT, "null argument");
    const auto lam = to_lambda(lambda);
    const auto o = component_options(opts);
    auto g = opts->reduced_only ? ywall::reduced_wall_component(lam, o)
                                : ywall::all_wall_graph(lam, opts->depth, o.node_cap, o.jobs);
    *out = new ywall_graph{std::move(g), "walls"};
    return YWALL_OK;
  });
}

ywall_status ywall_path_graph(ywall_lambda lambda, const ywall_enum_options* opts, ywall_graph** out) {
  return guarded([&] {
    if (!out || !opts) return fail(YWALL_ERR_ARGUMENT, "null argument");
    *out = new ywall_graph{ywall::path_component(to_lambda(lambda), component_options(opts)), "paths"};
    return YWALL_OK;
  });
}

size_t ywall_graph_node_count(const ywall_graph* g) { return g ? g->graph.size() : 0; }

size_t ywall_graph_edge_count(const ywall_graph* g) { return g ? g->graph.edges().size() : 0; }

ywall_status ywall_graph_export(const ywall_graph* g, const char* format, char** out) {
  return guarded([&] {
    if (!g || !format || !out) return fail(YWALL_ERR_ARGUMENT, "null argument");
    const std::string f = format;
    std::string text;
    if (f == "dot") {
      text = ywall::to_dot(g->graph, g->name);
    } else if (f == "json") {
      text = ywall::to_json(g->graph).dump(2) + "\n";
    } else if (f == "table") {
      text = ywall::multiplicity_text(ywall::multiplicities(g->graph));
    } else {
      return fail(YWALL_ERR_ARGUMENT, "unknown graph format \"" + f + "\"");
    }
    *out = dup(text);
    return YWALL_OK;
  });
}

void ywall_graph_free(ywall_graph* g) { delete g; }

ywall_status ywall_wall_ground(ywall_lambda lambda, ywall_wall** out) {
  return guarded([&] {
    if (!out) return fail(YWALL_ERR_ARGUMENT, "null output pointer");
    *out = new ywall_wall{ywall::ground_wall(to_lambda(lambda))};
    return YWALL_OK;
  });
}

ywall_status ywall_wall_from_json(const char* json, ywall_wall** out) {
  return guarded([&] {
    if (!json || !out) return fail(YWALL_ERR_ARGUMENT, "null argument");
    auto w = ywall::wall_from_json(ywall::parse_json(json));
    if (ywall::wall_validate(w) == ywall::WallClass::kNotWall) {
      return fail(YWALL_ERR_WALL_CONDITION, ywall::encode(w) + " violates the Young wall condition");
    }
    *out = new ywall_wall{std::move(w)};
    return YWALL_OK;
  });
}

ywall_status ywall_wall_apply(const ywall_wall* w, const char* op, ywall_wall** out) {
  return guarded([&] {
    if (!w || !op || !out) return fail(YWALL_ERR_ARGUMENT, "null argument");
    const std::string o = op;
    if (o.size() != 2 || (o[0] != 'E' && o[0] != 'F') || (o[1] != '0' && o[1] != '1')) {
      return fail(YWALL_ERR_ARGUMENT, "operator must be one of F0 F1 E0 E1, got \"" + o + "\"");
    }
    const int i = o[1] - '0';
    const auto r = o[0] == 'F' ? ywall::wall_f(i, w->wall) : ywall::wall_e(i, w->wall);
    switch (r.status) {
      case ywall::WallStatus::kOk:
        *out = new ywall_wall{*r.wall};
        return YWALL_OK;
      case ywall::WallStatus::kNull:
        *out = nullptr;
        return fail(YWALL_NULL, o + " kills " + ywall::encode(w->wall));
      case ywall::WallStatus::kNotWall:
        *out = nullptr;
        return fail(YWALL_ERR_WALL_CONDITION, o + " applied to " + ywall::encode(w->wall) + " leaves the Young walls");
    }
    return fail(YWALL_ERR_INTERNAL, "unexpected wall status");
  });
}

ywall_status ywall_wall_export(const ywall_wall* w, const char* format, char** out) {
  return guarded([&] {
    if (!w || !format || !out) return fail(YWALL_ERR_ARGUMENT, "null argument");
    const std::string f = format;
    std::string text;
    if (f == "json") {
      text = ywall::to_json(w->wall).dump(2) + "\n";
    } else if (f == "ascii") {
      text = ywall::render_ascii(w->wall);
    } else if (f == "text") {
      text = ywall::encode(w->wall) + "\n";
    } else {
      return fail(YWALL_ERR_ARGUMENT, "unknown wall format \"" + f + "\"");
    }
    *out = dup(text);
    return YWALL_OK;
  });
}

ywall_status ywall_wall_classify(const ywall_wall* w, int* out) {
  return guarded([&] {
    if (!w || !out) return fail(YWALL_ERR_ARGUMENT, "null argument");
    *out = static_cast<int>(ywall::wall_validate(w->wall));
    return YWALL_OK;
  });
}

void ywall_wall_free(ywall_wall* w) { delete w; }

ywall_status ywall_suite_names(char** out) {
  return guarded([&] {
    if (!out) return fail(YWALL_ERR_ARGUMENT, "null output pointer");
    std::string text;
    for (const auto& n : ywall::suite_names()) text += n + "\n";
    *out = dup(text);
    return YWALL_OK;
  });
}

ywall_status ywall_verify(const char* suite, const ywall_verify_options* opts, ywall_report** out) {
  return guarded([&] {
    if (!suite || !out) return fail(YWALL_ERR_ARGUMENT, "null argument");
    ywall::SuiteParams p;
    if (opts) {
      if (opts->level) p.level = opts->level;
      if (opts->has_lambda) p.lambda = to_lambda(opts->lambda);
      if (opts->depth >= 0) p.depth = opts->depth;
      if (opts->window >= 0) p.window = opts->window;
      if (opts->node_cap) p.node_cap = opts->node_cap;
      p.jobs = opts->jobs ? opts->jobs : 1;
    }
    *out = new ywall_report{ywall::run_suite(suite, p)};
    return YWALL_OK;
  });
}

int ywall_report_passed(const ywall_report* r) { return r && r->report.passed() ? 1 : 0; }

ywall_status ywall_report_json(const ywall_report* r, char** out) {
  return guarded([&] {
    if (!r || !out) return fail(YWALL_ERR_ARGUMENT, "null argument");
    *out = dup(ywall::to_json(r->report).dump(2) + "\n");
    return YWALL_OK;
  });
}

void ywall_report_free(ywall_report* r) { delete r; }

}  // extern "C"
