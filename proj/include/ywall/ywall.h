#ifndef YWALL_YWALL_H
#define YWALL_YWALL_H

/* C interface to the ywall library. Every function returns a status code;
 * results come back through out-parameters. Strings returned by the library
 * are owned by the caller and released with ywall_string_free. After a
 * failing call ywall_last_error() describes the failure (thread-local). */

#include <stddef.h>

#if defined(_WIN32)
#define YWALL_API __declspec(dllexport)
#elif defined(YWALL_BUILDING_LIBRARY)
#define YWALL_API __attribute__((visibility("default")))
#else
#define YWALL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ywall_status {
  YWALL_OK = 0,
  YWALL_NULL = 1, /* the operator kills the element */
  YWALL_ERR_ARGUMENT = 2,
  YWALL_ERR_PARSE = 3,
  YWALL_ERR_RESOURCE = 4,
  YWALL_ERR_WALL_CONDITION = 5,
  YWALL_ERR_INTERNAL = 6
} ywall_status;

typedef struct ywall_graph ywall_graph;
typedef struct ywall_wall ywall_wall;
typedef struct ywall_report ywall_report;

typedef struct ywall_lambda {
  int infinity; /* non-zero: B(infinity); level and a are ignored */
  int level;
  int a;
} ywall_lambda;

typedef struct ywall_enum_options {
  int depth;
  int reduced_only; /* non-zero: component of the ground wall; zero: all walls */
  size_t node_cap;  /* 0 selects the default */
  unsigned jobs;    /* 0 or 1: single-threaded */
} ywall_enum_options;

typedef struct ywall_verify_options {
  int level; /* 0: suite default */
  int has_lambda;
  ywall_lambda lambda;
  int depth;  /* negative: suite default */
  int window; /* negative: suite default */
  size_t node_cap;
  unsigned jobs;
} ywall_verify_options;

YWALL_API const char* ywall_last_error(void);
YWALL_API const char* ywall_status_name(ywall_status status);
YWALL_API void ywall_string_free(char* s);

/* Graph of the level-l adjoint crystal. */
YWALL_API ywall_status ywall_crystal_graph(int level, ywall_graph** out);
/* Walls on lambda: reduced component or all Young walls, to opts->depth. */
YWALL_API ywall_status ywall_wall_graph(ywall_lambda lambda, const ywall_enum_options* opts, ywall_graph** out);
/* Component of the ground path, f-edges only, to opts->depth. */
YWALL_API ywall_status ywall_path_graph(ywall_lambda lambda, const ywall_enum_options* opts, ywall_graph** out);
YWALL_API size_t ywall_graph_node_count(const ywall_graph* g);
YWALL_API size_t ywall_graph_edge_count(const ywall_graph* g);
/* format: "dot", "json" or "table" (weight multiplicities). */
YWALL_API ywall_status ywall_graph_export(const ywall_graph* g, const char* format, char** out);
YWALL_API void ywall_graph_free(ywall_graph* g);

YWALL_API ywall_status ywall_wall_ground(ywall_lambda lambda, ywall_wall** out);
YWALL_API ywall_status ywall_wall_from_json(const char* json, ywall_wall** out);
/* op is "F0", "F1", "E0" or "E1". On success *out is a new wall. Returns
 * YWALL_NULL when the operator kills the wall, YWALL_ERR_WALL_CONDITION when
 * the image is not a Young wall. */
YWALL_API ywall_status ywall_wall_apply(const ywall_wall* w, const char* op, ywall_wall** out);
/* format: "json", "ascii" or "text". */
YWALL_API ywall_status ywall_wall_export(const ywall_wall* w, const char* format, char** out);
/* 0: not a wall, 1: wall, 2: reduced wall. */
YWALL_API ywall_status ywall_wall_classify(const ywall_wall* w, int* out);
YWALL_API void ywall_wall_free(ywall_wall* w);

/* Suite names as listed by ywall_suite_names (newline separated). */
YWALL_API ywall_status ywall_suite_names(char** out);
YWALL_API ywall_status ywall_verify(const char* suite, const ywall_verify_options* opts, ywall_report** out);
YWALL_API int ywall_report_passed(const ywall_report* r);
YWALL_API ywall_status ywall_report_json(const ywall_report* r, char** out);
YWALL_API void ywall_report_free(ywall_report* r);

#ifdef __cplusplus
}
#endif

#endif
