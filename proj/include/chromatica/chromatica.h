/*
 * chromatica C API
 *
 * Opaque handles over the C++ core. Every fallible call returns a
 * chrom_status; on failure chrom_last_error() holds a message for the calling
 * thread until its next failing call. Strings returned through char** are
 * heap-allocated and released with chrom_string_free. Handles are immutable
 * after creation and may be shared between threads.
 *
 * Vertices are 0-indexed here; the text file formats are 1-indexed.
 */
#ifndef CHROMATICA_H
#define CHROMATICA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CHROMATICA_BUILDING)
#define CHROM_API __declspec(dllexport)
#else
#define CHROM_API __declspec(dllimport)
#endif
#else
#define CHROM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chrom_status {
    CHROM_OK = 0,
    CHROM_E_INVALID_ARGUMENT = 1,
    CHROM_E_PARSE = 2,
    CHROM_E_IO = 3,
    CHROM_E_TOO_LARGE = 4,
    CHROM_E_NOT_PRIME = 5,
    CHROM_E_NON_DIVISIBLE = 6,
    CHROM_E_EDGE_ABSENT = 7,
    CHROM_E_INVALID_EDGE = 8,
    CHROM_E_HYPOTHESIS_VIOLATED = 9,
    CHROM_E_NOT_ISOMORPHIC = 10,
    CHROM_E_DOMAIN = 11,
    CHROM_E_LINE_PRESENT = 12,
    CHROM_E_EMPTY_ARRANGEMENT = 13,
    CHROM_E_NON_INTEGRAL = 14,
    CHROM_E_INTERNAL = 15
} chrom_status;

typedef struct chrom_graph chrom_graph;
typedef struct chrom_poly chrom_poly;
typedef struct chrom_lines chrom_lines;

typedef enum chrom_method {
    /* memoized deletion-contraction with closed-form base cases */
    CHROM_METHOD_AUTO = 0,
    /* spanning tree plus edge-addition rules */
    CHROM_METHOD_INDUCTIVE = 1,
    /* deletion-contraction with memoization disabled */
    CHROM_METHOD_DELCONTR = 2,
    /* oracles */
    CHROM_METHOD_WHITNEY = 3,
    CHROM_METHOD_LATTICE = 4
} chrom_method;

typedef enum chrom_family { CHROM_FAMILY_TREE = 0, CHROM_FAMILY_COMPLETE = 1, CHROM_FAMILY_CYCLE = 2 } chrom_family;

typedef enum chrom_rule_kind { CHROM_RULE_BRIDGE = 0, CHROM_RULE_MINIMAL_CYCLE = 1, CHROM_RULE_FALLBACK = 2 } chrom_rule_kind;

typedef struct chrom_rule {
    chrom_rule_kind kind;
    size_t cycle_length; /* m for CHROM_RULE_MINIMAL_CYCLE, else 0 */
} chrom_rule;

typedef struct chrom_trace {
    uint64_t recursion_nodes;
    uint64_t memo_hits;
    uint64_t bridge_rules;
    uint64_t minimal_cycle_rules;
    uint64_t fallback_rules;
} chrom_trace;

typedef struct chrom_options {
    int memoize;              /* AUTO only */
    size_t memo_max_vertices; /* default 12 */
    uint64_t node_limit;      /* 0 = unlimited; exceeded -> CHROM_E_TOO_LARGE */
} chrom_options;

typedef struct chrom_patterns {
    uint64_t m;
    uint64_t k3;
    uint64_t c4;
    uint64_t k4;
    uint64_t g0;
} chrom_patterns;

CHROM_API const char* chrom_version(void);
CHROM_API const char* chrom_status_name(chrom_status status);
CHROM_API const char* chrom_last_error(void);
CHROM_API void chrom_string_free(char* s);
CHROM_API void chrom_options_default(chrom_options* options);

/* graphs */
CHROM_API chrom_status chrom_graph_create(size_t n, const uint32_t* endpoints, size_t edge_count, chrom_graph** out);
CHROM_API chrom_status chrom_graph_parse(const char* text, chrom_graph** out);
CHROM_API chrom_status chrom_graph_load(const char* path, chrom_graph** out);
CHROM_API void chrom_graph_free(chrom_graph* g);
CHROM_API size_t chrom_graph_vertex_count(const chrom_graph* g);
CHROM_API size_t chrom_graph_edge_count(const chrom_graph* g);
CHROM_API chrom_status chrom_graph_edge(const chrom_graph* g, size_t index, uint32_t* u, uint32_t* v);
CHROM_API chrom_status chrom_graph_render(const chrom_graph* g, char** out);
CHROM_API chrom_status chrom_graph_add_edge(const chrom_graph* g, uint32_t u, uint32_t v, chrom_graph** out);
CHROM_API chrom_status chrom_graph_delete_edge(const chrom_graph* g, uint32_t u, uint32_t v, chrom_graph** out);
CHROM_API chrom_status chrom_graph_contract_edge(const chrom_graph* g, uint32_t u, uint32_t v, chrom_graph** out);
/* Hex string; equal iff the graphs are isomorphic. */
CHROM_API chrom_status chrom_graph_canonical_key(const chrom_graph* g, char** out);

/* polynomials */
CHROM_API void chrom_poly_free(chrom_poly* p);
CHROM_API long chrom_poly_degree(const chrom_poly* p);
CHROM_API chrom_status chrom_poly_coeff(const chrom_poly* p, size_t power, char** decimal);
CHROM_API chrom_status chrom_poly_to_string(const chrom_poly* p, char** out);
CHROM_API chrom_status chrom_poly_to_json(const chrom_poly* p, char** out);
CHROM_API chrom_status chrom_poly_eval(const chrom_poly* p, int64_t x, char** decimal);
CHROM_API int chrom_poly_equal(const chrom_poly* a, const chrom_poly* b);

/* chromatic polynomials; options and trace may be NULL */
CHROM_API chrom_status chrom_chromatic(const chrom_graph* g, chrom_method method, const chrom_options* options,
                                       chrom_poly** out, chrom_trace* trace);
CHROM_API chrom_status chrom_closed_form(chrom_family family, size_t n, chrom_poly** out);
CHROM_API chrom_status chrom_classify_edge(const chrom_graph* g, uint32_t u, uint32_t v, chrom_rule* out);
CHROM_API chrom_status chrom_extend_by_edge(const chrom_graph* g, const chrom_poly* chi, uint32_t u, uint32_t v,
                                            chrom_graph** graph_out, chrom_poly** chi_out, chrom_rule* rule_out);

/* arrangements */
CHROM_API chrom_status chrom_chambers(const chrom_poly* chi, char** chambers, char** bounded);
CHROM_API chrom_status chrom_add_edge_chambers(const chrom_graph* g, const char* chambers_decimal, uint32_t u, uint32_t v,
                                               char** out);
CHROM_API chrom_status chrom_lines_parse(const char* text, chrom_lines** out);
CHROM_API chrom_status chrom_lines_load(const char* path, chrom_lines** out);
CHROM_API void chrom_lines_free(chrom_lines* a);
CHROM_API size_t chrom_lines_count(const chrom_lines* a);
CHROM_API chrom_status chrom_lines_intersect_count(const chrom_lines* a, int64_t x, int64_t y, int64_t z, size_t* k);
CHROM_API chrom_status chrom_lines_characteristic(const chrom_lines* a, chrom_poly** out);

/* coefficient formulas; out receives min(4, n+1) decimal strings, highest power first */
CHROM_API chrom_status chrom_count_patterns(const chrom_graph* g, chrom_patterns* out);
CHROM_API chrom_status chrom_leading_coefficients(const chrom_graph* g, char* out[4], size_t* count);

/* brute-force oracles */
CHROM_API chrom_status chrom_coloring_count(const chrom_graph* g, int64_t k, char** decimal);
CHROM_API chrom_status chrom_fp_point_count(const chrom_graph* g, int64_t p, char** decimal);

#ifdef __cplusplus
}
#endif

#endif /* CHROMATICA_H */
