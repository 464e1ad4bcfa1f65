#ifndef QOLAB_H
#define QOLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the finite quasi-order engine. All objects are opaque
 * handles created and destroyed through this API; every fallible call
 * returns a status code, with a human-readable detail message available
 * from qolab_last_error() on the failing thread.
 *
 * Relations travel in the `.qo`/`.gr` text format: optional '#' comment
 * lines, a decimal size line, then n rows of n characters from {0,1},
 * row i column j set iff i R j. Vertex buffers are caller-allocated; a
 * buffer of qolab_relation_size() entries is always large enough unless
 * stated otherwise. Strings returned through char** are heap-allocated
 * and must be released with qolab_string_free().
 */

typedef enum qolab_status {
    QOLAB_OK = 0,
    QOLAB_ERR_MALFORMED_INPUT = -1,
    QOLAB_ERR_INVALID_ARGUMENT = -2,
    QOLAB_ERR_INDEX_RANGE = -3,
    QOLAB_ERR_NOT_QUASI_ORDER = -4,
    QOLAB_ERR_NOT_GRAPH = -5,
    QOLAB_ERR_BUDGET_EXCEEDED = -6,
    QOLAB_ERR_NOT_IN_AUX_GRAPH = -7,
    QOLAB_ERR_NOT_ANTICHAIN = -8,
    QOLAB_ERR_WRONG_CARDINALITY = -9,
    QOLAB_ERR_NOT_INDEPENDENT = -10,
    QOLAB_ERR_PROPOSITION_VIOLATED = -11,
    QOLAB_ERR_HYPOTHESIS_VIOLATED = -12,
    QOLAB_ERR_MISSING_LEAF = -13,
    QOLAB_ERR_IO = -14,
    QOLAB_ERR_UNKNOWN = -99
} qolab_status;

/* Stable name of a status code (never NULL). */
const char* qolab_status_name(qolab_status status);

/* Detail message of the last failing call on this thread ("" if none). */
const char* qolab_last_error(void);

/* Releases a string returned through a char** out-parameter. */
void qolab_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Relations                                                           */

/* Binary relation on {0,...,n-1}; also carries graphs and quasi-orders. */
typedef struct qolab_relation qolab_relation;

qolab_status qolab_relation_parse(const char* text, qolab_relation** out);
void qolab_relation_free(qolab_relation* rel);
int32_t qolab_relation_size(const qolab_relation* rel);
qolab_status qolab_relation_test(const qolab_relation* rel, int32_t i, int32_t j,
                                 int* out_related);
qolab_status qolab_relation_serialize(const qolab_relation* rel, char** out_text);

/*
 * Validation verdicts. out_ok receives 1/0. On failure out_kind receives
 * 0 for a reflexivity/irreflexivity violation and 1 for a transitivity/
 * symmetry violation, and out_witness receives the offending vertices
 * (3 entries for quasi-orders, 2 for graphs; unused entries are -1).
 */
qolab_status qolab_check_quasi_order(const qolab_relation* rel, int* out_ok,
                                     int* out_kind, int32_t out_witness[3]);
qolab_status qolab_check_graph(const qolab_relation* rel, int* out_ok,
                               int* out_kind, int32_t out_witness[2]);

/* Derived relations of a quasi-order. */
typedef enum qolab_derive_kind {
    QOLAB_DERIVE_COMPARABLE = 0,
    QOLAB_DERIVE_EQUIVALENCE = 1,
    QOLAB_DERIVE_INCOMPARABLE = 2,
    QOLAB_DERIVE_STRICT = 3
} qolab_derive_kind;

qolab_status qolab_derive(const qolab_relation* rel, qolab_derive_kind kind,
                          qolab_relation** out);

/* JSON {"classes":[[...]],"order":[rows],"class_of":[...]}. */
qolab_status qolab_quotient(const qolab_relation* rel, char** out_json);

typedef enum qolab_interval_kind {
    QOLAB_INTERVAL_CLOSED = 0,
    QOLAB_INTERVAL_OPEN_CLOSED = 1
} qolab_interval_kind;

qolab_status qolab_interval(const qolab_relation* rel, int32_t x, int32_t y,
                            qolab_interval_kind kind, int32_t* out_vertices,
                            int32_t* out_count);

typedef enum qolab_section_side {
    QOLAB_SECTION_VERTICAL = 0,
    QOLAB_SECTION_HORIZONTAL = 1
} qolab_section_side;

qolab_status qolab_section(const qolab_relation* rel, int32_t v,
                           qolab_section_side side, int32_t* out_vertices,
                           int32_t* out_count);

/* Seeded generators; deterministic in (n, density, seed). */
qolab_status qolab_random_quasi_order(int32_t n, double density, uint64_t seed,
                                      qolab_relation** out);
qolab_status qolab_random_graph(int32_t n, double density, uint64_t seed,
                                qolab_relation** out);

/* ------------------------------------------------------------------ */
/* Width, chain covers, dichotomy                                      */

/* Chain cover; paper covers additionally carry their peeling layers. */
typedef struct qolab_cover qolab_cover;

void qolab_cover_free(qolab_cover* cover);
int32_t qolab_cover_chain_count(const qolab_cover* cover);
int32_t qolab_cover_chain_len(const qolab_cover* cover, int32_t index);
qolab_status qolab_cover_chain(const qolab_cover* cover, int32_t index,
                               int32_t* out_vertices);
int32_t qolab_cover_layer_count(const qolab_cover* cover);
int32_t qolab_cover_layer_len(const qolab_cover* cover, int32_t index);
qolab_status qolab_cover_layer(const qolab_cover* cover, int32_t index,
                               int32_t* out_vertices);

/*
 * Width with the lexicographically least maximum antichain. out_witness
 * needs qolab_relation_size() entries.
 */
qolab_status qolab_width(const qolab_relation* rel, int32_t* out_width,
                         int32_t* out_witness, int32_t* out_count);

/* Matching-based minimum chain cover (the classical oracle). */
qolab_status qolab_min_chain_cover(const qolab_relation* rel, qolab_cover** out);

/* Layered construction; chain count equals the width. budget 0 = default. */
qolab_status qolab_paper_chain_cover(const qolab_relation* rel, uint64_t budget,
                                     qolab_cover** out);

/*
 * Exactly one alternative: *out_is_cover = 1 and *out_cover is a cover by
 * exactly k chains, or *out_is_cover = 0 and out_antichain (k+1 entries)
 * holds an antichain of size k+1.
 */
qolab_status qolab_dichotomy(const qolab_relation* rel, int32_t k, uint64_t budget,
                             int* out_is_cover, qolab_cover** out_cover,
                             int32_t* out_antichain, int32_t* out_count);

/* JSON array of all size-k antichains in lexicographic order. */
qolab_status qolab_enumerate_antichains(const qolab_relation* rel, int32_t k,
                                        uint64_t budget, char** out_json);

/* ------------------------------------------------------------------ */
/* Chromatic machinery and the forcing supergraph                      */

/* Exact chromatic number; out_colors (size n) receives a witness. */
qolab_status qolab_chromatic_number(const qolab_relation* graph, uint64_t budget,
                                    int32_t* out_chi, int32_t* out_colors);

/*
 * Supergraph joining the pairs separated by every optimal coloring.
 * use_bruteforce selects the coloring-enumeration oracle instead of the
 * contraction construction; both agree on every instance.
 */
qolab_status qolab_aux_graph(const qolab_relation* graph, uint64_t budget,
                             int use_bruteforce, qolab_relation** out_aux,
                             int32_t* out_chi);

/*
 * Minimum-cardinality set forcing each listed pair apart in every optimal
 * coloring of its restriction; unions of per-pair minima for several pairs.
 * pairs holds pair_count (x,y) entries flattened.
 */
qolab_status qolab_witness_set(const qolab_relation* graph, const int32_t* pairs,
                               int32_t pair_count, uint64_t budget,
                               int32_t* out_vertices, int32_t* out_count);

/* ------------------------------------------------------------------ */
/* Flip-graph truncations                                              */

/* Canonical dense sequences, one word per line, '-' for the empty word. */
qolab_status qolab_dense_sequences(int32_t levels, char** out_text);

/*
 * Statistics of the level-N truncation as JSON {"vertices","edges",
 * "connected","bipartite","chi"}. sequences may be NULL for the canonical
 * choice and accepts the dense-sequence text format otherwise. N <= 20.
 */
qolab_status qolab_g0_stats(int32_t word_length, const char* sequences,
                            char** out_json);

/* Matrix form of the level-N truncation; N <= 14. */
qolab_status qolab_g0_graph(int32_t word_length, const char* sequences,
                            qolab_relation** out);

/*
 * Complete backtracking search for an edge-preserving map pattern->target.
 * out_map needs |pattern| entries; *out_found is 0 when no homomorphism
 * exists (out_map is untouched then).
 */
qolab_status qolab_hom_search(const qolab_relation* pattern,
                              const qolab_relation* target, uint64_t budget,
                              int32_t* out_map, int* out_found);

/* ------------------------------------------------------------------ */
/* Trees and set codes                                                 */

/* Prefix-closed set of finite sequences over a finite index set. */
typedef struct qolab_tree qolab_tree;

/*
 * Tree text format: one node per line, comma-separated indices, '-' for
 * the empty sequence. index_size -1 infers max index + 1.
 */
qolab_status qolab_tree_parse(const char* text, int32_t index_size,
                              qolab_tree** out);
void qolab_tree_free(qolab_tree* tree);
qolab_status qolab_tree_serialize(const qolab_tree* tree, char** out_text);

/* Nodes having at least one child. */
qolab_status qolab_tree_derivative(const qolab_tree* tree, qolab_tree** out);

/* JSON {"rho":r,"well_founded":b,"node_ranks":{"seq":rank}}. */
qolab_status qolab_tree_rank(const qolab_tree* tree, char** out_json);

/* Well-founded tree over alpha x alpha with leaf sets on the frontier. */
typedef struct qolab_borel qolab_borel;

/* JSON {"alpha":a,"tree":[...],"leaves":{"seq":[members]},"m":m}. */
qolab_status qolab_borel_parse(const char* json_text, qolab_borel** out);
void qolab_borel_free(qolab_borel* code);
int32_t qolab_borel_ground_size(const qolab_borel* code);

/*
 * Evaluates the code: unions over the first coordinate of intersections
 * over the second (dual_order swaps the roles). out_members needs
 * qolab_borel_ground_size() entries.
 */
qolab_status qolab_borel_eval(const qolab_borel* code, int dual_order,
                              int32_t* out_members, int32_t* out_count);

/* ------------------------------------------------------------------ */
/* Property harness                                                    */

/*
 * Checks one proposition ("union", "clique", "antichain", "transitive",
 * "independence", "maximal") on an instance by brute force. The report
 * JSON carries pass/fail, the check count, and any counterexample.
 */
qolab_status qolab_verify_proposition(const char* proposition,
                                      const qolab_relation* instance,
                                      uint64_t seed, uint64_t budget,
                                      char** out_report_json, int* out_pass);

/*
 * Runs the selected propositions over a seeded corpus. options_json may be
 * NULL or "{}" for the defaults; recognized keys: props (array of names),
 * n_min, n_max, instances, densities, exhaustive, seed, budget. The report
 * is deterministic in the options; *out_ok is 0 iff violations were found.
 */
qolab_status qolab_prove(const char* options_json, char** out_report_json,
                         int* out_ok);

/* Re-runs the checker recorded in a violation bundle. */
qolab_status qolab_replay(const char* bundle_json, char** out_report_json,
                          int* out_reproduced);

#ifdef __cplusplus
}
#endif

#endif /* QOLAB_H */
