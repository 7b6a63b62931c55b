#ifndef SHELLAR_CAPI_H
#define SHELLAR_CAPI_H

/* C interface to the shellar core. All functions returning int use status
 * codes; on failure shellar_last_error() describes what went wrong (the
 * message is owned by the library and valid until the next failing call on
 * the same thread). Strings returned through char** are heap-allocated and
 * must be released with shellar_free_string(). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SHELLAR_OK 0
#define SHELLAR_EDOMAIN 1
#define SHELLAR_EUSAGE 2
#define SHELLAR_EPARSE 3
#define SHELLAR_EBUDGET 4
#define SHELLAR_EINTERNAL 5

typedef struct shellar_graph shellar_graph;
typedef struct shellar_complex shellar_complex;

const char* shellar_version(void);
const char* shellar_last_error(void);
void shellar_free_string(char* s);
void shellar_graph_free(shellar_graph* g);
void shellar_complex_free(shellar_complex* c);

/* ---- graphs ---- */

int shellar_graph_from_graph6(const char* line, shellar_graph** out);
int shellar_graph_from_edge_list(const char* text, shellar_graph** out);

/* Families and their arguments:
 *   complete      [n]
 *   turan         [n, r]
 *   colex         [n, m]
 *   union         [a, r, b]     (a copies of K_{r+1} plus one K_b)
 *   cirstar       [n, r]
 *   cirstarstar   [n, r]
 */
int shellar_graph_generate(const char* family, const long long* args,
                           int nargs, shellar_graph** out);
int shellar_graph_circulant(int n, const int* connections, int len,
                            shellar_graph** out);

int shellar_graph_vertex_count(const shellar_graph* g);
int shellar_graph_edge_count(const shellar_graph* g);
int shellar_graph_max_degree(const shellar_graph* g);
int shellar_graph_has_edge(const shellar_graph* g, int u, int v);
int shellar_graph_is_connected(const shellar_graph* g);

int shellar_graph_to_graph6(const shellar_graph* g, char** out);
int shellar_graph_to_edge_list(const shellar_graph* g, char** out);
int shellar_graph_canonical_graph6(const shellar_graph* g, char** out);
int shellar_graph_is_isomorphic(const shellar_graph* a, const shellar_graph* b,
                                int* out);

/* {"counts": {"1": n, "2": m, ...}, "total": k, "omega": w} */
int shellar_graph_census_json(const shellar_graph* g, char** out);
int shellar_graph_maximal_cliques_json(const shellar_graph* g, char** out);

/* k_t(G) <= C(r,t-1)*n, or k(G) <= 2^r*n when t == 0. */
int shellar_folklore_bound(int n, int r, int t, uint64_t* out);

/* ---- complexes ---- */

int shellar_complex_from_graph(const shellar_graph* g, shellar_complex** out);
int shellar_complex_from_text(const char* text, shellar_complex** out);
int shellar_complex_to_text(const shellar_complex* c, char** out);

int shellar_complex_vertex_count(const shellar_complex* c);
int shellar_complex_facet_count(const shellar_complex* c);
int shellar_complex_is_pure(const shellar_complex* c, int* out);
int shellar_complex_omega(const shellar_complex* c, int* out);

int shellar_complex_fvector_json(const shellar_complex* c, char** out);

/* Searches for a shelling; the result is the certificate JSON with fields
 * valid, order, restriction, classification, vertex_delta, edge_delta and
 * (when free_degree_r > 0) the free-degree trace. Not-shellable complexes
 * yield {"valid": false}. */
int shellar_complex_shellable_json(const shellar_complex* c, int free_degree_r,
                                   char** out);

/* Validates a caller-supplied facet order, one facet per line. */
int shellar_complex_verify_order_json(const shellar_complex* c,
                                      const char* order_text, int free_degree_r,
                                      char** out);

#define SHELLAR_FORMAT_JSON 0
#define SHELLAR_FORMAT_DOT 1

int shellar_complex_facet_graph(const shellar_complex* c, int m, int format,
                                char** out);

/* Tree report: the tree itself plus recovered degrees, the reconstruction
 * round-trip flag, and the branch condition where its precondition holds. */
int shellar_complex_km_tree(const shellar_complex* c, int r, int format,
                            char** out);

/* (1/2)s(s-1) + (1/2)(n-s)(r-2s+2) as a decimal fraction string. */
int shellar_structural_bound(int n, int r, int s, char** out);

/* ---- closed forms ---- */

int shellar_cir_star_count(int n, int r, int t, uint64_t* out);
int shellar_cir_star_total(int n, int r, uint64_t* out);

/* ---- searches and verifications (JSON reports) ---- */

/* spec_json keys: n, r, t (0 = total count), pure, connected, budget,
 * workers, graphs (optional graph6 array replacing internal enumeration). */
int shellar_extremal_search(const char* spec_json, char** out);

int shellar_verify_unique_km_tree(int r, uint64_t budget, int n_override,
                                  int facets_override, char** out);
int shellar_verify_tendril(int n, int r, uint64_t budget, char** out);
int shellar_verify_binom(int a_max, char** out);
int shellar_verify_classical(int n_max, uint64_t budget, char** out);
int shellar_ratio_report(int r, int t, const int* n_values, int len,
                         uint64_t budget, int with_exhaustive, char** out);
int shellar_odd_explore(int n, int r, uint64_t budget, char** out);
int shellar_scan_large_clique(int n, int r, uint64_t budget, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SHELLAR_CAPI_H */
