/* petfam: maximal planar subgraphs of the Petersen-family graphs,
 * their conflict graphs, and linked-pair searches over potentially
 * flat diagrams.
 *
 * All functions return pf_status; results come back through out
 * parameters.  Strings returned through char** are heap-allocated and
 * must be released with pf_string_free; graphs with pf_graph_free.
 */

#ifndef PETFAM_H
#define PETFAM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERROR_INVALID_ARGUMENT = 1,
  PF_ERROR_UNKNOWN_FAMILY = 2,
  PF_ERROR_PARSE = 3,
  PF_ERROR_INTERNAL = 4
} pf_status;

typedef struct pf_graph pf_graph;

const char* pf_version(void);
const char* pf_status_message(pf_status status);
void pf_string_free(char* s);

/* Graph handles ----------------------------------------------------- */

/* Text format: a line "n m" followed by m lines "u v" (0-based),
 * then optional lines "label <index> <name>". */
pf_status pf_graph_parse(const char* text, pf_graph** out);

/* By family name: K6, K3,3,1, G7, G8, G9, K4,4-e, Petersen
 * (spelling variants like K331, K44me, PG are accepted). */
pf_status pf_graph_family(const char* name, pf_graph** out);

/* From an endpoint array: edges[2*i], edges[2*i+1] for i < edge_count. */
pf_status pf_graph_build(int vertex_count, const int* edges, int edge_count,
                         pf_graph** out);

void pf_graph_free(pf_graph* g);

pf_status pf_graph_format(const pf_graph* g, int with_labels, char** out);
pf_status pf_graph_vertex_count(const pf_graph* g, int* out);
pf_status pf_graph_edge_count(const pf_graph* g, int* out);
pf_status pf_graph_is_planar(const pf_graph* g, int* out);
pf_status pf_graph_is_apex(const pf_graph* g, int* out);
pf_status pf_graph_automorphism_count(const pf_graph* g, long* out);
pf_status pf_graph_identify_family(const pf_graph* g, char** name_out);

/* Reports ------------------------------------------------------------ */

/* JSON documents; see the README for the schema.  jobs <= 0 picks the
 * hardware thread count.  record_index < 0 sweeps every record.
 * embedding_limit caps the embedding classes explored per record; 0
 * means all of them. */
pf_status pf_family_report_json(char** out);
pf_status pf_mps_report_json(const char* member, char** out);
pf_status pf_conflict_report_json(const char* member, int jobs, char** out);
pf_status pf_search_report_json(const char* member, int record_index, int jobs,
                                int embedding_limit, char** out);

/* record_index selects one maximal planar subgraph record of the
 * member (as indexed in the mps report); the DOT text draws its
 * conflict graph with solid conflict and dashed anti-conflict edges. */
pf_status pf_conflict_dot(const char* member, int record_index, char** out);

/* Runs the verification battery.  member == NULL covers the whole
 * family; a member name scopes the battery to that graph.  *passed is
 * 1 when every claim holds.  The JSON lists one claim per check and
 * is byte-stable for fixed arguments. */
pf_status pf_verify_json(const char* member, int jobs, int embedding_limit,
                         int* passed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PETFAM_H */
