/* C API for the rigidity toolkit: opaque handles, integer error codes,
 * JSON strings for structured results. Clients link the shared library
 * and include only this header. */
#ifndef RIGIDITY_H
#define RIGIDITY_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RIGIDITY_API __declspec(dllexport)
#else
#define RIGIDITY_API __attribute__((visibility("default")))
#endif

typedef struct rigidity_graph rigidity_graph;

enum rigidity_status {
  RIGIDITY_OK = 0,
  RIGIDITY_EINVAL = 1,     /* bad argument or violated precondition */
  RIGIDITY_EPARSE = 2,     /* malformed file or JSON */
  RIGIDITY_EIO = 3,        /* file system failure */
  RIGIDITY_EHYPOTHESIS = 4,/* pipeline hypothesis not satisfied */
  RIGIDITY_ECAP = 5,       /* brute-force size guard tripped */
  RIGIDITY_EINTERNAL = 6
};

RIGIDITY_API const char* rigidity_version(void);

/* Thread-local message for the most recent failure on this thread. */
RIGIDITY_API const char* rigidity_last_error(void);

/* Free any string returned through a char** out-parameter. */
RIGIDITY_API void rigidity_free_string(char* s);

/* ---- graphs ---- */

/* Edges as parallel arrays us[i], vs[i]; rejects self-loops/duplicates. */
RIGIDITY_API int rigidity_graph_create(int n, const int* us, const int* vs,
                                       int edge_count, rigidity_graph** out);
/* EdgeList text file: '#' comments, "n m" header, then "u v" lines. */
RIGIDITY_API int rigidity_graph_read(const char* path, rigidity_graph** out);
RIGIDITY_API int rigidity_graph_write(const rigidity_graph* g,
                                      const char* path);
RIGIDITY_API int rigidity_graph_vertex_count(const rigidity_graph* g);
RIGIDITY_API int rigidity_graph_edge_count(const rigidity_graph* g);
RIGIDITY_API void rigidity_graph_free(rigidity_graph* g);

/* ---- decisions and certificates (JSON out) ---- */

/* Randomized generic d-rigidity verdict:
 * {"d","rank","target","rigid","trials","seed","error_bound"}.  */
RIGIDITY_API int rigidity_check(const rigidity_graph* g, int d,
                                unsigned long long seed, int trials,
                                char** json_out);

/* spec_json: {"kind":"strong"|"generalized"|"double", "d":..., "seed":...,
 * "blocks":[[...],...], ...kind-specific fields...}. Returns a certifier
 * verdict with a replayable witness. */
RIGIDITY_API int rigidity_certify(const rigidity_graph* g,
                                  const char* spec_json, char** json_out);

/* config_json: {"blocks":[[...],...] or "m":..., "k":..., "eta":"9/10",
 * "seed":..., "trials":...}. Returns the connector trace. */
RIGIDITY_API int rigidity_connector(const rigidity_graph* g,
                                    const char* config_json, char** json_out);

/* config_json: {"experiment":"threshold"|"giant"|"regular"|"codegree", ...}.
 * Returns the CSV table. */
RIGIDITY_API int rigidity_experiment(const char* config_json, char** csv_out);

/* config_json: {"x":"col", "y":["col",...]}. Returns the SVG document. */
RIGIDITY_API int rigidity_plot(const char* csv_text, const char* config_json,
                               char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* RIGIDITY_H */
