#ifndef TRILENGTH_H
#define TRILENGTH_H

/* C interface to the three-length drawing engine.
 *
 * Conventions:
 *   - Every fallible call returns tl_status; TL_OK means the outputs are
 *     valid.  On any other status, tl_last_error() on the same thread holds
 *     a human-readable message until the next failing call.
 *   - Objects returned through tl_graph** / tl_drawing** are owned by the
 *     caller and released with the matching *_free function.
 *   - Strings returned through char** are NUL-terminated, heap-allocated,
 *     and released with tl_string_free.  Optional string outputs may be
 *     passed as NULL.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tl_status {
    TL_OK = 0,
    TL_ERR_ARGUMENT = 1, /* null pointer or malformed direct argument     */
    TL_ERR_PARSE = 2,    /* unreadable graph text, JSON, or address       */
    TL_ERR_DOMAIN = 3,   /* input outside the supported class             */
    TL_ERR_LIMIT = 4,    /* request exceeds a documented size cap         */
    TL_ERR_VERIFY = 5,   /* a drawing or battery failed certification    */
    TL_ERR_INTERNAL = 6  /* invariant violation; the result is unusable  */
} tl_status;

/* Message for the most recent failure on the calling thread (never NULL;
 * empty if nothing failed yet). */
const char* tl_last_error(void);

/* Library version as "major.minor.patch". */
const char* tl_version(void);

void tl_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Graphs                                                              */

typedef struct tl_graph tl_graph;

/* Parses the plain edge-list text format (one "u v" pair per line, `#`
 * comments, optional "n=<count>" header) or, when the text starts with
 * '{', the JSON form {"n": int, "edges": [[u, v], ...]}. */
tl_status tl_graph_parse(const char* text, tl_graph** out);
void tl_graph_free(tl_graph* g);

int tl_graph_vertex_count(const tl_graph* g);
int tl_graph_edge_count(const tl_graph* g);

/* Decides outerplanarity.  *outerplanar becomes 0 or 1.  When rejected and
 * reason_out is non-NULL, *reason_out receives the explanation; when
 * accepted it is set to NULL. */
tl_status tl_check_outerplanar(const tl_graph* g, int* outerplanar,
                               char** reason_out);

/* ------------------------------------------------------------------ */
/* Drawings                                                            */

typedef enum tl_params_mode {
    TL_PARAMS_SEED = 0,    /* sample angles from the seed                */
    TL_PARAMS_LENGTHS = 1, /* reproduce three explicit edge lengths      */
    TL_PARAMS_ANGLES = 2   /* explicit angles in (0, 2*pi), scale 1      */
} tl_params_mode;

typedef struct tl_draw_options {
    tl_params_mode mode;
    uint64_t seed;     /* TL_PARAMS_SEED */
    double lengths[3]; /* TL_PARAMS_LENGTHS: all positive */
    double theta0;     /* TL_PARAMS_ANGLES */
    double theta1;
    double scale;      /* TL_PARAMS_ANGLES: positive unit length */
    double tolerance;  /* relative length tolerance; <= 0 selects 1e-9 */
} tl_draw_options;

/* Fills in the defaults: seed mode, seed 0, scale 1, tolerance 1e-9. */
void tl_draw_options_init(tl_draw_options* opts);

typedef struct tl_drawing tl_drawing;

/* Draws an outerplanar graph with every edge in one of three length
 * classes, verified before it is returned.  Non-outerplanar input yields
 * TL_ERR_DOMAIN. */
tl_status tl_draw_graph(const tl_graph* g, const tl_draw_options* opts,
                        tl_drawing** out);

/* Draws the depth-bounded portion of the infinite rhombus tree
 * (0 <= depth <= 10). */
tl_status tl_draw_tstar(int depth, const tl_draw_options* opts,
                        tl_drawing** out);

int tl_drawing_vertex_count(const tl_drawing* d);
int tl_drawing_edge_count(const tl_drawing* d);
tl_status tl_drawing_vertex(const tl_drawing* d, int index, double* x,
                            double* y);
/* original is 0 for edges inserted on the way to a triangulation. */
tl_status tl_drawing_edge(const tl_drawing* d, int index, int* u, int* v,
                          int* length_class, int* original);
/* The unit length and the two diagonal lengths, in class order. */
tl_status tl_drawing_class_lengths(const tl_drawing* d, double out[3]);
tl_status tl_drawing_params(const tl_drawing* d, double* theta0,
                            double* theta1, double* scale);
/* Certification numbers the drawing was accepted with. */
tl_status tl_drawing_report(const tl_drawing* d, double* max_rel_deviation,
                            double* min_pairwise_distance,
                            int* distinct_class_lengths);
/* Seed that produced the accepted drawing (seed mode; otherwise 0) and the
 * number of sampling attempts. */
tl_status tl_drawing_provenance(const tl_drawing* d, uint64_t* seed_used,
                                int* attempts);
tl_status tl_drawing_json(const tl_drawing* d, char** out);
tl_status tl_drawing_svg(const tl_drawing* d, char** out);
void tl_drawing_free(tl_drawing* d);

/* ------------------------------------------------------------------ */
/* Addresses and run-length encodings                                  */

/* Describes the tree node at a comma-separated address over the letters
 * F, L, R ("" is the root).  The JSON object lists the address, the
 * run-length encoding (q, rho, m), whether it is proper, the node's turn
 * parity ty, and the exact base-corner position polynomial as
 * [e0, e1, coeff] triples. */
tl_status tl_encode_address(const char* address, char** json_out);

/* Inverse direction: q (length m+1) and rho (length m, entries 0 or 1)
 * describe a node; returns the same JSON object, including the
 * reconstructed address.  Pass m < 0 to let it default to rho_len; an
 * explicit m that contradicts the array lengths is a parse error. */
tl_status tl_decode_qr(const uint32_t* q, int q_len, const uint8_t* rho,
                       int rho_len, int m, char** json_out);

/* ------------------------------------------------------------------ */
/* Self test                                                           */

/* Runs the built-in consistency battery.  max_n bounds the graph sizes of
 * the randomised sweeps and depth the address enumerations; pass 0 or a
 * negative value for the defaults (6 and 8).  *passed (optional) becomes 0
 * or 1; report_out (optional) receives the per-item text.  Returns TL_OK
 * when every item passes, TL_ERR_VERIFY otherwise (outputs are filled
 * either way). */
tl_status tl_selftest(int max_n, int depth, int* passed, char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRILENGTH_H */
