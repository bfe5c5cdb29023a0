#ifndef HRG_H
#define HRG_H

/*
 * C interface to the higher-rank graph toolkit. All functions return a
 * status code; outputs are written through pointers only on HRG_OK.
 * Strings returned through char** are heap-allocated JSON documents and
 * must be released with hrg_string_free. Handles are released with their
 * matching _free function; an action keeps its skeleton alive internally,
 * so the two may be freed in either order.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hrg_skeleton hrg_skeleton;
typedef struct hrg_action hrg_action;

typedef enum hrg_status {
    HRG_OK = 0,
    HRG_ERR_PARSE = 1,        /* malformed input document */
    HRG_ERR_INVALID = 2,      /* skeleton or action fails validation */
    HRG_ERR_PRECONDITION = 3, /* hypothesis of the computation fails */
    HRG_ERR_BAD_ARGUMENT = 4, /* unknown ids, out-of-range parameters */
    HRG_ERR_INTERNAL = 5
} hrg_status;

const char* hrg_version(void);
/* Message for the most recent failure on the calling thread. */
const char* hrg_last_error(void);
void hrg_string_free(char* s);

/* ---- skeletons ---- */
hrg_status hrg_skeleton_parse(const char* json, hrg_skeleton** out);
void hrg_skeleton_free(hrg_skeleton* sk);
hrg_status hrg_skeleton_to_json(const hrg_skeleton* sk, char** out);
/* *ok = 1 iff permissible; report carries violations and structural flags. */
hrg_status hrg_skeleton_validate(const hrg_skeleton* sk, int* ok, char** report);

/* ---- actions ---- */
hrg_status hrg_action_parse(const hrg_skeleton* sk, const char* json, hrg_action** out);
void hrg_action_free(hrg_action* a);
hrg_status hrg_action_to_json(const hrg_action* a, char** out);
hrg_status hrg_action_validate(const hrg_action* a, int* ok, char** report);

/* ---- paths ---- */
/* Paths with range `vertex` and the given degree (length = k of the skeleton). */
hrg_status hrg_paths(const hrg_skeleton* sk, const char* vertex, const int* degree, int k,
                     char** out);
/* mu and nu are JSON values: an array of edge ids, or a vertex id string
 * for the degree-zero path. Result lists minimal common extensions. */
hrg_status hrg_mce(const hrg_skeleton* sk, const char* mu, const char* nu, char** out);

/* ---- constructions ---- */
hrg_status hrg_crossed_product(const hrg_skeleton* sk, const hrg_action* a, hrg_skeleton** out);
/* zl_colors: the n colors acting as Z^n directions of a crossed product. */
hrg_status hrg_recognize(const hrg_skeleton* sk, const int* zl_colors, int n,
                         hrg_skeleton** base, hrg_action** action);
hrg_status hrg_skew_product(const hrg_skeleton* sk, const char* cocycle_json, int window,
                            hrg_skeleton** out);
hrg_status hrg_takai_check(const hrg_skeleton* sk, const hrg_action* a, int window, int* holds,
                           char** report);

/* ---- dynamics ---- */
hrg_status hrg_simplicity(const hrg_skeleton* sk, const hrg_action* a, int pair_bound, int depth,
                          char** report);

/* ---- K-theory ---- */
hrg_status hrg_ktheory_graph(const hrg_skeleton* sk, char** out);
/* method: "pv", "orbits" or "both"; "both" verifies agreement. */
hrg_status hrg_ktheory_crossed(const hrg_skeleton* sk, const hrg_action* a, const char* method,
                               char** out);

/* ---- gallery ---- */
/* Known names and their integer parameters, as JSON. */
hrg_status hrg_gallery_names(char** out);
/* Instantiates a named example; *action is set to NULL when the instance
 * carries no action. rank2_bratteli takes params = [c_1..c_n, levels]. */
hrg_status hrg_gallery(const char* name, const int* params, int nparams, hrg_skeleton** sk,
                       hrg_action** action);

#ifdef __cplusplus
}
#endif

#endif
