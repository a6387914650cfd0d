/* C interface to the KTB workbench. Handles are opaque; strings returned through
 * char** out-parameters are owned by the caller and released with ktb_string_free.
 * On error the functions return a nonzero ktb_status and ktb_last_error() describes
 * the failure on the calling thread. */
#ifndef KTB_KTB_H
#define KTB_KTB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KTB_API __declspec(dllexport)
#else
#define KTB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ktb_frame ktb_frame;
typedef struct ktb_pipeline ktb_pipeline;

typedef enum {
    KTB_OK = 0,
    KTB_ERR_INVALID_ARGUMENT = 1,
    KTB_ERR_PARSE = 2,
    KTB_ERR_OUT_OF_RANGE = 3,
    KTB_ERR_WIDTH_MISMATCH = 4,
    KTB_ERR_TIER_EXCEEDED = 5,
    KTB_ERR_NOT_APPLICABLE = 6,
    KTB_ERR_BUDGET_EXCEEDED = 7,
    KTB_ERR_INTERNAL = 8
} ktb_status;

typedef enum { KTB_PASS = 0, KTB_FAIL = 1, KTB_NOT_APPLICABLE = 2 } ktb_verdict;

typedef enum { KTB_FORMAT_JSON = 0, KTB_FORMAT_GRAPH6 = 1, KTB_FORMAT_DOT = 2, KTB_FORMAT_TEXT = 3 } ktb_format;

typedef enum { KTB_MODE_AUTO = 0, KTB_MODE_EXHAUSTIVE = 1, KTB_MODE_SAMPLED = 2 } ktb_mode;

KTB_API const char* ktb_version(void);
KTB_API const char* ktb_last_error(void);
KTB_API const char* ktb_status_name(ktb_status s);
KTB_API void ktb_string_free(char* s);

KTB_API ktb_status ktb_frame_from_graph6(const char* graph6, ktb_frame** out);
/* `pairs` holds edge_count (u, v) pairs laid out flat. */
KTB_API ktb_status ktb_frame_from_edges(size_t n, const size_t* pairs, size_t edge_count, ktb_frame** out);
/* Truncation from "N=2,4;p=6". */
KTB_API ktb_status ktb_frame_family(const char* spec, ktb_frame** out);
/* "g1" or "g2". */
KTB_API ktb_status ktb_frame_preset(const char* name, ktb_frame** out);
KTB_API void ktb_frame_free(ktb_frame* f);
KTB_API size_t ktb_frame_vertex_count(const ktb_frame* f);
/* JSON info document, graph6 line, DOT graph or adjacency text. */
KTB_API ktb_status ktb_frame_export(const ktb_frame* f, ktb_format format, char** out);

/* Cover verdict as JSON {status, n, witness?, blocks?, quotient?, reason?}. */
KTB_API ktb_status ktb_check_cover(const ktb_frame* f, ktb_verdict* verdict, char** json);
/* Stable partitions with min_blocks..max_blocks blocks (0 = no bound) and their
 * quotient classes, as JSON. */
KTB_API ktb_status ktb_quotients(const ktb_frame* f, size_t min_blocks, size_t max_blocks, char** json);
/* Evaluates a term. `bindings` is "x=D;y={d, c1}" (names resolve as family sets when
 * the frame is a truncation); on a truncation an unbound x defaults to D. */
KTB_API ktb_status ktb_term_eval(const ktb_frame* f, const char* term, const char* bindings, ktb_format format,
                                 char** out);

typedef struct {
    ktb_mode mode;
    uint64_t seed;
    uint64_t samples;
    unsigned jobs;
    int include_timing;
    /* Second family for "diff", e.g. "N=2" or "2,4"; NULL when unused. */
    const char* against;
} ktb_verify_options;

KTB_API void ktb_verify_options_init(ktb_verify_options* opts);
/* `lemma` NULL or "all" runs every applicable lemma. The verdict ignores exploratory
 * lemmas when running the whole suite. */
KTB_API ktb_status ktb_verify_frame(const ktb_frame* f, const char* lemma, const ktb_verify_options* opts,
                                    ktb_verdict* verdict, char** json);
KTB_API ktb_status ktb_verify_family(const char* spec, const char* lemma, const ktb_verify_options* opts,
                                     ktb_verdict* verdict, char** json);
KTB_API ktb_status ktb_list_lemmas(char** json);

typedef void (*ktb_line_callback)(const char* line, void* user);

typedef struct {
    unsigned jobs;
    int include_timing;
} ktb_search_options;

typedef struct {
    uint64_t total;
    uint64_t pass;
    uint64_t fail;
    uint64_t na;
} ktb_search_summary;

/* Cover test over every connected graph with min_n..max_n vertices; one JSON line per graph. */
KTB_API ktb_status ktb_search(size_t min_n, size_t max_n, const ktb_search_options* opts, ktb_line_callback cb, void* user,
                              ktb_search_summary* summary);

/* Streaming cover test over graph6 lines pushed by the caller. */
KTB_API ktb_status ktb_pipeline_new(const ktb_search_options* opts, ktb_line_callback cb, void* user,
                                    ktb_pipeline** out);
KTB_API ktb_status ktb_pipeline_push(ktb_pipeline* p, const char* graph6);
KTB_API ktb_status ktb_pipeline_finish(ktb_pipeline* p, ktb_search_summary* summary);
KTB_API void ktb_pipeline_free(ktb_pipeline* p);
/* {"summary": {total, pass, fail, na}}. */
KTB_API ktb_status ktb_summary_json(const ktb_search_summary* summary, char** json);

#ifdef __cplusplus
}
#endif

#endif
