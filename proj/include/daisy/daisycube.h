/*
 * daisycube.h - C interface to the daisy cube embedding library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching dc_*_free function. Every fallible call returns a dc_status; on
 * failure dc_last_error() describes the problem (per thread, valid until the
 * next call on that thread). Paths accept "-" for stdin/stdout.
 */
#ifndef DAISYCUBE_H
#define DAISYCUBE_H

#include <stddef.h>
#include <stdint.h>

#if defined(DAISYCUBE_BUILDING)
#define DC_API __attribute__((visibility("default")))
#else
#define DC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes. */
typedef enum dc_status {
  DC_OK = 0,
  DC_ERR_USAGE = 2,      /* invalid argument */
  DC_ERR_CAP = 3,        /* size cap exceeded */
  DC_ERR_FORMAT = 4,     /* malformed or inconsistent input files, I/O failure */
  DC_ERR_NOT_DAISY = 5,  /* not a daisy cube or algorithm invariant violated */
  DC_ERR_VERIFY = 6,     /* a verification check failed */
  DC_ERR_INTERNAL = 7
} dc_status;

typedef enum dc_verify_mode {
  DC_VERIFY_ISOMETRIC = 0,
  DC_VERIFY_PROPER = 1,
  DC_VERIFY_AUDIT = 2
} dc_verify_mode;

typedef struct dc_graph dc_graph;
typedef struct dc_labels dc_labels;
typedef struct dc_words dc_words;
typedef struct dc_report dc_report;

DC_API const char* dc_last_error(void);
DC_API const char* dc_status_name(dc_status status);

/* graphs */
DC_API dc_status dc_graph_read(const char* path, dc_graph** out);
DC_API dc_status dc_graph_write(const dc_graph* graph, const char* path);
DC_API size_t dc_graph_vertex_count(const dc_graph* graph);
DC_API size_t dc_graph_edge_count(const dc_graph* graph);
DC_API size_t dc_graph_max_degree(const dc_graph* graph);
DC_API void dc_graph_free(dc_graph* graph);

/* labels (vertex -> word) */
DC_API dc_status dc_labels_read(const char* path, dc_labels** out);
DC_API dc_status dc_labels_write(const dc_labels* labels, const char* path);
DC_API size_t dc_labels_count(const dc_labels* labels);
DC_API size_t dc_labels_width(const dc_labels* labels);
/* Copies the label of `vertex` as a NUL-terminated '0'/'1' string; `buffer`
 * must hold width + 1 bytes. */
DC_API dc_status dc_labels_get(const dc_labels* labels, size_t vertex, char* buffer, size_t buffer_size);
/* 1 when both label sets are equal as sets of words. */
DC_API int dc_labels_same_set(const dc_labels* a, const dc_labels* b);
DC_API void dc_labels_free(dc_labels* labels);

/* generator sets */
DC_API dc_status dc_words_read(const char* path, dc_words** out);
/* name: hypercube, qminus, fibonacci, lucas or random-antichain. */
DC_API dc_status dc_words_family(const char* name, size_t h, uint64_t seed, dc_words** out);
DC_API size_t dc_words_width(const dc_words* words);
DC_API void dc_words_free(dc_words* words);

/* construction; cap bounds the vertex count (0 selects the default 2^22) */
DC_API dc_status dc_build(const dc_words* words, size_t cap, dc_graph** graph_out, dc_labels** labels_out);
/* Renumbers vertices and shuffles edges; seed 0 is the identity. */
DC_API dc_status dc_strip(const dc_graph* graph, const dc_labels* labels, uint64_t seed, dc_graph** graph_out,
                          dc_labels** truth_out);

/* embeddings */
DC_API dc_status dc_embed_isometric(const dc_graph* graph, dc_labels** out, size_t* root);
/* `shift` receives the XOR word as a string and must hold
 * max(1, dc_graph_max_degree) + 1 bytes; it may be NULL. */
DC_API dc_status dc_proper_embed(const dc_graph* graph, dc_labels** out, size_t* minimal_vertex, char* shift,
                                 size_t shift_size);
/* cap bounds the vertex count (0 selects the default 2^16) */
DC_API dc_status dc_baseline_proper(const dc_graph* graph, size_t cap, dc_labels** out, size_t* candidates_examined);

/* verification; returns DC_OK with a report even when checks fail, and
 * cap = 0 selects the default of 4096 vertices for the brute-force modes */
DC_API dc_status dc_verify(const dc_graph* graph, const dc_labels* labels, dc_verify_mode mode, size_t cap,
                           dc_report** out);
DC_API int dc_report_passed(const dc_report* report);
/* "PASS <name>" / "FAIL <name> witness=<...>" lines; owned by the report. */
DC_API const char* dc_report_text(const dc_report* report);
DC_API void dc_report_free(dc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DAISYCUBE_H */
