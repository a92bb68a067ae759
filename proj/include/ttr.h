/* C interface to the tau-tilting engine.
 *
 * All functions return a ttr_status. On failure, ttr_last_error() gives a
 * message for the calling thread. Output strings are heap-allocated and must
 * be released with ttr_string_free(); handles with their _free function.
 */
#ifndef TTR_H
#define TTR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ttr_status {
    TTR_OK = 0,
    TTR_ERR_INPUT = 1,    /* parse / validation / bad argument */
    TTR_ERR_CAP = 2,      /* node cap reached; partial result may exist */
    TTR_ERR_INTERNAL = 3, /* internal invariant violation */
} ttr_status;

typedef struct ttr_algebra ttr_algebra;
typedef struct ttr_graph ttr_graph;
typedef struct ttr_reduction ttr_reduction;

const char* ttr_last_error(void);
void ttr_string_free(char* s);

/* Build a bound quiver algebra from its text description. field_override = 0
 * keeps the prime given in the text (default 101). */
ttr_status ttr_algebra_create(const char* text, uint32_t field_override, ttr_algebra** out);
void ttr_algebra_free(ttr_algebra* a);

/* Human-readable summary: dimension, Cartan matrix, projective/injective dims. */
ttr_status ttr_algebra_info(const ttr_algebra* a, char** out);

/* The effective field prime of the built algebra. */
uint32_t ttr_algebra_prime(const ttr_algebra* a);

/* dims and arrow matrices of tau(M). `module` is a shorthand (P1, S2+I3, ...),
 * a .rep file path, or a g-vector "(g1,...,gn)". */
ttr_status ttr_tau_text(const ttr_algebra* a, const char* module, int cap, uint64_t seed,
                        char** out);

ttr_status ttr_enumerate(const ttr_algebra* a, int cap, uint64_t seed, ttr_graph** out);
ttr_status ttr_freeze(const ttr_algebra* a, const char* module, int cap, uint64_t seed,
                      ttr_graph** out);
void ttr_graph_free(ttr_graph* g);

int ttr_graph_node_count(const ttr_graph* g);
int ttr_graph_arrow_count(const ttr_graph* g);
int ttr_graph_complete(const ttr_graph* g);
ttr_status ttr_graph_records(const ttr_graph* g, char** out);
ttr_status ttr_graph_dot(const ttr_graph* g, char** out);
ttr_status ttr_graph_serialize(const ttr_graph* g, char** out);
ttr_status ttr_graph_deserialize(const ttr_algebra* a, const char* text, uint64_t seed,
                                 ttr_graph** out);

/* Cache file name for (algebra text, field prime). */
ttr_status ttr_cache_name(const char* alg_text, uint32_t p, char** out);

ttr_status ttr_reduce(const ttr_algebra* a, const char* module, int cap, uint64_t seed,
                      ttr_reduction** out);
void ttr_reduction_free(ttr_reduction* r);
int ttr_reduction_interval_size(const ttr_reduction* r);
int ttr_reduction_dim_c(const ttr_reduction* r);
ttr_status ttr_reduction_records(const ttr_reduction* r, char** out);
ttr_status ttr_reduction_dot(const ttr_reduction* r, char** out);
/* Compare against a candidate algebra text; flags are written as 0/1. */
ttr_status ttr_reduction_verify(const ttr_reduction* r, const char* c_text, int cap,
                                uint64_t seed, int* poset_iso, int* count_match,
                                int* dim_match);

/* Run the invariant suite on a full enumeration; returns one "name=bool" line
 * per check. all_ok is written as 0/1. */
ttr_status ttr_check(const ttr_algebra* a, int cap, uint64_t seed, char** out, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* TTR_H */
