#ifndef FFIBENCH_C_STATS_H
#define FFIBENCH_C_STATS_H

/*
 * Flat statistics exports. Every call copies `n` doubles starting at
 * `values` before computing, so the caller keeps ownership of its storage.
 *
 * `values` must point to at least `n` readable doubles; violating that is
 * undefined behavior and is not detected. n == 0 returns NaN.
 */

#include <stdint.h>
#include <stdlib.h>

#ifdef __cplusplus
extern "C" {
#endif

double mean(double *values, uint64_t n);
double stddev(double *values, uint64_t n);

#ifdef __cplusplus
}
#endif

#endif /* FFIBENCH_C_STATS_H */
