#ifndef FFIBENCH_C_ARRAY_H
#define FFIBENCH_C_ARRAY_H

/*
 * Opaque array proto-object. array_init copies the input once; the
 * array_mean/array_stddev methods then work on that private copy.
 *
 * array_init returns NULL when given a NULL pointer with n > 0.
 * array_free(NULL) is a no-op. Using a handle after array_free, or freeing
 * it twice, is undefined behavior.
 */

#include <stdint.h>
#include <stdlib.h>

#ifdef __cplusplus
extern "C" {
#endif

struct Array;

struct Array *array_init(double *values, uint64_t n);
double array_mean(struct Array *arr);
double array_stddev(struct Array *arr);
void array_free(struct Array *arr);

#ifdef __cplusplus
}
#endif

#endif /* FFIBENCH_C_ARRAY_H */
