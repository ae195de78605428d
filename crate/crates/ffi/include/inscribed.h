#ifndef INSCRIBED_H
#define INSCRIBED_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum InscStatus {
  INSC_STATUS_OK = 0,
  INSC_STATUS_NULL_POINTER = 1,
  INSC_STATUS_OUT_OF_RANGE = 2,
  INSC_STATUS_OUTSIDE_REAL_BRANCH = 3,
  INSC_STATUS_DEGENERATE = 4,
  INSC_STATUS_BUDGET_EXHAUSTED = 5,
  INSC_STATUS_INVALID_PARAMETER = 6,
  INSC_STATUS_PANIC = 7,
} InscStatus;

/**
 * Opaque simulation engine.
 */
typedef struct InscSimulator InscSimulator;

/**
 * A quadrature value with its error estimate.
 */
typedef struct InscQuadResult {
  double value;
  double abs_error_estimate;
  uint64_t evaluations;
} InscQuadResult;

/**
 * A Monte Carlo estimate.
 */
typedef struct InscEstimate {
  double p_hat;
  double std_err;
  uint64_t trials;
  uint64_t seed;
} InscEstimate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null; do not free.
 */
const char *insc_status_message(enum InscStatus status);

/**
 * Real dilogarithm, `x <= 1`.
 */
enum InscStatus insc_li2(double x, double *out);

/**
 * Dilogarithm by quadrature of its integral representation.
 */
enum InscStatus insc_li2_integral_oracle(double x, double tol, struct InscQuadResult *out);

/**
 * Probability that a random inscribed triangle contains a point at distance `r`.
 */
enum InscStatus insc_p_contain(double r, double *out);

/**
 * Radial CDF of the crossing point of two intersecting random chords.
 */
enum InscStatus insc_chord_cdf(double r, double *out);

double insc_three_circle_probability(void);

enum InscStatus insc_arc_difference(double r, double theta_c, double *out);

enum InscStatus insc_arc_difference_geometric(double r, double theta_c, double *out);

enum InscStatus insc_i_of_r(double r, double tol, struct InscQuadResult *out);

enum InscStatus insc_di_dr(double r, double tol, struct InscQuadResult *out);

enum InscStatus insc_p_from_integral(double r, double tol, double *out);

enum InscStatus insc_dif_square_integral(double r, double tol, struct InscQuadResult *out);

/**
 * Writes +1 if `(qx, qy)` is right of or on the chord `from → to`, −1 if left.
 */
enum InscStatus insc_side_of(double qx,
                             double qy,
                             double from_theta,
                             double to_theta,
                             int32_t *out);

/**
 * Writes +1 for a clockwise triangle, −1 for counterclockwise.
 */
enum InscStatus insc_orientation(double a, double b, double c, int32_t *out);

enum InscStatus insc_contains(double a, double b, double c, double x, double y, bool *out);

/**
 * Creates a simulator with `workers` threads (0: one per core).
 */
enum InscStatus insc_simulator_new(size_t workers, struct InscSimulator **out);

/**
 * Releases a simulator. Null is ignored.
 *
 * # Safety
 *
 * `sim` must come from [`insc_simulator_new`] and not be used afterwards.
 */
void insc_simulator_free(struct InscSimulator *sim);

/**
 * # Safety
 *
 * `sim` must be a live simulator handle.
 */
enum InscStatus insc_simulator_triangle(const struct InscSimulator *sim,
                                        double r,
                                        uint64_t trials,
                                        uint64_t seed,
                                        struct InscEstimate *out);

/**
 * Fills `out[0..n]` with one estimate per radius and `*attempts` with the
 * number of chord pairs drawn.
 *
 * # Safety
 *
 * `sim` must be a live simulator handle; `radii` and `out` must each point to
 * `n` elements.
 */
enum InscStatus insc_simulator_chords(const struct InscSimulator *sim,
                                      const double *radii,
                                      size_t n,
                                      uint64_t trials,
                                      uint64_t seed,
                                      struct InscEstimate *out,
                                      uint64_t *attempts);

/**
 * # Safety
 *
 * `sim` must be a live simulator handle.
 */
enum InscStatus insc_simulator_three_circles(const struct InscSimulator *sim,
                                             uint64_t trials,
                                             uint64_t seed,
                                             struct InscEstimate *out_ab,
                                             struct InscEstimate *out_bc);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INSCRIBED_H */
