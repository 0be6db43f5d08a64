/* C interface to the Andreev spectrum library.
 *
 * All functions return an abdg_status; results go through out parameters.
 * On a non-OK status the out parameters are untouched (exceptions: the
 * buffer fills noted below, and the resonance solvers, which report their
 * best iterate even on ABDG_NO_CONVERGENCE).  A thread-local message is
 * available from abdg_last_error().  Handles are opaque and must be
 * released with their destroy function.  A profile handle is immutable
 * and can be shared across threads; every solve call is reentrant.
 */
#ifndef ANDREEV_H
#define ANDREEV_H

#include <stddef.h>

#if defined(_WIN32)
#define ABDG_API __declspec(dllexport)
#else
#define ABDG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abdg_status {
    ABDG_OK = 0,
    ABDG_INVALID_ARGUMENT = 1, /* bad parameter or malformed handle */
    ABDG_DOMAIN_ERROR = 2,     /* input outside the supported domain */
    ABDG_NO_CONVERGENCE = 3,   /* iteration failed to reach tolerance */
    ABDG_BUFFER_TOO_SMALL = 4  /* capacity < count; count still written */
} abdg_status;

/* Message for the last failure on the calling thread; empty string if none. */
ABDG_API const char* abdg_last_error(void);

/* ------------------------------------------------------------------ */
/* Junction profile                                                    */

typedef struct abdg_profile abdg_profile;

typedef enum abdg_ramp {
    ABDG_RAMP_QUINTIC = 0, /* C^2 smoothstep ramp */
    ABDG_RAMP_LINEAR = 1
} abdg_ramp;

/* delta0 > 0, mu0 > delta0, 0 < x1 < (x1+x2)/2 < x2.  phi is the total
 * phase bias; the pair potential carries exp(+i phi/2) for x > 0 and
 * exp(-i phi/2) for x < 0. */
ABDG_API abdg_status abdg_profile_create(double delta0, double mu0, double phi,
                                         double x1, double x2,
                                         double lead_half_length,
                                         abdg_ramp ramp, abdg_profile** out);
ABDG_API void abdg_profile_destroy(abdg_profile* p);

/* Pointwise profile data; any of the out pointers may be NULL. */
ABDG_API abdg_status abdg_profile_eval(const abdg_profile* p, double x,
                                       double* delta, double* mu,
                                       double* phase);

/* ------------------------------------------------------------------ */
/* Classical geometry of one in-gap energy                             */

typedef struct abdg_geometry {
    double energy;
    double x0;     /* turning point, Delta(x0) = energy */
    double xi0;    /* sqrt(mu(x0)) */
    double alpha;  /* gap slope at the turning point */
    double beta;   /* sqrt(alpha) * (2 xi0)^(-3/2) */
    double action_plus;  /* S+(E) over the classically allowed region */
    double action_minus; /* S-(E) */
    double barrier_finite;    /* tunneling exponent Theta(E), ramp part */
    double barrier_tail_rate; /* exterior decay rate per unit length */
    double quad_error;        /* worst quadrature error estimate */
    int quad_converged;
} abdg_geometry;

ABDG_API abdg_status abdg_classical_geometry(const abdg_profile* p,
                                             double energy, double tol_root,
                                             double tol_quad,
                                             abdg_geometry* out);

/* ------------------------------------------------------------------ */
/* Parabolic cylinder function D_nu(z)                                 */

/* Power-series evaluation, domain |z| <= 30, |nu| <= 30 (DOMAIN_ERROR
 * outside).  precision_loss is set when series cancellation costs more
 * than about six digits. */
ABDG_API abdg_status abdg_weber_d(double nu, double z_re, double z_im,
                                  double* out_re, double* out_im,
                                  int* precision_loss);
ABDG_API abdg_status abdg_weber_d_prime(double nu, double z_re, double z_im,
                                        double* out_re, double* out_im,
                                        int* precision_loss);

/* Effective Weber index of a level: nu = E^2 / (4 xi0 alpha h) with the
 * geometry taken at that energy. */
ABDG_API abdg_status abdg_weber_index(const abdg_profile* p, double energy,
                                      double h, double* nu);

/* ------------------------------------------------------------------ */
/* Level sets                                                          */

typedef struct abdg_level {
    int k;           /* quantization integer */
    double energy;
    int branch_sign; /* +1 / -1 phase family */
    double residual; /* root residual of the quantization condition */
} abdg_level;

/* Quantization with the hard-wall phase g(E) = 2 L (sqrt(mu0+E) - sqrt(mu0-E)).
 * Writes min(count, capacity) levels, ascending in energy; *count always
 * receives the full number, and BUFFER_TOO_SMALL is returned when it
 * exceeds capacity. */
ABDG_API abdg_status abdg_hard_wall_levels(double delta0, double mu0,
                                           double phi, double length, double h,
                                           double window_lo, double window_hi,
                                           abdg_level* buf, size_t capacity,
                                           size_t* count);

/* Quantization with the semiclassical phase S+(E) - S-(E). */
ABDG_API abdg_status abdg_semiclassical_levels(const abdg_profile* p, double h,
                                               double window_lo,
                                               double window_hi,
                                               abdg_level* buf,
                                               size_t capacity, size_t* count);

/* Phase dispersion dE_k/dphi of every level in the window (centered
 * difference).  tracked[i] = 0 when the level could not be followed
 * unambiguously.  Arrays are parallel to buf. */
ABDG_API abdg_status abdg_supercurrent(const abdg_profile* p, double h,
                                       double window_lo, double window_hi,
                                       abdg_level* buf, double* dE_dphi,
                                       int* tracked, size_t capacity,
                                       size_t* count);

typedef struct abdg_width {
    double energy;
    double theta;          /* barrier exponent Theta(E) */
    double h_prime;        /* alpha * h */
    double bare_exponent;  /* -2 Theta / h_prime */
    double prefactor;      /* local level spacing / 2 pi */
    double gamma_estimate; /* prefactor * exp(bare_exponent) */
} abdg_width;

ABDG_API abdg_status abdg_width_estimate(const abdg_profile* p, double energy,
                                         double h, abdg_width* out);

/* ------------------------------------------------------------------ */
/* Direct (finite-difference) solvers                                  */

typedef struct abdg_bound_state {
    double energy;
    double residual;           /* ||Mv - Ev|| / ||v|| */
    double boundary_amplitude; /* outermost |v| over max |v| */
} abdg_bound_state;

/* Hermitian eigenvalues inside the window on the box [-X, X] with N grid
 * cells (N >= 500, X > x2).  Buffer protocol as in abdg_hard_wall_levels. */
ABDG_API abdg_status abdg_bound_states(const abdg_profile* p, double h,
                                       double X, int N, double window_lo,
                                       double window_hi,
                                       abdg_bound_state* buf, size_t capacity,
                                       size_t* count);

typedef struct abdg_resonance {
    double energy_re;
    double energy_im;
    double gamma;      /* max(-2 Im E, 0) */
    double theta_used;
    double stability;  /* eigenvalue displacement under theta + 0.05 */
    double residual;
    int escaped;       /* landed farther than level_spacing from the seed */
    int below_floor;   /* raw width below the 1e-10 solver floor */
    int converged;
} abdg_resonance;

/* Complex-scaling resonance seeded at a real level.  theta in [0.05, 0.3];
 * scale_start in [x2, X) or negative for the default (x2).  richardson != 0
 * runs grids (N, 2N) and extrapolates the O(dx^2) stencil error away.
 * with_stability != 0 re-solves at theta + 0.05 to fill the stability
 * field (doubles the cost). */
ABDG_API abdg_status abdg_resonance_cs(const abdg_profile* p, double h,
                                       double X, int N, double theta,
                                       double scale_start, double seed,
                                       double level_spacing,
                                       int with_stability, int richardson,
                                       abdg_resonance* out);

/* Shooting resonance from a complex seed: decaying characteristic modes in
 * the banks, adaptive integration to x = 0, Newton on the 4x4 matching
 * determinant. */
ABDG_API abdg_status abdg_resonance_shooting(const abdg_profile* p, double h,
                                             double seed_re, double seed_im,
                                             abdg_resonance* out);

#ifdef __cplusplus
}
#endif

#endif /* ANDREEV_H */
